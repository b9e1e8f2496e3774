/*
  The twisted Hecke algebra over Z[v,v^-1] attached to a root datum, a
  torsion level n, and a diagram twist.

  Elements are finite sums  T_Dbar^k T_w 1_lambda * poly  with w in W and
  lambda in ufs_n; plain algebra elements have k = 0.  The quadratic
  relation is  T_s T_s = T_1 + (v - v^-1) sum_{mu : s in W_mu} T_s 1_mu,
  and the twist generator acts by conjugation as the automorphism
  Theta: T_w 1_lambda -> T_{eps(w)} 1_{Dbar lambda}.  Twist exponents are
  reduced modulo the order d of Theta on the index set.
*/

#ifndef HECKETWIST_HECKE_HPP
#define HECKETWIST_HECKE_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hecketwist/chars.hpp"
#include "hecketwist/laurent.hpp"
#include "hecketwist/rootsys.hpp"

namespace hecketwist {

class KLTable;
class AlgebraContext;

std::unique_ptr<KLTable> make_kl_table(const AlgebraContext& ctx);

/*
  Immutable shared environment: the root datum with its twist, the
  character family ufs_n, the enumerated Weyl group with index tables, and
  the memoized per-character stabilizer data.  All products are computed
  against one context; mixing contexts raises ContextMismatch.
*/
class AlgebraContext {
 public:
  // empty dbar_perm: the coordinate permutation induced by eps
  AlgebraContext(const RootDatum& rd, long n, std::vector<int> dbar_perm = {});
  ~AlgebraContext();
  AlgebraContext(const AlgebraContext&) = delete;
  AlgebraContext& operator=(const AlgebraContext&) = delete;

  const RootDatum& datum() const { return datum_; }
  long n() const { return n_; }
  const DbarAction& dbar() const { return dbar_; }
  // order of Theta on the (w, lambda) index set
  int d() const { return d_; }
  // dimension offset of the sheaf-class normalization, default 2r + |R+|
  int d0() const { return d0_; }
  void set_d0(int d0) { d0_ = d0; }

  const std::vector<CharacterPoint>& chars() const { return chars_; }
  const std::vector<WeylElement>& W() const { return W_; }
  const WeylElement& w(int i) const { return W_[i]; }
  const CharacterPoint& lambda(int j) const { return chars_[j]; }

  // canonical indices; both accept values built from any equal datum
  int w_index(const WeylElement& w) const;
  int char_index(const CharacterPoint& lam) const;

  // index tables: s_i * w, w acting on lambda, Theta^power on each slot
  int left_mul(int i, int wIdx) const { return left_mul_[i][wIdx]; }
  int act_index(int wIdx, int lamIdx) const { return act_[wIdx][lamIdx]; }
  int eps_w(int wIdx, int power = 1) const;
  int dbar_lam(int lamIdx, int power = 1) const;
  // s_i in W_lambda, i.e. lambda vanishes on the i-th simple coroot
  bool simple_fixes(int i, int lamIdx) const { return svanish_[lamIdx][i]; }

  const LambdaData& stab(const CharacterPoint& lam) const { return stab_.get(lam); }
  const LambdaData& stab_by_index(int lamIdx) const { return stab_.get(chars_[lamIdx]); }

  KLTable& kl() const { return *kl_; }

 private:
  RootDatum datum_;
  long n_;
  DbarAction dbar_;
  int d_ = 1;
  int d0_ = 0;
  std::vector<CharacterPoint> chars_;
  std::map<CharacterPoint, int> char_index_;
  std::vector<WeylElement> W_;
  std::map<std::vector<int16_t>, int> w_index_;
  std::vector<std::vector<int>> left_mul_;
  std::vector<std::vector<int>> act_;
  std::vector<int> eps_w_once_;
  std::vector<int> dbar_lam_once_;
  std::vector<std::vector<char>> svanish_;
  mutable StabilizerTable stab_;
  std::unique_ptr<KLTable> kl_;
};

struct TermKey {
  int k;
  int w;
  int lam;
  auto operator<=>(const TermKey&) const = default;
};

class HeckeElt {
 public:
  HeckeElt() = default;  // context-free zero, usable as a neutral value
  explicit HeckeElt(const AlgebraContext& ctx) : ctx_(&ctx) {}

  const AlgebraContext* context() const { return ctx_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<TermKey, LaurentPoly>& terms() const { return terms_; }
  const LaurentPoly& coeff(int k, int wIdx, int lamIdx) const;

  // accumulate; zero results are erased
  void add_term(int k, int wIdx, int lamIdx, const LaurentPoly& c);

  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  HeckeElt operator+(const HeckeElt& o) const;
  HeckeElt operator-(const HeckeElt& o) const;
  HeckeElt operator-() const;
  HeckeElt operator*(const HeckeElt& o) const;
  HeckeElt scaled(const LaurentPoly& c) const;
  bool operator==(const HeckeElt& o) const;
  bool operator!=(const HeckeElt& o) const { return !(*this == o); }

 private:
  const AlgebraContext* ctx_ = nullptr;
  std::map<TermKey, LaurentPoly> terms_;
  friend HeckeElt mul(const HeckeElt&, const HeckeElt&);
};

// T_w 1_lambda, optionally left-multiplied by T_Dbar^k
HeckeElt basis(const AlgebraContext& ctx, const WeylElement& w,
               const CharacterPoint& lam);
HeckeElt basis(const AlgebraContext& ctx, int k, const WeylElement& w,
               const CharacterPoint& lam);
// the idempotent 1_lambda
HeckeElt idempotent(const AlgebraContext& ctx, const CharacterPoint& lam);
// the unit sum_lambda 1_lambda
HeckeElt unit(const AlgebraContext& ctx);
// the twist generator T_Dbar^k
HeckeElt twist_gen(const AlgebraContext& ctx, int k = 1);

HeckeElt mul(const HeckeElt& a, const HeckeElt& b);

// inverse of T_w = sum_lambda T_w 1_lambda, from
// T_s^-1 = T_s - (v - v^-1) sum_{mu : s in W_mu} 1_mu along a reduced word
HeckeElt invert_basis(const AlgebraContext& ctx, const WeylElement& w);

// the automorphism Theta^power: T_Dbar^k T_w 1_lambda ->
// T_Dbar^k T_{eps^power(w)} 1_{Dbar^power lambda}, coefficients unchanged
HeckeElt theta_twist(const HeckeElt& h, int power = 1);

// ring involution: v -> v^-1, T_w -> (T_{w^-1})^-1, fixing 1_lambda and T_Dbar
HeckeElt bar_involution(const HeckeElt& h);

// projection onto the parabolic subalgebra H_J: drops terms with w not in W_J
HeckeElt restrict_HJ(const HeckeElt& h, const std::vector<int>& J);

// every reduced word of w uses only letters of J
bool in_WJ(const WeylElement& w, const std::vector<int>& J);

// term grammar: [TD[^k]] [T[s1 s2 ...]] 1[(p/q,...)] [* (poly)], joined by " + "
std::string render(const HeckeElt& h);
HeckeElt parse_elt(const AlgebraContext& ctx, const std::string& text);

// JSON array of {k, word, lambda, poly}, in canonical term order
std::string json_terms(const HeckeElt& h);

}  // namespace hecketwist

#endif
