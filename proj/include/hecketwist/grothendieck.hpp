/*
  The free A-module model of the algebra: standard classes [w;lambda]'
  identified with scaled basis elements via

      omega([w;lambda]') = v^{l(w)} T_w 1_lambda,

  the convolution  omega(x * x') = (v^2-1)^r omega(x) omega(x'), and the
  simple classes  [w;lambda]  whose omega-image is
  (-v)^{-d_w} v^{l(w)} c_{w,lambda}  with  d_w = l(w) + d0.

  Also the direct-sum split H = H_D + H'_D along the support condition
  w.mu = Dbar^-1(mu) and the projections rho_J (inside H_D) and p_J
  (onto the parabolic subalgebra).
*/

#ifndef HECKETWIST_GROTHENDIECK_HPP
#define HECKETWIST_GROTHENDIECK_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hecketwist/hecke.hpp"
#include "hecketwist/klcells.hpp"

namespace hecketwist {

/*
  Finitely supported A-combination of the classes [w;lambda]', keyed by
  (w index, lambda index).  The twist generator has no preimage on this
  side: omega_inv rejects elements carrying k != 0 terms.
*/
class FKElt {
 public:
  FKElt() = default;  // context-free zero, usable as a neutral value
  explicit FKElt(const AlgebraContext& ctx) : ctx_(&ctx) {}

  const AlgebraContext* context() const { return ctx_; }
  bool is_zero() const { return coords_.empty(); }
  const std::map<std::pair<int, int>, LaurentPoly>& coords() const {
    return coords_;
  }
  const LaurentPoly& coeff(int wIdx, int lamIdx) const;

  // accumulate; zero results are erased
  void add_term(int wIdx, int lamIdx, const LaurentPoly& c);

  FKElt& operator+=(const FKElt& o);
  FKElt& operator-=(const FKElt& o);
  FKElt operator+(const FKElt& o) const;
  FKElt operator-(const FKElt& o) const;
  FKElt operator-() const;
  FKElt scaled(const LaurentPoly& c) const;
  bool operator==(const FKElt& o) const;
  bool operator!=(const FKElt& o) const { return !(*this == o); }

 private:
  const AlgebraContext* ctx_ = nullptr;
  std::map<std::pair<int, int>, LaurentPoly> coords_;
};

// the class [w;lambda]'
FKElt fk_basis(const AlgebraContext& ctx, const WeylElement& w,
               const CharacterPoint& lam);

// the A-linear bijection and its inverse; omega_inv throws
// std::invalid_argument on twisted terms
HeckeElt omega(const FKElt& x);
FKElt omega_inv(const HeckeElt& h);

// convolution, r = rank of the torus
FKElt star(const FKElt& x, const FKElt& xp);

// the simple class [w;lambda] expanded in the prime basis:
// (-v)^{-d_w} sum_{w',i} N_{i,w',w,lambda} v^i [w';lambda]'
FKElt sheaf_class(const AlgebraContext& ctx, const WeylElement& w,
                  const CharacterPoint& lam);

// true when every term satisfies w.mu = Dbar^-1(mu)
bool in_HD(const HeckeElt& h);

// h = h_D + h'_D along the support condition; first component is h_D
std::pair<HeckeElt, HeckeElt> split_HD(const HeckeElt& h);

// projection to the H_D summand
inline HeckeElt tau_tilde(const HeckeElt& h) { return split_HD(h).first; }

// on H_D: keeps the terms with w in W_J; throws NotInHD otherwise
HeckeElt rho_J(const HeckeElt& h, const std::vector<int>& J);

// T_z 1_lambda -> itself when z in W_J, else 0, landing in the
// parabolic subalgebra; defined on all of H (twist terms included)
HeckeElt p_J(const HeckeElt& h, const std::vector<int>& J);

// {"basis":"prime","d0":...,"terms":[{word,lambda,poly},...]}
std::string fk_json(const FKElt& x);

}  // namespace hecketwist

#endif
