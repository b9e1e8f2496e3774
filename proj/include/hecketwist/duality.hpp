/*
  The duality involution theta, the folding operators delta_J and delta on
  the twist summand H_D, the twisted-commutator subspace with exact
  membership over Q(v), and the alternating facet-trace identity for the
  extended group acting on the coroot-lattice fan.
*/

#ifndef HECKETWIST_DUALITY_HPP
#define HECKETWIST_DUALITY_HPP

#include <string>
#include <utility>
#include <vector>

#include "hecketwist/grothendieck.hpp"
#include "hecketwist/hecke.hpp"
#include "hecketwist/laurent.hpp"

namespace hecketwist {

// algebra involution: 1_lambda fixed, T_w -> (-1)^{l(w)} (T_{w^-1})^-1,
// T_Dbar -> (-1)^{|I| - #eps-orbits on I} T_Dbar
HeckeElt theta(const HeckeElt& h);

// fold y over the minimal coset representatives W^J and project:
// rho_J(sum_{u in W^J} T_{u^-1} y T_{eps(u)}).
// Requires y in H_D (NotInHD) and eps(J) = J (NotEpsStable).
HeckeElt delta_J(const HeckeElt& y, const std::vector<int>& J);

// alternating sum of delta_J over the eps-stable subsets J, each signed
// by (-1)^{#eps-orbits on J}
HeckeElt delta(const HeckeElt& y);

/*
  Span of the twisted commutators

      { y y' - y' Theta(y) }  and  { z - Theta(z) }

  over all ordered pairs of plain basis elements, row-reduced once.
  Membership is decided over the fraction field Q(v) by exact
  fraction-free elimination, never at sampled specializations.
*/
class CommutatorSpace {
 public:
  explicit CommutatorSpace(const AlgebraContext& ctx);
  CommutatorSpace(const CommutatorSpace&) = delete;
  CommutatorSpace& operator=(const CommutatorSpace&) = delete;

  const AlgebraContext& ctx() const { return *ctx_; }
  size_t rank() const { return red_.rank(); }
  size_t dim() const { return red_.dim(); }
  // h must be plain (no twist terms); throws std::invalid_argument
  bool contains(const HeckeElt& h) const;

 private:
  const AlgebraContext* ctx_;
  SpanReducer red_;
  PolyVec coords(const HeckeElt& h) const;
};

struct DualityRow {
  std::string element;  // rendered basis element of H_D
  bool residual_zero;   // delta(y) == theta(y) on the nose
  int residual_rank;    // 0 when delta(y) - theta(y) lies in the span
  bool pass;
};

struct DualityReport {
  size_t commutator_rank = 0;
  size_t ambient_dim = 0;
  std::vector<DualityRow> rows;
  bool all_pass = true;
};

// checks delta(y) - theta(y) against the commutator span for every basis
// element y of H_D
DualityReport verify_duality(const AlgebraContext& ctx);

/*
  The fan of Weyl chambers and their faces on the coroot lattice: one facet
  type per subset J of I, facets of that type indexed by the cosets W/W_J,
  the span of a facet being the common wall cut out by J.  The extended
  group acts; W_J fixes the fundamental facet of type J pointwise, so the
  determinant on a fixed facet's span depends only on the twist power.
*/
class FacetComplex {
 public:
  explicit FacetComplex(const AlgebraContext& ctx);

  const AlgebraContext& ctx() const { return *ctx_; }
  int num_types() const { return static_cast<int>(types_.size()); }
  const std::vector<int>& subset(int t) const { return types_[t].J; }
  int span_dim(int t) const { return types_[t].span_dim; }
  // integer basis of the facet direction span, in simple-coroot coordinates
  const std::vector<std::vector<long>>& span_basis(int t) const {
    return types_[t].span_basis;
  }
  // w indices of the minimal coset representatives
  const std::vector<int>& reps(int t) const { return types_[t].reps; }

  // determinant of eps^k on the span of the fundamental facet of type t;
  // throws NotEpsStable when eps^k moves the subset
  long twist_det(int t, int k) const;
  // number of facets of type t fixed by g = (w, eps^k); zero when eps^k
  // moves the subset
  int fixed_count(int t, int wIdx, int k) const;
  // sum of det(g | facet span) over the g-fixed facets of type t
  long trace(int t, int wIdx, int k) const;

 private:
  struct Type {
    std::vector<int> J;
    int span_dim;
    std::vector<int> reps;
    // integer kernel basis of the span, rows of length rank
    std::vector<std::vector<long>> span_basis;
  };
  const AlgebraContext* ctx_;
  std::vector<Type> types_;
};

struct FacetRow {
  std::string element;  // "e", "s1 s2", with " eps^k" appended when k > 0
  long lhs;             // det on the full lattice plus odd-|J| facet traces
  long rhs;             // even-|J| facet traces
  bool pass;
};

struct FacetReport {
  std::vector<FacetRow> rows;
  bool all_pass = true;
};

// the alternating trace identity, element by element over the extended
// group: det(g) + sum_{|J| odd} tr = sum_{|J| even} tr, exact integers
FacetReport facet_identity_check(const AlgebraContext& ctx);

// CSV with header "element,lhs_trace,rhs_trace"
std::string facet_csv(const FacetReport& rep);

}  // namespace hecketwist

#endif
