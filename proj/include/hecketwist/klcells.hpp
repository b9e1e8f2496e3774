/*
  Canonical bases and two-sided cells.

  KL polynomials are computed inside the stabilizer Coxeter system
  (W_lambda, S_lambda) in the normalization where c_t = T_t + v^-1 and
  lower terms have strictly negative degree.  The canonical basis element
  c_{w,lambda} of the ambient algebra is assembled blockwise: writing
  w = w1 z with w1 minimal in w W_lambda, the support of c_{w,lambda} is
  {w1 z' : z' <= z internally} with coefficients p^lambda_{z',z}.
*/

#ifndef HECKETWIST_KLCELLS_HPP
#define HECKETWIST_KLCELLS_HPP

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "hecketwist/hecke.hpp"

namespace hecketwist {

class KLTable {
 public:
  KLTable() = default;
  KLTable(const KLTable&) = delete;
  KLTable& operator=(const KLTable&) = delete;

  // p^lambda_{z',z}; zero unless z' <= z internally, 1 on the diagonal,
  // otherwise in v^-1 Z[v^-1].  Throws NotInSubgroup.
  LaurentPoly kl_poly(const LambdaData& ld, const WeylElement& zp,
                      const WeylElement& z) const;
  // coefficient of v^-1 in p^lambda_{z',z}
  Int mu_coeff(const LambdaData& ld, const WeylElement& zp,
               const WeylElement& z) const;

 private:
  struct Key {
    std::vector<int> orbit;  // positive-root indices of the subsystem
    int zp;
    int z;
    auto operator<=>(const Key&) const = default;
  };
  const LaurentPoly& get(const ReflectionSubgroup& sub, int zp, int z) const;
  mutable std::recursive_mutex mutex_;
  mutable std::map<Key, LaurentPoly> memo_;
};

// c_{w,lambda} expanded in the T basis
HeckeElt c_basis(const AlgebraContext& ctx, const WeylElement& w,
                 const CharacterPoint& lam);

// N_{i,w',w,lambda}: pi_{w',w,lambda} = v^{l(w')-l(w)} sum_i N_i v^i;
// empty when w' and w lie in different W_lambda cosets
std::map<int, Int> n_coeffs(const AlgebraContext& ctx, const WeylElement& wp,
                            const WeylElement& w, const CharacterPoint& lam);

// coefficients in the c basis, keyed by (w index, lambda index)
using CExpansion = std::map<std::pair<int, int>, LaurentPoly>;

// unitriangular back-substitution; h must lie in the plain algebra (k = 0)
CExpansion expand_c(const HeckeElt& h);

// structure constants: c_{w,lambda} c_{w',lambda'} in the c basis
CExpansion gamma(const AlgebraContext& ctx, const WeylElement& w,
                 const CharacterPoint& lam, const WeylElement& wp,
                 const CharacterPoint& lamp);

/*
  The preorder generated by single c-generator steps on either side,
  closed reflexively and transitively.  Pairs are indexed by
  p = wIdx * |ufs_n| + lamIdx.
*/
class Preorder {
 public:
  Preorder(const AlgebraContext& ctx, const std::vector<int>& J,
           const std::vector<int>& Jp);

  const AlgebraContext& ctx() const { return *ctx_; }
  int num_pairs() const { return static_cast<int>(reach_.size()); }
  int pair_index(int wIdx, int lamIdx) const;
  // (y,nu) lies below (w,lambda)
  bool leq(int yIdx, int nuIdx, int wIdx, int lamIdx) const;
  bool leq_pair(int p, int q) const { return reach_[q][p] != 0; }

 private:
  const AlgebraContext* ctx_;
  std::vector<std::vector<char>> reach_;  // reach_[p][q]: q reachable from p
};

struct CellPartition {
  // each cell lists (w index, lambda index) pairs, canonically sorted
  std::vector<std::vector<std::pair<int, int>>> cells;
  // (i, j) with i != j: cell i lies below cell j
  std::vector<std::pair<int, int>> order;
};

// strongly connected components of preorder(J, J'), cells sorted by
// (minimal length, smallest lambda, support)
CellPartition two_sided_cells(const AlgebraContext& ctx,
                              const std::vector<int>& J,
                              const std::vector<int>& Jp);

// image partition under (w,lambda) -> (eps(w), Dbar lambda), re-canonicalized
CellPartition twist_cells(const AlgebraContext& ctx, const CellPartition& part);

// CSV rows "lambda,zprime,z,poly" over all internal pairs z' <= z of W_lambda
std::string kl_csv(const AlgebraContext& ctx, const CharacterPoint& lam);

// {"cells":[[{"w":...,"lambda":...},...],...],"order":[[i,j],...]}
std::string cells_json(const AlgebraContext& ctx, const CellPartition& part);

}  // namespace hecketwist

#endif
