#include "hecketwist/klcells.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace hecketwist {

std::unique_ptr<KLTable> make_kl_table(const AlgebraContext&) {
  return std::make_unique<KLTable>();
}

/*
  p_{z',z} in the normalization c_t = T_t + v^-1:
    p_{z,z} = 1, p_{z',z} = 0 unless z' <= z, lower terms in v^-1 Z[v^-1].
  With z = t z1, l(z1) = l(z) - 1:
    p_{z',z} = p_{t z', z1} + v^{+-1} p_{z', z1}
               - sum_{y < z1, t y < y} mu(y, z1) p_{z', y}
  where the shift is v when t z' < z' and v^-1 otherwise, and mu is the
  v^-1 coefficient.  Everything runs in the internal Coxeter system.
*/
const LaurentPoly& KLTable::get(const ReflectionSubgroup& sub, int zpIdx,
                                int zIdx) const {
  Key key{sub.pos_roots(), zpIdx, zIdx};
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  const WeylElement& zp = sub.members()[zpIdx];
  const WeylElement& z = sub.members()[zIdx];
  LaurentPoly val;
  if (zpIdx == zIdx) {
    val = LaurentPoly(1);
  } else if (sub.bruhat_leq(zp, z)) {
    int k = -1;
    for (size_t a = 0; a < sub.simples().size(); ++a)
      if (sub.left_descent(z, static_cast<int>(a))) {
        k = static_cast<int>(a);
        break;
      }
    WeylElement t = WeylElement::reflection(sub.datum(), sub.simples()[k]);
    WeylElement z1 = t * z;
    int z1Idx = sub.member_index(z1);
    WeylElement tzp = t * zp;
    bool down = sub.length(tzp) < sub.length(zp);

    val = get(sub, sub.member_index(tzp), z1Idx);
    LaurentPoly self = get(sub, zpIdx, z1Idx);
    val += self.shifted(down ? 1 : -1);
    for (int yIdx = 0; yIdx < static_cast<int>(sub.size()); ++yIdx) {
      if (yIdx == z1Idx) continue;
      const WeylElement& y = sub.members()[yIdx];
      if (!sub.bruhat_leq(y, z1)) continue;
      if (sub.length(t * y) >= sub.length(y)) continue;
      Int mu = get(sub, yIdx, z1Idx).coeff(-1);
      if (mu == 0) continue;
      val -= LaurentPoly(mu) * get(sub, zpIdx, yIdx);
    }
  }
  return memo_.emplace(std::move(key), std::move(val)).first->second;
}

LaurentPoly KLTable::kl_poly(const LambdaData& ld, const WeylElement& zp,
                             const WeylElement& z) const {
  int a = ld.group.member_index(zp);
  int b = ld.group.member_index(z);
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  return get(ld.group, a, b);
}

Int KLTable::mu_coeff(const LambdaData& ld, const WeylElement& zp,
                      const WeylElement& z) const {
  return kl_poly(ld, zp, z).coeff(-1);
}

HeckeElt c_basis(const AlgebraContext& ctx, const WeylElement& w,
                 const CharacterPoint& lam) {
  const LambdaData& ld = ctx.stab(ctx.lambda(ctx.char_index(lam)));
  auto [w1, z] = min_subgroup_coset(ctx.w(ctx.w_index(w)), ld.group);
  HeckeElt out(ctx);
  int lamIdx = ctx.char_index(lam);
  for (const WeylElement& zp : ld.group.members()) {
    LaurentPoly p = ctx.kl().kl_poly(ld, zp, z);
    if (p.is_zero()) continue;
    out.add_term(0, ctx.w_index(w1 * zp), lamIdx, p);
  }
  return out;
}

std::map<int, Int> n_coeffs(const AlgebraContext& ctx, const WeylElement& wp,
                            const WeylElement& w, const CharacterPoint& lam) {
  const LambdaData& ld = ctx.stab(ctx.lambda(ctx.char_index(lam)));
  auto [w1, z] = min_subgroup_coset(ctx.w(ctx.w_index(w)), ld.group);
  auto [w1p, zp] = min_subgroup_coset(ctx.w(ctx.w_index(wp)), ld.group);
  std::map<int, Int> out;
  if (!(w1 == w1p)) return out;
  LaurentPoly pi =
      ctx.kl().kl_poly(ld, zp, z).shifted(w.length() - wp.length());
  for (const auto& [e, c] : pi.terms()) out[e] = c;
  return out;
}

CExpansion expand_c(const HeckeElt& h) {
  CExpansion out;
  if (!h.context()) return out;
  const AlgebraContext& ctx = *h.context();
  for (const auto& [key, c] : h.terms())
    if (key.k != 0)
      throw std::invalid_argument("expand_c expects a plain algebra element");

  HeckeElt rem = h;
  while (!rem.is_zero()) {
    // peel off a term of maximal internal length; c_{w,lambda} is
    // unitriangular against the T basis within its coset block
    int bestW = -1, bestLam = -1, bestLen = -1;
    LaurentPoly bestCoef;
    for (const auto& [key, c] : rem.terms()) {
      const LambdaData& ld = ctx.stab_by_index(key.lam);
      auto [w1, zz] = min_subgroup_coset(ctx.w(key.w), ld.group);
      int ll = ld.group.length(zz);
      if (ll > bestLen) {
        bestLen = ll;
        bestW = key.w;
        bestLam = key.lam;
        bestCoef = c;
      }
    }
    out[{bestW, bestLam}] += bestCoef;
    rem -= c_basis(ctx, ctx.w(bestW), ctx.lambda(bestLam)).scaled(bestCoef);
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

CExpansion gamma(const AlgebraContext& ctx, const WeylElement& w,
                 const CharacterPoint& lam, const WeylElement& wp,
                 const CharacterPoint& lamp) {
  return expand_c(mul(c_basis(ctx, w, lam), c_basis(ctx, wp, lamp)));
}

int Preorder::pair_index(int wIdx, int lamIdx) const {
  return wIdx * static_cast<int>(ctx_->chars().size()) + lamIdx;
}

bool Preorder::leq(int yIdx, int nuIdx, int wIdx, int lamIdx) const {
  return reach_[pair_index(wIdx, lamIdx)][pair_index(yIdx, nuIdx)] != 0;
}

Preorder::Preorder(const AlgebraContext& ctx, const std::vector<int>& J,
                   const std::vector<int>& Jp)
    : ctx_(&ctx) {
  const int nc = static_cast<int>(ctx.chars().size());
  const int nw = static_cast<int>(ctx.W().size());
  const int np = nw * nc;
  reach_.assign(np, std::vector<char>(np, 0));
  for (int p = 0; p < np; ++p) reach_[p][p] = 1;

  for (int wi = 0; wi < nw; ++wi)
    for (int lj = 0; lj < nc; ++lj) {
      int p = wi * nc + lj;
      HeckeElt cw = c_basis(ctx, ctx.w(wi), ctx.lambda(lj));
      for (int s : J) {
        // left step: the only compatible idempotent is 1_{w.lambda}
        int mu = ctx.act_index(wi, lj);
        HeckeElt g =
            c_basis(ctx, WeylElement::simple(ctx.datum(), s), ctx.lambda(mu));
        for (const auto& [yk, coef] : expand_c(mul(g, cw)))
          reach_[p][yk.first * nc + yk.second] = 1;
      }
      for (int s : Jp) {
        // right step: need s.mu = lambda, i.e. mu = s.lambda
        int sIdx = ctx.w_index(WeylElement::simple(ctx.datum(), s));
        int mu = ctx.act_index(sIdx, lj);
        HeckeElt g = c_basis(ctx, ctx.w(sIdx), ctx.lambda(mu));
        for (const auto& [yk, coef] : expand_c(mul(cw, g)))
          reach_[p][yk.first * nc + yk.second] = 1;
      }
    }

  for (int m = 0; m < np; ++m)
    for (int p = 0; p < np; ++p)
      if (reach_[p][m])
        for (int q = 0; q < np; ++q)
          if (reach_[m][q]) reach_[p][q] = 1;
}

CellPartition two_sided_cells(const AlgebraContext& ctx,
                              const std::vector<int>& J,
                              const std::vector<int>& Jp) {
  Preorder pre(ctx, J, Jp);
  const int nc = static_cast<int>(ctx.chars().size());
  const int np = pre.num_pairs();

  std::vector<int> cell_of(np, -1);
  std::vector<std::vector<std::pair<int, int>>> cells;
  std::vector<int> reps;  // one pair index per cell
  for (int p = 0; p < np; ++p) {
    if (cell_of[p] >= 0) continue;
    int id = static_cast<int>(cells.size());
    cells.emplace_back();
    reps.push_back(p);
    for (int q = p; q < np; ++q)
      if (cell_of[q] < 0 && pre.leq_pair(p, q) && pre.leq_pair(q, p)) {
        cell_of[q] = id;
        cells[id].push_back({q / nc, q % nc});
      }
  }
  for (auto& cell : cells) std::sort(cell.begin(), cell.end());

  // canonical cell order: (minimal length, smallest lambda, support)
  std::vector<int> perm(cells.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  auto cell_key = [&](int i) {
    int min_len = ctx.w(cells[i][0].first).length();
    int min_lam = cells[i][0].second;
    for (const auto& [wi, lj] : cells[i]) min_lam = std::min(min_lam, lj);
    return std::tuple<int, int, const std::vector<std::pair<int, int>>&>(
        min_len, min_lam, cells[i]);
  };
  std::sort(perm.begin(), perm.end(),
            [&](int a, int b) { return cell_key(a) < cell_key(b); });

  CellPartition part;
  std::vector<int> new_index(cells.size());
  for (size_t i = 0; i < perm.size(); ++i) {
    new_index[perm[i]] = static_cast<int>(i);
    part.cells.push_back(cells[perm[i]]);
  }
  for (size_t i = 0; i < cells.size(); ++i)
    for (size_t j = 0; j < cells.size(); ++j) {
      if (i == j) continue;
      if (pre.leq_pair(reps[i], reps[j]))
        part.order.push_back({new_index[i], new_index[j]});
    }
  std::sort(part.order.begin(), part.order.end());
  return part;
}

CellPartition twist_cells(const AlgebraContext& ctx,
                          const CellPartition& part) {
  std::vector<std::vector<std::pair<int, int>>> cells;
  for (const auto& cell : part.cells) {
    std::vector<std::pair<int, int>> img;
    for (const auto& [wi, lj] : cell)
      img.push_back({ctx.eps_w(wi), ctx.dbar_lam(lj)});
    std::sort(img.begin(), img.end());
    cells.push_back(std::move(img));
  }
  std::vector<int> perm(cells.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  auto cell_key = [&](int i) {
    int min_len = ctx.w(cells[i][0].first).length();
    int min_lam = cells[i][0].second;
    for (const auto& [wi, lj] : cells[i]) min_lam = std::min(min_lam, lj);
    return std::tuple<int, int, const std::vector<std::pair<int, int>>&>(
        min_len, min_lam, cells[i]);
  };
  std::sort(perm.begin(), perm.end(),
            [&](int a, int b) { return cell_key(a) < cell_key(b); });

  CellPartition out;
  std::vector<int> new_index(cells.size());
  for (size_t i = 0; i < perm.size(); ++i) {
    new_index[perm[i]] = static_cast<int>(i);
    out.cells.push_back(cells[perm[i]]);
  }
  for (const auto& [i, j] : part.order)
    out.order.push_back({new_index[i], new_index[j]});
  std::sort(out.order.begin(), out.order.end());
  return out;
}

std::string kl_csv(const AlgebraContext& ctx, const CharacterPoint& lam) {
  const LambdaData& ld = ctx.stab(lam);
  std::string lamstr = '"' + ld.lambda.str() + '"';
  std::string out = "lambda,zprime,z,poly\n";
  for (const WeylElement& z : ld.group.members())
    for (const WeylElement& zp : ld.group.members()) {
      if (!ld.group.bruhat_leq(zp, z)) continue;
      out += lamstr + ',' + word_str(zp) + ',' + word_str(z) + ',' +
             ctx.kl().kl_poly(ld, zp, z).str() + '\n';
    }
  return out;
}

std::string cells_json(const AlgebraContext& ctx, const CellPartition& part) {
  nlohmann::ordered_json doc;
  doc["cells"] = nlohmann::ordered_json::array();
  for (const auto& cell : part.cells) {
    nlohmann::ordered_json jcell = nlohmann::ordered_json::array();
    for (const auto& [wi, lj] : cell) {
      nlohmann::ordered_json m;
      m["w"] = word_str(ctx.w(wi));
      m["lambda"] = ctx.lambda(lj).str();
      jcell.push_back(m);
    }
    doc["cells"].push_back(jcell);
  }
  doc["order"] = nlohmann::ordered_json::array();
  for (const auto& [i, j] : part.order)
    doc["order"].push_back(nlohmann::ordered_json::array({i, j}));
  return doc.dump();
}

}  // namespace hecketwist
