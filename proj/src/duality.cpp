#include "hecketwist/duality.hpp"

#include <gmpxx.h>

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hecketwist/errors.hpp"

namespace hecketwist {

namespace {

// T_u summed over all idempotents
HeckeElt full_T(const AlgebraContext& ctx, const WeylElement& u) {
  HeckeElt h(ctx);
  int ui = ctx.w_index(u);
  for (int j = 0; j < static_cast<int>(ctx.chars().size()); ++j)
    h.add_term(0, ui, j, LaurentPoly(1));
  return h;
}

bool is_plain(const HeckeElt& h) {
  for (const auto& [key, c] : h.terms())
    if (key.k != 0) return false;
  return true;
}

std::vector<int> full_subset(const RootDatum& rd) {
  std::vector<int> I(rd.rank());
  std::iota(I.begin(), I.end(), 0);
  return I;
}

bool eps_stable(const RootDatum& rd, const std::vector<int>& J) {
  std::vector<char> in(rd.rank(), 0);
  for (int j : J) in[j] = 1;
  for (int j : J)
    if (!in[rd.eps_simple(j)]) return false;
  return true;
}


// ---- exact rational linear algebra on tiny matrices ----

using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>;

// reduced row echelon form in place; returns the pivot columns
std::vector<int> rref(QMat& A) {
  std::vector<int> pivots;
  if (A.empty()) return pivots;
  size_t rows = A.size(), cols = A[0].size(), row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t sel = row;
    while (sel < rows && A[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(A[sel], A[row]);
    mpq_class inv = 1 / A[row][col];
    for (size_t j = col; j < cols; ++j) A[row][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == row || A[i][col] == 0) continue;
      mpq_class f = A[i][col];
      for (size_t j = col; j < cols; ++j) A[i][j] -= f * A[row][j];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

// basis of {x : A x = 0}, one vector per row of the result
QMat kernel_basis(QMat A, size_t cols) {
  std::vector<int> pivots = rref(A);
  std::vector<char> is_pivot(cols, 0);
  for (int p : pivots) is_pivot[p] = 1;
  QMat basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVec x(cols, 0);
    x[f] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -A[i][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

mpq_class qdet(QMat A) {
  size_t m = A.size();
  mpq_class det = 1;
  for (size_t col = 0; col < m; ++col) {
    size_t sel = col;
    while (sel < m && A[sel][col] == 0) ++sel;
    if (sel == m) return 0;
    if (sel != col) {
      std::swap(A[sel], A[col]);
      det = -det;
    }
    det *= A[col][col];
    mpq_class inv = 1 / A[col][col];
    for (size_t i = col + 1; i < m; ++i) {
      if (A[i][col] == 0) continue;
      mpq_class f = A[i][col] * inv;
      for (size_t j = col; j < m; ++j) A[i][j] -= f * A[col][j];
    }
  }
  return det;
}

// solve B M = C for M, where the r x m matrix B has full column rank
QMat solve_in_basis(const QMat& B, const QMat& C) {
  size_t r = B.size(), m = B.empty() ? 0 : B[0].size();
  QMat aug(r, QVec(2 * m, 0));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < m; ++j) {
      aug[i][j] = B[i][j];
      aug[i][m + j] = C[i][j];
    }
  std::vector<int> pivots = rref(aug);
  if (pivots.size() != m)
    throw std::logic_error("facet span basis is rank deficient");
  for (size_t i = m; i < r; ++i)
    for (size_t j = 0; j < 2 * m; ++j)
      if (aug[i][j] != 0)
        throw std::logic_error("facet span is not stable under the action");
  QMat M(m, QVec(m, 0));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) M[i][j] = aug[i][m + j];
  return M;
}

long to_unit(const mpq_class& q) {
  if (q.get_den() != 1 || (q != 1 && q != -1))
    throw std::logic_error("facet determinant is not a lattice unit");
  return q.get_num().get_si();
}

}  // namespace

HeckeElt theta(const HeckeElt& h) {
  if (!h.context()) return h;
  const AlgebraContext& ctx = *h.context();
  const RootDatum& rd = ctx.datum();
  const int e = rd.rank() - rd.eps_orbits(full_subset(rd));
  HeckeElt out(ctx);
  for (const auto& [key, c] : h.terms()) {
    const WeylElement& w = ctx.w(key.w);
    HeckeElt piece = mul(invert_basis(ctx, w.inverse()),
                         idempotent(ctx, ctx.lambda(key.lam)));
    if (key.k != 0) piece = mul(twist_gen(ctx, key.k), piece);
    bool neg = (w.length() + key.k * e) % 2 != 0;
    out += piece.scaled(neg ? -c : c);
  }
  return out;
}

HeckeElt delta_J(const HeckeElt& y, const std::vector<int>& J) {
  if (!y.context()) return y;
  const AlgebraContext& ctx = *y.context();
  ctx.datum().eps_orbits(J);  // throws NotEpsStable on unstable J
  if (!is_plain(y) || !in_HD(y)) throw NotInHD();

  HeckeElt acc(ctx);
  for (const auto& u : min_parabolic_reps(ctx.W(), J)) {
    const WeylElement& eu = ctx.w(ctx.eps_w(ctx.w_index(u), 1));
    acc += mul(mul(full_T(ctx, u.inverse()), y), full_T(ctx, eu));
  }
  HeckeElt out = restrict_HJ(acc, J);
  if (!in_HD(out))
    throw std::logic_error("delta_J: folded element left the twist summand");
  return out;
}

HeckeElt delta(const HeckeElt& y) {
  if (!y.context()) return y;
  const AlgebraContext& ctx = *y.context();
  if (!is_plain(y) || !in_HD(y)) throw NotInHD();
  const RootDatum& rd = ctx.datum();
  const int r = rd.rank();
  HeckeElt out(ctx);
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    std::vector<int> J;
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) J.push_back(i);
    if (!eps_stable(rd, J)) continue;
    HeckeElt dj = delta_J(y, J);
    if (rd.eps_orbits(J) % 2 != 0)
      out -= dj;
    else
      out += dj;
  }
  return out;
}

PolyVec CommutatorSpace::coords(const HeckeElt& h) const {
  const int nc = static_cast<int>(ctx_->chars().size());
  PolyVec row(red_.dim());
  for (const auto& [key, c] : h.terms()) {
    if (key.k != 0)
      throw std::invalid_argument(
          "commutator space: element carries twist terms");
    row[static_cast<size_t>(key.w) * nc + key.lam] = c;
  }
  return row;
}

CommutatorSpace::CommutatorSpace(const AlgebraContext& ctx)
    : ctx_(&ctx), red_(ctx.W().size() * ctx.chars().size()) {
  const int nw = static_cast<int>(ctx.W().size());
  const int nc = static_cast<int>(ctx.chars().size());
  std::vector<HeckeElt> B;
  B.reserve(static_cast<size_t>(nw) * nc);
  for (int wi = 0; wi < nw; ++wi)
    for (int lj = 0; lj < nc; ++lj) {
      HeckeElt b(ctx);
      b.add_term(0, wi, lj, LaurentPoly(1));
      B.push_back(std::move(b));
    }
  for (const HeckeElt& z : B) {
    if (red_.rank() == red_.dim()) return;
    red_.add_row(coords(z - theta_twist(z)));
  }
  for (const HeckeElt& y : B)
    for (const HeckeElt& yp : B) {
      if (red_.rank() == red_.dim()) return;
      red_.add_row(coords(mul(y, yp) - mul(yp, theta_twist(y))));
    }
}

bool CommutatorSpace::contains(const HeckeElt& h) const {
  return red_.contains(coords(h));
}

DualityReport verify_duality(const AlgebraContext& ctx) {
  CommutatorSpace cs(ctx);
  DualityReport rep;
  rep.commutator_rank = cs.rank();
  rep.ambient_dim = cs.dim();
  const int nw = static_cast<int>(ctx.W().size());
  const int nc = static_cast<int>(ctx.chars().size());
  for (int wi = 0; wi < nw; ++wi)
    for (int lj = 0; lj < nc; ++lj) {
      if (ctx.act_index(wi, lj) != ctx.dbar_lam(lj, -1)) continue;
      HeckeElt y(ctx);
      y.add_term(0, wi, lj, LaurentPoly(1));
      HeckeElt resid = delta(y) - theta(y);
      DualityRow row;
      row.element = render(y);
      row.residual_zero = resid.is_zero();
      row.pass = row.residual_zero || cs.contains(resid);
      row.residual_rank = row.pass ? 0 : 1;
      rep.all_pass = rep.all_pass && row.pass;
      rep.rows.push_back(std::move(row));
    }
  return rep;
}

FacetComplex::FacetComplex(const AlgebraContext& ctx) : ctx_(&ctx) {
  const RootDatum& rd = ctx.datum();
  const int r = rd.rank();
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    Type t;
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) t.J.push_back(i);
    t.span_dim = r - static_cast<int>(t.J.size());

    for (const auto& u : min_parabolic_reps(ctx.W(), t.J))
      t.reps.push_back(ctx.w_index(u));

    // integer basis of {y : <alpha_j, y> = 0 for j in J} in coroot
    // coordinates; <alpha_j, coroot_k> = cartan(k, j)
    QMat A;
    for (int j : t.J) {
      QVec row(r);
      for (int k = 0; k < r; ++k) row[k] = rd.cartan(k, j);
      A.push_back(std::move(row));
    }
    for (const QVec& v : kernel_basis(A, r)) {
      mpz_class scale = 1;
      for (const mpq_class& q : v) scale = lcm(scale, q.get_den());
      std::vector<long> iv(r);
      for (int k = 0; k < r; ++k)
        iv[k] = mpq_class(v[k] * scale).get_num().get_si();
      t.span_basis.push_back(std::move(iv));
    }
    types_.push_back(std::move(t));
  }
}

long FacetComplex::twist_det(int t, int k) const {
  const RootDatum& rd = ctx_->datum();
  const int r = rd.rank();
  const int order = rd.eps_order();
  k = ((k % order) + order) % order;
  if (k == 0) return 1;
  // coordinate permutation of eps^k on the coroot basis
  std::vector<int> p(r);
  for (int i = 0; i < r; ++i) {
    int im = i;
    for (int step = 0; step < k; ++step) im = rd.eps_simple(im);
    p[i] = im;
  }
  for (int j : types_[t].J) {
    bool inside = false;
    for (int jp : types_[t].J) inside = inside || p[j] == jp;
    if (!inside) throw NotEpsStable();
  }
  const auto& B = types_[t].span_basis;
  const size_t m = B.size();
  if (m == 0) return 1;
  QMat QB(r, QVec(m)), QC(r, QVec(m));
  for (size_t col = 0; col < m; ++col)
    for (int i = 0; i < r; ++i) {
      QB[i][col] = B[col][i];
      QC[p[i]][col] = B[col][i];
    }
  return to_unit(qdet(solve_in_basis(QB, QC)));
}

int FacetComplex::fixed_count(int t, int wIdx, int k) const {
  const RootDatum& rd = ctx_->datum();
  const std::vector<int>& J = types_[t].J;
  const int order = rd.eps_order();
  const int kk = ((k % order) + order) % order;
  for (int j : J) {
    int im = j;
    for (int step = 0; step < kk; ++step) im = rd.eps_simple(im);
    bool inside = false;
    for (int jp : J) inside = inside || im == jp;
    if (!inside) return 0;
  }
  const WeylElement& w = ctx_->w(wIdx);
  int count = 0;
  for (int ui : types_[t].reps) {
    const WeylElement& u = ctx_->w(ui);
    const WeylElement& gu = ctx_->w(ctx_->eps_w(ui, k));
    if (in_WJ(u.inverse() * (w * gu), J)) ++count;
  }
  return count;
}

long FacetComplex::trace(int t, int wIdx, int k) const {
  int fc = fixed_count(t, wIdx, k);
  if (fc == 0) return 0;
  return twist_det(t, k) * fc;
}

FacetReport facet_identity_check(const AlgebraContext& ctx) {
  FacetComplex fc(ctx);
  const RootDatum& rd = ctx.datum();
  const int r = rd.rank();
  const int nw = static_cast<int>(ctx.W().size());
  FacetReport rep;
  for (int k = 0; k < rd.eps_order(); ++k) {
    // sign of the eps^k coordinate permutation
    std::vector<int> p(r);
    for (int i = 0; i < r; ++i) {
      int im = i;
      for (int step = 0; step < k; ++step) im = rd.eps_simple(im);
      p[i] = im;
    }
    int cycles = 0;
    std::vector<char> seen(r, 0);
    for (int i = 0; i < r; ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (int j = i; !seen[j]; j = p[j]) seen[j] = 1;
    }
    long eps_det = (r - cycles) % 2 ? -1 : 1;

    for (int wi = 0; wi < nw; ++wi) {
      long det_g = (ctx.w(wi).length() % 2 ? -1 : 1) * eps_det;
      long lhs = det_g, rhs = 0;
      for (int t = 0; t < fc.num_types(); ++t) {
        long tr = fc.trace(t, wi, k);
        if (fc.subset(t).size() % 2)
          lhs += tr;
        else
          rhs += tr;
      }
      FacetRow row;
      row.element = word_str(ctx.w(wi));
      if (k == 1)
        row.element += " eps";
      else if (k > 1)
        row.element += " eps^" + std::to_string(k);
      row.lhs = lhs;
      row.rhs = rhs;
      row.pass = lhs == rhs;
      rep.all_pass = rep.all_pass && row.pass;
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

std::string facet_csv(const FacetReport& rep) {
  std::ostringstream out;
  out << "element,lhs_trace,rhs_trace\n";
  for (const FacetRow& row : rep.rows)
    out << row.element << ',' << row.lhs << ',' << row.rhs << '\n';
  return out.str();
}

}  // namespace hecketwist
