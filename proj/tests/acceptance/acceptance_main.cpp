/*
  Acceptance gate: twelve exact criteria, one pass/fail line each.
  Every check is tolerance-zero; the exit status is the number of
  failed criteria.
*/

#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"

#include "hecketwist/chars.hpp"
#include "hecketwist/duality.hpp"
#include "hecketwist/grothendieck.hpp"
#include "hecketwist/klcells.hpp"
#include "hecketwist/verify.hpp"

using namespace hecketwist;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
  if (!cond) throw Failure(msg);
}

struct Cfg {
  std::string type;
  long n = 1;
  std::string eps;
};

std::string cfg_str(const Cfg& c) {
  std::string s = c.type;
  if (!c.eps.empty()) s += "-" + c.eps;
  return s + " n=" + std::to_string(c.n);
}

RootDatum make_datum(const Cfg& c) {
  RootDatum rd = RootDatum::from_type(c.type);
  if (!c.eps.empty()) rd.set_eps(c.eps);
  return rd;
}

HeckeElt random_any(const AlgebraContext& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(1, 3);
  std::uniform_int_distribution<int> wdist(0, static_cast<int>(ctx.W().size()) - 1);
  std::uniform_int_distribution<int> ldist(0, static_cast<int>(ctx.chars().size()) - 1);
  std::uniform_int_distribution<int> kdist(0, ctx.d() - 1);
  std::uniform_int_distribution<int> cdist(-3, 3);
  std::uniform_int_distribution<int> edist(-2, 2);
  HeckeElt h(ctx);
  for (int t = 0, m = nterms(rng); t < m; ++t)
    h.add_term(kdist(rng), wdist(rng), ldist(rng),
               LaurentPoly::term(cdist(rng), edist(rng)));
  return h;
}

HeckeElt random_plain(const AlgebraContext& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(1, 3);
  std::uniform_int_distribution<int> wdist(0, static_cast<int>(ctx.W().size()) - 1);
  std::uniform_int_distribution<int> ldist(0, static_cast<int>(ctx.chars().size()) - 1);
  std::uniform_int_distribution<int> cdist(-3, 3);
  std::uniform_int_distribution<int> edist(-2, 2);
  HeckeElt h(ctx);
  for (int t = 0, m = nterms(rng); t < m; ++t)
    h.add_term(0, wdist(rng), ldist(rng),
               LaurentPoly::term(cdist(rng), edist(rng)));
  return h;
}

HeckeElt full_T(const AlgebraContext& ctx, const WeylElement& u) {
  HeckeElt h(ctx);
  int ui = ctx.w_index(u);
  for (int j = 0; j < static_cast<int>(ctx.chars().size()); ++j)
    h.add_term(0, ui, j, LaurentPoly(1));
  return h;
}

std::vector<WeylElement> min_coset_reps(const AlgebraContext& ctx,
                                        const std::vector<int>& J) {
  std::vector<WeylElement> out;
  for (const auto& u : ctx.W()) {
    bool minimal = true;
    for (int s : J)
      if ((u * WeylElement::simple(ctx.datum(), s)).length() < u.length()) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(u);
  }
  return out;
}

std::vector<int> full_subset(const AlgebraContext& ctx) {
  std::vector<int> I(ctx.datum().rank());
  for (size_t i = 0; i < I.size(); ++i) I[i] = static_cast<int>(i);
  return I;
}

// verification suites are reused across criteria; reports are cached
const SuiteReport& cached_suite(const Cfg& c, const std::string& suite,
                                std::uint64_t seed) {
  static std::map<std::string, SuiteReport> cache;
  std::string key = cfg_str(c) + ":" + suite;
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  RootDatum rd = make_datum(c);
  AlgebraContext ctx(rd, c.n);
  return cache.emplace(key, run_suite(ctx, suite, seed)).first->second;
}

void require_suite(const Cfg& c, const std::string& suite,
                   std::uint64_t seed) {
  const SuiteReport& rep = cached_suite(c, suite, seed);
  for (const CheckResult& chk : rep.checks)
    require(chk.pass, cfg_str(c) + ": " + chk.name + ": " + chk.detail);
}

void require_check(const Cfg& c, const std::string& suite,
                   const std::string& name, std::uint64_t seed) {
  for (const CheckResult& chk : cached_suite(c, suite, seed).checks)
    if (chk.name == name) {
      require(chk.pass, cfg_str(c) + ": " + chk.name + ": " + chk.detail);
      return;
    }
  require(false, cfg_str(c) + ": missing check " + name);
}

// ---- criteria -------------------------------------------------------------

void criterion_presentation() {
  const LaurentPoly q = LaurentPoly::v(1) - LaurentPoly::v(-1);
  int cfgno = 0;
  for (const char* type : {"A1", "A2", "B2"})
    for (long n : {1L, 2L, 3L}) {
      Cfg c{type, n};
      RootDatum rd = make_datum(c);
      AlgebraContext ctx(rd, n);
      std::string at = " in " + cfg_str(c);

      for (const auto& lam : ctx.chars())
        for (const auto& mu : ctx.chars()) {
          HeckeElt prod = mul(idempotent(ctx, lam), idempotent(ctx, mu));
          if (lam == mu)
            require(prod == idempotent(ctx, lam), "idempotent square" + at);
          else
            require(prod.is_zero(), "orthogonality" + at);
        }

      HeckeElt one = unit(ctx);
      for (const auto& w : ctx.W())
        for (const auto& lam : ctx.chars()) {
          HeckeElt b = basis(ctx, w, lam);
          require(mul(one, b) == b && mul(b, one) == b, "unit law" + at);
          for (const auto& mu : ctx.chars()) {
            HeckeElt sandwich = mul(idempotent(ctx, mu), b);
            if (mu == act(w, lam))
              require(sandwich == b, "idempotent transport" + at);
            else
              require(sandwich.is_zero(), "idempotent transport" + at);
          }
        }

      for (const auto& w : ctx.W())
        for (const auto& wp : ctx.W()) {
          if ((w * wp).length() != w.length() + wp.length()) continue;
          for (const auto& lam : ctx.chars())
            require(mul(basis(ctx, w, act(wp, lam)), basis(ctx, wp, lam)) ==
                        basis(ctx, w * wp, lam),
                    "length-additive product" + at);
        }

      for (int i = 0; i < rd.rank(); ++i) {
        WeylElement s = WeylElement::simple(rd, i);
        for (int lj = 0; lj < static_cast<int>(ctx.chars().size()); ++lj) {
          const CharacterPoint& lam = ctx.chars()[lj];
          HeckeElt lhs = mul(basis(ctx, s, act(s, lam)), basis(ctx, s, lam));
          HeckeElt rhs = idempotent(ctx, lam);
          if (ctx.simple_fixes(i, lj)) rhs += basis(ctx, s, lam).scaled(q);
          require(lhs == rhs, "quadratic relation" + at);
        }
      }

      std::mt19937_64 rng(4000 + 7 * cfgno++);
      for (int t = 0; t < 200; ++t) {
        HeckeElt a = random_any(ctx, rng);
        HeckeElt b = random_any(ctx, rng);
        HeckeElt d = random_any(ctx, rng);
        require(mul(mul(a, b), d) == mul(a, mul(b, d)),
                "associativity sample " + std::to_string(t) + at);
      }
    }
}

void criterion_cosets() {
  for (const char* type : {"A2", "B2"})
    for (long n : {1L, 2L, 3L}) require_suite({type, n}, "cosets", 0);
}

void criterion_kl_oracle() {
  for (const char* type : {"A2", "B2"})
    for (long n : {1L, 2L, 3L}) {
      Cfg c{type, n};
      RootDatum rd = make_datum(c);
      AlgebraContext ctx(rd, n);
      std::string at = " in " + cfg_str(c);
      for (int lj = 0; lj < static_cast<int>(ctx.chars().size()); ++lj) {
        const LambdaData& ld = ctx.stab_by_index(lj);
        require(ld.group.size() <= 8, "unexpected block size" + at);
        oracle::InternalHecke ih(ld.group);
        for (int z = 0; z < static_cast<int>(ld.group.size()); ++z)
          for (int zp = 0; zp < static_cast<int>(ld.group.size()); ++zp)
            require(ctx.kl().kl_poly(ld, ld.group.members()[zp],
                                     ld.group.members()[z]) == ih.kl(zp, z),
                    "oracle mismatch at block " + ctx.chars()[lj].str() + at);
      }
    }

  for (const char* type : {"A2", "B2"})
    for (long n : {1L, 2L}) {
      Cfg c{type, n};
      RootDatum rd = make_datum(c);
      AlgebraContext ctx(rd, n);
      std::string at = " in " + cfg_str(c);
      for (const auto& w : ctx.W())
        for (const auto& lam : ctx.chars()) {
          CExpansion exp = expand_c(c_basis(ctx, w, lam));
          require(exp.size() == 1 &&
                      exp.begin()->first == std::make_pair(ctx.w_index(w),
                                                           ctx.char_index(lam)) &&
                      exp.begin()->second == LaurentPoly(1),
                  "expansion of a canonical element" + at);
        }
      std::mt19937_64 rng(51);
      for (int t = 0; t < 25; ++t) {
        HeckeElt h = random_plain(ctx, rng);
        HeckeElt back(ctx);
        for (const auto& [key, coef] : expand_c(h))
          back += c_basis(ctx, ctx.w(key.first), ctx.lambda(key.second))
                      .scaled(coef);
        require(back == h, "round trip" + at);
      }
    }
}

void criterion_positivity() {
  for (const char* type : {"A2", "B2"})
    for (long n : {1L, 2L})
      require_check({type, n}, "positivity", "gamma-coefficients-nonnegative",
                    0);
}

void criterion_evenness() {
  for (const char* type : {"A2", "B2"})
    for (long n : {1L, 2L})
      require_check({type, n}, "positivity", "stalk-parity-even", 0);
}

void criterion_convolution() {
  for (const char* type : {"A1", "A2", "B2"})
    for (long n : {1L, 2L}) require_suite({type, n}, "convolution", 2026);
}

void criterion_cells() {
  RootDatum a1 = RootDatum::from_type("A1");
  {
    AlgebraContext ctx(a1, 1);
    require(two_sided_cells(ctx, {0}, {0}).cells.size() == 2,
            "A1 n=1 cell count");
  }
  {
    AlgebraContext ctx(a1, 2);
    CellPartition part = two_sided_cells(ctx, {0}, {0});
    require(part.cells.size() == 3, "A1 n=2 cell count");
    int half = ctx.char_index(CharacterPoint({1}, 2));
    std::vector<std::pair<int, int>> merged;
    for (int wi = 0; wi < 2; ++wi) merged.push_back({wi, half});
    std::sort(merged.begin(), merged.end());
    bool found = false;
    for (const auto& cell : part.cells) found = found || cell == merged;
    require(found, "A1 n=2 merged block cell");
  }

  // the partition derived from mutual reachability in the triple-product
  // relation must agree with the computed cells
  for (long n : {1L, 2L}) {
    AlgebraContext ctx(a1, n);
    std::vector<int> I = full_subset(ctx);
    CellPartition part = two_sided_cells(ctx, I, I);
    auto ref = oracle::preorder_by_triples(ctx, I, I);
    int np = static_cast<int>(ref.size());
    std::set<std::set<int>> expect;
    for (int p = 0; p < np; ++p) {
      std::set<int> cls;
      for (int q = 0; q < np; ++q)
        if (ref[p][q] && ref[q][p]) cls.insert(q);
      expect.insert(cls);
    }
    std::set<std::set<int>> got;
    int nc = static_cast<int>(ctx.chars().size());
    for (const auto& cell : part.cells) {
      std::set<int> cls;
      for (const auto& [wi, lj] : cell) cls.insert(wi * nc + lj);
      got.insert(cls);
    }
    require(expect == got,
            "cell partition disagrees with the triple-product classes, A1 n=" +
                std::to_string(n));
  }

  for (const char* type : {"A1", "A2"})
    for (long n : {1L, 2L}) {
      RootDatum rd = RootDatum::from_type(type);
      AlgebraContext ctx(rd, n);
      std::vector<int> I = full_subset(ctx);
      Preorder pre(ctx, I, I);
      auto ref = oracle::preorder_by_triples(ctx, I, I);
      for (int p = 0; p < pre.num_pairs(); ++p)
        for (int q = 0; q < pre.num_pairs(); ++q)
          require(pre.leq_pair(q, p) == (ref[p][q] != 0),
                  std::string("preorder mismatch in ") + type + " n=" +
                      std::to_string(n));
    }
}

void criterion_twist() {
  for (long n : {1L, 3L}) {
    Cfg c{"A2", n, "flip"};
    RootDatum rd = make_datum(c);
    AlgebraContext ctx(rd, n);
    std::string at = " in " + cfg_str(c);
    const int nw = static_cast<int>(ctx.W().size());
    const int nc = static_cast<int>(ctx.chars().size());

    for (int wi = 0; wi < nw; ++wi)
      for (int lj = 0; lj < nc; ++lj)
        require(theta_twist(c_basis(ctx, ctx.w(wi), ctx.lambda(lj))) ==
                    c_basis(ctx, ctx.w(ctx.eps_w(wi)),
                            ctx.lambda(ctx.dbar_lam(lj))),
                "canonical basis not carried to canonical basis" + at);

    for (int k1 = 0; k1 < ctx.d(); ++k1)
      for (int wi = 0; wi < nw; ++wi)
        for (int lj = 0; lj < nc; ++lj)
          for (int k2 = 0; k2 < ctx.d(); ++k2)
            for (int wj = 0; wj < nw; ++wj)
              for (int lk = 0; lk < nc; ++lk) {
                HeckeElt x(ctx), y(ctx);
                x.add_term(k1, wi, lj, LaurentPoly(1));
                y.add_term(k2, wj, lk, LaurentPoly(1));
                require(theta_twist(mul(x, y)) ==
                            mul(theta_twist(x), theta_twist(y)),
                        "twist fails multiplicativity" + at);
              }

    std::vector<int> I = full_subset(ctx);
    CellPartition part = two_sided_cells(ctx, I, I);
    CellPartition image = twist_cells(ctx, part);
    require(image.cells == part.cells && image.order == part.order,
            "twist does not preserve the cell partition" + at);
  }
}

void criterion_projections() {
  for (const char* type : {"A2", "B2"})
    for (long n : {1L, 2L}) {
      Cfg c{type, n};
      RootDatum rd = make_datum(c);
      AlgebraContext ctx(rd, n);
      std::string at = " in " + cfg_str(c);
      WeylElement id = WeylElement::identity(ctx.datum());

      for (const std::vector<int>& J :
           {std::vector<int>{0}, std::vector<int>{1}}) {
        auto reps = min_coset_reps(ctx, J);
        for (const auto& u : reps) {
          for (const auto& z : ctx.W()) {
            if (!in_WJ(z, J)) continue;
            for (const auto& lam : ctx.chars()) {
              HeckeElt hp = basis(ctx, z, lam);
              HeckeElt lhs = p_J(mul(full_T(ctx, u), hp), J);
              require(u == id ? lhs == hp : lhs.is_zero(),
                      "projection against a left factor" + at);
            }
          }
          for (const auto& up : reps)
            for (const auto& lam : ctx.chars()) {
              HeckeElt lhs =
                  p_J(mul(full_T(ctx, u.inverse()), basis(ctx, up, lam)), J);
              require(u == up ? lhs == idempotent(ctx, lam) : lhs.is_zero(),
                      "representative pairing" + at);
            }
        }
        for (const auto& w : ctx.W())
          for (const auto& lam : ctx.chars())
            for (const auto& z : ctx.W()) {
              if (!in_WJ(z, J)) continue;
              for (const auto& mu : ctx.chars()) {
                HeckeElt h = basis(ctx, w, lam);
                HeckeElt hp = basis(ctx, z, mu);
                require(p_J(mul(h, hp), J) == mul(p_J(h, J), hp),
                        "projection is not a right module map" + at);
              }
            }
      }

      for (const auto& x : ctx.W())
        for (const auto& xp : ctx.W())
          for (const auto& lam : ctx.chars()) {
            HeckeElt lhs =
                p_J(mul(full_T(ctx, x), basis(ctx, xp, lam)), {});
            require(x * xp == id ? lhs == idempotent(ctx, lam)
                                 : lhs.is_zero(),
                    "unit-coefficient projection" + at);
          }
    }
}

void criterion_duality() {
  RootDatum a1 = RootDatum::from_type("A1");
  for (long n : {1L, 2L}) {
    AlgebraContext ctx(a1, n);
    DualityReport rep = verify_duality(ctx);
    require(!rep.rows.empty(), "empty duality report");
    for (const DualityRow& row : rep.rows)
      require(row.pass && row.residual_zero,
              "nonzero residual at " + row.element + " in A1 n=" +
                  std::to_string(n));
  }

  std::vector<Cfg> cfgs = {{"A2", 1},           {"A2", 2},
                           {"B2", 1},           {"B2", 2},
                           {"A2", 1, "flip"},   {"A1xA1", 1, "swap"}};
  for (const Cfg& c : cfgs) {
    RootDatum rd = make_datum(c);
    AlgebraContext ctx(rd, c.n);
    DualityReport rep = verify_duality(ctx);
    require(!rep.rows.empty(), "empty duality report in " + cfg_str(c));
    for (const DualityRow& row : rep.rows)
      require(row.pass, "residual outside the commutator span at " +
                            row.element + " in " + cfg_str(c));
  }
}

void criterion_involution() {
  std::vector<Cfg> cfgs = {{"A1", 1}, {"A1", 2}, {"A2", 1},
                           {"A2", 2}, {"B2", 1}, {"B2", 2},
                           {"A2", 1, "flip"}, {"A2", 2, "flip"}};
  for (const Cfg& c : cfgs) {
    RootDatum rd = make_datum(c);
    AlgebraContext ctx(rd, c.n);
    std::string at = " in " + cfg_str(c);
    const int nw = static_cast<int>(ctx.W().size());
    const int nc = static_cast<int>(ctx.chars().size());
    std::vector<HeckeElt> all;
    for (int k = 0; k < ctx.d(); ++k)
      for (int wi = 0; wi < nw; ++wi)
        for (int lj = 0; lj < nc; ++lj) {
          HeckeElt y(ctx);
          y.add_term(k, wi, lj, LaurentPoly(1));
          all.push_back(y);
        }
    for (const HeckeElt& y : all)
      require(theta(theta(y)) == y, "square of the involution" + at);
    for (const HeckeElt& y : all)
      for (const HeckeElt& yp : all)
        require(theta(mul(y, yp)) == mul(theta(y), theta(yp)),
                "involution fails multiplicativity" + at);
  }
}

void criterion_facets() {
  std::vector<Cfg> cfgs = {{"A1", 1},         {"A2", 1},
                           {"A2", 1, "flip"}, {"B2", 1},
                           {"A1xA1", 1, "swap"}, {"A3", 1}};
  for (const Cfg& c : cfgs) {
    RootDatum rd = make_datum(c);
    AlgebraContext ctx(rd, c.n);
    FacetReport rep = facet_identity_check(ctx);
    require(!rep.rows.empty(), "empty facet report in " + cfg_str(c));
    for (const FacetRow& row : rep.rows)
      require(row.pass, "trace mismatch at " + row.element + " in " +
                            cfg_str(c) + ": " + std::to_string(row.lhs) +
                            " vs " + std::to_string(row.rhs));
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    std::function<void()> body;
  };
  std::vector<Criterion> criteria = {
      {"defining relations and random associativity", criterion_presentation},
      {"minimal coset representatives and the simple-reflection dichotomy",
       criterion_cosets},
      {"canonical basis against the bar-fixpoint oracle, with round trips",
       criterion_kl_oracle},
      {"structure-constant positivity", criterion_positivity},
      {"stalk multiplicity evenness", criterion_evenness},
      {"convolution product identities", criterion_convolution},
      {"two-sided cell regression and the triple-product preorder oracle",
       criterion_cells},
      {"twist automorphism on canonical bases and cells", criterion_twist},
      {"coset projection identities", criterion_projections},
      {"duality operator against the sign involution", criterion_duality},
      {"sign involution squares to one and is multiplicative",
       criterion_involution},
      {"signed facet trace identity", criterion_facets},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i].body();
      std::printf("PASS %2zu: %s\n", i + 1, criteria[i].label);
    } catch (const std::exception& e) {
      ++failures;
      std::printf("FAIL %2zu: %s  [%s]\n", i + 1, criteria[i].label, e.what());
    }
    std::fflush(stdout);
  }
  if (failures) std::printf("%d of 12 criteria failed\n", failures);
  return failures;
}
