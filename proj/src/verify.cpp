#include "hecketwist/verify.hpp"

#include <random>
#include <sstream>

#include "json.hpp"

#include "hecketwist/chars.hpp"
#include "hecketwist/duality.hpp"
#include "hecketwist/errors.hpp"
#include "hecketwist/grothendieck.hpp"
#include "hecketwist/klcells.hpp"

namespace hecketwist {

namespace {

using nlohmann::ordered_json;

std::string pair_str(const WeylElement& w, const CharacterPoint& lam) {
  return word_str(w) + " at " + lam.str();
}

void fail(CheckResult& res, const std::string& detail) {
  if (res.pass) {
    res.pass = false;
    res.detail = detail;
  }
}

CheckResult check_min_coset(const AlgebraContext& ctx) {
  CheckResult res{"minimal-coset-representative"};
  for (const auto& lam : ctx.chars()) {
    const LambdaData& ld = ctx.stab(lam);
    for (const auto& w : ctx.W()) {
      ++res.cases;
      auto [w1, z] = min_subgroup_coset(w, ld.group);
      if (!(w1 * z == w) || !ld.group.contains(z)) {
        fail(res, "factorization failed for " + pair_str(w, lam));
        return res;
      }
      for (int a : ld.group.pos_roots())
        if (w1.apply(a + 1) < 0) {
          fail(res, "representative moves a stabilizer root to a negative "
                    "one for " + pair_str(w, lam));
          return res;
        }
      int count = 0;
      for (const auto& u : ld.group.members()) {
        WeylElement c = w * u;
        bool all_pos = true;
        for (int a : ld.group.pos_roots())
          if (c.apply(a + 1) < 0) all_pos = false;
        if (all_pos) ++count;
        if (all_pos != (c == w1) || (c != w1 && c.length() <= w1.length())) {
          fail(res, "minimality characterization failed for " +
                        pair_str(w, lam));
          return res;
        }
      }
      if (count != 1) {
        fail(res, "representative not unique for " + pair_str(w, lam));
        return res;
      }
    }
  }
  return res;
}

CheckResult check_coset_dichotomy(const AlgebraContext& ctx) {
  CheckResult res{"simple-reflection-dichotomy"};
  const RootDatum& rd = ctx.datum();
  for (const auto& lam : ctx.chars()) {
    const LambdaData& ld = ctx.stab(lam);
    for (const auto& w : ctx.W()) {
      WeylElement w1 = min_subgroup_coset(w, ld.group).first;
      for (int i = 0; i < rd.rank(); ++i) {
        ++res.cases;
        WeylElement sw1 = WeylElement::simple(rd, i) * w1;
        bool stays_min = (min_subgroup_coset(sw1, ld.group).first == sw1);
        bool conjugate_inside = ld.group.contains(w1.inverse() * sw1);
        if (!stays_min && !conjugate_inside) {
          fail(res, "s" + std::to_string(i + 1) +
                        " escapes both branches for " + pair_str(w, lam));
          return res;
        }
      }
    }
  }
  return res;
}

CheckResult check_convolution(const AlgebraContext& ctx) {
  CheckResult res{"vanishing-and-length-additive-products"};
  const int r = ctx.datum().rank();
  LaurentPoly sc(1);
  const LaurentPoly v2m1 = LaurentPoly::v(2) - LaurentPoly(1);
  for (int i = 0; i < r; ++i) sc = sc * v2m1;
  for (const auto& w : ctx.W())
    for (const auto& lam : ctx.chars())
      for (const auto& wp : ctx.W())
        for (const auto& lamp : ctx.chars()) {
          FKElt prod = star(fk_basis(ctx, w, lam), fk_basis(ctx, wp, lamp));
          if (!(act(wp, lamp) == lam)) {
            ++res.cases;
            if (!prod.is_zero()) {
              fail(res, "nonzero mismatched product " + pair_str(w, lam) +
                            " * " + pair_str(wp, lamp));
              return res;
            }
          } else if ((w * wp).length() == w.length() + wp.length()) {
            ++res.cases;
            if (prod != fk_basis(ctx, w * wp, lamp).scaled(sc)) {
              fail(res, "length-additive product failed for " +
                            pair_str(w, lam) + " * " + pair_str(wp, lamp));
              return res;
            }
          } else if (wp.length() == 1) {
            ++res.cases;
            int s = wp.word()[0];
            FKElt expect = fk_basis(ctx, w * wp, lamp).scaled(LaurentPoly::v(2));
            if (ctx.simple_fixes(s, ctx.char_index(lamp)))
              expect += fk_basis(ctx, w, lamp).scaled(v2m1);
            if (prod != expect.scaled(sc)) {
              fail(res, "one-step-down product failed for " +
                            pair_str(w, lam) + " * " + pair_str(wp, lamp));
              return res;
            }
          }
        }
  return res;
}

CheckResult check_omega_random(const AlgebraContext& ctx, std::uint64_t seed) {
  CheckResult res{"omega-intertwines-products"};
  const int r = ctx.datum().rank();
  LaurentPoly sc(1);
  const LaurentPoly v2m1 = LaurentPoly::v(2) - LaurentPoly(1);
  for (int i = 0; i < r; ++i) sc = sc * v2m1;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> nterms(1, 3);
  std::uniform_int_distribution<int> wdist(0, static_cast<int>(ctx.W().size()) - 1);
  std::uniform_int_distribution<int> ldist(0, static_cast<int>(ctx.chars().size()) - 1);
  std::uniform_int_distribution<int> cdist(-3, 3);
  std::uniform_int_distribution<int> edist(-2, 2);
  auto random_fk = [&]() {
    FKElt x(ctx);
    for (int t = 0, m = nterms(rng); t < m; ++t)
      x.add_term(wdist(rng), ldist(rng),
                 LaurentPoly::term(cdist(rng), edist(rng)));
    return x;
  };
  for (int t = 0; t < 100; ++t) {
    ++res.cases;
    FKElt x = random_fk();
    FKElt xp = random_fk();
    HeckeElt lhs = omega(star(x, xp));
    HeckeElt rhs = mul(omega(x), omega(xp)).scaled(sc);
    if (lhs != rhs) {
      fail(res, "sample " + std::to_string(t) + " failed");
      return res;
    }
  }
  return res;
}

CheckResult check_gamma_positive(const AlgebraContext& ctx) {
  CheckResult res{"gamma-coefficients-nonnegative"};
  for (const auto& w : ctx.W())
    for (const auto& lam : ctx.chars())
      for (const auto& wp : ctx.W())
        for (const auto& lamp : ctx.chars()) {
          ++res.cases;
          CExpansion g = gamma(ctx, w, lam, wp, lamp);
          for (const auto& [key, poly] : g)
            for (const auto& [e, c] : poly.terms())
              if (c < 0) {
                fail(res, "negative coefficient in c-product " +
                              pair_str(w, lam) + " * " + pair_str(wp, lamp));
                return res;
              }
        }
  return res;
}

CheckResult check_stalk_parity(const AlgebraContext& ctx) {
  CheckResult res{"stalk-parity-even"};
  for (const auto& lam : ctx.chars())
    for (const auto& wp : ctx.W())
      for (const auto& w : ctx.W()) {
        std::map<int, Int> table = n_coeffs(ctx, wp, w, lam);
        if (table.empty()) continue;
        ++res.cases;
        for (const auto& [i, c] : table)
          if (i % 2 != 0 && c != 0) {
            fail(res, "odd-degree multiplicity at " + word_str(wp) + " <= " +
                          pair_str(w, lam));
            return res;
          }
      }
  return res;
}

CheckResult check_duality(const AlgebraContext& ctx) {
  CheckResult res{"delta-equals-theta-mod-commutators"};
  DualityReport rep = verify_duality(ctx);
  res.cases = static_cast<long>(rep.rows.size());
  ordered_json rows = ordered_json::array();
  for (const DualityRow& row : rep.rows) {
    rows.push_back({{"element", row.element},
                    {"residual_zero", row.residual_zero},
                    {"residual_rank", row.residual_rank},
                    {"pass", row.pass}});
    if (!row.pass)
      fail(res, "residual outside the commutator span at " + row.element);
  }
  res.rows_json = rows.dump();
  return res;
}

CheckResult check_facets(const AlgebraContext& ctx) {
  CheckResult res{"signed-facet-traces"};
  FacetReport rep = facet_identity_check(ctx);
  res.cases = static_cast<long>(rep.rows.size());
  ordered_json rows = ordered_json::array();
  for (const FacetRow& row : rep.rows) {
    rows.push_back({{"element", row.element},
                    {"lhs", row.lhs},
                    {"rhs", row.rhs},
                    {"pass", row.pass}});
    if (!row.pass)
      fail(res, "trace mismatch at " + row.element + ": " +
                    std::to_string(row.lhs) + " vs " +
                    std::to_string(row.rhs));
  }
  res.rows_json = rows.dump();
  return res;
}

void append_suite(SuiteReport& rep, const AlgebraContext& ctx,
                  const std::string& suite, std::uint64_t seed) {
  if (suite == "cosets") {
    rep.checks.push_back(check_min_coset(ctx));
    rep.checks.push_back(check_coset_dichotomy(ctx));
  } else if (suite == "convolution") {
    rep.checks.push_back(check_convolution(ctx));
    rep.checks.push_back(check_omega_random(ctx, seed));
  } else if (suite == "positivity") {
    rep.checks.push_back(check_gamma_positive(ctx));
    rep.checks.push_back(check_stalk_parity(ctx));
  } else if (suite == "duality") {
    rep.checks.push_back(check_duality(ctx));
  } else if (suite == "facets") {
    rep.checks.push_back(check_facets(ctx));
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "duality", "facets", "positivity", "convolution", "cosets", "all"};
  return names;
}

bool known_suite(const std::string& name) {
  for (const std::string& s : suite_names())
    if (s == name) return true;
  return false;
}

SuiteReport run_suite(const AlgebraContext& ctx, const std::string& suite,
                      std::uint64_t seed) {
  if (!known_suite(suite))
    throw ConfigError("unknown verification suite: " + suite);
  SuiteReport rep;
  rep.suite = suite;
  if (suite == "all") {
    for (const std::string& s : suite_names())
      if (s != "all") append_suite(rep, ctx, s, seed);
  } else {
    append_suite(rep, ctx, suite, seed);
  }
  for (const CheckResult& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
  return rep;
}

}  // namespace hecketwist
