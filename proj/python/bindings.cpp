/*
  Python bindings.  A Context owns the algebra environment (root datum,
  twist, character family, canonical-basis tables); Elt wraps an algebra
  element and keeps the context alive through a shared handle, so element
  lifetimes never depend on Python destruction order.

  Scalars cross the boundary as strings in the same grammar the renderer
  and parser use; reports cross as plain dicts and lists.
*/

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hecketwist/duality.hpp"
#include "hecketwist/errors.hpp"
#include "hecketwist/klcells.hpp"
#include "hecketwist/runconfig.hpp"
#include "hecketwist/verify.hpp"

namespace py = pybind11;
using namespace hecketwist;

namespace {

struct PyElt {
  std::shared_ptr<ContextBundle> bundle;
  HeckeElt h;
};

struct HtContext {
  RunConfig cfg;
  std::shared_ptr<ContextBundle> bundle;

  const AlgebraContext& ctx() const { return *bundle->ctx; }
  PyElt wrap(HeckeElt h) const { return PyElt{bundle, std::move(h)}; }
};

HtContext make_ht_context(const std::string& type, long n,
                          const std::string& eps, const std::string& dbar) {
  RunConfig cfg;
  cfg.type = type;
  cfg.n = n;
  cfg.eps = eps;
  cfg.dbar = dbar;
  return HtContext{cfg, std::make_shared<ContextBundle>(make_context(cfg))};
}

const AlgebraContext& same_ctx(const PyElt& a, const PyElt& b) {
  if (a.bundle != b.bundle) throw ContextMismatch();
  return *a.bundle->ctx;
}

WeylElement parse_word(const AlgebraContext& ctx, const std::string& text) {
  WeylElement w = WeylElement::identity(ctx.datum());
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "e") continue;
    size_t pos = 0;
    int i = 0;
    if (tok.size() >= 2 && tok[0] == 's') {
      try {
        i = std::stoi(tok.substr(1), &pos);
      } catch (...) {
        pos = 0;
      }
    }
    if (pos != tok.size() - 1 || i < 1 || i > ctx.datum().rank())
      throw ParseError("expected a generator s1..s" +
                       std::to_string(ctx.datum().rank()) + " or e, got '" +
                       tok + "'");
    w = w * WeylElement::simple(ctx.datum(), i - 1);
  }
  return w;
}

const CharacterPoint& parse_char(const AlgebraContext& ctx,
                                 const std::string& text) {
  RunConfig probe;
  probe.lambda = text;
  int lj = resolve_lambda(probe, ctx);
  if (lj < 0) throw ConfigError("empty character point");
  return ctx.lambda(lj);
}

py::object json_loads(const std::string& text) {
  return py::module_::import("json").attr("loads")(text);
}

py::dict check_dict(const CheckResult& c) {
  py::dict d;
  d["name"] = c.name;
  d["pass"] = c.pass;
  d["cases"] = c.cases;
  d["detail"] = c.detail;
  if (!c.rows_json.empty()) d["rows"] = json_loads(c.rows_json);
  return d;
}

py::dict suite_dict(const SuiteReport& rep) {
  py::list checks;
  for (const CheckResult& c : rep.checks) checks.append(check_dict(c));
  py::dict d;
  d["suite"] = rep.suite;
  d["all_pass"] = rep.all_pass;
  d["checks"] = checks;
  return d;
}

py::dict cells_dict(const AlgebraContext& ctx, const CellPartition& part) {
  py::list cells;
  for (const auto& cell : part.cells) {
    py::list members;
    for (const auto& [wi, lj] : cell)
      members.append(py::make_tuple(word_str(ctx.w(wi)),
                                    ctx.lambda(lj).str()));
    cells.append(members);
  }
  py::list order;
  for (const auto& [a, b] : part.order) order.append(py::make_tuple(a, b));
  py::dict d;
  d["cells"] = cells;
  d["order"] = order;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "extended Hecke algebra with character twists: canonical bases, "
      "two-sided cells, duality operators, and exact verification suites";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ContextMismatch>(m, "ContextMismatch",
                                          PyExc_ValueError);
  py::register_exception<NotInHD>(m, "NotInHD", PyExc_ValueError);
  py::register_exception<NotEpsStable>(m, "NotEpsStable", PyExc_ValueError);

  py::class_<PyElt>(m, "Elt", "algebra element bound to its context")
      .def("__repr__", [](const PyElt& e) { return render(e.h); })
      .def("__str__", [](const PyElt& e) { return render(e.h); })
      .def(
          "__add__",
          [](const PyElt& a, const PyElt& b) {
            same_ctx(a, b);
            return PyElt{a.bundle, a.h + b.h};
          },
          py::is_operator())
      .def(
          "__sub__",
          [](const PyElt& a, const PyElt& b) {
            same_ctx(a, b);
            return PyElt{a.bundle, a.h - b.h};
          },
          py::is_operator())
      .def(
          "__mul__",
          [](const PyElt& a, const PyElt& b) {
            same_ctx(a, b);
            return PyElt{a.bundle, mul(a.h, b.h)};
          },
          py::is_operator())
      .def("__neg__", [](const PyElt& e) { return PyElt{e.bundle, -e.h}; })
      .def(
          "__eq__",
          [](const PyElt& a, const PyElt& b) {
            same_ctx(a, b);
            return a.h == b.h;
          },
          py::is_operator())
      .def(
          "__ne__",
          [](const PyElt& a, const PyElt& b) {
            same_ctx(a, b);
            return a.h != b.h;
          },
          py::is_operator())
      .def("is_zero", [](const PyElt& e) { return e.h.is_zero(); })
      .def(
          "terms",
          [](const PyElt& e) { return json_loads(json_terms(e.h)); },
          "term list as dicts {k, word, lambda, poly}")
      .def(
          "bar", [](const PyElt& e) { return PyElt{e.bundle, bar_involution(e.h)}; },
          "ring involution: v -> v^-1, T_w -> inverse transpose")
      .def(
          "twist",
          [](const PyElt& e, int power) {
            return PyElt{e.bundle, theta_twist(e.h, power)};
          },
          py::arg("power") = 1,
          "diagram automorphism on basis indices, coefficients unchanged")
      .def(
          "sign_involution",
          [](const PyElt& e) { return PyElt{e.bundle, theta(e.h)}; },
          "signed algebra involution through basis inversion")
      .def(
          "dual", [](const PyElt& e) { return PyElt{e.bundle, delta(e.h)}; },
          "alternating sum of the parabolic duality operators")
      .def(
          "dual_J",
          [](const PyElt& e, const std::vector<int>& J) {
            return PyElt{e.bundle, delta_J(e.h, J)};
          },
          py::arg("J"), "single parabolic duality operator")
      .def(
          "restrict",
          [](const PyElt& e, const std::vector<int>& J) {
            return PyElt{e.bundle, restrict_HJ(e.h, J)};
          },
          py::arg("J"), "drop terms whose group part leaves the parabolic")
      .def(
          "c_expansion",
          [](const PyElt& e) {
            const AlgebraContext& ctx = *e.bundle->ctx;
            py::list out;
            for (const auto& [key, poly] : expand_c(e.h))
              out.append(py::make_tuple(word_str(ctx.w(key.first)),
                                        ctx.lambda(key.second).str(),
                                        poly.str()));
            return out;
          },
          "coefficients on the canonical basis as (word, lambda, poly)");

  py::class_<HtContext>(m, "Context",
                        "algebra environment for one (type, n, twist) choice")
      .def(py::init(&make_ht_context), py::arg("type"), py::arg("n") = 1,
           py::arg("eps") = "", py::arg("dbar") = "")
      .def("__repr__",
           [](const HtContext& c) {
             std::string s = "Context('" + c.cfg.type + "', n=" +
                             std::to_string(c.cfg.n);
             if (!c.cfg.eps.empty()) s += ", eps='" + c.cfg.eps + "'";
             if (!c.cfg.dbar.empty()) s += ", dbar='" + c.cfg.dbar + "'";
             return s + ")";
           })
      .def_property_readonly(
          "rank", [](const HtContext& c) { return c.ctx().datum().rank(); })
      .def_property_readonly("n",
                             [](const HtContext& c) { return c.ctx().n(); })
      .def_property_readonly("d",
                             [](const HtContext& c) { return c.ctx().d(); })
      .def_property(
          "d0", [](const HtContext& c) { return c.ctx().d0(); },
          [](HtContext& c, int d0) { c.bundle->ctx->set_d0(d0); },
          "dimension offset used by the sheaf-class normalization")
      .def("chars",
           [](const HtContext& c) {
             std::vector<std::string> out;
             for (const auto& lam : c.ctx().chars()) out.push_back(lam.str());
             return out;
           })
      .def("words",
           [](const HtContext& c) {
             std::vector<std::string> out;
             for (const auto& w : c.ctx().W()) out.push_back(word_str(w));
             return out;
           })
      .def(
          "basis",
          [](const HtContext& c, const std::string& w, const std::string& lam,
             int k) {
            return c.wrap(basis(c.ctx(), k, parse_word(c.ctx(), w),
                                parse_char(c.ctx(), lam)));
          },
          py::arg("w"), py::arg("lam"), py::arg("k") = 0,
          "T_w 1_lambda, optionally left-multiplied by the twist generator")
      .def(
          "idempotent",
          [](const HtContext& c, const std::string& lam) {
            return c.wrap(idempotent(c.ctx(), parse_char(c.ctx(), lam)));
          },
          py::arg("lam"))
      .def("unit", [](const HtContext& c) { return c.wrap(unit(c.ctx())); })
      .def(
          "twist_gen",
          [](const HtContext& c, int k) { return c.wrap(twist_gen(c.ctx(), k)); },
          py::arg("k") = 1)
      .def(
          "basis_inverse",
          [](const HtContext& c, const std::string& w) {
            return c.wrap(invert_basis(c.ctx(), parse_word(c.ctx(), w)));
          },
          py::arg("w"), "inverse of the sum of T_w over all idempotents")
      .def(
          "c_basis",
          [](const HtContext& c, const std::string& w, const std::string& lam) {
            return c.wrap(c_basis(c.ctx(), parse_word(c.ctx(), w),
                                  parse_char(c.ctx(), lam)));
          },
          py::arg("w"), py::arg("lam"), "canonical basis element")
      .def(
          "parse",
          [](const HtContext& c, const std::string& text) {
            return c.wrap(parse_elt(c.ctx(), text));
          },
          py::arg("text"), "parse the rendered element grammar")
      .def(
          "kl_csv",
          [](const HtContext& c, const std::string& lam) {
            return kl_csv(c.ctx(), parse_char(c.ctx(), lam));
          },
          py::arg("lam"),
          "canonical-basis transition polynomials for one character block")
      .def(
          "cells",
          [](const HtContext& c, const std::string& J, const std::string& Jp) {
            int r = c.ctx().datum().rank();
            CellPartition part = two_sided_cells(
                c.ctx(), parse_subset(J, r), parse_subset(Jp, r));
            return cells_dict(c.ctx(), part);
          },
          py::arg("J") = "full", py::arg("Jp") = "full",
          "two-sided cell partition with its order relation")
      .def(
          "verify",
          [](const HtContext& c, const std::string& suite, std::uint64_t seed) {
            return suite_dict(run_suite(c.ctx(), suite, seed));
          },
          py::arg("suite") = "all", py::arg("seed") = 0,
          "run a verification suite and return its report")
      .def(
          "duality_report",
          [](const HtContext& c) {
            DualityReport rep = verify_duality(c.ctx());
            py::list rows;
            for (const DualityRow& r : rep.rows) {
              py::dict d;
              d["element"] = r.element;
              d["residual_zero"] = r.residual_zero;
              d["residual_rank"] = r.residual_rank;
              d["pass"] = r.pass;
              rows.append(d);
            }
            py::dict d;
            d["commutator_rank"] = rep.commutator_rank;
            d["ambient_dim"] = rep.ambient_dim;
            d["all_pass"] = rep.all_pass;
            d["rows"] = rows;
            return d;
          },
          "compare the duality operator with the sign involution")
      .def(
          "facet_report",
          [](const HtContext& c) {
            FacetReport rep = facet_identity_check(c.ctx());
            py::list rows;
            for (const FacetRow& r : rep.rows) {
              py::dict d;
              d["element"] = r.element;
              d["lhs"] = r.lhs;
              d["rhs"] = r.rhs;
              d["pass"] = r.pass;
              rows.append(d);
            }
            py::dict d;
            d["all_pass"] = rep.all_pass;
            d["rows"] = rows;
            return d;
          },
          "signed facet trace identity over the twisted group")
      .def("config", [](const HtContext& c) {
        return json_loads(config_json(c.cfg, c.ctx()));
      });

  m.def("suite_names", [] { return suite_names(); },
        "names accepted by Context.verify");
}
