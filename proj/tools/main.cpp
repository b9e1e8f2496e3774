// command-line driver: configuration, computations, verification, export
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hecketwist/chars.hpp"
#include "hecketwist/duality.hpp"
#include "hecketwist/errors.hpp"
#include "hecketwist/klcells.hpp"
#include "hecketwist/runconfig.hpp"
#include "hecketwist/verify.hpp"

namespace ht = hecketwist;
using nlohmann::ordered_json;

namespace {

struct CliArgs {
  std::string config_file;
  std::string type, n, eps, dbar, J, Jp, lambda, out, seed;
};

void add_common(CLI::App* sub, CliArgs& a) {
  sub->add_option("--config", a.config_file,
                  "key=value configuration file; flags override it");
  sub->add_option("--type", a.type, "Cartan type, e.g. A2, B2, A1xA1");
  sub->add_option("--n", a.n, "torsion level of the character lattice");
  sub->add_option("--eps", a.eps,
                  "diagram automorphism: none, flip, swap, rev, or a "
                  "comma-separated 1-based image list");
  sub->add_option("--dbar", a.dbar,
                  "lattice twist as a 1-based coordinate permutation "
                  "(default: induced by eps)");
  sub->add_option("--J", a.J, "left generator subset: full, empty, or 1,2,...");
  sub->add_option("--Jp", a.Jp, "right generator subset, same syntax as --J");
  sub->add_option("--out", a.out, "output directory (default: current)");
  sub->add_option("--seed", a.seed, "seed for randomized property samples");
}

ht::RunConfig resolve(const CLI::App* sub, const CliArgs& a) {
  ht::RunConfig cfg;
  if (sub->count("--config")) cfg = ht::load_config_file(a.config_file);
  if (sub->count("--type")) ht::set_key(cfg, "type", a.type);
  if (sub->count("--n")) ht::set_key(cfg, "n", a.n);
  if (sub->count("--eps")) ht::set_key(cfg, "eps", a.eps);
  if (sub->count("--dbar")) ht::set_key(cfg, "dbar", a.dbar);
  if (sub->count("--J")) ht::set_key(cfg, "J", a.J);
  if (sub->count("--Jp")) ht::set_key(cfg, "Jp", a.Jp);
  const CLI::Option* lam = sub->get_option_no_throw("--lambda");
  if (lam && lam->count()) ht::set_key(cfg, "lambda", a.lambda);
  if (sub->count("--out")) ht::set_key(cfg, "out", a.out);
  if (sub->count("--seed")) ht::set_key(cfg, "seed", a.seed);
  return cfg;
}

std::filesystem::path out_dir(const ht::RunConfig& cfg) {
  std::filesystem::path dir = cfg.out.empty() ? "." : cfg.out;
  std::filesystem::create_directories(dir);
  return dir;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw ht::ConfigError("cannot write " + path.string());
  std::cout << "wrote " << path.string() << "\n";
}

// kl_csv emits its own header; keep one when concatenating blocks
std::string strip_header(const std::string& csv) {
  size_t nl = csv.find('\n');
  return nl == std::string::npos ? std::string() : csv.substr(nl + 1);
}

int cmd_cells(const ht::RunConfig& cfg) {
  ht::ContextBundle b = ht::make_context(cfg);
  const ht::AlgebraContext& ctx = *b.ctx;
  std::vector<int> J = ht::parse_subset(cfg.J, ctx.datum().rank());
  std::vector<int> Jp = ht::parse_subset(cfg.Jp, ctx.datum().rank());
  ht::CellPartition part = ht::two_sided_cells(ctx, J, Jp);

  ordered_json doc;
  doc["config"] = ordered_json::parse(ht::config_json(cfg, ctx));
  ordered_json body = ordered_json::parse(ht::cells_json(ctx, part));
  doc["cells"] = body["cells"];
  doc["order"] = body["order"];
  write_file(out_dir(cfg) / "cells.json", doc.dump(2) + "\n");

  std::cout << part.cells.size() << " two-sided cells\n";
  for (size_t i = 0; i < part.cells.size(); ++i) {
    std::cout << "  cell " << i << " (size " << part.cells[i].size() << "):";
    for (const auto& [wi, lj] : part.cells[i])
      std::cout << " (" << ht::word_str(ctx.w(wi)) << ", "
                << ctx.lambda(lj).str() << ")";
    std::cout << "\n";
  }
  return 0;
}

int cmd_kl(const ht::RunConfig& cfg) {
  ht::ContextBundle b = ht::make_context(cfg);
  const ht::AlgebraContext& ctx = *b.ctx;
  int lj = ht::resolve_lambda(cfg, ctx);
  std::string csv;
  if (lj >= 0) {
    csv = ht::kl_csv(ctx, ctx.chars()[lj]);
  } else {
    for (size_t j = 0; j < ctx.chars().size(); ++j) {
      std::string block = ht::kl_csv(ctx, ctx.chars()[j]);
      csv += j == 0 ? block : strip_header(block);
    }
  }
  write_file(out_dir(cfg) / "kl.csv", csv);
  return 0;
}

int cmd_stalks(const ht::RunConfig& cfg) {
  ht::ContextBundle b = ht::make_context(cfg);
  const ht::AlgebraContext& ctx = *b.ctx;
  int only = ht::resolve_lambda(cfg, ctx);
  std::string csv = "lambda,zprime,z,i,mult\n";
  for (int lj = 0; lj < static_cast<int>(ctx.chars().size()); ++lj) {
    if (only >= 0 && lj != only) continue;
    const ht::CharacterPoint& lam = ctx.chars()[lj];
    std::string lamstr = '"' + lam.str() + '"';
    for (const ht::WeylElement& wp : ctx.W())
      for (const ht::WeylElement& w : ctx.W()) {
        std::map<int, ht::Int> table = ht::n_coeffs(ctx, wp, w, lam);
        for (const auto& [i, c] : table) {
          if (c == 0) continue;
          csv += lamstr + ',' + ht::word_str(wp) + ',' + ht::word_str(w) +
                 ',' + std::to_string(i) + ',' + c.get_str() + '\n';
        }
      }
  }
  write_file(out_dir(cfg) / "stalks.csv", csv);
  return 0;
}

int cmd_gamma(const ht::RunConfig& cfg) {
  ht::ContextBundle b = ht::make_context(cfg);
  const ht::AlgebraContext& ctx = *b.ctx;
  int only = ht::resolve_lambda(cfg, ctx);
  std::string csv = "w,lambda,wprime,lambdaprime,target_w,target_lambda,poly\n";
  for (const ht::WeylElement& w : ctx.W())
    for (const ht::CharacterPoint& lam : ctx.chars())
      for (const ht::WeylElement& wp : ctx.W())
        for (int lpj = 0; lpj < static_cast<int>(ctx.chars().size()); ++lpj) {
          if (only >= 0 && lpj != only) continue;
          const ht::CharacterPoint& lamp = ctx.chars()[lpj];
          ht::CExpansion g = ht::gamma(ctx, w, lam, wp, lamp);
          for (const auto& [key, poly] : g) {
            if (poly.is_zero()) continue;
            csv += ht::word_str(w) + ",\"" + lam.str() + "\"," +
                   ht::word_str(wp) + ",\"" + lamp.str() + "\"," +
                   ht::word_str(ctx.w(key.first)) + ",\"" +
                   ctx.lambda(key.second).str() + "\"," + poly.str() + '\n';
          }
        }
  write_file(out_dir(cfg) / "gamma.csv", csv);
  return 0;
}

int cmd_verify(const ht::RunConfig& cfg, const std::string& suite_arg) {
  ht::RunConfig cfg2 = cfg;
  if (!suite_arg.empty()) cfg2.suite = suite_arg;
  ht::ContextBundle b = ht::make_context(cfg2);
  const ht::AlgebraContext& ctx = *b.ctx;
  ht::SuiteReport rep = ht::run_suite(ctx, cfg2.suite, cfg2.seed);

  ordered_json doc;
  doc["config"] = ordered_json::parse(ht::config_json(cfg2, ctx));
  doc["suite"] = rep.suite;
  doc["all_pass"] = rep.all_pass;
  doc["checks"] = ordered_json::array();
  std::string facet_rows;
  for (const ht::CheckResult& c : rep.checks) {
    ordered_json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    jc["cases"] = c.cases;
    jc["detail"] = c.detail;
    if (!c.rows_json.empty()) jc["rows"] = ordered_json::parse(c.rows_json);
    doc["checks"].push_back(jc);
    if (c.name == "signed-facet-traces") facet_rows = c.rows_json;
    std::cout << c.name << ": " << (c.pass ? "pass" : "FAIL") << " ("
              << c.cases << " cases)";
    if (!c.detail.empty()) std::cout << " " << c.detail;
    std::cout << "\n";
  }
  std::filesystem::path dir = out_dir(cfg2);
  write_file(dir / "verify.json", doc.dump(2) + "\n");
  if (!facet_rows.empty()) {
    std::string csv = "element,lhs_trace,rhs_trace\n";
    for (const ordered_json& row : ordered_json::parse(facet_rows))
      csv += row["element"].get<std::string>() + ',' +
             std::to_string(row["lhs"].get<long>()) + ',' +
             std::to_string(row["rhs"].get<long>()) + '\n';
    write_file(dir / "facets.csv", csv);
  }
  std::cout << "suite " << rep.suite << ": "
            << (rep.all_pass ? "PASS" : "FAIL") << "\n";
  return rep.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twisted Hecke algebra toolkit: canonical bases, cells, "
               "convolution, duality"};
  app.require_subcommand(1);

  CliArgs a_cells, a_kl, a_stalks, a_verify, a_gamma;
  CLI::App* cells = app.add_subcommand(
      "cells", "two-sided cell partition for (J, J')");
  add_common(cells, a_cells);
  CLI::App* kl = app.add_subcommand(
      "kl", "Kazhdan-Lusztig polynomial tables per character block");
  add_common(kl, a_kl);
  kl->add_option("--lambda", a_kl.lambda,
                 "character point, e.g. \"1/2,0\" (default: all)");
  CLI::App* stalks = app.add_subcommand(
      "stalks", "stalk multiplicity tables extracted from the canonical basis");
  add_common(stalks, a_stalks);
  stalks->add_option("--lambda", a_stalks.lambda,
                     "character point (default: all)");
  CLI::App* verify = app.add_subcommand(
      "verify", "run an exact identity suite and write a JSON report");
  std::string suite_arg;
  verify->add_option("suite", suite_arg,
                     "duality, facets, positivity, convolution, cosets, all");
  add_common(verify, a_verify);
  CLI::App* gamma = app.add_subcommand(
      "gamma", "canonical-basis structure constants");
  add_common(gamma, a_gamma);
  gamma->add_option("--lambda", a_gamma.lambda,
                    "restrict the right factor's character (default: all)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(cells)) return cmd_cells(resolve(cells, a_cells));
    if (app.got_subcommand(kl)) return cmd_kl(resolve(kl, a_kl));
    if (app.got_subcommand(stalks))
      return cmd_stalks(resolve(stalks, a_stalks));
    if (app.got_subcommand(verify))
      return cmd_verify(resolve(verify, a_verify), suite_arg);
    if (app.got_subcommand(gamma)) return cmd_gamma(resolve(gamma, a_gamma));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
