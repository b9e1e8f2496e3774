/*
  Run configuration: a flat key=value file merged with command-line
  overrides, resolved into an owned algebra context.
*/

#ifndef HECKETWIST_RUNCONFIG_HPP
#define HECKETWIST_RUNCONFIG_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hecketwist/hecke.hpp"

namespace hecketwist {

struct RunConfig {
  std::string type = "A1";
  long n = 1;
  std::string eps;       // automorphism name or 1-based image list; empty = split
  std::string dbar;      // 1-based coordinate permutation; empty = derived from eps
  std::string J = "full";
  std::string Jp = "full";
  std::string lambda;    // restrict to one character point; empty = all
  std::string suite = "all";
  std::string out;       // output directory; empty = current directory
  std::uint64_t seed = 0;
};

// keys: type, n, eps, dbar, J, Jp, lambda, suite, out, seed
void set_key(RunConfig& cfg, const std::string& key, const std::string& value);

// one key=value per line, '#' comments and blank lines ignored
RunConfig load_config_file(const std::string& path);

// "full", "empty", or comma-separated 1-based generator indices;
// returns a sorted 0-based subset of {0, ..., rank-1}
std::vector<int> parse_subset(const std::string& text, int rank);

struct ContextBundle {
  std::unique_ptr<RootDatum> datum;
  std::unique_ptr<AlgebraContext> ctx;
};

// builds the root datum and algebra context described by cfg
ContextBundle make_context(const RunConfig& cfg);

// index of cfg.lambda in ctx.chars(), or -1 when cfg.lambda is empty
int resolve_lambda(const RunConfig& cfg, const AlgebraContext& ctx);

// the fully resolved configuration with the degree constant, serialized
// as a JSON object with a stable key order
std::string config_json(const RunConfig& cfg, const AlgebraContext& ctx);

}  // namespace hecketwist

#endif
