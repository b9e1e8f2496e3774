#include "hecketwist/runconfig.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "hecketwist/chars.hpp"
#include "hecketwist/errors.hpp"

namespace hecketwist {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

long parse_long(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    long out = std::stol(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return out;
  } catch (const std::exception&) {
    throw ConfigError(key + " expects an integer, got '" + value + "'");
  }
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(trim(tok));
  return out;
}

// "1/2" or "3" as a reduced fraction mod 1
std::pair<long, long> parse_fraction(const std::string& tok) {
  size_t slash = tok.find('/');
  std::string ns = slash == std::string::npos ? tok : tok.substr(0, slash);
  std::string ds = slash == std::string::npos ? "1" : tok.substr(slash + 1);
  long num = parse_long("lambda", ns);
  long den = parse_long("lambda", ds);
  if (den <= 0) throw ConfigError("lambda denominators must be positive");
  return {num, den};
}

}  // namespace

void set_key(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "type")
    cfg.type = value;
  else if (key == "n")
    cfg.n = parse_long(key, value);
  else if (key == "eps")
    cfg.eps = value;
  else if (key == "dbar")
    cfg.dbar = value;
  else if (key == "J")
    cfg.J = value;
  else if (key == "Jp")
    cfg.Jp = value;
  else if (key == "lambda")
    cfg.lambda = value;
  else if (key == "suite")
    cfg.suite = value;
  else if (key == "out")
    cfg.out = value;
  else if (key == "seed")
    cfg.seed = static_cast<std::uint64_t>(parse_long(key, value));
  else
    throw ConfigError("unknown configuration key: " + key);
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": expected key=value");
    set_key(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

std::vector<int> parse_subset(const std::string& text, int rank) {
  std::string t = trim(text);
  std::vector<int> out;
  if (t == "full") {
    out.resize(rank);
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
  if (t == "empty" || t.empty()) return out;
  for (const std::string& tok : split_commas(t)) {
    long i = parse_long("subset", tok);
    if (i < 1 || i > rank)
      throw ConfigError("generator index " + tok + " out of range 1.." +
                        std::to_string(rank));
    out.push_back(static_cast<int>(i - 1));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ContextBundle make_context(const RunConfig& cfg) {
  if (cfg.n < 1) throw ConfigError("n must be a positive integer");
  ContextBundle b;
  b.datum = std::make_unique<RootDatum>(RootDatum::from_type(cfg.type));
  if (!cfg.eps.empty()) b.datum->set_eps(cfg.eps);
  std::vector<int> dperm;
  if (!cfg.dbar.empty()) {
    for (const std::string& tok : split_commas(cfg.dbar)) {
      long i = parse_long("dbar", tok);
      if (i < 1 || i > b.datum->rank())
        throw ConfigError("dbar index " + tok + " out of range 1.." +
                          std::to_string(b.datum->rank()));
      dperm.push_back(static_cast<int>(i - 1));
    }
    if (static_cast<int>(dperm.size()) != b.datum->rank())
      throw ConfigError("dbar must list all " +
                        std::to_string(b.datum->rank()) + " coordinates");
  }
  b.ctx = std::make_unique<AlgebraContext>(*b.datum, cfg.n, dperm);
  return b;
}

int resolve_lambda(const RunConfig& cfg, const AlgebraContext& ctx) {
  std::string t = trim(cfg.lambda);
  if (t.empty()) return -1;
  if (t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  std::vector<std::string> toks = split_commas(t);
  if (static_cast<int>(toks.size()) != ctx.datum().rank())
    throw ConfigError("lambda must have " +
                      std::to_string(ctx.datum().rank()) + " coordinates");
  long den = 1;
  std::vector<std::pair<long, long>> fracs;
  for (const std::string& tok : toks) {
    fracs.push_back(parse_fraction(tok));
    den = std::lcm(den, fracs.back().second);
  }
  std::vector<long> num;
  for (const auto& [p, q] : fracs) num.push_back(p * (den / q));
  try {
    return ctx.char_index(CharacterPoint(num, den));
  } catch (const ContextMismatch&) {
    throw ConfigError("lambda = " + cfg.lambda + " is not an n-torsion point");
  }
}

std::string config_json(const RunConfig& cfg, const AlgebraContext& ctx) {
  nlohmann::ordered_json j;
  const RootDatum& rd = ctx.datum();
  j["type"] = cfg.type;
  j["n"] = cfg.n;
  nlohmann::ordered_json eps = nlohmann::ordered_json::array();
  for (int i = 0; i < rd.rank(); ++i) eps.push_back(rd.eps_simple(i) + 1);
  j["eps"] = eps;
  nlohmann::ordered_json dbar = nlohmann::ordered_json::array();
  for (int i : ctx.dbar().perm()) dbar.push_back(i + 1);
  j["dbar"] = dbar;
  auto subset = [&](const std::string& text) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (int i : parse_subset(text, rd.rank())) arr.push_back(i + 1);
    return arr;
  };
  j["J"] = subset(cfg.J);
  j["Jp"] = subset(cfg.Jp);
  int lj = resolve_lambda(cfg, ctx);
  if (lj >= 0)
    j["lambda"] = ctx.chars()[lj].str();
  else
    j["lambda"] = nullptr;
  j["suite"] = cfg.suite;
  j["seed"] = cfg.seed;
  j["d0"] = ctx.d0();
  return j.dump();
}

}  // namespace hecketwist
