#include "hecketwist/chars.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace hecketwist {

CharacterPoint::CharacterPoint(std::vector<long> num, long den)
    : num_(std::move(num)), den_(den) {
  assert(den_ >= 1);
  for (long& v : num_) v = ((v % den_) + den_) % den_;
}

long CharacterPoint::order() const {
  long g = den_;
  for (long v : num_) g = std::gcd(g, v);
  return den_ / g;
}

bool CharacterPoint::is_trivial() const {
  return std::all_of(num_.begin(), num_.end(), [](long v) { return v == 0; });
}

long CharacterPoint::eval(const std::vector<int>& x) const {
  long acc = 0;
  for (size_t j = 0; j < num_.size(); ++j)
    acc += ((x[j] % den_) + den_) % den_ * num_[j];
  return acc % den_;
}

bool CharacterPoint::vanishes_on_coroot(const RootDatum& rd, int a) const {
  return eval(rd.coroot(a)) == 0;
}

std::vector<std::string> CharacterPoint::fractions() const {
  std::vector<std::string> out;
  for (long v : num_) {
    if (v == 0) {
      out.push_back("0");
    } else {
      long g = std::gcd(v, den_);
      out.push_back(std::to_string(v / g) + "/" + std::to_string(den_ / g));
    }
  }
  return out;
}

std::string CharacterPoint::str() const {
  std::ostringstream s;
  s << "(";
  auto fr = fractions();
  for (size_t i = 0; i < fr.size(); ++i) {
    if (i) s << ",";
    s << fr[i];
  }
  s << ")";
  return s.str();
}

std::vector<CharacterPoint> enumerate_ufs(const RootDatum& rd, long n) {
  if (n < 1) throw ConfigError("torsion level n must be >= 1");
  const int r = rd.rank();
  std::vector<CharacterPoint> out;
  std::vector<long> num(r, 0);
  for (;;) {
    out.emplace_back(num, n);
    int i = r - 1;
    while (i >= 0 && num[i] == n - 1) num[i--] = 0;
    if (i < 0) break;
    ++num[i];
  }
  return out;
}

CharacterPoint act(const WeylElement& w, const CharacterPoint& lam) {
  const RootDatum& rd = w.datum();
  const int r = rd.rank();
  WeylElement winv = w.inverse();
  std::vector<long> num(r, 0);
  for (int i = 0; i < r; ++i) {
    // (w.lambda)(alpha_i^vee) = lambda(w^-1 alpha_i^vee)
    int s = winv.perm()[i];
    const std::vector<int>& cv = rd.coroot(std::abs(s) - 1);
    long v = lam.eval(cv);
    num[i] = s > 0 ? v : (lam.den() - v) % lam.den();
  }
  return CharacterPoint(std::move(num), lam.den());
}

LambdaData::LambdaData(const RootDatum& rd, const CharacterPoint& lam)
    : lambda(lam), group(rd, [&] {
        std::vector<int> pos;
        for (int a = 0; a < rd.num_pos_roots(); ++a)
          if (lam.vanishes_on_coroot(rd, a)) pos.push_back(a);
        return pos;
      }()) {}

LambdaData stabilizer_data(const RootDatum& rd, const CharacterPoint& lam) {
  return LambdaData(rd, lam);
}

const LambdaData& StabilizerTable::get(const CharacterPoint& lam) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = memo_.find(lam);
  if (it == memo_.end())
    it = memo_.emplace(lam, std::make_unique<LambdaData>(*rd_, lam)).first;
  return *it->second;
}

DbarAction::DbarAction(const RootDatum& rd, std::vector<int> perm)
    : rd_(&rd), perm_(std::move(perm)) {
  const int r = rd.rank();
  if (static_cast<int>(perm_.size()) != r)
    throw ConfigError("dbar permutation has wrong size");
  std::vector<bool> seen(r, false);
  for (int i : perm_) {
    if (i < 0 || i >= r || seen[i]) throw ConfigError("dbar is not a permutation");
    seen[i] = true;
  }
}

DbarAction DbarAction::from_eps(const RootDatum& rd) {
  return DbarAction(rd, rd.eps());
}

bool DbarAction::is_identity() const {
  for (size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] != static_cast<int>(i)) return false;
  return true;
}

int DbarAction::order() const {
  int d = 1;
  std::vector<int> p = perm_;
  auto is_id = [&] {
    for (size_t i = 0; i < p.size(); ++i)
      if (p[i] != static_cast<int>(i)) return false;
    return true;
  };
  while (!is_id()) {
    std::vector<int> q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[i] = perm_[p[i]];
    p = q;
    ++d;
  }
  return d;
}

void DbarAction::validate() const {
  // e(s_i(y)) = s_{eps(i)}(e(y)) on the simple-coroot basis, where e is the
  // coordinate permutation
  const RootDatum& rd = *rd_;
  const int r = rd.rank();
  auto e_apply = [&](const std::vector<int>& x) {
    std::vector<int> y(r, 0);
    for (int j = 0; j < r; ++j) y[perm_[j]] = x[j];
    return y;
  };
  for (int i = 0; i < r; ++i) {
    WeylElement si = WeylElement::simple(rd, i);
    WeylElement se = WeylElement::simple(rd, rd.eps_simple(i));
    for (int j = 0; j < r; ++j) {
      std::vector<int> basis(r, 0);
      basis[j] = 1;
      if (e_apply(si.act_coroot(basis)) != se.act_coroot(e_apply(basis)))
        throw IncompatibleTwist();
    }
  }
}

CharacterPoint DbarAction::apply(const CharacterPoint& lam, int power) const {
  const int r = static_cast<int>(perm_.size());
  const int ord = order();
  int k = ((power % ord) + ord) % ord;
  std::vector<long> num = lam.num();
  for (int t = 0; t < k; ++t) {
    std::vector<long> next(r);
    for (int j = 0; j < r; ++j) next[perm_[j]] = num[j];
    num = next;
  }
  return CharacterPoint(std::move(num), lam.den());
}

}  // namespace hecketwist
