#include "hecketwist/laurent.hpp"

#include <cctype>
#include <sstream>

namespace hecketwist {

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) {
    c_[e] += c;
    strip(e);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) {
    c_[e] -= c;
    strip(e);
  }
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : c_) r.c_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : o.c_) r.c_[e1 + e2] += c1 * c2;
  for (auto it = r.c_.begin(); it != r.c_.end();)
    it = (it->second == 0) ? r.c_.erase(it) : std::next(it);
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto& [e, c] : c_) r.c_[-e] = c;
  return r;
}

LaurentPoly LaurentPoly::shifted(int e) const {
  LaurentPoly r;
  for (const auto& [e0, c] : c_) r.c_[e0 + e] = c;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly r(1);
  LaurentPoly b = *this;
  for (; k; k >>= 1) {
    if (k & 1) r *= b;
    if (k > 1) b *= b;
  }
  return r;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& d) const {
  if (d.is_zero()) throw NotDivisible();
  if (is_zero()) return LaurentPoly();
  // top-down long division; every step's leading coefficient must divide
  LaurentPoly rem = *this, q;
  const int dtop = d.max_exp();
  const Int& dlead = d.c_.rbegin()->second;
  while (!rem.is_zero()) {
    if (rem.max_exp() - rem.min_exp() < dtop - d.min_exp()) throw NotDivisible();
    Int lead = rem.c_.rbegin()->second;
    if (!mpz_divisible_p(lead.get_mpz_t(), dlead.get_mpz_t()))
      throw NotDivisible();
    Int t = lead / dlead;
    int e = rem.max_exp() - dtop;
    q.c_[e] = t;
    rem -= term(t, e) * d;
  }
  return q;
}

Int LaurentPoly::content() const {
  Int g = 0;
  for (const auto& [e, c] : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const auto& [e, c] = *it;
    Int a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (e == 0) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str();
      out << "v";
      if (e != 1) out << "^" << e;
    }
    first = false;
  }
  return out.str();
}

namespace {

// one monomial: [int] ["v" ["^" int]]
void parse_term(const std::string& s, size_t& i, Int& coef, int& exp) {
  size_t n = s.size();
  std::string digits;
  while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
  bool has_v = (i < n && s[i] == 'v');
  if (!has_v && digits.empty()) throw ParseError("expected term in polynomial");
  coef = digits.empty() ? Int(1) : Int(digits);
  exp = 0;
  if (has_v) {
    ++i;
    exp = 1;
    if (i < n && s[i] == '^') {
      ++i;
      bool neg = (i < n && s[i] == '-');
      if (neg) ++i;
      std::string ds;
      while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ds += s[i++];
      if (ds.empty()) throw ParseError("expected exponent after '^'");
      exp = std::stoi(ds);
      if (neg) exp = -exp;
    }
  }
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& s) {
  LaurentPoly p;
  size_t i = 0, n = s.size();
  auto skip = [&] { while (i < n && s[i] == ' ') ++i; };
  skip();
  if (i == n) throw ParseError("empty polynomial");
  bool neg = false;
  if (s[i] == '-') { neg = true; ++i; skip(); }
  else if (s[i] == '+') { ++i; skip(); }
  for (;;) {
    Int c;
    int e;
    parse_term(s, i, c, e);
    if (neg) c = -c;
    p += term(c, e);
    skip();
    if (i == n) break;
    if (s[i] == '+') neg = false;
    else if (s[i] == '-') neg = true;
    else throw ParseError("unexpected character in polynomial: " + s.substr(i));
    ++i;
    skip();
  }
  return p;
}

namespace {

// divide a row by its content and by v^min so entries stay small
void normalize_row(PolyVec& row) {
  Int g = 0;
  int shift = 0;
  bool any = false;
  for (const auto& p : row) {
    if (p.is_zero()) continue;
    Int c = p.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    shift = any ? std::min(shift, p.min_exp()) : p.min_exp();
    any = true;
  }
  if (!any) return;
  LaurentPoly d = LaurentPoly::term(g, shift);
  for (auto& p : row)
    if (!p.is_zero()) p = p.exact_div(d);
}

}  // namespace

void SpanReducer::reduce(PolyVec& row) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    size_t p = pivot_[i];
    if (row[p].is_zero()) continue;
    LaurentPoly a = rows_[i][p], b = row[p];
    for (size_t j = 0; j < dim_; ++j) row[j] = a * row[j] - b * rows_[i][j];
    normalize_row(row);
  }
}

bool SpanReducer::add_row(PolyVec row) {
  if (row.size() != dim_) throw std::invalid_argument("SpanReducer: bad row size");
  reduce(row);
  size_t p = dim_;
  for (size_t j = 0; j < dim_; ++j)
    if (!row[j].is_zero()) { p = j; break; }
  if (p == dim_) return false;
  // keep rows ordered by pivot column so reduce() sweeps left to right
  size_t pos = 0;
  while (pos < pivot_.size() && pivot_[pos] < p) ++pos;
  pivot_.insert(pivot_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(row));
  return true;
}

bool SpanReducer::contains(PolyVec target) const {
  if (target.size() != dim_) throw std::invalid_argument("SpanReducer: bad row size");
  reduce(target);
  for (const auto& p : target)
    if (!p.is_zero()) return false;
  return true;
}

bool span_contains(const std::vector<PolyVec>& generators, const PolyVec& target) {
  if (generators.empty()) {
    for (const auto& p : target)
      if (!p.is_zero()) return false;
    return true;
  }
  SpanReducer red(generators.front().size());
  for (const auto& g : generators) red.add_row(g);
  return red.contains(target);
}

}  // namespace hecketwist
