/*
  Exact arithmetic in the ring A = Z[v, v^-1] of integer Laurent polynomials,
  plus fraction-free linear algebra over A (span membership over the fraction
  field Q(v)).

  Coefficients are arbitrary-precision (GMP); nothing here may overflow.
*/

#ifndef HECKETWIST_LAURENT_HPP
#define HECKETWIST_LAURENT_HPP

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecketwist {

using Int = mpz_class;

struct NotDivisible : std::runtime_error {
  NotDivisible() : std::runtime_error("laurent: exact division failed") {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what)
      : std::runtime_error("parse: " + what) {}
};

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int c) { if (c != 0) c_[0] = c; }
  LaurentPoly(const Int& c) { if (c != 0) c_[0] = c; }

  // c * v^e
  static LaurentPoly term(const Int& c, int e) {
    LaurentPoly p;
    if (c != 0) p.c_[e] = c;
    return p;
  }
  static LaurentPoly v(int e = 1) { return term(1, e); }

  bool is_zero() const { return c_.empty(); }
  // true iff every coefficient is >= 0
  bool is_nonnegative() const {
    for (const auto& [e, c] : c_)
      if (c < 0) return false;
    return true;
  }

  Int coeff(int e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Int(0) : it->second;
  }
  // exponent bounds; only meaningful on nonzero polynomials
  int min_exp() const { return c_.begin()->first; }
  int max_exp() const { return c_.rbegin()->first; }
  size_t num_terms() const { return c_.size(); }
  const std::map<int, Int>& terms() const { return c_; }

  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
  bool operator!=(const LaurentPoly& o) const { return c_ != o.c_; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    return r += o;
  }
  LaurentPoly operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    return r -= o;
  }
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
  }

  // v -> v^-1
  LaurentPoly bar() const;
  // multiply by v^e
  LaurentPoly shifted(int e) const;
  // nonnegative integer power
  LaurentPoly pow(unsigned k) const;

  // exact quotient; throws NotDivisible when *this is not a multiple of d
  LaurentPoly exact_div(const LaurentPoly& d) const;

  // gcd of all coefficients (positive; 0 for the zero polynomial)
  Int content() const;

  // descending exponents, e.g. "v^2 - 2 + v^-2"; zero renders as "0"
  std::string str() const;
  static LaurentPoly parse(const std::string& s);

 private:
  std::map<int, Int> c_;  // exponent -> nonzero coefficient
  void strip(int e) {
    auto it = c_.find(e);
    if (it != c_.end() && it->second == 0) c_.erase(it);
  }
};

inline LaurentPoly operator*(const Int& c, const LaurentPoly& p) {
  return LaurentPoly(c) * p;
}

using PolyVec = std::vector<LaurentPoly>;

/*
  Incremental fraction-free row reduction over Z[v]: rows are combined by
  cross-multiplication only (r' = p*r - q*row), then divided by their content
  and v^min, so no rational arithmetic ever appears.  Ranks and membership
  agree with Gaussian elimination over the fraction field Q(v).
*/
class SpanReducer {
 public:
  explicit SpanReducer(size_t dim) : dim_(dim) {}

  // returns true when the row enlarged the span
  bool add_row(PolyVec row);
  // membership of target in the current span, over Q(v)
  bool contains(PolyVec target) const;
  size_t rank() const { return rows_.size(); }
  size_t dim() const { return dim_; }

 private:
  size_t dim_;
  std::vector<size_t> pivot_;          // pivot column of rows_[i]
  std::vector<PolyVec> rows_;          // echelon rows, content-normalized
  void reduce(PolyVec& row) const;
  friend bool span_contains(const std::vector<PolyVec>&, const PolyVec&);
};

// one-shot convenience wrapper around SpanReducer
bool span_contains(const std::vector<PolyVec>& generators,
                   const PolyVec& target);

}  // namespace hecketwist

#endif
