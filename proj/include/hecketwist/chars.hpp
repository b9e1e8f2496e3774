/*
  Finite character points: the n-torsion characters of the cocharacter
  lattice, ufs_n = ((1/n)Z/Z)^rank, with the Weyl-group action
  (w.lambda)(y) = lambda(w^-1 y), the stabilizer subsystem R_lambda with its
  reflection subgroup W_lambda, and the configured lattice twist Dbar.
*/

#ifndef HECKETWIST_CHARS_HPP
#define HECKETWIST_CHARS_HPP

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hecketwist/rootsys.hpp"

namespace hecketwist {

class CharacterPoint {
 public:
  CharacterPoint() = default;
  // numerators over the common denominator den (entries reduced mod den)
  CharacterPoint(std::vector<long> num, long den);

  long den() const { return den_; }
  const std::vector<long>& num() const { return num_; }
  // smallest k >= 1 with k*lambda = 0
  long order() const;
  bool is_trivial() const;

  // value on a cocharacter given in simple-coroot coordinates, as a
  // numerator mod den
  long eval(const std::vector<int>& x) const;
  // value on the coroot of positive root a; zero iff a is in R_lambda
  bool vanishes_on_coroot(const RootDatum& rd, int a) const;

  bool operator==(const CharacterPoint& o) const {
    return den_ == o.den_ && num_ == o.num_;
  }
  bool operator!=(const CharacterPoint& o) const { return !(*this == o); }
  bool operator<(const CharacterPoint& o) const {
    if (den_ != o.den_) return den_ < o.den_;
    return num_ < o.num_;
  }

  // entries as reduced fractions, e.g. {"1/3", "0"}
  std::vector<std::string> fractions() const;
  // "(1/3,0)"
  std::string str() const;

 private:
  std::vector<long> num_;
  long den_ = 1;
};

// all n-torsion points, lexicographic in numerator vectors (trivial first)
std::vector<CharacterPoint> enumerate_ufs(const RootDatum& rd, long n);

// (w.lambda)(y) = lambda(w^-1(y))
CharacterPoint act(const WeylElement& w, const CharacterPoint& lam);

/*
  Stabilizer data of a character: R_lambda+ = {a in R+ : lambda(a^vee) = 0}
  together with the reflection subgroup it generates.  W_lambda may be
  smaller than the full stabilizer of lambda in W.
*/
struct LambdaData {
  CharacterPoint lambda;
  ReflectionSubgroup group;
  LambdaData(const RootDatum& rd, const CharacterPoint& lam);
};

LambdaData stabilizer_data(const RootDatum& rd, const CharacterPoint& lam);

// memoized stabilizer data, single writer / many readers
class StabilizerTable {
 public:
  explicit StabilizerTable(const RootDatum& rd) : rd_(&rd) {}
  const LambdaData& get(const CharacterPoint& lam) const;

 private:
  const RootDatum* rd_;
  mutable std::mutex mu_;
  mutable std::map<CharacterPoint, std::unique_ptr<LambdaData>> memo_;
};

/*
  The lattice automorphism behind the disconnected component: a permutation
  of the simple coroots.  Must intertwine the Weyl action through the
  diagram automorphism: Dbar(w.lambda) = eps(w).Dbar(lambda).
*/
class DbarAction {
 public:
  // perm[i] = image of coordinate i; defaults to the datum's eps
  DbarAction(const RootDatum& rd, std::vector<int> perm);
  static DbarAction from_eps(const RootDatum& rd);

  const std::vector<int>& perm() const { return perm_; }
  bool is_identity() const;
  int order() const;
  // lattice compatibility with eps on every generator; throws IncompatibleTwist
  void validate() const;

  CharacterPoint apply(const CharacterPoint& lam, int power = 1) const;

 private:
  const RootDatum* rd_;
  std::vector<int> perm_;
};

}  // namespace hecketwist

#endif
