/*
  Root data of finite Cartan type (rank <= 4, plus reducible products) and
  their Weyl groups.

  The cocharacter lattice is the coroot lattice on the simple-coroot basis,
  so rank == |I| throughout.  Roots are stored in simple-root coordinates,
  coroots in simple-coroot coordinates.  A Weyl group element is stored as
  the induced signed permutation of the positive roots; that list is the
  canonical form used for equality and ordering, and length is the count of
  positive roots sent negative.
*/

#ifndef HECKETWIST_ROOTSYS_HPP
#define HECKETWIST_ROOTSYS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hecketwist/errors.hpp"

namespace hecketwist {

class WeylElement;

class RootDatum {
 public:
  // type strings: "A1".."A4", "B2".."B4", "C2".."C4", "D4", "F4", "G2",
  // and 'x'-separated products such as "A1xA1"
  static RootDatum from_type(const std::string& type);

  const std::string& type() const { return type_; }
  int rank() const { return rank_; }
  int num_pos_roots() const { return static_cast<int>(roots_.size()); }
  // <alpha_j, alpha_i^vee>
  int cartan(int i, int j) const { return cartan_[i][j]; }

  // positive root / its coroot, index 0..num_pos_roots-1; the first rank()
  // entries are the simple roots in order
  const std::vector<int>& root(int a) const { return roots_[a]; }
  const std::vector<int>& coroot(int a) const { return coroots_[a]; }
  // signed index+1 of a root given in root coordinates; 0 if not a root
  int root_index(const std::vector<int>& coords) const;
  // <root b, coroot of root a>
  int pairing(int b, int a) const;
  // signed action s_a(alpha_b) of the reflection through root a
  int reflect(int a, int b) const { return refl_[a][b]; }

  // diagram automorphism; identity unless configured.  spec: 1-based list,
  // "flip"/"swap"/"rev" for index reversal, "id"/"none"/"" for identity
  void set_eps(const std::vector<int>& perm_of_I);
  void set_eps(const std::string& spec);
  const std::vector<int>& eps() const { return eps_; }
  bool eps_is_identity() const;
  int eps_order() const;
  // induced permutation of positive-root indices
  int eps_root(int a) const { return eps_root_[a]; }
  int eps_simple(int i) const { return eps_[i]; }
  // number of eps-orbits on an eps-stable subset of I; throws NotEpsStable
  int eps_orbits(const std::vector<int>& J) const;

 private:
  std::string type_;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> roots_;
  std::vector<std::vector<int>> coroots_;
  std::map<std::vector<int>, int> root_lookup_;
  std::vector<std::vector<int16_t>> refl_;  // refl_[a][b] = signed s_a(alpha_b)
  std::vector<int> eps_;                    // eps_[i] = image of simple i
  std::vector<int> eps_root_;               // induced on positive roots
  void build(const std::vector<std::vector<int>>& cartan);
};

class WeylElement {
 public:
  WeylElement() = default;
  static WeylElement identity(const RootDatum& rd);
  static WeylElement simple(const RootDatum& rd, int i);
  // reflection through the positive root with index a
  static WeylElement reflection(const RootDatum& rd, int a);

  const RootDatum& datum() const { return *rd_; }
  int length() const { return len_; }
  bool is_identity() const { return len_ == 0; }

  // image of a signed root: +-(index+1) -> +-(index+1)
  int apply(int signed_root) const;
  // lattice action on a cocharacter given in simple-coroot coordinates
  std::vector<int> act_coroot(const std::vector<int>& x) const;

  WeylElement operator*(const WeylElement& o) const;
  WeylElement inverse() const;
  bool operator==(const WeylElement& o) const { return img_ == o.img_; }
  bool operator!=(const WeylElement& o) const { return img_ != o.img_; }
  // canonical order: (length, image list)
  bool operator<(const WeylElement& o) const {
    if (len_ != o.len_) return len_ < o.len_;
    return img_ < o.img_;
  }

  // l(w s_i) < l(w)
  bool right_descent(int i) const { return img_[i] < 0; }
  // l(s_i w) < l(w)
  bool left_descent(int i) const;
  // ShortLex-minimal reduced word, 0-based generator indices
  std::vector<int> word() const;
  const std::vector<int16_t>& perm() const { return img_; }

  // conjugate by the diagram automorphism: eps(w) = e w e^-1
  WeylElement eps_twist(int power = 1) const;

 private:
  const RootDatum* rd_ = nullptr;
  std::vector<int16_t> img_;
  int len_ = 0;
  WeylElement(const RootDatum& rd, std::vector<int16_t> img);
};

// all of W, each element once, sorted by (length, canonical form)
std::vector<WeylElement> enumerate_W(const RootDatum& rd,
                                     size_t bound = size_t(1) << 20);

// l(w s_alpha) > l(w), computed from lengths; equivalent to w(alpha) in R+
bool length_dichotomy(const WeylElement& w, int alpha);

// standard Bruhat order
bool bruhat_leq(const WeylElement& wp, const WeylElement& w);

// "e" or "s1 s2 s1", 1-based generator indices of a reduced word
std::string word_str(const WeylElement& w);

// minimal-length representatives of the cosets w W_J, canonical order.
// W must be the full sorted enumeration of the datum's Weyl group.
std::vector<WeylElement> min_parabolic_reps(const std::vector<WeylElement>& W,
                                            const std::vector<int>& J);

/*
  A reflection subgroup W' given by a root subsystem: the positive system
  R'+ (indices into R+), its simple system, and the enumerated members with
  the internal length l'.  Used for the stabilizer groups of characters.
*/
class ReflectionSubgroup {
 public:
  ReflectionSubgroup(const RootDatum& rd, std::vector<int> pos_roots);

  const RootDatum& datum() const { return *rd_; }
  const std::vector<int>& pos_roots() const { return pos_; }
  const std::vector<int>& simples() const { return simples_; }
  // members sorted by (internal length, canonical form)
  const std::vector<WeylElement>& members() const { return members_; }
  bool contains(const WeylElement& z) const;
  // index into members(); throws NotInSubgroup
  int member_index(const WeylElement& z) const;
  size_t size() const { return members_.size(); }

  int length(const WeylElement& z) const;  // l'(z), z in the subgroup
  // descents with respect to the internal simple system; k indexes simples()
  bool right_descent(const WeylElement& z, int k) const;
  bool left_descent(const WeylElement& z, int k) const;
  // reduced word over simples() indices, greedy left descents
  std::vector<int> word(const WeylElement& z) const;
  // internal Bruhat order
  bool bruhat_leq(const WeylElement& zp, const WeylElement& z) const;

 private:
  const RootDatum* rd_;
  std::vector<int> pos_;
  std::vector<int> simples_;
  std::vector<WeylElement> members_;
  std::map<std::vector<int16_t>, int> index_;
};

// w = w1 * z with z in sub and w1 the unique minimal-length element of the
// coset w*sub; the returned w1 satisfies w1(R'+) in R+
std::pair<WeylElement, WeylElement> min_subgroup_coset(
    const WeylElement& w, const ReflectionSubgroup& sub);

}  // namespace hecketwist

#endif
