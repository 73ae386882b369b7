#pragma once

#include <memory>
#include <string>
#include <vector>

#include "multispinal/errors.hpp"

namespace multispinal {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Finite group as a Cayley table over an ordered element list. The declared
// order is canonical for every matrix built downstream; indices are the
// computational identity and labels appear only in reports.
class FiniteGroup {
 public:
  // Verifies Latin-square shape, associativity, identity and inverses.
  // Throws Error("NotAGroup") with the failing axiom and witness.
  static GroupPtr validate(std::vector<std::string> elements,
                           std::vector<std::vector<int>> table);

  int order() const { return static_cast<int>(labels_.size()); }
  int identity() const { return identity_; }
  int mul(int i, int j) const { return table_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
  int inv(int i) const { return inverse_[static_cast<size_t>(i)]; }

  const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  // -1 when the label is not declared.
  int index_of(const std::string& label) const;

  // Structural equality: same labels in the same order, same table.
  bool operator==(const FiniteGroup& other) const {
    return labels_ == other.labels_ && table_ == other.table_;
  }

 private:
  FiniteGroup() = default;

  std::vector<std::string> labels_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

// Direct product of cyclic groups Z_{n1} x ... x Z_{nk} in lexicographic
// component order; labels are the components joined by "," (a bare digit
// string for a single factor).
GroupPtr cyclic_product(const std::vector<int>& orders);

// Verified group homomorphism. Construction checks map(xy) = map(x)map(y)
// on all pairs; throws Error("NotAHomomorphism") with a witness pair.
class Homomorphism {
 public:
  Homomorphism(GroupPtr source, GroupPtr target, std::vector<int> map);

  const GroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  const std::vector<int>& map() const { return map_; }
  int operator()(int i) const { return map_[static_cast<size_t>(i)]; }

  bool operator==(const Homomorphism& other) const {
    return *source_ == *other.source_ && *target_ == *other.target_ && map_ == other.map_;
  }

 private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<int> map_;
};

Homomorphism identity_hom(const GroupPtr& g);

bool is_automorphism(const Homomorphism& h);

// h1 after h2; requires h2.target = h1.source (Error("DomainMismatch")).
Homomorphism compose(const Homomorphism& h1, const Homomorphism& h2);

// Sorted element indices with h(a) = identity; asserts closure under product
// and inverse (a defect if violated, since h is a verified homomorphism).
std::vector<int> kernel(const Homomorphism& h);

// All homomorphisms source -> target, enumerated by backtracking over the
// images of a greedy generating set; deterministic order. Intended for the
// small groups used here (|G| <= 16 in the randomized campaign).
std::vector<Homomorphism> enumerate_homomorphisms(const GroupPtr& source,
                                                  const GroupPtr& target);
std::vector<Homomorphism> enumerate_automorphisms(const GroupPtr& g);

// Verified free action of a group on an ordered alphabet.
// perms[b][x] is the image letter index of x under b.
class FiniteAction {
 public:
  // Verifies one permutation per element, the homomorphism property into the
  // symmetric group (Error("NotAnAction")) and freeness (Error("NotFree")
  // with witness (b, x)).
  FiniteAction(GroupPtr group, std::vector<std::string> alphabet,
               std::vector<std::vector<int>> perms);

  const GroupPtr& group() const { return group_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  int alphabet_size() const { return static_cast<int>(alphabet_.size()); }
  int apply(int b, int x) const { return perms_[static_cast<size_t>(b)][static_cast<size_t>(x)]; }
  const std::vector<std::vector<int>>& perms() const { return perms_; }
  bool transitive() const { return transitive_; }

 private:
  GroupPtr group_;
  std::vector<std::string> alphabet_;
  std::vector<std::vector<int>> perms_;
  bool transitive_ = false;
};

}  // namespace multispinal
