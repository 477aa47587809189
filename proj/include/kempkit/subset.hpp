#pragma once

#include <bit>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "kempkit/group.hpp"

namespace kempkit {

/// A subset of one group, stored as a bitmask over element indices.
class GroupSubset {
 public:
  GroupSubset(Group group, Mask bits);

  static GroupSubset empty(const Group& g) { return GroupSubset(g, 0); }
  static GroupSubset full(const Group& g) { return GroupSubset(g, g.full()); }
  static GroupSubset of(const Group& g, std::span<const Element> elems);
  static GroupSubset of(const Group& g, std::initializer_list<Element> elems) {
    return of(g, std::span<const Element>(elems.begin(), elems.size()));
  }

  const Group& group() const noexcept { return group_; }
  Mask bits() const noexcept { return bits_; }
  int size() const noexcept { return std::popcount(bits_); }
  bool is_empty() const noexcept { return bits_ == 0; }
  bool contains(Element x) const noexcept { return (bits_ >> x) & 1; }
  bool subset_of(const GroupSubset& other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  /// Smallest element index; the set must be nonempty.
  Element min_element() const noexcept { return std::countr_zero(bits_); }
  /// Members in increasing index order.
  std::vector<Element> elements() const;

  /// "{(0),(3)}" using the group's tuple rendering.
  std::string to_string() const;

  friend bool operator==(const GroupSubset& a, const GroupSubset& b) noexcept {
    return a.bits_ == b.bits_ && a.group_ == b.group_;
  }

 private:
  Group group_;
  Mask bits_;
};

/// A subgroup carrier. Construction through `Subgroup::check` validates
/// closure; `trusted` is for carriers produced by the group's own lattice.
class Subgroup {
 public:
  /// Throws Precondition if `carrier` is not a subgroup.
  static Subgroup check(const GroupSubset& carrier);
  static Subgroup trusted(const Group& g, Mask bits) {
    return Subgroup(GroupSubset(g, bits));
  }
  static Subgroup trivial(const Group& g) { return trusted(g, 1); }
  static Subgroup whole(const Group& g) { return trusted(g, g.full()); }

  const GroupSubset& carrier() const noexcept { return carrier_; }
  const Group& group() const noexcept { return carrier_.group(); }
  Mask bits() const noexcept { return carrier_.bits(); }
  int order() const noexcept { return carrier_.size(); }
  bool is_trivial() const noexcept { return carrier_.bits() == 1; }
  bool is_whole() const noexcept { return carrier_.bits() == group().full(); }
  bool contains(Element x) const noexcept { return carrier_.contains(x); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) noexcept {
    return a.carrier_ == b.carrier_;
  }

 private:
  explicit Subgroup(GroupSubset carrier) : carrier_(std::move(carrier)) {}
  GroupSubset carrier_;
};

/// True iff `m` contains 0 and is closed under addition and negation.
bool is_subgroup_mask(const Group& g, Mask m);

/// The canonical projection G -> G/H. The target is table-backed; its element
/// i is the coset whose minimal member is `label(i)`, and labels increase with
/// i, so the identity coset is element 0.
class Morphism {
 public:
  Morphism(Group source, Group target, Subgroup kernel, std::vector<Element> coset_of,
           std::vector<Element> labels);

  const Group& source() const noexcept { return source_; }
  const Group& target() const noexcept { return target_; }
  const Subgroup& kernel() const noexcept { return kernel_; }
  Element coset_of(Element x) const { return coset_of_[x]; }
  /// Minimal source element of target coset `y`.
  Element label(Element y) const { return labels_[y]; }

  Mask image(Mask source_bits) const;
  Mask preimage(Mask target_bits) const;
  GroupSubset image(const GroupSubset& x) const;
  GroupSubset preimage(const GroupSubset& x) const;

 private:
  Group source_;
  Group target_;
  Subgroup kernel_;
  std::vector<Element> coset_of_;
  std::vector<Element> labels_;
  std::vector<Mask> fibers_;
};

/// Every subgroup exactly once, sorted by (cardinality, carrier mask).
std::vector<Subgroup> enumerate_subgroups(const Group& g);

/// <X>; the trivial subgroup when X is empty.
Subgroup subgroup_generated(const GroupSubset& x);

/// G/H with its canonical morphism.
Morphism quotient(const Subgroup& h);

/// Union of the fibers over `x`; `x` must live in m.target().
GroupSubset preimage(const Morphism& m, const GroupSubset& x);

/// Minimal element of the coset x + H.
Element coset_label(const Subgroup& h, Element x);

}  // namespace kempkit
