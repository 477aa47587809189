#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kempkit {

/// Index of a group element in [0, |G|). Index 0 is the identity.
using Element = int;

/// Subset of a group as a bitmask; bit i set iff element i is a member.
using Mask = std::uint64_t;

/// Largest order any group may have, independent of the configured cap.
inline constexpr int kMaxSupportedOrder = 64;

/// Order cap used by make_group when none is passed. Reads KEMPKIT_CAP once,
/// falling back to 24.
int default_cap();

/// A finite abelian group Z_{d1} x ... x Z_{dr}, or a table-backed group
/// (quotients). Elements of product groups are indexed in mixed radix with
/// the first factor most significant, so (x1,...,xr) has index
/// ((x1*d2 + x2)*d3 + ...). Copies share one immutable representation.
class Group {
 public:
  /// Throws InvalidSpec for a factor < 2 and CapExceeded when the product
  /// exceeds `cap`. An empty list yields the trivial group.
  static Group cyclic_product(std::span<const int> orders, int cap);
  static Group cyclic_product(std::span<const int> orders) {
    return cyclic_product(orders, default_cap());
  }

  /// Group on 0..n-1 with the given addition table (row-major n*n). The
  /// table must describe an abelian group with identity 0; this is checked.
  static Group from_table(std::vector<Element> table, std::string label);

  int order() const noexcept;
  const std::vector<int>& orders() const noexcept;
  bool table_backed() const noexcept;

  Element add(Element x, Element y) const;
  Element neg(Element x) const;
  Element sub(Element x, Element y) const { return add(x, neg(y)); }
  /// Order of x as a group element (smallest m >= 1 with m*x = 0).
  int element_order(Element x) const;

  Mask full() const noexcept;
  /// {x + t : x in m}.
  Mask translate(Mask m, Element t) const;
  /// {-x : x in m}.
  Mask negate(Mask m) const;
  /// Minkowski sum; loops over the smaller operand.
  Mask sumset(Mask a, Mask b) const;

  /// Residue tuple of x. Table-backed groups return {x}.
  std::vector<int> tuple(Element x) const;
  /// Inverse of tuple(); throws Parse on a malformed tuple.
  Element from_tuple(std::span<const int> residues) const;
  /// "(1,3)"; table-backed groups render "[x]".
  std::string format(Element x) const;

  /// Canonical spec string, e.g. "Z2xZ4" or "trivial".
  const std::string& spec() const noexcept;
  /// Invariant-factor normal form, e.g. Z2xZ3 -> "Z6", Z6xZ2 -> "Z2xZ6".
  std::string invariant_key() const;

  /// Carriers of all subgroups, sorted by (cardinality, mask). Computed on
  /// first use and cached.
  const std::vector<Mask>& subgroup_masks() const;
  /// Smallest subgroup containing `m` (the trivial subgroup for m = 0).
  Mask closure(Mask m) const;

  bool same_as(const Group& other) const noexcept;
  friend bool operator==(const Group& a, const Group& b) noexcept {
    return a.same_as(b);
  }

 private:
  struct Impl;
  explicit Group(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Parse "Z5", "z2xZ4", "trivial" (case-insensitive). Throws InvalidSpec.
Group parse_group(std::string_view spec, int cap);
inline Group parse_group(std::string_view spec) {
  return parse_group(spec, default_cap());
}

/// Convenience wrapper matching the make_group operation.
inline Group make_group(std::span<const int> orders, int cap) {
  return Group::cyclic_product(orders, cap);
}
inline Group make_group(std::initializer_list<int> orders) {
  return Group::cyclic_product(std::vector<int>(orders));
}

/// All non-decreasing factor lists (each >= 2) with product in [2, max_order].
/// Isomorphic duplicates (Z6 and Z2xZ3) are both present.
std::vector<std::vector<int>> factor_lists_up_to(int max_order);

}  // namespace kempkit
