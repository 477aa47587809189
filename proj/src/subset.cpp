#include "kempkit/subset.hpp"

#include "kempkit/error.hpp"

namespace kempkit {

GroupSubset::GroupSubset(Group group, Mask bits) : group_(std::move(group)), bits_(bits) {
  if ((bits_ & ~group_.full()) != 0) {
    throw Error(ErrorKind::Precondition, "subset has bits beyond the group order");
  }
}

GroupSubset GroupSubset::of(const Group& g, std::span<const Element> elems) {
  Mask m = 0;
  for (Element x : elems) {
    if (x < 0 || x >= g.order()) {
      throw Error(ErrorKind::Precondition,
                  "element index " + std::to_string(x) + " out of range for " + g.spec());
    }
    m |= Mask{1} << x;
  }
  return GroupSubset(g, m);
}

std::vector<Element> GroupSubset::elements() const {
  std::vector<Element> out;
  out.reserve(size());
  for (Mask m = bits_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::string GroupSubset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Element x : elements()) {
    if (!first) out += ',';
    first = false;
    out += group_.format(x);
  }
  return out + "}";
}

bool is_subgroup_mask(const Group& g, Mask m) {
  if ((m & 1) == 0) return false;
  if (g.sumset(m, m) != m) return false;
  return g.negate(m) == m;
}

Subgroup Subgroup::check(const GroupSubset& carrier) {
  if (!is_subgroup_mask(carrier.group(), carrier.bits())) {
    throw Error(ErrorKind::Precondition, carrier.to_string() + " is not a subgroup");
  }
  return Subgroup(carrier);
}

Morphism::Morphism(Group source, Group target, Subgroup kernel, std::vector<Element> coset_of,
                   std::vector<Element> labels)
    : source_(std::move(source)),
      target_(std::move(target)),
      kernel_(std::move(kernel)),
      coset_of_(std::move(coset_of)),
      labels_(std::move(labels)),
      fibers_(target_.order(), 0) {
  for (Element x = 0; x < source_.order(); ++x) fibers_[coset_of_[x]] |= Mask{1} << x;
}

Mask Morphism::image(Mask source_bits) const {
  Mask out = 0;
  for (; source_bits != 0; source_bits &= source_bits - 1) {
    out |= Mask{1} << coset_of_[std::countr_zero(source_bits)];
  }
  return out;
}

Mask Morphism::preimage(Mask target_bits) const {
  Mask out = 0;
  for (; target_bits != 0; target_bits &= target_bits - 1) {
    out |= fibers_[std::countr_zero(target_bits)];
  }
  return out;
}

GroupSubset Morphism::image(const GroupSubset& x) const {
  if (!(x.group() == source_)) throw Error(ErrorKind::GroupMismatch, "image: wrong group");
  return GroupSubset(target_, image(x.bits()));
}

GroupSubset Morphism::preimage(const GroupSubset& x) const {
  if (!(x.group() == target_)) throw Error(ErrorKind::GroupMismatch, "preimage: wrong group");
  return GroupSubset(source_, preimage(x.bits()));
}

std::vector<Subgroup> enumerate_subgroups(const Group& g) {
  std::vector<Subgroup> out;
  for (Mask m : g.subgroup_masks()) out.push_back(Subgroup::trusted(g, m));
  return out;
}

Subgroup subgroup_generated(const GroupSubset& x) {
  return Subgroup::trusted(x.group(), x.group().closure(x.bits()));
}

Element coset_label(const Subgroup& h, Element x) {
  return std::countr_zero(h.group().translate(h.bits(), x));
}

Morphism quotient(const Subgroup& h) {
  const Group& g = h.group();
  const int n = g.order();
  std::vector<Element> labels;
  std::vector<Element> coset_of(n, -1);
  for (Element x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    const Element idx = static_cast<Element>(labels.size());
    labels.push_back(x);
    for (Mask m = g.translate(h.bits(), x); m != 0; m &= m - 1) {
      coset_of[std::countr_zero(m)] = idx;
    }
  }
  const int q = static_cast<int>(labels.size());
  std::vector<Element> table(static_cast<std::size_t>(q) * q);
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) table[i * q + j] = coset_of[g.add(labels[i], labels[j])];
  }
  std::string label = g.spec() + "/" + std::to_string(h.order());
  Group target = Group::from_table(std::move(table), std::move(label));
  return Morphism(g, std::move(target), h, std::move(coset_of), std::move(labels));
}

GroupSubset preimage(const Morphism& m, const GroupSubset& x) { return m.preimage(x); }

}  // namespace kempkit
