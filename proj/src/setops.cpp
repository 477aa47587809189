#include "kempkit/setops.hpp"

#include <algorithm>

#include "kempkit/error.hpp"

namespace kempkit {

namespace {

void require_same_group(const GroupSubset& a, const GroupSubset& b, const char* op) {
  if (!(a.group() == b.group())) {
    throw Error(ErrorKind::GroupMismatch, std::string(op) + ": operands live in " +
                                              a.group().spec() + " and " + b.group().spec());
  }
}

}  // namespace

namespace masks {

Mask period(const Group& g, Mask a) {
  Mask h = 0;
  for (Element x = 0; x < g.order(); ++x) {
    if (g.translate(a, x) == a) h |= Mask{1} << x;
  }
  return h;
}

int rep_count(const Group& g, Mask a, Mask b, Element x) {
  // |(x - B) ∩ A|
  return std::popcount(g.translate(g.negate(b), x) & a);
}

std::vector<Element> ap_differences(const Group& g, Mask a) {
  std::vector<Element> out;
  const int len = std::popcount(a);
  if (len == 0) return out;
  if (len == 1) {
    for (Element d = 0; d < g.order(); ++d) out.push_back(d);
    return out;
  }
  for (Element d = 1; d < g.order(); ++d) {
    const int ord = g.element_order(d);
    if (ord < len) continue;
    // Starts: members whose predecessor x - d is absent.
    const Mask starts = a & ~g.translate(a, d);
    Element start;
    if (starts == 0) {
      // A is a union of <d>-cosets; it is a progression iff it is one coset.
      if (ord != len) continue;
      start = std::countr_zero(a);
    } else {
      if (std::popcount(starts) != 1) continue;
      start = std::countr_zero(starts);
    }
    Mask run = 0;
    Element x = start;
    for (int i = 0; i < len; ++i, x = g.add(x, d)) run |= Mask{1} << x;
    if (run == a) out.push_back(d);
  }
  return out;
}

bool shares_ap_difference(const Group& g, Mask a, Mask b, int min_order) {
  auto da = ap_differences(g, a);
  auto db = ap_differences(g, b);
  for (Element d : da) {
    if (g.element_order(d) >= min_order && std::binary_search(db.begin(), db.end(), d)) {
      return true;
    }
  }
  return false;
}

}  // namespace masks

GroupSubset QuasiPeriodicDecomposition::whole() const { return set_union(part0, part1); }

GroupSubset sumset(const GroupSubset& a, const GroupSubset& b) {
  require_same_group(a, b, "sumset");
  return GroupSubset(a.group(), a.group().sumset(a.bits(), b.bits()));
}

Subgroup period(const GroupSubset& a) {
  if (a.is_empty()) throw Error(ErrorKind::UndefinedPeriod, "period of the empty set");
  return Subgroup::trusted(a.group(), masks::period(a.group(), a.bits()));
}

bool is_aperiodic(const GroupSubset& a) { return period(a).is_trivial(); }

bool is_periodic_under(const GroupSubset& a, const Subgroup& k) {
  require_same_group(a, k.carrier(), "is_periodic_under");
  return a.group().sumset(a.bits(), k.bits()) == a.bits();
}

int rep_count(const GroupSubset& a, const GroupSubset& b, Element x) {
  require_same_group(a, b, "rep_count");
  return masks::rep_count(a.group(), a.bits(), b.bits(), x);
}

std::vector<int> rep_counts(const GroupSubset& a, const GroupSubset& b) {
  require_same_group(a, b, "rep_counts");
  const Group& g = a.group();
  std::vector<int> out(g.order(), 0);
  for (Element x : a.elements()) {
    for (Element y : b.elements()) ++out[g.add(x, y)];
  }
  return out;
}

std::vector<Element> ap_differences(const GroupSubset& a) {
  return masks::ap_differences(a.group(), a.bits());
}

bool is_arithmetic_progression(const GroupSubset& a) { return !ap_differences(a).empty(); }

std::vector<QuasiPeriodicDecomposition> quasi_periodic_decompositions(const GroupSubset& a,
                                                                     const Subgroup& k) {
  require_same_group(a, k.carrier(), "quasi_periodic_decompositions");
  const Group& g = a.group();
  std::vector<QuasiPeriodicDecomposition> out;
  Mask seen = 0;
  for (Element x = 0; x < g.order(); ++x) {
    if ((seen >> x) & 1) continue;
    const Mask coset = g.translate(k.bits(), x);
    seen |= coset;
    const Mask part1 = a.bits() & coset;
    if (part1 == 0) continue;
    const Mask part0 = a.bits() & ~coset;
    if (g.sumset(part0, k.bits()) != part0) continue;
    out.push_back({k, GroupSubset(g, part0), GroupSubset(g, part1), x});
  }
  if (g.sumset(a.bits(), k.bits()) == a.bits()) {
    out.push_back({k, a, GroupSubset::empty(g), std::nullopt});
  }
  return out;
}

bool is_valid_decomposition(const QuasiPeriodicDecomposition& d, const GroupSubset& whole) {
  const Group& g = whole.group();
  if (!(d.part0.group() == g) || !(d.part1.group() == g) || !(d.K.group() == g)) return false;
  if (!is_subgroup_mask(g, d.K.bits())) return false;
  if ((d.part0.bits() & d.part1.bits()) != 0) return false;
  if ((d.part0.bits() | d.part1.bits()) != whole.bits()) return false;
  if (g.sumset(d.part0.bits(), d.K.bits()) != d.part0.bits()) return false;
  if (d.part1.is_empty()) return !d.coset_rep.has_value();
  if (!d.coset_rep) return false;
  const Mask coset = g.translate(d.K.bits(), *d.coset_rep);
  return (d.part1.bits() & ~coset) == 0;
}

GroupSubset translate(const GroupSubset& a, Element x) {
  return GroupSubset(a.group(), a.group().translate(a.bits(), x));
}

GroupSubset negate(const GroupSubset& a) {
  return GroupSubset(a.group(), a.group().negate(a.bits()));
}

GroupSubset complement(const GroupSubset& a) {
  return GroupSubset(a.group(), a.group().full() & ~a.bits());
}

GroupSubset set_union(const GroupSubset& a, const GroupSubset& b) {
  require_same_group(a, b, "union");
  return GroupSubset(a.group(), a.bits() | b.bits());
}

GroupSubset set_intersection(const GroupSubset& a, const GroupSubset& b) {
  require_same_group(a, b, "intersection");
  return GroupSubset(a.group(), a.bits() & b.bits());
}

GroupSubset set_difference(const GroupSubset& a, const GroupSubset& b) {
  require_same_group(a, b, "difference");
  return GroupSubset(a.group(), a.bits() & ~b.bits());
}

}  // namespace kempkit
