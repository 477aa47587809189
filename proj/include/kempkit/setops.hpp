#pragma once

#include <optional>
#include <vector>

#include "kempkit/subset.hpp"

namespace kempkit {

/// A = part0 ∪ part1 with part0 + K = part0 and part1 inside one K-coset.
struct QuasiPeriodicDecomposition {
  Subgroup K;
  GroupSubset part0;
  GroupSubset part1;
  /// Minimal element of the coset holding part1; empty when part1 is empty.
  std::optional<Element> coset_rep;

  GroupSubset whole() const;
};

/// {a + b}; empty if either side is empty. Throws GroupMismatch.
GroupSubset sumset(const GroupSubset& a, const GroupSubset& b);

/// Stabilizer {h : A + h = A}. Throws UndefinedPeriod for the empty set.
Subgroup period(const GroupSubset& a);
bool is_aperiodic(const GroupSubset& a);
/// A + K = A (true for the empty set).
bool is_periodic_under(const GroupSubset& a, const Subgroup& k);

/// Number of pairs (a, b) in A x B with a + b = x.
int rep_count(const GroupSubset& a, const GroupSubset& b, Element x);
/// rep_count for every x, indexed by element.
std::vector<int> rep_counts(const GroupSubset& a, const GroupSubset& b);

/// Every d such that A = {a, a+d, ..., a+(|A|-1)d} with distinct terms, in
/// increasing order. Singletons yield all of G; an empty result means A is not
/// an arithmetic progression.
std::vector<Element> ap_differences(const GroupSubset& a);
bool is_arithmetic_progression(const GroupSubset& a);

/// All K-quasi-periodic splits of A: one per K-coset c+K meeting A whose
/// remainder is K-periodic (ordered by coset label), then (A, ∅) if A itself
/// is K-periodic.
std::vector<QuasiPeriodicDecomposition> quasi_periodic_decompositions(const GroupSubset& a,
                                                                     const Subgroup& k);
/// Checks the four decomposition invariants against `whole`.
bool is_valid_decomposition(const QuasiPeriodicDecomposition& d, const GroupSubset& whole);

GroupSubset translate(const GroupSubset& a, Element x);
GroupSubset negate(const GroupSubset& a);
GroupSubset complement(const GroupSubset& a);
GroupSubset set_union(const GroupSubset& a, const GroupSubset& b);
GroupSubset set_intersection(const GroupSubset& a, const GroupSubset& b);
GroupSubset set_difference(const GroupSubset& a, const GroupSubset& b);

/// Mask-level kernels shared by the sweeps.
namespace masks {

Mask period(const Group& g, Mask a);
int rep_count(const Group& g, Mask a, Mask b, Element x);
std::vector<Element> ap_differences(const Group& g, Mask a);
bool shares_ap_difference(const Group& g, Mask a, Mask b, int min_order);

}  // namespace masks

}  // namespace kempkit
