#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kempkit/group.hpp"

namespace kempkit {

/// Outcome of one exhaustive (or sampled) sweep of a theorem over a universe
/// of instances. `violations` holds serialized counterexamples, capped at
/// `violation_limit`; `violation_count` is the exact total.
struct TheoremReport {
  std::string theorem_id;
  std::string universe;
  std::uint64_t checked = 0;
  std::uint64_t violation_count = 0;
  std::vector<nlohmann::json> violations;
  double elapsed = 0.0;

  bool ok() const noexcept { return violation_count == 0; }
  void add_violation(nlohmann::json counterexample, std::size_t limit);
  /// Folds another report for the same theorem into this one.
  void merge(const TheoremReport& other, std::size_t limit);
};

nlohmann::json report_to_json(const TheoremReport& report);

struct SweepOptions {
  int jobs = 1;
  std::size_t violation_limit = 16;
};

/// |A+B| >= |A+H|+|B+H|-|H| with H the period of A+B, every nonempty pair.
TheoremReport verify_kneser(const Group& g, const SweepOptions& options = {});
/// |X+Y| >= |X|+|Y|-1 whenever some c has |X ∩ (c-Y)| = 1.
TheoremReport verify_scherk(const Group& g, const SweepOptions& options = {});
/// The special case A ∩ (-B) = {0}.
TheoremReport verify_scherk_appendix(const Group& g, const SweepOptions& options = {});
/// |A|+|B| >= |G|+t implies r_{A,B}(x) >= t for every x.
TheoremReport verify_prehistorical(const Group& g, const SweepOptions& options = {});

/// Critical pairs in Z_p with |A|,|B| >= 2 and |A+B| <= p-2 share an AP
/// difference. Throws InvalidSpec unless p is a prime <= 13.
TheoremReport verify_vosper_prime(int p, const SweepOptions& options = {});
/// |A+B| >= min(p, |A|+|B|-1) for all nonempty pairs in Z_p.
TheoremReport verify_cauchy_davenport(int p, const SweepOptions& options = {});
/// Progressions of a common difference with |A|+|B|-1 <= p are critical.
TheoremReport verify_vosper_equality(int p, const SweepOptions& options = {});

/// One report per isoperimetric sub-check, swept over every generating S ∋ 0.
/// Ids: isoperimetric-inequality, kappa-upper-bound, olson, subgroup-atom,
/// atom-intersection, fragments-1-2, two-atom, vosper-fragment, duality,
/// vosper-deletion, quotient-kappa, quotient-preimage, hyper-atom-shape,
/// hyper-atom-deletion, plagne, ap-kappa, nonseparable-convention, strong-iso.
std::vector<TheoremReport> verify_isoperimetry(const Group& g, const SweepOptions& options = {});
const std::vector<std::string>& isoperimetry_check_ids();

/// (I) <=> (II) over every nonempty pair. With `any_order_sp4` the larger SP4
/// class is used for certificates.
TheoremReport verify_kemperman_equivalence(const Group& g, bool any_order_sp4 = false,
                                           const SweepOptions& options = {});
/// quasiperiod_or_elementary over every critical pair with aperiodic sum.
TheoremReport verify_dichotomy(const Group& g, const SweepOptions& options = {});

/// Runs a named oracle on one group (or on Z_p for the prime-only ids) and
/// returns its reports. Throws InvalidSpec for unknown ids.
std::vector<TheoremReport> run_oracle(const std::string& id, const Group& g,
                                      const SweepOptions& options = {});
const std::vector<std::string>& oracle_ids();

// ---------------------------------------------------------------------------
// Census

enum class CensusMode { Exhaustive, Sample };

inline constexpr int kCensusExhaustiveLimit = 10;
inline constexpr int kCensusMaxOrder = 16;

struct CensusOptions {
  int max_order = 8;
  CensusMode mode = CensusMode::Exhaustive;
  /// Pairs drawn per group when sampling (always for orders above the
  /// exhaustive limit).
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
  int jobs = 1;
  /// Emit a record for every swept pair, not only condition-(I) pairs.
  bool emit_all = false;
  /// Also histogram hyper-atom sizes over generating S ∋ 0 (orders up to the
  /// exhaustive limit).
  bool hyper_atoms = true;
  /// Build certificates with SP4 subgroups of any order.
  bool any_order_sp4 = false;
};

struct CensusGroupStats {
  std::string spec;
  std::string key;
  int order = 0;
  bool exhaustive = true;
  std::uint64_t pairs = 0;
  std::uint64_t condition_I = 0;
  std::uint64_t certified = 0;
  std::uint64_t alarms = 0;
  /// Alarmed pairs that Kemperman's larger SP4 class does certify.
  std::uint64_t alarms_certified_any_order_sp4 = 0;
  std::map<std::string, std::uint64_t> pair_kinds;
  std::map<std::string, std::uint64_t> branches;
};

struct CensusSummary {
  CensusOptions options;
  std::vector<CensusGroupStats> groups;
  std::map<std::string, std::uint64_t> pair_kinds;
  std::uint64_t sp4_total = 0;
  std::uint64_t sp4_nonprime = 0;
  std::map<int, std::uint64_t> hyper_atom_sizes;
  std::uint64_t condition_I = 0;
  std::uint64_t certified = 0;
  std::uint64_t alarms = 0;
  std::uint64_t verification_failures = 0;
  std::vector<nlohmann::json> alarm_examples;

  bool clean() const noexcept { return alarms == 0 && verification_failures == 0; }
};

nlohmann::json summary_to_json(const CensusSummary& summary);

/// Sweeps every factor list up to `max_order` (order-1 group skipped) and
/// writes one census/1 JSON line per emitted pair to `out`, in a fixed order
/// independent of `jobs`. Throws CapExceeded for max_order above 16.
CensusSummary run_census(const CensusOptions& options, std::ostream& out);

}  // namespace kempkit
