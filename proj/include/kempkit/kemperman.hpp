#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kempkit/setops.hpp"

namespace kempkit {

enum class PairTag { SP1, SP2, SP3, SP4 };
enum class Side { A, B };

const char* to_string(PairTag tag);
std::optional<PairTag> parse_pair_tag(std::string_view text);

/// Which elementary configuration a pair (A, B) realises, with the data that
/// proves it. Only the witnesses for `tag` are set.
struct ElementaryPairKind {
  PairTag tag = PairTag::SP2;
  /// SP1, SP2 and SP3 pairs are strict.
  bool strict = true;
  std::optional<Element> d;          // SP1: common difference
  std::optional<Side> singleton;     // SP2: the side with one element
  std::optional<Subgroup> H;         // SP3, SP4
  std::optional<Element> g;          // SP3: g - B = (A's H-coset) \ A
  std::optional<Element> c;          // SP4: the unique c with r_{A,B}(c) = 1
};

struct ClassifyOptions {
  /// Accept SP4 subgroups of any order, not only prime ones. Comparison mode
  /// for the original, larger class.
  bool any_order_sp4 = false;
};

/// Checks SP2, SP1, SP3, SP4 in that order; first match wins.
std::optional<ElementaryPairKind> classify_elementary(const GroupSubset& a, const GroupSubset& b,
                                                      const ClassifyOptions& options = {});
/// Every matching tag, in the same order.
std::vector<ElementaryPairKind> classify_all(const GroupSubset& a, const GroupSubset& b,
                                             const ClassifyOptions& options = {});
/// Re-checks the defining clause of `kind` for (A, B). Returns the failure
/// reason, e.g. "SP1 witness fails", or nullopt when the witness holds.
std::optional<std::string> pair_kind_failure(const GroupSubset& a, const GroupSubset& b,
                                             const ElementaryPairKind& kind,
                                             const ClassifyOptions& options = {});

struct ConditionI {
  bool holds = false;
  bool sum_size_critical = false;
  bool sum_periodic = false;
  bool unique_expression_exists = false;
  int sum_size = 0;
  GroupSubset sum;
  Subgroup period;
  /// Smallest c with r_{A,B}(c) = 1.
  std::optional<Element> unique_c;
};

/// |A+B| = |A|+|B|-1, and some c has r_{A,B}(c) = 1 when A+B is periodic.
/// Throws Precondition for empty sets or |G| < 2.
ConditionI check_condition_I(const GroupSubset& a, const GroupSubset& b);

struct QuasiperiodDichotomy {
  enum class Branch { QuasiPeriodic, StrictElementary };
  Branch branch = Branch::StrictElementary;
  /// Branch (i): smallest proper nonzero K admitting decompositions of both.
  std::optional<Subgroup> K;
  std::optional<QuasiPeriodicDecomposition> decomposition_s;
  std::optional<QuasiPeriodicDecomposition> decomposition_t;
  /// Branch (ii).
  std::optional<ElementaryPairKind> kind;
  /// K = G always admits (∅, S), (∅, T); reported, never used as branch (i).
  bool whole_group_decomposes = true;
};

/// Requires |S+T| = |S|+|T|-1 with S+T aperiodic. Throws TheoremFalsified if
/// neither branch applies.
QuasiperiodDichotomy quasiperiod_or_elementary(const GroupSubset& s, const GroupSubset& t);

struct KempermanCertificate {
  /// Aperiodic: subgroup scan. Periodic: coset cut along a prime-order
  /// period. PeriodicScan: periodic sum where no cut works and the subgroup
  /// scan supplied the witness.
  enum class Branch { Aperiodic, Periodic, PeriodicScan };

  Subgroup H;
  QuasiPeriodicDecomposition decomp_a;
  QuasiPeriodicDecomposition decomp_b;
  ElementaryPairKind pair_kind;
  /// Minimal element of the coset φ(a_1) + φ(b_1).
  Element quotient_unique_at = 0;
  Branch branch = Branch::Aperiodic;

  const Group& group() const noexcept { return H.group(); }
  GroupSubset a() const { return decomp_a.whole(); }
  GroupSubset b() const { return decomp_b.whole(); }
};

/// "aperiodic", "periodic" or "periodic-scan".
const char* to_string(KempermanCertificate::Branch branch);

/// First certificate over nonzero subgroups H in (cardinality, mask) order and
/// decomposition pairs in order, with no precondition on (A, B).
std::optional<KempermanCertificate> find_certificate(const GroupSubset& a, const GroupSubset& b,
                                                     const ClassifyOptions& options = {});

/// Builds a condition-(II) certificate for a pair satisfying condition (I).
/// Aperiodic sums use the subgroup scan. Periodic sums first try each
/// prime-order subgroup H of the period and each uniquely expressed c, cutting
/// A and B along the H-cosets of a_c and b_c; the cut is accepted only when
/// |φ(A)+φ(B)| = |φ(A)|+|φ(B)|-1 and the pieces certify. Otherwise the
/// subgroup scan is used. Throws Precondition when (I) fails and
/// TheoremFalsified when no certificate exists. With prime-order SP4 that
/// happens for some pairs whose sum is the whole group, e.g. Z6, {0,1,2},
/// {0,1,2,4}; `options.any_order_sp4` restores the larger SP4 class, under
/// which every condition-(I) pair has a certificate.
KempermanCertificate build_certificate(const GroupSubset& a, const GroupSubset& b,
                                       const ClassifyOptions& options = {});

struct CertificateCheck {
  bool ok = false;
  std::string reason;
};

/// Re-derives A and B from the parts, checks every certificate clause, the
/// quotient criticality |φ(A)+φ(B)| = |φ(A)|+|φ(B)|-1, and finally condition
/// (I) for the reconstructed pair. The quotient clause does not follow from
/// the unique expression of φ(a_1)+φ(b_1): Z8 with A = {0,1,4}, B = {0,2,4},
/// H = {0,4} meets every other clause while |A+B| = 7.
CertificateCheck verify_certificate(const KempermanCertificate& cert,
                                    const ClassifyOptions& options = {});

/// |φ(A) + φ(B)| - |φ(A)| - |φ(B)| + 1 for φ : G -> G/H, computed through
/// H-saturations in G.
int quotient_excess(const GroupSubset& a, const GroupSubset& b, const Subgroup& h);

}  // namespace kempkit
