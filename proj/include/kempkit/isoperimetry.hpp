#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "kempkit/subset.hpp"

namespace kempkit {

/// |X + S| for every X ⊆ G, tabulated once so that κ_k, fragments and atoms
/// for all k come from a single pass. Memory is 2^|G| bytes.
class CayleyProfile {
 public:
  /// `jobs` > 1 splits the table fill across threads.
  CayleyProfile(Group g, Mask s, int jobs = 1);

  const Group& group() const noexcept { return group_; }
  Mask s() const noexcept { return s_; }
  int sum_size(Mask x) const { return table_[x]; }

  /// Some X has |X| >= k and |G \ (X+S)| >= k.
  bool separable(int k) const;
  /// κ_k, with the |G|-2k+1 value when S is not k-separable.
  int kappa(int k) const;
  /// X with |X| >= k, |G \ (X+S)| >= k and |∂X| = κ_k, in mask order. Empty
  /// when S is not k-separable.
  std::vector<Mask> fragments(int k) const;
  /// Minimum-cardinality fragments.
  std::vector<Mask> atoms(int k) const;

 private:
  struct KStats {
    bool separable = false;
    int kappa = 0;
  };
  const KStats& stats(int k) const;

  Group group_;
  Mask s_;
  std::vector<std::uint8_t> table_;
  mutable std::vector<std::optional<KStats>> stats_;
};

struct KappaOptions {
  /// List every k-fragment rather than up to `fragment_limit` witnesses.
  bool all_fragments = false;
  std::size_t fragment_limit = 64;
  int jobs = 1;
};

struct KappaReport {
  GroupSubset S;
  int k = 1;
  bool separable = false;
  int kappa = 0;
  /// k-fragments in mask order; all of them when `fragments_complete`.
  std::vector<GroupSubset> fragments;
  bool fragments_complete = true;
  /// Every k-atom, in mask order.
  std::vector<GroupSubset> atoms;
};

struct HyperAtomReport {
  enum class Shape { ArithmeticProgression, VosperSubset, Both, Neither };

  GroupSubset S;
  /// Maximal-cardinality subgroup 1-fragment with the smallest mask.
  Subgroup hyper_atom;
  /// Every maximal-cardinality subgroup 1-fragment, in mask order.
  std::vector<Subgroup> all_maximal;
  int kappa1 = 0;
  /// Shape of φ(S) in G / hyper_atom.
  Shape quotient_shape = Shape::Neither;
  GroupSubset quotient_image;
};

const char* to_string(HyperAtomReport::Shape shape);

struct VosperCheck {
  bool is_vosper = false;
  /// First X (in mask order) with |X| >= 2 and |X+S| < min(|G|-1, |X|+|S|).
  std::optional<GroupSubset> witness;
};

bool is_generating(const GroupSubset& s);

/// (X + S) \ X. Throws Precondition unless 0 ∈ S.
GroupSubset boundary(const GroupSubset& s, const GroupSubset& x);
/// G \ (X + S). Throws Precondition unless 0 ∈ S.
GroupSubset dual_complement(const GroupSubset& s, const GroupSubset& x);

/// Exact κ_k by enumerating all subsets. Requires 0 ∈ S, <S> = G and
/// |G| >= 2k-1 (NotGenerating / UndefinedConnectivity otherwise). When S is
/// not k-separable the fragments and atoms are the k-element sets.
KappaReport kappa(const GroupSubset& s, int k, const KappaOptions& options = {});

/// Requires 0 ∈ S, <S> = G and S 1-separable (Precondition otherwise).
HyperAtomReport hyper_atom(const GroupSubset& s);

/// Exhaustive X-scan, cross-checked against the κ_2 characterisation (non
/// 2-separable or κ_2 >= |S|); a disagreement throws InternalInvariant.
VosperCheck is_vosper_subset(const GroupSubset& s);

/// k pairs (x_i, y_i), x_i ∈ X distinct, y_i ∉ X distinct, y_i ∈ x_i + S,
/// from a maximum matching between X and ∂_S(X). Needs 0 ∈ S, k <= κ_1(S) and
/// min(|G|-|X|, |X|) >= k.
std::vector<std::pair<Element, Element>> strong_iso_selection(const GroupSubset& s,
                                                              const GroupSubset& x, int k);

/// Evaluates (X^S)^{-S} + S == X + S.
bool check_duality(const GroupSubset& s, const GroupSubset& x);

}  // namespace kempkit
