#include "kempkit/isoperimetry.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "kempkit/error.hpp"
#include "kempkit/parallel.hpp"
#include "kempkit/setops.hpp"

namespace kempkit {

namespace {

// 2^28 bytes of profile table is the most we allow regardless of the cap.
constexpr int kMaxProfileOrder = 28;

void require_reflexive(const GroupSubset& s, const char* op) {
  if (!s.contains(0)) {
    throw Error(ErrorKind::Precondition, std::string(op) + ": 0 must belong to S");
  }
}

void require_same(const GroupSubset& a, const GroupSubset& b, const char* op) {
  if (!(a.group() == b.group())) {
    throw Error(ErrorKind::GroupMismatch, std::string(op) + ": operands in different groups");
  }
}

void require_connectivity_defined(const Group& g, int k) {
  if (k < 1) throw Error(ErrorKind::Precondition, "k must be positive");
  if (g.order() < 2 * k - 1) {
    throw Error(ErrorKind::UndefinedConnectivity,
                "kappa_" + std::to_string(k) + " needs |G| >= " + std::to_string(2 * k - 1));
  }
}

std::vector<Mask> subsets_of_size(int n, int k) {
  std::vector<Mask> out;
  if (k > n) return out;
  if (k == 0) return {0};
  Mask m = (Mask{1} << k) - 1;
  const Mask limit = Mask{1} << n;
  while (m < limit) {
    out.push_back(m);
    const Mask low = m & -m;
    const Mask ripple = m + low;
    m = (((ripple ^ m) >> 2) / low) | ripple;
  }
  return out;
}

}  // namespace

const char* to_string(HyperAtomReport::Shape shape) {
  switch (shape) {
    case HyperAtomReport::Shape::ArithmeticProgression: return "arithmetic-progression";
    case HyperAtomReport::Shape::VosperSubset: return "vosper-subset";
    case HyperAtomReport::Shape::Both: return "both";
    case HyperAtomReport::Shape::Neither: return "neither";
  }
  return "neither";
}

CayleyProfile::CayleyProfile(Group g, Mask s, int jobs) : group_(std::move(g)), s_(s) {
  const int n = group_.order();
  if (n > kMaxProfileOrder) {
    throw Error(ErrorKind::CapExceeded,
                "exhaustive subset enumeration limited to |G| <= " +
                    std::to_string(kMaxProfileOrder));
  }
  std::vector<Mask> shifted(n);
  for (Element x = 0; x < n; ++x) shifted[x] = group_.translate(s_, x);
  table_.assign(std::size_t{1} << n, 0);

  // The top `split` bits are fixed per job; the remaining low bits are
  // enumerated depth-first, carrying X + S along.
  const int split = std::min(n, jobs > 1 ? 6 : 0);
  const int low = n - split;
  auto fill = [&](std::size_t job) {
    const Mask high = static_cast<Mask>(job) << low;
    Mask acc = 0;
    for (Mask m = high; m != 0; m &= m - 1) acc |= shifted[std::countr_zero(m)];
    struct Frame {
      Mask x;
      Mask sum;
      int next;
    };
    std::vector<Frame> stack{{high, acc, 0}};
    while (!stack.empty()) {
      Frame f = stack.back();
      stack.pop_back();
      table_[f.x] = static_cast<std::uint8_t>(std::popcount(f.sum));
      for (int i = f.next; i < low; ++i) {
        stack.push_back({f.x | Mask{1} << i, f.sum | shifted[i], i + 1});
      }
    }
  };
  parallel_for(std::size_t{1} << split, jobs, fill);

  const int max_k = (n + 1) / 2;
  stats_.assign(max_k + 1, std::nullopt);
  // best[m] = least boundary among X whose separation order min(|X|, |X^S|) is m.
  std::vector<int> best(n + 1, std::numeric_limits<int>::max());
  for (Mask x = 0; x < table_.size(); ++x) {
    const int c = std::popcount(x);
    const int sum = table_[x];
    const int m = std::min(c, n - sum);
    if (m >= 1) best[m] = std::min(best[m], sum - c);
  }
  int running = std::numeric_limits<int>::max();
  for (int k = n; k >= 1; --k) {
    running = std::min(running, best[k]);
    if (k <= max_k) {
      KStats st;
      st.separable = running != std::numeric_limits<int>::max();
      st.kappa = st.separable ? running : n - 2 * k + 1;
      stats_[k] = st;
    }
  }
}

const CayleyProfile::KStats& CayleyProfile::stats(int k) const {
  require_connectivity_defined(group_, k);
  return *stats_[k];
}

bool CayleyProfile::separable(int k) const { return stats(k).separable; }

int CayleyProfile::kappa(int k) const { return stats(k).kappa; }

std::vector<Mask> CayleyProfile::fragments(int k) const {
  const KStats& st = stats(k);
  std::vector<Mask> out;
  if (!st.separable) return out;
  const int n = group_.order();
  for (Mask x = 0; x < table_.size(); ++x) {
    const int c = std::popcount(x);
    if (c < k) continue;
    const int sum = table_[x];
    if (n - sum >= k && sum - c == st.kappa) out.push_back(x);
  }
  return out;
}

std::vector<Mask> CayleyProfile::atoms(int k) const {
  auto frags = fragments(k);
  if (frags.empty()) return frags;
  int least = std::numeric_limits<int>::max();
  for (Mask f : frags) least = std::min(least, std::popcount(f));
  std::erase_if(frags, [&](Mask f) { return std::popcount(f) != least; });
  return frags;
}

bool is_generating(const GroupSubset& s) {
  return s.group().closure(s.bits()) == s.group().full();
}

GroupSubset boundary(const GroupSubset& s, const GroupSubset& x) {
  require_same(s, x, "boundary");
  require_reflexive(s, "boundary");
  const Group& g = s.group();
  return GroupSubset(g, g.sumset(x.bits(), s.bits()) & ~x.bits());
}

GroupSubset dual_complement(const GroupSubset& s, const GroupSubset& x) {
  require_same(s, x, "dual_complement");
  require_reflexive(s, "dual_complement");
  const Group& g = s.group();
  return GroupSubset(g, g.full() & ~g.sumset(x.bits(), s.bits()));
}

KappaReport kappa(const GroupSubset& s, int k, const KappaOptions& options) {
  const Group& g = s.group();
  require_reflexive(s, "kappa");
  require_connectivity_defined(g, k);
  if (!is_generating(s)) {
    throw Error(ErrorKind::NotGenerating, s.to_string() + " does not generate " + g.spec());
  }
  CayleyProfile profile(g, s.bits(), options.jobs);
  KappaReport report{s, k, profile.separable(k), profile.kappa(k), {}, true, {}};
  if (!report.separable) {
    // Non-separable convention: fragments and atoms are the k-element sets.
    for (Mask m : subsets_of_size(g.order(), k)) report.atoms.emplace_back(g, m);
    report.fragments = report.atoms;
  } else {
    for (Mask m : profile.atoms(k)) report.atoms.emplace_back(g, m);
    for (Mask m : profile.fragments(k)) {
      report.fragments.emplace_back(g, m);
    }
  }
  if (!options.all_fragments && report.fragments.size() > options.fragment_limit) {
    report.fragments.erase(report.fragments.begin() + static_cast<std::ptrdiff_t>(options.fragment_limit),
                           report.fragments.end());
    report.fragments_complete = false;
  }
  return report;
}

HyperAtomReport hyper_atom(const GroupSubset& s) {
  const Group& g = s.group();
  require_reflexive(s, "hyper_atom");
  if (!is_generating(s)) {
    throw Error(ErrorKind::NotGenerating, s.to_string() + " does not generate " + g.spec());
  }
  CayleyProfile profile(g, s.bits());
  if (!profile.separable(1)) {
    throw Error(ErrorKind::Precondition, s.to_string() + " is not 1-separable");
  }
  const int k1 = profile.kappa(1);
  const int n = g.order();
  std::vector<Mask> fragment_subgroups;
  for (Mask h : g.subgroup_masks()) {
    const int sum = std::popcount(g.sumset(h, s.bits()));
    if (n - sum >= 1 && sum - std::popcount(h) == k1) fragment_subgroups.push_back(h);
  }
  if (fragment_subgroups.empty()) {
    throw Error(ErrorKind::InternalInvariant,
                "no subgroup is a 1-fragment of " + s.to_string());
  }
  // subgroup_masks is sorted by (cardinality, mask): the maximal ones are a
  // suffix and the first of that suffix has the smallest mask.
  const int top = std::popcount(fragment_subgroups.back());
  std::vector<Subgroup> maximal;
  for (Mask h : fragment_subgroups) {
    if (std::popcount(h) == top) maximal.push_back(Subgroup::trusted(g, h));
  }
  Morphism phi = quotient(maximal.front());
  GroupSubset image = phi.image(s);
  const bool ap = is_arithmetic_progression(image);
  const bool vosper = is_vosper_subset(image).is_vosper;
  using Shape = HyperAtomReport::Shape;
  Shape shape = ap && vosper ? Shape::Both
                : ap         ? Shape::ArithmeticProgression
                : vosper     ? Shape::VosperSubset
                             : Shape::Neither;
  return HyperAtomReport{s, maximal.front(), maximal, k1, shape, image};
}

VosperCheck is_vosper_subset(const GroupSubset& s) {
  const Group& g = s.group();
  require_reflexive(s, "is_vosper_subset");
  if (!is_generating(s)) {
    throw Error(ErrorKind::NotGenerating, s.to_string() + " does not generate " + g.spec());
  }
  if (g.order() > kMaxProfileOrder) {
    throw Error(ErrorKind::CapExceeded, "is_vosper_subset: group too large to scan");
  }
  const int n = g.order();
  const int size = s.size();
  VosperCheck check;
  check.is_vosper = true;
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    const int c = std::popcount(x);
    if (c < 2) continue;
    if (std::popcount(g.sumset(x, s.bits())) < std::min(n - 1, c + size)) {
      check.is_vosper = false;
      check.witness = GroupSubset(g, x);
      break;
    }
  }
  bool via_kappa = true;
  if (n >= 3) {
    CayleyProfile profile(g, s.bits());
    via_kappa = !profile.separable(2) || profile.kappa(2) >= size;
  }
  if (via_kappa != check.is_vosper) {
    throw Error(ErrorKind::InternalInvariant,
                "Vosper X-scan and kappa_2 route disagree for " + s.to_string());
  }
  return check;
}

std::vector<std::pair<Element, Element>> strong_iso_selection(const GroupSubset& s,
                                                              const GroupSubset& x, int k) {
  require_same(s, x, "strong_iso_selection");
  require_reflexive(s, "strong_iso_selection");
  const Group& g = s.group();
  const int n = g.order();
  if (k < 0) throw Error(ErrorKind::Precondition, "k must be nonnegative");
  if (k == 0) return {};
  if (std::min(n - x.size(), x.size()) < k) {
    throw Error(ErrorKind::Precondition, "min(|G|-|X|, |X|) < k");
  }
  CayleyProfile profile(g, s.bits());
  if (k > profile.kappa(1)) throw Error(ErrorKind::Precondition, "k exceeds kappa_1(S)");

  const std::vector<Element> left = x.elements();
  std::vector<Mask> adj(left.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    adj[i] = g.translate(s.bits(), left[i]) & ~x.bits();
  }
  std::vector<int> match_of_right(n, -1);
  auto augment = [&](auto& self, std::size_t u, Mask& visited) -> bool {
    for (Mask m = adj[u]; m != 0; m &= m - 1) {
      const Element y = std::countr_zero(m);
      if ((visited >> y) & 1) continue;
      visited |= Mask{1} << y;
      if (match_of_right[y] < 0 || self(self, static_cast<std::size_t>(match_of_right[y]), visited)) {
        match_of_right[y] = static_cast<int>(u);
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (std::size_t u = 0; u < left.size() && matched < k; ++u) {
    Mask visited = 0;
    if (augment(augment, u, visited)) ++matched;
  }
  if (matched < k) {
    throw Error(ErrorKind::InternalInvariant,
                "boundary matching of size " + std::to_string(matched) + " < k = " +
                    std::to_string(k));
  }
  std::vector<std::pair<Element, Element>> pairs;
  for (Element y = 0; y < n; ++y) {
    if (match_of_right[y] >= 0) pairs.emplace_back(left[match_of_right[y]], y);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.resize(k);
  return pairs;
}

bool check_duality(const GroupSubset& s, const GroupSubset& x) {
  require_same(s, x, "check_duality");
  require_reflexive(s, "check_duality");
  const Group& g = s.group();
  const Mask xs = g.full() & ~g.sumset(x.bits(), s.bits());
  const Mask dual = g.full() & ~g.sumset(xs, g.negate(s.bits()));
  return g.sumset(dual, s.bits()) == g.sumset(x.bits(), s.bits());
}

}  // namespace kempkit
