#include "kempkit/oracles.hpp"

#include <bit>
#include <chrono>

#include "kempkit/error.hpp"
#include "kempkit/isoperimetry.hpp"
#include "kempkit/kemperman.hpp"
#include "kempkit/parallel.hpp"
#include "kempkit/serialize.hpp"

namespace kempkit {

void TheoremReport::add_violation(nlohmann::json counterexample, std::size_t limit) {
  ++violation_count;
  if (violations.size() < limit) violations.push_back(std::move(counterexample));
}

void TheoremReport::merge(const TheoremReport& other, std::size_t limit) {
  checked += other.checked;
  violation_count += other.violation_count;
  for (const auto& v : other.violations) {
    if (violations.size() >= limit) break;
    violations.push_back(v);
  }
}

nlohmann::json report_to_json(const TheoremReport& report) {
  return {{"theorem_id", report.theorem_id},
          {"universe", report.universe},
          {"checked", report.checked},
          {"violation_count", report.violation_count},
          {"violations", report.violations},
          {"elapsed", report.elapsed},
          {"ok", report.ok()}};
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int popc(Mask m) { return std::popcount(m); }

std::string hex(const Group& g, Mask m) { return subset_to_hex(GroupSubset(g, m)); }

bool prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Runs fn(i, slot) for i in [0, count) where slot holds one report per id, and
// merges the slots in index order.
template <typename Fn>
std::vector<TheoremReport> sweep(const std::vector<std::string>& ids, const std::string& universe,
                                 std::size_t count, const SweepOptions& options, Fn&& fn) {
  const auto start = Clock::now();
  std::vector<std::vector<TheoremReport>> slots(count, std::vector<TheoremReport>(ids.size()));
  parallel_for(count, options.jobs, [&](std::size_t i) { fn(i, slots[i]); });
  std::vector<TheoremReport> out(ids.size());
  for (std::size_t t = 0; t < ids.size(); ++t) {
    out[t].theorem_id = ids[t];
    out[t].universe = universe;
    for (const auto& slot : slots) out[t].merge(slot[t], options.violation_limit);
  }
  const double elapsed = seconds_since(start);
  for (auto& r : out) r.elapsed = elapsed;
  return out;
}

template <typename Fn>
TheoremReport sweep_one(const std::string& id, const std::string& universe, std::size_t count,
                        const SweepOptions& options, Fn&& fn) {
  return sweep({id}, universe, count, options,
               [&](std::size_t i, std::vector<TheoremReport>& slot) { fn(i, slot[0]); })[0];
}

std::string all_pairs(const Group& g) {
  const std::uint64_t n = g.full();
  return g.spec() + ": all " + std::to_string(n * n) + " pairs of nonempty subsets";
}

Group prime_cyclic(int p) {
  if (!prime(p)) throw Error(ErrorKind::InvalidSpec, std::to_string(p) + " is not prime");
  if (p > 13) throw Error(ErrorKind::CapExceeded, "prime sweeps are limited to p <= 13");
  return make_group(std::vector<int>{p}, kMaxSupportedOrder);
}

std::vector<Mask> nonempty_sets(const Group& g) {
  std::vector<Mask> out;
  for (Mask m = 1; m <= g.full(); ++m) out.push_back(m);
  return out;
}

}  // namespace

TheoremReport verify_kneser(const Group& g, const SweepOptions& options) {
  const std::size_t limit = options.violation_limit;
  return sweep_one("kneser", all_pairs(g), g.full(), options, [&](std::size_t i, TheoremReport& r) {
    const Mask a = i + 1;
    for (Mask b = 1; b <= g.full(); ++b) {
      ++r.checked;
      const Mask sum = g.sumset(a, b);
      const Mask h = masks::period(g, sum);
      const int rhs = popc(g.sumset(a, h)) + popc(g.sumset(b, h)) - popc(h);
      if (popc(sum) < rhs) {
        r.add_violation({{"group", g.spec()}, {"A", hex(g, a)}, {"B", hex(g, b)},
                         {"sum", popc(sum)}, {"bound", rhs}},
                        limit);
      }
    }
  });
}

TheoremReport verify_scherk(const Group& g, const SweepOptions& options) {
  const std::size_t limit = options.violation_limit;
  const std::string universe = all_pairs(g) + ", every c with |X ∩ (c-Y)| = 1";
  return sweep_one("scherk", universe, g.full(), options, [&](std::size_t i, TheoremReport& r) {
    const Mask x = i + 1;
    for (Mask y = 1; y <= g.full(); ++y) {
      const int size = popc(g.sumset(x, y));
      for (Element c = 0; c < g.order(); ++c) {
        if (popc(x & g.translate(g.negate(y), c)) != 1) continue;
        ++r.checked;
        if (size < popc(x) + popc(y) - 1) {
          r.add_violation({{"group", g.spec()}, {"X", hex(g, x)}, {"Y", hex(g, y)}, {"c", c}},
                          limit);
        }
      }
    }
  });
}

TheoremReport verify_scherk_appendix(const Group& g, const SweepOptions& options) {
  const std::size_t limit = options.violation_limit;
  const std::string universe = all_pairs(g) + " with A ∩ (-B) = {0}";
  return sweep_one("scherk-appendix", universe, g.full(), options,
                   [&](std::size_t i, TheoremReport& r) {
                     const Mask a = i + 1;
                     for (Mask b = 1; b <= g.full(); ++b) {
                       if ((a & g.negate(b)) != 1) continue;
                       ++r.checked;
                       if (popc(g.sumset(a, b)) < popc(a) + popc(b) - 1) {
                         r.add_violation(
                             {{"group", g.spec()}, {"A", hex(g, a)}, {"B", hex(g, b)}}, limit);
                       }
                     }
                   });
}

TheoremReport verify_prehistorical(const Group& g, const SweepOptions& options) {
  const std::size_t limit = options.violation_limit;
  const int n = g.order();
  const std::string universe = all_pairs(g) + " with |A|+|B| > |G|, every x";
  return sweep_one("prehistorical", universe, g.full(), options,
                   [&](std::size_t i, TheoremReport& r) {
                     const Mask a = i + 1;
                     for (Mask b = 1; b <= g.full(); ++b) {
                       const int t = popc(a) + popc(b) - n;
                       if (t <= 0) continue;
                       for (Element x = 0; x < n; ++x) {
                         ++r.checked;
                         const int reps = masks::rep_count(g, a, b, x);
                         if (reps < t) {
                           r.add_violation({{"group", g.spec()}, {"A", hex(g, a)},
                                            {"B", hex(g, b)}, {"x", x}, {"r", reps}, {"t", t}},
                                           limit);
                         }
                       }
                     }
                   });
}

TheoremReport verify_vosper_prime(int p, const SweepOptions& options) {
  const Group g = prime_cyclic(p);
  const auto sets = nonempty_sets(g);
  const std::size_t limit = options.violation_limit;
  const std::string universe =
      g.spec() + ": all pairs with |A|,|B| >= 2 and |A+B| = |A|+|B|-1 <= p-2";
  return sweep_one("vosper", universe, sets.size(), options, [&](std::size_t i, TheoremReport& r) {
    const Mask a = sets[i];
    if (popc(a) < 2) return;
    for (Mask b : sets) {
      const int target = popc(a) + popc(b) - 1;
      if (popc(b) < 2 || target > p - 2) continue;
      if (popc(g.sumset(a, b)) != target) continue;
      ++r.checked;
      if (!masks::shares_ap_difference(g, a, b, 1)) {
        r.add_violation({{"group", g.spec()}, {"A", hex(g, a)}, {"B", hex(g, b)}}, limit);
      }
    }
  });
}

TheoremReport verify_cauchy_davenport(int p, const SweepOptions& options) {
  const Group g = prime_cyclic(p);
  const auto sets = nonempty_sets(g);
  const std::size_t limit = options.violation_limit;
  const std::string universe = all_pairs(g);
  return sweep_one("cauchy-davenport", universe, sets.size(), options,
                   [&](std::size_t i, TheoremReport& r) {
                     const Mask a = sets[i];
                     for (Mask b : sets) {
                       ++r.checked;
                       if (popc(g.sumset(a, b)) < std::min(p, popc(a) + popc(b) - 1)) {
                         r.add_violation(
                             {{"group", g.spec()}, {"A", hex(g, a)}, {"B", hex(g, b)}}, limit);
                       }
                     }
                   });
}

TheoremReport verify_vosper_equality(int p, const SweepOptions& options) {
  const Group g = prime_cyclic(p);
  const std::size_t limit = options.violation_limit;
  const std::string universe =
      g.spec() + ": progressions {0,d,...} of lengths i, j with i+j-1 <= p, every d != 0";
  return sweep_one("vosper-equality", universe, static_cast<std::size_t>(p - 1), options,
                   [&](std::size_t i, TheoremReport& r) {
                     const Element d = static_cast<Element>(i) + 1;
                     for (int la = 1; la <= p; ++la) {
                       for (int lb = 1; la + lb - 1 <= p; ++lb) {
                         Mask a = 0, b = 0;
                         for (int t = 0; t < la; ++t) a |= Mask{1} << (t * d % p);
                         for (int t = 0; t < lb; ++t) b |= Mask{1} << (t * d % p);
                         ++r.checked;
                         if (popc(g.sumset(a, b)) != la + lb - 1) {
                           r.add_violation({{"group", g.spec()}, {"A", hex(g, a)},
                                            {"B", hex(g, b)}, {"d", d}},
                                           limit);
                         }
                       }
                     }
                   });
}

// ---------------------------------------------------------------------------
// Isoperimetry

const std::vector<std::string>& isoperimetry_check_ids() {
  static const std::vector<std::string> ids = {
      "isoperimetric-inequality", "kappa-upper-bound", "olson",          "subgroup-atom",
      "atom-intersection",        "fragments-1-2",     "two-atom",       "vosper-fragment",
      "duality",                  "vosper-deletion",   "quotient-kappa", "quotient-preimage",
      "hyper-atom-shape",         "hyper-atom-deletion", "plagne",       "ap-kappa",
      "nonseparable-convention",  "strong-iso"};
  return ids;
}

namespace {

enum IsoCheck {
  kIsoInequality,
  kKappaBound,
  kOlson,
  kSubgroupAtom,
  kAtomIntersection,
  kFragments12,
  kTwoAtom,
  kVosperFragment,
  kDuality,
  kVosperDeletion,
  kQuotientKappa,
  kQuotientPreimage,
  kHyperAtomShape,
  kHyperAtomDeletion,
  kPlagne,
  kApKappa,
  kNonseparable,
  kStrongIso,
};

// Vosper property read off a profile: not 2-separable, or κ_2 >= |S|.
bool profile_vosper(const CayleyProfile& p) {
  const int n = p.group().order();
  if (n < 3) return true;
  return !p.separable(2) || p.kappa(2) >= popc(p.s());
}

bool is_k_fragment(const Group& g, Mask s, Mask x, int k, int kappa_k) {
  const int sum = popc(g.sumset(x, s));
  return popc(x) >= k && g.order() - sum >= k && sum - popc(x) == kappa_k;
}

// Deletion inequality: every X with |X+T| = |X|+|T|-1 (and the extra size
// bound `min_x`) keeps |X+(T\y)| >= |X|+|T|-2 for each y in T.
void check_deletion(const Group& g, Mask t, int min_x, TheoremReport& r, std::size_t limit,
                    const nlohmann::json& context) {
  const int nt = popc(t);
  for (Mask x = 1; x <= g.full(); ++x) {
    if (popc(x) < min_x) continue;
    if (popc(g.sumset(x, t)) != popc(x) + nt - 1) continue;
    for (Mask rest = t; rest; rest &= rest - 1) {
      const Mask y = rest & (~rest + 1);
      ++r.checked;
      if (popc(g.sumset(x, t & ~y)) < popc(x) + nt - 2) {
        auto v = context;
        v["X"] = hex(g, x);
        v["y"] = std::countr_zero(y);
        r.add_violation(std::move(v), limit);
      }
    }
  }
}

void isoperimetry_for(const Group& g, Mask s, const SweepOptions& options,
                      std::vector<TheoremReport>& out) {
  const std::size_t limit = options.violation_limit;
  const int n = g.order();
  const int ns = popc(s);
  const GroupSubset sset(g, s);
  const nlohmann::json ctx = {{"group", g.spec()}, {"S", hex(g, s)}};
  auto fail = [&](IsoCheck c, nlohmann::json extra = nlohmann::json::object()) {
    auto v = ctx;
    v.update(extra);
    out[c].add_violation(std::move(v), limit);
  };

  const CayleyProfile profile(g, s);
  std::vector<int> sizes(g.full() + 1);
  for (Mask x = 0; x <= g.full(); ++x) sizes[x] = popc(g.sumset(x, s));

  // Isoperimetric inequality and the non-separable convention for every k.
  for (int k = 1; 2 * k - 1 <= n; ++k) {
    const int kk = profile.kappa(k);
    bool separable = false;
    for (Mask x = 1; x <= g.full(); ++x) {
      if (popc(x) < k) continue;
      separable |= n - sizes[x] >= k;
      ++out[kIsoInequality].checked;
      if (sizes[x] < std::min(n - k + 1, popc(x) + kk)) {
        fail(kIsoInequality, {{"k", k}, {"X", hex(g, x)}, {"kappa", kk}});
      }
    }
    if (!separable) {
      ++out[kNonseparable].checked;
      const auto rep = kappa(sset, k);
      if (rep.separable || rep.kappa != n - 2 * k + 1) {
        fail(kNonseparable, {{"k", k}, {"kappa", rep.kappa}});
      }
    }
  }

  const int k1 = profile.kappa(1);
  ++out[kKappaBound].checked;
  if (k1 > ns - 1) fail(kKappaBound, {{"kappa1", k1}});
  ++out[kOlson].checked;
  if (2 * k1 < ns) fail(kOlson, {{"kappa1", k1}});

  if (profile.separable(1)) {
    for (Mask a : profile.atoms(1)) {
      if (!(a & 1)) continue;
      ++out[kSubgroupAtom].checked;
      if (!is_subgroup_mask(g, a)) fail(kSubgroupAtom, {{"atom", hex(g, a)}});
    }
  }

  for (int k = 1; 2 * k - 1 <= n; ++k) {
    if (!profile.separable(k)) continue;
    const auto frags = profile.fragments(k);
    for (Mask a : profile.atoms(k)) {
      for (Mask f : frags) {
        if (popc(a & f) < k) continue;
        ++out[kAtomIntersection].checked;
        if (a & ~f) fail(kAtomIntersection, {{"k", k}, {"atom", hex(g, a)}, {"fragment", hex(g, f)}});
      }
    }
  }

  const bool sep2 = n >= 3 && profile.separable(2);
  const int k2 = n >= 3 ? profile.kappa(2) : 0;
  if (sep2 && k2 <= ns - 1) {
    ++out[kFragments12].checked;
    if (k2 != k1) fail(kFragments12, {{"kappa1", k1}, {"kappa2", k2}});
    const auto f2 = profile.fragments(2);
    for (Mask f : f2) {
      ++out[kFragments12].checked;
      if (!is_k_fragment(g, s, f, 1, k1)) fail(kFragments12, {{"two_fragment", hex(g, f)}});
    }
    for (Mask f : profile.fragments(1)) {
      if (popc(f) < 2 || popc(f) > n - ns - 1) continue;
      ++out[kFragments12].checked;
      if (!std::binary_search(f2.begin(), f2.end(), f)) {
        fail(kFragments12, {{"one_fragment", hex(g, f)}});
      }
    }
    for (Mask a : profile.atoms(2)) {
      if (!(a & 1)) continue;
      ++out[kTwoAtom].checked;
      if (!is_subgroup_mask(g, a) && popc(a) != 2) fail(kTwoAtom, {{"atom", hex(g, a)}});
    }
    if (2 * ns <= n + 1 && masks::ap_differences(g, s).empty()) {
      ++out[kVosperFragment].checked;
      bool found = false;
      for (Mask h : g.subgroup_masks()) found |= is_k_fragment(g, s, h, 2, k2);
      if (!found) fail(kVosperFragment, {{"kappa2", k2}});
    }
  }

  for (Mask x = 0; x <= g.full(); ++x) {
    ++out[kDuality].checked;
    if (!check_duality(sset, GroupSubset(g, x))) fail(kDuality, {{"X", hex(g, x)}});
  }

  const bool vosper = profile_vosper(profile);
  if (vosper && ns >= 3) check_deletion(g, s, ns, out[kVosperDeletion], limit, ctx);

  if (sep2) {
    for (Mask h : g.subgroup_masks()) {
      if (!is_k_fragment(g, s, h, 2, k2)) continue;
      const Morphism phi = quotient(Subgroup::trusted(g, h));
      const Group& q = phi.target();
      const Mask t = phi.image(s);
      const CayleyProfile qp(q, t);
      ++out[kQuotientKappa].checked;
      if (qp.kappa(1) != popc(t) - 1) {
        fail(kQuotientKappa, {{"H", hex(g, h)}, {"kappa1_quotient", qp.kappa(1)}});
      }
      if (!qp.separable(1)) continue;
      for (Mask kq : q.subgroup_masks()) {
        if (!is_k_fragment(q, t, kq, 1, qp.kappa(1))) continue;
        ++out[kQuotientPreimage].checked;
        const Mask pre = phi.preimage(kq);
        if (!is_k_fragment(g, s, pre, 2, k2)) {
          fail(kQuotientPreimage, {{"H", hex(g, h)}, {"preimage", hex(g, pre)}});
        }
      }
    }
  }

  if (n >= 3 && 2 * ns <= n + 1 && k2 <= ns - 1) {
    const auto report = hyper_atom(sset);
    for (const Subgroup& h : report.all_maximal) {
      const Morphism phi = quotient(h);
      const Group& q = phi.target();
      const Mask t = phi.image(s);
      const bool ap = !masks::ap_differences(q, t).empty();
      const bool qv = profile_vosper(CayleyProfile(q, t));
      ++out[kHyperAtomShape].checked;
      if (!ap && !qv) fail(kHyperAtomShape, {{"H", hex(g, h.bits())}});
      auto hctx = ctx;
      hctx["H"] = hex(g, h.bits());
      check_deletion(q, t, 1, out[kHyperAtomDeletion], limit, hctx);
    }
    ++out[kHyperAtomShape].checked;
    if (report.quotient_shape == HyperAtomReport::Shape::Neither) {
      fail(kHyperAtomShape, {{"H", hex(g, report.hyper_atom.bits())}, {"reported", "neither"}});
    }
  }

  if (2 * ns <= n) {
    ++out[kPlagne].checked;
    bool holds = !masks::ap_differences(g, s).empty() || vosper;
    for (Mask h : g.subgroup_masks()) {
      if (holds) break;
      if (h == 1) continue;
      holds = popc(g.sumset(h, s)) < std::min(n - 1, popc(h) + ns);
    }
    if (!holds) fail(kPlagne);
  }

  if (ns >= 2 && !masks::ap_differences(g, s).empty()) {
    ++out[kApKappa].checked;
    if (k1 != ns - 1) fail(kApKappa, {{"kappa1", k1}});
  }

  for (Mask x = 0; x <= g.full(); ++x) {
    const int k = std::min({k1, popc(x), n - popc(x)});
    ++out[kStrongIso].checked;
    const GroupSubset xs(g, x);
    const auto pairs = strong_iso_selection(sset, xs, k);
    Mask xs_used = 0, ys_used = 0;
    bool good = static_cast<int>(pairs.size()) == k;
    for (auto [px, py] : pairs) {
      good = good && xs.contains(px) && !xs.contains(py) && !(xs_used >> px & 1) &&
             !(ys_used >> py & 1) && sset.contains(g.sub(py, px));
      xs_used |= Mask{1} << px;
      ys_used |= Mask{1} << py;
    }
    if (!good) fail(kStrongIso, {{"X", hex(g, x)}, {"k", k}});
  }
}

}  // namespace

std::vector<TheoremReport> verify_isoperimetry(const Group& g, const SweepOptions& options) {
  std::vector<Mask> generating;
  for (Mask s = 1; s <= g.full(); s += 2) {
    if (g.closure(s) == g.full()) generating.push_back(s);
  }
  const std::string universe =
      g.spec() + ": all " + std::to_string(generating.size()) + " generating S containing 0";
  return sweep(isoperimetry_check_ids(), universe, generating.size(), options,
               [&](std::size_t i, std::vector<TheoremReport>& slot) {
                 isoperimetry_for(g, generating[i], options, slot);
               });
}

// ---------------------------------------------------------------------------
// Kemperman

TheoremReport verify_kemperman_equivalence(const Group& g, bool any_order_sp4,
                                           const SweepOptions& options) {
  const ClassifyOptions classify{.any_order_sp4 = any_order_sp4};
  const std::size_t limit = options.violation_limit;
  const std::string id = any_order_sp4 ? "kemperman-original" : "kemperman";
  return sweep_one(id, all_pairs(g), g.full(), options, [&](std::size_t i, TheoremReport& r) {
    const GroupSubset a(g, i + 1);
    for (Mask bm = 1; bm <= g.full(); ++bm) {
      const GroupSubset b(g, bm);
      ++r.checked;
      auto violation = [&](const std::string& reason) {
        r.add_violation({{"group", g.spec()}, {"A", hex(g, a.bits())}, {"B", hex(g, bm)},
                         {"reason", reason}},
                        limit);
      };
      if (!check_condition_I(a, b).holds) {
        if (auto literal = find_certificate(a, b, classify)) {
          if (verify_certificate(*literal, classify).ok) {
            violation("certificate accepted for a pair without condition (I)");
          }
        }
        continue;
      }
      try {
        const auto cert = build_certificate(a, b, classify);
        const auto check = verify_certificate(cert, classify);
        if (!check.ok) {
          violation("certificate rejected: " + check.reason);
        } else if (!(cert.a() == a) || !(cert.b() == b)) {
          violation("certificate reconstructs a different pair");
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::TheoremFalsified) throw;
        violation(e.what());
      }
    }
  });
}

TheoremReport verify_dichotomy(const Group& g, const SweepOptions& options) {
  const std::size_t limit = options.violation_limit;
  const std::string universe = g.spec() + ": pairs with |S+T| = |S|+|T|-1 and S+T aperiodic";
  return sweep_one("dichotomy", universe, g.full(), options, [&](std::size_t i, TheoremReport& r) {
    const GroupSubset s(g, i + 1);
    for (Mask tm = 1; tm <= g.full(); ++tm) {
      const Mask sum = g.sumset(s.bits(), tm);
      if (popc(sum) != s.size() + popc(tm) - 1 || masks::period(g, sum) != 1) continue;
      ++r.checked;
      const GroupSubset t(g, tm);
      nlohmann::json v = {{"group", g.spec()}, {"S", hex(g, s.bits())}, {"T", hex(g, tm)}};
      try {
        const auto d = quasiperiod_or_elementary(s, t);
        bool good = false;
        if (d.branch == QuasiperiodDichotomy::Branch::QuasiPeriodic) {
          good = d.K && !d.K->is_trivial() && !d.K->is_whole() && d.decomposition_s &&
                 d.decomposition_t && is_valid_decomposition(*d.decomposition_s, s) &&
                 is_valid_decomposition(*d.decomposition_t, t);
        } else {
          good = d.kind && d.kind->strict && !pair_kind_failure(s, t, *d.kind);
        }
        if (!good) {
          v["reason"] = "branch data does not check";
          r.add_violation(std::move(v), limit);
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::TheoremFalsified) throw;
        v["reason"] = e.what();
        r.add_violation(std::move(v), limit);
      }
    }
  });
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& oracle_ids() {
  static const std::vector<std::string> ids = {
      "kneser",   "scherk",          "scherk-appendix", "prehistorical",      "vosper",
      "cauchy-davenport", "vosper-equality", "isoperimetry", "kemperman", "kemperman-original",
      "dichotomy"};
  return ids;
}

std::vector<TheoremReport> run_oracle(const std::string& id, const Group& g,
                                      const SweepOptions& options) {
  auto prime_order = [&] {
    if (g.orders().size() != 1) {
      throw Error(ErrorKind::InvalidSpec, "oracle '" + id + "' needs a cyclic group of prime order");
    }
    return g.order();
  };
  if (id == "kneser") return {verify_kneser(g, options)};
  if (id == "scherk") return {verify_scherk(g, options)};
  if (id == "scherk-appendix") return {verify_scherk_appendix(g, options)};
  if (id == "prehistorical") return {verify_prehistorical(g, options)};
  if (id == "vosper") return {verify_vosper_prime(prime_order(), options)};
  if (id == "cauchy-davenport") return {verify_cauchy_davenport(prime_order(), options)};
  if (id == "vosper-equality") return {verify_vosper_equality(prime_order(), options)};
  if (id == "isoperimetry") return verify_isoperimetry(g, options);
  if (id == "kemperman") return {verify_kemperman_equivalence(g, false, options)};
  if (id == "kemperman-original") return {verify_kemperman_equivalence(g, true, options)};
  if (id == "dichotomy") return {verify_dichotomy(g, options)};
  throw Error(ErrorKind::InvalidSpec, "unknown oracle '" + id + "'");
}

}  // namespace kempkit
