#include <bit>
#include <random>

#include "kempkit/error.hpp"
#include "kempkit/isoperimetry.hpp"
#include "kempkit/kemperman.hpp"
#include "kempkit/oracles.hpp"
#include "kempkit/parallel.hpp"
#include "kempkit/serialize.hpp"

namespace kempkit {

namespace {

constexpr std::size_t kChunk = 2048;
constexpr std::size_t kAlarmExamples = 16;

struct PairJob {
  Mask a;
  Mask b;
};

struct ChunkResult {
  std::string lines;
  CensusGroupStats stats;
  std::uint64_t sp4_total = 0;
  std::uint64_t sp4_nonprime = 0;
  std::uint64_t verification_failures = 0;
  std::vector<nlohmann::json> alarms;
};

bool prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<PairJob> pairs_for(const Group& g, bool exhaustive, std::uint64_t samples,
                               std::uint64_t seed, std::size_t group_index) {
  std::vector<PairJob> out;
  if (exhaustive) {
    out.reserve(g.full() * g.full());
    for (Mask a = 1; a <= g.full(); ++a) {
      for (Mask b = 1; b <= g.full(); ++b) out.push_back({a, b});
    }
    return out;
  }
  std::seed_seq seq{seed, static_cast<std::uint64_t>(group_index)};
  std::mt19937_64 rng(seq);
  auto draw = [&] {
    Mask m = 0;
    while (m == 0) m = rng() & g.full();
    return m;
  };
  out.reserve(samples);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Mask a = draw();
    out.push_back({a, draw()});
  }
  return out;
}

void census_pair(const Group& g, const std::string& key, const PairJob& job,
                 const CensusOptions& options, ChunkResult& res) {
  const ClassifyOptions classify{.any_order_sp4 = options.any_order_sp4};
  const GroupSubset a(g, job.a), b(g, job.b);
  ++res.stats.pairs;
  const bool cond = check_condition_I(a, b).holds;
  nlohmann::json rec = {{"schema", "census/1"},     {"group", g.spec()},
                        {"key", key},               {"A", subset_to_hex(a)},
                        {"B", subset_to_hex(b)},    {"condition_I", cond},
                        {"kind", nullptr},          {"certificate", nullptr}};
  if (cond) {
    ++res.stats.condition_I;
    try {
      const auto cert = build_certificate(a, b, classify);
      const auto check = verify_certificate(cert, classify);
      if (check.ok) {
        ++res.stats.certified;
        const std::string tag = to_string(cert.pair_kind.tag);
        ++res.stats.pair_kinds[tag];
        ++res.stats.branches[to_string(cert.branch)];
        if (cert.pair_kind.tag == PairTag::SP4) {
          ++res.sp4_total;
          if (!prime(cert.pair_kind.H->order())) ++res.sp4_nonprime;
        }
        rec["kind"] = tag;
        rec["certificate"] = certificate_to_json(cert);
      } else {
        ++res.verification_failures;
        rec["verification_failure"] = check.reason;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TheoremFalsified) throw;
      ++res.stats.alarms;
      rec["alarm"] = e.what();
      bool original = false;
      const ClassifyOptions any_order{.any_order_sp4 = true};
      try {
        original = verify_certificate(build_certificate(a, b, any_order), any_order).ok;
      } catch (const Error& inner) {
        if (inner.kind() != ErrorKind::TheoremFalsified) throw;
      }
      if (original) ++res.stats.alarms_certified_any_order_sp4;
      rec["original_class_certified"] = original;
      if (res.alarms.size() < kAlarmExamples) res.alarms.push_back(rec);
    }
  }
  if (cond || options.emit_all) {
    res.lines += rec.dump();
    res.lines += '\n';
  }
}

void add_counts(std::map<std::string, std::uint64_t>& into,
                const std::map<std::string, std::uint64_t>& from) {
  for (const auto& [k, v] : from) into[k] += v;
}

std::map<int, std::uint64_t> hyper_atom_histogram(const Group& g, int jobs) {
  std::vector<Mask> sets;
  for (Mask s = 1; s < g.full(); s += 2) {
    if (g.closure(s) == g.full()) sets.push_back(s);
  }
  std::vector<int> sizes(sets.size());
  parallel_for(sets.size(), jobs, [&](std::size_t i) {
    sizes[i] = hyper_atom(GroupSubset(g, sets[i])).hyper_atom.order();
  });
  std::map<int, std::uint64_t> out;
  for (int s : sizes) ++out[s];
  return out;
}

}  // namespace

CensusSummary run_census(const CensusOptions& options, std::ostream& out) {
  if (options.max_order > kCensusMaxOrder) {
    throw Error(ErrorKind::CapExceeded, "census max_order " + std::to_string(options.max_order) +
                                            " exceeds " + std::to_string(kCensusMaxOrder));
  }
  if (options.jobs < 1) throw Error(ErrorKind::InvalidSpec, "jobs must be >= 1");
  CensusSummary summary;
  summary.options = options;
  const auto lists = factor_lists_up_to(options.max_order);
  for (std::size_t gi = 0; gi < lists.size(); ++gi) {
    const Group g = make_group(lists[gi], default_cap());
    const bool exhaustive =
        options.mode == CensusMode::Exhaustive && g.order() <= kCensusExhaustiveLimit;
    const std::string key = g.invariant_key();
    const auto jobs = pairs_for(g, exhaustive, options.samples, options.seed, gi);

    const std::size_t chunks = (jobs.size() + kChunk - 1) / kChunk;
    std::vector<ChunkResult> results(chunks);
    parallel_for(chunks, options.jobs, [&](std::size_t c) {
      const std::size_t end = std::min(jobs.size(), (c + 1) * kChunk);
      for (std::size_t i = c * kChunk; i < end; ++i) {
        census_pair(g, key, jobs[i], options, results[c]);
      }
    });

    CensusGroupStats stats;
    stats.spec = g.spec();
    stats.key = key;
    stats.order = g.order();
    stats.exhaustive = exhaustive;
    for (auto& r : results) {
      out << r.lines;
      stats.pairs += r.stats.pairs;
      stats.condition_I += r.stats.condition_I;
      stats.certified += r.stats.certified;
      stats.alarms += r.stats.alarms;
      stats.alarms_certified_any_order_sp4 += r.stats.alarms_certified_any_order_sp4;
      add_counts(stats.pair_kinds, r.stats.pair_kinds);
      add_counts(stats.branches, r.stats.branches);
      summary.sp4_total += r.sp4_total;
      summary.sp4_nonprime += r.sp4_nonprime;
      summary.verification_failures += r.verification_failures;
      for (auto& alarm : r.alarms) {
        if (summary.alarm_examples.size() < kAlarmExamples) summary.alarm_examples.push_back(alarm);
      }
    }
    add_counts(summary.pair_kinds, stats.pair_kinds);
    summary.condition_I += stats.condition_I;
    summary.certified += stats.certified;
    summary.alarms += stats.alarms;
    summary.groups.push_back(std::move(stats));

    if (options.hyper_atoms && g.order() <= kCensusExhaustiveLimit) {
      for (const auto& [size, count] : hyper_atom_histogram(g, options.jobs)) {
        summary.hyper_atom_sizes[size] += count;
      }
    }
  }
  out.flush();
  return summary;
}

nlohmann::json summary_to_json(const CensusSummary& summary) {
  const auto& o = summary.options;
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& s : summary.groups) {
    groups.push_back({{"group", s.spec},
                      {"key", s.key},
                      {"order", s.order},
                      {"exhaustive", s.exhaustive},
                      {"pairs", s.pairs},
                      {"condition_I", s.condition_I},
                      {"certified", s.certified},
                      {"alarms", s.alarms},
                      {"alarms_certified_any_order_sp4", s.alarms_certified_any_order_sp4},
                      {"pair_kinds", s.pair_kinds},
                      {"branches", s.branches}});
  }
  nlohmann::json hyper = nlohmann::json::object();
  for (const auto& [size, count] : summary.hyper_atom_sizes) hyper[std::to_string(size)] = count;
  return {{"schema", "census-summary/1"},
          {"options",
           {{"max_order", o.max_order},
            {"mode", o.mode == CensusMode::Exhaustive ? "exhaustive" : "sample"},
            {"samples", o.samples},
            {"seed", o.seed},
            {"emit_all", o.emit_all},
            {"any_order_sp4", o.any_order_sp4}}},
          {"groups", groups},
          {"pair_kinds", summary.pair_kinds},
          {"sp4_total", summary.sp4_total},
          {"sp4_nonprime", summary.sp4_nonprime},
          {"hyper_atom_sizes", hyper},
          {"condition_I", summary.condition_I},
          {"certified", summary.certified},
          {"alarms", summary.alarms},
          {"verification_failures", summary.verification_failures},
          {"alarm_examples", summary.alarm_examples},
          {"clean", summary.clean()}};
}

}  // namespace kempkit
