#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kempkit/error.hpp"
#include "kempkit/isoperimetry.hpp"
#include "kempkit/kemperman.hpp"
#include "kempkit/oracles.hpp"
#include "kempkit/serialize.hpp"

using namespace kempkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

struct Config {
  std::string group;
  std::string a, b, set;
  int k = 1;
  bool json = false;
  int jobs = 1;
  int cap = 0;
  std::string out;
  std::string input;
  std::uint64_t seed = 1;
  int max_order = 8;
  std::string mode = "exhaustive";
  std::uint64_t samples = 10000;
  bool emit_all = false;
  bool any_order_sp4 = false;
  bool all_fragments = false;
  std::string oracle_id;
};

Group load_group(const Config& c) { return parse_group(c.group, c.cap > 0 ? c.cap : default_cap()); }

ClassifyOptions classify(const Config& c) { return {.any_order_sp4 = c.any_order_sp4}; }

std::string describe(const ElementaryPairKind& k, const Group& g) {
  std::string out = to_string(k.tag);
  if (k.d) out += ", d=" + g.format(*k.d);
  if (k.singleton) out += std::string(", singleton ") + (*k.singleton == Side::A ? "A" : "B");
  if (k.H) out += ", H=" + k.H->carrier().to_string();
  if (k.g) out += ", g=" + g.format(*k.g);
  if (k.c) out += ", unique c=" + g.format(*k.c);
  return out;
}

void print_certificate(const KempermanCertificate& cert) {
  const Group& g = cert.group();
  std::cout << "certificate:\n"
            << "  H      = " << cert.H.carrier().to_string() << "\n"
            << "  A0, A1 = " << cert.decomp_a.part0.to_string() << ", "
            << cert.decomp_a.part1.to_string() << "\n"
            << "  B0, B1 = " << cert.decomp_b.part0.to_string() << ", "
            << cert.decomp_b.part1.to_string() << "\n"
            << "  pair   = " << describe(cert.pair_kind, g) << "\n"
            << "  quotient element = coset of " << g.format(cert.quotient_unique_at) << "\n"
            << "  branch = " << to_string(cert.branch) << "\n";
}

int cmd_analyze(const Config& c) {
  Group g = load_group(c);
  GroupSubset a = parse_subset(g, c.a), b = parse_subset(g, c.b);
  const auto cond = check_condition_I(a, b);
  const auto kind = classify_elementary(a, b, classify(c));
  std::optional<KempermanCertificate> cert;
  std::string message;
  int status = kExitOk;
  if (cond.holds) {
    try {
      cert = build_certificate(a, b, classify(c));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TheoremFalsified) throw;
      message = e.what();
      status = kExitViolation;
    }
  } else {
    message = "condition (I) fails: |A+B|=" + std::to_string(cond.sum_size);
  }
  std::optional<CertificateCheck> check;
  if (cert) {
    check = verify_certificate(*cert, classify(c));
    if (!check->ok) status = kExitViolation;
  }

  if (c.json) {
    json j{{"condition", condition_to_json(a, b, cond)},
           {"elementary", kind ? pair_kind_to_json(g, *kind) : json(nullptr)},
           {"certificate", cert ? certificate_to_json(*cert) : json(nullptr)}};
    if (check) j["verification"] = check->ok ? "OK" : check->reason;
    if (!message.empty()) j["message"] = message;
    std::cout << j.dump(2) << "\n";
    return status;
  }
  std::cout << "group  " << g.spec() << "\n"
            << "A      " << a.to_string() << "\n"
            << "B      " << b.to_string() << "\n"
            << "A+B    " << cond.sum.to_string() << "  |A+B|=" << cond.sum_size
            << "  |A|+|B|-1=" << a.size() + b.size() - 1 << "\n"
            << "period " << cond.period.carrier().to_string() << "\n";
  if (cond.unique_c) std::cout << "unique expression at " << g.format(*cond.unique_c) << "\n";
  std::cout << "elementary pair: " << (kind ? describe(*kind, g) : "none") << "\n";
  if (!message.empty()) std::cout << message << "\n";
  if (cond.holds) std::cout << "condition (I) holds\n";
  if (cert) {
    print_certificate(*cert);
    std::cout << "verification: " << (check->ok ? "OK" : check->reason) << "\n";
  }
  return status;
}

int cmd_kappa(const Config& c) {
  Group g = load_group(c);
  GroupSubset s = parse_subset(g, c.set);
  KappaOptions options;
  options.all_fragments = c.all_fragments;
  options.jobs = c.jobs;
  const auto r = kappa(s, c.k, options);
  if (c.json) {
    std::cout << kappa_report_to_json(r).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "S = " << s.to_string() << " in " << g.spec() << ", k=" << c.k << "\n";
  if (r.separable) {
    std::cout << "kappa_" << c.k << " = " << r.kappa << "\n";
  } else {
    std::cout << "not " << c.k << "-separable; kappa_" << c.k << " = " << r.kappa
              << " by convention (|G|-2k+1)\n";
  }
  std::cout << "atoms (" << r.atoms.size() << "):\n";
  for (const auto& x : r.atoms) std::cout << "  " << x.to_string() << "\n";
  std::cout << "fragments (" << r.fragments.size() << (r.fragments_complete ? "" : ", truncated")
            << "):\n";
  for (const auto& x : r.fragments) std::cout << "  " << x.to_string() << "\n";
  return kExitOk;
}

int cmd_hyperatom(const Config& c) {
  Group g = load_group(c);
  const auto r = hyper_atom(parse_subset(g, c.set));
  if (c.json) {
    std::cout << hyper_atom_report_to_json(r).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "S = " << r.S.to_string() << " in " << g.spec() << "\n"
            << "kappa_1 = " << r.kappa1 << "\n"
            << "hyper-atom H = " << r.hyper_atom.carrier().to_string() << "\n";
  if (r.all_maximal.size() > 1) {
    std::cout << "other maximal subgroup fragments:";
    for (std::size_t i = 1; i < r.all_maximal.size(); ++i) {
      std::cout << " " << r.all_maximal[i].carrier().to_string();
    }
    std::cout << "\n";
  }
  std::cout << "quotient G/H has order " << r.quotient_image.group().order() << ", image of S has "
            << r.quotient_image.size() << " elements\n"
            << "quotient shape: " << to_string(r.quotient_shape) << "\n";
  return kExitOk;
}

int cmd_dichotomy(const Config& c) {
  Group g = load_group(c);
  GroupSubset s = parse_subset(g, c.a), t = parse_subset(g, c.b);
  const auto d = quasiperiod_or_elementary(s, t);
  if (c.json) {
    std::cout << dichotomy_to_json(d, g).dump(2) << "\n";
    return kExitOk;
  }
  if (d.branch == QuasiperiodDichotomy::Branch::QuasiPeriodic) {
    std::cout << "quasi-periodic with K = " << d.K->carrier().to_string() << "\n"
              << "  S = " << d.decomposition_s->part0.to_string() << " ∪ "
              << d.decomposition_s->part1.to_string() << "\n"
              << "  T = " << d.decomposition_t->part0.to_string() << " ∪ "
              << d.decomposition_t->part1.to_string() << "\n";
  } else {
    std::cout << "strict elementary pair: " << describe(*d.kind, g) << "\n";
  }
  return kExitOk;
}

void print_census(const CensusSummary& s, std::ostream& os) {
  os << std::left << std::setw(12) << "group" << std::setw(10) << "key" << std::right
            << std::setw(10) << "pairs" << std::setw(10) << "(I)" << std::setw(10) << "certified"
            << std::setw(8) << "alarms" << std::setw(8) << "SP1" << std::setw(8) << "SP2"
            << std::setw(8) << "SP3" << std::setw(8) << "SP4" << "\n";
  auto count = [](const std::map<std::string, std::uint64_t>& m, const char* k) {
    auto it = m.find(k);
    return it == m.end() ? std::uint64_t{0} : it->second;
  };
  for (const auto& g : s.groups) {
    os << std::left << std::setw(12) << g.spec << std::setw(10) << g.key << std::right
              << std::setw(10) << g.pairs << std::setw(10) << g.condition_I << std::setw(10)
              << g.certified << std::setw(8) << g.alarms;
    for (const char* k : {"SP1", "SP2", "SP3", "SP4"}) os << std::setw(8) << count(g.pair_kinds, k);
    os << (g.exhaustive ? "" : "  (sampled)") << "\n";
  }
  os << "\nSP histogram:";
  for (const char* k : {"SP1", "SP2", "SP3", "SP4"}) os << " " << k << "=" << count(s.pair_kinds, k);
  os << "\nSP4 certificates: " << s.sp4_total << " (non-prime |H|: " << s.sp4_nonprime << ")\n";
  os << "hyper-atom sizes:";
  for (const auto& [size, n] : s.hyper_atom_sizes) os << " |H|=" << size << ":" << n;
  os << "\ncondition (I) pairs: " << s.condition_I << ", certified: " << s.certified
            << ", alarms: " << s.alarms << ", verification failures: " << s.verification_failures
            << "\n";
  const std::size_t shown = std::min<std::size_t>(3, s.alarm_examples.size());
  for (std::size_t i = 0; i < shown; ++i) os << "alarm: " << s.alarm_examples[i].dump() << "\n";
  if (s.alarms > shown) os << "(" << s.alarms - shown << " more alarms; see the JSONL records)\n";
}

int cmd_census(const Config& c) {
  CensusOptions o;
  o.max_order = c.max_order;
  if (c.mode == "exhaustive") {
    o.mode = CensusMode::Exhaustive;
  } else if (c.mode == "sample") {
    o.mode = CensusMode::Sample;
  } else {
    throw Error(ErrorKind::InvalidSpec, "mode must be 'exhaustive' or 'sample'");
  }
  o.samples = c.samples;
  o.seed = c.seed;
  o.jobs = c.jobs;
  o.emit_all = c.emit_all;
  o.any_order_sp4 = c.any_order_sp4;
  CensusSummary summary;
  if (c.out.empty() || c.out == "-") {
    std::ostringstream sink;
    summary = run_census(o, c.out == "-" ? std::cout : sink);
  } else {
    std::ofstream file(c.out);
    if (!file) throw Error(ErrorKind::Io, "cannot open " + c.out);
    summary = run_census(o, file);
    if (!file) throw Error(ErrorKind::Io, "write failed for " + c.out);
  }
  // Records own stdout when streamed there; the summary then goes to stderr.
  std::ostream& report = c.out == "-" ? std::cerr : std::cout;
  if (c.json) {
    report << summary_to_json(summary).dump(2) << "\n";
  } else {
    print_census(summary, report);
  }
  return summary.clean() ? kExitOk : kExitViolation;
}

int cmd_verify(const Config& c) {
  std::ifstream in(c.input);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + c.input);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("certificate") && !j.contains("schema")) j = j.at("certificate");
  const auto check = verify_certificate(certificate_from_json(j), classify(c));
  if (check.ok) {
    std::cout << "OK\n";
    return kExitOk;
  }
  std::cout << "FAILED: " << check.reason << "\n";
  return kExitViolation;
}

int cmd_oracle(const Config& c) {
  Group g = load_group(c);
  SweepOptions options;
  options.jobs = c.jobs;
  const auto reports = run_oracle(c.oracle_id, g, options);
  bool ok = true;
  json all = json::array();
  for (const auto& r : reports) {
    ok = ok && r.ok();
    all.push_back(report_to_json(r));
    if (!c.json) {
      std::cout << (r.ok() ? "ok   " : "FAIL ") << std::left << std::setw(26) << r.theorem_id
                << " checked=" << r.checked << " violations=" << r.violation_count << "  ("
                << r.universe << ")\n";
      for (const auto& v : r.violations) std::cout << "     counterexample " << v.dump() << "\n";
    }
  }
  if (c.json) std::cout << all.dump(2) << "\n";
  return ok ? kExitOk : kExitViolation;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TheoremFalsified:
    case ErrorKind::InternalInvariant:
      return kExitViolation;
    default:
      return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical pairs and isoperimetric structure in small finite abelian groups"};
  app.require_subcommand(1);
  Config c;

  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--group,-g", c.group, "group spec, e.g. Z5 or Z2xZ4")->required();
    sub->add_option("--cap", c.cap, "group-order cap (overrides KEMPKIT_CAP)");
    sub->add_flag("--json", c.json, "JSON output");
  };

  auto* analyze = app.add_subcommand("analyze", "condition (I), classification and certificate for a pair");
  add_group(analyze);
  analyze->add_option("--a", c.a, "set A")->required();
  analyze->add_option("--b", c.b, "set B")->required();
  analyze->add_flag("--any-order-sp4", c.any_order_sp4, "accept SP4 subgroups of any order");

  auto* kappa_cmd = app.add_subcommand("kappa", "k-connectivity, fragments and atoms of S");
  add_group(kappa_cmd);
  kappa_cmd->add_option("--set,-s", c.set, "generating set S containing 0")->required();
  kappa_cmd->add_option("--k", c.k, "k >= 1")->check(CLI::PositiveNumber);
  kappa_cmd->add_flag("--all-fragments", c.all_fragments, "list every fragment");
  kappa_cmd->add_option("--jobs,-j", c.jobs)->check(CLI::PositiveNumber);

  auto* hyper = app.add_subcommand("hyperatom", "hyper-atom of S and the shape of S modulo it");
  add_group(hyper);
  hyper->add_option("--set,-s", c.set, "generating set S containing 0")->required();

  auto* dich = app.add_subcommand("dichotomy", "quasi-periodic or strict elementary, for aperiodic critical pairs");
  add_group(dich);
  dich->add_option("--a", c.a, "set S")->required();
  dich->add_option("--b", c.b, "set T")->required();

  auto* census = app.add_subcommand("census", "sweep groups and pairs, certify every condition-(I) pair");
  census->add_option("--max-order", c.max_order, "largest group order (<= 16)");
  census->add_option("--mode", c.mode, "exhaustive or sample")->check(CLI::IsMember({"exhaustive", "sample"}));
  census->add_option("--samples", c.samples, "pairs per group when sampling");
  census->add_option("--seed", c.seed, "sampling seed");
  census->add_option("--jobs,-j", c.jobs, "worker threads")->check(CLI::PositiveNumber);
  census->add_option("--out,-o", c.out, "JSONL output path ('-' for stdout)");
  census->add_flag("--emit-all", c.emit_all, "emit records for pairs without condition (I)");
  census->add_flag("--any-order-sp4", c.any_order_sp4, "accept SP4 subgroups of any order");
  census->add_flag("--json", c.json, "print the summary as JSON");

  auto* verify = app.add_subcommand("verify", "re-check a stored kcert/1 certificate");
  verify->add_option("--input,-i", c.input, "certificate JSON file")->required();
  verify->add_flag("--any-order-sp4", c.any_order_sp4, "accept SP4 subgroups of any order");

  auto* oracle = app.add_subcommand("oracle", "run a brute-force theorem sweep on one group");
  oracle->add_option("id", c.oracle_id, "theorem id")->required()->check(CLI::IsMember(oracle_ids()));
  add_group(oracle);
  oracle->add_option("--jobs,-j", c.jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(c);
    if (*kappa_cmd) return cmd_kappa(c);
    if (*hyper) return cmd_hyperatom(c);
    if (*dich) return cmd_dichotomy(c);
    if (*census) return cmd_census(c);
    if (*verify) return cmd_verify(c);
    if (*oracle) return cmd_oracle(c);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kExitUsage;
}
