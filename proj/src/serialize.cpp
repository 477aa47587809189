#include "kempkit/serialize.hpp"

#include <cctype>
#include <cstdio>

#include "kempkit/error.hpp"

namespace kempkit {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

QuasiPeriodicDecomposition decomposition_from(const Subgroup& h, GroupSubset part0,
                                              GroupSubset part1) {
  std::optional<Element> rep;
  if (!part1.is_empty()) rep = coset_label(h, part1.min_element());
  return {h, std::move(part0), std::move(part1), rep};
}

class SubsetParser {
 public:
  SubsetParser(const Group& g, std::string_view text) : g_(g), text_(text) {}

  GroupSubset parse_set() {
    skip_ws();
    bool braced = false;
    if (peek() == '{') {
      braced = true;
      ++pos_;
    }
    Mask m = 0;
    skip_ws();
    if (!at_end() && peek() != '}') {
      while (true) {
        m |= Mask{1} << parse_one();
        skip_ws();
        if (at_end() || peek() != ',') break;
        ++pos_;
      }
    }
    skip_ws();
    if (braced) {
      expect('}');
      skip_ws();
    }
    if (!at_end()) fail("unexpected character");
    return GroupSubset(g_, m);
  }

  Element parse_single() {
    Element x = parse_one();
    skip_ws();
    if (!at_end()) fail("unexpected character");
    return x;
  }

 private:
  Element parse_one() {
    skip_ws();
    if (peek() == '(') {
      const std::size_t start = pos_;
      ++pos_;
      std::vector<int> residues;
      while (true) {
        residues.push_back(parse_int());
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        expect(')');
        break;
      }
      try {
        return g_.from_tuple(residues);
      } catch (const Error& e) {
        pos_ = start;
        fail(e.what());
      }
    }
    const std::size_t start = pos_;
    const int v = parse_int();
    if (v >= g_.order()) {
      pos_ = start;
      fail("element index " + std::to_string(v) + " out of range for " + g_.spec());
    }
    return v;
  }

  int parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    long long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = std::min<long long>(v * 10 + (peek() - '0'), 1'000'000);
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return static_cast<int>(v);
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    parse_fail("parse error at position " + std::to_string(pos_) + " in '" +
               std::string(text_) + "': " + what);
  }

  const Group& g_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

json element_to_json(const Group& g, Element x) { return json(g.tuple(x)); }

Element element_from_json(const Group& g, const json& j) {
  if (j.is_number_integer()) {
    const auto v = j.get<long long>();
    if (v < 0 || v >= g.order()) parse_fail("element index out of range");
    return static_cast<Element>(v);
  }
  if (!j.is_array()) parse_fail("element must be a residue tuple or an index");
  std::vector<int> residues;
  for (const auto& r : j) {
    if (!r.is_number_integer()) parse_fail("residue must be an integer");
    residues.push_back(r.get<int>());
  }
  return g.from_tuple(residues);
}

json subset_to_json(const GroupSubset& a) {
  json out = json::array();
  for (Element x : a.elements()) out.push_back(element_to_json(a.group(), x));
  return out;
}

GroupSubset subset_from_json(const Group& g, const json& j) {
  if (!j.is_array()) parse_fail("set must be a JSON array");
  Mask m = 0;
  for (const auto& e : j) m |= Mask{1} << element_from_json(g, e);
  return GroupSubset(g, m);
}

std::string subset_to_hex(const GroupSubset& a) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(a.bits()));
  return buf;
}

GroupSubset subset_from_hex(const Group& g, std::string_view hex) {
  if (hex.size() < 3 || hex[0] != '0' || (hex[1] != 'x' && hex[1] != 'X') || hex.size() > 18) {
    parse_fail("bad hex set '" + std::string(hex) + "'");
  }
  Mask m = 0;
  for (char c : hex.substr(2)) {
    int v;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    else parse_fail("bad hex digit in '" + std::string(hex) + "'");
    m = m << 4 | static_cast<Mask>(v);
  }
  if ((m & ~g.full()) != 0) parse_fail("hex set has bits beyond |G|");
  return GroupSubset(g, m);
}

json pair_kind_to_json(const Group& g, const ElementaryPairKind& kind) {
  json j{{"tag", to_string(kind.tag)}, {"strict", kind.strict}};
  if (kind.d) j["d"] = element_to_json(g, *kind.d);
  if (kind.singleton) j["singleton"] = *kind.singleton == Side::A ? "A" : "B";
  if (kind.H) j["H"] = subset_to_json(kind.H->carrier());
  if (kind.g) j["g"] = element_to_json(g, *kind.g);
  if (kind.c) j["c"] = element_to_json(g, *kind.c);
  return j;
}

ElementaryPairKind pair_kind_from_json(const Group& g, const json& j) {
  const json& tag = field(j, "tag");
  if (!tag.is_string()) parse_fail("pair tag must be a string");
  auto parsed = parse_pair_tag(tag.get<std::string>());
  if (!parsed) parse_fail("unknown pair tag '" + tag.get<std::string>() + "'");
  ElementaryPairKind kind;
  kind.tag = *parsed;
  const json& strict = field(j, "strict");
  if (!strict.is_boolean()) parse_fail("'strict' must be a boolean");
  kind.strict = strict.get<bool>();
  if (j.contains("d")) kind.d = element_from_json(g, j.at("d"));
  if (j.contains("singleton")) {
    const auto& s = j.at("singleton");
    if (s == "A") kind.singleton = Side::A;
    else if (s == "B") kind.singleton = Side::B;
    else parse_fail("'singleton' must be \"A\" or \"B\"");
  }
  if (j.contains("H")) {
    GroupSubset h = subset_from_json(g, j.at("H"));
    if (!is_subgroup_mask(g, h.bits())) parse_fail("pair witness H is not a subgroup");
    kind.H = Subgroup::trusted(g, h.bits());
  }
  if (j.contains("g")) kind.g = element_from_json(g, j.at("g"));
  if (j.contains("c")) kind.c = element_from_json(g, j.at("c"));
  return kind;
}

json certificate_to_json(const KempermanCertificate& cert) {
  const Group& g = cert.group();
  json j;
  j["schema"] = kCertificateSchema;
  j["group"] = g.spec();
  j["H"] = subset_to_json(cert.H.carrier());
  j["A0"] = subset_to_json(cert.decomp_a.part0);
  j["A1"] = subset_to_json(cert.decomp_a.part1);
  j["B0"] = subset_to_json(cert.decomp_b.part0);
  j["B1"] = subset_to_json(cert.decomp_b.part1);
  j["pair"] = pair_kind_to_json(g, cert.pair_kind);
  j["quotient_element"] = element_to_json(g, cert.quotient_unique_at);
  j["branch"] = to_string(cert.branch);
  return j;
}

KempermanCertificate certificate_from_json(const json& j) {
  const json& schema = field(j, "schema");
  if (schema != kCertificateSchema) parse_fail("unsupported certificate schema " + schema.dump());
  const json& spec = field(j, "group");
  if (!spec.is_string()) parse_fail("'group' must be a string");
  Group g = parse_group(spec.get<std::string>());
  GroupSubset h = subset_from_json(g, field(j, "H"));
  // Non-subgroup H is reported by verify_certificate, not rejected here.
  Subgroup sub = Subgroup::trusted(g, h.bits());
  auto da = decomposition_from(sub, subset_from_json(g, field(j, "A0")),
                               subset_from_json(g, field(j, "A1")));
  auto db = decomposition_from(sub, subset_from_json(g, field(j, "B0")),
                               subset_from_json(g, field(j, "B1")));
  ElementaryPairKind kind = pair_kind_from_json(g, field(j, "pair"));
  Element q = element_from_json(g, field(j, "quotient_element"));
  auto branch = KempermanCertificate::Branch::Aperiodic;
  if (j.contains("branch")) {
    const json& b = j.at("branch");
    if (b == "periodic") {
      branch = KempermanCertificate::Branch::Periodic;
    } else if (b == "periodic-scan") {
      branch = KempermanCertificate::Branch::PeriodicScan;
    } else if (b != "aperiodic") {
      parse_fail("unknown branch " + b.dump());
    }
  }
  return KempermanCertificate{sub, std::move(da), std::move(db), std::move(kind), q, branch};
}

json condition_to_json(const GroupSubset& a, const GroupSubset& b, const ConditionI& cond) {
  const Group& g = a.group();
  json j{{"group", g.spec()},
         {"A", subset_to_json(a)},
         {"B", subset_to_json(b)},
         {"sumset", subset_to_json(cond.sum)},
         {"sumset_size", cond.sum_size},
         {"expected_critical_size", a.size() + b.size() - 1},
         {"period", subset_to_json(cond.period.carrier())},
         {"sum_size_critical", cond.sum_size_critical},
         {"sum_periodic", cond.sum_periodic},
         {"unique_expression_exists", cond.unique_expression_exists},
         {"condition_I", cond.holds}};
  if (cond.unique_c) j["unique_c"] = element_to_json(g, *cond.unique_c);
  return j;
}

json kappa_report_to_json(const KappaReport& r) {
  json frags = json::array();
  for (const auto& f : r.fragments) frags.push_back(subset_to_json(f));
  json atoms = json::array();
  for (const auto& a : r.atoms) atoms.push_back(subset_to_json(a));
  return json{{"group", r.S.group().spec()},
              {"S", subset_to_json(r.S)},
              {"k", r.k},
              {"separable", r.separable},
              {"kappa", r.kappa},
              {"fragments", std::move(frags)},
              {"fragments_complete", r.fragments_complete},
              {"atoms", std::move(atoms)}};
}

json hyper_atom_report_to_json(const HyperAtomReport& r) {
  json maximal = json::array();
  for (const auto& h : r.all_maximal) maximal.push_back(subset_to_json(h.carrier()));
  json image = json::array();
  for (Element y : r.quotient_image.elements()) image.push_back(y);
  return json{{"group", r.S.group().spec()},
              {"S", subset_to_json(r.S)},
              {"kappa1", r.kappa1},
              {"hyper_atom", subset_to_json(r.hyper_atom.carrier())},
              {"all_maximal", std::move(maximal)},
              {"quotient_order", r.quotient_image.group().order()},
              {"quotient_image", std::move(image)},
              {"quotient_shape", to_string(r.quotient_shape)}};
}

json dichotomy_to_json(const QuasiperiodDichotomy& d, const Group& g) {
  json j;
  j["group"] = g.spec();
  j["whole_group_decomposes"] = d.whole_group_decomposes;
  if (d.branch == QuasiperiodDichotomy::Branch::QuasiPeriodic) {
    j["branch"] = "quasi-periodic";
    j["K"] = subset_to_json(d.K->carrier());
    auto dump = [&](const QuasiPeriodicDecomposition& q) {
      return json{{"part0", subset_to_json(q.part0)}, {"part1", subset_to_json(q.part1)}};
    };
    j["S"] = dump(*d.decomposition_s);
    j["T"] = dump(*d.decomposition_t);
  } else {
    j["branch"] = "strict-elementary";
    j["pair"] = pair_kind_to_json(g, *d.kind);
  }
  return j;
}

Element parse_element(const Group& g, std::string_view text) {
  return SubsetParser(g, text).parse_single();
}

GroupSubset parse_subset(const Group& g, std::string_view text) {
  return SubsetParser(g, text).parse_set();
}

}  // namespace kempkit
