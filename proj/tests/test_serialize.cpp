#include <gtest/gtest.h>

#include "kempkit/error.hpp"
#include "kempkit/serialize.hpp"

using namespace kempkit;

namespace {

GroupSubset set(const Group& g, std::initializer_list<Element> xs) { return GroupSubset::of(g, xs); }

std::string parse_message(const Group& g, std::string_view text) {
  try {
    parse_subset(g, text);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
    return e.what();
  }
  ADD_FAILURE() << "accepted '" << text << "'";
  return {};
}

}  // namespace

TEST(ParseSubset, IndicesAndTuples) {
  Group z5 = make_group({5});
  EXPECT_EQ(parse_subset(z5, "0,1,2"), set(z5, {0, 1, 2}));
  EXPECT_EQ(parse_subset(z5, " { 4 , 0 } "), set(z5, {0, 4}));
  EXPECT_TRUE(parse_subset(z5, "").is_empty());
  EXPECT_TRUE(parse_subset(z5, "{}").is_empty());

  Group g = make_group({2, 4});
  EXPECT_EQ(parse_subset(g, "(1,3),(0,2)"), set(g, {7, 2}));
  EXPECT_EQ(parse_subset(g, "(1,3),2"), set(g, {7, 2}));
  EXPECT_EQ(parse_element(g, "(1, 0)"), 4);
}

TEST(ParseSubset, ErrorsCarryPosition) {
  Group z5 = make_group({5});
  EXPECT_NE(parse_message(z5, "0,1,x").find("position 4"), std::string::npos);
  EXPECT_NE(parse_message(z5, "0,7").find("out of range"), std::string::npos);
  EXPECT_NE(parse_message(z5, "{0,1").find("expected '}'"), std::string::npos);
  Group g = make_group({2, 4});
  EXPECT_NE(parse_message(g, "(1,3),(2,0)").find("position 6"), std::string::npos);
  EXPECT_NE(parse_message(g, "(1,3").find("expected ')'"), std::string::npos);
}

TEST(Hex, RoundTrip) {
  Group g = make_group({3, 3});
  for (Mask m = 0; m <= g.full(); m += 37) {
    GroupSubset a(g, m);
    EXPECT_EQ(subset_from_hex(g, subset_to_hex(a)), a);
  }
  EXPECT_EQ(subset_to_hex(set(g, {0, 4})), "0x11");
  EXPECT_THROW(subset_from_hex(g, "0x400"), Error);
  EXPECT_THROW(subset_from_hex(g, "12"), Error);
  EXPECT_THROW(subset_from_hex(g, "0xg"), Error);
}

TEST(SubsetJson, TupleFormRoundTrip) {
  Group g = make_group({2, 4});
  GroupSubset a = set(g, {1, 6, 7});
  const json j = subset_to_json(a);
  EXPECT_EQ(j, json::parse("[[0,1],[1,2],[1,3]]"));
  EXPECT_EQ(subset_from_json(g, j), a);
  EXPECT_EQ(subset_from_json(g, json::parse("[1,6,7]")), a);
  EXPECT_THROW(subset_from_json(g, json::parse("[[2,0]]")), Error);
  EXPECT_THROW(subset_from_json(g, json::parse("{\"x\":1}")), Error);
}

TEST(Certificate, JsonRoundTripEveryBranch) {
  struct Case {
    std::vector<int> orders;
    std::vector<Element> a, b;
  };
  const std::vector<Case> cases = {
      {{4}, {0, 1}, {0, 1}},          // aperiodic SP1
      {{6}, {0, 3}, {0, 1, 3}},       // periodic SP2
      {{4}, {0, 1}, {0, 1, 2}},       // periodic, needs the scan
      {{5}, {0, 1, 2}, {0, 1, 3}},    // SP4
      {{7}, {0, 1, 3}, {1, 2, 3, 5}}, // SP3
  };
  std::set<std::string> branches;
  for (const auto& c : cases) {
    Group g = make_group(std::vector<int>(c.orders), 64);
    auto cert = build_certificate(GroupSubset::of(g, c.a), GroupSubset::of(g, c.b));
    const json j = certificate_to_json(cert);
    EXPECT_EQ(j.at("schema"), "kcert/1");
    branches.insert(j.at("branch").get<std::string>());
    auto back = certificate_from_json(json::parse(j.dump()));
    EXPECT_EQ(certificate_to_json(back), j);
    EXPECT_EQ(back.branch, cert.branch);
    EXPECT_TRUE(verify_certificate(back).ok);
  }
  EXPECT_EQ(branches, (std::set<std::string>{"aperiodic", "periodic", "periodic-scan"}));
}

TEST(Certificate, TamperedJsonFailsVerification) {
  Group z5 = make_group({5});
  auto cert = build_certificate(set(z5, {0, 1, 2}), set(z5, {0, 1, 3}));
  json j = certificate_to_json(cert);
  j["pair"]["c"] = json::array({2});
  auto check = verify_certificate(certificate_from_json(j));
  EXPECT_FALSE(check.ok);
  EXPECT_EQ(check.reason, "SP4 witness fails");

  json moved = certificate_to_json(cert);
  moved["A1"] = json::parse("[[0],[1],[3]]");
  EXPECT_FALSE(verify_certificate(certificate_from_json(moved)).ok);

  json not_subgroup = certificate_to_json(cert);
  not_subgroup["H"] = json::parse("[[0],[1]]");
  check = verify_certificate(certificate_from_json(not_subgroup));
  EXPECT_FALSE(check.ok);
  EXPECT_EQ(check.reason, "H is not a subgroup");
}

TEST(Certificate, MalformedJsonIsParseError) {
  Group z4 = make_group({4});
  json j = certificate_to_json(build_certificate(set(z4, {0, 1}), set(z4, {0, 1})));
  auto kind_of = [](const json& bad) {
    try {
      certificate_from_json(bad);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InternalInvariant;
  };
  json wrong_schema = j;
  wrong_schema["schema"] = "kcert/0";
  EXPECT_EQ(kind_of(wrong_schema), ErrorKind::Parse);
  json missing = j;
  missing.erase("B1");
  EXPECT_EQ(kind_of(missing), ErrorKind::Parse);
  json bad_tag = j;
  bad_tag["pair"]["tag"] = "SP9";
  EXPECT_EQ(kind_of(bad_tag), ErrorKind::Parse);
  json bad_branch = j;
  bad_branch["branch"] = "sideways";
  EXPECT_EQ(kind_of(bad_branch), ErrorKind::Parse);
}

TEST(Reports, JsonShapes) {
  Group z6 = make_group({6});
  auto cond = check_condition_I(set(z6, {0, 3}), set(z6, {0, 1, 3}));
  json c = condition_to_json(set(z6, {0, 3}), set(z6, {0, 1, 3}), cond);
  EXPECT_EQ(c.at("sumset_size"), 4);
  EXPECT_EQ(c.at("condition_I"), true);
  EXPECT_EQ(c.at("unique_c"), json::array({1}));

  json k = kappa_report_to_json(kappa(set(z6, {0, 2, 3}), 1));
  EXPECT_EQ(k.at("kappa"), 2);
  EXPECT_TRUE(k.at("separable").get<bool>());

  json h = hyper_atom_report_to_json(hyper_atom(set(z6, {0, 2, 3})));
  EXPECT_EQ(h.at("hyper_atom"), json::parse("[[0],[3]]"));
  EXPECT_EQ(h.at("quotient_order"), 3);
}
