#include <gtest/gtest.h>

#include <random>

#include "kempkit/error.hpp"
#include "kempkit/kemperman.hpp"
#include "naive.hpp"

using namespace kempkit;

namespace {

GroupSubset set(const Group& g, std::initializer_list<Element> xs) { return GroupSubset::of(g, xs); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no kempkit::Error thrown";
  return ErrorKind::InternalInvariant;
}

bool tag_in(const naive::Kinds& k, PairTag tag) {
  switch (tag) {
    case PairTag::SP1: return k.sp1;
    case PairTag::SP2: return k.sp2;
    case PairTag::SP3: return k.sp3;
    case PairTag::SP4: return k.sp4;
  }
  return false;
}

bool naive_accepts(const naive::Group& ref, const KempermanCertificate& cert) {
  auto s = [](const GroupSubset& x) { return naive::from_mask(x.bits()); };
  return naive::witness_holds(ref, s(cert.H.carrier()), s(cert.decomp_a.part0),
                              s(cert.decomp_a.part1), s(cert.decomp_b.part0),
                              s(cert.decomp_b.part1), s(cert.a()), s(cert.b()));
}

}  // namespace

TEST(ConditionI, Examples) {
  Group z4 = make_group({4});
  auto c4 = check_condition_I(set(z4, {0, 1}), set(z4, {0, 1}));
  EXPECT_TRUE(c4.holds);
  EXPECT_EQ(c4.sum_size, 3);
  EXPECT_FALSE(c4.sum_periodic);

  Group z6 = make_group({6});
  auto c6 = check_condition_I(set(z6, {0, 3}), set(z6, {0, 1, 3}));
  EXPECT_TRUE(c6.holds);
  EXPECT_EQ(c6.sum_size, 4);
  EXPECT_EQ(c6.period.carrier(), set(z6, {0, 3}));
  EXPECT_EQ(c6.unique_c, 1);

  Group z5 = make_group({5});
  auto c5 = check_condition_I(set(z5, {0, 1}), set(z5, {0, 2}));
  EXPECT_FALSE(c5.holds);
  EXPECT_EQ(c5.sum_size, 4);
  EXPECT_EQ(kind_of([&] { check_condition_I(GroupSubset::empty(z5), set(z5, {0})); }),
            ErrorKind::Precondition);
}

TEST(Classify, NamedExamples) {
  Group z7 = make_group({7});
  auto sp1 = classify_elementary(set(z7, {0, 1, 2}), set(z7, {0, 1}));
  ASSERT_TRUE(sp1);
  EXPECT_EQ(sp1->tag, PairTag::SP1);
  EXPECT_EQ(sp1->d, 1);

  auto sp3 = classify_elementary(set(z7, {0, 1, 3}), set(z7, {1, 2, 3, 5}));
  ASSERT_TRUE(sp3);
  EXPECT_EQ(sp3->tag, PairTag::SP3);
  EXPECT_TRUE(sp3->strict);
  EXPECT_TRUE(sp3->H->is_whole());
  EXPECT_EQ(sp3->g, 0);

  Group z5 = make_group({5});
  auto sp4 = classify_elementary(set(z5, {0, 1, 2}), set(z5, {0, 1, 3}));
  ASSERT_TRUE(sp4);
  EXPECT_EQ(sp4->tag, PairTag::SP4);
  EXPECT_FALSE(sp4->strict);
  EXPECT_EQ(sp4->H->order(), 5);
  EXPECT_EQ(sp4->c, 4);

  auto sp2 = classify_elementary(set(z5, {3}), set(z5, {0, 1, 3}));
  ASSERT_TRUE(sp2);
  EXPECT_EQ(sp2->tag, PairTag::SP2);
  EXPECT_EQ(sp2->singleton, Side::A);
}

TEST(Classify, SingletonAndApOverlapResolvesToSp2) {
  Group z7 = make_group({7});
  auto all = classify_all(set(z7, {0}), set(z7, {0, 1}));
  ASSERT_GE(all.size(), 2u);
  EXPECT_EQ(all[0].tag, PairTag::SP2);
  EXPECT_EQ(all[1].tag, PairTag::SP1);
  EXPECT_EQ(classify_elementary(set(z7, {0}), set(z7, {0, 1}))->tag, PairTag::SP2);
}

TEST(Classify, AgreesWithDefinitionsExhaustively) {
  for (const auto& orders : factor_lists_up_to(8)) {
    Group g = make_group(orders, 64);
    naive::Group ref(orders);
    for (Mask am = 1; am <= g.full(); ++am) {
      for (Mask bm = 1; bm <= g.full(); ++bm) {
        GroupSubset a(g, am), b(g, bm);
        const auto expect = naive::kinds(ref, naive::from_mask(am), naive::from_mask(bm));
        auto all = classify_all(a, b);
        naive::Kinds got;
        for (const auto& k : all) {
          EXPECT_FALSE(pair_kind_failure(a, b, k)) << to_string(k.tag);
          EXPECT_TRUE(tag_in(expect, k.tag)) << g.spec() << a.to_string() << b.to_string();
          if (k.tag == PairTag::SP4) EXPECT_TRUE(naive::is_prime(k.H->order()));
          got.sp1 |= k.tag == PairTag::SP1;
          got.sp2 |= k.tag == PairTag::SP2;
          got.sp3 |= k.tag == PairTag::SP3;
          got.sp4 |= k.tag == PairTag::SP4;
        }
        ASSERT_EQ(got.sp1, expect.sp1) << g.spec() << a.to_string() << b.to_string();
        ASSERT_EQ(got.sp2, expect.sp2);
        ASSERT_EQ(got.sp3, expect.sp3) << g.spec() << a.to_string() << b.to_string();
        ASSERT_EQ(got.sp4, expect.sp4) << g.spec() << a.to_string() << b.to_string();
      }
    }
  }
}

TEST(Classify, RandomPairsReverify) {
  std::mt19937_64 rng(10000);
  auto lists = factor_lists_up_to(16);
  int classified = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    Group g = make_group(lists[rng() % lists.size()], 64);
    // Small sets, so that elementary pairs are common.
    Mask am = 0, bm = 0;
    const int na = 1 + static_cast<int>(rng() % 4), nb = 1 + static_cast<int>(rng() % 4);
    while (std::popcount(am) < std::min(na, g.order())) am |= Mask{1} << (rng() % g.order());
    while (std::popcount(bm) < std::min(nb, g.order())) bm |= Mask{1} << (rng() % g.order());
    GroupSubset a(g, am), b(g, bm);
    if (auto k = classify_elementary(a, b)) {
      ++classified;
      EXPECT_FALSE(pair_kind_failure(a, b, *k));
      if (k->tag == PairTag::SP4) EXPECT_TRUE(naive::is_prime(k->H->order()));
    }
  }
  EXPECT_GT(classified, 1000);
}

TEST(Classify, AnyOrderSp4IsLarger) {
  int loose_only = 0;
  for (const auto& orders : factor_lists_up_to(8)) {
    Group g = make_group(orders, 64);
    for (Mask am = 1; am <= g.full(); ++am) {
      for (Mask bm = 1; bm <= g.full(); ++bm) {
        GroupSubset a(g, am), b(g, bm);
        auto loose = classify_all(a, b, ClassifyOptions{.any_order_sp4 = true});
        bool strict_sp4 = false, loose_sp4 = false;
        for (const auto& k : classify_all(a, b)) strict_sp4 |= k.tag == PairTag::SP4;
        for (const auto& k : loose) loose_sp4 |= k.tag == PairTag::SP4;
        if (strict_sp4) EXPECT_TRUE(loose_sp4);
        if (loose_sp4 && !strict_sp4) {
          ++loose_only;
          for (const auto& k : loose) {
            if (k.tag == PairTag::SP4) EXPECT_FALSE(naive::is_prime(k.H->order()));
          }
        }
      }
    }
  }
  EXPECT_GT(loose_only, 0);
}

TEST(Certificate, NamedExamples) {
  Group z4 = make_group({4});
  auto c4 = build_certificate(set(z4, {0, 1}), set(z4, {0, 1}));
  EXPECT_TRUE(c4.H.is_whole());
  EXPECT_TRUE(c4.decomp_a.part0.is_empty());
  EXPECT_EQ(c4.decomp_a.part1, set(z4, {0, 1}));
  EXPECT_EQ(c4.pair_kind.tag, PairTag::SP1);
  EXPECT_EQ(c4.pair_kind.d, 1);
  EXPECT_TRUE(verify_certificate(c4).ok);

  Group z6 = make_group({6});
  auto c6 = build_certificate(set(z6, {0, 3}), set(z6, {0, 1, 3}));
  EXPECT_EQ(c6.H.carrier(), set(z6, {0, 3}));
  EXPECT_TRUE(c6.decomp_a.part0.is_empty());
  EXPECT_EQ(c6.decomp_a.part1, set(z6, {0, 3}));
  EXPECT_EQ(c6.decomp_b.part0, set(z6, {0, 3}));
  EXPECT_EQ(c6.decomp_b.part1, set(z6, {1}));
  EXPECT_EQ(c6.pair_kind.tag, PairTag::SP2);
  EXPECT_EQ(c6.branch, KempermanCertificate::Branch::Periodic);
  EXPECT_TRUE(verify_certificate(c6).ok);

  Group z5 = make_group({5});
  try {
    build_certificate(set(z5, {0, 1}), set(z5, {0, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Precondition);
    EXPECT_NE(std::string(e.what()).find("condition (I) fails: |A+B|=4"), std::string::npos);
  }
}

TEST(Certificate, Mutations) {
  Group z4 = make_group({4});
  auto cert = build_certificate(set(z4, {0, 1}), set(z4, {0, 1}));
  auto bad_d = cert;
  bad_d.pair_kind.d = 2;
  auto check = verify_certificate(bad_d);
  EXPECT_FALSE(check.ok);
  EXPECT_EQ(check.reason, "SP1 witness fails");

  auto trivial = cert;
  trivial.H = Subgroup::trivial(z4);
  trivial.decomp_a.K = trivial.H;
  trivial.decomp_b.K = trivial.H;
  check = verify_certificate(trivial);
  EXPECT_FALSE(check.ok);
  EXPECT_EQ(check.reason, "H must be nonzero");

  auto moved = cert;
  moved.quotient_unique_at = 1;
  EXPECT_FALSE(verify_certificate(moved).ok);
}

// Every pair in every group of order <= 8. With prime-order SP4 some
// condition-(I) pairs have no witness at all; build_certificate must then
// raise TheoremFalsified, and the larger SP4 class must still certify them.
TEST(Certificate, EquivalenceExhaustive) {
  const ClassifyOptions any_order{.any_order_sp4 = true};
  for (const auto& orders : factor_lists_up_to(8)) {
    Group g = make_group(orders, 64);
    naive::Group ref(orders);
    for (Mask am = 1; am <= g.full(); ++am) {
      for (Mask bm = 1; bm <= g.full(); ++bm) {
        GroupSubset a(g, am), b(g, bm);
        const auto sa = naive::from_mask(am), sb = naive::from_mask(bm);
        const bool cond = naive::condition_I(ref, sa, sb);
        ASSERT_EQ(check_condition_I(a, b).holds, cond);
        if (!cond) {
          EXPECT_EQ(kind_of([&] { build_certificate(a, b); }), ErrorKind::Precondition);
          // A witness for the other clauses can exist; the quotient is then
          // never critical and verification refuses it.
          if (auto literal = find_certificate(a, b, any_order)) {
            ASSERT_GT(quotient_excess(a, b, literal->H), 0) << g.spec() << a.to_string() << b.to_string();
            ASSERT_FALSE(verify_certificate(*literal, any_order).ok);
          }
          continue;
        }
        std::optional<KempermanCertificate> cert;
        try {
          cert = build_certificate(a, b);
        } catch (const Error& e) {
          ASSERT_EQ(e.kind(), ErrorKind::TheoremFalsified) << e.what();
          ASSERT_FALSE(naive::has_witness(ref, sa, sb)) << g.spec() << a.to_string() << b.to_string();
          auto loose = build_certificate(a, b, any_order);
          ASSERT_TRUE(verify_certificate(loose, any_order).ok);
          ASSERT_EQ(loose.pair_kind.tag, PairTag::SP4);
          continue;
        }
        ASSERT_TRUE(verify_certificate(*cert).ok) << verify_certificate(*cert).reason;
        ASSERT_TRUE(naive_accepts(ref, *cert)) << g.spec() << a.to_string() << b.to_string();
        ASSERT_EQ(cert->a(), a);
        ASSERT_EQ(cert->b(), b);
      }
    }
  }
}

TEST(Certificate, PrimeSp4GapExample) {
  Group z6 = make_group({6});
  GroupSubset a = set(z6, {0, 1, 2}), b = set(z6, {0, 1, 2, 4});
  auto cond = check_condition_I(a, b);
  EXPECT_TRUE(cond.holds);
  EXPECT_EQ(cond.unique_c, 5);
  EXPECT_EQ(kind_of([&] { build_certificate(a, b); }), ErrorKind::TheoremFalsified);
  auto cert = build_certificate(a, b, ClassifyOptions{.any_order_sp4 = true});
  EXPECT_TRUE(cert.H.is_whole());
  EXPECT_EQ(cert.pair_kind.tag, PairTag::SP4);
  EXPECT_EQ(cert.pair_kind.H->order(), 6);
  EXPECT_FALSE(verify_certificate(cert).ok);
  EXPECT_TRUE(verify_certificate(cert, ClassifyOptions{.any_order_sp4 = true}).ok);
}

TEST(Certificate, QuotientClauseIsNotRedundant) {
  Group z8 = make_group({8});
  GroupSubset a = set(z8, {0, 1, 4}), b = set(z8, {0, 2, 4});
  EXPECT_FALSE(check_condition_I(a, b).holds);
  auto literal = find_certificate(a, b);
  ASSERT_TRUE(literal);
  EXPECT_EQ(literal->H.carrier(), set(z8, {0, 4}));
  EXPECT_EQ(literal->pair_kind.tag, PairTag::SP2);
  EXPECT_EQ(quotient_excess(a, b, literal->H), 1);
  auto check = verify_certificate(*literal);
  EXPECT_FALSE(check.ok);
  EXPECT_EQ(check.reason, "|φ(A)+φ(B)| != |φ(A)|+|φ(B)|-1");
}

TEST(Certificate, WitnessSearchIsComplete) {
  for (const auto& orders : factor_lists_up_to(6)) {
    Group g = make_group(orders, 64);
    naive::Group ref(orders);
    for (Mask am = 1; am <= g.full(); ++am) {
      for (Mask bm = 1; bm <= g.full(); ++bm) {
        GroupSubset a(g, am), b(g, bm);
        const auto sa = naive::from_mask(am), sb = naive::from_mask(bm);
        for (bool loose : {false, true}) {
          ASSERT_EQ(find_certificate(a, b, ClassifyOptions{.any_order_sp4 = loose}).has_value(),
                    naive::has_witness(ref, sa, sb, loose))
              << g.spec() << a.to_string() << b.to_string() << " loose=" << loose;
        }
      }
    }
  }
}

TEST(Certificate, ScherkHoldsOnPeriodicBranch) {
  for (const auto& orders : factor_lists_up_to(8)) {
    Group g = make_group(orders, 64);
    for (Mask am = 1; am <= g.full(); ++am) {
      for (Mask bm = 1; bm <= g.full(); ++bm) {
        GroupSubset a(g, am), b(g, bm);
        if (!check_condition_I(a, b).holds) continue;
        auto cert = build_certificate(a, b, ClassifyOptions{.any_order_sp4 = true});
        if (cert.branch == KempermanCertificate::Branch::Periodic) {
          EXPECT_EQ(quotient_excess(a, b, cert.H), 0);
        }
      }
    }
  }
}

TEST(Dichotomy, Examples) {
  Group z4 = make_group({4});
  auto d4 = quasiperiod_or_elementary(set(z4, {0, 1}), set(z4, {0, 1}));
  EXPECT_EQ(d4.branch, QuasiperiodDichotomy::Branch::StrictElementary);
  EXPECT_EQ(d4.kind->tag, PairTag::SP1);
  EXPECT_TRUE(d4.whole_group_decomposes);

  Group z7 = make_group({7});
  auto d7 = quasiperiod_or_elementary(set(z7, {0, 1, 3}), set(z7, {1, 2, 3, 5}));
  EXPECT_EQ(d7.branch, QuasiperiodDichotomy::Branch::StrictElementary);
  EXPECT_EQ(d7.kind->tag, PairTag::SP3);

  auto d1 = quasiperiod_or_elementary(set(z7, {2}), set(z7, {0, 1, 3}));
  EXPECT_EQ(d1.kind->tag, PairTag::SP2);

  EXPECT_EQ(kind_of([&] { quasiperiod_or_elementary(set(z7, {0, 2}), set(z7, {0, 1})); }),
            ErrorKind::Precondition);
}

TEST(Dichotomy, ExhaustiveSmallGroups) {
  for (const auto& orders : factor_lists_up_to(8)) {
    Group g = make_group(orders, 64);
    naive::Group ref(orders);
    for (Mask am = 1; am <= g.full(); ++am) {
      for (Mask bm = 1; bm <= g.full(); ++bm) {
        const auto sa = naive::from_mask(am), sb = naive::from_mask(bm);
        const auto sum = naive::sumset(ref, sa, sb);
        if (sum.size() != sa.size() + sb.size() - 1 || naive::period(ref, sum).size() != 1) continue;
        GroupSubset a(g, am), b(g, bm);
        auto d = quasiperiod_or_elementary(a, b);
        if (d.branch == QuasiperiodDichotomy::Branch::QuasiPeriodic) {
          EXPECT_FALSE(d.K->is_trivial());
          EXPECT_FALSE(d.K->is_whole());
          EXPECT_TRUE(is_valid_decomposition(*d.decomposition_s, a));
          EXPECT_TRUE(is_valid_decomposition(*d.decomposition_t, b));
        } else {
          EXPECT_TRUE(d.kind->strict);
          EXPECT_TRUE(naive::kinds(ref, sa, sb).strict());
        }
      }
    }
  }
}
