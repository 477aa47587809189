#include "kempkit/kemperman.hpp"

#include <algorithm>
#include <bit>

#include "kempkit/error.hpp"

namespace kempkit {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

// <A - A>: A lies in one H-coset iff this subgroup is inside H.
Mask difference_closure(const Group& g, Mask a) {
  return g.closure(g.sumset(a, g.negate(a)));
}

bool inside_one_coset(const Group& g, Mask a, Mask h) {
  return a == 0 || (difference_closure(g, a) & ~h) == 0;
}

// Elements c with r_{A,B}(c) = 1, as a mask.
Mask unique_expressions(const Group& g, Mask a, Mask b) {
  Mask out = 0;
  const Mask neg_b = g.negate(b);
  for (Mask s = g.sumset(a, b); s != 0; s &= s - 1) {
    const Element c = std::countr_zero(s);
    if (std::popcount(g.translate(neg_b, c) & a) == 1) out |= Mask{1} << c;
  }
  return out;
}

std::optional<ElementaryPairKind> match_sp1(const Group& g, Mask a, Mask b) {
  const int need = std::popcount(a) + std::popcount(b) - 1;
  auto da = masks::ap_differences(g, a);
  auto db = masks::ap_differences(g, b);
  for (Element d : da) {
    if (g.element_order(d) >= need && std::binary_search(db.begin(), db.end(), d)) {
      ElementaryPairKind kind{.tag = PairTag::SP1, .strict = true};
      kind.d = d;
      return kind;
    }
  }
  return std::nullopt;
}

std::optional<ElementaryPairKind> match_sp2(Mask a, Mask b) {
  if (std::popcount(a) != 1 && std::popcount(b) != 1) return std::nullopt;
  ElementaryPairKind kind{.tag = PairTag::SP2, .strict = true};
  kind.singleton = std::popcount(a) == 1 ? Side::A : Side::B;
  return kind;
}

// (coset of A) \ A, with the coset taken through A's smallest member.
Mask coset_complement(const Group& g, Mask a, Mask h) {
  return g.translate(h, std::countr_zero(a)) & ~a;
}

std::optional<ElementaryPairKind> match_sp3(const Group& g, Mask a, Mask b) {
  const int size = std::popcount(a) + std::popcount(b);
  if (masks::period(g, a) != 1) return std::nullopt;
  if (unique_expressions(g, a, b) != 0) return std::nullopt;
  const Mask needed = difference_closure(g, a) | difference_closure(g, b);
  for (Mask h : g.subgroup_masks()) {
    if (std::popcount(h) != size || (needed & ~h) != 0) continue;
    const Mask reflected = g.negate(coset_complement(g, a, h));
    for (Element x = 0; x < g.order(); ++x) {
      if (g.translate(reflected, x) == b) {
        ElementaryPairKind kind{.tag = PairTag::SP3, .strict = true};
        kind.H = Subgroup::trusted(g, h);
        kind.g = x;
        return kind;
      }
    }
  }
  return std::nullopt;
}

std::optional<ElementaryPairKind> match_sp4(const Group& g, Mask a, Mask b, bool any_order) {
  const int order = std::popcount(a) + std::popcount(b) - 1;
  if (!any_order && !is_prime(order)) return std::nullopt;
  const Mask unique = unique_expressions(g, a, b);
  if (std::popcount(unique) != 1) return std::nullopt;
  const Mask needed = difference_closure(g, a) | difference_closure(g, b);
  for (Mask h : g.subgroup_masks()) {
    if (std::popcount(h) != order || (needed & ~h) != 0) continue;
    ElementaryPairKind kind{.tag = PairTag::SP4, .strict = false};
    kind.H = Subgroup::trusted(g, h);
    kind.c = std::countr_zero(unique);
    return kind;
  }
  return std::nullopt;
}

void require_pair(const GroupSubset& a, const GroupSubset& b, const char* op) {
  if (!(a.group() == b.group())) {
    throw Error(ErrorKind::GroupMismatch, std::string(op) + ": operands in different groups");
  }
  if (a.is_empty() || b.is_empty()) {
    throw Error(ErrorKind::Precondition, std::string(op) + ": A and B must be nonempty");
  }
}

// |(φ(x) - φ(A)) ∩ φ(B)|, counted through the H-saturations A+H and B+H.
int quotient_rep_count(const Group& g, Mask a, Mask b, Mask h, Element x) {
  const Mask ah = g.sumset(a, h);
  const Mask bh = g.sumset(b, h);
  return masks::rep_count(g, ah, bh, x) / std::popcount(h);
}

std::optional<KempermanCertificate> certificate_for(const GroupSubset& a, const GroupSubset& b,
                                                    const QuasiPeriodicDecomposition& da,
                                                    const QuasiPeriodicDecomposition& db,
                                                    KempermanCertificate::Branch branch,
                                                    const ClassifyOptions& options) {
  const Group& g = a.group();
  if (da.part1.is_empty() || db.part1.is_empty()) return std::nullopt;
  const Mask h = da.K.bits();
  const Element x = g.add(da.part1.min_element(), db.part1.min_element());
  if (quotient_rep_count(g, a.bits(), b.bits(), h, x) != 1) return std::nullopt;
  auto kind = classify_elementary(da.part1, db.part1, options);
  if (!kind) return std::nullopt;
  return KempermanCertificate{da.K, da, db, *kind, coset_label(da.K, x), branch};
}

std::optional<KempermanCertificate> periodic_construction(const GroupSubset& a,
                                                          const GroupSubset& b, Mask h,
                                                          Mask unique,
                                                          const ClassifyOptions& options) {
  const Group& g = a.group();
  Subgroup sub = Subgroup::trusted(g, h);
  if (quotient_excess(a, b, sub) != 0) return std::nullopt;
  const Mask neg_b = g.negate(b.bits());
  for (Mask rest = unique; rest != 0; rest &= rest - 1) {
    const Element c = std::countr_zero(rest);
    const Element a_c = std::countr_zero(g.translate(neg_b, c) & a.bits());
    const Element b_c = g.sub(c, a_c);
    const Mask coset_a = g.translate(h, a_c);
    const Mask coset_b = g.translate(h, b_c);
    QuasiPeriodicDecomposition da{sub, GroupSubset(g, a.bits() & ~coset_a),
                                  GroupSubset(g, a.bits() & coset_a), coset_label(sub, a_c)};
    QuasiPeriodicDecomposition db{sub, GroupSubset(g, b.bits() & ~coset_b),
                                  GroupSubset(g, b.bits() & coset_b), coset_label(sub, b_c)};
    if (!is_valid_decomposition(da, a) || !is_valid_decomposition(db, b)) continue;
    if (auto cert = certificate_for(a, b, da, db, KempermanCertificate::Branch::Periodic, options)) {
      return cert;
    }
  }
  return std::nullopt;
}

}  // namespace

const char* to_string(PairTag tag) {
  switch (tag) {
    case PairTag::SP1: return "SP1";
    case PairTag::SP2: return "SP2";
    case PairTag::SP3: return "SP3";
    case PairTag::SP4: return "SP4";
  }
  return "SP?";
}

const char* to_string(KempermanCertificate::Branch branch) {
  switch (branch) {
    case KempermanCertificate::Branch::Aperiodic: return "aperiodic";
    case KempermanCertificate::Branch::Periodic: return "periodic";
    case KempermanCertificate::Branch::PeriodicScan: return "periodic-scan";
  }
  return "?";
}

std::optional<PairTag> parse_pair_tag(std::string_view text) {
  for (PairTag t : {PairTag::SP1, PairTag::SP2, PairTag::SP3, PairTag::SP4}) {
    if (text == to_string(t)) return t;
  }
  return std::nullopt;
}

std::vector<ElementaryPairKind> classify_all(const GroupSubset& a, const GroupSubset& b,
                                             const ClassifyOptions& options) {
  require_pair(a, b, "classify_elementary");
  const Group& g = a.group();
  std::vector<ElementaryPairKind> out;
  if (auto k = match_sp2(a.bits(), b.bits())) out.push_back(*k);
  if (auto k = match_sp1(g, a.bits(), b.bits())) out.push_back(*k);
  if (auto k = match_sp3(g, a.bits(), b.bits())) out.push_back(*k);
  if (auto k = match_sp4(g, a.bits(), b.bits(), options.any_order_sp4)) out.push_back(*k);
  return out;
}

std::optional<ElementaryPairKind> classify_elementary(const GroupSubset& a, const GroupSubset& b,
                                                      const ClassifyOptions& options) {
  require_pair(a, b, "classify_elementary");
  const Group& g = a.group();
  if (auto k = match_sp2(a.bits(), b.bits())) return k;
  if (auto k = match_sp1(g, a.bits(), b.bits())) return k;
  if (auto k = match_sp3(g, a.bits(), b.bits())) return k;
  return match_sp4(g, a.bits(), b.bits(), options.any_order_sp4);
}

std::optional<std::string> pair_kind_failure(const GroupSubset& a, const GroupSubset& b,
                                             const ElementaryPairKind& kind,
                                             const ClassifyOptions& options) {
  const Group& g = a.group();
  const Mask am = a.bits(), bm = b.bits();
  const std::string fail = std::string(to_string(kind.tag)) + " witness fails";
  if (!(b.group() == g) || am == 0 || bm == 0) return fail;
  if (kind.strict != (kind.tag != PairTag::SP4)) return fail;
  const int na = std::popcount(am), nb = std::popcount(bm);
  auto valid_subgroup = [&]() {
    return kind.H && kind.H->group() == g && is_subgroup_mask(g, kind.H->bits());
  };
  switch (kind.tag) {
    case PairTag::SP1: {
      if (!kind.d || *kind.d < 0 || *kind.d >= g.order()) return fail;
      if (g.element_order(*kind.d) < na + nb - 1) return fail;
      auto da = masks::ap_differences(g, am);
      auto db = masks::ap_differences(g, bm);
      if (!std::binary_search(da.begin(), da.end(), *kind.d) ||
          !std::binary_search(db.begin(), db.end(), *kind.d)) {
        return fail;
      }
      return std::nullopt;
    }
    case PairTag::SP2: {
      if (!kind.singleton) return fail;
      return (*kind.singleton == Side::A ? na : nb) == 1 ? std::nullopt
                                                          : std::optional<std::string>(fail);
    }
    case PairTag::SP3: {
      if (!valid_subgroup() || !kind.g || *kind.g < 0 || *kind.g >= g.order()) return fail;
      const Mask h = kind.H->bits();
      if (masks::period(g, am) != 1) return fail;
      if (!inside_one_coset(g, am, h) || !inside_one_coset(g, bm, h)) return fail;
      if (g.translate(g.negate(bm), *kind.g) != coset_complement(g, am, h)) return fail;
      if (unique_expressions(g, am, bm) != 0) return fail;
      return std::nullopt;
    }
    case PairTag::SP4: {
      if (!valid_subgroup() || !kind.c || *kind.c < 0 || *kind.c >= g.order()) return fail;
      const Mask h = kind.H->bits();
      if (!options.any_order_sp4 && !is_prime(std::popcount(h))) return fail;
      if (!inside_one_coset(g, am, h) || !inside_one_coset(g, bm, h)) return fail;
      if (na + nb != std::popcount(h) + 1) return fail;
      if (unique_expressions(g, am, bm) != (Mask{1} << *kind.c)) return fail;
      return std::nullopt;
    }
  }
  return fail;
}

ConditionI check_condition_I(const GroupSubset& a, const GroupSubset& b) {
  require_pair(a, b, "check_condition_I");
  const Group& g = a.group();
  if (g.order() < 2) throw Error(ErrorKind::Precondition, "condition (I) needs |G| >= 2");
  GroupSubset sum = sumset(a, b);
  Subgroup per = period(sum);
  const Mask unique = unique_expressions(g, a.bits(), b.bits());
  ConditionI out{.sum = sum, .period = per};
  out.sum_size = sum.size();
  out.sum_size_critical = out.sum_size == a.size() + b.size() - 1;
  out.sum_periodic = !per.is_trivial();
  out.unique_expression_exists = unique != 0;
  if (unique != 0) out.unique_c = std::countr_zero(unique);
  out.holds = out.sum_size_critical && (!out.sum_periodic || out.unique_expression_exists);
  return out;
}

QuasiperiodDichotomy quasiperiod_or_elementary(const GroupSubset& s, const GroupSubset& t) {
  require_pair(s, t, "quasiperiod_or_elementary");
  const Group& g = s.group();
  const Mask sum = g.sumset(s.bits(), t.bits());
  if (std::popcount(sum) != s.size() + t.size() - 1) {
    throw Error(ErrorKind::Precondition, "|S+T| != |S|+|T|-1");
  }
  if (masks::period(g, sum) != 1) throw Error(ErrorKind::Precondition, "S+T is periodic");

  QuasiperiodDichotomy out;
  for (Mask k : g.subgroup_masks()) {
    if (k == 1 || k == g.full()) continue;
    Subgroup sub = Subgroup::trusted(g, k);
    auto ds = quasi_periodic_decompositions(s, sub);
    if (ds.empty()) continue;
    auto dt = quasi_periodic_decompositions(t, sub);
    if (dt.empty()) continue;
    out.branch = QuasiperiodDichotomy::Branch::QuasiPeriodic;
    out.K = sub;
    out.decomposition_s = ds.front();
    out.decomposition_t = dt.front();
    return out;
  }
  auto kind = classify_elementary(s, t);
  if (!kind || !kind->strict) {
    throw Error(ErrorKind::TheoremFalsified,
                "critical aperiodic pair " + s.to_string() + ", " + t.to_string() +
                    " is neither quasi-periodic nor strict elementary");
  }
  out.branch = QuasiperiodDichotomy::Branch::StrictElementary;
  out.kind = kind;
  return out;
}

std::optional<KempermanCertificate> find_certificate(const GroupSubset& a, const GroupSubset& b,
                                                     const ClassifyOptions& options) {
  require_pair(a, b, "find_certificate");
  const Group& g = a.group();
  for (Mask h : g.subgroup_masks()) {
    if (h == 1) continue;
    Subgroup sub = Subgroup::trusted(g, h);
    auto das = quasi_periodic_decompositions(a, sub);
    if (das.empty()) continue;
    auto dbs = quasi_periodic_decompositions(b, sub);
    for (const auto& da : das) {
      for (const auto& db : dbs) {
        if (auto cert = certificate_for(a, b, da, db, KempermanCertificate::Branch::Aperiodic,
                                        options)) {
          return cert;
        }
      }
    }
  }
  return std::nullopt;
}

KempermanCertificate build_certificate(const GroupSubset& a, const GroupSubset& b,
                                       const ClassifyOptions& options) {
  const ConditionI cond = check_condition_I(a, b);
  if (!cond.holds) {
    std::string why = !cond.sum_size_critical
                          ? "|A+B|=" + std::to_string(cond.sum_size)
                          : "A+B is periodic and no element has a unique expression";
    throw Error(ErrorKind::Precondition, "condition (I) fails: " + why);
  }
  const Group& g = a.group();
  if (!cond.sum_periodic) {
    if (auto cert = find_certificate(a, b, options)) return *cert;
    throw Error(ErrorKind::TheoremFalsified,
                "no certificate for " + a.to_string() + ", " + b.to_string());
  }

  // Periodic sum: a prime-order subgroup H of the period and a uniquely
  // expressed c, cut along the cosets of a_c and b_c.
  const Mask unique = unique_expressions(g, a.bits(), b.bits());
  for (Mask h : g.subgroup_masks()) {
    if ((h & ~cond.period.bits()) != 0 || !is_prime(std::popcount(h))) continue;
    if (auto cert = periodic_construction(a, b, h, unique, options)) return *cert;
  }
  if (auto cert = find_certificate(a, b, options)) {
    cert->branch = KempermanCertificate::Branch::PeriodicScan;
    return *cert;
  }
  throw Error(ErrorKind::TheoremFalsified,
              "no certificate for " + a.to_string() + ", " + b.to_string());
}

int quotient_excess(const GroupSubset& a, const GroupSubset& b, const Subgroup& h) {
  const Group& g = a.group();
  const int hs = h.order();
  const int qa = std::popcount(g.sumset(a.bits(), h.bits())) / hs;
  const int qb = std::popcount(g.sumset(b.bits(), h.bits())) / hs;
  const int qs = std::popcount(g.sumset(g.sumset(a.bits(), b.bits()), h.bits())) / hs;
  return qs - qa - qb + 1;
}

CertificateCheck verify_certificate(const KempermanCertificate& cert,
                                    const ClassifyOptions& options) {
  const Group& g = cert.group();
  auto fail = [](std::string reason) { return CertificateCheck{false, std::move(reason)}; };
  if (!is_subgroup_mask(g, cert.H.bits())) return fail("H is not a subgroup");
  if (cert.H.is_trivial()) return fail("H must be nonzero");
  for (const auto* d : {&cert.decomp_a, &cert.decomp_b}) {
    if (!(d->K == cert.H)) return fail("decomposition subgroup differs from H");
    if (!(d->part0.group() == g) || !(d->part1.group() == g)) {
      return fail("decomposition parts live in another group");
    }
    if (!is_valid_decomposition(*d, d->whole())) return fail("invalid H-quasi-periodic decomposition");
    if (d->part1.is_empty()) return fail("A_1 and B_1 must be nonempty");
    if (!d->coset_rep || *d->coset_rep != coset_label(cert.H, d->part1.min_element())) {
      return fail("coset representative is not canonical");
    }
  }
  const GroupSubset a = cert.a();
  const GroupSubset b = cert.b();
  const GroupSubset& a1 = cert.decomp_a.part1;
  const GroupSubset& b1 = cert.decomp_b.part1;
  if (auto why = pair_kind_failure(a1, b1, cert.pair_kind, options)) return fail(*why);
  const Element x = g.add(a1.min_element(), b1.min_element());
  if (cert.quotient_unique_at != coset_label(cert.H, x)) {
    return fail("quotient element is not φ(a_1)+φ(b_1)");
  }
  if (quotient_rep_count(g, a.bits(), b.bits(), cert.H.bits(), x) != 1) {
    return fail("φ(a_1)+φ(b_1) has no unique expression in φ(A)+φ(B)");
  }
  if (quotient_excess(a, b, cert.H) != 0) return fail("|φ(A)+φ(B)| != |φ(A)|+|φ(B)|-1");
  const ConditionI cond = check_condition_I(a, b);
  if (!cond.holds) return fail("reconstructed pair violates condition (I)");
  return {true, "OK"};
}

}  // namespace kempkit
