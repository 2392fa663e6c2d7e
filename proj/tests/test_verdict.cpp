#include <lefschetz/named_groups.hpp>
#include <lefschetz/verdict.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace lefschetz;

namespace {

HMarkCandidate candidate(const SubgroupClassTable& t, IntVector values) {
  return HMarkCandidate(SuperclassFunction(t.table_ptr(ClassScope::group), std::move(values)));
}

/// Random integer combination of the CF_b(G) basis.
SuperclassFunction random_borel_smith(const SubgroupClassTable& t, std::mt19937& rng, int spread) {
  auto gt = t.table_ptr(ClassScope::group);
  auto f = SuperclassFunction::constant(gt, 0);
  for (const auto& b : lattice_functions<GroupScope>(borel_smith_basis(gt), gt))
    f = f + b * (static_cast<long long>(rng() % (2 * spread + 1)) - spread);
  return f;
}

struct OddCase {
  const char* name;
  FiniteGroup g;
  std::uint64_t p;
};

std::vector<OddCase> cyclic_sylow_cases() {
  return {{"S3", symmetric_group(3), 3},   {"S5@5", symmetric_group(5), 5}, {"A5@5", alternating_group(5), 5},
          {"A4", alternating_group(4), 3}, {"S4@3", symmetric_group(4), 3}, {"C9", cyclic_group(9), 3},
          {"A5@3", alternating_group(5), 3}, {"D18", dihedral_group(18), 3}};
}

} // namespace

TEST(Verdict, Examples) {
  auto s4 = lefschetz_verdict(symmetric_group(4), 2, 1);
  EXPECT_EQ(s4.outcome, Outcome::surjective);
  ASSERT_TRUE(s4.reason(criterion::dihedral_sylow));
  EXPECT_TRUE(s4.reason(criterion::dihedral_sylow)->applies);
  EXPECT_TRUE(std::holds_alternative<PreimageBasis>(s4.certificate));

  auto s5 = lefschetz_verdict(symmetric_group(5), 5, 4);
  EXPECT_EQ(s5.outcome, Outcome::surjective);
  EXPECT_TRUE(s5.reason(criterion::cyclic_sylow)->applies);
  auto cert = std::get<TheoremCertificate>(s5.certificate);
  EXPECT_EQ(cert.criterion, criterion::cyclic_sylow);

  auto a4 = lefschetz_verdict(alternating_group(4), 3, 2);
  EXPECT_EQ(a4.outcome, Outcome::surjective);
  EXPECT_TRUE(a4.reason(criterion::p_nilpotent)->applies);
}

TEST(Verdict, RankTwoNormalizer) {
  // R_G is C2 x C2 here, one generator short of c(G) = 3
  auto v = lefschetz_verdict(s2p_normalizer(3), 3, 2);
  EXPECT_EQ(v.outcome, Outcome::unknown);
  EXPECT_FALSE(v.has_certificate());
  EXPECT_EQ(v.reasons.size(), 3u);
  const Reason* r = v.reason(criterion::generator_count);
  ASSERT_TRUE(r);
  EXPECT_FALSE(r->applies);
  EXPECT_NE(r->evidence.find("d(R_G) = 2, c(G) = 3"), std::string::npos);
}

TEST(Verdict, CertificatesForDecidedOutcomes) {
  std::vector<std::tuple<FiniteGroup, std::uint64_t, std::uint64_t>> cases{
      {symmetric_group(4), 2, 1},      {alternating_group(5), 2, 1},  {dihedral_group(16), 2, 1},
      {quaternion_group(), 2, 1},      {symmetric_group(3), 2, 1},    {symmetric_group(3), 3, 2},
      {alternating_group(6), 3, 2},    {elementary_abelian_group(3, 2), 3, 2},
      {symmetric_group(6), 3, 2},      {symmetric_group(4), 2, 3},    {alternating_group(4), 2, 3}};
  for (const auto& [g, p, m] : cases) {
    auto v = lefschetz_verdict(g, p, m);
    if (v.outcome != Outcome::unknown)
      EXPECT_TRUE(v.has_certificate()) << g.order() << " " << p;
    EXPECT_FALSE(v.reasons.empty());
  }
}

TEST(Verdict, TwoWithLargerFieldNeedsTrivialComponents) {
  // A4 at p = 2: N_G(V4)/V4 is C3, which has characters into F_4^x
  auto a4 = lefschetz_verdict(alternating_group(4), 2, 3);
  EXPECT_EQ(a4.outcome, Outcome::unknown);
  EXPECT_FALSE(a4.reason(criterion::tuple_components)->applies);
  EXPECT_FALSE(a4.reason(criterion::burnside_units));
  // S4 at p = 2: every automizer quotient is a 2-group or trivial mod P C_G(P)
  auto s4 = lefschetz_verdict(symmetric_group(4), 2, 3);
  EXPECT_EQ(s4.outcome, lefschetz_verdict(symmetric_group(4), 2, 1).outcome);
  EXPECT_TRUE(s4.reason(criterion::tuple_components)->applies);
}

TEST(Verdict, CriteriaAgree) {
  for (const auto& c : cyclic_sylow_cases()) {
    auto t = p_subgroup_classes(c.g, c.p);
    auto v = lefschetz_verdict(t, c.p - 1);
    EXPECT_EQ(v.outcome, Outcome::surjective) << c.name;
    EXPECT_FALSE(v.reason(criterion::generator_count)->applies) << c.name;
  }
  for (auto [g, p] : std::vector<std::pair<FiniteGroup, std::uint64_t>>{
           {symmetric_group(4), 2}, {alternating_group(4), 2}, {alternating_group(5), 2},
           {alternating_group(6), 2}, {dihedral_group(8), 2}, {dihedral_group(24), 2},
           {quaternion_group(), 2}, {elementary_abelian_group(2, 3), 2}, {s2p_normalizer(3), 2}}) {
    auto v = lefschetz_verdict(g, p, 1);
    if (v.reason(criterion::fusion_control)->applies || v.reason(criterion::dihedral_sylow)->applies)
      EXPECT_EQ(v.outcome, Outcome::surjective) << g.order();
  }
}

TEST(Verdict, RejectsBadInput) {
  EXPECT_THROW(lefschetz_verdict(symmetric_group(3), 4, 1), InputError);
  EXPECT_THROW(lefschetz_verdict(symmetric_group(3), 3, 0), InputError);
}

TEST(Period, Examples) {
  EXPECT_EQ(period_cyclic(symmetric_group(3), 3), 4u);
  EXPECT_EQ(period_cyclic(symmetric_group(5), 5), 8u);
  EXPECT_EQ(period_cyclic(cyclic_group(9), 3), 2u);
  EXPECT_THROW(period_cyclic(elementary_abelian_group(3, 2), 3), InputError);
  EXPECT_THROW(period_cyclic(symmetric_group(3), 5), InputError);
}

TEST(AutomizerIsomorphism, CyclicSylowOrdersAgree) {
  for (const auto& c : cyclic_sylow_cases()) {
    auto t = p_subgroup_classes(c.g, c.p);
    std::size_t phi = sylow_automizer_order(t);
    for (std::size_t k = 0; k < t.size(); ++k)
      if (!t.rep(k).is_trivial())
        EXPECT_EQ(automizer(c.g, t.rep(k)).order(), phi) << c.name;
  }
}

TEST(Kernel, CyclicExamples) {
  auto t = p_subgroup_classes(symmetric_group(3), 3);
  auto in = kernel_membership_cyclic(t, candidate(t, {4, 0}));
  EXPECT_TRUE(in.member);
  EXPECT_TRUE(in.exact);
  ASSERT_EQ(in.congruences.size(), 1u);
  EXPECT_EQ(in.congruences[0].modulus, 4);
  EXPECT_FALSE(kernel_membership_cyclic(t, candidate(t, {2, 0})).member);
  EXPECT_TRUE(kernel_membership_cyclic(t, candidate(t, {0, 0})).member);

  auto nec = kernel_necessary(t, candidate(t, {2, 0}));
  EXPECT_FALSE(nec.member);
  EXPECT_FALSE(nec.exact);
  const Congruence* bad = nec.violated();
  ASSERT_TRUE(bad);
  EXPECT_EQ(t.rep(bad->lower).order(), 1u);
  EXPECT_EQ(t.rep(bad->upper).order(), 3u);
  EXPECT_EQ(bad->modulus, 4);
  EXPECT_TRUE(kernel_necessary(t, candidate(t, {4, 0})).member);
}

TEST(Kernel, RejectsNonBorelSmithAndAssertedHomology) {
  auto t = p_subgroup_classes(symmetric_group(3), 3);
  EXPECT_THROW(candidate(t, {1, 0}), InputError);
  HMarkCandidate c(SuperclassFunction(t.table_ptr(ClassScope::group), {2, 0}), false);
  EXPECT_THROW(kernel_necessary(t, c), InputError);
  auto e9 = p_subgroup_classes(elementary_abelian_group(3, 2), 3);
  EXPECT_THROW(kernel_membership_cyclic(e9, candidate(e9, IntVector(e9.size(), 0))), InputError);
}

TEST(Kernel, TwoIsEvenness) {
  std::mt19937 rng(11);
  for (auto g : {dihedral_group(8), symmetric_group(4), alternating_group(4), quaternion_group()}) {
    auto t = p_subgroup_classes(g, 2);
    for (int trial = 0; trial < 20; ++trial) {
      auto f = random_borel_smith(t, rng, 3);
      bool even = true;
      for (const auto& v : f.values())
        even = even && v % 2 == 0;
      auto r = kernel_necessary(t, HMarkCandidate(f));
      EXPECT_TRUE(r.exact);
      EXPECT_EQ(r.member, even);
      for (long long k : {2, 4, 6})
        EXPECT_TRUE(kernel_necessary(t, HMarkCandidate(f * k)).member);
    }
    EXPECT_FALSE(kernel_necessary(t, candidate(t, IntVector(t.size(), 1))).member);
  }
}

TEST(Kernel, GeneralTestMatchesCyclicTest) {
  std::mt19937 rng(5);
  for (const auto& c : cyclic_sylow_cases()) {
    auto t = p_subgroup_classes(c.g, c.p);
    for (int trial = 0; trial < 25; ++trial) {
      auto f = random_borel_smith(t, rng, 6);
      HMarkCandidate cand(f);
      EXPECT_EQ(kernel_membership_cyclic(t, cand).member, kernel_necessary(t, cand).member) << c.name;
    }
  }
}

TEST(Kernel, PPrimeCoreOfAutomizer) {
  // S3: O_3'(S3) is trivial; C2 x S3 has O_3' = C2
  auto s3 = quotient(whole_group(symmetric_group(3)), trivial_subgroup(symmetric_group(3)));
  EXPECT_EQ(detail::largest_normal_pprime_order(s3.table(), 3), 1u);
  EXPECT_EQ(detail::largest_normal_pprime_order(s3.table(), 2), 3u);
  auto d12 = dihedral_group(12);
  auto q = quotient(whole_group(d12), trivial_subgroup(d12));
  EXPECT_EQ(detail::largest_normal_pprime_order(q.table(), 3), 2u);
}
