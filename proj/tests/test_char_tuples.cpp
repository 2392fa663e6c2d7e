#include "oracles.hpp"

#include <lefschetz/char_tuples.hpp>
#include <lefschetz/group_io.hpp>
#include <lefschetz/named_groups.hpp>

#include <gtest/gtest.h>

using namespace lefschetz;

namespace {

struct Case {
  const char* name;
  FiniteGroup g;
  std::uint64_t p;
  std::uint64_t m;
};

std::vector<Case> odd_cases() {
  return {{"S3", symmetric_group(3), 3, 2},      {"A4", alternating_group(4), 3, 2},
          {"S4", symmetric_group(4), 3, 2},      {"A5", alternating_group(5), 5, 4},
          {"S5", symmetric_group(5), 5, 4},      {"A6", alternating_group(6), 3, 2},
          {"S6", symmetric_group(6), 3, 2},      {"N3", s2p_normalizer(3), 3, 2},
          {"N3m8", s2p_normalizer(3), 3, 8},     {"E9", elementary_abelian_group(3, 2), 3, 2},
          {"W32", wreath_family(3, 2), 3, 2},    {"A5@3", alternating_group(5), 3, 2}};
}

/// Every tuple with coordinates in range, in lexicographic order.
template <class Fn>
void all_tuples(const std::vector<Integer>& orders, Fn fn) {
  IntVector v(orders.size(), 0);
  while (true) {
    fn(v);
    std::size_t i = 0;
    while (i < v.size() && v[i] + 1 == orders[i])
      v[i++] = 0;
    if (i == v.size())
      return;
    ++v[i];
  }
}

/// Coherence read off directly: for every subgroup P of S and x in N_G(P),
/// phi_P(x) = phi_{P<x_p>}(x), where phi at any p-subgroup is transported
/// from its class representative.
bool coherent_everywhere(const SubgroupClassTable& t, const TupleGroup& r, const IntVector& tuple) {
  const FiniteGroup& g = t.group();
  auto phi = [&](const Subgroup& q, ElemId x) {
    auto [c, h] = t.locate(q);
    return r.evaluate(tuple, c, g.conj(h, x));
  };
  for (const Subgroup& p : t.lattice().subgroups())
    for (ElemId x = 0; x < g.order(); ++x) {
      if (!normalizes(x, p))
        continue;
      // x_p by brute force: the power of x of p-power order with x = x_p x_p'
      ElemId xp = 0;
      std::uint64_t n = g.element_order(x);
      for (std::uint64_t k = 0; k < n; ++k) {
        ElemId y = g.pow(x, static_cast<long long>(k));
        std::uint64_t oy = g.element_order(y);
        ElemId rest = g.mul(x, g.inv(y));
        if (is_power_of(oy, t.prime()) && g.element_order(rest) % t.prime() != 0) {
          xp = y;
          break;
        }
      }
      auto gens = p.generators();
      gens.push_back(xp);
      if (phi(p, x) != phi(generate(g, gens), x))
        return false;
    }
  return true;
}

} // namespace

TEST(FiniteAbelian, InvariantFactors) {
  auto a = FiniteAbelianGroup::from_cyclic_factors({2, 3, 4});
  EXPECT_EQ(a.structure(), "C2 x C12");
  EXPECT_EQ(a.order(), 24);
  EXPECT_EQ(min_generators(a), 2u);
  EXPECT_EQ(min_generators(FiniteAbelianGroup::from_cyclic_factors({2, 2, 2})), 3u);
  EXPECT_EQ(min_generators(FiniteAbelianGroup::from_cyclic_factors({4})), 1u);
  EXPECT_EQ(min_generators(FiniteAbelianGroup::from_cyclic_factors({1})), 0u);
  EXPECT_TRUE(FiniteAbelianGroup::from_cyclic_factors({}).is_trivial());
}

TEST(Abelianize, MatchesDerivedSubgroupIndex) {
  for (auto g : {symmetric_group(4), alternating_group(4), quaternion_group(), dihedral_group(8),
                 s2p_normalizer(3), alternating_group(5), cyclic_group(12)}) {
    auto q = quotient(whole_group(g), trivial_subgroup(g));
    auto ab = abelianize(q.table());
    EXPECT_EQ(ab.group.order(), g.order() / q.table().derived_subgroup().size());
    // coordinates are a homomorphism
    for (std::uint32_t x = 0; x < q.order(); x += 3)
      for (std::uint32_t y = 0; y < q.order(); y += 5) {
        IntVector s = ab.coords[x];
        for (std::size_t i = 0; i < s.size(); ++i)
          s[i] = mod_floor(s[i] + ab.coords[y][i], ab.group.invariant_factors()[i]);
        EXPECT_EQ(s, ab.coords[q.table().mul(x, y)]);
      }
  }
}

TEST(HomToRoots, Examples) {
  auto c2 = cyclic_group(2);
  EXPECT_EQ(hom_to_roots(quotient(whole_group(c2), trivial_subgroup(c2)), 2).as_abelian_group().structure(), "C2");
  auto d8 = dihedral_group(8);
  EXPECT_EQ(hom_to_roots(quotient(whole_group(d8), trivial_subgroup(d8)), 2).as_abelian_group().structure(),
            "C2 x C2");
  auto c4 = cyclic_group(4);
  EXPECT_EQ(hom_to_roots(quotient(whole_group(c4), trivial_subgroup(c4)), 4).as_abelian_group().structure(), "C4");
  EXPECT_TRUE(hom_to_roots(quotient(whole_group(c4), trivial_subgroup(c4)), 3).is_trivial());
}

TEST(HomToRoots, EvaluationIsHomomorphism) {
  auto g = symmetric_group(4);
  auto q = quotient(whole_group(g), trivial_subgroup(g));
  CharacterGroup chars(q.table(), 6);
  ASSERT_EQ(chars.factor_count(), 1u);
  IntVector sign{1};
  for (std::uint32_t x = 0; x < q.order(); ++x)
    for (std::uint32_t y = 0; y < q.order(); ++y)
      EXPECT_EQ(chars.evaluate(sign, q.table().mul(x, y)),
                mod_floor(chars.evaluate(sign, x) + chars.evaluate(sign, y), 6));
  std::size_t odd = 0;
  for (std::uint32_t x = 0; x < q.order(); ++x)
    odd += chars.evaluate(sign, x) == 3;
  EXPECT_EQ(odd, 12u);
}

TEST(Coherence, EmptyForCyclicSylow) {
  for (auto [g, p] : std::vector<std::pair<FiniteGroup, std::uint64_t>>{
           {symmetric_group(3), 3}, {symmetric_group(5), 5}, {alternating_group(4), 3},
           {alternating_group(5), 5}, {symmetric_group(4), 3}, {cyclic_group(9), 3}}) {
    auto t = p_subgroup_classes(g, p);
    EXPECT_TRUE(coherence_constraints(t, p - 1).empty()) << g.order();
  }
}

TEST(TupleGroup, Examples) {
  auto s3 = reduced_tuple_group(symmetric_group(3), 3, 2);
  EXPECT_EQ(s3.group().structure(), "C2");
  EXPECT_TRUE(reduced_tuple_group(alternating_group(4), 3, 2).group().is_trivial());
  // components C2, C2, C2 x C2; one coherence row from A and one from <ab>
  auto n3 = reduced_tuple_group(s2p_normalizer(3), 3, 2);
  EXPECT_EQ(n3.ambient_order(), 16);
  EXPECT_EQ(n3.constraints().size(), 2u);
  EXPECT_EQ(n3.order(), 4);
  EXPECT_EQ(min_generators(n3), 2u);
  EXPECT_THROW(reduced_tuple_group(symmetric_group(4), 2, 1), InputError);
}

TEST(TupleGroup, TrivialSubgroupComponentIsTrivial) {
  for (const auto& c : odd_cases()) {
    auto r = reduced_tuple_group(c.g, c.p, c.m);
    EXPECT_EQ(r.components()[0].automizer.order(), 1u) << c.name;
    EXPECT_TRUE(r.components()[0].characters.is_trivial()) << c.name;
  }
}

TEST(TupleGroup, BasisTuplesAreCoherentEverywhere) {
  for (const auto& c : odd_cases()) {
    auto t = p_subgroup_classes(c.g, c.p);
    auto r = reduced_tuple_group(t, c.m);
    for (const auto& b : r.basis()) {
      EXPECT_TRUE(r.contains(b)) << c.name;
      EXPECT_TRUE(coherent_everywhere(t, r, b)) << c.name;
    }
    EXPECT_EQ(r.ambient_order() % r.order(), 0) << c.name;
  }
}

TEST(TupleGroup, OrderMatchesEnumeration) {
  for (const auto& c : odd_cases()) {
    auto t = p_subgroup_classes(c.g, c.p);
    auto r = reduced_tuple_group(t, c.m);
    if (r.ambient_order() > 256)
      continue;
    Integer count = 0;
    all_tuples(r.coordinate_orders(), [&](const IntVector& v) {
      bool direct = coherent_everywhere(t, r, v);
      EXPECT_EQ(direct, r.contains(v)) << c.name;
      count += direct;
    });
    EXPECT_EQ(count, r.order()) << c.name;
  }
}

TEST(TupleGroup, CoordinatesRoundTrip) {
  auto r = reduced_tuple_group(s2p_normalizer(3), 3, 2);
  for (std::size_t i = 0; i < r.basis().size(); ++i) {
    auto coords = r.coordinates(r.basis()[i]);
    for (std::size_t j = 0; j < coords.size(); ++j)
      EXPECT_EQ(coords[j], i == j ? 1 : 0);
    EXPECT_EQ(r.quotient_min_generators(r.basis()[i]), min_generators(r) - 1);
  }
  EXPECT_EQ(r.quotient_min_generators(IntVector(r.width(), 0)), min_generators(r));
}

TEST(TupleGroup, CyclicSylowProduct) {
  for (auto [g, p, m] : std::vector<std::tuple<FiniteGroup, std::uint64_t, std::uint64_t>>{
           {symmetric_group(3), 3, 2}, {symmetric_group(5), 5, 4}, {alternating_group(5), 5, 4},
           {symmetric_group(4), 3, 2}, {cyclic_group(9), 3, 2}, {symmetric_group(5), 3, 2}}) {
    auto t = p_subgroup_classes(g, p);
    auto r = reduced_tuple_group(t, m);
    Integer product = 1;
    std::optional<Integer> first;
    for (std::size_t c = 1; c < t.size(); ++c) {
      auto aut = automizer(g, t.rep(c));
      Integer n = CharacterGroup(aut.table(), m).order();
      product *= n;
      if (first)
        EXPECT_EQ(n, *first);
      first = n;
    }
    EXPECT_EQ(r.order(), product) << g.order();
  }
}

TEST(TupleGroup, LargerFieldNeverShrinks) {
  for (auto [g, p] : std::vector<std::pair<FiniteGroup, std::uint64_t>>{
           {s2p_normalizer(3), 3}, {alternating_group(6), 3}, {symmetric_group(6), 3},
           {symmetric_group(3), 3}, {wreath_family(3, 2), 3}}) {
    auto t = p_subgroup_classes(g, p);
    Integer prev = 0;
    for (std::uint64_t m : {2u, 8u, 80u}) { // F_3 < F_9 < F_81
      auto r = reduced_tuple_group(t, m);
      EXPECT_GE(r.order(), prev);
      prev = r.order();
    }
  }
}

TEST(TupleGroup, SignOffNormalizerOfAIsNotCoherentAlone) {
  auto g = s2p_normalizer(3);
  auto t = p_subgroup_classes(g, 3);
  auto r = reduced_tuple_group(t, 2);
  const std::size_t s_class = t.size() - 1;
  ASSERT_EQ(t.rep(s_class).order(), 9u);
  Subgroup a = generate(g, {g.id_of(parse_cycles("(1 2 3)", 6))});
  const auto& sc = r.components()[s_class];
  ASSERT_EQ(sc.characters.factor_count(), 2u);
  // the S-character that is -1 exactly off N_G(A)
  std::optional<IntVector> chi;
  for (Integer u = 0; u < 2; ++u)
    for (Integer v = 0; v < 2; ++v) {
      IntVector tuple(r.width(), 0);
      tuple[sc.offset] = u;
      tuple[sc.offset + 1] = v;
      bool match = true;
      for (ElemId x : t.normalizer_of(s_class).elements())
        match = match && (r.evaluate(tuple, s_class, x) == 1) == !normalizes(x, a);
      if (match)
        chi = tuple;
    }
  ASSERT_TRUE(chi);
  EXPECT_FALSE(r.contains(*chi));
  EXPECT_FALSE(coherent_everywhere(t, r, *chi));
  // the witness: x normalizes C = <ab>, x_3 lies outside C, x_3' inverts C
  ElemId x = g.id_of(parse_cycles("(1 4 2 6 3 5)", 6));
  Subgroup c = generate(g, {g.id_of(parse_cycles("(1 3 2)(4 6 5)", 6))});
  EXPECT_TRUE(normalizes(x, c));
  EXPECT_FALSE(c.contains(p_part_id(g, x, 3)));
  ElemId xq = g.pow(x, 3);
  EXPECT_NE(xq, g.identity());
  EXPECT_TRUE(normalizes(xq, c));
  EXPECT_FALSE(centralizes(xq, c));
  // paired with the nontrivial character at <ab> it is coherent
  bool paired = false;
  for (const auto& b : r.basis())
    paired = paired || (r.component_values(b, s_class) == r.component_values(*chi, s_class) && b[sc.offset - 1] == 1);
  EXPECT_TRUE(paired);
}
