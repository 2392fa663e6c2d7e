#include "dihedral.hpp"

#include <lefschetz/burnside_units.hpp>
#include <lefschetz/named_groups.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace lefschetz;

namespace {

Bits to_bits(const IntVector& v) {
  Bits b(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    b[i] = v[i] % 2 != 0;
  return b;
}

/// A sign row of a fixture as bits on the table's classes.
Bits unit_row(const dihedral::Table& t, const std::string& name,
              const std::map<std::string, std::size_t>& cols, std::size_t size) {
  return to_bits(dihedral::place(t, dihedral::bits(t.row(name)), cols, size));
}

std::vector<std::pair<const char*, FiniteGroup>> two_groups() {
  return {{"S4", symmetric_group(4)},
          {"A4", alternating_group(4)},
          {"A5", alternating_group(5)},
          {"A6", alternating_group(6)},
          {"D8", dihedral_group(8)},
          {"D16", dihedral_group(16)},
          {"Q8", quaternion_group()},
          {"C8", cyclic_group(8)},
          {"E8", elementary_abelian_group(2, 3)},
          {"S3", symmetric_group(3)},
          {"N3", s2p_normalizer(3)}};
}

} // namespace

TEST(SignSpace, RowReductionAndMembership) {
  auto t = p_subgroup_classes(dihedral_group(4), 2);
  auto st = t.table_ptr(ClassScope::sylow);
  Bits a(5), b(5);
  a[0] = a[1] = true;
  b[1] = b[2] = true;
  SignSpace s(st, {a, b, a ^ b});
  EXPECT_EQ(s.dimension(), 2u);
  EXPECT_TRUE(s.contains(a ^ b));
  Bits c(5);
  c[4] = true;
  EXPECT_FALSE(s.contains(c));
  EXPECT_EQ(s, SignSpace(st, {a ^ b, b}));
  EXPECT_NE(s.to_text().find("-1 -1 1"), std::string::npos);
}

TEST(UnitGroup, DihedralEightTable) {
  auto t = p_subgroup_classes(dihedral_group(8), 2);
  auto st = t.table_ptr(ClassScope::sylow);
  auto units = unit_group_of_p_group(t);
  EXPECT_EQ(units.dimension(), 5u);
  auto table = dihedral::load("d8_units.txt");
  auto cols = dihedral::columns(*st);
  std::vector<Bits> rows;
  for (const auto& name : table.names)
    rows.push_back(unit_row(table, name, cols, st->size()));
  EXPECT_EQ(units, SignSpace(st, rows));
  // the unit table is dim of the function table, row by row
  auto fs = dihedral::load("d8_borel_smith.txt");
  for (std::size_t i = 0; i < fs.rows.size(); ++i)
    EXPECT_EQ(to_bits(dihedral::place(fs, fs.rows[i], cols, st->size())), rows[i]);
}

TEST(UnitGroup, LargerDihedralLowColumns) {
  auto table = dihedral::load("d2n_units.txt");
  for (std::size_t order : {16u, 32u}) {
    auto t = p_subgroup_classes(dihedral_group(order), 2);
    auto st = t.table_ptr(ClassScope::sylow);
    auto cols = dihedral::columns(*st);
    auto units = unit_group_of_p_group(t);
    std::vector<Bits> projected, expected;
    for (const auto& v : units.basis()) {
      Bits b(4);
      for (std::size_t i = 0; i < 4; ++i)
        b[i] = v[cols.at(table.columns[i])];
      projected.push_back(b);
    }
    for (const auto& r : table.rows) {
      Bits b(4);
      for (std::size_t i = 0; i < 4; ++i)
        b[i] = r[i] < 0;
      expected.push_back(b);
    }
    EXPECT_EQ(detail::rref(projected, 4), detail::rref(expected, 4)) << order;
    EXPECT_EQ(units.dimension(), st->cyclic_count()) << order;
  }
}

TEST(UnitGroup, KnownDimensions) {
  // 2-rank counts of the unit group for small 2-groups, and +-1 for odd p
  struct Row {
    FiniteGroup g;
    std::uint64_t p;
    std::size_t dim;
  };
  // C2: no condition applies at p = 2, so all four sign vectors are units
  std::vector<Row> rows{{cyclic_group(2), 2, 2},       {cyclic_group(8), 2, 2},
                        {dihedral_group(4), 2, 4},     {quaternion_group(), 2, 4},
                        {elementary_abelian_group(2, 3), 2, 8}, {dihedral_group(16), 2, 6},
                        {cyclic_group(9), 3, 1},       {elementary_abelian_group(3, 2), 3, 1}};
  for (const auto& r : rows)
    EXPECT_EQ(unit_group_of_p_group(r.g, r.p).dimension(), r.dim) << r.g.order();
  EXPECT_THROW(unit_group_of_p_group(symmetric_group(3), 2), InputError);
}

TEST(StableUnits, Examples) {
  auto d8 = p_subgroup_classes(dihedral_group(8), 2);
  auto whole = unit_group_of_p_group(d8);
  EXPECT_EQ(stable_sign_subspace(whole, d8.classes()), whole);
  auto s4 = p_subgroup_classes(symmetric_group(4), 2);
  EXPECT_EQ(stable_sign_subspace(unit_group_of_p_group(s4), s4.classes()).dimension(), 4u);
}

TEST(StableUnits, AlternatingSix) {
  auto t = p_subgroup_classes(alternating_group(6), 2);
  auto st = t.table_ptr(ClassScope::sylow);
  auto cols = dihedral::columns(*st);
  auto table = dihedral::load("d8_units.txt");
  auto u = [&](const std::string& n) { return unit_row(table, n, cols, st->size()); };
  auto stable = stable_sign_subspace(unit_group_of_p_group(t), t.classes());
  EXPECT_EQ(stable.dimension(), 3u);
  EXPECT_EQ(stable, SignSpace(st, {u("u_D8"), u("u_H1") ^ u("u_H2") ^ u("u_C4"), u("u_1") ^ u("u_C4")}));
}

TEST(P2Surjectivity, Examples) {
  for (auto g : {symmetric_group(4), alternating_group(6), dihedral_group(8), dihedral_group(16),
                 quaternion_group(), elementary_abelian_group(2, 3)}) {
    auto r = p2_surjectivity(g);
    EXPECT_TRUE(r.surjective) << g.order();
    EXPECT_FALSE(r.missing);
    EXPECT_EQ(r.preimages.size(), r.stable.dimension());
  }
  EXPECT_THROW(p2_surjectivity(p_subgroup_classes(symmetric_group(3), 3)), InputError);
}

TEST(P2Surjectivity, ImageInsideStableAndFusionControl) {
  for (const auto& [name, g] : two_groups()) {
    auto t = p_subgroup_classes(g, 2);
    auto r = p2_surjectivity(t);
    EXPECT_TRUE(r.stable.contains(r.image)) << name;
    if (controls_fusion(g, t.scope(ClassScope::normalizer).acting(), t.sylow()))
      EXPECT_TRUE(r.surjective) << name;
    for (std::size_t i = 0; i < r.preimages.size(); ++i)
      EXPECT_EQ(sylow_bits(r.preimages[i], *t.table_ptr(ClassScope::sylow)), r.stable.basis()[i]) << name;
  }
}

TEST(LiftUnit, TrivialCases) {
  auto t = p_subgroup_classes(symmetric_group(4), 2);
  auto gt = t.table_ptr(ClassScope::group);
  auto plus = SignFunction::from_signs(gt, std::vector<int>(gt->size(), 1));
  auto minus = SignFunction::from_signs(gt, std::vector<int>(gt->size(), -1));
  EXPECT_EQ(dim_function(lift_unit(plus, t)), plus);
  EXPECT_EQ(dim_function(lift_unit(minus, t)), minus);
  for (const auto& x : lift_unit(plus, t).values())
    EXPECT_EQ(x % 2, 0);
}

TEST(LiftUnit, DihedralEightCyclicRow) {
  auto t = p_subgroup_classes(dihedral_group(8), 2);
  auto gt = t.table_ptr(ClassScope::group);
  auto cols = dihedral::columns(*gt);
  auto table = dihedral::load("d8_units.txt");
  SignFunction u(gt, unit_row(table, "u_C4", cols, gt->size()));
  auto f = lift_unit(u, t);
  EXPECT_EQ(dim_function(f), u);
  EXPECT_TRUE(check_borel_smith(f));
}

TEST(LiftUnit, NoLiftOutsideImage) {
  auto t = p_subgroup_classes(dihedral_group(8), 2);
  auto gt = t.table_ptr(ClassScope::group);
  Bits b(gt->size());
  b[0] = true; // -1 only at the trivial subgroup
  try {
    lift_unit(SignFunction(gt, b), t);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("no lift"), std::string::npos);
  }
}

TEST(LiftUnit, RoundTripOnImage) {
  std::mt19937 rng(7);
  for (const auto& [name, g] : two_groups()) {
    auto t = p_subgroup_classes(g, 2);
    auto gt = t.table_ptr(ClassScope::group);
    auto basis = lattice_functions<GroupScope>(borel_smith_basis(gt), gt);
    for (int trial = 0; trial < 8; ++trial) {
      auto f = SuperclassFunction::constant(gt, 0);
      for (const auto& b : basis)
        f = f + b * (static_cast<long long>(rng() % 5) - 2);
      auto u = dim_function(f);
      auto lifted = lift_unit(u, t);
      EXPECT_EQ(dim_function(lifted), u) << name;
      EXPECT_TRUE(check_borel_smith(lifted)) << name;
    }
  }
}
