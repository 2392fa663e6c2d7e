#include "dihedral.hpp"

#include <lefschetz/lefschetz.hpp>

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace lefschetz;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) { return slurp(std::string(LEFSCHETZ_GOLDEN_DIR) + "/" + name); }

/// HNF of the rows, for lattice equality.
IntMatrix hnf_of(const std::vector<IntVector>& rows, std::size_t width) {
  return hermite_normal_form(rows, width);
}

} // namespace

TEST(Report, JsonAndTextRoundTrip) {
  for (auto [g, name, p] : std::vector<std::tuple<FiniteGroup, const char*, std::uint64_t>>{
           {dihedral_group(8), "dihedral:8", 2},
           {symmetric_group(4), "symmetric:4", 2},
           {symmetric_group(4), "symmetric:4", 3},
           {s2p_normalizer(3), "s2p_normalizer:3", 3},
           {alternating_group(5), "alternating:5", 5},
           {quaternion_group(), "quaternion", 2}}) {
    auto r = analyze(g, name, p, default_unit_order(p));
    auto j = to_json(r);
    EXPECT_EQ(report_from_json(j), r) << name;
    EXPECT_EQ(report_from_json(Json::parse(j.dump())), r) << name;
    EXPECT_EQ(report_from_text(to_text(r)), r) << name;
    EXPECT_EQ(from_flat_text(to_flat_text(j)), j) << name;
    EXPECT_TRUE(r.units.data.has_value() != r.tuples.data.has_value()) << name;
    EXPECT_FALSE((r.units.data ? r.tuples.skipped : r.units.skipped).empty()) << name;
  }
}

TEST(Report, GoldenFilesCarryTheSameData) {
  struct Case {
    const char* stem;
    FiniteGroup g;
    const char* name;
    std::uint64_t p;
  };
  for (const auto& c : std::vector<Case>{{"analyze_d8_p2", dihedral_group(8), "dihedral:8", 2},
                                         {"analyze_s2p3_p3", s2p_normalizer(3), "s2p_normalizer:3", 3},
                                         {"analyze_s5_p5", symmetric_group(5), "symmetric:5", 5}}) {
    auto from_json = report_from_json(Json::parse(golden(std::string(c.stem) + ".json")));
    auto from_text = report_from_text(golden(std::string(c.stem) + ".txt"));
    EXPECT_EQ(from_json, from_text) << c.stem;
    EXPECT_EQ(from_json, analyze(c.g, c.name, c.p, default_unit_order(c.p))) << c.stem;
  }
}

TEST(Report, Contents) {
  auto d8 = analyze(dihedral_group(8), "dihedral:8", 2, 1);
  EXPECT_EQ(d8.classes.cyclic, 5u);
  EXPECT_EQ(d8.borel_smith.rank, 5u);
  ASSERT_TRUE(d8.units.data);
  EXPECT_EQ(d8.units.data->unit_dimension, 5u);
  EXPECT_EQ(d8.verdict.outcome, Outcome::surjective);

  auto s5 = analyze(symmetric_group(5), "symmetric:5", 5, 4);
  EXPECT_EQ(s5.verdict.outcome, Outcome::surjective);
  auto cert = std::get<TheoremCertificate>(s5.verdict.certificate);
  EXPECT_EQ(cert.criterion, criterion::cyclic_sylow);
  EXPECT_EQ(cert.data.back(), (std::pair<std::string, Integer>{"period", 8}));
}

TEST(Report, RejectsMalformedInput) {
  EXPECT_THROW(report_from_json(Json::parse(R"({"schema": "other"})")), InputError);
  EXPECT_THROW(report_from_json(Json::parse(R"({"schema": "lefschetz-report/1"})")), InputError);
  EXPECT_THROW(from_flat_text("no separator here"), InputError);
  EXPECT_THROW(from_flat_text("a: {broken"), InputError);
  EXPECT_THROW(parse_outcome("Maybe"), InputError);
}

TEST(Report, LargeIntegersSurviveAsStrings) {
  Integer big = Integer(1) << 80;
  Json j = detail::integer_json(big);
  EXPECT_TRUE(j.is_string());
  EXPECT_EQ(detail::json_integer(j), big);
  EXPECT_EQ(detail::json_integer(detail::integer_json(Integer(-7))), -7);
}

TEST(Tables, DihedralEightMatchesFixtures) {
  auto cfb = named_table("cfb-d8");
  auto fixture = dihedral::load("d8_borel_smith.txt");
  ASSERT_EQ(cfb.columns, (std::vector<std::string>{"1", "K1", "K2", "C2", "H1", "H2", "C", "D"}));
  std::vector<IntVector> expected;
  for (const auto& r : fixture.rows)
    expected.push_back(IntVector(r.begin(), r.end()));
  EXPECT_EQ(hnf_of(cfb.rows, 8), hnf_of(expected, 8));

  auto units = named_table("units-d8");
  auto ufix = dihedral::load("d8_units.txt");
  auto to_bits = [](const auto& rows) {
    std::vector<Bits> out;
    for (const auto& r : rows) {
      Bits b(r.size());
      for (std::size_t i = 0; i < r.size(); ++i)
        b[i] = r[i] < 0;
      out.push_back(b);
    }
    return out;
  };
  EXPECT_EQ(detail::rref(to_bits(units.rows), 8), detail::rref(to_bits(ufix.rows), 8));
}

TEST(Tables, LargerDihedralLowColumns) {
  auto fixture = dihedral::load("d2n_borel_smith.txt");
  std::vector<IntVector> expected;
  for (const auto& r : fixture.rows)
    expected.push_back(IntVector(r.begin(), r.end()));
  for (std::size_t n : {4u, 5u}) {
    auto t = named_table("cfb-d2n:" + std::to_string(n));
    EXPECT_EQ(t.columns, (std::vector<std::string>{"1", "K1", "K2", "C2"}));
    EXPECT_EQ(t.rows.size(), n + 2) << n; // c(D_{2^n}) = n + 2
    EXPECT_EQ(hnf_of(t.rows, 4), hnf_of(expected, 4)) << n;
  }
  EXPECT_EQ(named_table("units-d2n:4").rows.size(), 6u);
}

TEST(Tables, RejectsUnknownNames) {
  for (const char* bad : {"cfb-d16", "units-d2n", "cfb-d2n:3", "cfb-d2n:x", "cfb-d8:2", "tables"})
    EXPECT_THROW(named_table(bad), InputError) << bad;
}

TEST(Tables, ColumnsNeedDihedralSylow) {
  auto t = p_subgroup_classes(quaternion_group(), 2);
  EXPECT_THROW(dihedral_columns(*t.table_ptr(ClassScope::sylow)), InputError);
}
