#ifndef LEFSCHETZ_REPORT_HPP
#define LEFSCHETZ_REPORT_HPP

// The analysis report: every section of the computation for one group and
// prime, as JSON and as flat text carrying the same data.

#include <lefschetz/verdict.hpp>

#include <json.hpp>

namespace lefschetz {

inline constexpr const char* report_schema = "lefschetz-report/1";

struct GroupInfo {
  std::string descriptor;
  std::size_t degree = 0;
  std::size_t order = 0;
  friend bool operator==(const GroupInfo&, const GroupInfo&) = default;
};

struct ClassSummary {
  std::size_t count = 0;
  std::size_t cyclic = 0; ///< c(G)
  std::vector<std::string> labels;
  std::vector<std::size_t> orders;
  friend bool operator==(const ClassSummary&, const ClassSummary&) = default;
};

struct BorelSmithSection {
  std::size_t rank = 0;
  std::vector<IntVector> basis; ///< on G-classes, in Hermite normal form
  friend bool operator==(const BorelSmithSection&, const BorelSmithSection&) = default;
};

struct UnitSection {
  std::vector<std::string> sylow_labels;
  std::size_t unit_dimension = 0;
  std::size_t image_dimension = 0;
  std::size_t stable_dimension = 0;
  bool surjective = false;
  std::vector<std::vector<int>> stable_basis; ///< signs on S-classes
  friend bool operator==(const UnitSection&, const UnitSection&) = default;
};

struct TupleComponentInfo {
  std::string label;
  std::size_t automizer_order = 0;
  std::string characters; ///< structure of Hom(N_G(P)/P C_G(P), C_m)
  friend bool operator==(const TupleComponentInfo&, const TupleComponentInfo&) = default;
};

struct TupleSection {
  std::vector<TupleComponentInfo> components;
  std::size_t constraints = 0;
  std::string structure;
  std::vector<Integer> invariant_factors;
  std::size_t generators = 0;
  std::vector<std::vector<IntVector>> basis; ///< per tuple, per component: character coordinates
  friend bool operator==(const TupleSection&, const TupleSection&) = default;
};

/// A section is either computed or skipped with a reason.
template <class T>
struct Section {
  std::optional<T> data;
  std::string skipped;
  friend bool operator==(const Section&, const Section&) = default;
};

struct AnalysisReport {
  std::string schema = report_schema;
  GroupInfo group;
  std::uint64_t prime = 0;
  std::uint64_t unit_order = 0;
  ClassSummary classes;
  BorelSmithSection borel_smith;
  Section<UnitSection> units;
  Section<TupleSection> tuples;
  Verdict verdict;
  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

inline ClassSummary summarize_classes(const ClassTable& t) {
  ClassSummary s;
  s.count = t.size();
  s.cyclic = t.cyclic_count();
  for (std::size_t c = 0; c < t.size(); ++c) {
    s.labels.push_back(class_label(t, c));
    s.orders.push_back(t.order_of(c));
  }
  return s;
}

inline UnitSection unit_section(const SubgroupClassTable& t) {
  auto st = t.table_ptr(ClassScope::sylow);
  auto r = p2_surjectivity(t);
  UnitSection u;
  for (std::size_t c = 0; c < st->size(); ++c)
    u.sylow_labels.push_back(class_label(*st, c));
  u.unit_dimension = unit_group_of_p_group(t).dimension();
  u.image_dimension = r.image.dimension();
  u.stable_dimension = r.stable.dimension();
  u.surjective = r.surjective;
  for (const auto& b : r.stable.basis())
    u.stable_basis.push_back(detail::signs_of(b));
  return u;
}

inline TupleSection tuple_section(const SubgroupClassTable& t, std::uint64_t m) {
  auto r = reduced_tuple_group(t, m);
  TupleSection s;
  for (const auto& c : r.components())
    s.components.push_back({class_label(t.classes(), c.class_index), c.automizer.order(),
                            c.characters.as_abelian_group().structure()});
  s.constraints = r.constraints().size();
  s.structure = r.group().structure();
  s.invariant_factors = r.group().invariant_factors();
  s.generators = min_generators(r);
  for (const auto& b : r.basis()) {
    std::vector<IntVector> per;
    for (std::size_t c = 0; c < r.components().size(); ++c)
      per.push_back(r.component_values(b, c));
    s.basis.push_back(std::move(per));
  }
  return s;
}

inline AnalysisReport analyze(const SubgroupClassTable& t, std::string descriptor, std::uint64_t m) {
  AnalysisReport rep;
  const FiniteGroup& g = t.group();
  rep.group = {std::move(descriptor), g.degree(), g.order()};
  rep.prime = t.prime();
  rep.unit_order = m;
  rep.classes = summarize_classes(t.classes());
  auto lattice = borel_smith_basis(t, ClassScope::group);
  rep.borel_smith = {lattice.rank(), lattice.basis()};
  if (t.prime() == 2)
    rep.units.data = unit_section(t);
  else
    rep.units.skipped = "the unit group of B(S) is {+1, -1} for odd p";
  if (t.prime() != 2)
    rep.tuples.data = tuple_section(t, m);
  else
    rep.tuples.skipped = "reduced character tuples are computed for odd p";
  rep.verdict = lefschetz_verdict(t, m);
  return rep;
}

inline AnalysisReport analyze(const FiniteGroup& g, std::string descriptor, std::uint64_t p, std::uint64_t m) {
  return analyze(p_subgroup_classes(g, p), std::move(descriptor), m);
}

using Json = nlohmann::ordered_json;

namespace detail {

inline Json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

inline Integer json_integer(const Json& j) {
  if (j.is_string())
    return Integer(j.get<std::string>());
  if (j.is_number_integer())
    return Integer(j.get<long long>());
  throw InputError("report: expected an integer, got " + j.dump());
}

inline Json vector_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v)
    a.push_back(integer_json(x));
  return a;
}

inline IntVector json_vector(const Json& j) {
  IntVector v;
  for (const auto& x : j)
    v.push_back(json_integer(x));
  return v;
}

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("report: missing field \"") + key + "\"");
  return j.at(key);
}

template <class T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("report: bad field \"") + key + "\": " + e.what());
  }
}

inline Json certificate_json(const Certificate& c) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return {{"kind", "none"}};
        } else if constexpr (std::is_same_v<T, PreimageBasis>) {
          Json fs = Json::array();
          for (const auto& f : v.functions)
            fs.push_back(vector_json(f));
          return {{"kind", "preimage-basis"}, {"functions", fs}};
        } else if constexpr (std::is_same_v<T, MissingUnit>) {
          return {{"kind", "missing-unit"}, {"signs", v.signs}};
        } else if constexpr (std::is_same_v<T, GeneratorCount>) {
          return {{"kind", "generator-count"}, {"generators", v.generators}, {"cyclic_classes", v.cyclic_classes}};
        } else {
          Json data = Json::object();
          for (const auto& [k, x] : v.data)
            data[k] = integer_json(x);
          return {{"kind", "theorem"}, {"criterion", v.criterion}, {"data", data}};
        }
      },
      c);
}

inline Certificate json_certificate(const Json& j) {
  auto kind = get<std::string>(j, "kind");
  if (kind == "none")
    return std::monostate{};
  if (kind == "preimage-basis") {
    PreimageBasis p;
    for (const auto& f : field(j, "functions"))
      p.functions.push_back(json_vector(f));
    return p;
  }
  if (kind == "missing-unit")
    return MissingUnit{get<std::vector<int>>(j, "signs")};
  if (kind == "generator-count")
    return GeneratorCount{get<std::size_t>(j, "generators"), get<std::size_t>(j, "cyclic_classes")};
  if (kind == "theorem") {
    TheoremCertificate t{get<std::string>(j, "criterion"), {}};
    for (const auto& [k, x] : field(j, "data").items())
      t.data.emplace_back(k, json_integer(x));
    return t;
  }
  throw InputError("report: unknown certificate kind \"" + kind + "\"");
}

template <class T, class Fn>
Json section_json(const Section<T>& s, Fn fn) {
  if (s.data)
    return fn(*s.data);
  return {{"skipped", s.skipped}};
}

template <class T, class Fn>
Section<T> json_section(const Json& j, Fn fn) {
  Section<T> s;
  if (j.is_object() && j.contains("skipped"))
    s.skipped = get<std::string>(j, "skipped");
  else
    s.data = fn(j);
  return s;
}

} // namespace detail

inline Json to_json(const Verdict& v) {
  Json reasons = Json::array();
  for (const auto& r : v.reasons)
    reasons.push_back({{"criterion", r.criterion}, {"applies", r.applies}, {"evidence", r.evidence}});
  return {{"outcome", outcome_name(v.outcome)},
          {"reasons", reasons},
          {"certificate", detail::certificate_json(v.certificate)}};
}

inline Verdict verdict_from_json(const Json& j) {
  using detail::get;
  Verdict v;
  v.outcome = parse_outcome(get<std::string>(j, "outcome"));
  for (const auto& r : detail::field(j, "reasons"))
    v.reasons.push_back({get<std::string>(r, "criterion"), get<bool>(r, "applies"), get<std::string>(r, "evidence")});
  v.certificate = detail::json_certificate(detail::field(j, "certificate"));
  return v;
}

inline Json to_json(const AnalysisReport& r) {
  using namespace detail;
  Json bs = Json::array();
  for (const auto& row : r.borel_smith.basis)
    bs.push_back(vector_json(row));
  Json units = section_json(r.units, [](const UnitSection& u) -> Json {
    return {{"sylow_labels", u.sylow_labels},       {"unit_dimension", u.unit_dimension},
            {"image_dimension", u.image_dimension}, {"stable_dimension", u.stable_dimension},
            {"surjective", u.surjective},           {"stable_basis", u.stable_basis}};
  });
  Json tuples = section_json(r.tuples, [](const TupleSection& s) -> Json {
    Json comps = Json::array();
    for (const auto& c : s.components)
      comps.push_back({{"label", c.label}, {"automizer_order", c.automizer_order}, {"characters", c.characters}});
    Json basis = Json::array();
    for (const auto& tuple : s.basis) {
      Json per = Json::array();
      for (const auto& v : tuple)
        per.push_back(vector_json(v));
      basis.push_back(per);
    }
    return {{"components", comps},
            {"constraints", s.constraints},
            {"structure", s.structure},
            {"invariant_factors", vector_json(s.invariant_factors)},
            {"generators", s.generators},
            {"basis", basis}};
  });
  return {{"schema", r.schema},
          {"group", {{"descriptor", r.group.descriptor}, {"degree", r.group.degree}, {"order", r.group.order}}},
          {"prime", r.prime},
          {"unit_order", r.unit_order},
          {"classes",
           {{"count", r.classes.count},
            {"cyclic", r.classes.cyclic},
            {"labels", r.classes.labels},
            {"orders", r.classes.orders}}},
          {"borel_smith", {{"rank", r.borel_smith.rank}, {"basis", bs}}},
          {"units", units},
          {"tuples", tuples},
          {"verdict", to_json(r.verdict)}};
}

inline AnalysisReport report_from_json(const Json& j) {
  using namespace detail;
  AnalysisReport r;
  r.schema = get<std::string>(j, "schema");
  if (r.schema != report_schema)
    throw InputError("report: unsupported schema \"" + r.schema + "\"");
  const Json& g = field(j, "group");
  r.group = {get<std::string>(g, "descriptor"), get<std::size_t>(g, "degree"), get<std::size_t>(g, "order")};
  r.prime = get<std::uint64_t>(j, "prime");
  r.unit_order = get<std::uint64_t>(j, "unit_order");
  const Json& c = field(j, "classes");
  r.classes = {get<std::size_t>(c, "count"), get<std::size_t>(c, "cyclic"),
               get<std::vector<std::string>>(c, "labels"), get<std::vector<std::size_t>>(c, "orders")};
  const Json& bs = field(j, "borel_smith");
  r.borel_smith.rank = get<std::size_t>(bs, "rank");
  for (const auto& row : field(bs, "basis"))
    r.borel_smith.basis.push_back(json_vector(row));
  r.units = json_section<UnitSection>(field(j, "units"), [](const Json& u) {
    return UnitSection{get<std::vector<std::string>>(u, "sylow_labels"), get<std::size_t>(u, "unit_dimension"),
                       get<std::size_t>(u, "image_dimension"),         get<std::size_t>(u, "stable_dimension"),
                       get<bool>(u, "surjective"), get<std::vector<std::vector<int>>>(u, "stable_basis")};
  });
  r.tuples = json_section<TupleSection>(field(j, "tuples"), [](const Json& s) {
    TupleSection t;
    for (const auto& comp : field(s, "components"))
      t.components.push_back({get<std::string>(comp, "label"), get<std::size_t>(comp, "automizer_order"),
                              get<std::string>(comp, "characters")});
    t.constraints = get<std::size_t>(s, "constraints");
    t.structure = get<std::string>(s, "structure");
    t.invariant_factors = json_vector(field(s, "invariant_factors"));
    t.generators = get<std::size_t>(s, "generators");
    for (const auto& tuple : field(s, "basis")) {
      std::vector<IntVector> per;
      for (const auto& v : tuple)
        per.push_back(json_vector(v));
      t.basis.push_back(std::move(per));
    }
    return t;
  });
  r.verdict = verdict_from_json(field(j, "verdict"));
  return r;
}

/// One line per leaf, "path: value", where the path joins object keys and
/// array indices with dots and the value is JSON. Arrays of scalars stay on
/// one line.
inline std::string to_flat_text(const Json& j) {
  std::string out;
  auto scalar_array = [](const Json& a) {
    return a.is_array() && std::all_of(a.begin(), a.end(), [](const Json& x) { return x.is_primitive(); });
  };
  auto walk = [&](auto&& self, const Json& node, const std::string& path) -> void {
    if (node.is_object() && !node.empty()) {
      for (const auto& [k, v] : node.items())
        self(self, v, path.empty() ? k : path + "." + k);
    } else if (node.is_array() && !scalar_array(node)) {
      for (std::size_t i = 0; i < node.size(); ++i)
        self(self, node[i], path + "." + std::to_string(i));
    } else {
      out += path + ": " + node.dump() + "\n";
    }
  };
  walk(walk, j, "");
  return out;
}

inline Json from_flat_text(const std::string& text) {
  Json out = Json::object();
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#')
      continue;
    auto sep = line.find(": ");
    if (sep == std::string::npos)
      throw InputError("report text: no \": \" on line " + std::to_string(line_no));
    Json value;
    try {
      value = Json::parse(line.substr(sep + 2));
    } catch (const nlohmann::json::exception&) {
      throw InputError("report text: bad value on line " + std::to_string(line_no));
    }
    Json* node = &out;
    std::istringstream ps(line.substr(0, sep));
    std::string key;
    while (std::getline(ps, key, '.')) {
      bool index = !key.empty() && std::all_of(key.begin(), key.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
      if (index) {
        if (node->is_null())
          *node = Json::array();
        node = &(*node)[std::stoul(key)];
      } else {
        node = &(*node)[key];
      }
    }
    *node = std::move(value);
  }
  return out;
}

inline std::string to_text(const AnalysisReport& r) { return to_flat_text(to_json(r)); }

inline AnalysisReport report_from_text(const std::string& text) { return report_from_json(from_flat_text(text)); }

} // namespace lefschetz

#endif // LEFSCHETZ_REPORT_HPP
