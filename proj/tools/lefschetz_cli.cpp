#include <lefschetz/lefschetz.hpp>

#include <CLI11.hpp>

#include <iostream>

using namespace lefschetz;

namespace {

struct Source {
  std::string group_file;
  std::string family;
  std::uint64_t prime = 0;
  std::uint64_t unit_order = 0;
  std::string format = "text";
  std::size_t bound = default_element_bound;

  void add_to(CLI::App* cmd, bool with_unit_order = true) {
    auto* g = cmd->add_option("--group", group_file, "group file (degree line, gen lines)");
    auto* f = cmd->add_option("--family", family, "named family NAME:PARAMS, e.g. dihedral:8");
    g->excludes(f);
    cmd->add_option("--prime", prime, "the prime p")->required();
    if (with_unit_order)
      cmd->add_option("--unit-order", unit_order, "order m of the field's unit group (default p-1, or 1 for p = 2)");
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--bound", bound, "largest group order to build");
  }

  std::string descriptor() const { return family.empty() ? group_file : family; }

  FiniteGroup group() const {
    if (family.empty() == group_file.empty())
      throw InputError("give exactly one of --group or --family");
    if (!family.empty())
      return family_group(family, bound);
    return parse_group_file(group_file, bound);
  }

  std::uint64_t field_units() const { return unit_order ? unit_order : default_unit_order(prime); }
};

void emit(const Json& j, const std::string& format) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << to_flat_text(j);
}

Json kernel_json(const SubgroupClassTable& t, const std::string& descriptor, const IntVector& values) {
  HMarkCandidate cand(SuperclassFunction(t.table_ptr(ClassScope::group), values));
  const Subgroup& s = t.sylow();
  bool cyclic = t.prime() != 2 && !s.is_trivial() && is_cyclic(s);
  KernelReport r = cyclic ? kernel_membership_cyclic(t, cand) : kernel_necessary(t, cand);
  const ClassTable& classes = t.classes();
  std::string mode = cyclic ? "cyclic-sylow" : t.prime() == 2 ? "even-values" : "necessary-congruences";
  std::string result = r.member ? (r.exact ? "in kernel" : "necessary conditions hold") : "not in kernel";
  Json congruences = Json::array();
  for (const auto& c : r.congruences)
    congruences.push_back({{"lower", class_label(classes, c.lower)},
                           {"upper", class_label(classes, c.upper)},
                           {"modulus", detail::integer_json(c.modulus)},
                           {"holds", c.holds}});
  Json odd = r.odd_class ? Json(class_label(classes, *r.odd_class)) : Json(nullptr);
  return {{"group", descriptor}, {"prime", t.prime()}, {"h", detail::vector_json(values)},
          {"mode", mode},        {"result", result},    {"odd_value_at", odd},
          {"congruences", congruences}};
}

IntVector parse_values(const std::string& text) {
  IntVector v;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      long long x = std::stoll(item, &used);
      if (used != item.size())
        throw InputError("");
      v.push_back(x);
    } catch (const std::exception&) {
      throw InputError("malformed --h value: \"" + item + "\"");
    }
  }
  if (v.empty())
    throw InputError("--h needs comma separated integers, one per class");
  return v;
}

int exit_code(ErrorKind k) {
  switch (k) {
  case ErrorKind::input: return 2;
  case ErrorKind::resource: return 3;
  default: return 1;
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lefschetz homomorphism analysis for finite permutation groups"};
  app.require_subcommand(1);

  Source analyze_src, verdict_src, kernel_src;
  auto* analyze_cmd = app.add_subcommand("analyze", "full report: classes, Borel-Smith basis, units or tuples, verdict");
  analyze_src.add_to(analyze_cmd);
  auto* verdict_cmd = app.add_subcommand("verdict", "the verdict section of analyze");
  verdict_src.add_to(verdict_cmd);

  std::string table_name, table_format = "text";
  auto* tables_cmd = app.add_subcommand("tables", "dihedral tables: cfb-d8, units-d8, cfb-d2n:N, units-d2n:N");
  tables_cmd->add_option("name", table_name, "table name")->required();
  tables_cmd->add_option("--format", table_format, "output format")->check(CLI::IsMember({"text", "json"}));

  std::string h_text;
  auto* kernel_cmd = app.add_subcommand("kernel", "kernel tests for an h-mark function");
  kernel_cmd->set_help_flag("--help", "print this help message and exit");
  kernel_src.add_to(kernel_cmd, false);
  kernel_cmd->add_option("--h", h_text, "values on the G-classes of p-subgroups, comma separated")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze_cmd->parsed()) {
      auto t = p_subgroup_classes(analyze_src.group(), analyze_src.prime);
      auto report = analyze(t, analyze_src.descriptor(), analyze_src.field_units());
      emit(to_json(report), analyze_src.format);
    } else if (verdict_cmd->parsed()) {
      auto t = p_subgroup_classes(verdict_src.group(), verdict_src.prime);
      emit(to_json(lefschetz_verdict(t, verdict_src.field_units())), verdict_src.format);
    } else if (tables_cmd->parsed()) {
      auto table = named_table(table_name);
      if (table_format == "json") {
        Json rows = Json::array();
        for (const auto& r : table.rows)
          rows.push_back(detail::vector_json(r));
        emit({{"title", table.title}, {"columns", table.columns}, {"rows", rows}}, "json");
      } else {
        std::cout << table.to_text();
      }
    } else if (kernel_cmd->parsed()) {
      auto t = p_subgroup_classes(kernel_src.group(), kernel_src.prime);
      emit(kernel_json(t, kernel_src.descriptor(), parse_values(h_text)), kernel_src.format);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
