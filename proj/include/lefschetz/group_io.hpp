#ifndef LEFSCHETZ_GROUP_IO_HPP
#define LEFSCHETZ_GROUP_IO_HPP

// Text format for groups:
//
//   # comment
//   degree 6
//   gen (1 2 3)(4 5)
//   gen (1 4)
//
// and family descriptors of the form NAME:P1,P2.

#include <lefschetz/named_groups.hpp>

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace lefschetz {

/// Parses 1-based cycle notation such as "(1 2 3)(4 5)" or "()".
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip();
  if (i == text.size())
    throw InputError("malformed cycle notation: empty generator");
  while (i < text.size()) {
    if (text[i] != '(')
      throw InputError("malformed cycle notation: expected '(' in \"" + std::string(text) + "\"");
    ++i;
    std::vector<Point> cycle;
    while (true) {
      skip();
      if (i == text.size())
        throw InputError("malformed cycle notation: unclosed '('");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      unsigned long value = 0;
      auto [end, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc())
        throw InputError("malformed cycle notation: bad point in \"" + std::string(text) + "\"");
      i = static_cast<std::size_t>(end - text.data());
      if (value < 1 || value > degree)
        throw InputError("point out of range: " + std::to_string(value) + " (degree " +
                         std::to_string(degree) + ")");
      cycle.push_back(static_cast<Point>(value));
    }
    if (!cycle.empty())
      cycles.push_back(std::move(cycle));
    skip();
  }
  return Permutation::from_cycles(degree, cycles);
}

struct GroupDefinition {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

inline GroupDefinition parse_group_definition(std::istream& in) {
  GroupDefinition def;
  bool have_degree = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key) || key[0] == '#')
      continue;
    std::string rest;
    std::getline(ls, rest);
    auto where = " (line " + std::to_string(line_no) + ")";
    if (key == "degree") {
      std::istringstream rs(rest);
      long long n = 0;
      std::string extra;
      if (!(rs >> n) || n < 1 || (rs >> extra))
        throw InputError("malformed degree line" + where);
      def.degree = static_cast<std::size_t>(n);
      have_degree = true;
    } else if (key == "gen") {
      if (!have_degree)
        throw InputError("generator before degree line" + where);
      def.generators.push_back(parse_cycles(rest, def.degree));
    } else {
      throw InputError("unknown directive \"" + key + "\"" + where);
    }
  }
  if (!have_degree)
    throw InputError("missing degree line");
  if (def.generators.empty())
    throw InputError("empty generator list");
  return def;
}

inline FiniteGroup parse_group_text(const std::string& text,
                                    std::size_t bound = default_element_bound) {
  std::istringstream in(text);
  auto def = parse_group_definition(in);
  return FiniteGroup::from_generators(def.degree, std::move(def.generators), bound);
}

inline FiniteGroup parse_group_file(const std::string& path,
                                    std::size_t bound = default_element_bound) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open group file: " + path);
  auto def = parse_group_definition(in);
  return FiniteGroup::from_generators(def.degree, std::move(def.generators), bound);
}

struct FamilySpec {
  std::string name;
  std::vector<std::size_t> params;

  std::string to_string() const {
    std::string s = name;
    for (std::size_t i = 0; i < params.size(); ++i)
      s += (i ? "," : ":") + std::to_string(params[i]);
    return s;
  }
};

/// Parses NAME:P1,P2,... (the parameter list may be absent).
inline FamilySpec parse_family(const std::string& text) {
  FamilySpec spec;
  auto colon = text.find(':');
  spec.name = text.substr(0, colon);
  if (spec.name.empty())
    throw InputError("malformed family descriptor: \"" + text + "\"");
  if (colon == std::string::npos)
    return spec;
  std::string rest = text.substr(colon + 1);
  std::istringstream in(rest);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || end != item.data() + item.size())
      throw InputError("malformed family parameter: \"" + item + "\"");
    spec.params.push_back(value);
  }
  return spec;
}

inline FiniteGroup family_group(const std::string& text, std::size_t bound = default_element_bound) {
  auto spec = parse_family(text);
  return named_group(spec.name, spec.params, bound);
}

} // namespace lefschetz

#endif // LEFSCHETZ_GROUP_IO_HPP
