#include "zalg/problemfile.hpp"

#include <sstream>

namespace zalg {

namespace {

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

}  // namespace

ProblemFile parse_problem_file(const std::string& text) {
  ProblemFile pf;
  enum class Section { None, Vars, Ideal, Elements, ExplicitSyzygy, ExplicitConstants, Explicit };
  Section sec = Section::None;
  std::vector<std::vector<Int>> syzygy_rows;
  std::map<std::pair<int, int>, std::vector<Int>> products;
  bool has_explicit = false;
  std::vector<std::string> ideal_lines, element_lines;
  std::vector<std::pair<std::string, std::string>> product_lines;

  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;
    if (line.rfind("vars:", 0) == 0) {
      pf.vars = split_ws(line.substr(5));
      sec = Section::None;
      continue;
    }
    if (line == "ideal:") {
      pf.has_ideal = true;
      sec = Section::Ideal;
      continue;
    }
    if (line == "elements:") {
      sec = Section::Elements;
      continue;
    }
    if (line == "explicit:") {
      has_explicit = true;
      sec = Section::Explicit;
      continue;
    }
    if (line == "syzygy:") {
      if (!has_explicit) throw ParseError("syzygy: outside an explicit block", lineno);
      sec = Section::ExplicitSyzygy;
      continue;
    }
    if (line == "constants:") {
      if (!has_explicit) throw ParseError("constants: outside an explicit block", lineno);
      sec = Section::ExplicitConstants;
      continue;
    }
    switch (sec) {
      case Section::Ideal:
        ideal_lines.push_back(line);
        break;
      case Section::Elements:
        element_lines.push_back(line);
        break;
      case Section::ExplicitSyzygy: {
        std::vector<Int> row;
        for (auto& w : split_ws(line)) row.emplace_back(w);
        syzygy_rows.push_back(std::move(row));
        break;
      }
      case Section::ExplicitConstants: {
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
          throw ParseError("constants line needs 'gi*gj = coefficients'", lineno);
        product_lines.push_back({strip(line.substr(0, eq)), strip(line.substr(eq + 1))});
        break;
      }
      default:
        throw ParseError("content outside any section: '" + line + "'", lineno);
    }
  }
  if (pf.vars.empty()) throw ParseError("missing vars: section", 0);
  if (pf.has_ideal == has_explicit)
    throw ParseError("exactly one of ideal: and explicit: must be present", 0);

  Domain Z = Domain::ZZ();
  for (auto& l : ideal_lines) pf.ideal_gens.push_back(parse_poly(l, pf.vars, Z));
  if (pf.has_ideal && pf.ideal_gens.empty())
    throw ParseError("ideal: section has no generators", 0);
  for (auto& l : element_lines) pf.elements.push_back(parse_poly(l, pf.vars, Z));

  if (has_explicit) {
    ExplicitData d;
    d.n = static_cast<int>(pf.vars.size());
    std::size_t width = static_cast<std::size_t>(d.n) + 1;
    for (auto& row : syzygy_rows)
      if (row.size() != width)
        throw ParseError("syzygy rows need " + std::to_string(width) + " entries", 0);
    d.syzygy = syzygy_rows.empty() ? IntMat::zero(0, width) : IntMat::from_rows(syzygy_rows);
    auto var_index = [&](const std::string& name) {
      for (std::size_t i = 0; i < pf.vars.size(); ++i)
        if (pf.vars[i] == name) return static_cast<int>(i) + 1;
      throw ParseError("unknown generator '" + name + "' in constants", 0);
    };
    for (auto& [lhs, rhs] : product_lines) {
      std::size_t star = lhs.find('*');
      if (star == std::string::npos)
        throw ParseError("constants left-hand side needs gi*gj", 0);
      int i = var_index(strip(lhs.substr(0, star)));
      int j = var_index(strip(lhs.substr(star + 1)));
      std::vector<Int> row;
      for (auto& w : split_ws(rhs)) row.emplace_back(w);
      if (row.size() != width)
        throw ParseError("constants rows need " + std::to_string(width) + " entries", 0);
      products[{std::min(i, j), std::max(i, j)}] = std::move(row);
    }
    for (int i = 1; i <= d.n; ++i)
      for (int j = i; j <= d.n; ++j)
        if (!products.count({i, j}))
          throw ParseError("missing product for generators " + pf.vars[i - 1] + "*" +
                               pf.vars[j - 1],
                           0);
    d.products = std::move(products);
    pf.explicit_data = std::move(d);
  }
  return pf;
}

ExplicitAlgebra algebra_from_problem(const ProblemFile& pf) {
  if (pf.has_ideal) {
    int n = static_cast<int>(pf.vars.size());
    return ExplicitAlgebra::from_presentation(Ideal::make(Domain::ZZ(), n, pf.ideal_gens));
  }
  return ExplicitAlgebra::from_explicit(*pf.explicit_data);
}

}  // namespace zalg
