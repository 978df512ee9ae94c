#pragma once

#include <optional>
#include <string>

#include "zalg/finitezalg.hpp"

namespace zalg {

// Line-oriented problem description: sections vars:, ideal:, elements:,
// explicit: (with syzygy:/constants: subsections); '#' starts a comment.
struct ProblemFile {
  std::vector<std::string> vars;
  std::vector<Polynomial> ideal_gens;
  bool has_ideal = false;
  std::optional<ExplicitData> explicit_data;
  std::vector<Polynomial> elements;
};

ProblemFile parse_problem_file(const std::string& text);

ExplicitAlgebra algebra_from_problem(const ProblemFile& pf);

}  // namespace zalg
