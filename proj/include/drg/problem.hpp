#pragma once

// Problem files: JSON documents describing G (through a root datum), Gamma
// and Ad.  See README.md for the schema.

#include <cstddef>
#include <optional>
#include <string>

#include "drg/autbrd.hpp"
#include "drg/grouptable.hpp"
#include "drg/rootdatum.hpp"

namespace drg {

inline constexpr const char* kProblemSchema = "drg-problem/1";

struct ProblemOptions {
  std::size_t max_k = 4;
  std::size_t budget = 50000;       // cap on |Gamma|^3 * (coordinates of Z[n^k])
  std::size_t group_cap = FiniteGroup::kDefaultCap;
  std::size_t weyl_cap = 100000;
  std::string format = "text";
};

struct ProblemFile {
  std::string name;
  std::optional<BasedRootDatum> based;
  FiniteGroup gamma;
  AdHom ad;
  ProblemOptions options;

  const BasedRootDatum& datum() const { return *based; }
};

/// Parses and validates.  Throws ValidationError naming the offending field
/// (or line and column for syntax errors).
ProblemFile parse_problem_text(const std::string& text, const std::string& source = "<input>");
ProblemFile parse_problem(const std::string& path);

}  // namespace drg
