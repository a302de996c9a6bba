#pragma once

// Reports emitted by the command-line tool, with a JSON form that parses back
// to an equal Report.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "drg/exactlin.hpp"

namespace drg {

inline constexpr const char* kReportSchema = "drg-report/1";

struct TowerLevelReport {
  std::size_t k = 0;
  Integer modulus;
  Vector coefficient_factors;
  Vector h2_factors;
  bool has_comparison = false;
  bool comparison_injective = false;
  bool comparison_bijective = false;
  bool operator==(const TowerLevelReport&) const = default;
};

struct ActionReport {
  std::size_t element = 0;
  IntMatrix ad;               // on X*(H)
  IntMatrix character_map;    // Ad(g)^-1 on X*(H)/ZR
  IntMatrix torsion_action;   // on Z(G)[n^k_used]
  bool operator==(const ActionReport&) const = default;
};

struct ClassReport {
  Vector coordinates;
  bool split = false;
  /// c(g1, g2) at index g1 * |Gamma| + g2, in coordinates of Z(G)[n^k_used].
  std::vector<Vector> cocycle;
  /// The relations s(g1) s(g2) = c(g1, g2) s(g1 g2) and s(g) z s(g)^-1 = g.z.
  std::vector<std::string> relations;
  bool operator==(const ClassReport&) const = default;
};

struct ClassifySection {
  std::size_t torus_rank = 0;
  Vector center_factors;
  std::vector<ActionReport> action;
  Vector coefficient_factors;  // Z(G)[n^k_used]
  Vector h2_factors;
  std::size_t k_used = 0;
  std::string rule;
  bool eckmann = false;
  std::vector<TowerLevelReport> tower;
  std::vector<ClassReport> classes;
  bool operator==(const ClassifySection&) const = default;
};

struct WeylSection {
  std::size_t order = 0;
  std::vector<IntMatrix> generators;
  std::size_t positive_systems = 0;
  bool operator==(const WeylSection&) const = default;
};

struct EdgeReport {
  std::size_t a = 0, b = 0;
  Integer label_ab, label_ba;
  bool operator==(const EdgeReport&) const = default;
};

struct DynkinSection {
  std::size_t vertices = 0;
  std::vector<EdgeReport> edges;
  IntMatrix cartan;
  bool semisimple = true;
  std::size_t automorphisms = 0;
  std::vector<std::vector<std::size_t>> diagram_symmetries;
  std::vector<std::vector<std::size_t>> non_lifting;
  bool operator==(const DynkinSection&) const = default;
};

struct CenterSection {
  std::size_t torus_rank = 0;
  Vector factors;
  bool operator==(const CenterSection&) const = default;
};

struct CheckItem {
  std::string name;
  bool ok = false;
  std::string detail;
  bool operator==(const CheckItem&) const = default;
};

struct ErrorSection {
  std::string kind;  // validation, budget, internal
  std::string message;
  int exit_code = 0;
  bool operator==(const ErrorSection&) const = default;
};

struct Report {
  std::string schema = kReportSchema;
  std::string command;
  std::string name;
  std::size_t rank = 0;
  std::size_t num_roots = 0;
  std::size_t gamma_order = 0;
  std::optional<ClassifySection> classify;
  std::optional<WeylSection> weyl;
  std::optional<DynkinSection> dynkin;
  std::optional<CenterSection> center;
  std::optional<std::vector<CheckItem>> checks;
  std::optional<ErrorSection> error;
  bool operator==(const Report&) const = default;

  /// Exit status implied by the report: error code, 3 for failed checks, else 0.
  int exit_code() const;
};

std::string report_to_json(const Report& r);
/// Throws ValidationError on malformed input.
Report report_from_json(const std::string& text);
std::string report_to_text(const Report& r);

}  // namespace drg
