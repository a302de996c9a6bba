#pragma once

// Group cohomology H^p(Gamma, A), p <= 2, of a finite group with
// coefficients in a finite Gamma-module, computed from inhomogeneous
// (bar-resolution) cochains with exact integer linear algebra.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "drg/abgroup.hpp"
#include "drg/grouptable.hpp"

namespace drg {

/// A finite abelian group with a left action of Gamma.  action(g) is the
/// matrix of a -> g.a on canonical coordinates.
class GammaModule {
 public:
  /// Throws ValidationError unless each matrix is an automorphism of `coeff`
  /// and g -> action(g) is a homomorphism.
  GammaModule(FiniteGroup gamma, FGAbelianGroup coeff, std::vector<IntMatrix> action);

  static GammaModule trivial_action(FiniteGroup gamma, FGAbelianGroup coeff);

  const FiniteGroup& gamma() const { return gamma_; }
  const FGAbelianGroup& coeff() const { return coeff_; }
  const IntMatrix& action(std::size_t g) const { return action_.at(g); }
  const std::vector<IntMatrix>& actions() const { return action_; }

  /// g.a, reduced.
  Vector act(std::size_t g, const Vector& a) const;

  std::size_t num_coordinates() const { return coeff_.num_generators(); }
  /// Number of integer coordinates of a p-cochain: |Gamma|^p * num_coordinates().
  std::size_t cochain_dim(std::size_t p) const;

 private:
  FiniteGroup gamma_;
  FGAbelianGroup coeff_;
  std::vector<IntMatrix> action_;
};

/// A map Gamma^p -> A.  values[flat] with flat = g1*n^(p-1) + ... + gp.
struct Cochain {
  std::size_t degree = 0;
  std::vector<Vector> values;

  static Cochain zero(const GammaModule& m, std::size_t degree);

  const Vector& at(std::size_t g1) const { return values.at(g1); }
  Vector& at(std::size_t g1) { return values.at(g1); }
  const Vector& at(std::size_t g1, std::size_t g2, std::size_t n) const { return values.at(g1 * n + g2); }
  Vector& at(std::size_t g1, std::size_t g2, std::size_t n) { return values.at(g1 * n + g2); }

  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.degree == b.degree && a.values == b.values;
  }
};

std::size_t flat_index(const std::vector<std::size_t>& args, std::size_t n);

/// Integer coordinate vector of a cochain (values concatenated).
Vector flatten(const GammaModule& m, const Cochain& c);
Cochain unflatten(const GammaModule& m, std::size_t degree, const Vector& x);

Cochain add(const GammaModule& m, const Cochain& a, const Cochain& b);
Cochain scale(const GammaModule& m, const Cochain& a, const Integer& k);
Cochain subtract(const GammaModule& m, const Cochain& a, const Cochain& b);

/// Bar differential from the explicit formulas; degree 0, 1 or 2.
Cochain differential(const GammaModule& m, const Cochain& c);

/// True iff c(1, g) = c(g, 1) = 0 for all g (degree 2), b(1) = 0 (degree 1).
bool is_normalized(const GammaModule& m, const Cochain& c);

/// Lift of d^p to integer coordinates, stored by rows.
struct SparseRows {
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::size_t, Integer>>> rows;
  Vector apply(const Vector& x) const;
};
SparseRows differential_matrix(const GammaModule& m, std::size_t p);

struct CohomologyOptions {
  /// Cap on |Gamma|^(p+1) * (number of coefficient coordinates).
  std::size_t budget = 50000;
};

/// A class in H^p given by its coordinates in the invariant-factor form.
struct CohomologyClass {
  std::size_t degree = 0;
  Vector coordinates;
  Cochain representative;  // normalized, lexicographically minimal
  FGAbelianGroup group_structure;
};

/// H^p(Gamma, A) with enough of the lattice data kept to name classes.
class CohomologyGroup {
 public:
  CohomologyGroup(GammaModule module, std::size_t degree, const CohomologyOptions& options = {});

  const GammaModule& module() const { return module_; }
  std::size_t degree() const { return degree_; }
  const FGAbelianGroup& group() const { return group_; }
  /// One cocycle per canonical generator of group().
  const std::vector<Cochain>& generators() const { return generators_; }

  bool is_cocycle(const Cochain& c) const;
  bool is_coboundary(const Cochain& c) const;
  /// Coordinates of the class of a cocycle; throws ValidationError otherwise.
  Vector class_of(const Cochain& c) const;
  /// Normalized, lexicographically minimal cocycle cohomologous to c.
  Cochain canonical(const Cochain& c) const;
  /// Canonical representative of the class with these coordinates.
  Cochain representative(const Vector& coordinates) const;

  /// Every class, in mixed-radix order of coordinates.
  std::vector<CohomologyClass> classes() const;

  /// |Z^p| and |B^p| as subgroups of the cochain group.
  Integer cocycle_count() const;
  Integer coboundary_count() const;

 private:
  GammaModule module_;
  std::size_t degree_;
  Integer exponent_;
  ModularLattice cocycles_;
  ModularLattice coboundaries_;
  ModularLattice normalized_coboundaries_;
  IntMatrix smith_u_;                  // rows kept for the nontrivial factors
  std::vector<std::size_t> kept_rows_;
  FGAbelianGroup group_;
  std::vector<Cochain> generators_;
};

inline CohomologyGroup cohomology_group(const GammaModule& m, std::size_t p, const CohomologyOptions& options = {}) {
  return CohomologyGroup(m, p, options);
}

/// For a cocycle c of degree p >= 1: some b with db = c, found by integer
/// solving on [d^(p-1) | moduli]; nullopt when c is not a coboundary.
std::optional<Cochain> solve_coboundary(const GammaModule& m, const Cochain& c);

struct EckmannReport {
  bool holds = true;
  /// For each generator class, the cochain b with |Gamma| * c = db.
  std::vector<Cochain> witnesses;
  std::string failure;
};

/// Checks |Gamma| * H^p = 0 generator by generator (p = 1 or 2).
EckmannReport eckmann_check(const CohomologyGroup& h);

/// Normalized cochain cohomologous to the cocycle c (degree 2): c - d(const c(1,1)).
Cochain normalize_cocycle(const GammaModule& m, const Cochain& c);

// ---------------------------------------------------------------------------
// Torsion tower

struct TowerLevel {
  std::size_t k = 0;
  Integer modulus;                 // |Gamma|^k
  FGAbelianGroup coefficients;     // Z(G)[|Gamma|^k]
  FGAbelianGroup h2;
  bool has_comparison = false;     // comparison to level k+1 computed
  bool comparison_injective = false;
  bool comparison_bijective = false;
  Integer image_order;             // order of the image of H2_k in H2_(k+1)
};

struct StabilizedH2 {
  bool stabilized = false;
  /// "comparison-isomorphism" when two consecutive comparison maps are
  /// bijective, "image-stable" when the images stop changing.
  std::string rule;
  FGAbelianGroup h2;
  std::size_t k_used = 0;
  std::vector<TowerLevel> levels;
  /// H^2 at level k_used, where representatives live.
  std::shared_ptr<const CohomologyGroup> host;
  /// Column j: coordinates in host->group() of generator j of h2.
  IntMatrix embedding;

  std::vector<CohomologyClass> classes() const;
};

struct TowerOptions {
  std::size_t max_k = 4;
  CohomologyOptions cohomology;
};

/// H^2(Gamma, Z_fin) from the tower Z[n^k], n = |Gamma|.  `character_map_inverses`
/// holds, for every element g of Gamma, the matrix of Ad(g)^-1 on the character
/// group of Z.  Never throws for lack of stabilization; check `stabilized`.
StabilizedH2 stabilized_h2(const FiniteGroup& gamma, const DiagonalizableGroup& z,
                           const std::vector<IntMatrix>& character_map_inverses, const TowerOptions& options = {});

/// Gamma-module Z[n] with the action induced from character maps.
GammaModule torsion_module(const FiniteGroup& gamma, const TorsionLevel& level,
                           const std::vector<IntMatrix>& character_map_inverses);

}  // namespace drg
