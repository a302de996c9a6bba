#pragma once

// Root data in explicit coordinates.  Characters and cocharacters are integer
// column vectors of length rank(); the pairing <coroot, root> is the dot
// product.  Lattice endomorphisms act on characters as matrices on column
// vectors.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "drg/abgroup.hpp"
#include "drg/exactlin.hpp"

namespace drg {

Integer pairing(const Vector& cocharacter, const Vector& character);

struct RootDatumViolation {
  std::string axiom;    // short name of the violated axiom
  std::string witness;  // the offending data
  std::string message() const { return axiom + ": " + witness; }
};

class RootDatum {
 public:
  RootDatum() = default;
  /// Stores the data as given; call validate() to check the axioms.
  RootDatum(std::size_t rank, std::vector<Vector> roots, std::vector<Vector> coroots);

  /// Full root datum generated from simple roots and simple coroots by the
  /// simple reflections.  Throws ValidationError if the closure exceeds `cap`
  /// roots or the result fails validation.
  static RootDatum from_simple(std::size_t rank, const std::vector<Vector>& simple_roots,
                               const std::vector<Vector>& simple_coroots, std::size_t cap = 100000);

  /// Simply connected datum of a Cartan matrix C (C_ij = <a_i^v, a_j>):
  /// simple coroots are the standard basis, simple root j is column j of C.
  static RootDatum simply_connected(const IntMatrix& cartan);
  /// Adjoint datum: simple roots are the standard basis, simple coroot i is row i.
  static RootDatum adjoint(const IntMatrix& cartan);

  std::size_t rank() const { return rank_; }
  std::size_t num_roots() const { return roots_.size(); }
  const std::vector<Vector>& roots() const { return roots_; }
  const std::vector<Vector>& coroots() const { return coroots_; }
  const Vector& root(std::size_t i) const { return roots_.at(i); }
  const Vector& coroot(std::size_t i) const { return coroots_.at(i); }

  std::optional<std::size_t> root_index(const Vector& v) const;
  std::optional<std::size_t> coroot_index(const Vector& v) const;

  /// Roots as rows (num_roots x rank).
  IntMatrix root_matrix() const;
  IntMatrix coroot_matrix() const;

 private:
  std::size_t rank_ = 0;
  std::vector<Vector> roots_;
  std::vector<Vector> coroots_;
  std::map<Vector, std::size_t> root_lookup_;
  std::map<Vector, std::size_t> coroot_lookup_;
};

/// First violated root-datum axiom, or nullopt when the datum is valid.
std::optional<RootDatumViolation> validate(const RootDatum& datum);

/// Matrix of lambda -> lambda - <b^v, lambda> b on characters.
IntMatrix reflection(const RootDatum& datum, std::size_t root_index);
/// Matrix of l -> l - <l, b> b^v on cocharacters.
IntMatrix coreflection(const RootDatum& datum, std::size_t root_index);

/// Permutation of root indices induced by a character-lattice matrix, or
/// nullopt if it does not preserve the root set.
std::optional<std::vector<std::size_t>> root_permutation(const RootDatum& datum, const IntMatrix& w);
std::optional<std::vector<std::size_t>> coroot_permutation(const RootDatum& datum, const IntMatrix& w);

class BasedRootDatum {
 public:
  /// Checks that the simple roots are linearly independent and that every
  /// root is a nonnegative or nonpositive integer combination of them.
  BasedRootDatum(RootDatum datum, std::vector<std::size_t> simple_indices);

  /// Base determined by a generic linear functional on the characters.
  static BasedRootDatum standard(RootDatum datum);

  const RootDatum& datum() const { return datum_; }
  const std::vector<std::size_t>& simple_indices() const { return simple_; }
  std::size_t num_simple() const { return simple_.size(); }
  const Vector& simple_root(std::size_t i) const { return datum_.root(simple_[i]); }
  const Vector& simple_coroot(std::size_t i) const { return datum_.coroot(simple_[i]); }
  /// Indices of positive roots, ascending.
  const std::vector<std::size_t>& positive_indices() const { return positive_; }
  bool is_positive(std::size_t root_index) const;
  /// Coefficients of a root in the simple roots.
  const Vector& simple_coefficients(std::size_t root_index) const { return coefficients_.at(root_index); }

  /// C_ij = <a_i^v, a_j>.
  IntMatrix cartan_matrix() const;
  /// True when the simple roots span a finite-index sublattice.
  bool is_semisimple() const { return simple_.size() == datum_.rank(); }

 private:
  RootDatum datum_;
  std::vector<std::size_t> simple_;
  std::vector<std::size_t> positive_;
  std::vector<Vector> coefficients_;
};

struct WeylGroup {
  /// Breadth-first order from the identity, right-multiplying by generators.
  std::vector<IntMatrix> elements;
  /// Simple reflections, in the order of the simple roots.
  std::vector<IntMatrix> generators;

  std::size_t order() const { return elements.size(); }
};

/// Closure of the simple reflections.  Throws BudgetExceeded past `cap`.
WeylGroup weyl_generate(const BasedRootDatum& based, std::size_t cap = 100000);

struct PositiveSystem {
  std::vector<std::size_t> roots;  // ascending root indices
  std::size_t weyl_element = 0;    // index into WeylGroup::elements with w R+ = roots
};

/// The W-orbit of the base positive system.  Throws InternalError if
/// w -> w R+ is not a bijection.
std::vector<PositiveSystem> positive_systems(const BasedRootDatum& based, const WeylGroup& weyl);

struct DynkinEdge {
  std::size_t a = 0, b = 0;  // simple-root positions, a < b
  Integer label_ab;           // <a^v, b>
  Integer label_ba;           // <b^v, a>
};

struct DynkinDiagram {
  std::size_t num_vertices = 0;
  std::vector<std::size_t> vertices;  // simple-root indices into the datum
  std::vector<DynkinEdge> edges;

  std::string to_string() const;
};

DynkinDiagram dynkin(const BasedRootDatum& based);

/// Center Z(G), through its character group X*(H)/ZR.  The presentation
/// used for the quotient is kept for transporting automorphisms.
struct Center {
  DiagonalizableGroup group;
  CokernelPresentation presentation;  // X*(H) -> X*(H)/ZR

  /// Matrix of the automorphism of X*(H)/ZR induced by T (T must preserve ZR).
  IntMatrix induced_character_map(const IntMatrix& t) const;
};

Center center(const RootDatum& datum);

struct AlmostProduct {
  IntMatrix sublattice_1;  // basis (columns) of the characters killing Z(G): the root lattice
  IntMatrix sublattice_2;  // basis (columns) of {lambda : <a^v, lambda> = 0 for all roots}
  Integer index = 0;       // index of their sum in X*(H)
};

/// Throws ValidationError when the sum does not have finite index.
AlmostProduct almost_product_check(const RootDatum& datum);

/// Cartan matrix of a simple type: "A".."G" with rank (E 6-8, F 4, G 2).
IntMatrix cartan_of_type(char type, std::size_t rank);
/// Block-diagonal Cartan matrix.
IntMatrix cartan_product(const IntMatrix& a, const IntMatrix& b);

}  // namespace drg
