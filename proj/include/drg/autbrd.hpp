#pragma once

// Automorphisms of a based root datum: lattice automorphisms T of the
// characters with T(simple roots) = simple roots and ^tT(simple coroots) =
// simple coroots.  These are the distinguished (pinning-preserving)
// automorphisms of G and stand for Out(G).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "drg/abgroup.hpp"
#include "drg/grouptable.hpp"
#include "drg/rootdatum.hpp"

namespace drg {

struct BRDAutomorphism {
  IntMatrix matrix;
  /// simple_root_permutation[i] = j when T a_i = a_j (positions in the base).
  std::vector<std::size_t> simple_root_permutation;
};

struct BRDCheck {
  bool ok = false;
  std::string violation;             // empty when ok
  std::vector<std::size_t> permutation;  // induced permutation when ok
  explicit operator bool() const { return ok; }
};

/// Throws std::invalid_argument when T is not rank x rank.
BRDCheck is_brd_automorphism(const BasedRootDatum& based, const IntMatrix& t);

/// Checked constructor; throws ValidationError with the failed condition.
BRDAutomorphism make_brd_automorphism(const BasedRootDatum& based, const IntMatrix& t);

BRDAutomorphism compose(const BRDAutomorphism& a, const BRDAutomorphism& b);

struct DiagramAutomorphisms {
  /// Lattice lifts, identity first.
  std::vector<BRDAutomorphism> automorphisms;
  /// Every Cartan-matrix symmetry of the diagram, identity first.
  std::vector<std::vector<std::size_t>> diagram_symmetries;
  /// Diagram symmetries that have no lift to the character lattice.
  std::vector<std::vector<std::size_t>> non_lifting;
};

/// All based-root-datum automorphisms of a semisimple datum.  Throws
/// ValidationError for data with a central torus.
DiagramAutomorphisms diagram_automorphisms(const BasedRootDatum& based);

/// The action of a based-root-datum automorphism on Z(G): z -> z o T^-1 on
/// the character group X*(H)/ZR.
class CenterAction {
 public:
  CenterAction(const Center& center, const BRDAutomorphism& t);

  /// Matrix of T^-1 on X*(H)/ZR (canonical generators).
  const IntMatrix& character_map_inverse() const { return inverse_; }
  /// Matrix of T on X*(H)/ZR.
  const IntMatrix& character_map() const { return forward_; }

  /// Induced automorphism of Z(G)[n].
  AbHom at_level(const TorsionLevel& level) const;

 private:
  IntMatrix forward_;
  IntMatrix inverse_;
};

/// Throws ValidationError when T is not a based-root-datum automorphism.
CenterAction induced_center_action(const BasedRootDatum& based, const Center& center, const IntMatrix& t);

/// Homomorphism Gamma -> Aut(B(G)), one matrix per element of Gamma.
struct AdHom {
  FiniteGroup gamma;
  std::vector<IntMatrix> images;
};

/// Extends images of Gamma's stored generators along the spanning tree.
/// The result is a homomorphism only if validate_ad passes.
AdHom extend_from_generators(const FiniteGroup& gamma, const std::vector<IntMatrix>& generator_images,
                             std::size_t rank);

struct AdCheck {
  bool ok = false;
  std::string violation;
  explicit operator bool() const { return ok; }
};

AdCheck validate_ad(const BasedRootDatum& based, const AdHom& ad);

}  // namespace drg
