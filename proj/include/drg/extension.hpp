#pragma once

// Extensions 1 -> A -> E -> Gamma -> 1 built from 2-cocycles, cocycles read
// back from sections, and the pushout E = [G x| E~] / antidiagonal on finite
// models of G.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "drg/autbrd.hpp"
#include "drg/cohomology.hpp"
#include "drg/errors.hpp"
#include "drg/grouptable.hpp"
#include "drg/rootdatum.hpp"

namespace drg {

/// Raised by build_extension when the cochain is not a cocycle.
class AssociativityViolation : public ValidationError {
 public:
  AssociativityViolation(const std::string& what, AssociativityWitness w) : ValidationError(what), witness(w) {}
  AssociativityWitness witness;
};

/// E as pairs (a, g); element index = element_index(a) * |Gamma| + g.
struct ExtensionTable {
  GammaModule module;
  Cochain cocycle;
  FiniteGroup group;
  std::vector<std::size_t> embedding;   // A element index -> E element
  std::vector<std::size_t> projection;  // E element -> Gamma element

  std::size_t element(const Vector& a, std::size_t g) const;
  /// The canonical section g -> (0, g).
  std::vector<std::size_t> canonical_section() const;
};

/// (a1, g1)(a2, g2) = (a1 + g1.a2 + c(g1, g2), g1 g2).  Throws
/// AssociativityViolation (with a witness triple) when c is not a cocycle and
/// ValidationError when c is not normalized.
ExtensionTable build_extension(const GammaModule& m, const Cochain& c);

/// c(g1, g2) = s(g1) s(g2) s(g1 g2)^-1 read back through the embedding.
/// `embedding` maps element indices of m.coeff() into e.
Cochain extract_cocycle(const GammaModule& m, const FiniteGroup& e, const std::vector<std::size_t>& embedding,
                        const std::vector<std::size_t>& projection, const std::vector<std::size_t>& section);
Cochain extract_cocycle(const ExtensionTable& e, const std::vector<std::size_t>& section);

struct Equivalence {
  bool equivalent = false;
  /// b with c1 - c2 = db when equivalent.
  std::optional<Cochain> witness;
};

/// Throws ValidationError when the two tables are over different modules.
Equivalence extensions_equivalent(const ExtensionTable& e1, const ExtensionTable& e2);

bool same_module(const GammaModule& a, const GammaModule& b);

struct PushoutResult {
  FiniteGroup semidirect;                 // G x| E~, element (g, e) = g * |E~| + e
  std::vector<std::size_t> antidiagonal;  // {(z, z^-1)} as semidirect elements
  FiniteGroup group;                      // the quotient E
  std::vector<std::size_t> quotient_map;  // semidirect -> E
  std::vector<std::size_t> g_embedding;   // G_model -> E
  std::vector<std::size_t> gamma_projection;  // E -> Gamma
  /// Kernel of the multiplication map onto the model G x_Z E~ built directly
  /// from the cocycle; equals the antidiagonal.
  std::vector<std::size_t> multiplication_kernel;
};

/// `z_embedding` maps element indices of the coefficient group of `etilde`
/// into `g_model`; `act[e]` is the automorphism of g_model by which the
/// element e of E~ acts.  Throws ValidationError with a witness when Z is not
/// central, act is not an action, or the antidiagonal is not normal.
PushoutResult pushout(const FiniteGroup& g_model, const std::vector<std::size_t>& z_embedding,
                      const ExtensionTable& etilde, const std::vector<Permutation>& act);

struct CenterQuotientReport {
  FiniteGroup quotient;                           // E / Z
  FiniteGroup expected;                           // (G_model / Z) x| Gamma
  std::optional<std::vector<std::size_t>> isomorphism;
};

CenterQuotientReport quotient_mod_center(const PushoutResult& e, const FiniteGroup& g_model,
                                         const std::vector<std::size_t>& z_embedding, const ExtensionTable& etilde,
                                         const std::vector<Permutation>& act);

// ---------------------------------------------------------------------------
// Classification

struct DisconnectedGroupDescriptor {
  RootDatum root_datum;
  FiniteGroup gamma;
  AdHom ad;
  CohomologyClass h2_class;
  bool split = false;
};

struct Classification {
  Center center;
  /// Ad(g)^-1 on X*(H)/ZR for each element g of Gamma.
  std::vector<IntMatrix> character_map_inverses;
  StabilizedH2 tower;
  EckmannReport eckmann;
  std::vector<DisconnectedGroupDescriptor> descriptors;
};

/// Throws ValidationError for invalid Ad, BudgetExceeded when the tower does
/// not stabilize within options.max_k.
Classification classify(const BasedRootDatum& based, const AdHom& ad, const TowerOptions& options = {});

}  // namespace drg
