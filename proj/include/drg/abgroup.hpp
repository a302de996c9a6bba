#pragma once

// Finitely generated abelian groups in invariant-factor form, homomorphisms
// between them, and diagonalizable groups (C^x)^m x finite described through
// their character groups.

#include <cstddef>
#include <string>
#include <vector>

#include "drg/exactlin.hpp"

namespace drg {

/// Z^free_rank + Z/f_1 + ... + Z/f_k with f_i > 1 and f_i | f_{i+1}.
/// Elements are coordinate vectors: free coordinates first, then one
/// coordinate per invariant factor, reduced into [0, f_i).
class FGAbelianGroup {
 public:
  FGAbelianGroup() = default;
  FGAbelianGroup(std::size_t free_rank, Vector invariant_factors);

  static FGAbelianGroup trivial() { return {}; }
  static FGAbelianGroup cyclic(long n);

  std::size_t free_rank() const { return free_rank_; }
  const Vector& invariant_factors() const { return factors_; }
  std::size_t num_generators() const { return free_rank_ + factors_.size(); }

  bool is_finite() const { return free_rank_ == 0; }
  bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }
  /// Order of a finite group.
  Integer order() const;
  /// Exponent of a finite group (1 for the trivial group).
  Integer exponent() const;

  /// Modulus of coordinate i: 0 for free coordinates.
  Integer modulus(std::size_t i) const;
  Vector moduli() const;

  Vector reduce(const Vector& x) const;
  Vector add(const Vector& x, const Vector& y) const;
  Vector negate(const Vector& x) const;
  Vector scale(const Vector& x, const Integer& k) const;
  Vector zero() const { return Vector(num_generators()); }
  bool is_zero(const Vector& x) const;
  /// Order of an element; 0 when it has infinite order.
  Integer element_order(const Vector& x) const;

  /// Every element of a finite group, in mixed-radix order.
  std::vector<Vector> elements() const;
  /// Mixed-radix index of a reduced element of a finite group.
  std::size_t element_index(const Vector& x) const;
  Vector element_at(std::size_t index) const;

  std::string to_string() const;

  friend bool operator==(const FGAbelianGroup& a, const FGAbelianGroup& b) {
    return a.free_rank_ == b.free_rank_ && a.factors_ == b.factors_;
  }

 private:
  void check_length(const Vector& x) const;

  std::size_t free_rank_ = 0;
  Vector factors_;
};

/// A homomorphism given by its matrix on canonical generators
/// (image of generator j is column j).
class AbHom {
 public:
  /// Throws ValidationError unless every relation of the source maps into
  /// the relations of the target.
  AbHom(FGAbelianGroup source, FGAbelianGroup target, IntMatrix matrix);

  static AbHom identity(const FGAbelianGroup& g);

  const FGAbelianGroup& source() const { return source_; }
  const FGAbelianGroup& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  Vector apply(const Vector& x) const;
  /// this after other.
  AbHom compose(const AbHom& other) const;
  bool is_injective() const;
  bool is_bijective() const;

  friend bool operator==(const AbHom& a, const AbHom& b);

 private:
  FGAbelianGroup source_;
  FGAbelianGroup target_;
  IntMatrix matrix_;
};

/// f(x) reduced in the target; throws std::invalid_argument on length mismatch.
Vector hom_apply(const AbHom& f, const Vector& x);

/// A canonical group together with the isomorphism to and from some other
/// coordinate system (moduli or a presentation).
struct PresentedGroup {
  FGAbelianGroup group;
  IntMatrix to_group;    // original coordinates -> canonical coordinates
  IntMatrix from_group;  // canonical generator j -> original coordinates (column j)
};

/// Z/m_1 + ... + Z/m_k (m_i = 0 meaning Z) renormalized to invariant factors.
PresentedGroup present_moduli(const Vector& moduli);

FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b);

/// The n-torsion of a diagonalizable group, in two coordinate systems:
/// natural coordinates t_i (one per generator of the character group, with
/// moduli n for free generators and gcd(f_i, n) for torsion generators) and
/// the canonical invariant-factor form.
struct TorsionLevel {
  Integer n;
  Vector natural_moduli;
  PresentedGroup presented;

  const FGAbelianGroup& group() const { return presented.group; }
};

/// (C^x)^m x F, stored through its character group X = Z^m + F^.  The
/// finite part is Hom(F^, Q/Z), isomorphic to F^ itself.
class DiagonalizableGroup {
 public:
  DiagonalizableGroup() = default;
  explicit DiagonalizableGroup(FGAbelianGroup character_group);
  DiagonalizableGroup(std::size_t torus_rank, Vector finite_factors);

  std::size_t torus_rank() const { return characters_.free_rank(); }
  FGAbelianGroup finite_part() const { return FGAbelianGroup(0, characters_.invariant_factors()); }
  const FGAbelianGroup& character_group() const { return characters_; }

  std::string to_string() const;

  friend bool operator==(const DiagonalizableGroup& a, const DiagonalizableGroup& b) {
    return a.characters_ == b.characters_;
  }

 private:
  FGAbelianGroup characters_;
};

TorsionLevel torsion_at(const DiagonalizableGroup& z, const Integer& n);

/// The inclusion of the n-torsion into the (n*k)-torsion.
AbHom torsion_inclusion(const TorsionLevel& from, const TorsionLevel& to);

/// Action on the n-torsion induced by an automorphism of the character group.
/// `character_map_inverse` is the matrix of the inverse automorphism on the
/// character group's canonical generators; a point z : X -> mu_n is sent to
/// z o (character map)^-1.
AbHom torsion_action(const TorsionLevel& level, const IntMatrix& character_map_inverse);

}  // namespace drg
