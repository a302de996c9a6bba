#pragma once

// Finite groups stored as explicit multiplication tables.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace drg {

/// p[i] is the image of point i.  Products compose right to left:
/// (p * q)(i) = p(q(i)).
using Permutation = std::vector<std::size_t>;

Permutation compose(const Permutation& p, const Permutation& q);
bool is_permutation(const Permutation& p, std::size_t degree);

/// An associativity failure (x*y)*z != x*(y*z).
struct AssociativityWitness {
  std::size_t x, y, z;
};

class FiniteGroup {
 public:
  static constexpr std::size_t kDefaultCap = 10000;

  /// Trivial group.
  FiniteGroup();

  /// Closure of the generators by breadth-first search from the identity;
  /// element k is reached as parent * generator, generators tried in input
  /// order.  Element 0 is the identity.  Throws BudgetExceeded past `cap`.
  static FiniteGroup from_generators(std::size_t degree, const std::vector<Permutation>& perms,
                                     std::size_t cap = kDefaultCap);

  /// Validates closure, identity, inverses and associativity.  Throws
  /// ValidationError naming the failure.
  static FiniteGroup from_table(std::vector<std::vector<std::size_t>> table);

  /// Validation without throwing: the first associativity failure, if any.
  static std::optional<AssociativityWitness> find_associativity_failure(
      const std::vector<std::vector<std::size_t>>& table);

  static FiniteGroup cyclic(std::size_t n);

  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  std::size_t power(std::size_t a, long k) const;
  std::size_t element_order(std::size_t a) const;
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

  /// Indices of the generators used to build the group (by from_generators)
  /// or given with the table; words in these reach every element.
  const std::vector<std::size_t>& generators() const { return generators_; }
  void set_generators(std::vector<std::size_t> gens);

  /// For each element other than the identity: a (parent, generator slot)
  /// with element = parent * generators()[slot], parents appearing earlier.
  /// Computed from the stored generators; throws if they do not generate.
  std::vector<std::pair<std::size_t, std::size_t>> spanning_tree() const;

  /// Permutation images for groups built from generators (empty otherwise).
  const std::vector<Permutation>& permutations() const { return perms_; }

  bool is_abelian() const;
  bool is_central(std::size_t a) const;
  bool is_subgroup(const std::vector<std::size_t>& elems) const;
  bool is_normal_subgroup(const std::vector<std::size_t>& elems) const;

  /// Quotient by a normal subgroup: the group and the projection.
  struct Quotient;
  Quotient quotient(const std::vector<std::size_t>& normal_subgroup) const;

  /// Counts of elements by order, indexed by order.
  std::vector<std::size_t> order_census() const;

 private:
  explicit FiniteGroup(std::vector<std::vector<std::size_t>> table);

  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> generators_;
  std::vector<Permutation> perms_;
};

struct FiniteGroup::Quotient {
  FiniteGroup group;
  std::vector<std::size_t> projection;  // element -> coset index
};

/// True iff f(xy) = f(x) f(y) for all pairs.
bool hom_check(const std::vector<std::size_t>& f, const FiniteGroup& src, const FiniteGroup& dst);

/// First pair (x, y) violating the homomorphism property.
std::optional<std::pair<std::size_t, std::size_t>> hom_violation(const std::vector<std::size_t>& f,
                                                                 const FiniteGroup& src, const FiniteGroup& dst);

/// Brute-force isomorphism search: images of a generating set are chosen by
/// backtracking over elements of matching order.  Returns the element map.
std::optional<std::vector<std::size_t>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b);

/// Direct product; element (x, y) has index x * |b| + y.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Semidirect product N x| H with h acting on N by action[h] (a permutation
/// of N's elements that is an automorphism).  Element (n, h) has index
/// n * |H| + h and (n1, h1)(n2, h2) = (n1 * action[h1](n2), h1 h2).
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const std::vector<Permutation>& action);

std::string describe(const FiniteGroup& g);

}  // namespace drg
