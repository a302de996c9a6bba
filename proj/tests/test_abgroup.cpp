#include <doctest.h>

#include "drg/abgroup.hpp"
#include "drg/errors.hpp"
#include "oracles.hpp"

using namespace drg;

TEST_CASE("finitely generated abelian groups") {
  FGAbelianGroup g(0, make_vector({2, 4}));
  CHECK(g.order() == 8);
  CHECK(g.exponent() == 4);
  CHECK(g.reduce(make_vector({3, -1})) == make_vector({1, 3}));
  CHECK(g.element_order(make_vector({1, 2})) == 2);
  CHECK(g.elements().size() == 8);
  for (std::size_t i = 0; i < 8; ++i) CHECK(g.element_index(g.element_at(i)) == i);
  FGAbelianGroup z(1, {});
  CHECK_FALSE(z.is_finite());
  CHECK(z.element_order(make_vector({3})) == 0);
  CHECK(FGAbelianGroup::trivial().is_trivial());
  CHECK(FGAbelianGroup::cyclic(6).order() == 6);
}

TEST_CASE("moduli are renormalized to invariant factors") {
  PresentedGroup p = present_moduli(make_vector({2, 3}));
  CHECK(p.group.invariant_factors() == make_vector({6}));
  PresentedGroup q = present_moduli(make_vector({4, 6, 0}));
  CHECK(q.group.free_rank() == 1);
  CHECK(q.group.invariant_factors() == make_vector({2, 12}));
  // to_group then from_group is the identity on the original coordinates mod the moduli.
  IntMatrix round = p.from_group * p.to_group;
  CHECK(mod_floor(round(0, 0) - 1, 2) == 0);
  CHECK(mod_floor(round(1, 1) - 1, 3) == 0);
}

TEST_CASE("homomorphisms") {
  FGAbelianGroup z4 = FGAbelianGroup::cyclic(4), z2 = FGAbelianGroup::cyclic(2);
  AbHom red(z4, z2, IntMatrix{{1}});
  CHECK(red.apply(make_vector({3})) == make_vector({1}));
  CHECK_FALSE(red.is_injective());
  AbHom inc(z2, z4, IntMatrix{{2}});
  CHECK(inc.is_injective());
  CHECK_FALSE(inc.is_bijective());
  CHECK(red.compose(inc).matrix()(0, 0) % 2 == 0);
  CHECK_THROWS_AS(AbHom(z2, z4, IntMatrix{{1}}), ValidationError);
  AbHom neg(z4, z4, IntMatrix{{-1}});
  CHECK(neg.is_bijective());
  CHECK(neg.compose(neg) == AbHom::identity(z4));
}

TEST_CASE("torsion of diagonalizable groups") {
  DiagonalizableGroup z(1, make_vector({2}));  // C^x x mu_2
  TorsionLevel t2 = torsion_at(z, 2), t4 = torsion_at(z, 4);
  CHECK(t2.group().order() == 4);
  CHECK(t4.group().order() == 8);
  CHECK(t4.group().invariant_factors() == make_vector({2, 4}));
  AbHom inc = torsion_inclusion(t2, t4);
  CHECK(inc.is_injective());
  // Inversion on the torus part commutes with the inclusion.
  IntMatrix inv{{-1, 0}, {0, 1}};
  AbHom a2 = torsion_action(t2, inv), a4 = torsion_action(t4, inv);
  CHECK(inc.compose(a2) == a4.compose(inc));
  // The n-torsion of a torus of rank m has order n^m.
  DiagonalizableGroup t(2, {});
  CHECK(torsion_at(t, 3).group().order() == 9);
}
