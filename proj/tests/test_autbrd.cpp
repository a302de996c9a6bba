#include <doctest.h>

#include "drg/autbrd.hpp"
#include "drg/errors.hpp"

using namespace drg;

namespace {

BasedRootDatum based_adjoint(char t, std::size_t r) { return BasedRootDatum::standard(RootDatum::adjoint(cartan_of_type(t, r))); }

BasedRootDatum gl2() {
  return BasedRootDatum::standard(
      RootDatum(2, {make_vector({1, -1}), make_vector({-1, 1})}, {make_vector({1, -1}), make_vector({-1, 1})}));
}

BasedRootDatum so8() {
  std::vector<Vector> s{make_vector({1, -1, 0, 0}), make_vector({0, 1, -1, 0}), make_vector({0, 0, 1, -1}),
                        make_vector({0, 0, 1, 1})};
  RootDatum d = RootDatum::from_simple(4, s, s);
  std::vector<std::size_t> idx;
  for (const auto& v : s) idx.push_back(*d.root_index(v));
  return BasedRootDatum(d, idx);
}

}  // namespace

TEST_CASE("based-root-datum automorphisms") {
  BasedRootDatum a2 = based_adjoint('A', 2);
  CHECK(is_brd_automorphism(a2, IntMatrix::identity(2)));
  BRDCheck flip = is_brd_automorphism(a2, IntMatrix{{0, 1}, {1, 0}});
  CHECK(flip);
  CHECK(flip.permutation == std::vector<std::size_t>{1, 0});
  BRDCheck neg = is_brd_automorphism(a2, -IntMatrix::identity(2));
  CHECK_FALSE(neg);
  CHECK_FALSE(neg.violation.empty());
  CHECK_THROWS_AS(is_brd_automorphism(a2, IntMatrix::identity(3)), std::invalid_argument);
  CHECK_THROWS_AS(make_brd_automorphism(a2, -IntMatrix::identity(2)), ValidationError);
  BRDAutomorphism f = make_brd_automorphism(a2, IntMatrix{{0, 1}, {1, 0}});
  BRDAutomorphism ff = compose(f, f);
  CHECK(ff.matrix == IntMatrix::identity(2));
  CHECK(is_brd_automorphism(a2, ff.matrix));
}

TEST_CASE("diagram automorphism counts") {
  CHECK(diagram_automorphisms(based_adjoint('A', 2)).automorphisms.size() == 2);
  CHECK(diagram_automorphisms(BasedRootDatum::standard(RootDatum::adjoint(
                                  cartan_product(cartan_of_type('A', 1), cartan_of_type('A', 1)))))
            .automorphisms.size() == 2);
  DiagramAutomorphisms d4 = diagram_automorphisms(based_adjoint('D', 4));
  CHECK(d4.automorphisms.size() == 6);
  CHECK(d4.non_lifting.empty());
  CHECK(d4.automorphisms[0].matrix == IntMatrix::identity(4));
  CHECK(diagram_automorphisms(BasedRootDatum::standard(RootDatum::simply_connected(cartan_of_type('D', 4))))
            .automorphisms.size() == 6);
  CHECK(diagram_automorphisms(based_adjoint('B', 3)).automorphisms.size() == 1);
  CHECK(diagram_automorphisms(based_adjoint('E', 6)).automorphisms.size() == 2);
  // Closure under composition.
  for (const auto& a : d4.automorphisms)
    for (const auto& b : d4.automorphisms) CHECK(is_brd_automorphism(based_adjoint('D', 4), compose(a, b).matrix));
  CHECK_THROWS_AS(diagram_automorphisms(gl2()), ValidationError);
}

TEST_CASE("symmetries that do not lift are reported") {
  DiagramAutomorphisms so = diagram_automorphisms(so8());
  CHECK(so.diagram_symmetries.size() == 6);
  CHECK(so.automorphisms.size() == 2);
  CHECK(so.non_lifting.size() == 4);
}

TEST_CASE("induced action on the center") {
  // PGL2: trivial center.
  BasedRootDatum pgl2 = BasedRootDatum::standard(RootDatum::adjoint(cartan_of_type('A', 1)));
  Center zp = center(pgl2.datum());
  CHECK(induced_center_action(pgl2, zp, IntMatrix::identity(1)).at_level(torsion_at(zp.group, 2)).target().is_trivial());
  // SL2, identity.
  BasedRootDatum sl2 = BasedRootDatum::standard(RootDatum::simply_connected(cartan_of_type('A', 1)));
  Center zs = center(sl2.datum());
  TorsionLevel l2 = torsion_at(zs.group, 2);
  CHECK(induced_center_action(sl2, zs, IntMatrix::identity(1)).at_level(l2) == AbHom::identity(l2.group()));
  // GL2 with T = -(swap): inversion on every n-torsion of the central C^x.
  BasedRootDatum g = gl2();
  Center zg = center(g.datum());
  CenterAction act = induced_center_action(g, zg, IntMatrix{{0, -1}, {-1, 0}});
  for (long n : {2, 3, 4, 5}) {
    TorsionLevel l = torsion_at(zg.group, n);
    AbHom h = act.at_level(l);
    // Oracle: Z[n] is {(a, a) : a in Z/n} inside the cocharacters mod n, and
    // z o T^-1 corresponds to (T^-1)^t on cocharacters, here (a, a) -> (-a, -a).
    for (long a = 0; a < n; ++a) {
      Vector x = l.group().reduce(make_vector({a}));
      CHECK(h.apply(x) == l.group().reduce(make_vector({-a})));
    }
  }
}

TEST_CASE("the center action is functorial and compatible with the tower") {
  BasedRootDatum d4 = BasedRootDatum::standard(RootDatum::simply_connected(cartan_of_type('D', 4)));
  Center z = center(d4.datum());
  DiagramAutomorphisms auts = diagram_automorphisms(d4);
  TorsionLevel l2 = torsion_at(z.group, 2), l4 = torsion_at(z.group, 4);
  AbHom inc = torsion_inclusion(l2, l4);
  for (const auto& a : auts.automorphisms) {
    CenterAction ca = induced_center_action(d4, z, a.matrix);
    CHECK(inc.compose(ca.at_level(l2)) == ca.at_level(l4).compose(inc));
    for (const auto& b : auts.automorphisms) {
      CenterAction cb = induced_center_action(d4, z, b.matrix);
      CenterAction cab = induced_center_action(d4, z, compose(a, b).matrix);
      CHECK(cab.at_level(l2) == ca.at_level(l2).compose(cb.at_level(l2)));
    }
  }
  // The six automorphisms act faithfully on Z = (Z/2)^2 as GL2(F2).
  std::vector<AbHom> images;
  for (const auto& a : auts.automorphisms) {
    AbHom h = induced_center_action(d4, z, a.matrix).at_level(l2);
    for (const auto& other : images) CHECK_FALSE(other == h);
    images.push_back(h);
  }
}

TEST_CASE("Ad homomorphisms") {
  BasedRootDatum a2 = based_adjoint('A', 2);
  FiniteGroup c2 = FiniteGroup::cyclic(2), c3 = FiniteGroup::cyclic(3);
  CHECK(validate_ad(a2, extend_from_generators(c2, {IntMatrix::identity(2)}, 2)));
  AdHom flip = extend_from_generators(c2, {IntMatrix{{0, 1}, {1, 0}}}, 2);
  CHECK(validate_ad(a2, flip));
  CHECK(flip.images[c2.identity()] == IntMatrix::identity(2));
  AdCheck bad = validate_ad(a2, extend_from_generators(c3, {IntMatrix{{0, 1}, {1, 0}}}, 2));
  CHECK_FALSE(bad);
  CHECK_FALSE(bad.violation.empty());
  CHECK_THROWS_AS(extend_from_generators(c2, {}, 2), ValidationError);
}
