#include <doctest.h>

#include <random>

#include "drg/exactlin.hpp"
#include "oracles.hpp"

using namespace drg;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

oracle::Mat to_mat(const IntMatrix& a) {
  oracle::Mat m(a.rows(), std::vector<long>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j).get_si();
  return m;
}

void check_smith(const IntMatrix& a) {
  SmithDecomposition s = smith_normal_form(a);
  CHECK(s.U * a * s.V == s.D);
  CHECK(is_unimodular(s.U));
  CHECK(is_unimodular(s.V));
  CHECK(s.U * s.U_inv == IntMatrix::identity(a.rows()));
  CHECK(s.V * s.V_inv == IntMatrix::identity(a.cols()));
  Vector d = s.diagonal();
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j) CHECK(s.D(i, j) == 0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(d[i] >= 0);
    if (i + 1 < d.size() && d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
  }
  std::vector<long> expect = oracle::smith_diagonal(to_mat(a));
  REQUIRE(expect.size() == d.size());
  for (std::size_t i = 0; i < d.size(); ++i) CHECK(d[i] == expect[i]);
}

}  // namespace

TEST_CASE("smith normal form of the small examples") {
  SmithDecomposition one = smith_normal_form(IntMatrix{{1}});
  CHECK(one.D == IntMatrix{{1}});
  CHECK(one.U == IntMatrix{{1}});
  CHECK(one.V == IntMatrix{{1}});
  CHECK(smith_normal_form(IntMatrix{{2}}).D == IntMatrix{{2}});
  SmithDecomposition s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
  CHECK(s.D == IntMatrix{{1, 0}, {0, 6}});
  check_smith(IntMatrix{{2, 0}, {0, 3}});
  check_smith(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  check_smith(IntMatrix(2, 3));
}

TEST_CASE("smith normal form against determinantal divisors on random matrices") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    check_smith(random_matrix(rng, r, c, 6));
  }
}

TEST_CASE("smith diagonal is invariant under row and column permutations") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    IntMatrix a = random_matrix(rng, 3, 4, 9);
    IntMatrix b = a;
    b.swap_rows(0, 2);
    b.swap_cols(1, 3);
    b.negate_row(1);
    CHECK(smith_normal_form(a).diagonal() == smith_normal_form(b).diagonal());
  }
}

TEST_CASE("entries beyond machine words") {
  IntMatrix a{{1, 0}, {0, 1}};
  a(0, 0) = Integer("123456789012345678901234567890");
  a(1, 1) = Integer("987654321098765432109876543210");
  SmithDecomposition s = smith_normal_form(a);
  CHECK(s.U * a * s.V == s.D);
  CHECK(s.D(0, 0) == gcd(a(0, 0), a(1, 1)));
  CHECK(s.D(0, 0) * s.D(1, 1) == a(0, 0) * a(1, 1));
}

TEST_CASE("cokernel presentations") {
  CokernelPresentation c = cokernel_presentation(IntMatrix{{2}});
  CHECK(c.free_rank == 0);
  CHECK(c.invariant_factors == make_vector({2}));
  CokernelPresentation free = cokernel_presentation(IntMatrix(0, 1), 1);
  CHECK(free.free_rank == 1);
  CHECK(free.invariant_factors.empty());
  CokernelPresentation gl2 = cokernel_presentation(IntMatrix{{1, -1}});
  CHECK(gl2.free_rank == 1);
  CHECK(gl2.invariant_factors.empty());
  CokernelPresentation mixed = cokernel_presentation(IntMatrix{{2, 0, 0}, {0, 4, 0}});
  CHECK(mixed.free_rank == 1);
  CHECK(mixed.invariant_factors == make_vector({2, 4}));
  // Relations map to zero; generators lift back.
  IntMatrix rel{{2, 4, 4}, {-6, 6, 12}};
  CokernelPresentation p = cokernel_presentation(rel);
  for (std::size_t i = 0; i < rel.rows(); ++i) {
    Vector r = p.reduce(rel.row(i));
    for (const auto& x : r) CHECK(x == 0);
  }
  for (std::size_t j = 0; j < p.num_generators(); ++j) {
    Vector e(p.num_generators());
    e[j] = 1;
    Vector back = p.reduce(p.from_presented.col(j));
    CHECK(back == e);
  }
}

TEST_CASE("integer solving and kernels") {
  IntMatrix a{{2, 4}, {1, 3}};
  auto x = solve_integer(a, make_vector({2, 2}));
  REQUIRE(x);
  CHECK(a * *x == make_vector({2, 2}));
  CHECK_FALSE(solve_integer(IntMatrix{{2}}, make_vector({1})));
  CHECK_THROWS_AS(solve_integer(a, make_vector({1})), std::invalid_argument);
  IntMatrix k = integer_kernel(IntMatrix{{1, 1, 1}});
  CHECK(k.cols() == 2);
  CHECK((IntMatrix{{1, 1, 1}} * k).is_zero());
  CHECK(determinant(IntMatrix{{2, 1}, {1, 1}}) == 1);
  CHECK(integer_inverse(IntMatrix{{2, 1}, {1, 1}}) == IntMatrix{{1, -1}, {-1, 2}});
  CHECK_FALSE(integer_inverse(IntMatrix{{2, 0}, {0, 1}}));
}

TEST_CASE("modular lattices match lattice point counting") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 25; ++t) {
    std::vector<Vector> gens;
    std::vector<std::vector<long>> plain;
    for (int g = 0; g < 2; ++g) {
      Vector v{Integer(static_cast<long>(rng() % 12)), Integer(static_cast<long>(rng() % 12))};
      gens.push_back(v);
      plain.push_back({v[0].get_si(), v[1].get_si()});
    }
    plain.push_back({12, 0});
    plain.push_back({0, 12});
    ModularLattice l(2, 12, gens);
    CHECK(l.index() == oracle::lattice_index(2, plain, 12));
    for (const auto& v : gens) {
      CHECK(l.contains(v));
      CHECK(l.basis() * l.coordinates(v) == v);
    }
    Vector x{Integer(static_cast<long>(rng() % 50)), Integer(-static_cast<long>(rng() % 50))};
    Vector r = l.reduce(x);
    Vector diff{x[0] - r[0], x[1] - r[1]};
    CHECK(l.contains(diff));
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(r[i] >= 0);
      CHECK(r[i] < l.basis()(i, i));
    }
  }
}

TEST_CASE("kernel modulo row moduli") {
  // x with 2x = 0 mod 4, inside Z/4: the subgroup {0, 2}.
  ModularLattice k = kernel_modulo(IntMatrix{{2}}, make_vector({4}), 4);
  CHECK(k.index() == 2);
  CHECK(k.contains(make_vector({2})));
  CHECK_FALSE(k.contains(make_vector({1})));
  SparseRowMatrix sparse{{{0, Integer(2)}}};
  CHECK(kernel_modulo(sparse, 1, make_vector({4}), 4).basis() == k.basis());
}
