#pragma once

// Shared test instances: small Gamma-modules and finite models of G with a
// central subgroup, used by the unit tests and the acceptance suite.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "drg/cohomology.hpp"
#include "drg/extension.hpp"
#include "drg/grouptable.hpp"

namespace fixtures {

using drg::FGAbelianGroup;
using drg::FiniteGroup;
using drg::GammaModule;
using drg::IntMatrix;

inline FiniteGroup klein() { return FiniteGroup::from_generators(4, {{1, 0, 2, 3}, {0, 1, 3, 2}}); }
// Generator 0 is a 3-cycle, generator 1 a transposition.
inline FiniteGroup s3() { return FiniteGroup::from_generators(3, {{1, 2, 0}, {1, 0, 2}}); }

inline FGAbelianGroup ab(std::vector<long> factors) {
  drg::Vector f;
  for (long x : factors) f.push_back(x);
  return FGAbelianGroup(0, f);
}

/// Extends the images of gamma's generators to every element.
inline GammaModule module(const FiniteGroup& gamma, const FGAbelianGroup& coeff, const std::vector<IntMatrix>& gens) {
  const std::size_t s = coeff.num_generators();
  std::vector<IntMatrix> act(gamma.order(), IntMatrix::identity(s));
  const auto tree = gamma.spanning_tree();
  std::vector<char> done(gamma.order(), 0);
  done[gamma.identity()] = 1;
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t x = 0; x < gamma.order(); ++x) {
      const auto [parent, slot] = tree[x];
      if (done[x] || !done[parent]) continue;
      IntMatrix m = act[parent] * gens.at(slot);
      for (std::size_t r = 0; r < s; ++r)
        for (std::size_t c = 0; c < s; ++c) m(r, c) = drg::mod_floor(m(r, c), coeff.modulus(r));
      act[x] = m;
      done[x] = progress = true;
    }
  }
  return GammaModule(gamma, coeff, act);
}

struct ModuleCase {
  std::string name;
  GammaModule module;
};

/// Gamma of order <= 6 and A of order <= 8, trivial and nontrivial actions.
inline std::vector<ModuleCase> small_modules() {
  using M = IntMatrix;
  const FiniteGroup c1 = FiniteGroup(), c2 = FiniteGroup::cyclic(2), c3 = FiniteGroup::cyclic(3),
                    c4 = FiniteGroup::cyclic(4), c5 = FiniteGroup::cyclic(5), c6 = FiniteGroup::cyclic(6),
                    v4 = klein(), sym3 = s3();
  auto triv = [](const FiniteGroup& g, std::vector<long> f) { return GammaModule::trivial_action(g, ab(f)); };
  std::vector<ModuleCase> out;
  auto add = [&](std::string name, GammaModule m) { out.push_back({std::move(name), std::move(m)}); };
  add("1 on Z/2", triv(c1, {2}));
  add("C2 on Z/2", triv(c2, {2}));
  add("C2 on Z/3", triv(c2, {3}));
  add("C2 on Z/3 by -1", module(c2, ab({3}), {M{{-1}}}));
  add("C2 on Z/4", triv(c2, {4}));
  add("C2 on Z/4 by -1", module(c2, ab({4}), {M{{-1}}}));
  add("C2 on (Z/2)^2 by swap", module(c2, ab({2, 2}), {M{{0, 1}, {1, 0}}}));
  add("C2 on Z/8 by 3", module(c2, ab({8}), {M{{3}}}));
  add("C2 on Z/8 by -1", module(c2, ab({8}), {M{{-1}}}));
  add("C2 on Z/2+Z/4 by shear", module(c2, ab({2, 4}), {M{{1, 0}, {2, 1}}}));
  add("C2 on (Z/2)^3", triv(c2, {2, 2, 2}));
  add("C3 on Z/2", triv(c3, {2}));
  add("C3 on Z/3", triv(c3, {3}));
  add("C3 on (Z/2)^2 by rotation", module(c3, ab({2, 2}), {M{{0, 1}, {1, 1}}}));
  add("C3 on Z/7 by 2", module(c3, ab({7}), {M{{2}}}));
  add("C4 on Z/2", triv(c4, {2}));
  add("C4 on Z/4 by -1", module(c4, ab({4}), {M{{-1}}}));
  add("C4 on Z/5 by 2", module(c4, ab({5}), {M{{2}}}));
  add("C4 on Z/8 by 5", module(c4, ab({8}), {M{{5}}}));
  add("C4 on Z/8", triv(c4, {8}));
  add("V4 on Z/2", triv(v4, {2}));
  add("V4 on (Z/2)^2", triv(v4, {2, 2}));
  add("V4 on Z/4 by (-1, 1)", module(v4, ab({4}), {M{{-1}}, M{{1}}}));
  add("V4 on Z/3 by (-1, -1)", module(v4, ab({3}), {M{{-1}}, M{{-1}}}));
  add("V4 on (Z/2)^3", triv(v4, {2, 2, 2}));
  add("C5 on Z/5", triv(c5, {5}));
  add("C6 on Z/2", triv(c6, {2}));
  add("C6 on Z/6 by -1", module(c6, ab({6}), {M{{-1}}}));
  add("C6 on Z/7 by 3", module(c6, ab({7}), {M{{3}}}));
  add("C6 on Z/4", triv(c6, {4}));
  add("S3 on Z/2", triv(sym3, {2}));
  add("S3 on Z/3 by sign", module(sym3, ab({3}), {M{{1}}, M{{-1}}}));
  add("S3 on (Z/2)^2 natural", module(sym3, ab({2, 2}), {M{{0, 1}, {1, 1}}, M{{0, 1}, {1, 0}}}));
  add("S3 on Z/4 by sign", module(sym3, ab({4}), {M{{1}}, M{{-1}}}));
  add("S3 on Z/6", triv(sym3, {6}));
  add("S3 on Z/8", triv(sym3, {8}));
  return out;
}

// ---------------------------------------------------------------------------
// Finite models of G: matrix groups over Z/p.

struct MatrixGroup {
  long p = 0;
  std::size_t dim = 0;
  std::vector<std::vector<long>> elements;  // row-major dim x dim
  std::map<std::vector<long>, std::size_t> index;
  FiniteGroup group;

  std::vector<long> mul(const std::vector<long>& a, const std::vector<long>& b) const {
    std::vector<long> c(dim * dim, 0);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        long s = 0;
        for (std::size_t k = 0; k < dim; ++k) s += a[i * dim + k] * b[k * dim + j];
        c[i * dim + j] = ((s % p) + p) % p;
      }
    return c;
  }
  std::vector<long> reduce(std::vector<long> a) const {
    for (auto& x : a) x = ((x % p) + p) % p;
    return a;
  }
  std::size_t find(const std::vector<long>& a) const { return index.at(reduce(a)); }

  /// x -> m x m^-1 on elements, for m normalizing the group.
  drg::Permutation conjugation(const std::vector<long>& m) const {
    const std::vector<long> mm = reduce(m);
    std::vector<long> inv = mm, id(dim * dim, 0);
    for (std::size_t i = 0; i < dim; ++i) id[i * dim + i] = 1;
    for (std::vector<long> pw = mm; pw != id; pw = mul(pw, mm)) inv = pw;
    drg::Permutation out(elements.size());
    for (std::size_t x = 0; x < elements.size(); ++x) out[x] = find(mul(mul(mm, elements[x]), inv));
    return out;
  }
};

inline MatrixGroup matrix_group(long p, std::size_t dim, const std::vector<std::vector<long>>& gens) {
  MatrixGroup g;
  g.p = p;
  g.dim = dim;
  std::vector<long> id(dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i) id[i * dim + i] = 1;
  g.elements.push_back(id);
  g.index[id] = 0;
  for (std::size_t h = 0; h < g.elements.size(); ++h)
    for (const auto& s : gens) {
      auto x = g.mul(g.elements[h], g.reduce(s));
      if (g.index.emplace(x, g.elements.size()).second) g.elements.push_back(x);
    }
  std::vector<std::vector<std::size_t>> table(g.elements.size(), std::vector<std::size_t>(g.elements.size()));
  for (std::size_t a = 0; a < g.elements.size(); ++a)
    for (std::size_t b = 0; b < g.elements.size(); ++b) table[a][b] = g.index.at(g.mul(g.elements[a], g.elements[b]));
  g.group = FiniteGroup::from_table(table);
  std::vector<std::size_t> gi;
  for (const auto& s : gens) gi.push_back(g.find(s));
  g.group.set_generators(gi);
  return g;
}

/// Element map of the automorphism x -> x^-1 of an abelian group.
inline drg::Permutation inversion(const FiniteGroup& g) {
  drg::Permutation p(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) p[x] = g.inv(x);
  return p;
}

struct PushoutCase {
  std::string name;
  FiniteGroup g;
  std::vector<std::size_t> z_embedding;
  drg::ExtensionTable etilde;
  std::vector<drg::Permutation> act;
};

/// One case per class of H^2(Gamma, Z) for the given model.  phi[gamma] is
/// the automorphism of G by which gamma acts; Z is given as the images of
/// the elements of the coefficient group of `m`.
inline void add_pushout_cases(std::vector<PushoutCase>& out, const std::string& name, const FiniteGroup& g,
                              const std::vector<std::size_t>& z_embedding, const GammaModule& m,
                              const std::vector<drg::Permutation>& phi) {
  drg::CohomologyGroup h(m, 2);
  std::size_t k = 0;
  for (const auto& cls : h.classes()) {
    drg::ExtensionTable et = drg::build_extension(m, cls.representative);
    std::vector<drg::Permutation> act(et.group.order());
    for (std::size_t e = 0; e < et.group.order(); ++e) act[e] = phi[et.projection[e]];
    out.push_back({name + " class " + std::to_string(k++), g, z_embedding, std::move(et), std::move(act)});
  }
}

inline std::vector<PushoutCase> pushout_cases() {
  std::vector<PushoutCase> out;
  const FiniteGroup c2 = FiniteGroup::cyclic(2), c3 = FiniteGroup::cyclic(3);
  auto identity_perm = [](std::size_t n) {
    drg::Permutation p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    return p;
  };
  // Z/4 generated by a rotation mod 5, center {+-I}.
  {
    MatrixGroup g = matrix_group(5, 2, {{0, -1, 1, 0}});
    std::vector<std::size_t> z{g.find({1, 0, 0, 1}), g.find({-1, 0, 0, -1})};
    add_pushout_cases(out, "Z/4 over C2 trivial", g.group, z, GammaModule::trivial_action(c2, ab({2})),
                      {identity_perm(4), identity_perm(4)});
    // Z = all of Z/4, C2 acting by inversion.
    std::vector<std::size_t> zall;
    for (long a = 0; a < 4; ++a) zall.push_back(g.group.power(g.find({0, -1, 1, 0}), a));
    add_pushout_cases(out, "Z/4 central over C2 by inversion", g.group, zall,
                      fixtures::module(c2, ab({4}), {IntMatrix{{-1}}}),
                      {identity_perm(4), inversion(g.group)});
  }
  // Q8 inside SL(2,3); C2 acts by conjugation with diag(1,-1), C3 by an element of order 3.
  {
    MatrixGroup g = matrix_group(3, 2, {{0, -1, 1, 0}, {1, 1, 1, -1}});
    std::vector<std::size_t> z{g.find({1, 0, 0, 1}), g.find({-1, 0, 0, -1})};
    add_pushout_cases(out, "Q8 over C2 outer", g.group, z, GammaModule::trivial_action(c2, ab({2})),
                      {identity_perm(8), g.conjugation({1, 0, 0, -1})});
    const auto u = g.conjugation({1, 1, 0, 1});
    drg::Permutation u2(8);
    for (std::size_t x = 0; x < 8; ++x) u2[x] = u[u[x]];
    add_pushout_cases(out, "Q8 over C3", g.group, z, GammaModule::trivial_action(c3, ab({2})),
                      {identity_perm(8), u, u2});
  }
  // D4 as signed permutation matrices mod 5; C2 acts by an inner involution.
  {
    MatrixGroup g = matrix_group(5, 2, {{0, -1, 1, 0}, {1, 0, 0, -1}});
    std::vector<std::size_t> z{g.find({1, 0, 0, 1}), g.find({-1, 0, 0, -1})};
    add_pushout_cases(out, "D4 over C2 inner", g.group, z, GammaModule::trivial_action(c2, ab({2})),
                      {identity_perm(8), g.conjugation({1, 0, 0, -1})});
  }
  // SL(2,3) with C2 acting through GL(2,3).
  {
    MatrixGroup g = matrix_group(3, 2, {{1, 1, 0, 1}, {0, -1, 1, 0}});
    std::vector<std::size_t> z{g.find({1, 0, 0, 1}), g.find({-1, 0, 0, -1})};
    add_pushout_cases(out, "SL(2,3) over C2 outer", g.group, z, GammaModule::trivial_action(c2, ab({2})),
                      {identity_perm(24), g.conjugation({1, 0, 0, -1})});
  }
  // S3 with trivial center and trivial action.
  {
    MatrixGroup g = matrix_group(5, 3, {{0, 0, 1, 1, 0, 0, 0, 1, 0}, {0, 1, 0, 1, 0, 0, 0, 0, 1}});
    std::vector<std::size_t> z{g.find({1, 0, 0, 0, 1, 0, 0, 0, 1})};
    add_pushout_cases(out, "S3 over C2 trivial", g.group, z, GammaModule::trivial_action(c2, FGAbelianGroup()),
                      {identity_perm(6), identity_perm(6)});
  }
  // Z/6 = <3> in (Z/7)^x, Z = {+-1}, C2 acting by inversion.
  {
    MatrixGroup g = matrix_group(7, 1, {{3}});
    std::vector<std::size_t> z{g.find({1}), g.find({-1})};
    add_pushout_cases(out, "Z/6 over C2 by inversion", g.group, z, GammaModule::trivial_action(c2, ab({2})),
                      {identity_perm(6), inversion(g.group)});
  }
  return out;
}

}  // namespace fixtures
