#include "drg/autbrd.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "drg/errors.hpp"

namespace drg {

BRDCheck is_brd_automorphism(const BasedRootDatum& based, const IntMatrix& t) {
  const std::size_t r = based.datum().rank();
  if (t.rows() != r || t.cols() != r)
    throw std::invalid_argument("is_brd_automorphism: matrix must be " + std::to_string(r) + "x" + std::to_string(r));
  BRDCheck out;
  Integer det = determinant(t);
  if (det != 1 && det != -1) {
    out.violation = "T is not an automorphism of X*(H): det T = " + det.get_str();
    return out;
  }
  const std::size_t l = based.num_simple();
  std::vector<std::size_t> sigma(l, l);
  std::vector<bool> hit(l, false);
  auto simple_position = [&](const Vector& v, bool coroot) -> std::size_t {
    for (std::size_t j = 0; j < l; ++j)
      if ((coroot ? based.simple_coroot(j) : based.simple_root(j)) == v) return j;
    return l;
  };
  for (std::size_t i = 0; i < l; ++i) {
    Vector image = t * based.simple_root(i);
    std::size_t j = simple_position(image, false);
    if (j == l || hit[j]) {
      out.violation = "T(Pi) != Pi: T sends simple root " + to_string(based.simple_root(i)) + " to " +
                      to_string(image) + ", which is not a simple root";
      return out;
    }
    sigma[i] = j;
    hit[j] = true;
  }
  IntMatrix tt = t.transpose();
  for (std::size_t i = 0; i < l; ++i) {
    Vector image = tt * based.simple_coroot(sigma[i]);
    if (image != based.simple_coroot(i)) {
      std::size_t j = simple_position(image, true);
      std::ostringstream msg;
      if (j == l)
        msg << "tT(Pi^v) != Pi^v: tT sends simple coroot " << to_string(based.simple_coroot(sigma[i])) << " to "
            << to_string(image) << ", which is not a simple coroot";
      else
        msg << "tT(Pi^v) != Pi^v compatibly: tT sends the coroot of T(a_" << i << ") to " << to_string(image)
            << " instead of " << to_string(based.simple_coroot(i));
      out.violation = msg.str();
      return out;
    }
  }
  IntMatrix cartan = based.cartan_matrix();
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j)
      ensure(cartan(sigma[i], sigma[j]) == cartan(i, j),
             "based-root-datum automorphism does not preserve the Cartan matrix");
  out.ok = true;
  out.permutation = std::move(sigma);
  return out;
}

BRDAutomorphism make_brd_automorphism(const BasedRootDatum& based, const IntMatrix& t) {
  BRDCheck c = is_brd_automorphism(based, t);
  if (!c) throw ValidationError(c.violation);
  return {t, c.permutation};
}

BRDAutomorphism compose(const BRDAutomorphism& a, const BRDAutomorphism& b) {
  BRDAutomorphism c;
  c.matrix = a.matrix * b.matrix;
  c.simple_root_permutation.resize(b.simple_root_permutation.size());
  for (std::size_t i = 0; i < c.simple_root_permutation.size(); ++i)
    c.simple_root_permutation[i] = a.simple_root_permutation[b.simple_root_permutation[i]];
  return c;
}

DiagramAutomorphisms diagram_automorphisms(const BasedRootDatum& based) {
  if (!based.is_semisimple())
    throw ValidationError(
        "diagram automorphisms: the datum has a central torus, so Aut(B(G)) is infinite; supply Ad explicitly");
  const std::size_t l = based.num_simple();
  const std::size_t r = based.datum().rank();
  const IntMatrix cartan = based.cartan_matrix();

  DiagramAutomorphisms out;
  std::vector<std::size_t> sigma(l);
  std::vector<bool> used(l, false);
  std::function<void(std::size_t)> search = [&](std::size_t i) {
    if (i == l) {
      out.diagram_symmetries.push_back(sigma);
      return;
    }
    for (std::size_t j = 0; j < l; ++j) {
      if (used[j]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k)
        ok = cartan(j, sigma[k]) == cartan(i, k) && cartan(sigma[k], j) == cartan(k, i);
      if (!ok || cartan(j, j) != cartan(i, i)) continue;
      used[j] = true;
      sigma[i] = j;
      search(i + 1);
      used[j] = false;
    }
  };
  search(0);

  std::vector<Vector> cols;
  for (std::size_t i = 0; i < l; ++i) cols.push_back(based.simple_root(i));
  const IntMatrix s = IntMatrix::from_columns(cols, r);
  auto s_inv = rational_inverse(s);
  ensure(s_inv.has_value(), "semisimple datum with singular simple-root matrix");

  for (const auto& perm : out.diagram_symmetries) {
    // T = S_sigma * S^-1 over Q.
    IntMatrix t(r, r);
    bool integral = true;
    for (std::size_t a = 0; a < r && integral; ++a)
      for (std::size_t b = 0; b < r && integral; ++b) {
        Rational x = 0;
        for (std::size_t k = 0; k < l; ++k) x += Rational(based.simple_root(perm[k])[a]) * (*s_inv)[k][b];
        if (x.get_den() != 1)
          integral = false;
        else
          t(a, b) = x.get_num();
      }
    if (!integral) {
      out.non_lifting.push_back(perm);
      continue;
    }
    BRDCheck c = is_brd_automorphism(based, t);
    if (!c) {
      out.non_lifting.push_back(perm);
      continue;
    }
    out.automorphisms.push_back({t, c.permutation});
  }
  return out;
}

CenterAction::CenterAction(const Center& center, const BRDAutomorphism& t) {
  auto inv = integer_inverse(t.matrix);
  if (!inv) throw ValidationError("center action: T is not invertible over Z");
  const CokernelPresentation& p = center.presentation;
  forward_ = center.induced_character_map(t.matrix);
  inverse_ = center.induced_character_map(*inv);
  IntMatrix product = forward_ * inverse_;
  const std::size_t k = p.num_generators();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Integer want = i == j ? 1 : 0;
      Integer got = product(i, j);
      if (i >= p.free_rank) {
        const Integer& f = p.invariant_factors[i - p.free_rank];
        got = mod_floor(got, f);
        want = mod_floor(want, f);
      }
      ensure(got == want, "center action: induced maps on X*(H)/ZR are not mutually inverse");
    }
}

AbHom CenterAction::at_level(const TorsionLevel& level) const { return torsion_action(level, inverse_); }

CenterAction induced_center_action(const BasedRootDatum& based, const Center& center, const IntMatrix& t) {
  BRDAutomorphism a = make_brd_automorphism(based, t);
  for (std::size_t i = 0; i < based.datum().num_roots(); ++i) {
    Vector image = center.presentation.reduce(t * based.datum().root(i));
    for (const auto& x : image)
      ensure(x == 0, "based-root-datum automorphism does not preserve the root lattice");
  }
  return CenterAction(center, a);
}

AdHom extend_from_generators(const FiniteGroup& gamma, const std::vector<IntMatrix>& generator_images,
                             std::size_t rank) {
  if (generator_images.size() != gamma.generators().size())
    throw ValidationError("Ad: expected " + std::to_string(gamma.generators().size()) + " generator images, got " +
                          std::to_string(generator_images.size()));
  const std::size_t r = rank;
  for (const auto& m : generator_images)
    if (m.rows() != r || m.cols() != r) throw ValidationError("Ad: generator images must be square of equal size");
  auto tree = gamma.spanning_tree();
  AdHom ad{gamma, std::vector<IntMatrix>(gamma.order())};
  // Spanning-tree parents come earlier in BFS order; walk in that order.
  std::vector<std::size_t> order{gamma.identity()};
  std::vector<std::vector<std::size_t>> children(gamma.order());
  for (std::size_t x = 0; x < gamma.order(); ++x)
    if (x != gamma.identity()) children[tree[x].first].push_back(x);
  for (std::size_t head = 0; head < order.size(); ++head)
    for (std::size_t c : children[order[head]]) order.push_back(c);
  ad.images[gamma.identity()] = IntMatrix::identity(r);
  for (std::size_t k = 1; k < order.size(); ++k) {
    std::size_t x = order[k];
    ad.images[x] = ad.images[tree[x].first] * generator_images[tree[x].second];
  }
  return ad;
}

AdCheck validate_ad(const BasedRootDatum& based, const AdHom& ad) {
  AdCheck out;
  const FiniteGroup& g = ad.gamma;
  if (ad.images.size() != g.order()) {
    out.violation = "Ad must assign a matrix to every element of Gamma";
    return out;
  }
  const std::size_t r = based.datum().rank();
  for (std::size_t x = 0; x < g.order(); ++x) {
    const IntMatrix& m = ad.images[x];
    if (m.rows() != r || m.cols() != r) {
      out.violation = "Ad(" + std::to_string(x) + ") is not " + std::to_string(r) + "x" + std::to_string(r);
      return out;
    }
    BRDCheck c = is_brd_automorphism(based, m);
    if (!c) {
      out.violation = "Ad(" + std::to_string(x) + ") is not an automorphism of the based root datum: " + c.violation;
      return out;
    }
  }
  if (!(ad.images[g.identity()] == IntMatrix::identity(r))) {
    out.violation = "Ad(identity) is not the identity matrix";
    return out;
  }
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y)
      if (!(ad.images[g.mul(x, y)] == ad.images[x] * ad.images[y])) {
        out.violation = "Ad is not a homomorphism: Ad(" + std::to_string(x) + "*" + std::to_string(y) +
                        ") != Ad(" + std::to_string(x) + ")Ad(" + std::to_string(y) + ")";
        return out;
      }
  out.ok = true;
  return out;
}

}  // namespace drg
