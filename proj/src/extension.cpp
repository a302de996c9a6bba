#include "drg/extension.hpp"

#include <algorithm>
#include <sstream>

#include "drg/errors.hpp"

namespace drg {

namespace {

std::string pair_string(const GammaModule& m, std::size_t e) {
  const std::size_t n = m.gamma().order();
  return "(" + to_string(m.coeff().element_at(e / n)) + ", " + std::to_string(e % n) + ")";
}

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  return p;
}

}  // namespace

std::size_t ExtensionTable::element(const Vector& a, std::size_t g) const {
  return module.coeff().element_index(module.coeff().reduce(a)) * module.gamma().order() + g;
}

std::vector<std::size_t> ExtensionTable::canonical_section() const {
  std::vector<std::size_t> s(module.gamma().order());
  for (std::size_t g = 0; g < s.size(); ++g) s[g] = element(module.coeff().zero(), g);
  return s;
}

ExtensionTable build_extension(const GammaModule& m, const Cochain& c) {
  const FiniteGroup& gamma = m.gamma();
  const FGAbelianGroup& A = m.coeff();
  const std::size_t n = gamma.order();
  if (c.degree != 2 || c.values.size() != n * n) throw ValidationError("build_extension: expected a 2-cochain");
  const std::vector<Vector> elems = A.elements();
  const std::size_t na = elems.size();

  std::vector<std::vector<std::size_t>> add(na, std::vector<std::size_t>(na));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) add[i][j] = A.element_index(A.add(elems[i], elems[j]));
  std::vector<std::vector<std::size_t>> act(n, std::vector<std::size_t>(na));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t i = 0; i < na; ++i) act[g][i] = A.element_index(m.act(g, elems[i]));
  std::vector<std::size_t> cval(n * n);
  for (std::size_t t = 0; t < n * n; ++t) cval[t] = A.element_index(A.reduce(c.values[t]));

  const std::size_t size = na * n;
  std::vector<std::vector<std::size_t>> table(size, std::vector<std::size_t>(size));
  for (std::size_t x = 0; x < size; ++x)
    for (std::size_t y = 0; y < size; ++y) {
      std::size_t a1 = x / n, g1 = x % n, a2 = y / n, g2 = y % n;
      std::size_t a = add[add[a1][act[g1][a2]]][cval[g1 * n + g2]];
      table[x][y] = a * n + gamma.mul(g1, g2);
    }
  if (auto w = FiniteGroup::find_associativity_failure(table)) {
    std::ostringstream msg;
    msg << "extension table is not associative (the cochain is not a cocycle): (x*y)*z != x*(y*z) for x = "
        << pair_string(m, w->x) << ", y = " << pair_string(m, w->y) << ", z = " << pair_string(m, w->z);
    throw AssociativityViolation(msg.str(), *w);
  }
  if (!is_normalized(m, c)) throw ValidationError("build_extension: the cocycle is not normalized");

  ExtensionTable e{m, c, FiniteGroup::from_table(std::move(table)), {}, {}};
  e.cocycle.values.clear();
  for (const auto& v : c.values) e.cocycle.values.push_back(A.reduce(v));
  for (std::size_t i = 0; i < na; ++i) e.embedding.push_back(i * n + gamma.identity());
  for (std::size_t x = 0; x < size; ++x) e.projection.push_back(x % n);
  ensure(e.group.identity() == e.embedding[A.element_index(A.zero())], "extension identity is not (0, 1)");
  return e;
}

Cochain extract_cocycle(const GammaModule& m, const FiniteGroup& e, const std::vector<std::size_t>& embedding,
                        const std::vector<std::size_t>& projection, const std::vector<std::size_t>& section) {
  const FiniteGroup& gamma = m.gamma();
  const std::size_t n = gamma.order();
  const std::size_t na = embedding.size();
  if (na != static_cast<std::size_t>(m.coeff().order().get_ui()))
    throw ValidationError("extract_cocycle: embedding must list one element per element of A");
  if (projection.size() != e.order()) throw ValidationError("extract_cocycle: projection must be total on E");
  if (section.size() != n) throw ValidationError("extract_cocycle: section must be total on Gamma");
  std::vector<std::size_t> back(e.order(), na);
  for (std::size_t i = 0; i < na; ++i) {
    if (embedding[i] >= e.order() || back[embedding[i]] != na)
      throw ValidationError("extract_cocycle: embedding is not injective");
    back[embedding[i]] = i;
  }
  for (std::size_t g = 0; g < n; ++g)
    if (section[g] >= e.order() || projection[section[g]] != g)
      throw ValidationError("extract_cocycle: section(" + std::to_string(g) + ") does not project to " +
                            std::to_string(g));
  if (section[gamma.identity()] != e.identity())
    throw ValidationError("extract_cocycle: section(1) is not the identity");

  Cochain c{2, std::vector<Vector>(n * n)};
  for (std::size_t g1 = 0; g1 < n; ++g1)
    for (std::size_t g2 = 0; g2 < n; ++g2) {
      std::size_t x = e.mul(e.mul(section[g1], section[g2]), e.inv(section[gamma.mul(g1, g2)]));
      if (back[x] == na)
        throw ValidationError("extract_cocycle: s(" + std::to_string(g1) + ")s(" + std::to_string(g2) + ")s(" +
                              std::to_string(gamma.mul(g1, g2)) + ")^-1 is not in the embedded A");
      c.values[g1 * n + g2] = m.coeff().element_at(back[x]);
    }
  Cochain dc = differential(m, c);
  for (const auto& v : dc.values)
    if (!m.coeff().is_zero(v))
      throw ValidationError("extract_cocycle: conjugation in E does not induce the module's action on A");
  return c;
}

Cochain extract_cocycle(const ExtensionTable& e, const std::vector<std::size_t>& section) {
  return extract_cocycle(e.module, e.group, e.embedding, e.projection, section);
}

bool same_module(const GammaModule& a, const GammaModule& b) {
  if (a.gamma().table() != b.gamma().table() || !(a.coeff() == b.coeff())) return false;
  for (std::size_t g = 0; g < a.gamma().order(); ++g)
    for (std::size_t j = 0; j < a.num_coordinates(); ++j)
      if (a.coeff().reduce(a.action(g).col(j)) != b.coeff().reduce(b.action(g).col(j))) return false;
  return true;
}

Equivalence extensions_equivalent(const ExtensionTable& e1, const ExtensionTable& e2) {
  if (!same_module(e1.module, e2.module))
    throw ValidationError("extensions_equivalent: the extensions are over different Gamma-modules");
  Equivalence out;
  out.witness = solve_coboundary(e1.module, subtract(e1.module, e1.cocycle, e2.cocycle));
  out.equivalent = out.witness.has_value();
  return out;
}

// ---------------------------------------------------------------------------

PushoutResult pushout(const FiniteGroup& g_model, const std::vector<std::size_t>& z_embedding,
                      const ExtensionTable& etilde, const std::vector<Permutation>& act) {
  const FGAbelianGroup& A = etilde.module.coeff();
  const FiniteGroup& et = etilde.group;
  const FiniteGroup& gamma = etilde.module.gamma();
  const std::size_t ng = g_model.order(), ne = et.order(), nz = z_embedding.size();
  const std::vector<Vector> elems = A.elements();
  if (nz != elems.size()) throw ValidationError("pushout: Z embedding must list one element per element of A");

  std::vector<bool> seen(ng, false);
  for (std::size_t i = 0; i < nz; ++i) {
    if (z_embedding[i] >= ng || seen[z_embedding[i]]) throw ValidationError("pushout: Z embedding is not injective");
    seen[z_embedding[i]] = true;
    for (std::size_t j = 0; j < nz; ++j) {
      std::size_t sum = A.element_index(A.add(elems[i], elems[j]));
      if (z_embedding[sum] != g_model.mul(z_embedding[i], z_embedding[j]))
        throw ValidationError("pushout: Z embedding is not a homomorphism at (" + to_string(elems[i]) + ", " +
                              to_string(elems[j]) + ")");
    }
    for (std::size_t g = 0; g < ng; ++g)
      if (g_model.mul(z_embedding[i], g) != g_model.mul(g, z_embedding[i]))
        throw ValidationError("pushout: Z is not central: z = " + std::to_string(z_embedding[i]) +
                              " does not commute with g = " + std::to_string(g));
  }

  if (act.size() != ne) throw ValidationError("pushout: act must give one automorphism per element of E~");
  for (std::size_t e = 0; e < ne; ++e) {
    if (!is_permutation(act[e], ng))
      throw ValidationError("pushout: act(" + std::to_string(e) + ") is not a permutation of G");
    if (auto v = hom_violation(act[e], g_model, g_model))
      throw ValidationError("pushout: act(" + std::to_string(e) + ") is not an automorphism: fails at (" +
                            std::to_string(v->first) + ", " + std::to_string(v->second) + ")");
  }
  for (std::size_t x = 0; x < ne; ++x)
    for (std::size_t y = 0; y < ne; ++y)
      if (act[et.mul(x, y)] != compose(act[x], act[y]))
        throw ValidationError("pushout: act is not a homomorphism: act(" + std::to_string(x) + "*" +
                              std::to_string(y) + ") != act(" + std::to_string(x) + ")act(" + std::to_string(y) + ")");
  const Permutation id = identity_permutation(ng);
  for (std::size_t i = 0; i < nz; ++i)
    if (act[etilde.embedding[i]] != id)
      throw ValidationError("pushout: embedded z = " + to_string(elems[i]) +
                            " must act on G by conjugation by a central element, i.e. trivially");

  PushoutResult out;
  out.semidirect = semidirect_product(g_model, et, act);
  const FiniteGroup& s = out.semidirect;
  for (std::size_t i = 0; i < nz; ++i) {
    std::size_t neg = A.element_index(A.negate(elems[i]));
    out.antidiagonal.push_back(z_embedding[i] * ne + etilde.embedding[neg]);
  }
  std::vector<bool> in_anti(s.order(), false);
  for (std::size_t x : out.antidiagonal) in_anti[x] = true;
  for (std::size_t x = 0; x < s.order(); ++x)
    for (std::size_t y : out.antidiagonal)
      if (!in_anti[s.mul(s.mul(x, y), s.inv(x))])
        throw ValidationError("pushout: the antidiagonal is not normal: conjugating " + std::to_string(y) + " by " +
                              std::to_string(x) + " leaves it (act disagrees with the action of Gamma on Z)");

  FiniteGroup::Quotient q = s.quotient(out.antidiagonal);
  out.group = q.group;
  out.quotient_map = q.projection;
  ensure(out.group.order() == ng * gamma.order(), "pushout: |E| != |G| * |Gamma|");

  const std::size_t ide = et.identity();
  std::vector<bool> hit(out.group.order(), false);
  for (std::size_t g = 0; g < ng; ++g) {
    std::size_t x = out.quotient_map[g * ne + ide];
    ensure(!hit[x], "pushout: G does not embed in E");
    hit[x] = true;
    out.g_embedding.push_back(x);
  }
  out.gamma_projection.assign(out.group.order(), gamma.order());
  for (std::size_t x = 0; x < s.order(); ++x) {
    std::size_t y = out.quotient_map[x];
    std::size_t g = etilde.projection[x % ne];
    ensure(out.gamma_projection[y] == gamma.order() || out.gamma_projection[y] == g,
           "pushout: projection to Gamma is not well defined");
    out.gamma_projection[y] = g;
  }
  ensure(hom_check(out.gamma_projection, out.group, gamma), "pushout: projection to Gamma is not a homomorphism");
  for (std::size_t y = 0; y < out.group.order(); ++y)
    ensure((out.gamma_projection[y] == gamma.identity()) == hit[y], "pushout: kernel of E -> Gamma is not G");
  FiniteGroup::Quotient eg = out.group.quotient(out.g_embedding);
  ensure(find_isomorphism(eg.group, gamma).has_value(), "pushout: E/G is not isomorphic to Gamma");

  // Direct model G x_Z E~ on pairs (g, gamma) and the multiplication map.
  const std::size_t n = gamma.order();
  const std::vector<std::size_t> section = etilde.canonical_section();
  std::vector<std::vector<std::size_t>> table(ng * n, std::vector<std::size_t>(ng * n));
  for (std::size_t x = 0; x < ng * n; ++x)
    for (std::size_t y = 0; y < ng * n; ++y) {
      std::size_t g1 = x / n, c1 = x % n, g2 = y / n, c2 = y % n;
      std::size_t cz = z_embedding[A.element_index(A.reduce(etilde.cocycle.values[c1 * n + c2]))];
      table[x][y] = g_model.mul(g_model.mul(g1, act[section[c1]][g2]), cz) * n + gamma.mul(c1, c2);
    }
  FiniteGroup model = FiniteGroup::from_table(std::move(table));
  std::vector<std::size_t> mu(s.order());
  for (std::size_t x = 0; x < s.order(); ++x) {
    std::size_t g = x / ne, e = x % ne;
    mu[x] = g_model.mul(g, z_embedding[e / n]) * n + e % n;
  }
  ensure(hom_check(mu, s, model), "pushout: the multiplication map is not a homomorphism");
  for (std::size_t x = 0; x < s.order(); ++x)
    if (mu[x] == model.identity()) out.multiplication_kernel.push_back(x);
  std::vector<std::size_t> anti = out.antidiagonal;
  std::sort(anti.begin(), anti.end());
  ensure(out.multiplication_kernel == anti, "pushout: the kernel of the multiplication map is not the antidiagonal");
  return out;
}

CenterQuotientReport quotient_mod_center(const PushoutResult& e, const FiniteGroup& g_model,
                                         const std::vector<std::size_t>& z_embedding, const ExtensionTable& etilde,
                                         const std::vector<Permutation>& act) {
  const FiniteGroup& gamma = etilde.module.gamma();
  CenterQuotientReport out;
  std::vector<std::size_t> zq;
  for (std::size_t z : z_embedding) zq.push_back(e.g_embedding[z]);
  out.quotient = e.group.quotient(zq).group;

  FiniteGroup::Quotient gz = g_model.quotient(z_embedding);
  const std::size_t m = gz.group.order();
  std::vector<std::size_t> rep(m, g_model.order());
  for (std::size_t g = 0; g < g_model.order(); ++g)
    if (rep[gz.projection[g]] == g_model.order()) rep[gz.projection[g]] = g;
  const std::vector<std::size_t> section = etilde.canonical_section();
  std::vector<Permutation> gamma_act(gamma.order(), Permutation(m));
  for (std::size_t c = 0; c < gamma.order(); ++c)
    for (std::size_t k = 0; k < m; ++k) gamma_act[c][k] = gz.projection[act[section[c]][rep[k]]];
  out.expected = semidirect_product(gz.group, gamma, gamma_act);
  out.isomorphism = find_isomorphism(out.quotient, out.expected);
  return out;
}

// ---------------------------------------------------------------------------

Classification classify(const BasedRootDatum& based, const AdHom& ad, const TowerOptions& options) {
  AdCheck check = validate_ad(based, ad);
  if (!check) throw ValidationError(check.violation);
  Classification out;
  out.center = center(based.datum());
  for (const auto& t : ad.images)
    out.character_map_inverses.push_back(induced_center_action(based, out.center, t).character_map_inverse());
  out.tower = stabilized_h2(ad.gamma, out.center.group, out.character_map_inverses, options);
  if (!out.tower.stabilized) {
    std::ostringstream msg;
    msg << "torsion tower did not stabilize by k = " << options.max_k << "; partial tower:";
    for (const auto& lv : out.tower.levels) msg << " H2(k=" << lv.k << ") = " << lv.h2.to_string() << ";";
    throw BudgetExceeded(msg.str());
  }
  out.eckmann = eckmann_check(*out.tower.host);
  ensure(out.eckmann.holds, "Eckmann annihilation failed: " + out.eckmann.failure);
  for (auto& cls : out.tower.classes()) {
    bool split = true;
    for (const auto& x : cls.coordinates) split = split && x == 0;
    out.descriptors.push_back({based.datum(), ad.gamma, ad, std::move(cls), split});
  }
  return out;
}

}  // namespace drg
