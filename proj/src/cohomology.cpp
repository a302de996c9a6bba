#include "drg/cohomology.hpp"

#include <map>
#include <stdexcept>

#include "drg/errors.hpp"

namespace drg {

namespace {

bool rows_agree_mod(const FGAbelianGroup& g, const Vector& a, const Vector& b) {
  return g.reduce(a) == g.reduce(b);
}

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

Vector unit(std::size_t n, std::size_t i, const Integer& value) {
  Vector v(n);
  v[i] = value;
  return v;
}

// Generators q_j e_i of the relation lattice of the p-cochain group.
void append_relations(const GammaModule& m, std::size_t p, std::vector<Vector>& gens) {
  const std::size_t s = m.num_coordinates();
  const std::size_t n_cochain = m.cochain_dim(p);
  for (std::size_t i = 0; i < n_cochain; ++i) gens.push_back(unit(n_cochain, i, m.coeff().modulus(i % s)));
}

Vector cochain_moduli(const GammaModule& m, std::size_t p) {
  const std::size_t s = m.num_coordinates();
  Vector q(m.cochain_dim(p));
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = m.coeff().modulus(i % s);
  return q;
}

// Columns of the lifted d^(p-1), restricted to basis cochains whose first
// argument is not the identity when `normalized_only`.
std::vector<Vector> differential_columns(const GammaModule& m, std::size_t p, bool normalized_only) {
  std::vector<Vector> cols;
  if (p == 0) return cols;
  const std::size_t n = m.gamma().order();
  const std::size_t s = m.num_coordinates();
  const SparseRows d = differential_matrix(m, p - 1);
  const std::size_t rows = d.rows.size();
  cols.assign(d.cols, Vector(rows));
  for (std::size_t r = 0; r < rows; ++r)
    for (const auto& [c, v] : d.rows[r]) cols[c][r] += v;
  if (!normalized_only || p < 2) return cols;
  // Degree-1 basis cochain index = g*s + j.
  std::vector<Vector> kept;
  for (std::size_t c = 0; c < cols.size(); ++c)
    if (c / s != m.gamma().identity()) kept.push_back(std::move(cols[c]));
  (void)n;
  return kept;
}

Vector reduce_cochain_vector(const GammaModule& m, std::size_t p, const Vector& x) {
  const std::size_t s = m.num_coordinates();
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = mod_floor(x[i], m.coeff().modulus(i % s));
  (void)p;
  return out;
}

Integer subgroup_order(const FGAbelianGroup& g, const std::vector<Vector>& gens) {
  const std::size_t k = g.num_generators();
  std::vector<Vector> rel = gens;
  for (std::size_t i = 0; i < k; ++i) rel.push_back(unit(k, i, g.modulus(i)));
  CokernelPresentation p = cokernel_presentation(IntMatrix::from_rows(rel, k), k);
  ensure(p.free_rank == 0, "subgroup_order: quotient of a finite group is infinite");
  Integer q = 1;
  for (const auto& f : p.invariant_factors) q *= f;
  return g.order() / q;
}

}  // namespace

// ---------------------------------------------------------------------------

GammaModule::GammaModule(FiniteGroup gamma, FGAbelianGroup coeff, std::vector<IntMatrix> action)
    : gamma_(std::move(gamma)), coeff_(std::move(coeff)), action_(std::move(action)) {
  if (!coeff_.is_finite()) throw ValidationError("Gamma-module: coefficient group must be finite, got " + coeff_.to_string());
  const std::size_t n = gamma_.order();
  const std::size_t s = coeff_.num_generators();
  if (action_.size() != n)
    throw ValidationError("Gamma-module: expected one action matrix per element of Gamma (" + std::to_string(n) +
                          "), got " + std::to_string(action_.size()));
  for (std::size_t g = 0; g < n; ++g) {
    if (action_[g].rows() != s || action_[g].cols() != s)
      throw ValidationError("Gamma-module: action matrix of element " + std::to_string(g) + " has the wrong size");
    AbHom h(coeff_, coeff_, action_[g]);
    if (!h.is_bijective())
      throw ValidationError("Gamma-module: element " + std::to_string(g) + " does not act by an automorphism");
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) action_[g](i, j) = h.matrix()(i, j);
  }
  for (std::size_t j = 0; j < s; ++j)
    if (!rows_agree_mod(coeff_, action_[gamma_.identity()].col(j), unit(s, j, 1)))
      throw ValidationError("Gamma-module: the identity of Gamma does not act trivially");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      IntMatrix prod = action_[x] * action_[y];
      const IntMatrix& xy = action_[gamma_.mul(x, y)];
      for (std::size_t j = 0; j < s; ++j)
        if (!rows_agree_mod(coeff_, prod.col(j), xy.col(j)))
          throw ValidationError("Gamma-module: action is not a homomorphism at (" + std::to_string(x) + ", " +
                                std::to_string(y) + ")");
    }
}

GammaModule GammaModule::trivial_action(FiniteGroup gamma, FGAbelianGroup coeff) {
  const std::size_t n = gamma.order();
  const std::size_t s = coeff.num_generators();
  return GammaModule(std::move(gamma), std::move(coeff), std::vector<IntMatrix>(n, IntMatrix::identity(s)));
}

Vector GammaModule::act(std::size_t g, const Vector& a) const { return coeff_.reduce(action_.at(g) * a); }

std::size_t GammaModule::cochain_dim(std::size_t p) const { return ipow(gamma_.order(), p) * num_coordinates(); }

Cochain Cochain::zero(const GammaModule& m, std::size_t degree) {
  return {degree, std::vector<Vector>(ipow(m.gamma().order(), degree), m.coeff().zero())};
}

std::size_t flat_index(const std::vector<std::size_t>& args, std::size_t n) {
  std::size_t idx = 0;
  for (std::size_t a : args) idx = idx * n + a;
  return idx;
}

Vector flatten(const GammaModule& m, const Cochain& c) {
  const std::size_t s = m.num_coordinates();
  if (c.values.size() != ipow(m.gamma().order(), c.degree))
    throw std::invalid_argument("flatten: cochain has the wrong number of values");
  Vector x;
  x.reserve(c.values.size() * s);
  for (const auto& v : c.values) {
    if (v.size() != s) throw std::invalid_argument("flatten: value has the wrong length");
    x.insert(x.end(), v.begin(), v.end());
  }
  return x;
}

Cochain unflatten(const GammaModule& m, std::size_t degree, const Vector& x) {
  const std::size_t s = m.num_coordinates();
  if (x.size() != m.cochain_dim(degree)) throw std::invalid_argument("unflatten: length mismatch");
  Cochain c{degree, std::vector<Vector>(ipow(m.gamma().order(), degree))};
  for (std::size_t t = 0; t < c.values.size(); ++t)
    c.values[t] = m.coeff().reduce(Vector(x.begin() + t * s, x.begin() + (t + 1) * s));
  return c;
}

Cochain add(const GammaModule& m, const Cochain& a, const Cochain& b) {
  if (a.degree != b.degree) throw std::invalid_argument("add: degree mismatch");
  Cochain c = a;
  for (std::size_t t = 0; t < c.values.size(); ++t) c.values[t] = m.coeff().add(a.values[t], b.values[t]);
  return c;
}

Cochain scale(const GammaModule& m, const Cochain& a, const Integer& k) {
  Cochain c = a;
  for (auto& v : c.values) v = m.coeff().scale(v, k);
  return c;
}

Cochain subtract(const GammaModule& m, const Cochain& a, const Cochain& b) { return add(m, a, scale(m, b, -1)); }

Cochain differential(const GammaModule& m, const Cochain& c) {
  const FiniteGroup& g = m.gamma();
  const FGAbelianGroup& A = m.coeff();
  const std::size_t n = g.order();
  if (c.values.size() != ipow(n, c.degree)) throw std::invalid_argument("differential: malformed cochain");
  Cochain out{c.degree + 1, std::vector<Vector>(ipow(n, c.degree + 1))};
  switch (c.degree) {
    case 0:
      for (std::size_t x = 0; x < n; ++x) out.values[x] = A.add(m.act(x, c.values[0]), A.negate(c.values[0]));
      break;
    case 1:
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          Vector v = A.add(c.values[x], m.act(x, c.values[y]));
          out.values[x * n + y] = A.add(v, A.negate(c.values[g.mul(x, y)]));
        }
      break;
    case 2:
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t z = 0; z < n; ++z) {
            Vector v = m.act(x, c.values[y * n + z]);
            v = A.add(v, A.negate(c.values[g.mul(x, y) * n + z]));
            v = A.add(v, c.values[x * n + g.mul(y, z)]);
            v = A.add(v, A.negate(c.values[x * n + y]));
            out.values[(x * n + y) * n + z] = std::move(v);
          }
      break;
    default:
      throw std::invalid_argument("differential: only degrees 0, 1, 2 are supported");
  }
  return out;
}

bool is_normalized(const GammaModule& m, const Cochain& c) {
  const std::size_t n = m.gamma().order();
  const std::size_t e = m.gamma().identity();
  const FGAbelianGroup& A = m.coeff();
  if (c.degree == 1) return A.is_zero(c.values[e]);
  if (c.degree == 2) {
    for (std::size_t x = 0; x < n; ++x)
      if (!A.is_zero(c.values[e * n + x]) || !A.is_zero(c.values[x * n + e])) return false;
  }
  return true;
}

Vector SparseRows::apply(const Vector& x) const {
  if (x.size() != cols) throw std::invalid_argument("SparseRows::apply: length mismatch");
  Vector y(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) y[r] += v * x[c];
  return y;
}

SparseRows differential_matrix(const GammaModule& m, std::size_t p) {
  if (p > 2) throw std::invalid_argument("differential_matrix: only degrees 0, 1, 2 are supported");
  const FiniteGroup& g = m.gamma();
  const std::size_t n = g.order();
  const std::size_t s = m.num_coordinates();
  SparseRows d;
  d.cols = m.cochain_dim(p);
  d.rows.resize(m.cochain_dim(p + 1));
  std::map<std::size_t, Integer> acc;
  // +k * (value at tuple t, coordinate i) in row coordinate i.
  auto plain = [&](std::size_t t, std::size_t i, long k) { acc[t * s + i] += k; };
  // + (x . value at tuple t), coordinate i.
  auto acted = [&](std::size_t x, std::size_t t, std::size_t i) {
    const IntMatrix& a = m.action(x);
    for (std::size_t j = 0; j < s; ++j)
      if (a(i, j) != 0) acc[t * s + j] += a(i, j);
  };
  auto flush = [&](std::size_t row) {
    for (auto& [c, v] : acc)
      if (v != 0) d.rows[row].emplace_back(c, v);
    acc.clear();
  };
  for (std::size_t tuple = 0; tuple < ipow(n, p + 1); ++tuple) {
    for (std::size_t i = 0; i < s; ++i) {
      if (p == 0) {
        acted(tuple, 0, i);
        plain(0, i, -1);
      } else if (p == 1) {
        std::size_t x = tuple / n, y = tuple % n;
        plain(x, i, 1);
        acted(x, y, i);
        plain(g.mul(x, y), i, -1);
      } else {
        std::size_t x = tuple / (n * n), y = (tuple / n) % n, z = tuple % n;
        acted(x, y * n + z, i);
        plain(g.mul(x, y) * n + z, i, -1);
        plain(x * n + g.mul(y, z), i, 1);
        plain(x * n + y, i, -1);
      }
      flush(tuple * s + i);
    }
  }
  return d;
}

// ---------------------------------------------------------------------------

CohomologyGroup::CohomologyGroup(GammaModule module, std::size_t degree, const CohomologyOptions& options)
    : module_(std::move(module)), degree_(degree) {
  if (degree_ > 2) throw std::invalid_argument("cohomology: only degrees 0, 1, 2 are supported");
  const std::size_t s = module_.num_coordinates();
  const std::size_t work = ipow(module_.gamma().order(), degree_ + 1) * s;
  if (work > options.budget)
    throw BudgetExceeded("cohomology: |Gamma|^(p+1) * " + std::to_string(s) + " = " + std::to_string(work) +
                         " exceeds the budget " + std::to_string(options.budget));
  exponent_ = module_.coeff().exponent();
  const std::size_t dim = module_.cochain_dim(degree_);

  SparseRows d = differential_matrix(module_, degree_);
  cocycles_ = kernel_modulo(d.rows, d.cols, cochain_moduli(module_, degree_ + 1), exponent_);

  std::vector<Vector> b_gens = differential_columns(module_, degree_, false);
  append_relations(module_, degree_, b_gens);
  coboundaries_ = ModularLattice(dim, exponent_, b_gens);

  std::vector<Vector> nb_gens = differential_columns(module_, degree_, true);
  append_relations(module_, degree_, nb_gens);
  normalized_coboundaries_ = ModularLattice(dim, exponent_, nb_gens);

  std::vector<Vector> cols;
  cols.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) cols.push_back(cocycles_.coordinates(coboundaries_.basis().col(i)));
  SmithDecomposition snf = smith_normal_form(IntMatrix::from_columns(cols, dim));
  Vector diag = snf.diagonal();
  Vector factors;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    ensure(diag[i] != 0, "cohomology: coboundaries do not have full rank in the cocycles");
    if (diag[i] != 1) {
      kept_rows_.push_back(i);
      factors.push_back(diag[i]);
    }
  }
  smith_u_ = std::move(snf.U);
  group_ = FGAbelianGroup(0, factors);
  for (std::size_t i : kept_rows_) {
    Vector x = cocycles_.basis() * snf.U_inv.col(i);
    generators_.push_back(canonical(unflatten(module_, degree_, x)));
  }
}

bool CohomologyGroup::is_cocycle(const Cochain& c) const {
  return c.degree == degree_ && cocycles_.contains(flatten(module_, c));
}

bool CohomologyGroup::is_coboundary(const Cochain& c) const {
  return c.degree == degree_ && coboundaries_.contains(flatten(module_, c));
}

Vector CohomologyGroup::class_of(const Cochain& c) const {
  if (c.degree != degree_) throw ValidationError("class_of: expected a cochain of degree " + std::to_string(degree_));
  Vector x = flatten(module_, c);
  if (!cocycles_.contains(x)) throw ValidationError("class_of: the cochain is not a cocycle");
  Vector y = cocycles_.coordinates(x);
  Vector out;
  out.reserve(kept_rows_.size());
  for (std::size_t k = 0; k < kept_rows_.size(); ++k) {
    Integer v;
    for (std::size_t j = 0; j < y.size(); ++j) v += smith_u_(kept_rows_[k], j) * y[j];
    out.push_back(mod_floor(v, group_.invariant_factors()[k]));
  }
  return out;
}

Cochain CohomologyGroup::canonical(const Cochain& c) const {
  if (!is_cocycle(c)) throw ValidationError("canonical: the cochain is not a cocycle");
  Cochain n = degree_ == 2 ? normalize_cocycle(module_, c) : c;
  Vector x = normalized_coboundaries_.reduce(flatten(module_, n));
  return unflatten(module_, degree_, reduce_cochain_vector(module_, degree_, x));
}

Cochain CohomologyGroup::representative(const Vector& coordinates) const {
  if (coordinates.size() != generators_.size())
    throw std::invalid_argument("representative: expected " + std::to_string(generators_.size()) + " coordinates");
  Cochain c = Cochain::zero(module_, degree_);
  for (std::size_t k = 0; k < generators_.size(); ++k) c = add(module_, c, scale(module_, generators_[k], coordinates[k]));
  return canonical(c);
}

std::vector<CohomologyClass> CohomologyGroup::classes() const {
  std::vector<CohomologyClass> out;
  for (const auto& x : group_.elements()) out.push_back({degree_, x, representative(x), group_});
  return out;
}

Integer CohomologyGroup::cocycle_count() const {
  return power(module_.coeff().order(), ipow(module_.gamma().order(), degree_)) / cocycles_.index();
}

Integer CohomologyGroup::coboundary_count() const {
  return power(module_.coeff().order(), ipow(module_.gamma().order(), degree_)) / coboundaries_.index();
}

std::optional<Cochain> solve_coboundary(const GammaModule& m, const Cochain& c) {
  if (c.degree == 0) throw std::invalid_argument("solve_coboundary: degree must be at least 1");
  const std::size_t rows = m.cochain_dim(c.degree);
  const std::size_t src = m.cochain_dim(c.degree - 1);
  SparseRows d = differential_matrix(m, c.degree - 1);
  Vector q = cochain_moduli(m, c.degree);
  IntMatrix a(rows, src + rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (const auto& [col, v] : d.rows[r]) a(r, col) += v;
    a(r, src + r) = q[r];
  }
  auto sol = solve_integer(a, flatten(m, c));
  if (!sol) return std::nullopt;
  Cochain b = unflatten(m, c.degree - 1, Vector(sol->begin(), sol->begin() + src));
  ensure(differential(m, b) == unflatten(m, c.degree, flatten(m, c)), "solve_coboundary: solution check failed");
  return b;
}

EckmannReport eckmann_check(const CohomologyGroup& h) {
  if (h.degree() != 1 && h.degree() != 2) throw std::invalid_argument("eckmann_check: degree must be 1 or 2");
  const GammaModule& m = h.module();
  EckmannReport out;
  const Integer n = static_cast<unsigned long>(m.gamma().order());
  for (std::size_t k = 0; k < h.generators().size(); ++k) {
    auto b = solve_coboundary(m, scale(m, h.generators()[k], n));
    if (!b) {
      out.holds = false;
      out.failure = "|Gamma| times generator " + std::to_string(k) + " is not a coboundary";
      return out;
    }
    out.witnesses.push_back(*b);
  }
  return out;
}

Cochain normalize_cocycle(const GammaModule& m, const Cochain& c) {
  if (c.degree != 2) return c;
  const std::size_t n = m.gamma().order();
  const std::size_t e = m.gamma().identity();
  Cochain b{1, std::vector<Vector>(n, m.coeff().reduce(c.values[e * n + e]))};
  return subtract(m, c, differential(m, b));
}

// ---------------------------------------------------------------------------

GammaModule torsion_module(const FiniteGroup& gamma, const TorsionLevel& level,
                           const std::vector<IntMatrix>& character_map_inverses) {
  if (character_map_inverses.size() != gamma.order())
    throw ValidationError("torsion module: expected one character map per element of Gamma");
  std::vector<IntMatrix> action;
  action.reserve(gamma.order());
  for (const auto& inv : character_map_inverses) action.push_back(torsion_action(level, inv).matrix());
  return GammaModule(gamma, level.group(), std::move(action));
}

std::vector<CohomologyClass> StabilizedH2::classes() const {
  std::vector<CohomologyClass> out;
  if (!host) return out;
  const FGAbelianGroup& hg = host->group();
  for (const auto& x : h2.elements()) {
    Vector y = hg.reduce(embedding * x);
    out.push_back({2, x, host->representative(y), h2});
  }
  return out;
}

StabilizedH2 stabilized_h2(const FiniteGroup& gamma, const DiagonalizableGroup& z,
                           const std::vector<IntMatrix>& character_map_inverses, const TowerOptions& options) {
  if (options.max_k < 1) throw ValidationError("stabilized_h2: max_k must be at least 1");
  const Integer n = static_cast<unsigned long>(gamma.order());
  std::vector<TorsionLevel> tl(1);                       // index k; slot 0 unused
  std::vector<std::shared_ptr<const CohomologyGroup>> h(1);
  std::vector<IntMatrix> phi(1);                         // phi[k]: H_k -> H_(k+1)
  std::vector<AbHom> phi_hom;

  auto level = [&](std::size_t k) {
    while (h.size() <= k) {
      std::size_t j = h.size();
      tl.push_back(torsion_at(z, power(n, j)));
      h.push_back(std::make_shared<const CohomologyGroup>(torsion_module(gamma, tl[j], character_map_inverses), 2,
                                                          options.cohomology));
    }
    return h[k];
  };
  auto comparison = [&](std::size_t k) -> const IntMatrix& {
    level(k + 1);
    while (phi.size() <= k) {
      std::size_t j = phi.size();
      const CohomologyGroup& src = *h[j];
      const CohomologyGroup& dst = *h[j + 1];
      AbHom inc = torsion_inclusion(tl[j], tl[j + 1]);
      std::vector<Vector> cols;
      for (const auto& gen : src.generators()) {
        Cochain pushed{2, {}};
        for (const auto& v : gen.values) pushed.values.push_back(inc.apply(v));
        cols.push_back(dst.class_of(pushed));
      }
      phi.push_back(IntMatrix::from_columns(cols, dst.group().num_generators()));
      phi_hom.emplace_back(src.group(), dst.group(), phi.back());
    }
    return phi[k];
  };
  auto bijective = [&](std::size_t k) {
    comparison(k);
    return phi_hom[k - 1].is_bijective();
  };
  auto image_order = [&](std::size_t k) {
    const IntMatrix& m = comparison(k);
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
    return subgroup_order(h[k + 1]->group(), cols);
  };
  // psi_k: im(phi_k) -> im(phi_(k+1)) is an isomorphism.
  auto image_iso = [&](std::size_t k) {
    Integer a = image_order(k), b = image_order(k + 1);
    if (a != b) return false;
    IntMatrix both = comparison(k + 1) * comparison(k);
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < both.cols(); ++j) cols.push_back(both.col(j));
    return subgroup_order(h[k + 2]->group(), cols) == a;
  };

  StabilizedH2 out;
  for (std::size_t k = 1; k + 2 <= options.max_k && !out.stabilized; ++k) {
    if (bijective(k) && bijective(k + 1)) {
      out.stabilized = true;
      out.rule = "comparison-isomorphism";
      out.k_used = k;
      out.host = h[k];
      out.h2 = h[k]->group();
      out.embedding = IntMatrix::identity(out.h2.num_generators());
      break;
    }
    if (k + 3 <= options.max_k && image_iso(k) && image_iso(k + 1)) {
      out.stabilized = true;
      out.rule = "image-stable";
      out.k_used = k + 1;
      out.host = h[k + 1];
      const IntMatrix& m = comparison(k);
      const FGAbelianGroup& target = h[k + 1]->group();
      ModularLattice rel = kernel_modulo(m, target.moduli(), target.exponent());
      CokernelPresentation p = cokernel_presentation(rel.basis().transpose(), m.cols());
      ensure(p.free_rank == 0, "stabilized_h2: image of a finite group is infinite");
      out.h2 = FGAbelianGroup(0, p.invariant_factors);
      IntMatrix emb = m * p.from_presented.block(0, m.cols(), 0, p.num_generators());
      for (std::size_t j = 0; j < emb.cols(); ++j) {
        Vector col = target.reduce(emb.col(j));
        for (std::size_t i = 0; i < col.size(); ++i) emb(i, j) = col[i];
      }
      out.embedding = emb;
    }
  }
  if (!out.stabilized) {
    level(options.max_k);
    out.k_used = options.max_k;
    out.host = h[options.max_k];
    out.h2 = out.host->group();
    out.embedding = IntMatrix::identity(out.h2.num_generators());
  }
  for (std::size_t k = 1; k < h.size(); ++k) {
    TowerLevel lv;
    lv.k = k;
    lv.modulus = tl[k].n;
    lv.coefficients = tl[k].group();
    lv.h2 = h[k]->group();
    if (k < phi.size()) {
      lv.has_comparison = true;
      lv.comparison_injective = phi_hom[k - 1].is_injective();
      lv.comparison_bijective = phi_hom[k - 1].is_bijective();
      lv.image_order = image_order(k);
    }
    out.levels.push_back(std::move(lv));
  }
  return out;
}

}  // namespace drg
