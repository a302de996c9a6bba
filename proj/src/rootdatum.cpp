#include "drg/rootdatum.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "drg/errors.hpp"

namespace drg {

Integer pairing(const Vector& cocharacter, const Vector& character) {
  if (cocharacter.size() != character.size()) throw std::invalid_argument("pairing: length mismatch");
  Integer s;
  for (std::size_t i = 0; i < character.size(); ++i) s += cocharacter[i] * character[i];
  return s;
}

RootDatum::RootDatum(std::size_t rank, std::vector<Vector> roots, std::vector<Vector> coroots)
    : rank_(rank), roots_(std::move(roots)), coroots_(std::move(coroots)) {
  if (roots_.size() != coroots_.size()) throw ValidationError("root datum: number of roots and coroots differ");
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (roots_[i].size() != rank_)
      throw ValidationError("root datum: root " + std::to_string(i) + " does not have length " + std::to_string(rank_));
    if (coroots_[i].size() != rank_)
      throw ValidationError("root datum: coroot " + std::to_string(i) + " does not have length " +
                            std::to_string(rank_));
    root_lookup_.emplace(roots_[i], i);
    coroot_lookup_.emplace(coroots_[i], i);
  }
}

RootDatum RootDatum::from_simple(std::size_t rank, const std::vector<Vector>& simple_roots,
                                 const std::vector<Vector>& simple_coroots, std::size_t cap) {
  if (simple_roots.size() != simple_coroots.size())
    throw ValidationError("root datum: number of simple roots and simple coroots differ");
  const std::size_t l = simple_roots.size();
  for (std::size_t i = 0; i < l; ++i)
    if (simple_roots[i].size() != rank || simple_coroots[i].size() != rank)
      throw ValidationError("root datum: simple root/coroot " + std::to_string(i) + " has wrong length");
  for (std::size_t i = 0; i < l; ++i)
    if (pairing(simple_coroots[i], simple_roots[i]) != 2)
      throw ValidationError("pairing: <a^v, a> != 2 for simple root " + std::to_string(i) + " " +
                            to_string(simple_roots[i]));

  // Orbit of (root, coroot) pairs under the simple reflections.
  std::vector<Vector> roots = simple_roots, coroots = simple_coroots;
  std::map<Vector, std::size_t> seen;
  for (std::size_t i = 0; i < l; ++i) {
    auto [it, fresh] = seen.emplace(roots[i], i);
    if (!fresh) throw ValidationError("root datum: simple root " + to_string(roots[i]) + " listed twice");
  }
  for (std::size_t head = 0; head < roots.size(); ++head) {
    for (std::size_t j = 0; j < l; ++j) {
      const Vector& a = simple_roots[j];
      const Vector& av = simple_coroots[j];
      Integer c = pairing(av, roots[head]);
      Integer cv = pairing(coroots[head], a);
      Vector r = roots[head], rv = coroots[head];
      for (std::size_t k = 0; k < rank; ++k) {
        r[k] -= c * a[k];
        rv[k] -= cv * av[k];
      }
      auto it = seen.find(r);
      if (it != seen.end()) {
        if (coroots[it->second] != rv)
          throw ValidationError("root datum: root " + to_string(r) + " acquires two different coroots");
        continue;
      }
      if (roots.size() >= cap) throw BudgetExceeded("root closure exceeds " + std::to_string(cap) + " roots");
      seen.emplace(r, roots.size());
      roots.push_back(std::move(r));
      coroots.push_back(std::move(rv));
    }
  }
  RootDatum datum(rank, std::move(roots), std::move(coroots));
  if (auto v = validate(datum)) throw ValidationError(v->message());
  return datum;
}

RootDatum RootDatum::simply_connected(const IntMatrix& cartan) {
  const std::size_t n = cartan.rows();
  std::vector<Vector> sr, sc;
  for (std::size_t j = 0; j < n; ++j) {
    sr.push_back(cartan.col(j));
    Vector e(n);
    e[j] = 1;
    sc.push_back(e);
  }
  return from_simple(n, sr, sc);
}

RootDatum RootDatum::adjoint(const IntMatrix& cartan) {
  const std::size_t n = cartan.rows();
  std::vector<Vector> sr, sc;
  for (std::size_t i = 0; i < n; ++i) {
    Vector e(n);
    e[i] = 1;
    sr.push_back(e);
    sc.push_back(cartan.row(i));
  }
  return from_simple(n, sr, sc);
}

std::optional<std::size_t> RootDatum::root_index(const Vector& v) const {
  auto it = root_lookup_.find(v);
  if (it == root_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> RootDatum::coroot_index(const Vector& v) const {
  auto it = coroot_lookup_.find(v);
  if (it == coroot_lookup_.end()) return std::nullopt;
  return it->second;
}

IntMatrix RootDatum::root_matrix() const { return IntMatrix::from_rows(roots_, rank_); }
IntMatrix RootDatum::coroot_matrix() const { return IntMatrix::from_rows(coroots_, rank_); }

std::optional<RootDatumViolation> validate(const RootDatum& d) {
  const std::size_t n = d.num_roots();
  {
    std::set<Vector> seen;
    for (std::size_t i = 0; i < n; ++i) {
      bool zero = std::all_of(d.root(i).begin(), d.root(i).end(), [](const Integer& x) { return x == 0; });
      if (zero) return RootDatumViolation{"nonzero roots", "root " + std::to_string(i) + " is zero"};
      if (!seen.insert(d.root(i)).second)
        return RootDatumViolation{"distinct roots", "root " + to_string(d.root(i)) + " appears twice"};
    }
    std::set<Vector> seen_co;
    for (std::size_t i = 0; i < n; ++i)
      if (!seen_co.insert(d.coroot(i)).second)
        return RootDatumViolation{"distinct coroots", "coroot " + to_string(d.coroot(i)) + " appears twice"};
  }
  for (std::size_t i = 0; i < n; ++i) {
    Integer p = pairing(d.coroot(i), d.root(i));
    if (p != 2) {
      std::ostringstream w;
      w << "<" << to_string(d.coroot(i)) << ", " << to_string(d.root(i)) << "> = " << p << " for root " << i;
      return RootDatumViolation{"pairing <b^v, b> = 2", w.str()};
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!root_permutation(d, reflection(d, i)))
      return RootDatumViolation{"reflection permutes roots",
                                "s_b for b = " + to_string(d.root(i)) + " does not preserve the root set"};
    if (!coroot_permutation(d, coreflection(d, i)))
      return RootDatumViolation{"coreflection permutes coroots",
                                "s_b^v for b^v = " + to_string(d.coroot(i)) + " does not preserve the coroot set"};
  }
  return std::nullopt;
}

IntMatrix reflection(const RootDatum& d, std::size_t i) {
  if (i >= d.num_roots()) throw std::out_of_range("reflection: root index out of range");
  const std::size_t r = d.rank();
  IntMatrix s = IntMatrix::identity(r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) s(a, b) -= d.root(i)[a] * d.coroot(i)[b];
  return s;
}

IntMatrix coreflection(const RootDatum& d, std::size_t i) {
  if (i >= d.num_roots()) throw std::out_of_range("coreflection: root index out of range");
  const std::size_t r = d.rank();
  IntMatrix s = IntMatrix::identity(r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) s(a, b) -= d.coroot(i)[a] * d.root(i)[b];
  return s;
}

std::optional<std::vector<std::size_t>> root_permutation(const RootDatum& d, const IntMatrix& w) {
  std::vector<std::size_t> perm(d.num_roots());
  for (std::size_t i = 0; i < d.num_roots(); ++i) {
    auto j = d.root_index(w * d.root(i));
    if (!j) return std::nullopt;
    perm[i] = *j;
  }
  return perm;
}

std::optional<std::vector<std::size_t>> coroot_permutation(const RootDatum& d, const IntMatrix& w) {
  std::vector<std::size_t> perm(d.num_roots());
  for (std::size_t i = 0; i < d.num_roots(); ++i) {
    auto j = d.coroot_index(w * d.coroot(i));
    if (!j) return std::nullopt;
    perm[i] = *j;
  }
  return perm;
}

// ---------------------------------------------------------------------------

BasedRootDatum::BasedRootDatum(RootDatum datum, std::vector<std::size_t> simple_indices)
    : datum_(std::move(datum)), simple_(std::move(simple_indices)) {
  const std::size_t l = simple_.size();
  const std::size_t r = datum_.rank();
  for (std::size_t s : simple_)
    if (s >= datum_.num_roots()) throw ValidationError("based root datum: simple index out of range");
  std::vector<Vector> cols;
  for (std::size_t s : simple_) cols.push_back(datum_.root(s));
  IntMatrix simple_matrix = IntMatrix::from_columns(cols, r);
  if (smith_normal_form(simple_matrix).rank() != l)
    throw ValidationError("based root datum: simple roots are linearly dependent");
  coefficients_.resize(datum_.num_roots());
  for (std::size_t i = 0; i < datum_.num_roots(); ++i) {
    auto c = solve_integer(simple_matrix, datum_.root(i));
    if (!c)
      throw ValidationError("based root datum: root " + to_string(datum_.root(i)) +
                            " is not an integer combination of the simple roots");
    bool nonneg = std::all_of(c->begin(), c->end(), [](const Integer& x) { return x >= 0; });
    bool nonpos = std::all_of(c->begin(), c->end(), [](const Integer& x) { return x <= 0; });
    if (!nonneg && !nonpos)
      throw ValidationError("based root datum: root " + to_string(datum_.root(i)) +
                            " has coefficients of both signs");
    if (nonneg) positive_.push_back(i);
    coefficients_[i] = std::move(*c);
  }
}

BasedRootDatum BasedRootDatum::standard(RootDatum datum) {
  // Lexicographic positivity: the first nonzero coordinate decides.
  auto positive = [](const Vector& v) {
    for (const auto& x : v)
      if (x != 0) return x > 0;
    return false;
  };
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < datum.num_roots(); ++i)
    if (positive(datum.root(i))) pos.push_back(i);
  std::set<Vector> sums;
  for (std::size_t a = 0; a < pos.size(); ++a)
    for (std::size_t b = a; b < pos.size(); ++b) {
      Vector s = datum.root(pos[a]);
      for (std::size_t k = 0; k < s.size(); ++k) s[k] += datum.root(pos[b])[k];
      sums.insert(std::move(s));
    }
  std::vector<std::size_t> simple;
  for (std::size_t i : pos)
    if (!sums.count(datum.root(i))) simple.push_back(i);
  return BasedRootDatum(std::move(datum), std::move(simple));
}

bool BasedRootDatum::is_positive(std::size_t root_index) const {
  return std::binary_search(positive_.begin(), positive_.end(), root_index);
}

IntMatrix BasedRootDatum::cartan_matrix() const {
  const std::size_t l = simple_.size();
  IntMatrix c(l, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) c(i, j) = pairing(simple_coroot(i), simple_root(j));
  return c;
}

// ---------------------------------------------------------------------------

WeylGroup weyl_generate(const BasedRootDatum& based, std::size_t cap) {
  const RootDatum& d = based.datum();
  WeylGroup w;
  for (std::size_t s : based.simple_indices()) w.generators.push_back(reflection(d, s));
  w.elements.push_back(IntMatrix::identity(d.rank()));
  std::map<IntMatrix, std::size_t> index{{w.elements[0], 0}};
  for (std::size_t head = 0; head < w.elements.size(); ++head) {
    for (const IntMatrix& g : w.generators) {
      IntMatrix next = w.elements[head] * g;
      if (index.count(next)) continue;
      if (w.elements.size() >= cap)
        throw BudgetExceeded("Weyl group closure exceeds the cap of " + std::to_string(cap) + " elements");
      index.emplace(next, w.elements.size());
      w.elements.push_back(std::move(next));
    }
  }
  for (const IntMatrix& e : w.elements)
    ensure(root_permutation(d, e).has_value(), "Weyl group element does not permute the roots");
  return w;
}

std::vector<PositiveSystem> positive_systems(const BasedRootDatum& based, const WeylGroup& weyl) {
  const RootDatum& d = based.datum();
  std::map<std::vector<std::size_t>, std::size_t> seen;
  std::vector<PositiveSystem> out;
  for (std::size_t k = 0; k < weyl.order(); ++k) {
    std::vector<std::size_t> image;
    for (std::size_t i : based.positive_indices()) {
      auto j = d.root_index(weyl.elements[k] * d.root(i));
      ensure(j.has_value(), "Weyl group element does not permute the roots");
      image.push_back(*j);
    }
    std::sort(image.begin(), image.end());
    auto [it, fresh] = seen.emplace(image, k);
    ensure(fresh, "two Weyl group elements send the base positive system to the same system (elements " +
                      std::to_string(it->second) + " and " + std::to_string(k) + ")");
    out.push_back({std::move(image), k});
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string DynkinDiagram::to_string() const {
  std::ostringstream out;
  out << num_vertices << " vertices";
  for (const auto& e : edges) out << "; " << e.a << "-" << e.b << " (" << e.label_ab << "," << e.label_ba << ")";
  return out.str();
}

DynkinDiagram dynkin(const BasedRootDatum& based) {
  DynkinDiagram g;
  g.num_vertices = based.num_simple();
  g.vertices = based.simple_indices();
  for (std::size_t a = 0; a < g.num_vertices; ++a)
    for (std::size_t b = a + 1; b < g.num_vertices; ++b) {
      Integer ab = pairing(based.simple_coroot(a), based.simple_root(b));
      Integer ba = pairing(based.simple_coroot(b), based.simple_root(a));
      if (ab != 0 || ba != 0) g.edges.push_back({a, b, ab, ba});
    }
  return g;
}

// ---------------------------------------------------------------------------

IntMatrix Center::induced_character_map(const IntMatrix& t) const {
  const std::size_t k = presentation.num_generators();
  IntMatrix m = presentation.to_presented * t * presentation.from_presented;
  for (std::size_t i = 0; i < presentation.invariant_factors.size(); ++i) {
    const Integer& f = presentation.invariant_factors[i];
    for (std::size_t j = 0; j < k; ++j) m(presentation.free_rank + i, j) = mod_floor(m(presentation.free_rank + i, j), f);
  }
  return m;
}

Center center(const RootDatum& datum) {
  Center c;
  c.presentation = cokernel_presentation(datum.root_matrix(), datum.rank());
  c.group = DiagonalizableGroup(FGAbelianGroup(c.presentation.free_rank, c.presentation.invariant_factors));
  return c;
}

AlmostProduct almost_product_check(const RootDatum& datum) {
  const std::size_t r = datum.rank();
  AlmostProduct ap;
  ap.sublattice_1 = column_span_basis(datum.root_matrix().transpose());
  ap.sublattice_2 = integer_kernel(datum.coroot_matrix());
  if (ap.sublattice_1.cols() + ap.sublattice_2.cols() != r)
    throw ValidationError("almost product: root lattice and coroot annihilator do not have complementary ranks");
  IntMatrix both = hconcat(ap.sublattice_1, ap.sublattice_2);
  ap.index = abs(determinant(both));
  if (ap.index == 0)
    throw ValidationError("almost product: root lattice and coroot annihilator intersect nontrivially");
  return ap;
}

IntMatrix cartan_of_type(char type, std::size_t n) {
  IntMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) c(i, i) = 2;
  auto link = [&](std::size_t i, std::size_t j) {
    c(i, j) = -1;
    c(j, i) = -1;
  };
  switch (type) {
    case 'A':
      if (n < 1) break;
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      return c;
    case 'B':
    case 'C':
      if (n < 2) break;
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      // Last simple root short for B, long for C.
      if (type == 'B')
        c(n - 1, n - 2) = -2;
      else
        c(n - 2, n - 1) = -2;
      return c;
    case 'D':
      if (n < 4) break;
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      return c;
    case 'E':
      if (n < 6 || n > 8) break;
      // Bourbaki numbering 1-3-4-5-..., 2 attached to 4.
      link(0, 2);
      link(1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
      return c;
    case 'F':
      if (n != 4) break;
      link(0, 1);
      link(1, 2);
      link(2, 3);
      c(2, 1) = -2;
      return c;
    case 'G':
      if (n != 2) break;
      c(0, 1) = -3;
      c(1, 0) = -1;
      return c;
    default:
      break;
  }
  throw std::invalid_argument(std::string("cartan_of_type: unsupported type ") + type + std::to_string(n));
}

IntMatrix cartan_product(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
  return c;
}

}  // namespace drg
