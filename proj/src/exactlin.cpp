#include "drg/exactlin.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace drg {

std::string to_string(const Vector& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i];
  }
  out << ')';
  return out.str();
}

Vector make_vector(std::initializer_list<long> values) {
  Vector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("IntMatrix::from_rows: length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("IntMatrix::from_columns: length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntMatrix IntMatrix::diagonal(const Vector& diag) {
  IntMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

Vector IntMatrix::row(std::size_t i) const {
  return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Vector IntMatrix::col(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix n = *this;
  for (auto& x : n.data_) x = -x;
  return n;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  Integer* d = &data_[dst * cols_];
  const Integer* s = &data_[src * cols_];
  for (std::size_t j = 0; j < cols_; ++j)
    if (s[j] != 0) d[j] += q * s[j];
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    const Integer& s = (*this)(i, src);
    if (s != 0) (*this)(i, dst) += q * s;
  }
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
  IntMatrix b(r1 - r0, c1 - c0);
  for (std::size_t i = r0; i < r1; ++i)
    for (std::size_t j = c0; j < c1; ++j) b(i - r0, j - c0) = (*this)(i, j);
  return b;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out << ',';
    out << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out << ',';
      out << (*this)(i, j);
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix product: dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("IntMatrix sum: shape mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + (-b); }

Vector operator*(const IntMatrix& a, const Vector& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("IntMatrix*Vector: dimension mismatch");
  Vector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (x[j] != 0 && a(i, j) != 0) y[i] += a(i, j) * x[j];
  return y;
}

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row mismatch");
  IntMatrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

Integer determinant(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant: non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& a) {
  if (!a.is_square()) return false;
  Integer d = determinant(a);
  return d == 1 || d == -1;
}

std::optional<std::vector<std::vector<Rational>>> rational_inverse(const IntMatrix& a) {
  if (!a.is_square()) return std::nullopt;
  const std::size_t n = a.rows();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a(i, j));
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    Rational inv = 1 / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

std::optional<IntMatrix> integer_inverse(const IntMatrix& a) {
  if (!is_unimodular(a)) return std::nullopt;
  auto inv = rational_inverse(a);
  if (!inv) return std::nullopt;
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& q = (*inv)[i][j];
      if (q.get_den() != 1) return std::nullopt;
      r(i, j) = q.get_num();
    }
  return r;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

class SmithWorker {
 public:
  explicit SmithWorker(const IntMatrix& a) {
    s_.D = a;
    s_.U = IntMatrix::identity(a.rows());
    s_.U_inv = s_.U;
    s_.V = IntMatrix::identity(a.cols());
    s_.V_inv = s_.V;
    s_.original_rows = a.rows();
    s_.original_cols = a.cols();
  }

  SmithDecomposition run() {
    IntMatrix& a = s_.D;
    const std::size_t steps = std::min(a.rows(), a.cols());
    for (std::size_t t = 0; t < steps; ++t) {
      if (!reduce_at(t)) break;
      if (a(t, t) < 0) negate_row(t);
    }
    return std::move(s_);
  }

 private:
  // row dst += q*row src
  void row_add(std::size_t dst, std::size_t src, const Integer& q) {
    s_.D.add_row_multiple(dst, src, q);
    s_.U.add_row_multiple(dst, src, q);
    s_.U_inv.add_col_multiple(src, dst, -q);
  }
  // col dst += q*col src
  void col_add(std::size_t dst, std::size_t src, const Integer& q) {
    s_.D.add_col_multiple(dst, src, q);
    s_.V.add_col_multiple(dst, src, q);
    s_.V_inv.add_row_multiple(src, dst, -q);
  }
  void row_swap(std::size_t a, std::size_t b) {
    s_.D.swap_rows(a, b);
    s_.U.swap_rows(a, b);
    s_.U_inv.swap_cols(a, b);
  }
  void col_swap(std::size_t a, std::size_t b) {
    s_.D.swap_cols(a, b);
    s_.V.swap_cols(a, b);
    s_.V_inv.swap_rows(a, b);
  }
  void negate_row(std::size_t i) {
    s_.D.negate_row(i);
    s_.U.negate_row(i);
    s_.U_inv.negate_col(i);
  }

  // Smallest nonzero |entry| in the trailing block, ties to lowest (row, col).
  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    const IntMatrix& a = s_.D;
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j) {
        const Integer& x = a(i, j);
        if (x == 0) continue;
        if (!found || mpz_cmpabs(x.get_mpz_t(), best.get_mpz_t()) < 0) {
          found = true;
          best = abs(x);
          pi = i;
          pj = j;
          if (best == 1) return true;
        }
      }
    return found;
  }

  // Returns false when the trailing block is zero.
  bool reduce_at(std::size_t t) {
    IntMatrix& a = s_.D;
    for (;;) {
      std::size_t pi = 0, pj = 0;
      if (!find_pivot(t, pi, pj)) return false;
      row_swap(t, pi);
      col_swap(t, pj);
      const Integer pivot = a(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        row_add(i, t, -div_floor(a(i, t), pivot));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        col_add(j, t, -div_floor(a(t, j), pivot));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < a.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), pivot.get_mpz_t())) {
            row_add(t, i, 1);
            divides = false;
            break;
          }
      if (divides) return true;
    }
  }

  SmithDecomposition s_;
};

}  // namespace

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (D(i, i) != 0) ++r;
  return r;
}

Vector SmithDecomposition::diagonal() const {
  Vector d(std::min(D.rows(), D.cols()));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = D(i, i);
  return d;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) { return SmithWorker(a).run(); }

// ---------------------------------------------------------------------------

Vector CokernelPresentation::reduce(const Vector& x) const {
  Vector y = to_presented * x;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    Integer& c = y[free_rank + i];
    c = mod_floor(c, invariant_factors[i]);
  }
  return y;
}

CokernelPresentation cokernel_presentation(const IntMatrix& relations, std::size_t ambient_dim) {
  if (relations.rows() > 0 && relations.cols() != ambient_dim)
    throw std::invalid_argument("cokernel_presentation: relation length differs from ambient dimension");
  const std::size_t n = ambient_dim;
  IntMatrix rel = relations.rows() > 0 ? relations : IntMatrix(0, n);
  SmithDecomposition snf = smith_normal_form(rel);

  // Coordinates y = V^T x turn the relation lattice into the row span of D.
  std::vector<std::size_t> free_idx, torsion_idx;
  Vector factors;
  for (std::size_t i = 0; i < n; ++i) {
    Integer d = i < std::min(rel.rows(), n) ? snf.D(i, i) : Integer(0);
    if (d == 0)
      free_idx.push_back(i);
    else if (d != 1) {
      torsion_idx.push_back(i);
      factors.push_back(d);
    }
  }
  std::vector<std::size_t> kept = free_idx;
  kept.insert(kept.end(), torsion_idx.begin(), torsion_idx.end());

  CokernelPresentation p;
  p.free_rank = free_idx.size();
  p.invariant_factors = factors;
  p.to_presented = IntMatrix(kept.size(), n);
  p.from_presented = IntMatrix(n, kept.size());
  for (std::size_t r = 0; r < kept.size(); ++r)
    for (std::size_t j = 0; j < n; ++j) {
      p.to_presented(r, j) = snf.V(j, kept[r]);
      p.from_presented(j, r) = snf.V_inv(kept[r], j);
    }
  return p;
}

std::optional<Vector> solve_integer(const IntMatrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_integer: right-hand side has wrong length");
  SmithDecomposition snf = smith_normal_form(a);
  Vector c = snf.U * b;
  Vector y(a.cols());
  const std::size_t r = snf.rank();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < r) {
      if (!mpz_divisible_p(c[i].get_mpz_t(), snf.D(i, i).get_mpz_t())) return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), c[i].get_mpz_t(), snf.D(i, i).get_mpz_t());
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.V * y;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  SmithDecomposition snf = smith_normal_form(a);
  const std::size_t r = snf.rank();
  return snf.V.block(0, a.cols(), r, a.cols());
}

IntMatrix column_span_basis(const IntMatrix& gens) {
  SmithDecomposition snf = smith_normal_form(gens);
  const std::size_t r = snf.rank();
  IntMatrix basis(gens.rows(), r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < gens.rows(); ++i) basis(i, j) = snf.U_inv(i, j) * snf.D(j, j);
  return basis;
}

// ---------------------------------------------------------------------------
// ModularLattice

namespace {

void reduce_tail(Vector& v, std::size_t from, const Integer& e) {
  for (std::size_t i = from; i < v.size(); ++i)
    if (v[i] != 0) v[i] = mod_floor(v[i], e);
}

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

// Replaces (p, w) by (s*p + t*w, (w_i/g)*p - (p_i/g)*w) so that row i of the
// second vector vanishes; the transformation is unimodular.
void gcd_combine(Vector& p, Vector& w, std::size_t i) {
  Integer g, s, t;
  extended_gcd(p[i], w[i], g, s, t);
  Integer wp = w[i] / g, pp = p[i] / g;
  for (std::size_t r = i; r < p.size(); ++r) {
    Integer np = s * p[r] + t * w[r];
    Integer nw = wp * p[r] - pp * w[r];
    p[r] = std::move(np);
    w[r] = std::move(nw);
  }
}

}  // namespace

ModularLattice::ModularLattice(std::size_t dim, Integer modulus, const std::vector<Vector>& generators)
    : dim_(dim), modulus_(std::move(modulus)), basis_(dim, dim) {
  if (modulus_ <= 0) throw std::invalid_argument("ModularLattice: modulus must be positive");
  std::vector<Vector> work;
  work.reserve(generators.size());
  for (const Vector& g : generators) {
    if (g.size() != dim) throw std::invalid_argument("ModularLattice: generator length mismatch");
    Vector v = g;
    reduce_tail(v, 0, modulus_);
    if (!is_zero_vector(v)) work.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    Vector pivot;
    bool have = false;
    std::vector<Vector> next;
    next.reserve(work.size() + 1);
    for (Vector& w : work) {
      if (w[i] == 0) {
        next.push_back(std::move(w));
        continue;
      }
      if (!have) {
        pivot = std::move(w);
        have = true;
        continue;
      }
      gcd_combine(pivot, w, i);
      reduce_tail(w, i + 1, modulus_);
      reduce_tail(pivot, i + 1, modulus_);
      if (!is_zero_vector(w)) next.push_back(std::move(w));
    }
    Vector e_i(dim_);
    e_i[i] = modulus_;
    if (!have) {
      pivot = std::move(e_i);
    } else {
      gcd_combine(pivot, e_i, i);
      reduce_tail(e_i, i + 1, modulus_);
      if (!is_zero_vector(e_i)) next.push_back(std::move(e_i));
    }
    if (pivot[i] < 0)
      for (std::size_t r = i; r < dim_; ++r) pivot[r] = -pivot[r];
    reduce_tail(pivot, i + 1, modulus_);
    for (std::size_t r = 0; r < dim_; ++r) basis_(r, i) = pivot[r];
    work = std::move(next);
  }
}

Vector ModularLattice::reduce(const Vector& x) const {
  if (x.size() != dim_) throw std::invalid_argument("ModularLattice::reduce: length mismatch");
  Vector v = x;
  for (std::size_t i = 0; i < dim_; ++i) {
    Integer q = div_floor(v[i], basis_(i, i));
    if (q != 0)
      for (std::size_t r = i; r < dim_; ++r) v[r] -= q * basis_(r, i);
    if (i + 1 < dim_) v[i + 1] = mod_floor(v[i + 1], modulus_);
  }
  return v;
}

bool ModularLattice::contains(const Vector& x) const { return is_zero_vector(reduce(x)); }

Vector ModularLattice::coordinates(const Vector& x) const {
  if (x.size() != dim_) throw std::invalid_argument("ModularLattice::coordinates: length mismatch");
  Vector y(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Integer rest = x[i];
    for (std::size_t j = 0; j < i; ++j)
      if (basis_(i, j) != 0) rest -= basis_(i, j) * y[j];
    if (!mpz_divisible_p(rest.get_mpz_t(), basis_(i, i).get_mpz_t()))
      throw std::invalid_argument("ModularLattice::coordinates: vector not in lattice");
    mpz_divexact(y[i].get_mpz_t(), rest.get_mpz_t(), basis_(i, i).get_mpz_t());
  }
  return y;
}

Integer ModularLattice::index() const {
  Integer idx = 1;
  for (std::size_t i = 0; i < dim_; ++i) idx *= basis_(i, i);
  return idx;
}

ModularLattice kernel_modulo(const IntMatrix& a, const Vector& row_moduli, const Integer& e) {
  if (row_moduli.size() != a.rows()) throw std::invalid_argument("kernel_modulo: one modulus per row required");
  SparseRowMatrix rows(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(r, j) != 0) rows[r].emplace_back(j, a(r, j));
  return kernel_modulo(rows, a.cols(), row_moduli, e);
}

ModularLattice kernel_modulo(const SparseRowMatrix& a, std::size_t cols, const Vector& row_moduli, const Integer& e) {
  if (row_moduli.size() != a.size()) throw std::invalid_argument("kernel_modulo: one modulus per row required");
  const std::size_t n = cols;
  std::vector<Vector> gens(n, Vector(n));
  for (std::size_t j = 0; j < n; ++j) gens[j][j] = 1;

  for (std::size_t r = 0; r < a.size(); ++r) {
    const Integer& q = row_moduli[r];
    if (q <= 0 || !mpz_divisible_p(e.get_mpz_t(), q.get_mpz_t()))
      throw std::invalid_argument("kernel_modulo: row modulus must divide the lattice modulus");
    if (q == 1 || a[r].empty()) continue;

    std::size_t pivot = n;
    Integer pivot_value;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Integer v;
      for (const auto& [k, coeff] : a[r])
        if (gens[j][k] != 0) v += coeff * gens[j][k];
      v = mod_floor(v, q);
      if (v == 0) continue;
      if (pivot == n) {
        pivot = j;
        pivot_value = v;
        continue;
      }
      // Column operation leaving value g on the pivot and 0 on column j.
      Integer g, s, t;
      extended_gcd(pivot_value, v, g, s, t);
      Integer vj = v / g, vp = pivot_value / g;
      Vector& p = gens[pivot];
      Vector& w = gens[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (p[k] == 0 && w[k] == 0) continue;
        Integer np = s * p[k] + t * w[k];
        Integer nw = vj * p[k] - vp * w[k];
        p[k] = mod_floor(np, e);
        w[k] = mod_floor(nw, e);
      }
      pivot_value = g;
    }
    if (pivot != n) {
      Integer scale = q / gcd(pivot_value, q);
      for (auto& x : gens[pivot]) x = mod_floor(x * scale, e);
    }
  }
  return ModularLattice(n, e, gens);
}

}  // namespace drg
