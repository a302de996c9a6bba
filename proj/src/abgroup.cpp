#include "drg/abgroup.hpp"

#include <sstream>
#include <stdexcept>

#include "drg/errors.hpp"

namespace drg {

FGAbelianGroup::FGAbelianGroup(std::size_t free_rank, Vector invariant_factors)
    : free_rank_(free_rank), factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] <= 1) throw std::invalid_argument("FGAbelianGroup: invariant factors must exceed 1");
    if (i > 0 && !mpz_divisible_p(factors_[i].get_mpz_t(), factors_[i - 1].get_mpz_t()))
      throw std::invalid_argument("FGAbelianGroup: invariant factors must form a divisibility chain");
  }
}

FGAbelianGroup FGAbelianGroup::cyclic(long n) {
  if (n < 1) throw std::invalid_argument("FGAbelianGroup::cyclic: order must be positive");
  if (n == 1) return {};
  return FGAbelianGroup(0, {Integer(n)});
}

Integer FGAbelianGroup::order() const {
  if (free_rank_ != 0) throw std::logic_error("FGAbelianGroup::order: infinite group");
  Integer o = 1;
  for (const auto& f : factors_) o *= f;
  return o;
}

Integer FGAbelianGroup::exponent() const {
  if (free_rank_ != 0) throw std::logic_error("FGAbelianGroup::exponent: infinite group");
  return factors_.empty() ? Integer(1) : factors_.back();
}

Integer FGAbelianGroup::modulus(std::size_t i) const {
  return i < free_rank_ ? Integer(0) : factors_.at(i - free_rank_);
}

Vector FGAbelianGroup::moduli() const {
  Vector m(num_generators());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = modulus(i);
  return m;
}

void FGAbelianGroup::check_length(const Vector& x) const {
  if (x.size() != num_generators()) throw std::invalid_argument("FGAbelianGroup: coordinate length mismatch");
}

Vector FGAbelianGroup::reduce(const Vector& x) const {
  check_length(x);
  Vector r = x;
  for (std::size_t i = 0; i < factors_.size(); ++i) r[free_rank_ + i] = mod_floor(r[free_rank_ + i], factors_[i]);
  return r;
}

Vector FGAbelianGroup::add(const Vector& x, const Vector& y) const {
  check_length(x);
  check_length(y);
  Vector s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
  return reduce(s);
}

Vector FGAbelianGroup::negate(const Vector& x) const { return scale(x, -1); }

Vector FGAbelianGroup::scale(const Vector& x, const Integer& k) const {
  check_length(x);
  Vector s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] * k;
  return reduce(s);
}

bool FGAbelianGroup::is_zero(const Vector& x) const {
  Vector r = reduce(x);
  for (const auto& c : r)
    if (c != 0) return false;
  return true;
}

Integer FGAbelianGroup::element_order(const Vector& x) const {
  Vector r = reduce(x);
  for (std::size_t i = 0; i < free_rank_; ++i)
    if (r[i] != 0) return 0;
  Integer o = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const Integer& c = r[free_rank_ + i];
    if (c == 0) continue;
    o = lcm(o, factors_[i] / gcd(c, factors_[i]));
  }
  return o;
}

std::vector<Vector> FGAbelianGroup::elements() const {
  const std::size_t n = order().get_ui();
  std::vector<Vector> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(element_at(i));
  return out;
}

std::size_t FGAbelianGroup::element_index(const Vector& x) const {
  if (free_rank_ != 0) throw std::logic_error("FGAbelianGroup::element_index: infinite group");
  Vector r = reduce(x);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i].get_ui() + r[i].get_ui();
  return idx;
}

Vector FGAbelianGroup::element_at(std::size_t index) const {
  if (free_rank_ != 0) throw std::logic_error("FGAbelianGroup::element_at: infinite group");
  Vector r(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    unsigned long f = factors_[i].get_ui();
    r[i] = static_cast<unsigned long>(index % f);
    index /= f;
  }
  return r;
}

std::string FGAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << " + ";
    first = false;
  };
  if (free_rank_ > 0) {
    sep();
    out << "Z";
    if (free_rank_ > 1) out << '^' << free_rank_;
  }
  for (const auto& f : factors_) {
    sep();
    out << "Z/" << f;
  }
  return out.str();
}

// ---------------------------------------------------------------------------

AbHom::AbHom(FGAbelianGroup source, FGAbelianGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.num_generators() || matrix_.cols() != source_.num_generators())
    throw std::invalid_argument("AbHom: matrix shape does not match source/target");
  for (std::size_t j = 0; j < source_.num_generators(); ++j) {
    Integer mj = source_.modulus(j);
    if (mj == 0) continue;
    for (std::size_t i = 0; i < target_.num_generators(); ++i) {
      Integer image = mj * matrix_(i, j);
      Integer ti = target_.modulus(i);
      bool ok = ti == 0 ? image == 0 : mpz_divisible_p(image.get_mpz_t(), ti.get_mpz_t()) != 0;
      if (!ok) {
        std::ostringstream msg;
        msg << "AbHom not well defined: generator " << j << " of order " << mj << " maps to an element of coordinate "
            << i << " that is not killed by " << mj;
        throw ValidationError(msg.str());
      }
    }
  }
  for (std::size_t i = 0; i < target_.num_generators(); ++i) {
    Integer ti = target_.modulus(i);
    if (ti == 0) continue;
    for (std::size_t j = 0; j < source_.num_generators(); ++j) matrix_(i, j) = mod_floor(matrix_(i, j), ti);
  }
}

AbHom AbHom::identity(const FGAbelianGroup& g) { return AbHom(g, g, IntMatrix::identity(g.num_generators())); }

Vector AbHom::apply(const Vector& x) const {
  if (x.size() != source_.num_generators()) throw std::invalid_argument("AbHom::apply: coordinate length mismatch");
  return target_.reduce(matrix_ * x);
}

Vector hom_apply(const AbHom& f, const Vector& x) { return f.apply(x); }

AbHom AbHom::compose(const AbHom& other) const {
  if (!(other.target_ == source_)) throw std::invalid_argument("AbHom::compose: incompatible groups");
  return AbHom(other.source_, target_, matrix_ * other.matrix_);
}

namespace {

Integer image_order(const AbHom& f) {
  const FGAbelianGroup& t = f.target();
  if (!t.is_finite()) throw std::logic_error("AbHom: injectivity test needs a finite target");
  const std::size_t n = t.num_generators();
  const std::size_t s = f.source().num_generators();
  IntMatrix rel(s + n, n);
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t i = 0; i < n; ++i) rel(j, i) = f.matrix()(i, j);
  for (std::size_t i = 0; i < n; ++i) rel(s + i, i) = t.modulus(i);
  CokernelPresentation coker = cokernel_presentation(rel, n);
  Integer c = 1;
  for (const auto& x : coker.invariant_factors) c *= x;
  return t.order() / c;
}

}  // namespace

bool AbHom::is_injective() const {
  if (!source_.is_finite()) throw std::logic_error("AbHom::is_injective: infinite source");
  return image_order(*this) == source_.order();
}

bool AbHom::is_bijective() const { return is_injective() && source_.order() == target_.order(); }

bool operator==(const AbHom& a, const AbHom& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.matrix_ == b.matrix_;
}

// ---------------------------------------------------------------------------

PresentedGroup present_moduli(const Vector& moduli) {
  const std::size_t k = moduli.size();
  IntMatrix rel(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    if (moduli[i] < 0) throw std::invalid_argument("present_moduli: negative modulus");
    rel(i, i) = moduli[i];
  }
  CokernelPresentation p = cokernel_presentation(rel, k);
  return {FGAbelianGroup(p.free_rank, p.invariant_factors), p.to_presented, p.from_presented};
}

FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b) {
  Vector m = a.moduli();
  Vector mb = b.moduli();
  m.insert(m.end(), mb.begin(), mb.end());
  return present_moduli(m).group;
}

DiagonalizableGroup::DiagonalizableGroup(FGAbelianGroup character_group) : characters_(std::move(character_group)) {}

DiagonalizableGroup::DiagonalizableGroup(std::size_t torus_rank, Vector finite_factors)
    : characters_(torus_rank, std::move(finite_factors)) {}

std::string DiagonalizableGroup::to_string() const {
  std::ostringstream out;
  if (torus_rank() == 0 && characters_.invariant_factors().empty()) return "1";
  bool first = true;
  if (torus_rank() > 0) {
    out << "(C^x)";
    if (torus_rank() > 1) out << '^' << torus_rank();
    first = false;
  }
  for (const auto& f : characters_.invariant_factors()) {
    if (!first) out << " x ";
    out << "Z/" << f;
    first = false;
  }
  return out.str();
}

TorsionLevel torsion_at(const DiagonalizableGroup& z, const Integer& n) {
  if (n < 1) throw std::invalid_argument("torsion_at: n must be positive");
  const FGAbelianGroup& x = z.character_group();
  Vector natural(x.num_generators());
  for (std::size_t i = 0; i < natural.size(); ++i) {
    Integer m = x.modulus(i);
    natural[i] = m == 0 ? n : gcd(m, n);
  }
  return {n, natural, present_moduli(natural)};
}

AbHom torsion_inclusion(const TorsionLevel& from, const TorsionLevel& to) {
  if (!mpz_divisible_p(to.n.get_mpz_t(), from.n.get_mpz_t()))
    throw std::invalid_argument("torsion_inclusion: levels are not nested");
  if (from.natural_moduli.size() != to.natural_moduli.size())
    throw std::invalid_argument("torsion_inclusion: levels of different groups");
  const std::size_t k = from.natural_moduli.size();
  IntMatrix natural(k, k);
  for (std::size_t i = 0; i < k; ++i) natural(i, i) = to.natural_moduli[i] / from.natural_moduli[i];
  return AbHom(from.group(), to.group(), to.presented.to_group * natural * from.presented.from_group);
}

AbHom torsion_action(const TorsionLevel& level, const IntMatrix& character_map_inverse) {
  const std::size_t k = level.natural_moduli.size();
  if (character_map_inverse.rows() != k || character_map_inverse.cols() != k)
    throw std::invalid_argument("torsion_action: matrix does not match the character group");
  // t'_j = sum_i M_ij * t_i * g_j / g_i, where t_i is the value on generator i
  // measured in units of n / g_i.
  IntMatrix natural(k, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < k; ++i) {
      Integer num = character_map_inverse(i, j) * level.natural_moduli[j];
      const Integer& den = level.natural_moduli[i];
      ensure(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) != 0,
             "torsion_action: character map does not preserve the torsion subgroup");
      natural(j, i) = num / den;
    }
  return AbHom(level.group(), level.group(), level.presented.to_group * natural * level.presented.from_group);
}

}  // namespace drg
