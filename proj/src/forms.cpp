#include "sympcoh/forms.hpp"

#include <algorithm>

#include "sympcoh/errors.hpp"

namespace sympcoh {

int wedge_sign(Mask a, Mask b) {
  std::size_t inversions = 0;
  for (Mask rest = b; rest != 0; rest &= rest - 1) {
    const int j = __builtin_ctzll(rest);
    const Mask above = j >= 63 ? 0 : (~Mask{0} << (j + 1));
    inversions += popcount(a & above);
  }
  return (inversions & 1U) ? -1 : 1;
}

std::vector<int> indices_of(Mask m) {
  std::vector<int> out;
  for (; m != 0; m &= m - 1) out.push_back(__builtin_ctzll(m) + 1);
  return out;
}

KForm::KForm(std::size_t ambient_dim, std::size_t degree) : ambient_(ambient_dim), degree_(degree) {
  if (ambient_dim > kMaxGenerators) throw DimensionMismatch("at most 63 generators are supported");
}

KForm KForm::constant(std::size_t ambient_dim, const Rational& value) {
  KForm f(ambient_dim, 0);
  f.add(0, value);
  return f;
}

KForm KForm::basis(std::size_t ambient_dim, Mask mask, const Rational& coeff) {
  KForm f(ambient_dim, popcount(mask));
  f.add(mask, coeff);
  return f;
}

KForm KForm::monomial(std::size_t ambient_dim, std::initializer_list<int> labels, const Rational& coeff) {
  KForm f(ambient_dim, labels.size());
  Mask mask = 0;
  int sign = 1;
  for (int label : labels) {
    if (label < 1 || static_cast<std::size_t>(label) > ambient_dim)
      throw DimensionMismatch("generator label out of range");
    const Mask bit = Mask{1} << (label - 1);
    if (mask & bit) return f;
    sign *= wedge_sign(mask, bit);
    mask |= bit;
  }
  f.add(mask, sign * coeff);
  return f;
}

Rational KForm::coeff(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void KForm::add(Mask mask, const Rational& c) {
  if (popcount(mask) != degree_) throw DimensionMismatch("term degree differs from form degree");
  if (ambient_ < 64 && (mask >> ambient_) != 0) throw DimensionMismatch("term uses a generator out of range");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void KForm::check_compatible(const KForm& other) const {
  if (ambient_ != other.ambient_) throw DimensionMismatch("forms live in different ambient dimensions");
  if (degree_ != other.degree_ && !is_zero() && !other.is_zero())
    throw DimensionMismatch("cannot add forms of different degrees");
}

KForm& KForm::operator+=(const KForm& other) {
  check_compatible(other);
  if (is_zero()) degree_ = other.degree_;
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

KForm& KForm::operator-=(const KForm& other) {
  check_compatible(other);
  if (is_zero()) degree_ = other.degree_;
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

KForm& KForm::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

KForm KForm::operator-() const {
  KForm f = *this;
  for (auto& [m, c] : f.terms_) c = -c;
  return f;
}

KForm wedge(const KForm& a, const KForm& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("wedge: ambient dimensions differ");
  KForm out(a.ambient_dim(), a.degree() + b.degree());
  if (out.degree() > a.ambient_dim()) return out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      out.add(ma | mb, wedge_sign(ma, mb) * ca * cb);
    }
  return out;
}

Bivector Bivector::from_antisymmetric(const Matrix& p) {
  if (p.rows() != p.cols()) throw DimensionMismatch("bivector matrix must be square");
  Bivector b;
  b.ambient_dim = p.rows();
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = i + 1; j < p.cols(); ++j)
      if (sgn(p(i, j)) != 0) b.coeffs.emplace(std::make_pair(i, j), p(i, j));
  return b;
}

KForm interior(std::size_t i, const KForm& a) {
  if (i >= a.ambient_dim()) throw DimensionMismatch("interior: generator out of range");
  if (a.degree() == 0) return KForm(a.ambient_dim(), 0);
  KForm out(a.ambient_dim(), a.degree() - 1);
  const Mask bit = Mask{1} << i;
  const Mask below = bit - 1;
  for (const auto& [m, c] : a.terms()) {
    if (!(m & bit)) continue;
    const bool odd = popcount(m & below) & 1U;
    out.add(m & ~bit, odd ? Rational(-c) : c);
  }
  return out;
}

KForm contract(const Bivector& p, const KForm& a) {
  if (p.ambient_dim != a.ambient_dim()) throw DimensionMismatch("contract: ambient dimensions differ");
  if (a.degree() < 2) return KForm(a.ambient_dim(), 0);
  KForm out(a.ambient_dim(), a.degree() - 2);
  for (const auto& [ij, coeff] : p.coeffs) {
    KForm term = interior(ij.first, interior(ij.second, a));
    term *= coeff;
    out += term;
  }
  return out;
}

namespace {

// Images of the coframe generators under the pullback along `map`.
std::vector<KForm> pulled_generators(const Matrix& map) {
  std::vector<KForm> out;
  out.reserve(map.rows());
  for (std::size_t i = 0; i < map.rows(); ++i) {
    KForm g(map.cols(), 1);
    for (std::size_t j = 0; j < map.cols(); ++j) g.add(Mask{1} << j, map(i, j));
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

KForm linear_pullback(const Matrix& map, const KForm& a) {
  if (map.rows() != a.ambient_dim()) throw DimensionMismatch("pullback: map rows differ from form ambient dimension");
  const std::size_t source = map.cols();
  const std::vector<KForm> images = pulled_generators(map);
  KForm out(source, a.degree());
  for (const auto& [m, c] : a.terms()) {
    KForm term = KForm::constant(source, c);
    for (Mask rest = m; rest != 0 && !term.is_zero(); rest &= rest - 1)
      term = wedge(term, images[static_cast<std::size_t>(__builtin_ctzll(rest))]);
    if (!term.is_zero()) out += term;
  }
  return out;
}

KForm j_action(const Matrix& j, const KForm& a) {
  if (j.rows() != j.cols() || j.rows() != a.ambient_dim())
    throw DimensionMismatch("j_action: J must be n x n for forms on n generators");
  return linear_pullback(j, a);
}

KForm j_derivation(const Matrix& j, const KForm& a) {
  if (j.rows() != j.cols() || j.rows() != a.ambient_dim())
    throw DimensionMismatch("j_derivation: J must be n x n for forms on n generators");
  const std::size_t n = a.ambient_dim();
  const std::vector<KForm> images = pulled_generators(j);
  KForm out(n, a.degree());
  for (const auto& [m, c] : a.terms()) {
    for (Mask rest = m; rest != 0; rest &= rest - 1) {
      const Mask bit = rest & (~rest + 1);
      const std::size_t i = static_cast<std::size_t>(__builtin_ctzll(bit));
      const Mask before = m & (bit - 1);
      const Mask after = m & ~(bit | (bit - 1));
      KForm term = wedge(wedge(KForm::basis(n, before, c), images[i]), KForm::basis(n, after));
      out += term;
    }
  }
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

FormBasis::FormBasis(std::size_t ambient_dim, std::size_t degree) : ambient_(ambient_dim), degree_(degree) {
  if (ambient_dim > kMaxGenerators) throw DimensionMismatch("at most 63 generators are supported");
  if (degree > ambient_dim) return;
  // Lexicographic enumeration of k-subsets of {0..n-1}.
  std::vector<std::size_t> idx(degree);
  for (std::size_t i = 0; i < degree; ++i) idx[i] = i;
  while (true) {
    Mask m = 0;
    for (auto i : idx) m |= Mask{1} << i;
    index_.emplace(m, masks_.size());
    masks_.push_back(m);
    std::size_t pos = degree;
    while (pos > 0 && idx[pos - 1] == ambient_dim - degree + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < degree; ++i) idx[i] = idx[i - 1] + 1;
  }
}

Vector FormBasis::coordinates(const KForm& a) const {
  if (a.ambient_dim() != ambient_) throw DimensionMismatch("coordinates: ambient dimension mismatch");
  Vector v(size());
  if (a.is_zero()) return v;
  if (a.degree() != degree_) throw DimensionMismatch("coordinates: degree mismatch");
  for (const auto& [m, c] : a.terms()) v[index_.at(m)] = c;
  return v;
}

KForm FormBasis::form(std::span<const Rational> coords) const {
  if (coords.size() != size()) throw DimensionMismatch("form: coordinate vector has the wrong length");
  KForm f(ambient_, degree_);
  for (std::size_t i = 0; i < coords.size(); ++i) f.add(masks_[i], coords[i]);
  return f;
}

Matrix operator_matrix(std::size_t ambient_dim, std::size_t in_degree, std::size_t out_degree,
                       const std::function<KForm(const KForm&)>& op) {
  FormBasis in(ambient_dim, in_degree);
  FormBasis out(ambient_dim, out_degree);
  Matrix m(out.size(), in.size());
  for (std::size_t c = 0; c < in.size(); ++c) {
    KForm image = op(in.element(c));
    if (image.is_zero()) continue;
    if (image.degree() != out_degree) throw DimensionMismatch("operator_matrix: operator changed degree unexpectedly");
    for (const auto& [mask, coeff] : image.terms()) m(out.index_of(mask), c) = coeff;
  }
  return m;
}

}  // namespace sympcoh
