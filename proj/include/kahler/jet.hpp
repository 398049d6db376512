#pragma once

// Bidegree-truncated multivariate Taylor series ("jets") in m holomorphic
// variables z_1..z_m and m antiholomorphic variables zbar_1..zbar_m, treated
// as 2m independent formal variables. A jet represents a function through its
// Taylor coefficients at a base point; variables are offsets from that point.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "kahler/monomial_basis.hpp"

namespace kahler {

enum class Character { Holo, Anti };

/// One formal variable: z_index (Holo) or zbar_index (Anti).
struct Variable {
  Character character;
  int index;
};

inline Variable holo(int index) { return {Character::Holo, index}; }
inline Variable anti(int index) { return {Character::Anti, index}; }

namespace detail {

template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};

template <typename Scalar>
auto real_part(const Scalar& x) {
  if constexpr (is_complex<Scalar>::value) return x.real();
  else return x;
}

template <typename Scalar>
auto imag_part(const Scalar& x) {
  if constexpr (is_complex<Scalar>::value) return x.imag();
  else return Scalar{0};
}

template <typename Scalar>
Scalar conj(const Scalar& x) {
  if constexpr (is_complex<Scalar>::value) return std::conj(x);
  else return x;
}

}  // namespace detail

template <typename Scalar>
class BasicJet {
 public:
  using scalar_type = Scalar;

  /// An empty jet; only assignable. Arithmetic on it throws.
  BasicJet() = default;

  explicit BasicJet(std::shared_ptr<const JetSpace> space)
      : space_(std::move(space)), coeffs_(space_->size(), Scalar{}) {}

  static BasicJet constant(Scalar c, int num_vars, BidegreeCap cap) {
    BasicJet j(jet_space(num_vars, cap));
    j.coeffs_[0] = c;
    return j;
  }

  /// The coordinate function of one variable, measured from the base point.
  static BasicJet variable(Variable v, int num_vars, BidegreeCap cap) {
    if (v.index < 0 || v.index >= num_vars) {
      throw std::invalid_argument("jet variable index " + std::to_string(v.index) +
                                  " out of range for " + std::to_string(num_vars) + " variables");
    }
    const int degree = v.character == Character::Holo ? cap.holo_degree : cap.anti_degree;
    if (degree < 1) throw std::invalid_argument("unit exponent exceeds jet cap");
    BasicJet j(jet_space(num_vars, cap));
    MultiIndex idx{std::vector<int>(num_vars, 0), std::vector<int>(num_vars, 0)};
    (v.character == Character::Holo ? idx.holo : idx.anti)[v.index] = 1;
    j.set_coefficient(idx, Scalar{1});
    return j;
  }

  bool empty() const { return !space_; }
  int num_vars() const { return require().num_vars; }
  BidegreeCap cap() const { return require().cap; }
  const JetSpace& space() const { return require(); }
  const std::shared_ptr<const JetSpace>& space_ptr() const { return space_; }

  std::size_t holo_size() const { return require().holo->size(); }
  std::size_t anti_size() const { return require().anti->size(); }

  /// Raw access by (holo basis index, anti basis index).
  const Scalar& at(std::size_t h, std::size_t a) const { return coeffs_[h * anti_size() + a]; }
  Scalar& at(std::size_t h, std::size_t a) { return coeffs_[h * anti_size() + a]; }

  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  std::vector<Scalar>& coefficients() { return coeffs_; }

  const Scalar& constant_term() const {
    require();
    return coeffs_[0];
  }
  Scalar& constant_term() {
    require();
    return coeffs_[0];
  }

  /// Taylor coefficient at `idx`; zero when `idx` is outside the cap.
  Scalar coefficient(const MultiIndex& idx) const {
    auto [h, a] = locate(idx);
    if (h < 0 || a < 0) return Scalar{};
    return at(static_cast<std::size_t>(h), static_cast<std::size_t>(a));
  }

  void set_coefficient(const MultiIndex& idx, Scalar value) {
    auto [h, a] = locate(idx);
    if (h < 0 || a < 0) throw std::invalid_argument("multi-index exceeds jet cap");
    at(static_cast<std::size_t>(h), static_cast<std::size_t>(a)) = value;
  }

  BasicJet& operator+=(const BasicJet& other) {
    check_compatible(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
  }
  BasicJet& operator-=(const BasicJet& other) {
    check_compatible(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
  }
  BasicJet& operator*=(Scalar s) {
    require();
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  BasicJet& operator+=(Scalar s) {
    constant_term() += s;
    return *this;
  }
  BasicJet& operator-=(Scalar s) {
    constant_term() -= s;
    return *this;
  }
  BasicJet& operator*=(const BasicJet& other) {
    *this = *this * other;
    return *this;
  }

  friend BasicJet operator+(BasicJet a, const BasicJet& b) { return a += b; }
  friend BasicJet operator-(BasicJet a, const BasicJet& b) { return a -= b; }
  friend BasicJet operator+(BasicJet a, Scalar s) { return a += s; }
  friend BasicJet operator+(Scalar s, BasicJet a) { return a += s; }
  friend BasicJet operator-(BasicJet a, Scalar s) { return a -= s; }
  friend BasicJet operator-(Scalar s, const BasicJet& a) { return (-a) += s; }
  friend BasicJet operator*(BasicJet a, Scalar s) { return a *= s; }
  friend BasicJet operator*(Scalar s, BasicJet a) { return a *= s; }
  friend BasicJet operator-(BasicJet a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  /// Truncated Cauchy product.
  friend BasicJet operator*(const BasicJet& a, const BasicJet& b) {
    a.check_compatible(b);
    BasicJet out(a.space_);
    const auto& holo = *a.space_->holo;
    const auto& antib = *a.space_->anti;
    const std::size_t na = antib.size();
    const Scalar zero{};
    for (std::size_t hi = 0; hi < holo.size(); ++hi) {
      const Scalar* arow = &a.coeffs_[hi * na];
      if (std::all_of(arow, arow + na, [&](const Scalar& c) { return c == zero; })) continue;
      for (const auto& hp : holo.products(hi)) {
        const Scalar* brow = &b.coeffs_[hp.other * na];
        Scalar* orow = &out.coeffs_[hp.result * na];
        for (std::size_t ai = 0; ai < na; ++ai) {
          const Scalar av = arow[ai];
          if (av == zero) continue;
          for (const auto& ap : antib.products(ai)) orow[ap.result] += av * brow[ap.other];
        }
      }
    }
    return out;
  }

  /// Largest coefficient magnitude of a - b.
  friend double max_abs_difference(const BasicJet& a, const BasicJet& b) {
    a.check_compatible(b);
    double m = 0.0;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) m = std::max(m, static_cast<double>(std::abs(a.coeffs_[i] - b.coeffs_[i])));
    return m;
  }

  void check_compatible(const BasicJet& other) const {
    const JetSpace& s = require();
    const JetSpace& o = other.require();
    if (&s != &o && (s.num_vars != o.num_vars || !(s.cap == o.cap))) {
      throw std::invalid_argument("jet shape mismatch: variables or cap differ");
    }
  }

 private:
  const JetSpace& require() const {
    if (!space_) throw std::logic_error("operation on an empty jet");
    return *space_;
  }

  std::pair<std::int64_t, std::int64_t> locate(const MultiIndex& idx) const {
    const JetSpace& s = require();
    if (static_cast<int>(idx.holo.size()) != s.num_vars || static_cast<int>(idx.anti.size()) != s.num_vars) {
      throw std::invalid_argument("multi-index length does not match jet variable count");
    }
    return {s.holo->find(idx.holo), s.anti->find(idx.anti)};
  }

  std::shared_ptr<const JetSpace> space_;
  std::vector<Scalar> coeffs_;
};

using Jet = BasicJet<std::complex<double>>;

/// Evaluates sum_k series[k] * (a - a0)^k, where a0 is the constant term of a.
/// The nilpotent part vanishes beyond power holo_degree + anti_degree.
template <typename Scalar>
BasicJet<Scalar> compose_series(const BasicJet<Scalar>& a, const std::vector<Scalar>& series) {
  BasicJet<Scalar> x = a;
  x.constant_term() = Scalar{};
  const auto cap = a.cap();
  const std::size_t terms = std::min<std::size_t>(series.size(), static_cast<std::size_t>(cap.holo_degree + cap.anti_degree) + 1);
  BasicJet<Scalar> result(a.space_ptr());
  if (terms == 0) return result;
  result.constant_term() = series[terms - 1];
  for (std::size_t k = terms - 1; k-- > 0;) {
    result = result * x;
    result.constant_term() += series[k];
  }
  return result;
}

namespace detail {
template <typename Scalar>
std::size_t series_length(const BasicJet<Scalar>& a) {
  return static_cast<std::size_t>(a.cap().holo_degree + a.cap().anti_degree) + 1;
}
}  // namespace detail

template <typename Scalar>
BasicJet<Scalar> reciprocal(const BasicJet<Scalar>& a) {
  const Scalar a0 = a.constant_term();
  if (a0 == Scalar{}) throw std::domain_error("jet reciprocal: zero constant term");
  const std::size_t n = detail::series_length(a);
  std::vector<Scalar> series(n);
  const Scalar inv = Scalar{1} / a0;
  Scalar term = inv;
  for (std::size_t k = 0; k < n; ++k) {
    series[k] = term;
    term *= -inv;
  }
  return compose_series(a, series);
}

/// Principal-branch logarithm.
template <typename Scalar>
BasicJet<Scalar> log(const BasicJet<Scalar>& a) {
  const Scalar a0 = a.constant_term();
  const auto re = detail::real_part(a0);
  const auto im = detail::imag_part(a0);
  if (a0 == Scalar{} || (im == 0 && re < 0)) {
    throw std::domain_error("jet log: constant term is zero or on the branch cut");
  }
  const std::size_t n = detail::series_length(a);
  std::vector<Scalar> series(n);
  series[0] = std::log(a0);
  const Scalar inv = Scalar{1} / a0;
  Scalar power = inv;
  for (std::size_t k = 1; k < n; ++k) {
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    series[k] = power * Scalar(sign / static_cast<double>(k));
    power *= inv;
  }
  return compose_series(a, series);
}

template <typename Scalar>
BasicJet<Scalar> exp(const BasicJet<Scalar>& a) {
  const std::size_t n = detail::series_length(a);
  std::vector<Scalar> series(n);
  Scalar term = std::exp(a.constant_term());
  for (std::size_t k = 0; k < n; ++k) {
    series[k] = term;
    term *= Scalar(1.0 / static_cast<double>(k + 1));
  }
  return compose_series(a, series);
}

/// a^exponent = exp(exponent * log a); requires a positive real constant term.
template <typename Scalar>
BasicJet<Scalar> real_power(const BasicJet<Scalar>& a, double exponent) {
  const Scalar a0 = a.constant_term();
  const double re = static_cast<double>(detail::real_part(a0));
  const double im = static_cast<double>(detail::imag_part(a0));
  if (!(re > 0.0) || std::abs(im) > 1e-12 * re) {
    throw std::domain_error("jet real power: constant term is not a positive real");
  }
  return exp(log(a) * Scalar(exponent));
}

/// Derivative with respect to one variable; the cap drops by one in that
/// character.
template <typename Scalar>
BasicJet<Scalar> differentiate(const BasicJet<Scalar>& a, Variable v) {
  const int m = a.num_vars();
  if (v.index < 0 || v.index >= m) throw std::invalid_argument("jet derivative: variable index out of range");
  BidegreeCap cap = a.cap();
  const bool is_holo = v.character == Character::Holo;
  int& degree = is_holo ? cap.holo_degree : cap.anti_degree;
  if (degree < 1) throw std::invalid_argument("jet derivative: cap has no room in that character");
  degree -= 1;
  BasicJet<Scalar> out(jet_space(m, cap));
  const auto& src = a.space();
  const auto& dst = out.space();
  if (is_holo) {
    for (std::size_t h = 0; h < src.holo->size(); ++h) {
      auto low = src.holo->lower(h, v.index);
      if (low.index < 0) continue;
      // Holo basis of degree-1 is a prefix of the degree basis.
      for (std::size_t an = 0; an < dst.anti->size(); ++an) {
        out.at(static_cast<std::size_t>(low.index), an) = a.at(h, an) * Scalar(static_cast<double>(low.exponent));
      }
    }
  } else {
    for (std::size_t h = 0; h < dst.holo->size(); ++h) {
      for (std::size_t an = 0; an < src.anti->size(); ++an) {
        auto low = src.anti->lower(an, v.index);
        if (low.index < 0) continue;
        out.at(h, static_cast<std::size_t>(low.index)) = a.at(h, an) * Scalar(static_cast<double>(low.exponent));
      }
    }
  }
  return out;
}

/// Drops every monomial above `cap` (which must not exceed the jet's cap).
template <typename Scalar>
BasicJet<Scalar> truncate(const BasicJet<Scalar>& a, BidegreeCap cap) {
  const BidegreeCap from = a.cap();
  if (cap.holo_degree > from.holo_degree || cap.anti_degree > from.anti_degree) {
    throw std::invalid_argument("jet truncate: target cap exceeds source cap");
  }
  BasicJet<Scalar> out(jet_space(a.num_vars(), cap));
  // Lower-degree bases are prefixes of higher-degree ones.
  for (std::size_t h = 0; h < out.holo_size(); ++h) {
    for (std::size_t an = 0; an < out.anti_size(); ++an) out.at(h, an) = a.at(h, an);
  }
  return out;
}

/// Mixed partial derivative at the base point: coefficient times the product
/// of the factorials of all exponents.
template <typename Scalar>
Scalar extract_partial(const BasicJet<Scalar>& a, const MultiIndex& idx) {
  const auto& s = a.space();
  if (static_cast<int>(idx.holo.size()) != s.num_vars || static_cast<int>(idx.anti.size()) != s.num_vars) {
    throw std::invalid_argument("extract_partial: multi-index length mismatch");
  }
  const auto h = s.holo->find(idx.holo);
  const auto an = s.anti->find(idx.anti);
  if (h < 0 || an < 0) throw std::invalid_argument("extract_partial: multi-index exceeds jet cap");
  const auto hu = static_cast<std::size_t>(h);
  const auto au = static_cast<std::size_t>(an);
  return a.at(hu, au) * Scalar(s.holo->factorial_weight(hu) * s.anti->factorial_weight(au));
}

/// Partial d^2/(dz_i dzbar_j) at the base point.
template <typename Scalar>
Scalar extract_mixed(const BasicJet<Scalar>& a, int i, int j) {
  MultiIndex idx{std::vector<int>(a.num_vars(), 0), std::vector<int>(a.num_vars(), 0)};
  idx.holo[i] = 1;
  idx.anti[j] = 1;
  return extract_partial(a, idx);
}

/// Row-major square-or-rectangular matrix of jets.
template <typename Scalar>
class BasicJetMatrix {
 public:
  BasicJetMatrix() = default;
  BasicJetMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BasicJet<Scalar>& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BasicJet<Scalar>& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BasicJet<Scalar>> data_;
};

using JetMatrix = BasicJetMatrix<std::complex<double>>;

inline constexpr std::size_t kMaxJetDeterminantSize = 8;

namespace detail {

template <typename Scalar>
BasicJet<Scalar> det_leibniz(const BasicJetMatrix<Scalar>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  BasicJet<Scalar> total(m(0, 0).space_ptr());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    BasicJet<Scalar> term = m(0, perm[0]);
    for (std::size_t i = 1; i < n; ++i) term = term * m(i, perm[i]);
    if (inversions % 2 == 0) total += term;
    else total -= term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Bareiss fraction-free elimination; pivots on the largest constant-term
// magnitude in the remaining block. Division by the previous pivot is
// multiplication by its jet reciprocal.
template <typename Scalar>
BasicJet<Scalar> det_bareiss(BasicJetMatrix<Scalar> m) {
  const std::size_t n = m.rows();
  double sign = 1.0;
  BasicJet<Scalar> previous_inverse;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pr = k, pc = k;
    double best = -1.0;
    for (std::size_t i = k; i < n; ++i) {
      for (std::size_t j = k; j < n; ++j) {
        const double mag = std::abs(m(i, j).constant_term());
        if (mag > best) {
          best = mag;
          pr = i;
          pc = j;
        }
      }
    }
    if (!(best > 0.0)) throw std::domain_error("jet determinant: all pivot candidates have zero constant term");
    if (pr != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pr, j), m(k, j));
      sign = -sign;
    }
    if (pc != k) {
      for (std::size_t i = 0; i < n; ++i) std::swap(m(i, pc), m(i, k));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BasicJet<Scalar> v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = previous_inverse.empty() ? std::move(v) : v * previous_inverse;
      }
    }
    previous_inverse = reciprocal(m(k, k));
  }
  return m(n - 1, n - 1) * Scalar(sign);
}

}  // namespace detail

template <typename Scalar>
BasicJet<Scalar> det(const BasicJetMatrix<Scalar>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("jet determinant: matrix is not square");
  if (n == 0 || n > kMaxJetDeterminantSize) {
    throw std::invalid_argument("jet determinant: size must be in [1," + std::to_string(kMaxJetDeterminantSize) + "]");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(0, 0).check_compatible(m(i, j));
  }
  if (n <= 4) return detail::det_leibniz(m);
  return detail::det_bareiss(m);
}

/// The jet of conj(f) viewed as a series: coefficient at (a, b) becomes the
/// conjugate of the coefficient at (b, a). Requires a symmetric cap.
template <typename Scalar>
BasicJet<Scalar> conjugate_swap(const BasicJet<Scalar>& f) {
  const auto cap = f.cap();
  if (cap.holo_degree != cap.anti_degree) throw std::invalid_argument("conjugate_swap: cap must be symmetric");
  BasicJet<Scalar> out(f.space_ptr());
  for (std::size_t h = 0; h < f.holo_size(); ++h) {
    for (std::size_t a = 0; a < f.anti_size(); ++a) out.at(a, h) = detail::conj(f.at(h, a));
  }
  return out;
}

}  // namespace kahler
