#pragma once

// Test-only oracles written independently of the library: polynomial
// regrouping of the curvature closed forms in t = |w|^2, numeric potentials
// and central finite differences.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "kahler/domain.hpp"
#include "kahler/rational.hpp"

namespace kahler::testing {

/// Polynomial in t with exact rational coefficients, lowest degree first.
struct RatPoly {
  std::vector<Rational> c;

  static RatPoly constant(const Rational& a) { return {{a}}; }
  static RatPoly t() { return {{Rational(0), Rational(1)}}; }

  Rational coeff(std::size_t k) const { return k < c.size() ? c[k] : Rational(0); }

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    RatPoly out;
    out.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t k = 0; k < out.c.size(); ++k) out.c[k] = a.coeff(k) + b.coeff(k);
    return out;
  }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    RatPoly out;
    out.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    }
    return out;
  }
  friend RatPoly operator*(const Rational& s, const RatPoly& a) { return constant(s) * a; }
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + Rational(-1) * b; }
};

/// a2(0, w) as a polynomial in t, assembled term by term from the closed
/// forms of k, |R|^2, Delta k and |Ric|^2 at z = 0. Nothing here is shared
/// with the library's coefficient code.
inline RatPoly regrouped_a2(long d_in, long gamma_in, const Rational& mu, const Rational& base_r2) {
  const Rational d(d_in), g(gamma_in);
  const Rational c = (mu * (d + 1) - g) / mu;
  const RatPoly one = RatPoly::constant(1);
  const RatPoly t = RatPoly::t();
  const RatPoly s = one - t;  // 1 - t

  // k = d c (1 - t) - (d+1)(d+2)
  const RatPoly k = (d * c) * s - RatPoly::constant((d + 1) * (d + 2));
  // |R|^2 = (1-t)^2 (g/mu)^2 R_B + 4 t (1-t) d g / mu + 2 d (d+1) t^2 + 4 (d+1)
  const Rational ratio = g / mu;
  const RatPoly r2 = (ratio * ratio * base_r2) * (s * s) + (Rational(4) * d * ratio) * (t * s) +
                     (Rational(2) * d * (d + 1)) * (t * t) + RatPoly::constant(Rational(4) * (d + 1));
  // Delta k = -d c (1-t)((d-1) t + 1)
  const RatPoly lap = (-d * c) * (s * ((d - 1) * t + one));
  // |Ric|^2 = d c^2 (1-t)^2 - 2 d (d+2) c (1-t) + (d+1)(d+2)^2
  const RatPoly ric2 = (d * c * c) * (s * s) - (Rational(2) * d * (d + 2) * c) * s +
                       RatPoly::constant((d + 1) * (d + 2) * (d + 2));

  return Rational(1, 3) * lap + Rational(1, 24) * r2 - Rational(1, 6) * ric2 + Rational(1, 8) * (k * k);
}

/// Random positive rational p/q with 1 <= p <= pmax, 1 <= q <= qmax.
inline Rational random_rational(std::mt19937_64& gen, long pmax, long qmax) {
  std::uniform_int_distribution<long> p(1, pmax), q(1, qmax);
  Rational r(p(gen), q(gen));
  r.canonicalize();
  return r;
}

/// Phi(z, w) = -log(N(z)^mu - |w|^2), evaluated directly.
inline double hartogs_potential_value(const DomainSpec& base, double mu, const Eigen::VectorXcd& z, std::complex<double> w) {
  return -std::log(std::pow(generic_norm_value(base, z), mu) - std::norm(w));
}

/// d^2 f / dz_i dzbar_j by central differences on real and imaginary parts:
/// (1/4)(d_xi - i d_yi)(d_xj + i d_yj) f.
inline std::complex<double> fd_mixed(const std::function<double(const Eigen::VectorXcd&)>& f, const Eigen::VectorXcd& p,
                                     int i, int j, double h) {
  const std::complex<double> I(0, 1);
  auto shifted = [&](std::complex<double> di, std::complex<double> dj) {
    Eigen::VectorXcd q = p;
    q(i) += di;
    q(j) += dj;
    return f(q);
  };
  // Second partial along directions u (for i) and v (for j).
  auto second = [&](std::complex<double> u, std::complex<double> v) {
    return (shifted(h * u, h * v) - shifted(h * u, -h * v) - shifted(-h * u, h * v) + shifted(-h * u, -h * v)) /
           (4 * h * h);
  };
  const double xx = second(1, 1), xy = second(1, I), yx = second(I, 1), yy = second(I, I);
  return 0.25 * ((xx + yy) + I * (xy - yx));
}

/// fd_mixed with one Richardson step: the h^2 error term cancels.
inline std::complex<double> fd_mixed_richardson(const std::function<double(const Eigen::VectorXcd&)>& f,
                                                const Eigen::VectorXcd& p, int i, int j, double h) {
  return (4.0 * fd_mixed(f, p, i, j, h / 2) - fd_mixed(f, p, i, j, h)) / 3.0;
}

}  // namespace kahler::testing
