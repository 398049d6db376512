#pragma once

// Closed-form curvature invariants of Cartan-Hartogs domains, generic over
// the number type: instantiate with Rational for exact evaluation or with
// double at the floating-point comparison boundary.

#include "kahler/domain.hpp"
#include "kahler/rational.hpp"

namespace kahler {

/// Parameters of the closed forms. `t` stands for |w|^2 and `base_r2` for
/// |R_{g_B}|^2 at the origin of the base.
template <typename Num>
struct OracleInputs {
  long d;
  long gamma;
  Num mu;
  Num t;
  Num base_r2;
};

template <typename Num>
struct QuadraticCoeffs {
  Num c0;  // |w|^4
  Num c1;  // |w|^2
  Num c2;  // constant
};

/// c = (mu (d+1) - gamma) / mu. Derived, never stored.
template <typename Num>
Num c_of(const OracleInputs<Num>& in) {
  return Num(Num(in.mu * Num(in.d + 1)) - Num(in.gamma)) / in.mu;
}

/// Scalar curvature of g(mu) at any point, given n_mu = N(z, zbar)^mu and t.
template <typename Num>
Num scalar_curvature_formula(const OracleInputs<Num>& in, const Num& n_mu) {
  const Num d(in.d);
  const Num dc = d * c_of(in);
  return Num(dc * Num(n_mu - in.t) / n_mu) - Num(d + 2) * Num(d + 1);
}

/// |R_{g(mu)}|^2 at (0, w), with |R_{g^{Omega(mu)}}|^2 = (gamma/mu)^2 base_r2
/// and k_{g^{Omega(mu)}} = -d gamma / mu.
template <typename Num>
Num r2_formula(const OracleInputs<Num>& in) {
  const Num d(in.d);
  const Num ratio = Num(in.gamma) / in.mu;
  const Num s = Num(1) - in.t;
  const Num k_base = -Num(d * ratio);
  return Num(s * s * ratio * ratio * in.base_r2) - Num(Num(4) * in.t * s * k_base) +
         Num(Num(2) * d * Num(d + 1) * in.t * in.t) + Num(Num(4) * Num(d + 1));
}

/// Delta k at (0, w).
template <typename Num>
Num lap_k_formula(const OracleInputs<Num>& in) {
  const Num d(in.d);
  return -Num(d * c_of(in) * Num(Num(1) - in.t) * Num(Num(d - 1) * in.t + Num(1)));
}

/// |Ric|^2 at (0, w):  d c^2 (1-t)^2 - 2d(d+2) c (1-t) + (d+1)(d+2)^2.
template <typename Num>
Num ric2_formula(const OracleInputs<Num>& in) {
  const Num d(in.d);
  const Num c = c_of(in);
  const Num s = Num(1) - in.t;
  return Num(d * c * c * s * s) - Num(Num(2) * d * Num(d + 2) * c * s) + Num(Num(d + 1) * Num(d + 2) * Num(d + 2));
}

/// a2 = Delta k / 3 + |R|^2 / 24 - |Ric|^2 / 6 + k^2 / 8 at (0, w).
template <typename Num>
Num a2_formula(const OracleInputs<Num>& in) {
  const Num k = scalar_curvature_formula(in, Num(1));
  return Num(lap_k_formula(in) / Num(3)) + Num(r2_formula(in) / Num(24)) - Num(ric2_formula(in) / Num(6)) +
         Num(k * k / Num(8));
}

/// Coefficients of a2(0, w) = c0 t^2 + c1 t + c2 (t is ignored).
template <typename Num>
QuadraticCoeffs<Num> a2_quadratic_coeffs(const OracleInputs<Num>& in) {
  const Num d(in.d);
  const Num c = c_of(in);
  const Num ratio = Num(in.gamma) / in.mu;
  const Num big_r = ratio * ratio * in.base_r2;
  const Num one = 1;
  QuadraticCoeffs<Num> out;
  out.c0 = Num(one / 3 * d * c * Num(d - 1)) + Num(big_r / 24) + Num(one / 12 * d * Num(d + 1)) -
           Num(one / 6 * d * ratio) - Num(one / 6 * d * c * c) + Num(one / 8 * d * d * c * c);
  out.c1 = -Num(one / 3 * d * c * Num(d - 2)) - Num(big_r / 12) + Num(one / 6 * d * ratio) -
           Num(one / 3 * c * d * Num(d + 2)) + Num(one / 3 * d * c * c) +
           Num(one / 4 * d * Num(d + 1) * Num(d + 2) * c) - Num(one / 4 * d * d * c * c);
  const Num k0 = Num(d * c) - Num(d + 1) * Num(d + 2);
  out.c2 = -Num(one / 3 * d * c) + Num(Num(big_r + Num(4) * Num(d + 1)) / 24) -
           Num(Num(Num(d * c * c) - Num(Num(2) * d * Num(d + 2) * c) + Num(Num(d + 1) * Num(d + 2) * Num(d + 2))) / 6) +
           Num(k0 * k0 / 8);
  return out;
}

/// Tabulated closed forms of |R_{g_B}|^2(0) for the four classical families.
/// Throws std::invalid_argument for exceptional domains.
Rational appendix_R2_base(const DomainSpec& spec);

/// |R_{g_B}|^2(0) as actually realized by the Bergman metric. Equal to
/// appendix_R2_base except for type III with n >= 3, whose tabulated closed
/// form is wrong; there this returns n(n^2+3n+4) / (4(n+1)).
Rational exact_R2_base(const DomainSpec& spec);

/// Oracle inputs for a Hartogs domain over `base` (base_r2 = exact_R2_base).
OracleInputs<Rational> oracle_inputs(const DomainSpec& base, const Rational& mu, const Rational& t);

OracleInputs<double> to_double(const OracleInputs<Rational>& in);

/// All closed-form predictions at one point, for reports.
struct OracleValues {
  double k;
  double norm_R_sq;
  double norm_Ric_sq;
  double lap_k;
  double a2;
};

/// Predictions at (0, w), |w|^2 = in.t.
OracleValues oracle_values_at_origin(const OracleInputs<double>& in);

}  // namespace kahler
