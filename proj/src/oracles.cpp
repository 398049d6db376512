#include "kahler/oracles.hpp"

#include <stdexcept>

namespace kahler {

Rational appendix_R2_base(const DomainSpec& spec) {
  const long n = spec.n();
  Rational out;
  switch (spec.kind()) {
    case DomainKind::TypeI: {
      const long m = spec.m();
      out = Rational(BigInt(2) * m * n * (m * n + 1), BigInt(m + n) * (m + n));
      break;
    }
    case DomainKind::TypeII:
      out = Rational(BigInt(n) * (n + 1) * (n * n - 5 * n + 12) - 16 * n, BigInt(4) * (n - 1) * (n - 1));
      break;
    case DomainKind::TypeIII:
      out = Rational(BigInt(n) * (n + 1) * (n * n + 19 * n - 60) + 96 * n, BigInt(4) * (n + 1) * (n + 1));
      break;
    case DomainKind::TypeIV:
      out = Rational(BigInt(3 * n - 2), BigInt(n));
      break;
    default:
      throw std::invalid_argument("no closed form of |R_gB|^2(0) for exceptional domain " + spec.label());
  }
  out.canonicalize();
  return out;
}

Rational exact_R2_base(const DomainSpec& spec) {
  if (spec.kind() != DomainKind::TypeIII) return appendix_R2_base(spec);
  const long n = spec.n();
  Rational out(BigInt(n) * (n * n + 3 * n + 4), BigInt(4) * (n + 1));
  out.canonicalize();
  return out;
}

OracleInputs<Rational> oracle_inputs(const DomainSpec& base, const Rational& mu, const Rational& t) {
  if (mu <= 0) throw std::invalid_argument("oracle inputs: mu must be positive");
  return {base.dimension(), base.genus(), mu, t, exact_R2_base(base)};
}

OracleInputs<double> to_double(const OracleInputs<Rational>& in) {
  return {in.d, in.gamma, in.mu.get_d(), in.t.get_d(), in.base_r2.get_d()};
}

OracleValues oracle_values_at_origin(const OracleInputs<double>& in) {
  return {scalar_curvature_formula(in, 1.0), r2_formula(in), ric2_formula(in), lap_k_formula(in), a2_formula(in)};
}

}  // namespace kahler
