#include "kahler/case_analysis.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "kahler/oracles.hpp"

namespace kahler {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial IntPolynomial::linear(long root) { return IntPolynomial({BigInt(-root), BigInt(1)}); }

void IntPolynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::operator()(const BigInt& n) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

std::vector<BigInt> IntPolynomial::integer_roots() const {
  std::vector<BigInt> roots;
  if (coeffs_.empty() || (coeffs_.size() == 1 && coeffs_[0] == 0)) {
    throw std::invalid_argument("integer_roots: zero polynomial");
  }
  std::size_t low = 0;
  while (coeffs_[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  BigInt constant = abs(coeffs_[low]);
  // Every nonzero integer root divides the lowest nonzero coefficient.
  for (BigInt q = 1; q * q <= constant; ++q) {
    if (constant % q != 0) continue;
    for (const BigInt& divisor : {q, BigInt(constant / q)}) {
      for (const BigInt& candidate : {divisor, BigInt(-divisor)}) {
        if ((*this)(candidate) == 0) roots.push_back(candidate);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::string IntPolynomial::to_string() const {
  std::string out;
  for (int power = degree(); power >= 0; --power) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(power)];
    if (c == 0 && !(power == 0 && out.empty())) continue;
    const BigInt magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (magnitude != 1 || power == 0) out += magnitude.get_str();
    if (power >= 1) out += "n";
    if (power >= 2) out += "^" + std::to_string(power);
  }
  return out;
}

ConstancyConstraints constancy_constraints(long d, long gamma) {
  if (d < 1 || gamma < 2) throw std::invalid_argument("constancy_constraints: need d >= 1, gamma >= 2");
  ConstancyConstraints out{Rational(gamma, d + 1), Rational(2 * d, d + 1)};
  out.mu.canonicalize();
  out.base_r2.canonicalize();
  const auto coeffs = a2_quadratic_coeffs(OracleInputs<Rational>{d, gamma, out.mu, Rational(0), out.base_r2});
  if (coeffs.c0 != 0 || coeffs.c1 != 0) {
    throw std::logic_error("constancy_constraints: substitution did not annihilate c0 and c1");
  }
  return out;
}

CaseVerdict type1_scan(long n_max) {
  if (n_max < 1) throw std::invalid_argument("type1_scan: n_max must be >= 1");
  CaseVerdict v;
  v.case_id = 1;
  v.family = "type1(m,n), 1 <= m <= n";
  v.n_min = 1;
  v.n_max = n_max;
  Case1Evidence ev;
  ev.identity_holds = true;
  BigInt d, lhs, rhs, sum;
  for (long m = 1; m <= n_max; ++m) {
    for (long n = m; n <= n_max; ++n) {
      // |R_gB|^2(0) = 2mn(mn+1)/(m+n)^2 equals 2d/(d+1), d = mn, iff
      // 2mn(mn+1)(d+1) = 2d (m+n)^2.
      d = m;
      d *= n;
      lhs = d + 1;
      lhs *= lhs;
      lhs *= 2 * d;
      sum = m + n;
      rhs = sum * sum;
      rhs *= 2 * d;
      const bool equal = lhs == rhs;
      ++ev.pairs_checked;
      if (equal != ((m - 1) * (n - 1) == 0)) ev.identity_holds = false;
      if (equal) {
        const ConstancyConstraints cc = constancy_constraints(m * n, m + n);
        v.survivors.push_back({m, n, m * n, m + n, cc.mu});
      }
    }
  }
  v.case1 = ev;
  const bool only_balls = std::all_of(v.survivors.begin(), v.survivors.end(),
                                      [](const Survivor& s) { return s.m == 1 && s.mu == 1; });
  v.matches_expected = ev.identity_holds && only_balls && static_cast<long>(v.survivors.size()) == n_max;
  v.conclusion = v.matches_expected ? "only m = 1 survives, with mu = 1: the complex hyperbolic space"
                                 : "unexpected survivors in type I";
  return v;
}

namespace {

IntPolynomial poly(std::initializer_list<long> low_to_high) {
  std::vector<BigInt> c;
  for (long x : low_to_high) c.emplace_back(x);
  return IntPolynomial(std::move(c));
}

struct CaseFamily {
  std::string family;
  long n_min;
  std::function<DomainSpec(long)> make;
};

CaseFamily family_of(int case_id) {
  switch (case_id) {
    case 2: return {"type2(n), n >= 4", 4, [](long n) { return DomainSpec::type2(static_cast<int>(n)); }};
    case 3: return {"type3(n), n >= 2", 2, [](long n) { return DomainSpec::type3(static_cast<int>(n)); }};
    case 4: return {"type4(n), n >= 5", 5, [](long n) { return DomainSpec::type4(static_cast<int>(n)); }};
    default: break;
  }
  throw std::invalid_argument("integer_root_scan: case id must be 2, 3 or 4");
}

FactorizationCertificate certify(const std::string& closed_form, IntPolynomial polynomial,
                                 std::vector<IntPolynomial> factors, long n_min, long n_max,
                                 const std::function<DomainSpec(long)>& make,
                                 const std::function<Rational(const DomainSpec&)>& r2) {
  FactorizationCertificate cert;
  cert.closed_form = closed_form;
  IntPolynomial product = poly({1});
  for (const auto& f : factors) product = product * f;
  cert.expansion_matches = product == polynomial;
  for (const auto& f : factors) {
    for (const auto& root : f.integer_roots()) cert.integer_roots.push_back(root);
  }
  std::sort(cert.integer_roots.begin(), cert.integer_roots.end());
  cert.integer_roots.erase(std::unique(cert.integer_roots.begin(), cert.integer_roots.end()), cert.integer_roots.end());
  for (const auto& root : cert.integer_roots) {
    if (root >= n_min) cert.admissible_roots.push_back(root);
  }
  cert.consistent_with_closed_form = true;
  for (long n = n_min; n <= n_max; ++n) {
    const bool zero = polynomial(BigInt(n)) == 0;
    const DomainSpec spec = make(n);
    const long d = spec.dimension();
    const bool condition = r2(spec) == Rational(2 * d, d + 1);
    if (zero) cert.scan_zeros.push_back(n);
    if (zero != condition) cert.consistent_with_closed_form = false;
    ++cert.values_checked;
  }
  cert.polynomial = std::move(polynomial);
  cert.factors = std::move(factors);
  return cert;
}

bool certificate_ok(const FactorizationCertificate& c) {
  return c.expansion_matches && c.admissible_roots.empty() && c.scan_zeros.empty() && c.consistent_with_closed_form;
}

}  // namespace

CaseVerdict integer_root_scan(int case_id, long n_max) {
  const CaseFamily fam = family_of(case_id);
  if (n_max < fam.n_min) {
    throw std::invalid_argument("integer_root_scan: n_max " + std::to_string(n_max) + " below minimum n " +
                                std::to_string(fam.n_min) + " for case " + std::to_string(case_id));
  }
  CaseVerdict v;
  v.case_id = case_id;
  v.family = fam.family;
  v.n_min = fam.n_min;
  v.n_max = n_max;
  const auto tabulated = [](const DomainSpec& s) { return appendix_R2_base(s); };
  switch (case_id) {
    case 2:
      v.certificates.push_back(certify("tabulated", poly({0, -6, 5, 5, -5, 1}),
                                       {IntPolynomial::linear(0), IntPolynomial::linear(1), IntPolynomial::linear(2),
                                        IntPolynomial::linear(-1), IntPolynomial::linear(3)},
                                       fam.n_min, n_max, fam.make, tabulated));
      break;
    case 3:
      v.certificates.push_back(certify("tabulated", poly({64, -70, 11, -27, 21, 1}),
                                       {IntPolynomial::linear(1), poly({-64, 6, -5, 22, 1})}, fam.n_min, n_max,
                                       fam.make, tabulated));
      // The tabulated type III closed form is wrong for n >= 3; the same
      // argument on the realized value gives n(n-1)(n+2)(n+3).
      v.certificates.push_back(certify("corrected", poly({0, -6, 1, 4, 1}),
                                       {IntPolynomial::linear(0), IntPolynomial::linear(1), IntPolynomial::linear(-2),
                                        IntPolynomial::linear(-3)},
                                       fam.n_min, n_max, fam.make, [](const DomainSpec& s) { return exact_R2_base(s); }));
      break;
    case 4:
      v.certificates.push_back(certify("tabulated", poly({-2, 1, 1}),
                                       {IntPolynomial::linear(1), IntPolynomial::linear(-2)}, fam.n_min, n_max,
                                       fam.make, tabulated));
      break;
  }
  v.matches_expected = std::all_of(v.certificates.begin(), v.certificates.end(), certificate_ok);
  v.conclusion = v.matches_expected ? "no admissible n: the factorization certificate excludes every n >= " +
                                       std::to_string(fam.n_min)
                                 : "case polynomial admits an admissible root or the certificate failed";
  return v;
}

IntegralityWitness integrality_witness(const Rational& base_r2, long gamma) {
  BigInt g4;
  mpz_ui_pow_ui(g4.get_mpz_t(), static_cast<unsigned long>(gamma), 4);
  IntegralityWitness w;
  w.numerator = base_r2.get_num() * g4;
  w.denominator = base_r2.get_den();
  w.value = Rational(w.numerator, w.denominator);
  w.value.canonicalize();
  w.remainder = w.numerator % w.denominator;
  w.is_integer = is_integer(w.value);
  return w;
}

CaseVerdict exceptional_integrality(const DomainSpec& spec) {
  if (spec.classical()) throw std::invalid_argument("exceptional_integrality: " + spec.label() + " is classical");
  const long d = spec.dimension();
  const long gamma = spec.genus();
  const ConstancyConstraints cc = constancy_constraints(d, gamma);
  CaseVerdict v;
  v.case_id = spec.kind() == DomainKind::ExcV ? 5 : 6;
  v.family = spec.label() + " (d = " + std::to_string(d) + ", gamma = " + std::to_string(gamma) + ")";
  v.witness = integrality_witness(cc.base_r2, gamma);
  v.matches_expected = !v.witness->is_integer;
  v.conclusion = v.matches_expected ? "(2d/(d+1)) gamma^4 = " + v.witness->numerator.get_str() + "/" +
                                       v.witness->denominator.get_str() + " is not an integer"
                                 : "integrality condition unexpectedly satisfied";
  return v;
}

Classification classify_all(long n_max) {
  if (n_max < 5) throw std::invalid_argument("classify_all: n_max must be >= 5 (case 4 starts at n = 5)");
  Classification out;
  out.cases.push_back(type1_scan(n_max));
  for (int id : {2, 3, 4}) out.cases.push_back(integer_root_scan(id, n_max));
  out.cases.push_back(exceptional_integrality(DomainSpec::exc5()));
  out.cases.push_back(exceptional_integrality(DomainSpec::exc6()));
  bool ok = true;
  for (const auto& c : out.cases) {
    ok = ok && c.matches_expected;
    if (c.case_id != 1 && !c.survivors.empty()) ok = false;
  }
  out.theorem_holds = ok;
  out.final_verdict = ok ? kBallFamilyVerdict : "survivors deviate from the ball family";
  return out;
}

}  // namespace kahler
