#pragma once

// Exact-arithmetic case analysis: which Cartan-Hartogs domains can have a
// constant a2. Constancy forces mu = gamma/(d+1) and |R_gB|^2(0) = 2d/(d+1);
// each family of irreducible bounded symmetric domains is then checked for
// parameters meeting the second condition. No floating point in this module.

#include <optional>
#include <string>
#include <vector>

#include "kahler/domain.hpp"
#include "kahler/rational.hpp"

namespace kahler {

/// Dense univariate polynomial with big-integer coefficients, lowest degree first.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  /// Monic linear factor (n - root).
  static IntPolynomial linear(long root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt operator()(const BigInt& n) const;

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// All integer roots (rational root theorem over divisors of the lowest
  /// nonzero coefficient), ascending, without multiplicity.
  std::vector<BigInt> integer_roots() const;

  /// "n^5 - 5n^4 + 5n^3 + 5n^2 - 6n".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

struct ConstancyConstraints {
  Rational mu;
  Rational base_r2;
};

/// The unique (mu, |R_gB|^2(0)) with c0 = c1 = 0; checked by substitution.
ConstancyConstraints constancy_constraints(long d, long gamma);

struct Survivor {
  long m;
  long n;
  long d;
  long gamma;
  Rational mu;
};

/// A case polynomial, its claimed factorization, and what follows from it.
struct FactorizationCertificate {
  std::string closed_form;  // "tabulated" or "corrected"
  IntPolynomial polynomial;
  std::vector<IntPolynomial> factors;
  bool expansion_matches = false;
  std::vector<BigInt> integer_roots;
  std::vector<BigInt> admissible_roots;
  // Exhaustive scan n_min..n_max: zeros of the polynomial, and whether
  // "closed form == 2d/(d+1)" coincided with "polynomial == 0" at every n.
  long values_checked = 0;
  std::vector<long> scan_zeros;
  bool consistent_with_closed_form = false;
};

struct IntegralityWitness {
  BigInt numerator;    // numerator of 2d/(d+1) times gamma^4
  BigInt denominator;  // denominator of 2d/(d+1)
  Rational value;
  BigInt remainder;
  bool is_integer = false;
};

struct Case1Evidence {
  long pairs_checked = 0;
  // For every pair, "(mn+1)|R_gB|^2 = 2mn" held exactly iff (m-1)(n-1) = 0.
  bool identity_holds = false;
};

struct CaseVerdict {
  int case_id = 0;
  std::string family;
  long n_min = 0;
  long n_max = 0;
  std::vector<Survivor> survivors;
  std::optional<Case1Evidence> case1;
  std::vector<FactorizationCertificate> certificates;
  std::optional<IntegralityWitness> witness;
  bool matches_expected = false;
  std::string conclusion;
};

struct Classification {
  std::vector<CaseVerdict> cases;
  bool theorem_holds = false;
  std::string final_verdict;
};

/// Case 1: all 1 <= m <= n <= n_max.
CaseVerdict type1_scan(long n_max);

/// Cases 2, 3, 4. Throws std::invalid_argument for another case id or when
/// n_max is below the family's minimum n.
CaseVerdict integer_root_scan(int case_id, long n_max);

/// (2d/(d+1)) gamma^4 must be an integer for an irreducible domain.
IntegralityWitness integrality_witness(const Rational& base_r2, long gamma);

/// Cases 5 and 6.
CaseVerdict exceptional_integrality(const DomainSpec& spec);

/// All six cases and the final verdict. Requires n_max >= 5.
Classification classify_all(long n_max);

inline constexpr const char* kBallFamilyVerdict = "survivors: ball family, \xce\xbc = 1";

}  // namespace kahler
