#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kahler {

/// Hard limit on the degree carried in either character of a jet.
inline constexpr int kMaxJetDegree = 6;
/// Exponents are packed four bits per variable into a 64-bit key.
inline constexpr int kMaxJetVariables = 16;

/// Truncation order of a jet: degree in the holomorphic variables and
/// degree in the antiholomorphic variables, each bounded independently.
struct BidegreeCap {
  int holo_degree = 0;
  int anti_degree = 0;

  friend bool operator==(const BidegreeCap&, const BidegreeCap&) = default;
};

/// Validates 0 <= degree <= kMaxJetDegree in both characters.
void check_cap(const BidegreeCap& cap);

/// Exponent vectors of a monomial in z (holo) and z-bar (anti).
struct MultiIndex {
  std::vector<int> holo;
  std::vector<int> anti;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

/// Enumeration of all monomials of total degree <= `degree` in `num_vars`
/// variables, ordered by degree and then lexicographically, together with
/// the product and derivative tables that jet arithmetic runs on.
class MonomialBasis {
 public:
  struct ProductEntry {
    std::uint32_t other;
    std::uint32_t result;
  };
  /// Index of the monomial obtained by lowering one exponent, and the
  /// exponent that was lowered (the derivative's multiplicity).
  struct Lowering {
    std::int32_t index;  // -1 when the exponent is zero
    int exponent;
  };

  MonomialBasis(int num_vars, int degree);

  int num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  std::size_t size() const { return degrees_.size(); }

  std::span<const std::uint8_t> exponents(std::size_t index) const {
    return {exponents_.data() + index * static_cast<std::size_t>(num_vars_),
            static_cast<std::size_t>(num_vars_)};
  }
  int degree_of(std::size_t index) const { return degrees_[index]; }
  double factorial_weight(std::size_t index) const { return weights_[index]; }

  /// Returns -1 if the exponent vector is not part of the basis.
  std::int64_t find(std::span<const int> exps) const;

  /// All (j, k) with monomial_k = monomial_index * monomial_j inside the basis.
  std::span<const ProductEntry> products(std::size_t index) const {
    return {products_.data() + product_offsets_[index],
            product_offsets_[index + 1] - product_offsets_[index]};
  }

  Lowering lower(std::size_t index, int var) const {
    return lowering_[index * static_cast<std::size_t>(num_vars_) + static_cast<std::size_t>(var)];
  }

 private:
  static std::uint64_t pack(std::span<const std::uint8_t> exps);

  int num_vars_;
  int degree_;
  std::vector<std::uint8_t> exponents_;
  std::vector<int> degrees_;
  std::vector<double> weights_;
  std::unordered_map<std::uint64_t, std::uint32_t> lookup_;
  std::vector<std::size_t> product_offsets_;
  std::vector<ProductEntry> products_;
  std::vector<Lowering> lowering_;
};

/// The coefficient layout shared by all jets with the same number of
/// variables and cap: holomorphic basis x antiholomorphic basis, row-major.
struct JetSpace {
  int num_vars;
  BidegreeCap cap;
  std::shared_ptr<const MonomialBasis> holo;
  std::shared_ptr<const MonomialBasis> anti;

  std::size_t size() const { return holo->size() * anti->size(); }
};

/// Returns the canonical (cached, immutable) space for (num_vars, cap).
/// Thread-safe.
std::shared_ptr<const JetSpace> jet_space(int num_vars, BidegreeCap cap);

}  // namespace kahler
