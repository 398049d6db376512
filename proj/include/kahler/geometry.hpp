#pragma once

// Kahler geometry from a potential jet. Conventions, with g_{i jbar} the
// mixed second partials of the potential:
//   R_{i jbar k lbar} = -phi_{i jbar k lbar} + g^{p qbar} phi_{i k qbar} phi_{jbar lbar p}
//   Ric_{i jbar}      = -d_i d_jbar log det g
//   k                 = g^{i jbar} Ric_{i jbar}
//   Delta             = g^{i jbar} d_i d_jbar
// and a0 = 1, a1 = k/2, a2 = Delta k/3 + |R|^2/24 - |Ric|^2/6 + k^2/8.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "kahler/domain.hpp"
#include "kahler/jet.hpp"

namespace kahler {

/// Cartan-Hartogs domain {(z, w) : |w|^2 < N(z, zbar)^mu} over `base`.
struct HartogsSpec {
  DomainSpec base;
  double mu;
};

struct HartogsPoint {
  BasePoint base;
  std::complex<double> fiber;
};

/// Throws std::invalid_argument unless mu > 0 and the base is classical.
void validate(const HartogsSpec& spec);

/// True iff z is interior to the base and |w|^2 < N(z, zbar)^mu.
bool contains(const HartogsSpec& spec, const HartogsPoint& p);

struct MetricData {
  int dimension = 0;
  Eigen::MatrixXcd g;      // g(i, j) = g_{i jbar}
  Eigen::MatrixXcd g_inv;  // plain matrix inverse: g * g_inv = I

  /// The contravariant component g^{p qbar}, i.e. g_inv(q, p).
  std::complex<double> upper(int p, int q) const { return g_inv(q, p); }
};

/// Dense R_{i jbar k lbar}.
class CurvatureTensor {
 public:
  CurvatureTensor() = default;
  explicit CurvatureTensor(int n) : n_(n), data_(static_cast<std::size_t>(n) * n * n * n) {}

  int dimension() const { return n_; }
  std::complex<double>& operator()(int i, int j, int k, int l) { return data_[offset(i, j, k, l)]; }
  const std::complex<double>& operator()(int i, int j, int k, int l) const { return data_[offset(i, j, k, l)]; }
  const std::vector<std::complex<double>>& data() const { return data_; }

 private:
  std::size_t offset(int i, int j, int k, int l) const {
    return ((static_cast<std::size_t>(i) * n_ + j) * n_ + k) * n_ + l;
  }

  int n_ = 0;
  std::vector<std::complex<double>> data_;
};

struct RicciScalar {
  Eigen::MatrixXcd ric;  // ric(i, j) = Ric_{i jbar}
  std::complex<double> k;
};

struct TensorNorms {
  double norm_R_sq;
  double norm_Ric_sq;
  double imag_residue;
};

struct CurvatureReport {
  MetricData metric;
  CurvatureTensor R;
  Eigen::MatrixXcd ric;
  double k = 0.0;
  double norm_R_sq = 0.0;
  double norm_Ric_sq = 0.0;
  /// NaN when the potential cap was below (3,3).
  double lap_k = 0.0;
  double a0 = 1.0;
  double a1 = 0.0;
  /// NaN when lap_k is unavailable.
  double a2 = 0.0;
  bool has_laplacian = false;
  /// Largest imaginary part discarded when the real scalars were taken.
  double max_imag_residue = 0.0;
};

/// Potential -gamma log N of the Bergman metric, centered at p.
Jet bergman_potential_jet(const DomainSpec& spec, const BasePoint& p, BidegreeCap cap);

/// Potential -log(N^mu - |w|^2) in d+1 variables (w last), centered at p.
Jet hartogs_potential_jet(const HartogsSpec& spec, const HartogsPoint& p, BidegreeCap cap);

MetricData metric_at(const Jet& potential);

CurvatureTensor curvature_tensor(const Jet& potential, const MetricData& metric);

RicciScalar ricci_and_scalar(const Jet& potential, const MetricData& metric);

/// Full contractions |R|^2 and |Ric|^2. Throws std::runtime_error if an
/// imaginary residue above 1e-8 (relative to the value) survives.
TensorNorms tensor_norms(const MetricData& metric, const CurvatureTensor& R, const Eigen::MatrixXcd& ric);

/// Delta k at the base point of the potential; needs cap (3,3).
double laplacian_scalar_curvature(const Jet& potential, const MetricData& metric);
double laplacian_scalar_curvature(const HartogsSpec& spec, const HartogsPoint& p);

/// Everything above from one potential jet. Delta k and a2 are filled when
/// the cap is at least (3,3).
CurvatureReport analyze_potential(const Jet& potential);

/// CurvatureReport of the Cartan-Hartogs metric at p.
CurvatureReport a2_at(const HartogsSpec& spec, const HartogsPoint& p);

/// Jet of the inverse of a jet-valued matrix by Newton iteration
/// X <- X (2I - G X), seeded with the numeric inverse at the base point.
JetMatrix inverse_jet_matrix(const JetMatrix& g);

}  // namespace kahler
