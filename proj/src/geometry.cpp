#include "kahler/geometry.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

namespace kahler {

namespace {

using cd = std::complex<double>;

void require_cap(const Jet& potential, int degree, const char* what) {
  const auto cap = potential.cap();
  if (cap.holo_degree < degree || cap.anti_degree < degree) {
    throw std::invalid_argument(std::string(what) + " needs a potential jet with cap >= (" +
                                std::to_string(degree) + "," + std::to_string(degree) + ")");
  }
}

cd partial(const Jet& f, std::initializer_list<int> holo_vars, std::initializer_list<int> anti_vars) {
  MultiIndex idx{std::vector<int>(f.num_vars(), 0), std::vector<int>(f.num_vars(), 0)};
  for (int v : holo_vars) idx.holo[v] += 1;
  for (int v : anti_vars) idx.anti[v] += 1;
  return extract_partial(f, idx);
}

// Jets of g_{a bbar} = d_a d_bbar phi, truncated to `cap`.
JetMatrix metric_jets(const Jet& potential, BidegreeCap cap) {
  const int n = potential.num_vars();
  JetMatrix g(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    const Jet da = differentiate(potential, holo(a));
    for (int b = 0; b < n; ++b) {
      g(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = truncate(differentiate(da, anti(b)), cap);
    }
  }
  return g;
}

// Jets of Ric_{i jbar} = -d_i d_jbar log det g, with cap two below `g`'s.
JetMatrix ricci_jets(const JetMatrix& g) {
  const Jet log_det = log(det(g));
  const auto n = g.rows();
  JetMatrix ric(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Jet di = differentiate(log_det, holo(static_cast<int>(i)));
    for (std::size_t j = 0; j < n; ++j) ric(i, j) = -differentiate(di, anti(static_cast<int>(j)));
  }
  return ric;
}

double relative_residue(cd value) { return std::abs(value.imag()) / std::max(1.0, std::abs(value.real())); }

}  // namespace

void validate(const HartogsSpec& spec) {
  if (!(spec.mu > 0.0) || !std::isfinite(spec.mu)) throw std::invalid_argument("Hartogs mu must be a positive real");
  if (!spec.base.classical()) {
    throw std::invalid_argument("Hartogs base " + spec.base.label() + " carries constants only; no geometry available");
  }
}

bool contains(const HartogsSpec& spec, const HartogsPoint& p) {
  validate(spec);
  if (!contains(spec.base, p.base.coordinates)) return false;
  return std::norm(p.fiber) < std::pow(generic_norm_value(spec.base, p.base.coordinates), spec.mu);
}

Jet bergman_potential_jet(const DomainSpec& spec, const BasePoint& p, BidegreeCap cap) {
  return log(generic_norm_jet(spec, p, cap)) * cd(-static_cast<double>(spec.genus()));
}

Jet hartogs_potential_jet(const HartogsSpec& spec, const HartogsPoint& p, BidegreeCap cap) {
  validate(spec);
  const int d = spec.base.dimension();
  if (!contains(spec.base, p.base.coordinates)) {
    throw std::domain_error("Hartogs point: base coordinates not interior to " + spec.base.label());
  }
  const double n_mu = std::pow(generic_norm_value(spec.base, p.base.coordinates), spec.mu);
  if (!(std::norm(p.fiber) < n_mu)) throw std::domain_error("Hartogs point: |w|^2 >= N^mu");

  const Jet norm_mu = real_power(generic_norm_jet(spec.base, p.base, cap, d + 1), spec.mu);
  const Jet w = Jet::variable(holo(d), d + 1, cap) + p.fiber;
  const Jet wbar = Jet::variable(anti(d), d + 1, cap) + std::conj(p.fiber);
  return -log(norm_mu - w * wbar);
}

MetricData metric_at(const Jet& potential) {
  require_cap(potential, 1, "metric_at");
  const int n = potential.num_vars();
  MetricData out;
  out.dimension = n;
  out.g.resize(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.g(i, j) = extract_mixed(potential, i, j);
  }
  const double scale = std::max(1.0, out.g.cwiseAbs().maxCoeff());
  if ((out.g - out.g.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
    throw std::domain_error("metric_at: potential Hessian is not Hermitian");
  }
  const Eigen::MatrixXcd herm = 0.5 * (out.g + out.g.adjoint());
  Eigen::LLT<Eigen::MatrixXcd> llt(herm);
  if (llt.info() != Eigen::Success) throw std::domain_error("metric_at: metric is not positive definite");
  out.g_inv = llt.solve(Eigen::MatrixXcd::Identity(n, n));
  return out;
}

CurvatureTensor curvature_tensor(const Jet& potential, const MetricData& metric) {
  require_cap(potential, 2, "curvature_tensor");
  const int n = metric.dimension;
  // third[(i*n + k)*n + q] = phi_{i k qbar};  third_bar[(p*n + j)*n + l] = phi_{p jbar lbar}
  std::vector<cd> third(static_cast<std::size_t>(n) * n * n), third_bar(third.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        third[(static_cast<std::size_t>(a) * n + b) * n + c] = partial(potential, {a, b}, {c});
        third_bar[(static_cast<std::size_t>(a) * n + b) * n + c] = partial(potential, {a}, {b, c});
      }
    }
  }
  // raised[(i*n + k)*n + p] = sum_q g^{p qbar} phi_{i k qbar}
  std::vector<cd> raised(third.size());
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      for (int p = 0; p < n; ++p) {
        cd s = 0.0;
        for (int q = 0; q < n; ++q) s += metric.upper(p, q) * third[(static_cast<std::size_t>(i) * n + k) * n + q];
        raised[(static_cast<std::size_t>(i) * n + k) * n + p] = s;
      }
    }
  }
  CurvatureTensor R(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          cd s = -partial(potential, {i, k}, {j, l});
          for (int p = 0; p < n; ++p) {
            s += raised[(static_cast<std::size_t>(i) * n + k) * n + p] * third_bar[(static_cast<std::size_t>(p) * n + j) * n + l];
          }
          R(i, j, k, l) = s;
        }
      }
    }
  }
  return R;
}

RicciScalar ricci_and_scalar(const Jet& potential, const MetricData& metric) {
  require_cap(potential, 2, "ricci_and_scalar");
  const int n = metric.dimension;
  const JetMatrix ric_jets = ricci_jets(metric_jets(potential, {1, 1}));
  RicciScalar out;
  out.ric.resize(n, n);
  out.k = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.ric(i, j) = ric_jets(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).constant_term();
      out.k += metric.upper(i, j) * out.ric(i, j);
    }
  }
  return out;
}

TensorNorms tensor_norms(const MetricData& metric, const CurvatureTensor& R, const Eigen::MatrixXcd& ric) {
  const int n = metric.dimension;
  // h(a, b) = g^{a bbar}; the norm contracts unbarred slots with h and
  // barred slots with conj(h).
  const Eigen::MatrixXcd h = metric.g_inv.transpose();
  const std::size_t n2 = static_cast<std::size_t>(n) * n, n3 = n2 * n, n4 = n3 * n;
  std::vector<cd> cur(R.data()), next(n4);
  // Contract one slot at a time; slot s has stride n^(3 - s).
  const std::size_t strides[4] = {n3, n2, static_cast<std::size_t>(n), 1};
  for (int slot = 0; slot < 4; ++slot) {
    const bool barred = slot % 2 == 1;
    const std::size_t stride = strides[slot];
    std::fill(next.begin(), next.end(), cd(0.0));
    for (std::size_t idx = 0; idx < n4; ++idx) {
      const int a = static_cast<int>((idx / stride) % n);
      const std::size_t base = idx - static_cast<std::size_t>(a) * stride;
      for (int b = 0; b < n; ++b) {
        const cd factor = barred ? std::conj(h(a, b)) : h(a, b);
        next[base + static_cast<std::size_t>(b) * stride] += factor * cur[idx];
      }
    }
    std::swap(cur, next);
  }
  cd r2 = 0.0;
  for (std::size_t idx = 0; idx < n4; ++idx) r2 += cur[idx] * std::conj(R.data()[idx]);

  const Eigen::MatrixXcd raised = metric.g_inv * ric * metric.g_inv;
  const cd ric2 = raised.cwiseProduct(ric.conjugate()).sum();

  TensorNorms out{r2.real(), ric2.real(), std::max(relative_residue(r2), relative_residue(ric2))};
  if (out.imag_residue > 1e-8) {
    std::ostringstream msg;
    msg << "tensor_norms: imaginary residue " << out.imag_residue;
    throw std::runtime_error(msg.str() + " exceeds 1e-8 (point too close to the boundary, or an index convention mismatch)");
  }
  return out;
}

JetMatrix inverse_jet_matrix(const JetMatrix& g) {
  const auto n = g.rows();
  if (n == 0 || n != g.cols()) throw std::invalid_argument("inverse_jet_matrix: matrix must be square and nonempty");
  const auto space = g(0, 0).space_ptr();
  Eigen::MatrixXcd g0(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g0(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = g(i, j).constant_term();
  }
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(g0);
  if (!lu.isInvertible()) throw std::domain_error("inverse_jet_matrix: matrix singular at the base point");
  const Eigen::MatrixXcd x0 = lu.inverse();

  JetMatrix x(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      x(i, j) = Jet(space);
      x(i, j).constant_term() = x0(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  auto multiply = [n, &space](const JetMatrix& a, const JetMatrix& b) {
    JetMatrix c(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Jet s(space);
        for (std::size_t k = 0; k < n; ++k) s += a(i, k) * b(k, j);
        c(i, j) = std::move(s);
      }
    }
    return c;
  };
  // Each step doubles the order of the residual; the nilpotent part of the
  // jets dies beyond total degree holo + anti.
  const int top = space->cap.holo_degree + space->cap.anti_degree;
  int steps = 0;
  while ((1 << steps) <= top) ++steps;
  for (int s = 0; s < steps; ++s) {
    JetMatrix correction = multiply(g, x);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        correction(i, j) = -correction(i, j);
        if (i == j) correction(i, j).constant_term() += 2.0;
      }
    }
    x = multiply(x, correction);
  }
  return x;
}

double laplacian_scalar_curvature(const Jet& potential, const MetricData& metric) {
  require_cap(potential, 3, "laplacian_scalar_curvature");
  const int n = metric.dimension;
  const JetMatrix g = metric_jets(potential, {2, 2});
  const JetMatrix ric = ricci_jets(g);
  JetMatrix g11(g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) g11(i, j) = truncate(g(i, j), {1, 1});
  }
  const JetMatrix g_inv = inverse_jet_matrix(g11);
  // k = g^{i jbar} Ric_{i jbar}, with g^{i jbar} = (g^-1)(j, i).
  Jet k(ric(0, 0).space_ptr());
  for (std::size_t i = 0; i < ric.rows(); ++i) {
    for (std::size_t j = 0; j < ric.cols(); ++j) k += g_inv(j, i) * ric(i, j);
  }
  cd lap = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) lap += metric.upper(i, j) * extract_mixed(k, i, j);
  }
  if (relative_residue(lap) > 1e-8) {
    throw std::runtime_error("laplacian_scalar_curvature: imaginary residue exceeds 1e-8");
  }
  return lap.real();
}

double laplacian_scalar_curvature(const HartogsSpec& spec, const HartogsPoint& p) {
  const Jet potential = hartogs_potential_jet(spec, p, {3, 3});
  return laplacian_scalar_curvature(potential, metric_at(potential));
}

CurvatureReport analyze_potential(const Jet& potential) {
  require_cap(potential, 2, "analyze_potential");
  CurvatureReport out;
  out.metric = metric_at(potential);
  out.R = curvature_tensor(potential, out.metric);
  const RicciScalar rs = ricci_and_scalar(potential, out.metric);
  out.ric = rs.ric;
  out.k = rs.k.real();
  const TensorNorms norms = tensor_norms(out.metric, out.R, out.ric);
  out.norm_R_sq = norms.norm_R_sq;
  out.norm_Ric_sq = norms.norm_Ric_sq;
  out.max_imag_residue = std::max(relative_residue(rs.k), norms.imag_residue);
  out.a0 = 1.0;
  out.a1 = out.k / 2.0;
  const auto cap = potential.cap();
  out.has_laplacian = cap.holo_degree >= 3 && cap.anti_degree >= 3;
  if (out.has_laplacian) {
    out.lap_k = laplacian_scalar_curvature(potential, out.metric);
    out.a2 = out.lap_k / 3.0 + out.norm_R_sq / 24.0 - out.norm_Ric_sq / 6.0 + out.k * out.k / 8.0;
  } else {
    out.lap_k = std::numeric_limits<double>::quiet_NaN();
    out.a2 = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

CurvatureReport a2_at(const HartogsSpec& spec, const HartogsPoint& p) {
  return analyze_potential(hartogs_potential_jet(spec, p, {3, 3}));
}

}  // namespace kahler
