#include "kahler/domain.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>

namespace kahler {

DomainSpec DomainSpec::type1(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("type1 domain requires m, n >= 1");
  return {DomainKind::TypeI, m, n};
}

DomainSpec DomainSpec::type2(int n) {
  if (n < 4) throw std::invalid_argument("type2 domain requires n >= 4");
  return {DomainKind::TypeII, 0, n};
}

DomainSpec DomainSpec::type3(int n) {
  if (n < 2) throw std::invalid_argument("type3 domain requires n >= 2");
  return {DomainKind::TypeIII, 0, n};
}

DomainSpec DomainSpec::type4(int n) {
  if (n < 5) throw std::invalid_argument("type4 domain requires n >= 5");
  return {DomainKind::TypeIV, 0, n};
}

DomainSpec DomainSpec::exc5() { return {DomainKind::ExcV, 0, 0}; }
DomainSpec DomainSpec::exc6() { return {DomainKind::ExcVI, 0, 0}; }

int DomainSpec::dimension() const {
  switch (kind_) {
    case DomainKind::TypeI: return m_ * n_;
    case DomainKind::TypeII: return n_ * (n_ - 1) / 2;
    case DomainKind::TypeIII: return n_ * (n_ + 1) / 2;
    case DomainKind::TypeIV: return n_;
    case DomainKind::ExcV: return 16;
    case DomainKind::ExcVI: return 27;
  }
  return 0;
}

int DomainSpec::genus() const {
  switch (kind_) {
    case DomainKind::TypeI: return m_ + n_;
    case DomainKind::TypeII: return 2 * (n_ - 1);
    case DomainKind::TypeIII: return n_ + 1;
    case DomainKind::TypeIV: return n_;
    case DomainKind::ExcV: return 12;
    case DomainKind::ExcVI: return 18;
  }
  return 0;
}

bool DomainSpec::is_ball() const { return kind_ == DomainKind::TypeI && (m_ == 1 || n_ == 1); }

std::string DomainSpec::label() const {
  switch (kind_) {
    case DomainKind::TypeI: return "type1(" + std::to_string(m_) + "," + std::to_string(n_) + ")";
    case DomainKind::TypeII: return "type2(" + std::to_string(n_) + ")";
    case DomainKind::TypeIII: return "type3(" + std::to_string(n_) + ")";
    case DomainKind::TypeIV: return "type4(" + std::to_string(n_) + ")";
    case DomainKind::ExcV: return "exc5";
    case DomainKind::ExcVI: return "exc6";
  }
  return "?";
}

std::pair<int, int> dimension_genus(const DomainSpec& spec) { return {spec.dimension(), spec.genus()}; }

namespace {

void require_classical(const DomainSpec& spec) {
  if (!spec.classical()) {
    throw std::invalid_argument("domain " + spec.label() + " carries constants only; no geometry available");
  }
}

void require_length(const DomainSpec& spec, Eigen::Index length) {
  if (length != spec.dimension()) {
    throw std::invalid_argument("point has " + std::to_string(length) + " coordinates, domain " + spec.label() +
                                " needs " + std::to_string(spec.dimension()));
  }
}

// Entry (row, col) of the matrix model as (coordinate index, sign), or empty
// for a structural zero.
struct EntryRef {
  int coordinate;
  double sign;
};

std::optional<EntryRef> entry_ref(const DomainSpec& spec, int row, int col) {
  const int n = spec.n();
  switch (spec.kind()) {
    case DomainKind::TypeI: return EntryRef{row * n + col, 1.0};
    case DomainKind::TypeII: {
      if (row == col) return std::nullopt;
      const int i = std::min(row, col);
      const int j = std::max(row, col);
      // Strictly upper entries enumerated row by row.
      const int index = i * n - i * (i + 1) / 2 + (j - i - 1);
      return EntryRef{index, row < col ? 1.0 : -1.0};
    }
    case DomainKind::TypeIII: {
      const int i = std::min(row, col);
      const int j = std::max(row, col);
      const int index = i * n - i * (i - 1) / 2 + (j - i);
      return EntryRef{index, 1.0};
    }
    default: break;
  }
  return std::nullopt;
}

std::pair<int, int> matrix_shape(const DomainSpec& spec) {
  if (spec.kind() == DomainKind::TypeI) return {spec.m(), spec.n()};
  if (spec.kind() == DomainKind::TypeIV) return {spec.n(), 1};
  return {spec.n(), spec.n()};
}

}  // namespace

Eigen::MatrixXcd coordinate_matrix(const DomainSpec& spec, const Eigen::VectorXcd& z) {
  require_classical(spec);
  require_length(spec, z.size());
  if (spec.kind() == DomainKind::TypeIV) return z;
  auto [rows, cols] = matrix_shape(spec);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (auto ref = entry_ref(spec, r, c)) out(r, c) = ref->sign * z(ref->coordinate);
    }
  }
  return out;
}

bool contains(const DomainSpec& spec, const Eigen::VectorXcd& z) {
  require_classical(spec);
  require_length(spec, z.size());
  if (spec.kind() == DomainKind::TypeIV) {
    const double norm2 = z.squaredNorm();
    const double quad = std::norm(z.cwiseProduct(z).sum());
    return norm2 < 1.0 && 1.0 - 2.0 * norm2 + quad > 0.0;
  }
  const Eigen::MatrixXcd zm = coordinate_matrix(spec, z);
  const Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(zm.rows(), zm.rows()) - zm * zm.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() > 0.0;
}

double generic_norm_value(const DomainSpec& spec, const Eigen::VectorXcd& z) {
  require_classical(spec);
  require_length(spec, z.size());
  if (spec.kind() == DomainKind::TypeIV) {
    return 1.0 - 2.0 * z.squaredNorm() + std::norm(z.cwiseProduct(z).sum());
  }
  const Eigen::MatrixXcd zm = coordinate_matrix(spec, z);
  const Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(zm.rows(), zm.rows()) - zm * zm.adjoint();
  const double det = a.determinant().real();
  return spec.kind() == DomainKind::TypeII ? std::sqrt(det) : det;
}

Jet generic_norm_jet(const DomainSpec& spec, const BasePoint& p, BidegreeCap cap, int num_vars) {
  require_classical(spec);
  const int d = spec.dimension();
  require_length(spec, p.coordinates.size());
  if (num_vars == 0) num_vars = d;
  if (num_vars < d) throw std::invalid_argument("generic_norm_jet: num_vars smaller than domain dimension");
  if (!contains(spec, p.coordinates)) throw std::domain_error("generic_norm_jet: point is not interior to " + spec.label());

  std::vector<Jet> zh, za;
  zh.reserve(d);
  za.reserve(d);
  for (int c = 0; c < d; ++c) {
    const std::complex<double> v = p.coordinates(c);
    zh.push_back(Jet::variable(holo(c), num_vars, cap) + v);
    za.push_back(Jet::variable(anti(c), num_vars, cap) + std::conj(v));
  }
  const Jet one = Jet::constant(1.0, num_vars, cap);

  if (spec.kind() == DomainKind::TypeIV) {
    Jet norm2 = zh[0] * za[0];
    Jet sq = zh[0] * zh[0];
    Jet sqbar = za[0] * za[0];
    for (int i = 1; i < d; ++i) {
      norm2 += zh[i] * za[i];
      sq += zh[i] * zh[i];
      sqbar += za[i] * za[i];
    }
    return one - norm2 * std::complex<double>(2.0) + sq * sqbar;
  }

  auto [rows, cols] = matrix_shape(spec);
  JetMatrix a(static_cast<std::size_t>(rows), static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) {
    for (int s = 0; s < rows; ++s) {
      Jet entry = r == s ? one : Jet(one.space_ptr());
      for (int c = 0; c < cols; ++c) {
        auto left = entry_ref(spec, r, c);
        auto right = entry_ref(spec, s, c);
        if (!left || !right) continue;
        entry -= (zh[left->coordinate] * za[right->coordinate]) * std::complex<double>(left->sign * right->sign);
      }
      a(static_cast<std::size_t>(r), static_cast<std::size_t>(s)) = std::move(entry);
    }
  }
  Jet n = det(a);
  return spec.kind() == DomainKind::TypeII ? real_power(n, 0.5) : n;
}

double unit_uniform(std::uint64_t word) { return static_cast<double>(word >> 11) * 0x1.0p-53; }

std::vector<BasePoint> sample_interior(const DomainSpec& spec, std::uint64_t seed, int count) {
  require_classical(spec);
  const int d = spec.dimension();
  const double radius = 1.0 / std::sqrt(static_cast<double>(d));
  std::mt19937_64 rng(seed);
  std::vector<BasePoint> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  while (static_cast<int>(out.size()) < count) {
    Eigen::VectorXcd z(d);
    for (int c = 0; c < d; ++c) {
      const double r = radius * std::sqrt(unit_uniform(rng()));
      const double theta = 2.0 * std::numbers::pi * unit_uniform(rng());
      z(c) = std::polar(r, theta);
    }
    if (contains(spec, z) && generic_norm_value(spec, z) >= kSampleNormFloor) out.push_back({std::move(z)});
  }
  return out;
}

}  // namespace kahler
