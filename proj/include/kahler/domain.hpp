#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "kahler/jet.hpp"

namespace kahler {

enum class DomainKind { TypeI, TypeII, TypeIII, TypeIV, ExcV, ExcVI };

/// An irreducible bounded symmetric domain. Classical kinds carry their
/// matrix parameters; the two exceptional kinds carry constants only.
class DomainSpec {
 public:
  static DomainSpec type1(int m, int n);
  static DomainSpec type2(int n);
  static DomainSpec type3(int n);
  static DomainSpec type4(int n);
  static DomainSpec exc5();
  static DomainSpec exc6();

  DomainKind kind() const { return kind_; }
  /// Row count for TypeI; unused (0) otherwise.
  int m() const { return m_; }
  /// Matrix order (types I-III), vector length (type IV); 0 for exceptional.
  int n() const { return n_; }

  int dimension() const;
  int genus() const;
  bool classical() const { return kind_ != DomainKind::ExcV && kind_ != DomainKind::ExcVI; }

  /// TypeI with one row or one column, i.e. the unit ball.
  bool is_ball() const;

  /// "type1(1,2)", "type4(5)", "exc5", ...
  std::string label() const;

  friend bool operator==(const DomainSpec&, const DomainSpec&) = default;

 private:
  DomainSpec(DomainKind kind, int m, int n) : kind_(kind), m_(m), n_(n) {}

  DomainKind kind_;
  int m_;
  int n_;
};

/// (complex dimension d, genus gamma).
std::pair<int, int> dimension_genus(const DomainSpec& spec);

/// A point of a classical domain in independent coordinates: all entries of
/// the m x n matrix (type I, row-major), strictly-upper-triangular entries
/// (type II), upper-triangular entries including the diagonal (type III), or
/// the vector itself (type IV).
struct BasePoint {
  Eigen::VectorXcd coordinates;
};

/// The matrix z assembled from independent coordinates (skew-symmetric
/// completion for type II, symmetric for type III). Type IV returns a column.
Eigen::MatrixXcd coordinate_matrix(const DomainSpec& spec, const Eigen::VectorXcd& z);

/// Strict interior test via Hermitian eigenvalues (types I-III) or the two
/// defining inequalities (type IV).
bool contains(const DomainSpec& spec, const Eigen::VectorXcd& z);

/// N(z, zbar) at a point.
double generic_norm_value(const DomainSpec& spec, const Eigen::VectorXcd& z);

/// Jet of N(z, zbar) centered at p. The domain coordinates occupy jet
/// variables 0..d-1; `num_vars` (>= d, default d) leaves room for extra
/// variables the norm does not depend on.
Jet generic_norm_jet(const DomainSpec& spec, const BasePoint& p, BidegreeCap cap, int num_vars = 0);

/// Samples closer to the boundary than this (in generic norm) are redrawn.
/// Metric entries grow like 1/N^2, and at N ~ 1e-4 double precision no
/// longer holds 1e-8 on the curvature invariants.
inline constexpr double kSampleNormFloor = 0.05;

/// Deterministic interior points: each coordinate uniform in the disk of
/// radius 1/sqrt(d), redrawn until contained with N >= kSampleNormFloor.
std::vector<BasePoint> sample_interior(const DomainSpec& spec, std::uint64_t seed, int count);

/// Uniform double in [0, 1) from a 64-bit generator word.
double unit_uniform(std::uint64_t word);

}  // namespace kahler
