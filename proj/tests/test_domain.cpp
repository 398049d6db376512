#include <gtest/gtest.h>

#include <complex>

#include "kahler/domain.hpp"
#include "kahler/geometry.hpp"

namespace kahler {
namespace {

using cd = std::complex<double>;

std::vector<DomainSpec> classical_specs() {
  return {DomainSpec::type1(1, 1), DomainSpec::type1(1, 3), DomainSpec::type1(2, 2), DomainSpec::type1(2, 3),
          DomainSpec::type2(4),    DomainSpec::type3(2),    DomainSpec::type3(3),    DomainSpec::type4(5)};
}

TEST(DomainSpec, DimensionAndGenusTable) {
  EXPECT_EQ(dimension_genus(DomainSpec::type1(2, 2)), std::make_pair(4, 4));
  EXPECT_EQ(dimension_genus(DomainSpec::type1(2, 3)), std::make_pair(6, 5));
  EXPECT_EQ(dimension_genus(DomainSpec::type2(4)), std::make_pair(6, 6));
  EXPECT_EQ(dimension_genus(DomainSpec::type2(5)), std::make_pair(10, 8));
  EXPECT_EQ(dimension_genus(DomainSpec::type3(3)), std::make_pair(6, 4));
  EXPECT_EQ(dimension_genus(DomainSpec::type4(7)), std::make_pair(7, 7));
  EXPECT_EQ(dimension_genus(DomainSpec::exc5()), std::make_pair(16, 12));
  EXPECT_EQ(dimension_genus(DomainSpec::exc6()), std::make_pair(27, 18));
}

TEST(DomainSpec, ParameterValidation) {
  EXPECT_THROW(DomainSpec::type1(0, 2), std::invalid_argument);
  EXPECT_THROW(DomainSpec::type2(3), std::invalid_argument);
  EXPECT_THROW(DomainSpec::type3(1), std::invalid_argument);
  EXPECT_THROW(DomainSpec::type4(4), std::invalid_argument);
  EXPECT_TRUE(DomainSpec::type1(1, 4).is_ball());
  EXPECT_TRUE(DomainSpec::type1(3, 1).is_ball());
  EXPECT_FALSE(DomainSpec::type1(2, 2).is_ball());
  EXPECT_EQ(DomainSpec::type1(1, 2).label(), "type1(1,2)");
}

TEST(DomainContains, OriginAndDiskBoundary) {
  for (const auto& s : classical_specs()) EXPECT_TRUE(contains(s, Eigen::VectorXcd::Zero(s.dimension()))) << s.label();
  const auto disk = DomainSpec::type1(1, 1);
  EXPECT_TRUE(contains(disk, Eigen::VectorXcd::Constant(1, 0.5)));
  EXPECT_FALSE(contains(disk, Eigen::VectorXcd::Constant(1, 1.0)));
  EXPECT_THROW(contains(DomainSpec::exc5(), Eigen::VectorXcd::Zero(16)), std::invalid_argument);
}

TEST(DomainContains, TypeFourNeedsBothInequalities) {
  const auto s = DomainSpec::type4(5);
  Eigen::VectorXcd z = Eigen::VectorXcd::Zero(5);
  z(0) = 0.6;
  z(1) = cd(0, 0.6);  // sum z^2 = 0, |z|^2 = 0.72, 1 - 2|z|^2 < 0
  EXPECT_FALSE(contains(s, z));
  z(1) = 0.6;  // sum z^2 = 0.72: 1 - 1.44 + 0.5184 > 0 and |z|^2 < 1
  EXPECT_TRUE(contains(s, z));
}

TEST(GenericNorm, ConstantTermAndHermitianSymmetry) {
  for (const auto& s : classical_specs()) {
    const int d = s.dimension();
    const Jet n0 = generic_norm_jet(s, BasePoint{Eigen::VectorXcd::Zero(d)}, {2, 2});
    EXPECT_NEAR(std::abs(n0.constant_term() - cd(1)), 0.0, 1e-15) << s.label();
    for (const auto& p : sample_interior(s, 9, 3)) {
      const Jet n = generic_norm_jet(s, p, {2, 2});
      const double value = generic_norm_value(s, p.coordinates);
      EXPECT_NEAR(n.constant_term().real(), value, 1e-13) << s.label();
      EXPECT_GT(value, 0.0);
      EXPECT_LE(value, 1.0);
      EXPECT_LT(max_abs_difference(n, conjugate_swap(n)), 1e-13) << s.label();
    }
  }
}

TEST(GenericNorm, DiskAndTypeFourClosedForms) {
  const Jet disk = generic_norm_jet(DomainSpec::type1(1, 1), BasePoint{Eigen::VectorXcd::Zero(1)}, {2, 2});
  EXPECT_EQ(disk.coefficient({{1}, {1}}), cd(-1));
  EXPECT_EQ(disk.coefficient({{2}, {2}}), cd(0));

  const auto s = DomainSpec::type4(5);
  const Jet n = generic_norm_jet(s, BasePoint{Eigen::VectorXcd::Zero(5)}, {2, 2});
  // 1 - 2 sum z zbar + (sum z^2)(sum zbar^2)
  EXPECT_EQ(n.coefficient({{1, 0, 0, 0, 0}, {1, 0, 0, 0, 0}}), cd(-2));
  EXPECT_EQ(n.coefficient({{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}}), cd(0));
  EXPECT_EQ(n.coefficient({{2, 0, 0, 0, 0}, {0, 2, 0, 0, 0}}), cd(1));
  EXPECT_EQ(n.coefficient({{1, 1, 0, 0, 0}, {1, 1, 0, 0, 0}}), cd(0));
  EXPECT_THROW(generic_norm_jet(DomainSpec::exc6(), BasePoint{Eigen::VectorXcd::Zero(27)}, {1, 1}), std::invalid_argument);
}

TEST(GenericNorm, ValueMatchesDefinitionForTypeTwo) {
  // N = det(I - Z Z*)^{1/2} for the skew matrix assembled from coordinates.
  const auto s = DomainSpec::type2(4);
  for (const auto& p : sample_interior(s, 4, 3)) {
    const Eigen::MatrixXcd z = coordinate_matrix(s, p.coordinates);
    EXPECT_LT((z + z.transpose()).norm(), 1e-15);
    const double det = (Eigen::MatrixXcd::Identity(4, 4) - z * z.adjoint()).determinant().real();
    EXPECT_NEAR(generic_norm_value(s, p.coordinates), std::sqrt(det), 1e-13);
  }
}

TEST(SampleInterior, DeterministicAndInterior) {
  for (const auto& s : classical_specs()) {
    EXPECT_TRUE(sample_interior(s, 1, 0).empty());
    const auto a = sample_interior(s, 77, 12);
    const auto b = sample_interior(s, 77, 12);
    ASSERT_EQ(a.size(), 12u);
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_TRUE(contains(s, a[i].coordinates));
      EXPECT_GE(generic_norm_value(s, a[i].coordinates), kSampleNormFloor);
      EXPECT_EQ(a[i].coordinates, b[i].coordinates);
      for (const auto& x : a[i].coordinates) EXPECT_LE(std::abs(x), 1.0 / std::sqrt(s.dimension()) + 1e-15);
    }
    EXPECT_NE(sample_interior(s, 78, 1)[0].coordinates, a[0].coordinates);
  }
}

TEST(TypeOne, TransposeSymmetry) {
  // (m, n) and (n, m) describe isometric domains; Bergman invariants at
  // corresponding points agree.
  const auto a = DomainSpec::type1(2, 3), b = DomainSpec::type1(3, 2);
  for (const auto& p : sample_interior(a, 5, 2)) {
    const Eigen::MatrixXcd z = coordinate_matrix(a, p.coordinates);
    const Eigen::MatrixXcd zt = z.transpose();
    Eigen::VectorXcd qt(6);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 2; ++j) qt(i * 2 + j) = zt(i, j);
    }
    EXPECT_NEAR(generic_norm_value(a, p.coordinates), generic_norm_value(b, qt), 1e-14);
    const auto ra = analyze_potential(bergman_potential_jet(a, p, {2, 2}));
    const auto rb = analyze_potential(bergman_potential_jet(b, BasePoint{qt}, {2, 2}));
    EXPECT_NEAR(ra.k, rb.k, 1e-9);
    EXPECT_NEAR(ra.norm_R_sq, rb.norm_R_sq, 1e-9);
    EXPECT_NEAR(ra.norm_Ric_sq, rb.norm_Ric_sq, 1e-9);
  }
}

}  // namespace
}  // namespace kahler
