#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "relqbit/spinor.hpp"

namespace relqbit {

/// Tolerance on |det - 1| when a matrix claims unit determinant.
inline constexpr double kUnitDetTol = 1e-10;

/// Tolerance on unit axes.
inline constexpr double kUnitAxisTol = 1e-10;

/// Entrywise tolerance for the metric-preservation check L^T eta L = eta.
inline constexpr double kMetricTol = 1e-9;

/// 2x2 complex matrix of unit determinant; an element of SL(2,C).
class SpinMatrix {
  public:
    /// Throws std::invalid_argument unless |det m - 1| <= kUnitDetTol.
    explicit SpinMatrix(const Mat2& m);

    /// Rescales m by a square root of its determinant before construction.
    /// Throws std::invalid_argument when m is singular.
    static SpinMatrix unit_determinant(const Mat2& m);

    static SpinMatrix identity() { return SpinMatrix{Mat2::identity()}; }

    const Mat2& matrix() const { return m_; }

    /// True when the conjugate transpose equals the inverse, i.e. the
    /// element lies in the SU(2) subgroup.
    bool is_unitary(double tol = kUnitDetTol) const { return m_.is_unitary(tol); }

    SpinMatrix operator-() const;

  private:
    Mat2 m_;
};

SpinMatrix operator*(const SpinMatrix& a, const SpinMatrix& b);

/// 4x4 real matrix preserving the Minkowski quadratic form.
class LorentzMatrix {
  public:
    using Entries = std::array<std::array<double, 4>, 4>;

    /// Throws std::invalid_argument unless L^T eta L = eta within kMetricTol.
    explicit LorentzMatrix(const Entries& entries);

    static LorentzMatrix identity();

    double operator()(int row, int col) const { return e_[row][col]; }

    FourVector apply(const FourVector& v) const;

    double max_abs_diff(const LorentzMatrix& other) const;

  private:
    Entries e_;
};

LorentzMatrix operator*(const LorentzMatrix& a, const LorentzMatrix& b);

/// cos(angle/2) 1 - i sin(angle/2) n.sigma; the axis must be unit length.
SpinMatrix su2_rotation(const Vec3& axis, double angle);

/// cosh(rapidity/2) 1 + sinh(rapidity/2) n.sigma; Hermitian, unit determinant.
SpinMatrix sl2_boost(const Vec3& axis, double rapidity);

/// psi' = A psi.
WeylSpinor act_spinor(const SpinMatrix& a, const WeylSpinor& psi);

/// The vector of A V A* with V = pauli_compose(v); preserves minkowski_norm.
FourVector act_four_vector(const SpinMatrix& a, const FourVector& v);

/// The 4x4 matrix whose columns are the images of the basis vectors under
/// act_four_vector; A and -A produce the same matrix.
LorentzMatrix lorentz_matrix_of(const SpinMatrix& a);

/// T^2 - X^2 - Y^2 - Z^2.
double minkowski_norm(const FourVector& v);

/// Minkowski inner product u.v with signature (+,-,-,-).
double minkowski_dot(const FourVector& u, const FourVector& v);

/// Splits v into two null vectors summing to v. Purely temporal vectors are
/// split along the z axis.
std::pair<FourVector, FourVector> null_decompose(const FourVector& v);

/// Max of | ||A psi|| - 1 | over `samples` normalized spinors drawn from a
/// seeded generator; zero (to machine precision) exactly when A is unitary.
double unitarity_defect(const SpinMatrix& a, int samples, std::uint64_t seed = 1);

}  // namespace relqbit
