#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace relqbit {

using cplx = std::complex<double>;

/// Entrywise tolerance for accepting a matrix as Hermitian.
inline constexpr double kHermitianTol = 1e-12;

/// |c1|/|c0| threshold below which the ray coordinate is reported as infinite.
inline constexpr double kInfinityThreshold = 1e-14;

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

/// Real 4-vector (T, X, Y, Z); metric signature is (+,-,-,-).
struct FourVector {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 spatial() const { return {x, y, z}; }
};

inline FourVector operator+(const FourVector& a, const FourVector& b) {
    return {a.t + b.t, a.x + b.x, a.y + b.y, a.z + b.z};
}
inline FourVector operator-(const FourVector& a, const FourVector& b) {
    return {a.t - b.t, a.x - b.x, a.y - b.y, a.z - b.z};
}
inline FourVector operator*(double s, const FourVector& v) {
    return {s * v.t, s * v.x, s * v.y, s * v.z};
}

/// Two complex amplitudes of a spin-1/2 state.
struct WeylSpinor {
    cplx c0{};
    cplx c1{};

    double norm_sq() const { return std::norm(c0) + std::norm(c1); }
    double norm() const { return std::sqrt(norm_sq()); }
    bool is_zero() const { return c0 == cplx{} && c1 == cplx{}; }
};

inline WeylSpinor operator*(const cplx& s, const WeylSpinor& psi) {
    return {s * psi.c0, s * psi.c1};
}
inline WeylSpinor operator+(const WeylSpinor& a, const WeylSpinor& b) {
    return {a.c0 + b.c0, a.c1 + b.c1};
}

/// Hermitian inner product <a|b>, antilinear in the first argument.
inline cplx inner(const WeylSpinor& a, const WeylSpinor& b) {
    return std::conj(a.c0) * b.c0 + std::conj(a.c1) * b.c1;
}

/// A point of the extended complex plane C + {infinity}.
class ExtendedComplex {
  public:
    ExtendedComplex(cplx value) : value_(value) {}

    static ExtendedComplex infinity() {
        ExtendedComplex p{cplx{}};
        p.infinite_ = true;
        return p;
    }

    bool is_infinite() const { return infinite_; }

    /// Finite value; throws std::domain_error at the point at infinity.
    cplx value() const;

  private:
    cplx value_;
    bool infinite_ = false;
};

/// Dense 2x2 complex matrix, row major.
class Mat2 {
  public:
    Mat2() = default;
    Mat2(cplx m00, cplx m01, cplx m10, cplx m11) : m_{m00, m01, m10, m11} {}

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    cplx operator()(int row, int col) const { return m_[row * 2 + col]; }
    cplx& operator()(int row, int col) { return m_[row * 2 + col]; }

    Mat2 adjoint() const {
        return {std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]), std::conj(m_[3])};
    }

    cplx det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
    cplx trace() const { return m_[0] + m_[3]; }

    double max_abs() const;
    double max_abs_diff(const Mat2& other) const;
    bool is_hermitian(double tol = kHermitianTol) const;
    bool is_unitary(double tol) const;

  private:
    std::array<cplx, 4> m_{};
};

Mat2 operator+(const Mat2& a, const Mat2& b);
Mat2 operator-(const Mat2& a, const Mat2& b);
Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 operator*(const cplx& s, const Mat2& a);
Mat2 operator-(const Mat2& a);
WeylSpinor operator*(const Mat2& a, const WeylSpinor& psi);

Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();

/// n.sigma for a direction n.
Mat2 pauli_vector(const Vec3& n);

/// 2x2 matrix whose entries are validated Hermitian at construction.
class HermitianMatrix2 {
  public:
    /// Throws std::invalid_argument when m deviates from its conjugate
    /// transpose by more than kHermitianTol in any entry.
    explicit HermitianMatrix2(const Mat2& m);

    const Mat2& matrix() const { return m_; }

  private:
    Mat2 m_;
};

/// Rescales to unit norm. Zero input has no ray and throws std::domain_error.
WeylSpinor normalize(const WeylSpinor& psi);

/// Projective coordinate c0/c1 of the ray through psi; infinite when c1 = 0.
ExtendedComplex ray_coordinate(const WeylSpinor& psi);

/// Unit sphere point of the ray, by stereographic projection of c0/c1.
Vec3 riemann_point(const WeylSpinor& psi);

/// The 4-vector (|c0|^2+|c1|^2, psi*sigma psi); null by construction.
FourVector bloch_extended(const WeylSpinor& psi);

/// Twice the outer product psi psi*; Hermitian with zero determinant.
HermitianMatrix2 v_matrix(const WeylSpinor& psi);

/// Coefficients (T, X, Y, Z) of V = T 1 + X sx + Y sy + Z sz.
FourVector pauli_decompose(const HermitianMatrix2& v);

/// Builds T 1 + X sx + Y sy + Z sz from the coefficients.
HermitianMatrix2 pauli_compose(const FourVector& v);

}  // namespace relqbit
