#include "relqbit/spinor.hpp"

#include <algorithm>
#include <stdexcept>

namespace relqbit {

cplx ExtendedComplex::value() const {
    if (infinite_) throw std::domain_error("point at infinity has no finite value");
    return value_;
}

double Mat2::max_abs() const {
    double m = 0.0;
    for (const cplx& e : m_) m = std::max(m, std::abs(e));
    return m;
}

double Mat2::max_abs_diff(const Mat2& other) const {
    double m = 0.0;
    for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(m_[i] - other.m_[i]));
    return m;
}

bool Mat2::is_hermitian(double tol) const {
    return max_abs_diff(adjoint()) <= tol;
}

bool Mat2::is_unitary(double tol) const {
    return ((*this) * adjoint()).max_abs_diff(identity()) <= tol;
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
    return {a(0, 0) + b(0, 0), a(0, 1) + b(0, 1), a(1, 0) + b(1, 0), a(1, 1) + b(1, 1)};
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
    return {a(0, 0) - b(0, 0), a(0, 1) - b(0, 1), a(1, 0) - b(1, 0), a(1, 1) - b(1, 1)};
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
            a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)};
}

Mat2 operator*(const cplx& s, const Mat2& a) {
    return {s * a(0, 0), s * a(0, 1), s * a(1, 0), s * a(1, 1)};
}

Mat2 operator-(const Mat2& a) { return cplx{-1.0, 0.0} * a; }

WeylSpinor operator*(const Mat2& a, const WeylSpinor& psi) {
    return {a(0, 0) * psi.c0 + a(0, 1) * psi.c1, a(1, 0) * psi.c0 + a(1, 1) * psi.c1};
}

Mat2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
Mat2 pauli_y() { return {0.0, cplx{0.0, -1.0}, cplx{0.0, 1.0}, 0.0}; }
Mat2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }

Mat2 pauli_vector(const Vec3& n) {
    return {cplx{n.z, 0.0}, cplx{n.x, -n.y}, cplx{n.x, n.y}, cplx{-n.z, 0.0}};
}

HermitianMatrix2::HermitianMatrix2(const Mat2& m) : m_(m) {
    if (!m.is_hermitian()) throw std::invalid_argument("matrix is not Hermitian");
}

namespace {

void require_nonzero(const WeylSpinor& psi) {
    if (psi.is_zero()) throw std::domain_error("zero state has no ray");
}

}  // namespace

WeylSpinor normalize(const WeylSpinor& psi) {
    require_nonzero(psi);
    const double inv = 1.0 / psi.norm();
    return {inv * psi.c0, inv * psi.c1};
}

ExtendedComplex ray_coordinate(const WeylSpinor& psi) {
    require_nonzero(psi);
    if (std::abs(psi.c1) <= kInfinityThreshold * std::abs(psi.c0)) {
        return ExtendedComplex::infinity();
    }
    return psi.c0 / psi.c1;
}

Vec3 riemann_point(const WeylSpinor& psi) {
    require_nonzero(psi);
    const FourVector v = bloch_extended(psi);
    const double inv = 1.0 / v.t;
    return {inv * v.x, inv * v.y, inv * v.z};
}

FourVector bloch_extended(const WeylSpinor& psi) {
    require_nonzero(psi);
    const cplx cross = psi.c0 * std::conj(psi.c1);
    return {std::norm(psi.c0) + std::norm(psi.c1),  // T
            2.0 * cross.real(),                     // X = c0 conj(c1) + c1 conj(c0)
            -2.0 * cross.imag(),                    // Y = i (c0 conj(c1) - c1 conj(c0))
            std::norm(psi.c0) - std::norm(psi.c1)};
}

HermitianMatrix2 v_matrix(const WeylSpinor& psi) {
    const cplx cross = psi.c0 * std::conj(psi.c1);
    return HermitianMatrix2{Mat2{2.0 * std::norm(psi.c0), 2.0 * cross,
                                 2.0 * std::conj(cross), 2.0 * std::norm(psi.c1)}};
}

FourVector pauli_decompose(const HermitianMatrix2& v) {
    const Mat2& m = v.matrix();
    return {0.5 * (m(0, 0) + m(1, 1)).real(),
            0.5 * (m(0, 1) + m(1, 0)).real(),
            0.5 * (cplx{0.0, 1.0} * (m(0, 1) - m(1, 0))).real(),
            0.5 * (m(0, 0) - m(1, 1)).real()};
}

HermitianMatrix2 pauli_compose(const FourVector& v) {
    return HermitianMatrix2{Mat2{cplx{v.t + v.z, 0.0}, cplx{v.x, -v.y},
                                 cplx{v.x, v.y}, cplx{v.t - v.z, 0.0}}};
}

}  // namespace relqbit
