#include "relqbit/dirac.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace relqbit {

Mat4 Mat4::identity() {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
}

Mat4 Mat4::adjoint() const {
    Mat4 r;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) r(i, j) = std::conj((*this)(j, i));
    }
    return r;
}

double Mat4::max_abs_diff(const Mat4& other) const {
    double m = 0.0;
    for (int i = 0; i < 16; ++i) m = std::max(m, std::abs(m_[i] - other.m_[i]));
    return m;
}

std::array<cplx, 4> Mat4::apply(const std::array<cplx, 4>& v) const {
    std::array<cplx, 4> out{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) out[i] += (*this)(i, j) * v[j];
    }
    return out;
}

Mat4 operator+(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

Mat4 operator-(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

Mat4 operator*(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 4; ++i) {
        for (int k = 0; k < 4; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (int j = 0; j < 4; ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

Mat4 operator*(const cplx& s, const Mat4& a) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = s * a(i, j);
    return r;
}

GammaMatrix gamma(int mu) {
    if (mu < 0 || mu > 3) throw std::invalid_argument("gamma index must be 0..3");
    Mat4 g;
    if (mu == 0) {
        for (int i = 0; i < 2; ++i) {
            g(i, i + 2) = 1.0;
            g(i + 2, i) = 1.0;
        }
        return g;
    }
    const Mat2 s = (mu == 1) ? pauli_x() : (mu == 2) ? pauli_y() : pauli_z();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            g(i, j + 2) = -s(i, j);
            g(i + 2, j) = s(i, j);
        }
    }
    return g;
}

Q2BitAmplitudes to_q2bit(const Bispinor& psi) {
    return {psi.phi_r.c0, psi.phi_l.c0, psi.phi_r.c1, psi.phi_l.c1};
}

Bispinor from_q2bit(const Q2BitAmplitudes& amps) {
    return {{amps.c00, amps.c10}, {amps.c01, amps.c11}};
}

FourVector current(const Bispinor& psi) {
    // Block form of psi* gamma^0 gamma^mu psi: the right-handed half
    // contributes its Pauli 4-vector, the left-handed half the parity image.
    const cplx r_cross = psi.phi_r.c0 * std::conj(psi.phi_r.c1);
    const cplx l_cross = psi.phi_l.c0 * std::conj(psi.phi_l.c1);
    return {psi.phi_r.norm_sq() + psi.phi_l.norm_sq(),
            2.0 * r_cross.real() - 2.0 * l_cross.real(),
            -2.0 * r_cross.imag() + 2.0 * l_cross.imag(),
            (std::norm(psi.phi_r.c0) - std::norm(psi.phi_r.c1)) -
                (std::norm(psi.phi_l.c0) - std::norm(psi.phi_l.c1))};
}

double invariant_scalar(const Bispinor& psi) {
    return 2.0 * inner(psi.phi_r, psi.phi_l).real();
}

namespace {

/// Inverse via the adjugate; valid only for unit-determinant matrices.
Mat2 unit_det_inverse(const Mat2& m) {
    return {m(1, 1), -m(0, 1), -m(1, 0), m(0, 0)};
}

}  // namespace

Bispinor transform_bispinor(const SpinMatrix& a, const Bispinor& psi) {
    const Mat2& m = a.matrix();
    const Mat2 left = unit_det_inverse(m.adjoint());
    return {m * psi.phi_r, left * psi.phi_l};
}

Bispinor parity(const Bispinor& psi) { return {psi.phi_l, psi.phi_r}; }

}  // namespace relqbit
