#pragma once

#include <array>

#include "relqbit/lorentz.hpp"
#include "relqbit/spinor.hpp"

namespace relqbit {

/// Four complex amplitudes of a massive spin-1/2 state, stored as a
/// right-handed and a left-handed Weyl half. The flat component order is
/// (psi0, psi1, psi2, psi3) = (phi_r.c0, phi_r.c1, phi_l.c0, phi_l.c1).
struct Bispinor {
    WeylSpinor phi_r;
    WeylSpinor phi_l;

    std::array<cplx, 4> components() const { return {phi_r.c0, phi_r.c1, phi_l.c0, phi_l.c1}; }
    static Bispinor from_components(const std::array<cplx, 4>& c) {
        return {{c[0], c[1]}, {c[2], c[3]}};
    }

    double norm_sq() const { return phi_r.norm_sq() + phi_l.norm_sq(); }
};

/// The same state indexed as two qubits: first index spin (0 = upper
/// component), second index chirality (0 = right-handed).
struct Q2BitAmplitudes {
    cplx c00;
    cplx c01;
    cplx c10;
    cplx c11;
};

/// Dense 4x4 complex matrix, row major.
class Mat4 {
  public:
    Mat4() = default;

    static Mat4 identity();

    cplx operator()(int row, int col) const { return m_[row * 4 + col]; }
    cplx& operator()(int row, int col) { return m_[row * 4 + col]; }

    Mat4 adjoint() const;
    double max_abs_diff(const Mat4& other) const;

    std::array<cplx, 4> apply(const std::array<cplx, 4>& v) const;

  private:
    std::array<cplx, 16> m_{};
};

Mat4 operator+(const Mat4& a, const Mat4& b);
Mat4 operator-(const Mat4& a, const Mat4& b);
Mat4 operator*(const Mat4& a, const Mat4& b);
Mat4 operator*(const cplx& s, const Mat4& a);

using GammaMatrix = Mat4;

/// Gamma matrix in the chiral block form: gamma^0 swaps the two halves,
/// gamma^i has blocks (0, -sigma_i; sigma_i, 0). mu must be in {0,1,2,3}.
GammaMatrix gamma(int mu);

Q2BitAmplitudes to_q2bit(const Bispinor& psi);
Bispinor from_q2bit(const Q2BitAmplitudes& amps);

/// The current j^mu = psi* gamma^0 gamma^mu psi; all components real, with
/// j^0 = sum |psi_i|^2 >= 0.
FourVector current(const Bispinor& psi);

/// psi* gamma^0 psi = phi_r*phi_l + phi_l*phi_r; real, and unchanged by
/// every transform_bispinor.
double invariant_scalar(const Bispinor& psi);

/// Chiral action: phi_r -> A phi_r, phi_l -> (A*)^-1 phi_l, where A* is the
/// conjugate transpose. Unitary A moves both halves the same way.
Bispinor transform_bispinor(const SpinMatrix& a, const Bispinor& psi);

/// Spatial reflection: swaps the two Weyl halves. An involution.
Bispinor parity(const Bispinor& psi);

}  // namespace relqbit
