#include "relqbit/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace relqbit {

SpinMatrix::SpinMatrix(const Mat2& m) : m_(m) {
    if (std::abs(m.det() - cplx{1.0, 0.0}) > kUnitDetTol) {
        throw std::invalid_argument("matrix determinant is not 1");
    }
}

SpinMatrix SpinMatrix::unit_determinant(const Mat2& m) {
    const cplx d = m.det();
    if (std::abs(d) < 1e-12) throw std::invalid_argument("singular matrix has no unit-determinant rescaling");
    return SpinMatrix{(1.0 / std::sqrt(d)) * m};
}

SpinMatrix SpinMatrix::operator-() const {
    SpinMatrix r = *this;
    r.m_ = -r.m_;
    return r;
}

SpinMatrix operator*(const SpinMatrix& a, const SpinMatrix& b) {
    return SpinMatrix{a.matrix() * b.matrix()};
}

namespace {

constexpr double kEta[4] = {1.0, -1.0, -1.0, -1.0};

}  // namespace

LorentzMatrix::LorentzMatrix(const Entries& entries) : e_(entries) {
    // L^T eta L must reproduce eta.
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += e_[k][i] * kEta[k] * e_[k][j];
            const double want = (i == j) ? kEta[i] : 0.0;
            if (std::abs(s - want) > kMetricTol) {
                throw std::invalid_argument("matrix does not preserve the Minkowski form");
            }
        }
    }
}

LorentzMatrix LorentzMatrix::identity() {
    Entries e{};
    for (int i = 0; i < 4; ++i) e[i][i] = 1.0;
    return LorentzMatrix{e};
}

FourVector LorentzMatrix::apply(const FourVector& v) const {
    const double in[4] = {v.t, v.x, v.y, v.z};
    double out[4] = {0.0, 0.0, 0.0, 0.0};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) out[i] += e_[i][j] * in[j];
    }
    return {out[0], out[1], out[2], out[3]};
}

double LorentzMatrix::max_abs_diff(const LorentzMatrix& other) const {
    double m = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) m = std::max(m, std::abs(e_[i][j] - other.e_[i][j]));
    }
    return m;
}

LorentzMatrix operator*(const LorentzMatrix& a, const LorentzMatrix& b) {
    LorentzMatrix::Entries e{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
            e[i][j] = s;
        }
    }
    return LorentzMatrix{e};
}

namespace {

void require_unit_axis(const Vec3& axis) {
    if (std::abs(axis.norm() - 1.0) > kUnitAxisTol) {
        throw std::invalid_argument("axis must be a unit vector");
    }
}

}  // namespace

SpinMatrix su2_rotation(const Vec3& axis, double angle) {
    require_unit_axis(axis);
    const double c = std::cos(0.5 * angle);
    const double s = std::sin(0.5 * angle);
    const Mat2 m = cplx{c, 0.0} * Mat2::identity() + cplx{0.0, -s} * pauli_vector(axis);
    return SpinMatrix{m};
}

SpinMatrix sl2_boost(const Vec3& axis, double rapidity) {
    require_unit_axis(axis);
    const double ch = std::cosh(0.5 * rapidity);
    const double sh = std::sinh(0.5 * rapidity);
    const Mat2 m = cplx{ch, 0.0} * Mat2::identity() + cplx{sh, 0.0} * pauli_vector(axis);
    return SpinMatrix{m};
}

WeylSpinor act_spinor(const SpinMatrix& a, const WeylSpinor& psi) {
    return a.matrix() * psi;
}

FourVector act_four_vector(const SpinMatrix& a, const FourVector& v) {
    const Mat2& m = a.matrix();
    Mat2 w = m * pauli_compose(v).matrix() * m.adjoint();
    // Conjugation of a Hermitian matrix is Hermitian; fold the eps-level
    // asymmetry of the two independently computed off-diagonal entries.
    const cplx off = 0.5 * (w(0, 1) + std::conj(w(1, 0)));
    w(0, 1) = off;
    w(1, 0) = std::conj(off);
    w(0, 0) = cplx{w(0, 0).real(), 0.0};
    w(1, 1) = cplx{w(1, 1).real(), 0.0};
    return pauli_decompose(HermitianMatrix2{w});
}

LorentzMatrix lorentz_matrix_of(const SpinMatrix& a) {
    static const FourVector basis[4] = {
        {1.0, 0.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 1.0, 0.0}, {0.0, 0.0, 0.0, 1.0}};
    LorentzMatrix::Entries e{};
    for (int j = 0; j < 4; ++j) {
        const FourVector col = act_four_vector(a, basis[j]);
        e[0][j] = col.t;
        e[1][j] = col.x;
        e[2][j] = col.y;
        e[3][j] = col.z;
    }
    return LorentzMatrix{e};
}

double minkowski_norm(const FourVector& v) { return minkowski_dot(v, v); }

double minkowski_dot(const FourVector& u, const FourVector& v) {
    return u.t * v.t - u.x * v.x - u.y * v.y - u.z * v.z;
}

std::pair<FourVector, FourVector> null_decompose(const FourVector& v) {
    const double r = v.spatial().norm();
    FourVector head;
    if (r > 0.0) {
        const double scale = (v.t + r) / (2.0 * r);
        head = {0.5 * (v.t + r), scale * v.x, scale * v.y, scale * v.z};
    } else {
        head = {0.5 * v.t, 0.0, 0.0, 0.5 * v.t};
    }
    return {head, v - head};
}

double unitarity_defect(const SpinMatrix& a, int samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("need at least one sample");
    std::mt19937_64 rng(seed);
    // 53-bit uniform in [0,1); avoids distribution objects so the sample
    // sequence is identical on every platform.
    const auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double zc = 2.0 * uniform() - 1.0;  // cos of the polar angle
        const double phase = 2.0 * M_PI * uniform();
        const WeylSpinor psi{cplx{std::sqrt(0.5 * (1.0 + zc)), 0.0},
                             std::polar(std::sqrt(0.5 * (1.0 - zc)), phase)};
        worst = std::max(worst, std::abs(act_spinor(a, psi).norm() - 1.0));
    }
    return worst;
}

}  // namespace relqbit
