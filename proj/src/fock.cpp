#include "relqbit/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace relqbit {

OperatorMatrix::OperatorMatrix(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("dimension must be positive");
    a_.assign(static_cast<std::size_t>(dim) * dim, cplx{});
}

OperatorMatrix::OperatorMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : OperatorMatrix(static_cast<int>(rows.size())) {
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != dim_) {
            throw std::invalid_argument("matrix rows must be square");
        }
        int j = 0;
        for (const cplx& e : row) (*this)(i, j++) = e;
        ++i;
    }
}

OperatorMatrix OperatorMatrix::identity(int dim) {
    OperatorMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

OperatorMatrix OperatorMatrix::adjoint() const {
    OperatorMatrix r(dim_);
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) r(i, j) = std::conj((*this)(j, i));
    }
    return r;
}

cplx OperatorMatrix::trace() const {
    cplx t{};
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double OperatorMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& e : a_) m = std::max(m, std::abs(e));
    return m;
}

double OperatorMatrix::max_abs_diff(const OperatorMatrix& other) const {
    if (other.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a_.size(); ++i) m = std::max(m, std::abs(a_[i] - other.a_[i]));
    return m;
}

OperatorMatrix OperatorMatrix::kron(const OperatorMatrix& a, const OperatorMatrix& b) {
    const int da = a.dim(), db = b.dim();
    OperatorMatrix r(da * db);
    for (int i1 = 0; i1 < da; ++i1) {
        for (int j1 = 0; j1 < da; ++j1) {
            const cplx f = a(i1, j1);
            if (f == cplx{}) continue;
            for (int i2 = 0; i2 < db; ++i2) {
                for (int j2 = 0; j2 < db; ++j2) {
                    r(i1 * db + i2, j1 * db + j2) = f * b(i2, j2);
                }
            }
        }
    }
    return r;
}

namespace {

void require_same_dim(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
}

}  // namespace

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_same_dim(a, b);
    OperatorMatrix r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_same_dim(a, b);
    OperatorMatrix r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_same_dim(a, b);
    const int d = a.dim();
    OperatorMatrix r(d);
    for (int i = 0; i < d; ++i) {
        for (int k = 0; k < d; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (int j = 0; j < d; ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

OperatorMatrix operator*(const cplx& s, const OperatorMatrix& a) {
    OperatorMatrix r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r(i, j) = s * a(i, j);
    return r;
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
    return a * b - b * a;
}

OperatorMatrix anticommutator(const OperatorMatrix& a, const OperatorMatrix& b) {
    return a * b + b * a;
}

FermionOps fermi_single() {
    OperatorMatrix a{{0.0, 0.0}, {1.0, 0.0}};
    OperatorMatrix a_star = a.adjoint();
    OperatorMatrix number = a_star * a;
    return {a, a_star, number};
}

ModeSet fermi_modes(int modes) {
    if (modes < 1 || modes > kMaxFermionModes) {
        throw std::invalid_argument("mode count out of range");
    }
    const OperatorMatrix a{{0.0, 0.0}, {1.0, 0.0}};
    const OperatorMatrix sign{{1.0, 0.0}, {0.0, -1.0}};
    ModeSet set{modes, {}, {}};
    for (int k = 0; k < modes; ++k) {
        OperatorMatrix op(1);
        op(0, 0) = 1.0;
        for (int j = 0; j < modes; ++j) {
            const OperatorMatrix& factor =
                (j < k) ? sign : (j == k) ? a : OperatorMatrix::identity(2);
            op = OperatorMatrix::kron(op, factor);
        }
        set.raise.push_back(op.adjoint());
        set.lower.push_back(std::move(op));
    }
    return set;
}

BoseOps bose_truncated(int dim) {
    if (dim < 2) throw std::invalid_argument("truncated space needs dimension >= 2");
    if (dim > kMaxBoseDim) throw std::invalid_argument("dimension above cap");
    OperatorMatrix c(dim);
    for (int n = 1; n < dim; ++n) c(n - 1, n) = std::sqrt(static_cast<double>(n));
    return {c, c.adjoint()};
}

double commutator_defect(int dim) {
    if (dim < 2) throw std::invalid_argument("truncated space needs dimension >= 2");
    if (dim > kMaxBoseDim) throw std::invalid_argument("dimension above cap");
    // cc* and c*c are diagonal; their entries are squared ladder amplitudes,
    // i.e. exact integers, so the defect matrix is formed in integer
    // arithmetic. Off-diagonal entries of the commutator vanish identically.
    double worst = 0.0;
    for (int n = 0; n < dim; ++n) {
        const long long up = (n < dim - 1) ? n + 1 : 0;  // (cc*)_nn
        const long long down = n;                        // (c*c)_nn
        worst = std::max(worst, std::abs(static_cast<double>(up - down - 1)));
    }
    return worst;
}

CommutatorReport check_traceless_commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_same_dim(a, b);
    const OperatorMatrix ab = a * b;
    const OperatorMatrix ba = b * a;
    const OperatorMatrix comm = ab - ba;
    CommutatorReport report;
    report.trace = comm.trace();
    report.trace_tolerance =
        1e-9 * a.dim() * std::max({1.0, ab.max_abs(), ba.max_abs()});
    report.traceless = std::abs(report.trace) <= report.trace_tolerance;
    report.identity_distance = comm.max_abs_diff(OperatorMatrix::identity(a.dim()));
    report.identity_excluded = report.identity_distance >= 1.0 - 1e-9;
    if (report.traceless && !report.identity_excluded) {
        throw std::logic_error("traceless commutator reached the identity");
    }
    return report;
}

OperatorMatrix field_operator(const FourVector& momentum, const FourVector& position, int dim) {
    const double phase = momentum.t * position.t - momentum.x * position.x -
                         momentum.y * position.y - momentum.z * position.z;
    const BoseOps ops = bose_truncated(dim);
    return std::polar(1.0, -phase) * ops.c + std::polar(1.0, phase) * ops.c_star;
}

}  // namespace relqbit
