#pragma once

#include <initializer_list>
#include <vector>

#include "relqbit/spinor.hpp"

namespace relqbit {

/// Largest number of fermionic modes (state space 2^n).
inline constexpr int kMaxFermionModes = 10;

/// Largest bosonic truncation dimension.
inline constexpr int kMaxBoseDim = 4096;

/// Dense d x d complex matrix acting on a finite state space.
class OperatorMatrix {
  public:
    explicit OperatorMatrix(int dim);
    OperatorMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static OperatorMatrix identity(int dim);

    int dim() const { return dim_; }

    cplx operator()(int row, int col) const { return a_[static_cast<std::size_t>(row) * dim_ + col]; }
    cplx& operator()(int row, int col) { return a_[static_cast<std::size_t>(row) * dim_ + col]; }

    OperatorMatrix adjoint() const;
    cplx trace() const;
    double max_abs() const;
    double max_abs_diff(const OperatorMatrix& other) const;

    static OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b);

  private:
    int dim_;
    std::vector<cplx> a_;
};

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator*(const cplx& s, const OperatorMatrix& a);

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix anticommutator(const OperatorMatrix& a, const OperatorMatrix& b);

/// Single fermionic mode on a two-state space.
struct FermionOps {
    OperatorMatrix a;
    OperatorMatrix a_star;
    OperatorMatrix number;  // a* a
};

/// The 2x2 ladder matrices with a = [[0,0],[1,0]] and N = a*a = diag(1,0);
/// they satisfy a*a + aa* = 1 with exact integer entries.
FermionOps fermi_single();

/// n fermionic modes on a 2^n-dimensional space.
struct ModeSet {
    int modes;
    std::vector<OperatorMatrix> lower;  // a_k
    std::vector<OperatorMatrix> raise;  // a_k*
};

/// Builds a_k = S^(k-1) (x) a (x) 1^(n-k) with the sign operator
/// S = diag(1,-1) on every preceding mode, so all pairwise anticommutation
/// relations hold with exact integer arithmetic. n must be 1..kMaxFermionModes.
ModeSet fermi_modes(int modes);

/// Bosonic ladder pair on a d-dimensional truncated space.
struct BoseOps {
    OperatorMatrix c;
    OperatorMatrix c_star;
};

/// c maps the n-th occupation state to sqrt(n) times the (n-1)-th; c_star is
/// the conjugate transpose. cc* - c*c = diag(1,...,1,-(d-1)). d must be
/// 2..kMaxBoseDim.
BoseOps bose_truncated(int dim);

/// Largest absolute entry of (cc* - c*c) - 1 for the truncated ladder.
/// Both products are diagonal with integer entries (the squared ladder
/// amplitudes), so the value is computed exactly: it is d, from the corner
/// entry -(d-1) - 1. Strictly positive for every finite dimension.
double commutator_defect(int dim);

struct CommutatorReport {
    cplx trace;                // trace(AB - BA)
    double trace_tolerance;    // 1e-9 * d * max product entry
    bool traceless;            // |trace| <= trace_tolerance
    double identity_distance;  // max entry of |[A,B] - 1|
    bool identity_excluded;    // identity_distance >= 1 - 1e-9
};

/// Computes [A,B] = AB - BA, reports its trace and its max-entry distance
/// from the identity, and checks that a traceless commutator stays at least
/// distance 1 - 1e-9 from the identity. A violation of that implication is
/// impossible in exact arithmetic and raises std::logic_error.
CommutatorReport check_traceless_commutator(const OperatorMatrix& a, const OperatorMatrix& b);

/// Free-field operator e^(-i phi) c + e^(i phi) c* on the truncated space,
/// with phase phi = p.x in the (+,-,-,-) inner product. Hermitian by
/// construction.
OperatorMatrix field_operator(const FourVector& momentum, const FourVector& position, int dim);

}  // namespace relqbit
