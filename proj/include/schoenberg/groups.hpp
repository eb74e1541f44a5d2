// Finite model of the group factor L: a validated multiplication table with
// element 0 as the neutral element, complex-valued functions on it, and
// positive-definiteness tests. For finite groups the Gram-matrix test over
// all elements decides membership in P(L) exactly; on cyclic groups an
// independent discrete Fourier route is available as a cross-check.

#pragma once

#include <complex>
#include <string>
#include <vector>

namespace schoenberg {

struct GroupSpec {
    int order = 1;
    std::vector<int> mul; // row-major: mul[a*order + b] = a*b
    std::vector<int> inv;

    int op(int a, int b) const { return mul[static_cast<size_t>(a) * order + b]; }
    int inverse(int a) const { return inv[a]; }
};

GroupSpec make_cyclic(int k);
GroupSpec make_product(const GroupSpec& a, const GroupSpec& b);

// Validates identity, inverses and full associativity; throws
// std::invalid_argument with a witness on any axiom violation.
GroupSpec make_from_table(int order, const std::vector<int>& mul);

struct GroupFunction {
    std::vector<std::complex<double>> values; // indexed by element

    std::complex<double> at(int u) const { return values[u]; }
};

// phi(u^{-1}) == conj(phi(u)) within tol.
bool hermitian_symmetric(const GroupFunction& phi, const GroupSpec& g, double tol = 1e-12);

enum class PdKind { pd, not_pd, non_hermitian };

struct PdVerdict {
    PdKind kind = PdKind::pd;
    double min_eigenvalue = 0.0;
    double trace = 0.0;
    std::vector<std::complex<double>> witness; // not_pd only
    double witness_quadform = 0.0;             // re-evaluated c* M c
    double hermitian_defect = 0.0;             // non_hermitian only

    bool ok() const { return kind == PdKind::pd; }
};

// Membership test for P(L): assembles M[u,v] = phi(u^{-1} v) over the whole
// group and tests hermitian positive semidefiniteness with threshold
// -tol * |trace|.
PdVerdict pd_check_group(const GroupFunction& phi, const GroupSpec& g, double tol = 1e-10);

struct BochnerResult {
    std::vector<std::complex<double>> spectrum; // DFT of phi
    bool pd = false;
};

// Independent oracle on Z_k: phi is positive definite iff its DFT is
// (real and) nonnegative.
BochnerResult bochner_check_cyclic(const GroupFunction& phi, int k, double tol = 1e-10);

} // namespace schoenberg
