// Monte-Carlo positivity verification: sample point sets on S^d or
// Omega_{2q}, assemble the Gram matrix of the kernel over the product with
// group elements, and test hermitian positive semidefiniteness. A failed
// check carries a witness vector whose quadratic form is re-evaluated
// directly from kernel values, independently of the eigensolver.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "schoenberg/groups.hpp"
#include "schoenberg/kernels.hpp"

namespace schoenberg {

struct SpherePointSet {
    bool complex_space = false;
    int dim = 1; // d for S^d, q for Omega_{2q}
    std::uint64_t seed = 0;
    std::vector<std::vector<double>> real_pts;                // (d+1)-vectors
    std::vector<std::vector<std::complex<double>>> complex_pts; // q-vectors

    std::size_t size() const { return complex_space ? complex_pts.size() : real_pts.size(); }
};

// Uniform points as normalized Gaussian vectors; the Gaussian stream is
// hand-rolled on top of mt19937_64 so identical seeds give identical point
// sets regardless of the standard library.
SpherePointSet sample_sphere_real(int d, int count, std::uint64_t seed);
SpherePointSet sample_sphere_complex(int q, int count, std::uint64_t seed);

struct GramReport {
    int size = 0;
    double min_eigenvalue = 0.0;
    double trace = 0.0;
    PdKind verdict = PdKind::pd;
    std::vector<std::complex<double>> witness;
    double witness_quadform = 0.0; // re-evaluated independently
    double hermitian_defect = 0.0;
};

// group_subset: element ids entering the product index set; empty means the
// whole group. Throws std::invalid_argument if the product size exceeds
// max_size. tol is relative to the trace.
GramReport gram_check(const RealKernelModel& f, const SpherePointSet& pts, const GroupSpec& g,
                      const std::vector<int>& group_subset = {}, double tol = 1e-8,
                      std::size_t max_size = 400);

GramReport gram_check(const ComplexKernelModel& f, const SpherePointSet& pts, const GroupSpec& g,
                      const std::vector<int>& group_subset = {}, double tol = 1e-8,
                      std::size_t max_size = 400);

} // namespace schoenberg
