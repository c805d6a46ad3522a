#pragma once

#include <cstddef>
#include <vector>

#include "twinwalk/matrix.hpp"

namespace twinwalk {

inline constexpr double kDefaultClusterTol = 1e-8;
inline constexpr double kDefaultIntTol = 1e-6;

/// Raw output of the Jacobi solver: eigenvalues in ascending order and the
/// matching orthonormal eigenvectors stored as columns.
struct EigenPairs {
    std::vector<double> values;
    RealMatrix vectors;
    int sweeps = 0;
};

/// Cyclic Jacobi rotations. Stops once the off-diagonal Frobenius norm drops
/// below 1e-13 * ||a||_F; throws ConvergenceFailure after 100 sweeps.
EigenPairs jacobi_eigen(const SymmetricMatrix& a);

/// Distinct eigenvalues (ascending) with their orthogonal spectral projectors.
struct Spectrum {
    std::size_t n = 0;
    std::vector<double> values;
    std::vector<SymmetricMatrix> projectors;
    std::vector<std::size_t> multiplicities;

    std::size_t distinct_count() const noexcept { return values.size(); }
    double spectral_radius() const;
};

/// Eigenvalues closer than cluster_tol * max(1, ||l||_F) are merged into one
/// distinct value (their mean) whose projector sums the cluster's v v^T.
Spectrum eigendecompose(const SymmetricMatrix& l, double cluster_tol = kDefaultClusterTol);

struct SpectrumDefects {
    double idempotency = 0.0;      ///< max_j ||E_j E_j - E_j||_max
    double orthogonality = 0.0;    ///< max_{i != j} ||E_i E_j||_max
    double completeness = 0.0;     ///< ||sum_j E_j - I||_max
    double reconstruction = 0.0;   ///< ||sum_j mu_j E_j - source||_max
};

SpectrumDefects spectrum_defects(const Spectrum& s, const SymmetricMatrix& source);

/// True when the defects sit inside the documented invariant bounds.
bool spectrum_invariants_hold(const Spectrum& s, const SymmetricMatrix& source);

bool is_integral_spectrum(const Spectrum& s, double int_tol = kDefaultIntTol);

/// exp(-i t h) by scaling and squaring a degree-18 Taylor polynomial. Shares
/// no code with the spectral route, so it serves as an independent check.
ComplexMatrix matrix_exp_oracle(const SymmetricMatrix& h, double t);

}  // namespace twinwalk
