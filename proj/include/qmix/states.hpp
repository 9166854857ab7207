#pragma once

#include "qmix/numerics.hpp"
#include "qmix/registers.hpp"

#include <vector>

namespace qmix {

/// Unit-norm pure state on n qubits (2^n amplitudes).
class StateVector {
public:
    /// Validates the length (power of two) and the norm (Σ|a|² = 1 within 1e-10).
    explicit StateVector(ComplexVector amplitudes);

    const ComplexVector& amplitudes() const { return amps_; }
    int qubits() const { return n_qubits_; }
    Eigen::Index dim() const { return amps_.size(); }

private:
    ComplexVector amps_;
    int n_qubits_;
};

/// Mixed state: Hermitian, PSD, unit-trace 2^n x 2^n matrix.
///
/// This constructor only checks the shape; it is meant for matrices produced
/// by operations that preserve the invariants. Externally supplied matrices
/// must enter through validate_density.
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix matrix);

    const ComplexMatrix& matrix() const { return m_; }
    int qubits() const { return n_qubits_; }
    Eigen::Index dim() const { return m_.rows(); }

private:
    ComplexMatrix m_;
    int n_qubits_;
};

/// Standard basis vector |index> on n_qubits qubits.
StateVector ket(std::size_t index, int n_qubits);

/// Rank-1 projector |psi><psi|.
DensityMatrix density(const StateVector& psi);

/// Convex mixture Σ w_i ρ_i. Weights must be nonnegative and sum to 1
/// within 1e-10; no silent renormalization.
DensityMatrix mix(const std::vector<double>& weights, const std::vector<DensityMatrix>& states);

/// Depolarizing blend (1-p)·ρ0 + p·I/d.
DensityMatrix depolarize(const DensityMatrix& rho0, double p);

/// Checked constructor for matrices from outside the library. Verifies the
/// dimension (square, power of two), Hermiticity, unit trace, and positive
/// semidefiniteness, each within tol, and names the violated invariant on
/// failure.
DensityMatrix validate_density(const ComplexMatrix& rho, double tol = kHermTol);

}  // namespace qmix
