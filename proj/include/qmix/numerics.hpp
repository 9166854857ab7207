#pragma once

#include "qmix/errors.hpp"

#include <Eigen/Dense>

#include <complex>

namespace qmix {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Hermiticity / trace / PSD checks share this tolerance; operations that
// compose two eigendecompositions promise one order less (1e-8).
inline constexpr double kHermTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;

/// Eigendecomposition of a Hermitian matrix. Eigenvalues are real and
/// sorted ascending; column j of eigenvectors matches eigenvalues[j].
struct Spectrum {
    RealVector eigenvalues;
    ComplexMatrix eigenvectors;
};

/// Largest entry magnitude, max_ij |a_ij|.
double max_abs(const ComplexMatrix& a);

/// Kronecker product: out[(i*rb+k),(j*cb+l)] = a(i,j) * b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Throws NonHermitianError unless h is square and ‖h − h†‖_max ≤ 1e-10.
Spectrum eig_hermitian(const ComplexMatrix& h);

/// Hermitian PSD square root; eigenvalues in [-1e-10, 0) are clamped to 0,
/// smaller ones raise NotPsdError.
ComplexMatrix sqrt_psd(const ComplexMatrix& h);

/// Σ|λ| over the spectrum of a Hermitian matrix.
double trace_norm(const ComplexMatrix& a);

}  // namespace qmix
