#include "qmix/numerics.hpp"

#include <string>

namespace qmix {

double max_abs(const ComplexMatrix& a) {
    return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

namespace {

void require_hermitian(const ComplexMatrix& h, const char* who) {
    if (h.rows() != h.cols())
        throw NonHermitianError(std::string(who) + ": matrix is not square");
    if (max_abs(h - h.adjoint()) > kHermTol)
        throw NonHermitianError(std::string(who) + ": matrix deviates from Hermitian by more than 1e-10");
}

}  // namespace

Spectrum eig_hermitian(const ComplexMatrix& h) {
    require_hermitian(h, "eig_hermitian");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    if (solver.info() != Eigen::Success)
        throw Error("eig_hermitian: eigensolver did not converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix sqrt_psd(const ComplexMatrix& h) {
    Spectrum s = eig_hermitian(h);
    RealVector lambda = s.eigenvalues;
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < -kPsdTol)
            throw NotPsdError("sqrt_psd: eigenvalue " + std::to_string(lambda[i]) + " below -1e-10");
        if (lambda[i] < 0.0) lambda[i] = 0.0;
    }
    return s.eigenvectors * lambda.cwiseSqrt().asDiagonal() * s.eigenvectors.adjoint();
}

double trace_norm(const ComplexMatrix& a) {
    return eig_hermitian(a).eigenvalues.cwiseAbs().sum();
}

}  // namespace qmix
