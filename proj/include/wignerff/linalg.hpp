#pragma once

// Small helpers around Eigen dense complex matrices shared by the operator
// modules. All state-space matrices in this library are dense MatrixXcd.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>

namespace wignerff {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

inline Complex root_of_unity(long k, int order) {
    const double two_pi = 6.283185307179586476925286766559;
    long m = k % order;
    if (m < 0) m += order;
    return std::polar(1.0, two_pi * static_cast<double>(m) / order);
}

inline Matrix kron(const Matrix& A, const Matrix& B) {
    Matrix out(A.rows() * B.rows(), A.cols() * B.cols());
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j)
            out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    return out;
}

inline Matrix dagger(const Matrix& A) { return A.adjoint(); }

inline double max_abs(const Matrix& A) { return A.cwiseAbs().maxCoeff(); }

inline double max_abs_diff(const Matrix& A, const Matrix& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) return 1e300;
    return max_abs(A - B);
}

inline bool approx_equal(const Matrix& A, const Matrix& B, double tol) {
    return max_abs_diff(A, B) <= tol;
}

inline double unitarity_residual(const Matrix& U) {
    return max_abs(U * U.adjoint() - Matrix::Identity(U.rows(), U.cols()));
}

// Global phase fixed so the first entry with magnitude above zero_tol is real
// positive.
inline CVector phase_normalized(CVector v, double zero_tol = 1e-8) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double m = std::abs(v(i));
        if (m > zero_tol) {
            v *= std::conj(v(i)) / m;
            break;
        }
    }
    return v;
}

inline double overlap_magnitude(const CVector& u, const CVector& v) {
    return std::abs(u.dot(v));
}

// Scalar s with A ~= s * B, when it exists within tol; read off at B's
// largest entry and verified everywhere.
inline std::optional<Complex> proportionality_factor(const Matrix& A, const Matrix& B, double tol = 1e-8) {
    Eigen::Index bi = 0, bj = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < B.rows(); ++i)
        for (Eigen::Index j = 0; j < B.cols(); ++j)
            if (std::abs(B(i, j)) > best) { best = std::abs(B(i, j)); bi = i; bj = j; }
    if (best < tol) return std::nullopt;
    Complex s = A(bi, bj) / B(bi, bj);
    if (max_abs(A - s * B) > tol) return std::nullopt;
    return s;
}

inline Matrix outer(const CVector& v) { return v * v.adjoint(); }

} // namespace wignerff
