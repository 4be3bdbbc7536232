#pragma once

// Phase-point operators A_alpha, the Wigner transform and its inverse, line
// marginals, and tomographic reconstruction from per-striation measurement
// probabilities.
//
//   A_alpha = [sum over lines through alpha of Q(lambda)] - I
//   W_alpha = (1/N) Tr(rho A_alpha)
//   rho     = sum_alpha W_alpha A_alpha
//
// Tolerance discipline: identities built from exact roots of unity are
// checked at 1e-10 in the tests; anything downstream of an eigensolve or a
// reconstruction chain uses 1e-8.

#include <vector>

#include "wignerff/errors.hpp"
#include "wignerff/net.hpp"

namespace wignerff {

struct WignerMap {
    Field field;
    RealMatrix values;  // (q index, p index)

    double at(const PhasePoint& x) const { return values(x.q.index(), x.p.index()); }
    double sum() const { return values.sum(); }
};

// Hermiticity, unit trace and positivity within tolerance; throws on failure.
inline void validate_density(const Matrix& rho, double tol = 1e-8) {
    if (rho.rows() != rho.cols()) throw std::invalid_argument("density matrix must be square");
    if (max_abs(rho - rho.adjoint()) > tol)
        throw std::invalid_argument("density matrix is not Hermitian");
    if (std::abs(rho.trace() - Complex(1.0, 0.0)) > tol)
        throw std::invalid_argument("density matrix trace must be 1");
    Eigen::SelfAdjointEigenSolver<Matrix> es((rho + rho.adjoint()) / 2.0);
    if (es.eigenvalues().minCoeff() < -tol)
        throw std::invalid_argument("density matrix has a negative eigenvalue");
}

struct PhasePointOperators {
    Field field;
    std::vector<Matrix> ops;  // by point index

    const Matrix& at(const PhasePoint& x) const { return ops[x.index()]; }
    const Matrix& at_index(int i) const { return ops[i]; }
};

inline PhasePointOperators phase_point_operators(const QuantumNet& net) {
    const Field& f = net.field();
    const int N = f.size();
    PhasePointOperators out;
    out.field = f;
    out.ops.reserve(static_cast<std::size_t>(N) * N);
    for (int idx = 0; idx < N * N; ++idx) {
        Matrix A = -Matrix::Identity(N, N);
        for (const auto& [s, c] : net.space().lines_through(idx)) A += net.projector(s, c);
        out.ops.push_back(std::move(A));
    }
    return out;
}

inline WignerMap wigner_transform(const Matrix& rho, const PhasePointOperators& A) {
    const Field& f = A.field;
    const int N = f.size();
    if (rho.rows() != N || rho.cols() != N)
        throw std::invalid_argument("state dimension does not match the net");
    WignerMap W{f, RealMatrix::Zero(N, N)};
    for (int qi = 0; qi < N; ++qi)
        for (int pi = 0; pi < N; ++pi)
            W.values(qi, pi) = (rho * A.at_index(qi * N + pi)).trace().real() / N;
    return W;
}

inline WignerMap wigner_transform(const Matrix& rho, const QuantumNet& net) {
    return wigner_transform(rho, phase_point_operators(net));
}

inline Matrix inverse_wigner(const WignerMap& W, const PhasePointOperators& A) {
    const int N = W.field.size();
    Matrix rho = Matrix::Zero(N, N);
    for (int qi = 0; qi < N; ++qi)
        for (int pi = 0; pi < N; ++pi)
            rho += W.values(qi, pi) * A.at_index(qi * N + pi);
    return rho;
}

inline Matrix inverse_wigner(const WignerMap& W, const QuantumNet& net) {
    return inverse_wigner(W, phase_point_operators(net));
}

// Sum of W over the line; equals Tr[rho Q(lambda)] for the W of rho.
inline double line_marginal(const WignerMap& W, const Line& l) {
    double sum = 0.0;
    for (const auto& x : l.points()) sum += W.at(x);
    return sum;
}

// Measurement probabilities Tr[rho Q(lambda)], [striation][offset].
struct LineProbabilities {
    std::vector<std::vector<double>> values;
};

inline LineProbabilities line_probabilities(const Matrix& rho, const QuantumNet& net) {
    const Field& f = net.field();
    LineProbabilities P;
    P.values.assign(striation_count(f), std::vector<double>(f.size(), 0.0));
    for (int s = 0; s < striation_count(f); ++s)
        for (int c = 0; c < f.size(); ++c)
            P.values[s][c] = (rho * net.projector(s, c)).trace().real();
    return P;
}

struct TomographyResult {
    WignerMap wigner;
    double max_striation_deviation = 0.0;  // raw |sum - 1| before normalization
};

// W_alpha = (1/N) [ sum over lines through alpha of P(lambda) - 1 ].
// Frequencies are accepted: each striation is normalized to total 1 first and
// the worst raw deviation is reported; beyond consistency_tol the input is
// rejected as inconsistent.
inline TomographyResult tomographic_reconstruct(const LineProbabilities& P, const QuantumNet& net,
                                                double consistency_tol = 1e-6) {
    const Field& f = net.field();
    const int N = f.size();
    if (static_cast<int>(P.values.size()) != striation_count(f))
        throw std::invalid_argument("probabilities must cover all striations");
    TomographyResult result;
    std::vector<std::vector<double>> norm(P.values);
    for (int s = 0; s < striation_count(f); ++s) {
        if (static_cast<int>(P.values[s].size()) != N)
            throw std::invalid_argument("probabilities must cover all lines of each striation");
        double sum = 0.0;
        for (double v : P.values[s]) sum += v;
        result.max_striation_deviation = std::max(result.max_striation_deviation, std::abs(sum - 1.0));
        if (std::abs(sum - 1.0) > consistency_tol)
            throw InconsistentProbabilitiesError("striation " + std::to_string(s) +
                                                 " probabilities sum to " + std::to_string(sum));
        for (double& v : norm[s]) v /= sum;
    }
    result.wigner = WignerMap{f, RealMatrix::Zero(N, N)};
    for (int qi = 0; qi < N; ++qi)
        for (int pi = 0; pi < N; ++pi) {
            double acc = -1.0;
            for (const auto& [s, c] : net.space().lines_through(qi * N + pi)) acc += norm[s][c];
            result.wigner.values(qi, pi) = acc / N;
        }
    return result;
}

} // namespace wignerff
