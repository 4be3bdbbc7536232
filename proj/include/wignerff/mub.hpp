#pragma once

// The orthonormal eigenbasis each striation induces, and mutual unbiasedness
// of the resulting N+1 bases.
//
// For a striation with direction d, the N commuting operators T_{s d}
// (s in F_N) determine a unique joint eigenbasis. Vectors are labeled by
// field elements: within every striation except the vertical one, the vector
// labeled u is the (phase-normalized) image of the label-0 vector under the
// vertical translation T_{(0,u)}; the vertical striation instead uses the
// horizontal translations T_{(u,0)}. The choice of label-0 vector per
// striation is a convention: the vertical anchor is |0...0>, the horizontal
// anchor is the uniform vector, and slope anchors are chosen by the smallest
// eigenvalue-angle tuple, except on the F_4 reference pair where the anchors
// are pinned to the library's golden tables.

#include <array>
#include <vector>

#include "wignerff/geometry.hpp"
#include "wignerff/linalg.hpp"
#include "wignerff/weylops.hpp"

namespace wignerff {

struct StriationBasis {
    int striation_index = 0;
    PhasePoint direction;
    std::vector<CVector> vectors;   // indexed by label element index

    FieldElement label_of(int k) const { return direction.field().element(k); }
};

struct MubFamily {
    Field field;
    std::vector<StriationBasis> bases;  // striation order
};

namespace detail {

// Family T_{s d} indexed by the element index of s.
inline std::vector<Matrix> striation_family(const PhasePoint& d, const BasisPair& pair) {
    Field f = d.field();
    std::vector<Matrix> T;
    T.reserve(f.size());
    for (const auto& s : f.elements()) T.push_back(translation_operator(s * d, pair));
    return T;
}

// One joint eigenvector of a commuting family whose members satisfy
// B^{2r} = I. Subspaces are refined one generator at a time with spectral
// projectors obtained by group averaging, so no general eigensolver is
// involved and the result is deterministic.
inline CVector joint_eigenvector_seed(const Field& f, const std::vector<Matrix>& T) {
    const int r = f.characteristic();
    const int order = 2 * r;
    const int N = f.size();
    Matrix V = Matrix::Identity(N, N);
    for (int j = 0; j < f.degree(); ++j) {
        if (V.cols() == 1) break;
        int gen_idx = 1;
        for (int k = 0; k < j; ++k) gen_idx *= r;   // element index of x^j
        Matrix B = V.adjoint() * T[gen_idx] * V;
        // Spectral projector for the first eigenvalue (in root order) that occurs.
        std::vector<Matrix> powers(order);
        powers[0] = Matrix::Identity(B.rows(), B.cols());
        for (int k = 1; k < order; ++k) powers[k] = powers[k - 1] * B;
        for (int root = 0; root < order; ++root) {
            Matrix P = Matrix::Zero(B.rows(), B.cols());
            for (int k = 0; k < order; ++k)
                P += std::conj(root_of_unity(static_cast<long>(root) * k, order)) * powers[k];
            P /= static_cast<double>(order);
            const double tr = P.trace().real();
            if (tr < 0.5) continue;
            const int rank = static_cast<int>(tr + 0.5);
            Eigen::ColPivHouseholderQR<Matrix> qr(P);
            Matrix Q = qr.householderQ();
            V = V * Q.leftCols(rank);
            break;
        }
    }
    if (V.cols() != 1) throw std::logic_error("joint eigenspace refinement did not reach dimension 1");
    return phase_normalized(V.col(0));
}

// Eigenvalue tuple c_s = <v| T_s |v>, renormalized onto the unit circle.
inline std::vector<Complex> eigenvalue_tuple(const CVector& v, const std::vector<Matrix>& T) {
    std::vector<Complex> c(T.size());
    for (std::size_t s = 0; s < T.size(); ++s) {
        Complex val = v.dot(T[s] * v);
        c[s] = val / std::abs(val);
    }
    return c;
}

// Additive character chi_u(s) = eta^{tr(u s)}.
inline Complex additive_character(const FieldElement& u, const FieldElement& s) {
    return root_of_unity(trace_int(u * s), u.field().characteristic());
}

// Rank-1 projector onto the joint eigenvector with tuple c:
// P = (1/N) sum_s conj(c_s) T_s.
inline Matrix tuple_projector(const Field& f, const std::vector<Matrix>& T,
                              const std::vector<Complex>& c) {
    const int N = f.size();
    Matrix P = Matrix::Zero(N, N);
    for (int s = 0; s < N; ++s) P += std::conj(c[s]) * T[s];
    return P / static_cast<double>(N);
}

inline CVector vector_from_rank1(const Matrix& P) {
    Eigen::Index best = 0;
    double best_norm = -1.0;
    for (Eigen::Index j = 0; j < P.cols(); ++j) {
        const double n = P.col(j).norm();
        if (n > best_norm) { best_norm = n; best = j; }
    }
    return phase_normalized(P.col(best) / best_norm);
}

// Eigenvalues of translation operators are 2r-th roots of unity; compare
// tuples by their integer angles.
inline std::vector<int> angle_key(const std::vector<Complex>& c, int order) {
    const double two_pi = 6.283185307179586476925286766559;
    std::vector<int> key;
    key.reserve(c.size());
    for (const auto& z : c) {
        double a = std::arg(z);
        if (a < 0) a += two_pi;
        int k = static_cast<int>(a * order / two_pi + 0.5) % order;
        key.push_back(k);
    }
    return key;
}

// Label-0 vectors of the three slope striations on the F_4 reference pair,
// keyed by the slope element index m = 1, omega, omega-bar.
inline CVector f4_pinned_anchor(int m_index) {
    const Complex i(0.0, 1.0);
    std::array<std::array<Complex, 4>, 3> table = {{
        {1.0, -i, i, 1.0},     // slope 1
        {1.0, 1.0, i, -i},     // slope omega
        {1.0, -i, 1.0, i},     // slope omega-bar
    }};
    CVector v(4);
    for (int k = 0; k < 4; ++k) v(k) = 0.5 * table[m_index - 1][k];
    return v;
}

inline CVector striation_anchor(const Field& f, const Striation& S, const BasisPair& pair,
                                const std::vector<Matrix>& T) {
    const int N = f.size();
    if (S.index == 0) {                       // vertical: standard basis
        CVector v = CVector::Zero(N);
        v(0) = 1.0;
        return v;
    }
    if (S.index == 1)                         // horizontal: uniform Fourier vector
        return CVector::Constant(N, 1.0 / std::sqrt(static_cast<double>(N)));
    if (is_f4_reference_pair(pair))
        return f4_pinned_anchor(S.index - 1);

    const int order = 2 * f.characteristic();
    CVector seed = joint_eigenvector_seed(f, T);
    std::vector<Complex> base = eigenvalue_tuple(seed, T);
    // Candidate tuples are the character multiples of any one valid tuple;
    // pick the lexicographically smallest angle key.
    std::vector<Complex> best;
    std::vector<int> best_key;
    for (const auto& u : f.elements()) {
        std::vector<Complex> cand(base.size());
        for (int s = 0; s < N; ++s) cand[s] = additive_character(u, f.element(s)) * base[s];
        std::vector<int> key = angle_key(cand, order);
        if (best.empty() || key < best_key) { best = cand; best_key = key; }
    }
    return vector_from_rank1(tuple_projector(f, T, best));
}

} // namespace detail

inline StriationBasis striation_eigenbasis(const Field& f, const Striation& S,
                                           const BasisPair& pair) {
    std::vector<Matrix> T = detail::striation_family(S.direction, pair);
    CVector anchor = detail::striation_anchor(f, S, pair, T);

    StriationBasis basis;
    basis.striation_index = S.index;
    basis.direction = S.direction;
    basis.vectors.resize(f.size());
    for (const auto& u : f.elements()) {
        PhasePoint shift = (S.index == 0) ? PhasePoint{u, f.zero()} : PhasePoint{f.zero(), u};
        Matrix Tu = translation_operator(shift, pair);
        basis.vectors[u.index()] = phase_normalized(Tu * anchor);
    }
    return basis;
}

inline MubFamily mub_family(const Field& f, const BasisPair& pair) {
    MubFamily fam;
    fam.field = f;
    for (const auto& S : striations(f))
        fam.bases.push_back(striation_eigenbasis(f, S, pair));
    return fam;
}

struct MubReport {
    double max_unbiased_deviation = 0.0;       // max | |<u|v>|^2 - 1/N | across bases
    double max_orthonormality_residual = 0.0;  // max | <u|v> - delta | within a basis
    long cross_pairs = 0;
};

inline MubReport verify_mub(const MubFamily& fam) {
    MubReport rep;
    const int N = fam.field.size();
    const double target = 1.0 / N;
    for (std::size_t b = 0; b < fam.bases.size(); ++b) {
        const auto& B = fam.bases[b].vectors;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                const Complex g = B[i].dot(B[j]);
                const double want = (i == j) ? 1.0 : 0.0;
                rep.max_orthonormality_residual =
                    std::max(rep.max_orthonormality_residual, std::abs(g - want));
            }
        for (std::size_t b2 = b + 1; b2 < fam.bases.size(); ++b2) {
            const auto& C = fam.bases[b2].vectors;
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) {
                    const double ov = std::norm(B[i].dot(C[j]));
                    rep.max_unbiased_deviation =
                        std::max(rep.max_unbiased_deviation, std::abs(ov - target));
                    ++rep.cross_pairs;
                }
        }
    }
    return rep;
}

} // namespace wignerff
