#pragma once

// Generalized Pauli matrices X, Z in prime dimension r, validated basis pairs
// (E, F) with f_i = w * dual(E)_i, and the unitary translation operators
//
//   T_(x,y) = X^{x_e1} Z^{y_f1} (x) ... (x) X^{x_en} Z^{y_fn}
//
// acting on n particles of dimension r each. Particle 1 is the leftmost
// (most significant) tensor factor. Exponents are field-expansion
// coefficients computed in F_r and lifted to integers 0..r-1.

#include <utility>
#include <vector>

#include "wignerff/errors.hpp"
#include "wignerff/geometry.hpp"
#include "wignerff/linalg.hpp"

namespace wignerff {

// Cyclic shift X|k> = |k+1 mod r> and clock Z|k> = eta^k |k>, eta = e^{2 pi i / r}.
inline std::pair<Matrix, Matrix> shift_clock(int r) {
    if (!detail::is_prime(r)) throw std::invalid_argument("shift_clock requires prime r");
    Matrix X = Matrix::Zero(r, r);
    Matrix Z = Matrix::Zero(r, r);
    for (int k = 0; k < r; ++k) {
        X((k + 1) % r, k) = 1.0;
        Z(k, k) = root_of_unity(k, r);
    }
    return {X, Z};
}

// Field bases for the two phase-space axes. F is forced to be w * dual(E);
// both duals are kept for fast coefficient expansion.
struct BasisPair {
    FieldBasis E;
    FieldBasis F;
    FieldBasis E_dual;
    FieldBasis F_dual;
    FieldElement w;

    Field field() const { return E.field(); }
};

namespace detail {

inline BasisPair make_pair_checked(FieldBasis E, FieldBasis F, FieldElement w) {
    FieldBasis Ed = dual_basis(E);
    FieldBasis Fd = dual_basis(F);
    return BasisPair{std::move(E), std::move(F), std::move(Ed), std::move(Fd), w};
}

} // namespace detail

// Returns the validated pair carrying the unique w with f_i = w * dual(e)_i,
// or throws NoSuchWError. This is exactly the condition under which all
// parallel-translation operators commute.
inline BasisPair validate_basis_pair(const FieldBasis& E, const FieldBasis& F) {
    if (E.field() != F.field()) throw std::invalid_argument("basis pair from different fields");
    FieldBasis Ed = dual_basis(E);
    FieldElement w = E.field().zero();
    bool found = false;
    for (int i = 0; i < E.size(); ++i) {
        if (Ed.at(i).is_zero()) continue;
        w = F.at(i) / Ed.at(i);
        found = true;
        break;
    }
    if (!found || w.is_zero()) throw NoSuchWError("no nonzero w relates F to the dual of E");
    for (int i = 0; i < E.size(); ++i)
        if (F.at(i) != w * Ed.at(i))
            throw NoSuchWError("no single w satisfies f_i = w * dual(e)_i for all i");
    return detail::make_pair_checked(E, F, w);
}

inline BasisPair basis_pair_with_w(const FieldBasis& E, const FieldElement& w) {
    if (w.is_zero()) throw std::invalid_argument("w must be nonzero");
    FieldBasis Ed = dual_basis(E);
    std::vector<FieldElement> felems;
    felems.reserve(E.size());
    for (int i = 0; i < E.size(); ++i) felems.push_back(w * Ed.at(i));
    return detail::make_pair_checked(E, FieldBasis(std::move(felems)), w);
}

// Library-wide default pair. Prime fields use E = F = (1). F_4 uses the
// E = F = (omega, 1) pair every F_4 table in this library is keyed to. Other
// extension fields use the polynomial basis with w = 1.
inline BasisPair default_basis_pair(const Field& f) {
    if (f.degree() == 1)
        return basis_pair_with_w(FieldBasis({f.one()}), f.one());
    if (f.size() == 4) {
        FieldBasis E({f.element(2), f.one()});
        return validate_basis_pair(E, E);
    }
    return basis_pair_with_w(polynomial_basis(f), f.one());
}

// True for the F_4 pair E = F = (omega, 1), to which the bundled golden
// tables (basis figures, labels, discriminant) are pinned.
inline bool is_f4_reference_pair(const BasisPair& pair) {
    const Field f = pair.field();
    if (f.size() != 4 || f.characteristic() != 2) return false;
    return pair.E.at(0).index() == 2 && pair.E.at(1).index() == 1 &&
           pair.F.at(0).index() == 2 && pair.F.at(1).index() == 1;
}

// Eq-style translation operator for arbitrary bases; the pair overload below
// is the validated entry point.
inline Matrix translation_operator_raw(const PhasePoint& alpha, const FieldBasis& E_dual,
                                       const FieldBasis& F_dual) {
    const Field f = alpha.field();
    const int r = f.characteristic();
    auto [X, Z] = shift_clock(r);
    std::vector<int> xe = expand_in_dual(alpha.q, E_dual);
    std::vector<int> yf = expand_in_dual(alpha.p, F_dual);
    Matrix T;
    for (int i = 0; i < f.degree(); ++i) {
        Matrix factor = Matrix::Identity(r, r);
        for (int k = 0; k < xe[i]; ++k) factor = X * factor;
        for (int k = 0; k < yf[i]; ++k) factor = factor * Z;
        T = (i == 0) ? factor : kron(T, factor);
    }
    return T;
}

inline Matrix translation_operator(const PhasePoint& alpha, const BasisPair& pair) {
    return translation_operator_raw(alpha, pair.E_dual, pair.F_dual);
}

// Scalar with T_a T_b T_a^+ T_b^+ = scalar * I, i.e. eta^(x.p - q.y) where the
// dot products pair the expansion coefficients of a = (q,p) and b = (x,y).
inline Complex commutation_phase(const PhasePoint& alpha, const PhasePoint& beta,
                                 const BasisPair& pair) {
    const int r = alpha.field().characteristic();
    std::vector<int> qe = expand_in_dual(alpha.q, pair.E_dual);
    std::vector<int> pf = expand_in_dual(alpha.p, pair.F_dual);
    std::vector<int> xe = expand_in_dual(beta.q, pair.E_dual);
    std::vector<int> yf = expand_in_dual(beta.p, pair.F_dual);
    long k = 0;
    for (std::size_t l = 0; l < qe.size(); ++l) k += xe[l] * pf[l] - qe[l] * yf[l];
    return root_of_unity(k, r);
}

// T_a T_b = eta^(x.p) T_{a+b}; exposing the exponent keeps phase bookkeeping
// exact where it matters (joint eigenbases, conjugation maps).
inline int translation_product_exponent(const PhasePoint& alpha, const PhasePoint& beta,
                                        const BasisPair& pair) {
    const int r = alpha.field().characteristic();
    std::vector<int> pf = expand_in_dual(alpha.p, pair.F_dual);
    std::vector<int> xe = expand_in_dual(beta.q, pair.E_dual);
    long k = 0;
    for (std::size_t l = 0; l < pf.size(); ++l) k += xe[l] * pf[l];
    return static_cast<int>(((k % r) + r) % r);
}

} // namespace wignerff
