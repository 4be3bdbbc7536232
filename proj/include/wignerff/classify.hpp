#pragma once

// Classification of quantum nets: the unitarily invariant triple product
// Gamma, equivalence testing, the unitaries U_L realizing unit-determinant
// phase-space maps on the state space, SL(2, F_N) orbit computation with a
// Burnside cross-check, the F_4 discriminant D, the odd-prime symmetric net,
// and the F_4 tensor-product nets.

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <map>
#include <queue>
#include <thread>
#include <vector>

#include "wignerff/errors.hpp"
#include "wignerff/wigner.hpp"

namespace wignerff {

// ---------------------------------------------------------------------------
// Gamma tensor

class GammaTensor {
public:
    explicit GammaTensor(int n_points) : P_(n_points), v_(static_cast<std::size_t>(P_) * P_ * P_) {}

    int points() const { return P_; }
    Complex& at(int a, int b, int c) { return v_[(static_cast<std::size_t>(a) * P_ + b) * P_ + c]; }
    const Complex& at(int a, int b, int c) const {
        return v_[(static_cast<std::size_t>(a) * P_ + b) * P_ + c];
    }

    double max_abs_diff(const GammaTensor& o) const {
        double m = 0.0;
        for (std::size_t i = 0; i < v_.size(); ++i) m = std::max(m, std::abs(v_[i] - o.v_[i]));
        return m;
    }

private:
    int P_;
    std::vector<Complex> v_;
};

inline GammaTensor gamma_from_ops(const PhasePointOperators& A) {
    const int N = A.field.size();
    const int P = N * N;
    GammaTensor G(P);
    for (int a = 0; a < P; ++a)
        for (int b = 0; b < P; ++b) {
            const Matrix M = A.at_index(a) * A.at_index(b);
            for (int c = 0; c < P; ++c) {
                const Matrix& C = A.at_index(c);
                Complex tr = 0.0;
                for (int i = 0; i < N; ++i)
                    for (int k = 0; k < N; ++k) tr += M(i, k) * C(k, i);
                G.at(a, b, c) = tr / static_cast<double>(N);
            }
        }
    return G;
}

inline GammaTensor gamma_tensor(const QuantumNet& net) {
    return gamma_from_ops(phase_point_operators(net));
}

// Gamma_{00 gamma} as a real (q, p) array.
inline RealMatrix gamma00_array(const GammaTensor& G, const Field& f) {
    const int N = f.size();
    RealMatrix out(N, N);
    for (int qi = 0; qi < N; ++qi)
        for (int pi = 0; pi < N; ++pi) out(qi, pi) = G.at(0, 0, qi * N + pi).real();
    return out;
}

// Gamma characterizes a net up to unitary equivalence, so entrywise equality
// of the tensors decides equivalence.
inline bool are_equivalent(const QuantumNet& a, const QuantumNet& b, double tol = 1e-8) {
    if (a.field() != b.field()) throw std::invalid_argument("nets over different fields");
    return gamma_tensor(a).max_abs_diff(gamma_tensor(b)) <= tol;
}

// ---------------------------------------------------------------------------
// SL(2) generators and words

// z used for the diagonal generator: omega-bar on F_4 (the convention all F_4
// index tables are keyed to), the smallest primitive element otherwise.
inline FieldElement sl2_generator_z(const Field& f) {
    if (f.size() == 4) return f.element(3);
    return primitive_element(f);
}

// L1 = [[1,0],[1,1]], L2 = [[1,1],[0,1]], L3 = diag(z, 1/z).
inline std::array<LinearMap, 3> sl2_generators(const Field& f) {
    FieldElement z = sl2_generator_z(f);
    return {LinearMap{f.one(), f.zero(), f.one(), f.one()},
            LinearMap{f.one(), f.one(), f.zero(), f.one()},
            LinearMap{z, f.zero(), f.zero(), z.inverse()}};
}

// Word over the generators; symbol +k means L_k, -k means its inverse.
struct Sl2Word {
    std::vector<int> symbols;
};

inline LinearMap evaluate_word(const Field& f, const Sl2Word& word) {
    auto gens = sl2_generators(f);
    LinearMap acc = LinearMap::identity(f);
    for (int s : word.symbols) {
        const LinearMap& g = gens[std::abs(s) - 1];
        acc = acc * (s > 0 ? g : g.inverse());
    }
    return acc;
}

// BFS over the Cayley graph of SL(2, F_N) on {L1, L2, L3} and inverses.
// Returns a word whose left-to-right product equals L exactly.
inline Sl2Word decompose_sl2(const LinearMap& L) {
    const Field f = L.field();
    if (!L.unit_det()) throw NonUnitDeterminantError("decompose_sl2 requires det = 1");
    auto gens = sl2_generators(f);
    std::vector<std::pair<LinearMap, int>> steps;  // (map, symbol)
    for (int k = 0; k < 3; ++k) {
        steps.emplace_back(gens[k], k + 1);
        LinearMap inv = gens[k].inverse();
        if (inv != gens[k]) steps.emplace_back(inv, -(k + 1));
    }
    std::map<long, std::pair<long, int>> parent;  // key -> (parent key, symbol)
    LinearMap id = LinearMap::identity(f);
    parent[id.key()] = {id.key(), 0};
    std::queue<LinearMap> todo;
    todo.push(id);
    while (!todo.empty()) {
        LinearMap cur = todo.front();
        todo.pop();
        if (cur == L) break;
        for (const auto& [g, sym] : steps) {
            LinearMap next = g * cur;  // prepend the generator
            if (parent.emplace(next.key(), std::make_pair(cur.key(), sym)).second) todo.push(next);
        }
    }
    auto it = parent.find(L.key());
    if (it == parent.end()) throw std::logic_error("generators failed to reach the target map");
    Sl2Word word;
    long cur = L.key();
    while (parent[cur].second != 0) {
        word.symbols.push_back(parent[cur].second);
        cur = parent[cur].first;
    }
    return word;
}

// ---------------------------------------------------------------------------
// Unitaries for linear maps

// Given an operator family with Tr(F_a^+ F_b) = N delta and the images of a
// multiplication- and adjoint-preserving linear map M(F_a) = images[a],
// recover the unitary U with M(B) = U B U^+ (up to global phase).
inline Matrix conjugation_unitary(const std::vector<Matrix>& family,
                                  const std::vector<Matrix>& images) {
    const int N = static_cast<int>(family.front().rows());
    const int count = static_cast<int>(family.size());
    // C_j = M(e_j e_0^+) = (U e_j)(U e_0)^+, expanded through the family.
    std::vector<Matrix> C(N);
    for (int j = 0; j < N; ++j) {
        Matrix acc = Matrix::Zero(N, N);
        for (int a = 0; a < count; ++a) acc += std::conj(family[a](j, 0)) * images[a];
        C[j] = acc / static_cast<double>(N);
    }
    // C_0 is a rank-1 projector onto U e_0.
    CVector u0 = detail::vector_from_rank1(C[0]);
    Matrix U(N, N);
    for (int j = 0; j < N; ++j) U.col(j) = C[j] * u0;
    if (unitarity_residual(U) > 1e-8)
        throw std::logic_error("conjugation extraction did not produce a unitary");
    return U;
}

namespace detail {

inline std::vector<Matrix> translation_family(const Field& f, const BasisPair& pair) {
    std::vector<Matrix> T;
    const int P = f.size() * f.size();
    T.reserve(P);
    for (int idx = 0; idx < P; ++idx)
        T.push_back(translation_operator(PhasePoint::from_index(f, idx), pair));
    return T;
}

inline int pair_dot(const PhasePoint& alpha, const BasisPair& pair) {
    std::vector<int> qe = expand_in_dual(alpha.q, pair.E_dual);
    std::vector<int> pf = expand_in_dual(alpha.p, pair.F_dual);
    int acc = 0;
    for (std::size_t l = 0; l < qe.size(); ++l) acc += qe[l] * pf[l];
    return acc;
}

// Odd characteristic: U_L from the multiplication-preserving map
// M(T_alpha) = eta^{(1/2)(q'.p' - q.p)} T_{L alpha}.
inline Matrix unitary_for_linear_odd(const LinearMap& L, const BasisPair& pair) {
    const Field f = L.field();
    const int r = f.characteristic();
    const int half = (r + 1) / 2;  // inverse of 2 mod r
    std::vector<Matrix> T = translation_family(f, pair);
    std::vector<Matrix> images(T.size());
    for (std::size_t idx = 0; idx < T.size(); ++idx) {
        PhasePoint alpha = PhasePoint::from_index(f, static_cast<int>(idx));
        PhasePoint la = L.apply(alpha);
        long k = static_cast<long>(half) * (pair_dot(la, pair) - pair_dot(alpha, pair));
        images[idx] = root_of_unity(k, r) * T[la.index()];
    }
    return conjugation_unitary(T, images);
}

// n-qubit permutation gates; particle 1 is the most significant bit.
inline Matrix qubit_permutation(int n, const std::function<int(int)>& image) {
    const int dim = 1 << n;
    Matrix M = Matrix::Zero(dim, dim);
    for (int b = 0; b < dim; ++b) M(image(b), b) = 1.0;
    return M;
}

inline Matrix cnot_1j(int n, int j) {
    return qubit_permutation(n, [n, j](int b) {
        const int control = (b >> (n - 1)) & 1;
        return control ? (b ^ (1 << (n - j))) : b;
    });
}

inline Matrix swap_1j(int n, int j) {
    return qubit_permutation(n, [n, j](int b) {
        const int b1 = (b >> (n - 1)) & 1;
        const int bj = (b >> (n - j)) & 1;
        if (b1 == bj) return b;
        return b ^ (1 << (n - 1)) ^ (1 << (n - j));
    });
}

// Generator unitaries for characteristic 2 in the canonical pair
// E = (1, z, ..., z^{n-1}), F = dual(E): U1 rotates each qubit a quarter turn
// about z, U2 about x, and U3 is the SWAP chain followed by the CNOT pattern
// read off the expansion of z^n.
inline Matrix char2_generator_unitary(int which, const Field& f, const FieldElement& z,
                                      const FieldBasis& Ez) {
    const int n = f.degree();
    if (which == 1 || which == 2) {
        Matrix g(2, 2);
        if (which == 1)
            g << 1.0, 0.0, 0.0, Complex(0.0, 1.0);
        else
            g << 1.0 / std::sqrt(2.0), Complex(0.0, 1.0 / std::sqrt(2.0)),
                Complex(0.0, 1.0 / std::sqrt(2.0)), 1.0 / std::sqrt(2.0);
        Matrix U = g;
        for (int i = 1; i < n; ++i) U = kron(U, g);
        return U;
    }
    if (n == 1) return Matrix::Identity(2, 2);  // z = 1, L3 is the identity
    std::vector<int> a = expand(z.pow(n), Ez);  // z^n = sum_j a_j z^{j-1}
    Matrix U = Matrix::Identity(1 << n, 1 << n);
    for (int j = n; j >= 2; --j) U = U * swap_1j(n, j);  // SWAP_1n ... SWAP_12, rightmost first
    for (int j = 2; j <= n; ++j)
        if (a[j - 1]) U = cnot_1j(n, j) * U;
    return U;
}

// Characteristic 2, where the halved exponents of the odd case are
// unavailable. The multiplication-preserving map is built in normal form
// instead: write T_alpha = X_1^{a_1}..X_n^{a_n} Z_1^{b_1}..Z_n^{b_n} (exact,
// no phase) and map each single-particle generator G_k = T_{e_k} to
// c_k T_{L e_k}, with c_k in {1, i} fixing the square to match G_k^2 = I.
// Unit determinant preserves all commutators, so the two generator systems
// share their structure constants and the induced map M is multiplicative
// and adjoint-preserving; the unitary is then extracted from M.
inline Matrix unitary_for_linear_char2(const LinearMap& L, const BasisPair& pair) {
    const Field f = L.field();
    const int n = f.degree(), N = f.size();
    std::vector<PhasePoint> base_points;
    for (int k = 0; k < n; ++k) base_points.emplace_back(pair.E.at(k), f.zero());
    for (int k = 0; k < n; ++k) base_points.emplace_back(f.zero(), pair.F.at(k));

    std::vector<Matrix> primed(2 * n);
    for (int k = 0; k < 2 * n; ++k) {
        Matrix T = translation_operator(L.apply(base_points[k]), pair);
        auto mu = proportionality_factor(T * T, Matrix::Identity(N, N), 1e-10);
        if (!mu) throw std::logic_error("translation square is not scalar");
        primed[k] = (std::abs(*mu - Complex(1, 0)) < 1e-8) ? T : Complex(0.0, 1.0) * T;
    }

    std::vector<Matrix> family = translation_family(f, pair);
    std::vector<Matrix> images(family.size());
    for (std::size_t idx = 0; idx < family.size(); ++idx) {
        PhasePoint alpha = PhasePoint::from_index(f, static_cast<int>(idx));
        std::vector<int> a = expand_in_dual(alpha.q, pair.E_dual);
        std::vector<int> b = expand_in_dual(alpha.p, pair.F_dual);
        Matrix M = Matrix::Identity(N, N);
        for (int k = 0; k < n; ++k)
            if (a[k]) M = M * primed[k];
        for (int k = 0; k < n; ++k)
            if (b[k]) M = M * primed[n + k];
        images[idx] = std::move(M);
    }
    return conjugation_unitary(family, images);
}

} // namespace detail

// Unitary with U_L T_alpha U_L^+ proportional to T_{L alpha} for every alpha.
// Exists exactly when det L = 1; unique up to a phase and composition with a
// translation operator.
inline Matrix unitary_for_linear(const LinearMap& L, const BasisPair& pair) {
    if (!L.unit_det())
        throw NonUnitDeterminantError("U_L exists only for unit-determinant maps");
    if (L.field().characteristic() == 2) return detail::unitary_for_linear_char2(L, pair);
    return detail::unitary_for_linear_odd(L, pair);
}

// ---------------------------------------------------------------------------
// Induced action on ray choices

// The action of a unit-determinant L on nets, reduced to lookup tables:
// striation i of the image net draws its label from striation source[i] of
// the original, mapped through label_map[i].
struct NetIndexAction {
    std::vector<int> source;                  // [striation] -> striation
    std::vector<std::vector<int>> label_map;  // [striation][source label] -> label
};

inline NetIndexAction semantic_action(const NetSpace& ns, const LinearMap& L) {
    const Field& f = ns.field();
    const int N = f.size();
    Matrix U = unitary_for_linear(L, ns.pair());
    Matrix Ud = dagger(U);
    NetIndexAction act;
    act.source.resize(striation_count(f));
    act.label_map.assign(striation_count(f), std::vector<int>(N, -1));
    for (int i = 0; i < striation_count(f); ++i) {
        const Line image_ray = L.apply(ns.strs()[i].ray());
        const int j = striation_index_of(image_ray);
        act.source[i] = j;
        const auto& target = ns.mub().bases[i].vectors;
        const auto& src = ns.mub().bases[j].vectors;
        for (int u = 0; u < N; ++u) {
            CVector w = Ud * src[u];
            int best = -1;
            double best_ov = -1.0;
            for (int t = 0; t < N; ++t) {
                const double ov = overlap_magnitude(target[t], w);
                if (ov > best_ov) { best_ov = ov; best = t; }
            }
            if (best_ov < 1.0 - 1e-6)
                throw std::logic_error("image vector did not match any basis label");
            act.label_map[i][u] = best;
        }
    }
    return act;
}

inline RayChoice apply_action(const NetSpace& ns, const NetIndexAction& act, const RayChoice& c) {
    const Field& f = ns.field();
    RayChoice out;
    out.labels.reserve(c.labels.size());
    for (std::size_t i = 0; i < c.labels.size(); ++i)
        out.labels.push_back(f.element(act.label_map[i][c.labels[act.source[i]].index()]));
    return out;
}

// ---------------------------------------------------------------------------
// Similarity orbits

struct BurnsideEntry {
    LinearMap representative;
    long class_size = 0;
    long fixed_count = 0;
};

struct OrbitReport {
    long representative_count = 0;
    int orbit_count = 0;
    std::vector<long> orbit_sizes;                 // descending
    std::vector<RayChoice> orbit_representatives;  // minimal choice per orbit
    std::vector<BurnsideEntry> burnside;
    long burnside_orbit_count = 0;
};

namespace detail {

// Ordinal of an equivalence-class representative (labels 0 and 1 are zero)
// in enumeration order.
inline long rep_ordinal(const RayChoice& c, int N) {
    long k = 0;
    for (int i = static_cast<int>(c.labels.size()) - 1; i >= 2; --i)
        k = k * N + c.labels[i].index();
    return k;
}

inline void parallel_for(long n, int workers, const std::function<void(long, long)>& run_range) {
    if (workers <= 1 || n < 2 * workers) {
        run_range(0, n);
        return;
    }
    std::vector<std::thread> pool;
    const long chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const long lo = w * chunk;
        const long hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(run_range, lo, hi);
    }
    for (auto& t : pool) t.join();
}

} // namespace detail

// Partitions the N^{N-1} equivalence-class representatives into orbits of
// SL(2, F_N) and cross-checks the count with the Burnside tally over
// conjugacy classes.
inline OrbitReport similarity_orbits(const Field& f, const BasisPair& pair,
                                     int cap = kDefaultEnumerationCap, int workers = 1) {
    const int N = f.size();
    NetSpace ns(f, pair);
    std::vector<RayChoice> reps = ns.representative_choices(cap);
    const long R = static_cast<long>(reps.size());

    auto gens = sl2_generators(f);
    std::array<std::vector<long>, 3> gen_table;
    for (int k = 0; k < 3; ++k) {
        NetIndexAction act = semantic_action(ns, gens[k]);
        gen_table[k].resize(R);
        for (long i = 0; i < R; ++i)
            gen_table[k][i] = detail::rep_ordinal(ns.representative(apply_action(ns, act, reps[i])), N);
    }

    OrbitReport report;
    report.representative_count = R;
    std::vector<int> orbit_of(R, -1);
    for (long start = 0; start < R; ++start) {
        if (orbit_of[start] >= 0) continue;
        const int id = report.orbit_count++;
        long size = 0;
        long min_idx = start;
        std::queue<long> todo;
        orbit_of[start] = id;
        todo.push(start);
        while (!todo.empty()) {
            long cur = todo.front();
            todo.pop();
            ++size;
            min_idx = std::min(min_idx, cur);
            for (int k = 0; k < 3; ++k) {
                long next = gen_table[k][cur];
                if (orbit_of[next] < 0) {
                    orbit_of[next] = id;
                    todo.push(next);
                }
            }
        }
        report.orbit_sizes.push_back(size);
        report.orbit_representatives.push_back(reps[min_idx]);
    }
    std::sort(report.orbit_sizes.rbegin(), report.orbit_sizes.rend());

    // Burnside: phi(g) evaluated on one representative per conjugacy class.
    std::vector<LinearMap> group = sl2_group(f);
    std::map<long, int> class_of;
    std::vector<std::pair<LinearMap, long>> classes;
    for (const auto& g : group) {
        if (class_of.count(g.key())) continue;
        long size = 0;
        for (const auto& h : group) {
            LinearMap conj = h * g * h.inverse();
            if (class_of.emplace(conj.key(), static_cast<int>(classes.size())).second) ++size;
        }
        classes.emplace_back(g, size);
    }
    long tally = 0;
    for (const auto& [g, size] : classes) {
        NetIndexAction act = semantic_action(ns, g);
        std::atomic<long> fixed_total{0};
        detail::parallel_for(R, workers, [&](long lo, long hi) {
            long local = 0;
            for (long i = lo; i < hi; ++i) {
                long image = detail::rep_ordinal(ns.representative(apply_action(ns, act, reps[i])), N);
                if (image == i) ++local;
            }
            fixed_total += local;
        });
        const long fixed = fixed_total.load();
        report.burnside.push_back(BurnsideEntry{g, size, fixed});
        tally += size * fixed;
    }
    if (tally % static_cast<long>(group.size()) != 0)
        throw std::logic_error("Burnside tally is not divisible by the group order");
    report.burnside_orbit_count = tally / static_cast<long>(group.size());
    return report;
}

// ---------------------------------------------------------------------------
// F_4 discriminant and index transformations

// D = omega (a+b+c) + omega-bar * (quadratic form), constant on similarity
// classes of F_4 nets over the reference pair.
inline FieldElement discriminant_D(const RayChoice& choice) {
    if (choice.labels.size() != 5 || choice.labels[0].tables()->N != 4)
        throw std::invalid_argument("discriminant_D is defined for N = 4 ray choices");
    const Field f = choice.labels[0].field();
    const FieldElement om = f.element(2), ob = f.element(3), one = f.one();
    const FieldElement a = choice.labels[0], b = choice.labels[1], c = choice.labels[2],
                       d = choice.labels[3], e = choice.labels[4];
    FieldElement quad = one * (a * b + a * c + a * d + a * e + b * c + d * e) +
                        ob * (b * d + c * e) + om * (b * e + c * d);
    return om * (a + b + c) + ob * quad;
}

// Affine index maps induced by the generators on (a, b, c, d, e), for the
// reference pair with z = omega-bar.
inline RayChoice f4_index_transform_linear(int which, const RayChoice& choice) {
    if (choice.labels.size() != 5 || choice.labels[0].tables()->N != 4)
        throw std::invalid_argument("index transforms are defined for N = 4 ray choices");
    const Field f = choice.labels[0].field();
    const FieldElement om = f.element(2), ob = f.element(3);
    const FieldElement a = choice.labels[0], b = choice.labels[1], c = choice.labels[2],
                       d = choice.labels[3], e = choice.labels[4];
    RayChoice out;
    switch (which) {
    case 1:
        out.labels = {a, c + f.one(), b + om, e + ob, d};
        break;
    case 2:
        out.labels = {c + f.one(), b, a + om, ob * e, om * d + om};
        break;
    case 3:
        out.labels = {om * a, ob * b, ob * e + ob, ob * c + om, ob * d};
        break;
    default:
        throw std::invalid_argument("generator index must be 1, 2 or 3");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Special nets

// Gamma value of the fully symmetric odd-prime net:
// (1/N) eta^{2 (a^b + b^c + c^a)} with the symplectic wedge x y' - y x'.
// The constant 2 is pinned by the explicit phase-point operators
// A_(a,b)[j,k] = [j+k = 2a] eta^{b(j-k)}; for N = 3 it coincides with -1.
inline Complex special_gamma_value(const Field& f, const PhasePoint& a, const PhasePoint& b,
                                   const PhasePoint& c) {
    auto wedge = [](const PhasePoint& x, const PhasePoint& y) {
        return x.q * y.p - x.p * y.q;
    };
    const int e = (wedge(a, b) + wedge(b, c) + wedge(c, a)).index();
    return root_of_unity(2L * e, f.characteristic()) / static_cast<double>(f.size());
}

// The unique net (up to unitary equivalence) whose Gamma is invariant under
// every unit-determinant map; exists for odd prime N. Found by scanning the
// representatives fixed by all three generators and checking the closed form.
inline QuantumNet special_net_odd_prime(const Field& f) {
    if (f.degree() != 1 || f.characteristic() == 2)
        throw std::invalid_argument("the symmetric net requires an odd prime N");
    NetSpace ns(f, default_basis_pair(f));
    std::vector<RayChoice> reps = ns.representative_choices(f.size());
    auto gens = sl2_generators(f);
    std::array<NetIndexAction, 3> acts{semantic_action(ns, gens[0]), semantic_action(ns, gens[1]),
                                       semantic_action(ns, gens[2])};
    const int N = f.size();
    for (const auto& rep : reps) {
        bool fixed = true;
        for (const auto& act : acts) {
            if (detail::rep_ordinal(ns.representative(apply_action(ns, act, rep)), N) !=
                detail::rep_ordinal(rep, N)) {
                fixed = false;
                break;
            }
        }
        if (!fixed) continue;
        QuantumNet net = ns.build(rep);
        GammaTensor G = gamma_tensor(net);
        double dev = 0.0;
        for (int a = 0; a < N * N && dev < 1e-8; ++a)
            for (int b = 0; b < N * N && dev < 1e-8; ++b)
                for (int c = 0; c < N * N; ++c) {
                    Complex want = special_gamma_value(f, PhasePoint::from_index(f, a),
                                                       PhasePoint::from_index(f, b),
                                                       PhasePoint::from_index(f, c));
                    dev = std::max(dev, std::abs(G.at(a, b, c) - want));
                    if (dev >= 1e-8) break;
                }
        if (dev < 1e-8) return net;
    }
    throw std::logic_error("no representative matches the symmetric Gamma form");
}

// The two F_4 nets whose phase-point operators factor as tensor products of
// single-qubit families, one the entrywise conjugate of the other.
inline std::pair<QuantumNet, QuantumNet> tensor_product_nets_n4() {
    Field f2 = Field::make(2, 1);
    NetSpace ns2(f2, default_basis_pair(f2));
    QuantumNet net2 = ns2.build(ns2.zero_choice());
    PhasePointOperators A2 = phase_point_operators(net2);

    Field f4 = Field::make(2, 2);
    NetSpace ns4(f4, default_basis_pair(f4));
    const int N = 4;

    auto build_from_ops = [&](bool conjugate_first) {
        std::vector<Matrix> A(N * N);
        for (int idx = 0; idx < N * N; ++idx) {
            PhasePoint alpha = PhasePoint::from_index(f4, idx);
            std::vector<int> x = expand_in_dual(alpha.q, ns4.pair().E_dual);
            std::vector<int> y = expand_in_dual(alpha.p, ns4.pair().F_dual);
            Matrix first = A2.at_index(x[0] * 2 + y[0]);
            Matrix second = A2.at_index(x[1] * 2 + y[1]);
            A[idx] = conjugate_first ? kron(first.conjugate(), second)
                                     : kron(first, second.conjugate());
        }
        // Recover the ray choice: Q(ray_i) = (1/N) sum over the ray of A.
        RayChoice choice;
        for (int i = 0; i < striation_count(f4); ++i) {
            Matrix Q = Matrix::Zero(N, N);
            for (const auto& pt : ns4.strs()[i].ray().points()) Q += A[pt.index()];
            Q /= static_cast<double>(N);
            int label = -1;
            for (int u = 0; u < N; ++u)
                if (max_abs_diff(Q, outer(ns4.mub().bases[i].vectors[u])) < 1e-8) { label = u; break; }
            if (label < 0) throw std::logic_error("tensor-product family does not define a net");
            choice.labels.push_back(f4.element(label));
        }
        return ns4.build(choice);
    };
    return {build_from_ops(false), build_from_ops(true)};
}

// ---------------------------------------------------------------------------
// w census

struct WCensusEntry {
    FieldElement w;
    long equivalence_classes = 0;
    std::vector<long> orbit_sizes;
};

struct WCensus {
    long total = 0;
    std::vector<WCensusEntry> per_w;
};

// One column per nonzero w: pairs (E, w * dual(E)) with the library's default
// E. Changing E alone never produces new nets; changing w always does.
inline WCensus w_variant_census(const Field& f, int cap = kDefaultEnumerationCap,
                                int workers = 1) {
    const FieldBasis E = default_basis_pair(f).E;
    WCensus census;
    for (int wi = 1; wi < f.size(); ++wi) {
        FieldElement w = f.element(wi);
        OrbitReport report = similarity_orbits(f, basis_pair_with_w(E, w), cap, workers);
        WCensusEntry entry;
        entry.w = w;
        entry.equivalence_classes = report.representative_count;
        entry.orbit_sizes = report.orbit_sizes;
        census.per_w.push_back(std::move(entry));
        census.total += report.representative_count;
    }
    return census;
}

} // namespace wignerff
