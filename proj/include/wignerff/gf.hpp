#pragma once

// Exact arithmetic in the finite field F_{r^n}: construction from the
// lexicographically smallest monic irreducible modulus, element arithmetic
// via precomputed tables, field trace, bases, dual bases and expansions.
//
// Elements are canonical coefficient vectors over F_r relative to the modulus
// polynomial; the enumeration order of elements reads the coefficient vector
// (c0, c1, ..., c_{n-1}) as the base-r integer sum c_i r^i. All "smallest"
// tie-breaks in the library use this order. Field data is interned, so
// elements stay valid for the lifetime of the process and cross-field mixing
// can be detected by pointer identity.

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace wignerff {

inline constexpr int kDefaultFieldCap = 64;

namespace detail {

inline bool is_prime(int r) {
    if (r < 2) return false;
    for (int d = 2; d * d <= r; ++d)
        if (r % d == 0) return false;
    return true;
}

// Dense polynomials over F_r, coefficients low degree first.
using Poly = std::vector<int>;

inline Poly poly_trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline Poly poly_mul(const Poly& a, const Poly& b, int r) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % r;
    return poly_trim(std::move(out));
}

// Remainder of a mod m, m monic.
inline Poly poly_mod(Poly a, const Poly& m, int r) {
    a = poly_trim(std::move(a));
    const int dm = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= dm) {
        const int da = static_cast<int>(a.size()) - 1;
        const int lead = a.back();
        for (int i = 0; i <= dm; ++i) {
            int& c = a[da - dm + i];
            c = ((c - lead * m[i]) % r + r) % r;
        }
        a = poly_trim(std::move(a));
    }
    return a;
}

inline bool poly_is_zero(const Poly& p) { return poly_trim(p).empty(); }

// Monic f irreducible over F_r, tested by trial division against every monic
// polynomial of degree 1..deg(f)/2.
inline bool poly_irreducible(const Poly& f, int r) {
    const int n = static_cast<int>(f.size()) - 1;
    if (n <= 0) return false;
    if (n == 1) return true;
    for (int d = 1; d <= n / 2; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= r;
        for (long k = 0; k < count; ++k) {
            Poly g(d + 1, 0);
            long t = k;
            for (int i = 0; i < d; ++i) { g[i] = static_cast<int>(t % r); t /= r; }
            g[d] = 1;
            if (poly_is_zero(poly_mod(f, g, r))) return false;
        }
    }
    return true;
}

struct FieldTables {
    int r = 0;
    int n = 0;
    int N = 0;
    std::vector<int> modulus;    // length n+1, monic
    std::vector<int> add;        // N*N
    std::vector<int> mul;        // N*N
    std::vector<int> neg;        // N
    std::vector<int> inv;        // N, inv[0] = -1
    std::vector<int> trace;      // N, integer in [0, r)

    int add_idx(int a, int b) const { return add[a * N + b]; }
    int mul_idx(int a, int b) const { return mul[a * N + b]; }
};

inline Poly idx_to_poly(int idx, int r, int n) {
    Poly p(n, 0);
    for (int i = 0; i < n; ++i) { p[i] = idx % r; idx /= r; }
    return p;
}

inline int poly_to_idx(const Poly& p, int r, int n) {
    int idx = 0;
    for (int i = n - 1; i >= 0; --i)
        idx = idx * r + (i < static_cast<int>(p.size()) ? p[i] : 0);
    return idx;
}

inline std::unique_ptr<FieldTables> build_field_tables(int r, int n) {
    auto t = std::make_unique<FieldTables>();
    t->r = r;
    t->n = n;
    long N = 1;
    for (int i = 0; i < n; ++i) N *= r;
    t->N = static_cast<int>(N);

    // Lexicographically smallest monic irreducible of degree n: enumerate the
    // low-coefficient vector as a base-r integer. Degree 1 yields "x", and for
    // (r, n) = (2, 2) this reproduces x^2 + x + 1.
    long count = N;
    for (long k = 0; k < count; ++k) {
        Poly f = idx_to_poly(static_cast<int>(k), r, n);
        f.resize(n + 1, 0);
        f[n] = 1;
        if (poly_irreducible(f, r)) { t->modulus = f; break; }
    }
    if (t->modulus.empty())
        throw std::logic_error("no irreducible modulus found");

    const int Ni = t->N;
    t->add.resize(static_cast<std::size_t>(Ni) * Ni);
    t->mul.resize(static_cast<std::size_t>(Ni) * Ni);
    t->neg.resize(Ni);
    t->inv.assign(Ni, -1);
    for (int a = 0; a < Ni; ++a) {
        Poly pa = idx_to_poly(a, r, n);
        Poly na(n, 0);
        for (int i = 0; i < n; ++i) na[i] = (r - pa[i]) % r;
        t->neg[a] = poly_to_idx(na, r, n);
        for (int b = 0; b < Ni; ++b) {
            Poly pb = idx_to_poly(b, r, n);
            Poly s(n, 0);
            for (int i = 0; i < n; ++i) s[i] = (pa[i] + pb[i]) % r;
            t->add[a * Ni + b] = poly_to_idx(s, r, n);
            Poly m = poly_mod(poly_mul(pa, pb, r), t->modulus, r);
            t->mul[a * Ni + b] = poly_to_idx(m, r, n);
        }
    }
    for (int a = 1; a < Ni; ++a) {
        for (int b = 1; b < Ni; ++b) {
            if (t->mul[a * Ni + b] == 1) { t->inv[a] = b; break; }
        }
        if (t->inv[a] < 0) throw std::logic_error("modulus not irreducible: missing inverse");
    }

    // tr x = x + x^r + ... + x^{r^{n-1}}; lands in the prime subfield, whose
    // elements are exactly the indices < r.
    t->trace.resize(Ni);
    for (int a = 0; a < Ni; ++a) {
        int acc = 0;
        int power = a;
        for (int j = 0; j < n; ++j) {
            acc = t->add[acc * Ni + power];
            int next = power;
            for (int i = 1; i < r; ++i) next = t->mul[next * Ni + power];
            power = next;
        }
        if (acc >= r) throw std::logic_error("trace left the prime subfield");
        t->trace[a] = acc;
    }
    return t;
}

inline const FieldTables* intern_field(int r, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<FieldTables>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(r, n);
    auto it = registry.find(key);
    if (it == registry.end())
        it = registry.emplace(key, build_field_tables(r, n)).first;
    return it->second.get();
}

} // namespace detail

class FieldElement;

class Field {
public:
    Field() = default;

    static Field make(int r, int n, int cap = kDefaultFieldCap) {
        if (!detail::is_prime(r))
            throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(r));
        if (n < 1)
            throw std::invalid_argument("extension degree must be >= 1");
        long N = 1;
        for (int i = 0; i < n; ++i) {
            N *= r;
            if (N > cap)
                throw std::invalid_argument("field size " + std::to_string(r) + "^" + std::to_string(n) +
                                            " exceeds cap " + std::to_string(cap));
        }
        return Field(detail::intern_field(r, n));
    }

    bool valid() const { return t_ != nullptr; }
    int characteristic() const { return t_->r; }
    int degree() const { return t_->n; }
    int size() const { return t_->N; }
    const std::vector<int>& modulus() const { return t_->modulus; }

    inline FieldElement element(int idx) const;
    inline FieldElement zero() const;
    inline FieldElement one() const;
    inline FieldElement from_coeffs(const std::vector<int>& coeffs) const;
    inline std::vector<FieldElement> elements() const;

    friend bool operator==(const Field& a, const Field& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Field& a, const Field& b) { return a.t_ != b.t_; }

    const detail::FieldTables* tables() const { return t_; }

private:
    explicit Field(const detail::FieldTables* t) : t_(t) {}
    const detail::FieldTables* t_ = nullptr;
};

class FieldElement {
public:
    FieldElement() = default;
    FieldElement(const detail::FieldTables* t, int idx) : t_(t), idx_(idx) {}

    bool valid() const { return t_ != nullptr; }
    int index() const { return idx_; }
    Field field() const { return Field::make(t_->r, t_->n, t_->N); }
    bool is_zero() const { return idx_ == 0; }
    bool in_prime_subfield() const { return idx_ < t_->r; }

    std::vector<int> coeffs() const { return detail::idx_to_poly(idx_, t_->r, t_->n); }

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        a.require_same(b);
        return {a.t_, a.t_->add_idx(a.idx_, b.idx_)};
    }
    friend FieldElement operator-(FieldElement a, FieldElement b) {
        a.require_same(b);
        return {a.t_, a.t_->add_idx(a.idx_, a.t_->neg[b.idx_])};
    }
    friend FieldElement operator*(FieldElement a, FieldElement b) {
        a.require_same(b);
        return {a.t_, a.t_->mul_idx(a.idx_, b.idx_)};
    }
    friend FieldElement operator/(FieldElement a, FieldElement b) {
        a.require_same(b);
        return a * b.inverse();
    }
    FieldElement operator-() const { return {t_, t_->neg[idx_]}; }

    FieldElement inverse() const {
        if (idx_ == 0) throw std::invalid_argument("inverse of zero field element");
        return {t_, t_->inv[idx_]};
    }

    FieldElement pow(long k) const {
        if (k < 0) return inverse().pow(-k);
        FieldElement acc{t_, 1};
        FieldElement base = *this;
        while (k > 0) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.t_ == b.t_ && a.idx_ == b.idx_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
    friend bool operator<(const FieldElement& a, const FieldElement& b) {
        a.require_same(b);
        return a.idx_ < b.idx_;
    }

    const detail::FieldTables* tables() const { return t_; }

private:
    void require_same(const FieldElement& o) const {
        if (t_ != o.t_) throw std::invalid_argument("field elements from different fields in one operation");
    }
    const detail::FieldTables* t_ = nullptr;
    int idx_ = 0;
};

inline FieldElement Field::element(int idx) const {
    if (idx < 0 || idx >= t_->N) throw std::invalid_argument("element index out of range");
    return {t_, idx};
}
inline FieldElement Field::zero() const { return {t_, 0}; }
inline FieldElement Field::one() const { return {t_, 1}; }
inline FieldElement Field::from_coeffs(const std::vector<int>& coeffs) const {
    if (static_cast<int>(coeffs.size()) != t_->n)
        throw std::invalid_argument("coefficient vector length must equal the extension degree");
    detail::Poly p(coeffs.begin(), coeffs.end());
    for (int& c : p) {
        c %= t_->r;
        if (c < 0) c += t_->r;
    }
    return {t_, detail::poly_to_idx(p, t_->r, t_->n)};
}
inline std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> out;
    out.reserve(t_->N);
    for (int i = 0; i < t_->N; ++i) out.emplace_back(t_, i);
    return out;
}

inline int trace_int(const FieldElement& x) { return x.tables()->trace[x.index()]; }

inline FieldElement trace(const FieldElement& x) {
    return FieldElement(x.tables(), trace_int(x));
}

inline int multiplicative_order(const FieldElement& x) {
    if (x.is_zero()) throw std::invalid_argument("multiplicative order of zero");
    FieldElement acc = x;
    FieldElement one(x.tables(), 1);
    int ord = 1;
    while (acc != one) {
        acc = acc * x;
        ++ord;
    }
    return ord;
}

// Smallest (in element enumeration order) generator of the multiplicative group.
inline FieldElement primitive_element(const Field& f) {
    const int target = f.size() - 1;
    for (int i = 1; i < f.size(); ++i) {
        FieldElement x = f.element(i);
        if (multiplicative_order(x) == target) return x;
    }
    throw std::logic_error("no primitive element found");
}

namespace detail {

// Gauss-Jordan solve of A x = b over F_r (A is m x m, row-major). Returns
// false when A is singular.
inline bool solve_mod_r(std::vector<int> A, std::vector<int> b, int m, int r, std::vector<int>& x) {
    auto inv_mod = [r](int a) {
        for (int i = 1; i < r; ++i)
            if ((a * i) % r == 1) return i;
        return -1;
    };
    for (int col = 0; col < m; ++col) {
        int pivot = -1;
        for (int row = col; row < m; ++row)
            if (A[row * m + col] % r != 0) { pivot = row; break; }
        if (pivot < 0) return false;
        if (pivot != col) {
            for (int j = 0; j < m; ++j) std::swap(A[pivot * m + j], A[col * m + j]);
            std::swap(b[pivot], b[col]);
        }
        const int pi = inv_mod(((A[col * m + col] % r) + r) % r);
        for (int j = 0; j < m; ++j) A[col * m + j] = (A[col * m + j] * pi) % r;
        b[col] = (b[col] * pi) % r;
        for (int row = 0; row < m; ++row) {
            if (row == col) continue;
            const int factor = ((A[row * m + col] % r) + r) % r;
            if (factor == 0) continue;
            for (int j = 0; j < m; ++j)
                A[row * m + j] = ((A[row * m + j] - factor * A[col * m + j]) % r + r) % r;
            b[row] = ((b[row] - factor * b[col]) % r + r) % r;
        }
    }
    x.assign(m, 0);
    for (int i = 0; i < m; ++i) x[i] = ((b[i] % r) + r) % r;
    return true;
}

} // namespace detail

// Ordered field basis (e_1, ..., e_n); validated linearly independent over F_r.
class FieldBasis {
public:
    explicit FieldBasis(std::vector<FieldElement> elems) : elems_(std::move(elems)) {
        if (elems_.empty()) throw std::invalid_argument("empty field basis");
        const auto* t = elems_[0].tables();
        for (const auto& e : elems_)
            if (e.tables() != t) throw std::invalid_argument("basis elements from different fields");
        const int n = t->n;
        if (static_cast<int>(elems_.size()) != n)
            throw std::invalid_argument("basis size must equal the extension degree");
        // Independence: the n x n coefficient matrix must be invertible mod r,
        // i.e. every column of the identity must be solvable.
        std::vector<int> M(n * n);
        for (int i = 0; i < n; ++i) {
            auto c = elems_[i].coeffs();
            for (int j = 0; j < n; ++j) M[j * n + i] = c[j];
        }
        std::vector<int> x;
        std::vector<int> b(n, 0);
        b[0] = 1;
        if (!detail::solve_mod_r(M, b, n, t->r, x))
            throw std::invalid_argument("field basis elements are linearly dependent");
    }

    int size() const { return static_cast<int>(elems_.size()); }
    const FieldElement& at(int i) const { return elems_.at(i); }
    const std::vector<FieldElement>& elements() const { return elems_; }
    Field field() const { return elems_[0].field(); }

    friend bool operator==(const FieldBasis& a, const FieldBasis& b) { return a.elems_ == b.elems_; }
    friend bool operator!=(const FieldBasis& a, const FieldBasis& b) { return !(a == b); }

private:
    std::vector<FieldElement> elems_;
};

// The unique basis with tr(e_i * dual_j) = delta_ij, found by solving the n^2
// linear trace equations over F_r in the polynomial basis.
inline FieldBasis dual_basis(const FieldBasis& E) {
    const auto* t = E.at(0).tables();
    const int n = t->n, r = t->r;
    Field f = E.field();
    // A[i][k] = tr(e_i * x^k) where x^k is the k-th polynomial basis element.
    std::vector<int> A(n * n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            detail::Poly p(n, 0);
            p[k] = 1;
            FieldElement xk = f.element(detail::poly_to_idx(p, r, n));
            A[i * n + k] = trace_int(E.at(i) * xk);
        }
    std::vector<FieldElement> duals;
    duals.reserve(n);
    for (int j = 0; j < n; ++j) {
        std::vector<int> b(n, 0);
        b[j] = 1;
        std::vector<int> c;
        if (!detail::solve_mod_r(A, b, n, r, c))
            throw std::invalid_argument("dual basis solve failed: dependent input tuple");
        duals.push_back(f.from_coeffs(c));
    }
    return FieldBasis(std::move(duals));
}

// Coefficients of x in the basis E: x_j = tr(x * dual(E)_j).
inline std::vector<int> expand(const FieldElement& x, const FieldBasis& E) {
    FieldBasis Ed = dual_basis(E);
    std::vector<int> out(E.size());
    for (int j = 0; j < E.size(); ++j) out[j] = trace_int(x * Ed.at(j));
    return out;
}

// Fast path when the dual is already at hand.
inline std::vector<int> expand_in_dual(const FieldElement& x, const FieldBasis& E_dual) {
    std::vector<int> out(E_dual.size());
    for (int j = 0; j < E_dual.size(); ++j) out[j] = trace_int(x * E_dual.at(j));
    return out;
}

inline FieldBasis polynomial_basis(const Field& f) {
    const int n = f.degree(), r = f.characteristic();
    std::vector<FieldElement> elems;
    for (int k = 0; k < n; ++k) {
        detail::Poly p(n, 0);
        p[k] = 1;
        elems.push_back(f.element(detail::poly_to_idx(p, r, n)));
    }
    return FieldBasis(std::move(elems));
}

inline FieldElement reconstruct(const std::vector<int>& coeffs, const FieldBasis& E) {
    FieldElement acc = E.field().zero();
    for (int i = 0; i < E.size(); ++i) {
        FieldElement ci = E.field().element(coeffs[i] % E.field().characteristic());
        acc = acc + ci * E.at(i);
    }
    return acc;
}

} // namespace wignerff
