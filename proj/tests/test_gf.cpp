#include <catch2/catch_amalgamated.hpp>

#include "wignerff/gf.hpp"

using namespace wignerff;

namespace {

// Independent irreducibility oracle: f (monic, coefficients low-first) has no
// monic divisor of degree 1..deg/2. Same contract as the library check but
// written against plain integer arithmetic.
bool oracle_irreducible(const std::vector<int>& f, int r) {
    auto mod_poly = [r](std::vector<int> a, const std::vector<int>& m) {
        auto trim = [](std::vector<int>& p) { while (!p.empty() && p.back() == 0) p.pop_back(); };
        trim(a);
        const int dm = static_cast<int>(m.size()) - 1;
        while (static_cast<int>(a.size()) - 1 >= dm) {
            const int da = static_cast<int>(a.size()) - 1;
            const int lead = a.back();
            for (int i = 0; i <= dm; ++i)
                a[da - dm + i] = ((a[da - dm + i] - lead * m[i]) % r + r) % r;
            trim(a);
        }
        return a;
    };
    const int n = static_cast<int>(f.size()) - 1;
    for (int d = 1; d <= n / 2; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= r;
        for (long k = 0; k < count; ++k) {
            std::vector<int> g(d + 1, 0);
            long t = k;
            for (int i = 0; i < d; ++i) { g[i] = static_cast<int>(t % r); t /= r; }
            g[d] = 1;
            if (mod_poly(f, g).empty()) return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("make_field picks the expected moduli") {
    Field f4 = Field::make(2, 2);
    CHECK(f4.modulus() == std::vector<int>{1, 1, 1});  // x^2 + x + 1

    Field f3 = Field::make(3, 1);
    CHECK(f3.modulus() == std::vector<int>{0, 1});  // x

    // (2,3): the returned modulus must be irreducible and the smallest such
    // cubic in enumeration order, confirmed by the exhaustive oracle.
    Field f8 = Field::make(2, 3);
    const auto& m = f8.modulus();
    REQUIRE(m.size() == 4);
    CHECK(oracle_irreducible(m, 2));
    long found = 0;
    for (int i = 0; i < 3; ++i) found += m[i] << i;
    for (long k = 0; k < found; ++k) {
        std::vector<int> g = {static_cast<int>(k & 1), static_cast<int>((k >> 1) & 1),
                              static_cast<int>((k >> 2) & 1), 1};
        CHECK_FALSE(oracle_irreducible(g, 2));
    }
}

TEST_CASE("make_field rejects bad parameters") {
    CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 7), std::invalid_argument);  // 128 > default cap
    CHECK_NOTHROW(Field::make(2, 7, 128));
}

TEST_CASE("F_4 arithmetic matches the published tables") {
    Field f = Field::make(2, 2);
    FieldElement zero = f.zero(), one = f.one(), w = f.element(2), wb = f.element(3);

    CHECK(w * w == wb);
    CHECK(w + wb == one);
    CHECK(wb * wb == w);
    CHECK(w * wb == one);
    CHECK(one + one == zero);

    // Full tables.
    int add_expected[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    int mul_expected[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            CHECK((f.element(i) + f.element(j)).index() == add_expected[i][j]);
            CHECK((f.element(i) * f.element(j)).index() == mul_expected[i][j]);
        }
}

TEST_CASE("inverse laws and error cases") {
    for (auto [r, n] : {std::pair{2, 2}, {3, 1}, {2, 3}, {3, 2}, {5, 1}}) {
        Field f = Field::make(r, n);
        for (int i = 1; i < f.size(); ++i) {
            FieldElement x = f.element(i);
            CHECK(x * x.inverse() == f.one());
        }
        CHECK_THROWS_AS(f.zero().inverse(), std::invalid_argument);
    }
    Field f4 = Field::make(2, 2), f2 = Field::make(2, 1);
    CHECK_THROWS_AS(f4.one() + f2.one(), std::invalid_argument);
}

TEST_CASE("field axioms hold exhaustively for N <= 9") {
    for (auto [r, n] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
        Field f = Field::make(r, n);
        auto els = f.elements();
        for (const auto& a : els)
            for (const auto& b : els) {
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
                for (const auto& c : els) {
                    CHECK((a + b) + c == a + (b + c));
                    CHECK((a * b) * c == a * (b * c));
                    CHECK(a * (b + c) == a * b + a * c);
                }
            }
    }
}

TEST_CASE("trace lands in the prime subfield and is linear") {
    Field f4 = Field::make(2, 2);
    FieldElement w = f4.element(2);
    CHECK(trace_int(f4.zero()) == 0);
    CHECK(trace_int(w) == 1);        // tr w = w + w^2 = w + wbar = 1
    CHECK(trace_int(f4.one()) == 0); // 1 + 1

    Field f8 = Field::make(2, 3);
    for (const auto& x : f8.elements()) {
        CHECK(trace(x).in_prime_subfield());
        for (const auto& y : f8.elements())
            CHECK(trace_int(x + y) == (trace_int(x) + trace_int(y)) % 2);
    }
    // F_r-linearity, sampled over a larger field.
    Field f9 = Field::make(3, 2);
    for (const auto& x : f9.elements())
        for (int a = 0; a < 3; ++a)
            CHECK(trace_int(f9.element(a) * x) == (a * trace_int(x)) % 3);
    // For prime N the trace is the identity.
    Field f5 = Field::make(5, 1);
    for (const auto& x : f5.elements()) CHECK(trace(x) == x);
}

TEST_CASE("trace stays in the prime subfield up to the size cap") {
    for (auto [r, n] : {std::pair{2, 6}, {7, 2}, {3, 3}}) {
        Field f = Field::make(r, n);
        for (int i = 0; i < f.size(); i += 3) CHECK(trace(f.element(i)).in_prime_subfield());
    }
}

TEST_CASE("dual basis satisfies the Kronecker delta property") {
    Field f4 = Field::make(2, 2);
    FieldElement w = f4.element(2), wb = f4.element(3);

    FieldBasis E({w, f4.one()});
    FieldBasis Ed = dual_basis(E);
    CHECK(Ed.at(0) == f4.one());
    CHECK(Ed.at(1) == wb);  // dual of (w, 1) is (1, wbar)

    for (auto [r, n] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
        Field f = Field::make(r, n);
        FieldBasis B = polynomial_basis(f);
        FieldBasis Bd = dual_basis(B);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK(trace_int(B.at(i) * Bd.at(j)) == (i == j ? 1 : 0));
        // Involution.
        CHECK(dual_basis(Bd) == B);
    }
}

TEST_CASE("dual basis for F_8 matches an independent linear solve") {
    Field f8 = Field::make(2, 3);
    FieldBasis E = polynomial_basis(f8);  // (1, z, z^2)
    FieldBasis Ed = dual_basis(E);
    // Oracle: brute-force search over all element triples for the tuple with
    // tr(e_i d_j) = delta_ij.
    std::vector<int> found(3, -1);
    for (int j = 0; j < 3; ++j)
        for (int cand = 0; cand < 8; ++cand) {
            bool ok = true;
            for (int i = 0; i < 3; ++i)
                ok = ok && trace_int(E.at(i) * f8.element(cand)) == (i == j ? 1 : 0);
            if (ok) { found[j] = cand; break; }
        }
    for (int j = 0; j < 3; ++j) {
        REQUIRE(found[j] >= 0);
        CHECK(Ed.at(j).index() == found[j]);
    }
}

TEST_CASE("dependent tuples are rejected") {
    Field f4 = Field::make(2, 2);
    FieldElement w = f4.element(2);
    CHECK_THROWS_AS(FieldBasis({w, w}), std::invalid_argument);
    CHECK_THROWS_AS(FieldBasis({f4.zero(), w}), std::invalid_argument);
    Field f9 = Field::make(3, 2);
    FieldElement x = f9.element(3);  // the generator
    CHECK_THROWS_AS(FieldBasis({x, x + x}), std::invalid_argument);
}

TEST_CASE("expand produces exact expansion coefficients") {
    Field f4 = Field::make(2, 2);
    FieldElement w = f4.element(2), wb = f4.element(3);
    FieldBasis E({w, f4.one()});
    CHECK(expand(wb, E) == std::vector<int>{1, 1});  // wbar = w + 1
    CHECK(expand(f4.zero(), E) == std::vector<int>{0, 0});

    // Round trip over all elements and two bases of F_9.
    Field f9 = Field::make(3, 2);
    FieldElement g = f9.element(3);
    for (const FieldBasis& B : {polynomial_basis(f9), FieldBasis({g + f9.one(), g})}) {
        for (const auto& x : f9.elements()) {
            auto c = expand(x, B);
            CHECK(reconstruct(c, B) == x);
        }
    }
}

TEST_CASE("pow follows the exponent laws") {
    Field f9 = Field::make(3, 2);
    for (const auto& x : f9.elements()) {
        CHECK(x.pow(0) == f9.one());
        CHECK(x.pow(1) == x);
        CHECK(x.pow(3) == x * x * x);
        if (!x.is_zero()) {
            CHECK(x.pow(-1) == x.inverse());
            CHECK(x.pow(8) == f9.one());  // |F_9*| = 8
            CHECK(x.pow(5) * x.pow(3) == f9.one());
        }
    }
}

TEST_CASE("primitive elements have full multiplicative order") {
    Field f4 = Field::make(2, 2);
    CHECK(primitive_element(f4) == f4.element(2));  // w: powers w, wbar, 1
    CHECK(multiplicative_order(f4.element(2)) == 3);

    Field f2 = Field::make(2, 1);
    CHECK(primitive_element(f2) == f2.one());

    Field f8 = Field::make(2, 3);
    CHECK(multiplicative_order(primitive_element(f8)) == 7);

    Field f9 = Field::make(3, 2);
    CHECK(multiplicative_order(primitive_element(f9)) == 8);
}
