#pragma once

// The N x N phase space over F_N: points, lines aq + bp = c in canonical
// form, striations (complete sets of parallel lines), translations and 2x2
// linear maps. The grid convention places the origin at the lower left, q
// along the horizontal axis and p along the vertical axis.

#include <array>
#include <stdexcept>
#include <vector>

#include "wignerff/gf.hpp"

namespace wignerff {

struct PhasePoint {
    FieldElement q, p;

    PhasePoint() = default;
    PhasePoint(FieldElement q_, FieldElement p_) : q(q_), p(p_) {
        if (q.tables() != p.tables())
            throw std::invalid_argument("phase point coordinates from different fields");
    }

    bool is_origin() const { return q.is_zero() && p.is_zero(); }
    Field field() const { return q.field(); }

    int index() const { return q.index() * q.tables()->N + p.index(); }
    static PhasePoint from_index(const Field& f, int idx) {
        return {f.element(idx / f.size()), f.element(idx % f.size())};
    }
    static PhasePoint origin(const Field& f) { return {f.zero(), f.zero()}; }

    friend PhasePoint operator+(const PhasePoint& a, const PhasePoint& b) {
        return {a.q + b.q, a.p + b.p};
    }
    friend PhasePoint operator-(const PhasePoint& a, const PhasePoint& b) {
        return {a.q - b.q, a.p - b.p};
    }
    friend PhasePoint operator*(const FieldElement& s, const PhasePoint& a) {
        return {s * a.q, s * a.p};
    }
    friend bool operator==(const PhasePoint& a, const PhasePoint& b) { return a.q == b.q && a.p == b.p; }
    friend bool operator!=(const PhasePoint& a, const PhasePoint& b) { return !(a == b); }
};

// Line aq + bp = c, stored canonically: the first nonzero coefficient among
// (a, b) is scaled to 1, so equal point sets compare equal.
class Line {
public:
    Line(FieldElement a, FieldElement b, FieldElement c) : a_(a), b_(b), c_(c) {
        if (a_.is_zero() && b_.is_zero())
            throw std::invalid_argument("line requires (a, b) != (0, 0)");
        FieldElement s = a_.is_zero() ? b_.inverse() : a_.inverse();
        a_ = s * a_;
        b_ = s * b_;
        c_ = s * c_;
    }

    const FieldElement& a() const { return a_; }
    const FieldElement& b() const { return b_; }
    const FieldElement& c() const { return c_; }
    Field field() const { return a_.field(); }

    bool contains(const PhasePoint& x) const { return a_ * x.q + b_ * x.p == c_; }
    bool through_origin() const { return c_.is_zero(); }
    bool parallel_to(const Line& o) const { return a_ == o.a_ && b_ == o.b_; }

    std::vector<PhasePoint> points() const {
        Field f = field();
        std::vector<PhasePoint> pts;
        pts.reserve(f.size());
        if (a_.is_zero()) {           // b = 1: horizontal-type, p = c
            for (const auto& q : f.elements()) pts.emplace_back(q, c_);
        } else {                      // a = 1: q = c - b p
            for (const auto& p : f.elements()) pts.emplace_back(c_ - b_ * p, p);
        }
        return pts;
    }

    static Line through(const PhasePoint& x, const PhasePoint& y) {
        if (x == y) throw std::invalid_argument("need two distinct points");
        Field f = x.field();
        FieldElement dq = y.q - x.q;
        FieldElement dp = y.p - x.p;
        // Normal (a, b) orthogonal to the direction (dq, dp): a dq + b dp = 0.
        FieldElement a = dp;
        FieldElement b = f.zero() - dq;
        FieldElement c = a * x.q + b * x.p;
        return Line(a, b, c);
    }

    friend bool operator==(const Line& l, const Line& m) {
        return l.a_ == m.a_ && l.b_ == m.b_ && l.c_ == m.c_;
    }
    friend bool operator!=(const Line& l, const Line& m) { return !(l == m); }

private:
    FieldElement a_, b_, c_;
};

inline Line translate_line(const Line& l, const PhasePoint& alpha) {
    return Line(l.a(), l.b(), l.c() + l.a() * alpha.q + l.b() * alpha.p);
}

// Striation i holds the N parallel lines with a fixed direction; lines are
// indexed by the c coefficient in element order, so lines[0] is the ray.
// Ordering convention: index 0 is vertical (direction (0,1)), index 1 + m is
// the striation of slope m through (1, m), so index 1 is horizontal.
struct Striation {
    int index = 0;
    PhasePoint direction;
    std::vector<Line> lines;

    const Line& ray() const { return lines.front(); }
};

inline PhasePoint striation_direction(const Field& f, int index) {
    if (index == 0) return {f.zero(), f.one()};
    return {f.one(), f.element(index - 1)};
}

inline int striation_count(const Field& f) { return f.size() + 1; }

inline std::vector<Striation> striations(const Field& f) {
    std::vector<Striation> out;
    out.reserve(striation_count(f));
    for (int i = 0; i < striation_count(f); ++i) {
        Striation s;
        s.index = i;
        s.direction = striation_direction(f, i);
        // Ray through the direction point: a q + b p = 0 with (a, b) normal to
        // it; parallels share the canonical (a, b) and run over all c.
        Line ray(s.direction.p, f.zero() - s.direction.q, f.zero());
        for (const auto& c : f.elements()) s.lines.emplace_back(ray.a(), ray.b(), c);
        out.push_back(std::move(s));
    }
    return out;
}

// Index of the striation containing the line: vertical lines (b = 0) are 0;
// otherwise the slope is m = -1/b for a = 1, and m = 0 for the a = 0 form.
inline int striation_index_of(const Line& l) {
    if (l.b().is_zero()) return 0;
    if (l.a().is_zero()) return 1;
    FieldElement m = -(l.b().inverse());
    return 1 + m.index();
}

inline int line_offset_of(const Line& l) { return l.c().index(); }

inline std::vector<Line> all_lines(const Field& f) {
    std::vector<Line> out;
    out.reserve(f.size() * (f.size() + 1));
    for (const auto& s : striations(f))
        for (const auto& l : s.lines) out.push_back(l);
    return out;
}

// 2x2 matrix [[a, b], [c, d]] over F_N acting on column vectors (q, p).
class LinearMap {
public:
    LinearMap(FieldElement a, FieldElement b, FieldElement c, FieldElement d)
        : a_(a), b_(b), c_(c), d_(d) {}

    static LinearMap identity(const Field& f) {
        return {f.one(), f.zero(), f.zero(), f.one()};
    }

    const FieldElement& a() const { return a_; }
    const FieldElement& b() const { return b_; }
    const FieldElement& c() const { return c_; }
    const FieldElement& d() const { return d_; }
    Field field() const { return a_.field(); }

    FieldElement det() const { return a_ * d_ - b_ * c_; }
    bool unit_det() const { return det() == a_.field().one(); }

    LinearMap inverse() const {
        FieldElement dt = det();
        if (dt.is_zero()) throw std::invalid_argument("singular linear map");
        FieldElement di = dt.inverse();
        return {di * d_, di * (-b_), di * (-c_), di * a_};
    }

    PhasePoint apply(const PhasePoint& x) const {
        return {a_ * x.q + b_ * x.p, c_ * x.q + d_ * x.p};
    }

    // Lines map to lines: the coefficient row transforms by the inverse.
    Line apply(const Line& l) const {
        LinearMap inv = inverse();
        FieldElement na = l.a() * inv.a_ + l.b() * inv.c_;
        FieldElement nb = l.a() * inv.b_ + l.b() * inv.d_;
        return Line(na, nb, l.c());
    }

    friend LinearMap operator*(const LinearMap& L, const LinearMap& M) {
        return {L.a_ * M.a_ + L.b_ * M.c_, L.a_ * M.b_ + L.b_ * M.d_,
                L.c_ * M.a_ + L.d_ * M.c_, L.c_ * M.b_ + L.d_ * M.d_};
    }
    friend bool operator==(const LinearMap& L, const LinearMap& M) {
        return L.a_ == M.a_ && L.b_ == M.b_ && L.c_ == M.c_ && L.d_ == M.d_;
    }
    friend bool operator!=(const LinearMap& L, const LinearMap& M) { return !(L == M); }

    // Stable key for set membership, 0 <= key < N^4.
    long key() const {
        const long N = a_.tables()->N;
        return ((a_.index() * N + b_.index()) * N + c_.index()) * N + d_.index();
    }

private:
    FieldElement a_, b_, c_, d_;
};

// All unit-determinant maps; |SL(2, F_N)| = N^3 - N.
inline std::vector<LinearMap> sl2_group(const Field& f) {
    std::vector<LinearMap> out;
    const auto elems = f.elements();
    for (const auto& a : elems)
        for (const auto& b : elems)
            for (const auto& c : elems)
                for (const auto& d : elems) {
                    if (a * d - b * c == f.one()) out.emplace_back(a, b, c, d);
                }
    return out;
}

} // namespace wignerff
