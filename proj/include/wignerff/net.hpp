#pragma once

// Translationally covariant quantum nets: a rank-1 projector on every one of
// the N(N+1) phase-space lines, determined by a ray choice (one basis label
// per striation). NetSpace bundles everything fixed by (field, basis pair):
// striations, cached translation operators, the labeled striation bases, and
// the line/point incidence tables that the Wigner and classification modules
// reread heavily.

#include <memory>
#include <stdexcept>
#include <vector>

#include "wignerff/mub.hpp"

namespace wignerff {

inline constexpr int kDefaultEnumerationCap = 5;

// One basis label per striation (N+1 labels). labels[0] belongs to the
// vertical striation, labels[1] to the horizontal one.
struct RayChoice {
    std::vector<FieldElement> labels;

    long key() const {
        long k = 0;
        const long N = labels.empty() ? 1 : labels[0].tables()->N;
        for (const auto& l : labels) k = k * N + l.index();
        return k;
    }

    friend bool operator==(const RayChoice& a, const RayChoice& b) { return a.labels == b.labels; }
    friend bool operator!=(const RayChoice& a, const RayChoice& b) { return !(a == b); }
    friend bool operator<(const RayChoice& a, const RayChoice& b) { return a.key() < b.key(); }
};

class QuantumNet;

class NetSpace {
public:
    NetSpace() = default;

    NetSpace(const Field& f, const BasisPair& pair) {
        auto im_ptr = std::make_shared<Impl>(f, pair);
        Impl& im = *im_ptr;
        im.strs = striations(f);
        im.mub = mub_family(f, pair);
        const int N = f.size();
        im.translations.reserve(static_cast<std::size_t>(N) * N);
        for (int idx = 0; idx < N * N; ++idx)
            im.translations.push_back(translation_operator(PhasePoint::from_index(f, idx), pair));
        im.lines_through.resize(static_cast<std::size_t>(N) * N);
        for (int qi = 0; qi < N; ++qi)
            for (int pi = 0; pi < N; ++pi) {
                PhasePoint x{f.element(qi), f.element(pi)};
                auto& entry = im.lines_through[x.index()];
                for (const auto& S : im.strs) {
                    // Offset of the striation's line through x: c = a q + b p.
                    const Line& ray = S.ray();
                    FieldElement c = ray.a() * x.q + ray.b() * x.p;
                    entry.emplace_back(S.index, c.index());
                }
            }
        impl_ = std::move(im_ptr);
    }

    bool valid() const { return impl_ != nullptr; }
    const Field& field() const { return impl_->field; }
    const BasisPair& pair() const { return impl_->pair; }
    const std::vector<Striation>& strs() const { return impl_->strs; }
    const MubFamily& mub() const { return impl_->mub; }

    const Matrix& translation(int point_index) const { return impl_->translations[point_index]; }
    const Matrix& translation(const PhasePoint& alpha) const { return translation(alpha.index()); }

    const Line& line(int striation, int offset) const { return impl_->strs[striation].lines[offset]; }
    std::pair<int, int> locate(const Line& l) const {
        return {striation_index_of(l), line_offset_of(l)};
    }
    // (striation, offset) of each of the N+1 lines through a point.
    const std::vector<std::pair<int, int>>& lines_through(int point_index) const {
        return impl_->lines_through[point_index];
    }

    RayChoice zero_choice() const {
        RayChoice c;
        c.labels.assign(striation_count(impl_->field), impl_->field.zero());
        return c;
    }

    RayChoice choice_from_indices(const std::vector<int>& idx) const {
        if (static_cast<int>(idx.size()) != striation_count(impl_->field))
            throw std::invalid_argument("ray choice needs one label per striation");
        RayChoice c;
        for (int i : idx) c.labels.push_back(impl_->field.element(i));
        return c;
    }

    // Label displacement per striation when the whole net is pulled back along
    // the translation by alpha (lambda -> T_alpha lambda): the vertical label
    // shifts by alpha.q, the slope-m label by alpha.p - m * alpha.q.
    RayChoice translate_choice(const RayChoice& choice, const PhasePoint& alpha) const {
        const Field& f = impl_->field;
        RayChoice out;
        out.labels.reserve(choice.labels.size());
        for (int i = 0; i < striation_count(f); ++i) {
            FieldElement delta = (i == 0) ? alpha.q : alpha.p - f.element(i - 1) * alpha.q;
            out.labels.push_back(choice.labels[i] + delta);
        }
        return out;
    }

    // The unique translation bringing a choice to its equivalence-class
    // representative with vertical and horizontal labels both 0.
    PhasePoint normalizing_translation(const RayChoice& choice) const {
        return {-choice.labels[0], -choice.labels[1]};
    }

    RayChoice representative(const RayChoice& choice) const {
        return translate_choice(choice, normalizing_translation(choice));
    }

    std::vector<RayChoice> all_choices(int cap = kDefaultEnumerationCap) const {
        return enumerate(false, cap);
    }
    std::vector<RayChoice> representative_choices(int cap = kDefaultEnumerationCap) const {
        return enumerate(true, cap);
    }

    inline QuantumNet build(const RayChoice& choice) const;

    friend bool operator==(const NetSpace& a, const NetSpace& b) { return a.impl_ == b.impl_; }

private:
    struct Impl {
        Field field;
        BasisPair pair;
        std::vector<Striation> strs;
        MubFamily mub;
        std::vector<Matrix> translations;
        std::vector<std::vector<std::pair<int, int>>> lines_through;

        Impl(const Field& f, const BasisPair& p) : field(f), pair(p) {}
    };

    std::vector<RayChoice> enumerate(bool representatives, int cap) const {
        const Field& f = impl_->field;
        const int N = f.size();
        if (N > cap)
            throw std::invalid_argument("enumeration cap exceeded: N = " + std::to_string(N) +
                                        " > " + std::to_string(cap));
        const int free_slots = representatives ? N - 1 : N + 1;
        long total = 1;
        for (int i = 0; i < free_slots; ++i) total *= N;
        std::vector<RayChoice> out;
        out.reserve(total);
        for (long k = 0; k < total; ++k) {
            std::vector<int> idx(striation_count(f), 0);
            long t = k;
            const int first = representatives ? 2 : 0;
            for (int i = first; i < striation_count(f); ++i) {
                idx[i] = static_cast<int>(t % N);
                t /= N;
            }
            out.push_back(choice_from_indices(idx));
        }
        return out;
    }

    std::shared_ptr<const Impl> impl_;
};

class QuantumNet {
public:
    QuantumNet() = default;
    QuantumNet(NetSpace space, RayChoice choice,
               std::vector<std::vector<Matrix>> projectors)
        : space_(std::move(space)), choice_(std::move(choice)), projectors_(std::move(projectors)) {}

    const NetSpace& space() const { return space_; }
    const Field& field() const { return space_.field(); }
    const BasisPair& pair() const { return space_.pair(); }
    const RayChoice& choice() const { return choice_; }

    const Matrix& projector(int striation, int offset) const { return projectors_[striation][offset]; }
    const Matrix& projector(const Line& l) const {
        auto [s, o] = space_.locate(l);
        return projectors_[s][o];
    }

private:
    NetSpace space_;
    RayChoice choice_;
    std::vector<std::vector<Matrix>> projectors_;
};

// The ray of striation i carries the chosen basis vector; the line at offset
// c carries the label shifted by the displacement of the translation mapping
// the ray onto it. Using labels directly keeps parallel lines exactly
// orthogonal and the per-striation resolution of identity exact.
inline QuantumNet NetSpace::build(const RayChoice& choice) const {
    const Field& f = impl_->field;
    if (static_cast<int>(choice.labels.size()) != striation_count(f))
        throw std::invalid_argument("ray choice needs one label per striation");
    const int N = f.size();
    std::vector<std::vector<Matrix>> proj(striation_count(f));
    for (int i = 0; i < striation_count(f); ++i) {
        const auto& basis = impl_->mub.bases[i];
        proj[i].reserve(N);
        for (int c = 0; c < N; ++c) {
            // Ray -> offset-c line via translation (c, 0) for non-horizontal
            // striations and (0, c) for the horizontal one.
            PhasePoint alpha = (i == 1) ? PhasePoint{f.zero(), f.element(c)}
                                        : PhasePoint{f.element(c), f.zero()};
            FieldElement delta = (i == 0) ? alpha.q : alpha.p - f.element(i - 1) * alpha.q;
            FieldElement label = choice.labels[i] + delta;
            proj[i].push_back(outer(basis.vectors[label.index()]));
        }
    }
    return QuantumNet(*this, choice, std::move(proj));
}

inline QuantumNet build_net(const Field& f, const BasisPair& pair, const RayChoice& choice) {
    return NetSpace(f, pair).build(choice);
}

// The net lambda -> Q(T_alpha lambda); equivalent to the original, related by
// the unitary T_alpha.
inline QuantumNet translate_net(const QuantumNet& net, const PhasePoint& alpha) {
    return net.space().build(net.space().translate_choice(net.choice(), alpha));
}

} // namespace wignerff
