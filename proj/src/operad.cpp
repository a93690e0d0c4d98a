#include "freehedra/operad.hpp"

#include <algorithm>

#include "freehedra/errors.hpp"

namespace freehedra {

std::optional<int> operation_degree(const FaceComplex& c, const Chain& ch) {
    if (!is_chain(c, ch))
        return std::nullopt;
    return excess(c, ch);
}

LaurentPoly operation_dimension(const FaceComplex& c, const Chain& ch) {
    auto l = operation_degree(c, ch);
    if (!l)
        return {};
    return LaurentPoly::monomial(*l - static_cast<int>(ch.faces.size()) + 1);
}

namespace {

struct ChainWalker {
    const FaceComplex& c;
    FaceId color;
    std::size_t max_len;
    RepeatPolicy policy;
    std::vector<FaceId> members;  // subfaces of color, ascending id
    Series out;
    Word word;
    std::size_t visited = 0;

    void run() {
        members = c.subfaces(color);
        extend(0);
    }

    void extend(int weight) {
        if (!word.empty()) {
            if (++visited > kMaxHilbertChains)
                throw ResourceError("hilbert image of face " + std::to_string(color) +
                                    " visits more than " + std::to_string(kMaxHilbertChains) +
                                    " chains");
            int e = c.dim(color) - 1 - weight;
            out.add_term(word, LaurentPoly::monomial(e));
        }
        if (word.size() == max_len)
            return;
        for (FaceId g : members) {
            if (!word.empty()) {
                FaceId prev = word.back();
                if (policy == RepeatPolicy::exclude && prev == g)
                    continue;
                if (!c.vertex_leq(c.max_vertex(prev), c.min_vertex(g)))
                    continue;
            }
            word.push_back(g);
            extend(weight + c.dim(g) - 1);
            word.pop_back();
        }
    }
};

} // namespace

HilbertImage hilbert_image(const FaceComplex& c, FaceId color, std::size_t max_len,
                           RepeatPolicy policy) {
    c.require_directed();
    c.check_id(color);
    if (max_len > kMaxHilbertLength)
        throw ResourceError("hilbert truncation " + std::to_string(max_len) + " exceeds bound " +
                            std::to_string(kMaxHilbertLength));
    ChainWalker w{c, color, max_len, policy, {}, {}, {}, 0};
    w.run();
    return HilbertImage{color, std::move(w.out)};
}

Endomorphism poincare_hilbert(const FaceComplex& c, std::size_t max_len, RepeatPolicy policy) {
    Endomorphism f;
    f.reserve(c.size());
    for (FaceId col = 0; col < c.size(); ++col)
        f.push_back(hilbert_image(c, col, max_len, policy).terms);
    return f;
}

bool is_augmented(const FaceComplex& c) {
    c.require_directed();
    for (FaceId col = 0; col < c.size(); ++col) {
        const std::size_t len = static_cast<std::size_t>(std::max(1, c.dim(col) - 1));
        ChainWalker w{c, col, len, RepeatPolicy::exclude, {}, {}, {}, 0};
        w.run();
        for (const auto& [word, p] : w.out.terms()) {
            if (word.size() == 1 && word.front() == col)
                continue;
            if (*p.min_exponent() <= 0)
                return false;
        }
    }
    return true;
}

std::vector<HilbertImage> selfduality_residual(const FaceComplex& c, std::size_t max_len,
                                               RepeatPolicy policy) {
    if (max_len > kMaxResidualLength)
        throw ResourceError("residual truncation " + std::to_string(max_len) + " exceeds bound " +
                            std::to_string(kMaxResidualLength));
    const auto f = poincare_hilbert(c, max_len, policy);
    std::vector<HilbertImage> out;
    out.reserve(c.size());
    for (FaceId col = 0; col < c.size(); ++col) {
        const Series gen = Series::generator(col);
        Series s = involution(apply(f, involution(gen), max_len));
        s = apply(f, s, max_len);
        out.push_back(HilbertImage{col, s - gen});
    }
    return out;
}

} // namespace freehedra
