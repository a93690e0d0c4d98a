#include "freehedra/shortness.hpp"

#include <algorithm>
#include <limits>

#include "freehedra/errors.hpp"

namespace freehedra {

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b, bool& saturated) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b) {
        saturated = true;
        return std::numeric_limits<std::uint64_t>::max();
    }
    return a + b;
}

struct Member {
    FaceId face;
    int weight;
    std::size_t lo;  // local index of min
    std::size_t hi;  // local index of max
};

// The DAG of one ambient face, vertices in topological order.
struct FaceDag {
    FaceId ambient;
    int dim;
    std::vector<FaceId> verts;
    std::vector<Member> members;  // ascending face id
    std::vector<std::vector<bool>> leq;
    std::vector<int> suffix;  // best possibly-empty chain weight with first min >= v

    FaceDag(const FaceComplex& c, FaceId f) : ambient(f), dim(c.dim(f)) {
        c.require_directed();
        const auto& bits = c.vertex_bits(f);
        std::vector<std::size_t> local(c.size(), 0);
        for (FaceId v : c.topological_vertices())
            if (bits.test(c.vertex_index(v))) {
                local[v] = verts.size();
                verts.push_back(v);
            }
        const std::size_t n = verts.size();
        leq.assign(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                leq[i][j] = c.vertex_leq(verts[i], verts[j]);
        for (FaceId g : c.subfaces(f)) {
            if (g == f || c.dim(g) < 1)
                continue;
            members.push_back({g, c.dim(g) - 1, local[c.min_vertex(g)], local[c.max_vertex(g)]});
        }
        suffix.assign(n + 1, 0);
        for (std::size_t v = n; v-- > 0;) {
            int best = 0;
            for (const auto& m : members)
                if (leq[v][m.lo])
                    best = std::max(best, m.weight + suffix[m.hi]);
            suffix[v] = best;
        }
    }

    // Whether member m may follow a chain whose last max is local vertex `last`.
    bool follows(std::size_t last, const Member& m) const { return leq[last][m.lo]; }

    int threshold() const { return dim - 1; }
};

} // namespace

FaceCertificate certify_face(const FaceComplex& c, FaceId face) {
    FaceDag dag(c, face);
    FaceCertificate cert;
    cert.face = face;
    cert.dim = dag.dim;
    cert.vertices = dag.verts.size();
    cert.members = dag.members.size();
    for (const auto& m : dag.members)
        cert.max_weight = std::max(cert.max_weight, m.weight + dag.suffix[m.hi]);

    // chains_from[v]: possibly-empty chains whose first member has min >= v.
    const std::size_t n = dag.verts.size();
    std::vector<std::uint64_t> chains_from(n, 1);
    for (std::size_t v = n; v-- > 0;) {
        std::uint64_t total = 1;
        for (const auto& m : dag.members)
            if (dag.leq[v][m.lo])
                total = sat_add(total, chains_from[m.hi], cert.saturated);
        chains_from[v] = total;
    }
    cert.chains = n == 0 ? 0 : chains_from[0] - 1;
    return cert;
}

std::optional<Chain> least_violating_chain(const FaceComplex& c, FaceId face) {
    FaceDag dag(c, face);
    const int need = dag.threshold();
    Chain ch{{}, face};
    int weight = 0;
    std::optional<std::size_t> last;
    while (true) {
        const Member* pick = nullptr;
        for (const auto& m : dag.members) {
            if (last && !dag.follows(*last, m))
                continue;
            if (weight + m.weight + dag.suffix[m.hi] >= need) {
                pick = &m;
                break;
            }
        }
        if (!pick)
            return std::nullopt;
        ch.faces.push_back(pick->face);
        weight += pick->weight;
        last = pick->hi;
        if (weight >= need)
            return ch;
    }
}

namespace {

void collect(const FaceDag& dag, Chain& prefix, int weight, std::optional<std::size_t> last,
             std::vector<Chain>& out, std::size_t limit) {
    for (const auto& m : dag.members) {
        if (last && !dag.follows(*last, m))
            continue;
        int w = weight + m.weight;
        if (w + dag.suffix[m.hi] < dag.threshold())
            continue;
        prefix.faces.push_back(m.face);
        if (w >= dag.threshold()) {
            if (out.size() >= limit)
                throw ResourceError("more than " + std::to_string(limit) +
                                    " chains of nonpositive excess");
            out.push_back(prefix);
        }
        collect(dag, prefix, w, m.hi, out, limit);
        prefix.faces.pop_back();
    }
}

} // namespace

std::vector<Chain> enumerate_zero_or_negative_excess_chains(const FaceComplex& c, FaceId face,
                                                            std::size_t limit) {
    FaceDag dag(c, face);
    std::vector<Chain> out;
    Chain prefix{{}, face};
    collect(dag, prefix, 0, std::nullopt, out, limit);
    return out;
}

ShortnessCertificate is_short(const FaceComplex& c) {
    c.require_directed();
    ShortnessCertificate res;
    res.faces.reserve(c.size());
    bool saturated = false;
    for (FaceId f = 0; f < c.size(); ++f) {
        auto cert = certify_face(c, f);
        res.total_chains = sat_add(res.total_chains, cert.chains, saturated);
        if (!cert.passes() && res.is_short) {
            res.is_short = false;
            res.witness = least_violating_chain(c, f);
            res.witness_excess = excess(c, *res.witness);
        }
        res.faces.push_back(cert);
    }
    return res;
}

} // namespace freehedra
