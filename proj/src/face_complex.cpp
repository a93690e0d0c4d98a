#include "freehedra/face_complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "freehedra/errors.hpp"

namespace freehedra {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

std::string face_name(FaceId f) {
    return "face " + std::to_string(f);
}

} // namespace

const FaceRecord& FaceComplex::face(FaceId f) const {
    check_id(f);
    return faces_[f];
}

void FaceComplex::check_id(FaceId f) const {
    if (f >= faces_.size())
        throw DomainError("unknown face id " + std::to_string(f));
}

std::size_t FaceComplex::vertex_index(FaceId v) const {
    check_id(v);
    if (vertex_index_[v] == npos)
        throw DomainError(face_name(v) + " is not a vertex");
    return vertex_index_[v];
}

std::vector<FaceId> FaceComplex::vertices_of(FaceId f) const {
    check_id(f);
    std::vector<FaceId> out;
    const auto& bits = vertex_sets_[f];
    for (auto i = bits.find_first(); i != boost::dynamic_bitset<>::npos; i = bits.find_next(i))
        out.push_back(vertices_[i]);
    return out;
}

bool FaceComplex::contains(FaceId outer, FaceId inner) const {
    check_id(outer);
    check_id(inner);
    return vertex_sets_[inner].is_subset_of(vertex_sets_[outer]);
}

std::vector<FaceId> FaceComplex::subfaces(FaceId f) const {
    check_id(f);
    std::vector<FaceId> out;
    const auto& outer = vertex_sets_[f];
    const int d = faces_[f].dim;
    for (FaceId g = 0; g < faces_.size(); ++g)
        if (faces_[g].dim <= d && vertex_sets_[g].is_subset_of(outer))
            out.push_back(g);
    return out;
}

bool FaceComplex::vertex_leq(FaceId u, FaceId v) const {
    return up_[vertex_index(u)].test(vertex_index(v));
}

void FaceComplex::require_directed() const {
    if (!report_.valid)
        throw DomainError("complex '" + family_ + "' is not directed");
}

FaceId FaceComplex::min_vertex(FaceId f) const {
    check_id(f);
    require_directed();
    return report_.min[f];
}

FaceId FaceComplex::max_vertex(FaceId f) const {
    check_id(f);
    require_directed();
    return report_.max[f];
}

FaceComplex::Builder::Builder(std::string family, int size_param)
    : family_(std::move(family)), size_param_(size_param) {}

FaceId FaceComplex::Builder::add_face(int dim, std::string label, std::optional<Triple> triple) {
    if (dim < 0)
        throw DomainError("face dimension must be nonnegative");
    faces_.push_back(FaceRecord{dim, std::move(label), std::move(triple)});
    return static_cast<FaceId>(faces_.size() - 1);
}

void FaceComplex::Builder::add_cover(FaceId sub, FaceId super) {
    covers_.emplace_back(sub, super);
}

void FaceComplex::Builder::add_arc(FaceId tail, FaceId head) {
    arcs_.emplace_back(tail, head);
}

namespace {

DirectedReport compute_directed_report(const FaceComplex& c,
                                       const std::vector<std::vector<std::size_t>>& out_arcs) {
    DirectedReport rep;
    rep.min.assign(c.size(), kNoFace);
    rep.max.assign(c.size(), kNoFace);
    const auto& arcs = c.skeleton();
    const auto& verts = c.vertices();
    for (FaceId f = 0; f < c.size(); ++f) {
        const auto& bits = c.vertex_bits(f);
        std::vector<std::size_t> local;
        for (auto i = bits.find_first(); i != boost::dynamic_bitset<>::npos; i = bits.find_next(i))
            local.push_back(i);
        std::map<std::size_t, int> indeg, outdeg;
        std::map<std::size_t, std::vector<std::size_t>> adj;
        for (auto i : local) {
            indeg[i];
            outdeg[i];
        }
        for (auto i : local)
            for (auto a : out_arcs[i]) {
                std::size_t h = c.vertex_index(arcs[a].head);
                if (!bits.test(h) || !c.contains(f, arcs[a].edge))
                    continue;
                ++outdeg[i];
                ++indeg[h];
                adj[i].push_back(h);
            }
        std::vector<std::size_t> sources, sinks;
        for (auto i : local) {
            if (indeg[i] == 0)
                sources.push_back(i);
            if (outdeg[i] == 0)
                sinks.push_back(i);
        }
        // Kahn on the induced graph.
        std::size_t removed = 0;
        std::vector<std::size_t> stack = sources;
        auto deg = indeg;
        while (!stack.empty()) {
            auto i = stack.back();
            stack.pop_back();
            ++removed;
            for (auto h : adj[i])
                if (--deg[h] == 0)
                    stack.push_back(h);
        }
        bool ok = true;
        if (removed != local.size()) {
            rep.violations.push_back({f, "oriented 1-skeleton has a cycle"});
            ok = false;
        }
        if (sources.size() != 1) {
            rep.violations.push_back(
                {f, "expected one source, found " + std::to_string(sources.size())});
            ok = false;
        }
        if (sinks.size() != 1) {
            rep.violations.push_back(
                {f, "expected one sink, found " + std::to_string(sinks.size())});
            ok = false;
        }
        if (ok) {
            rep.min[f] = verts[sources.front()];
            rep.max[f] = verts[sinks.front()];
        } else {
            rep.valid = false;
        }
    }
    return rep;
}

} // namespace

FaceComplex FaceComplex::Builder::build() && {
    FaceComplex c;
    c.family_ = std::move(family_);
    c.size_param_ = size_param_;
    c.faces_ = std::move(faces_);
    c.covers_ = std::move(covers_);
    const std::size_t n = c.faces_.size();
    if (n == 0)
        throw DomainError("complex has no faces");

    std::vector<std::vector<FaceId>> facets(n);
    for (auto [sub, super] : c.covers_) {
        if (sub >= n || super >= n)
            throw DomainError("cover references unknown face");
        if (c.faces_[super].dim != c.faces_[sub].dim + 1)
            throw DomainError("cover " + face_name(sub) + " < " + face_name(super) +
                              " does not step dimension by one");
        facets[super].push_back(sub);
    }

    c.vertex_index_.assign(n, npos);
    for (FaceId f = 0; f < n; ++f)
        if (c.faces_[f].dim == 0) {
            c.vertex_index_[f] = c.vertices_.size();
            c.vertices_.push_back(f);
        }
    const std::size_t nv = c.vertices_.size();

    std::vector<FaceId> by_dim(n);
    std::iota(by_dim.begin(), by_dim.end(), FaceId{0});
    std::stable_sort(by_dim.begin(), by_dim.end(),
                     [&](FaceId a, FaceId b) { return c.faces_[a].dim < c.faces_[b].dim; });
    c.vertex_sets_.assign(n, boost::dynamic_bitset<>(nv));
    for (FaceId f : by_dim) {
        if (c.faces_[f].dim == 0) {
            if (!facets[f].empty())
                throw DomainError(face_name(f) + " is a vertex with facets");
            c.vertex_sets_[f].set(c.vertex_index_[f]);
            continue;
        }
        if (facets[f].empty())
            throw DomainError(face_name(f) + " has positive dimension but no facets");
        for (FaceId s : facets[f])
            c.vertex_sets_[f] |= c.vertex_sets_[s];
    }

    {
        std::map<std::vector<std::size_t>, FaceId> seen;
        for (FaceId f = 0; f < n; ++f) {
            std::vector<std::size_t> key;
            const auto& b = c.vertex_sets_[f];
            for (auto i = b.find_first(); i != boost::dynamic_bitset<>::npos; i = b.find_next(i))
                key.push_back(i);
            auto [it, fresh] = seen.emplace(std::move(key), f);
            if (!fresh)
                throw DomainError(face_name(f) + " and " + face_name(it->second) +
                                  " have the same vertex set");
        }
    }

    int top_dim = -1;
    for (FaceId f = 0; f < n; ++f)
        if (c.faces_[f].dim > top_dim) {
            top_dim = c.faces_[f].dim;
            c.top_ = f;
        }
    for (FaceId f = 0; f < n; ++f) {
        if (c.faces_[f].dim == top_dim && f != c.top_)
            throw DomainError("complex has more than one face of top dimension");
    }
    if (c.vertex_sets_[c.top_].count() != nv)
        throw DomainError("top face does not contain every vertex");

    std::map<std::pair<std::size_t, std::size_t>, FaceId> edge_of;
    for (FaceId f = 0; f < n; ++f) {
        if (c.faces_[f].dim != 1)
            continue;
        const auto& b = c.vertex_sets_[f];
        if (b.count() != 2)
            throw DomainError("edge " + face_name(f) + " has " + std::to_string(b.count()) +
                              " vertices");
        auto i = b.find_first();
        auto j = b.find_next(i);
        edge_of[{i, j}] = f;
    }
    std::vector<bool> oriented(n, false);
    for (auto [tail, head] : arcs_) {
        if (tail >= n || head >= n || c.vertex_index_[tail] == npos || c.vertex_index_[head] == npos)
            throw DomainError("arc endpoint is not a vertex");
        auto i = c.vertex_index_[tail], j = c.vertex_index_[head];
        auto it = edge_of.find({std::min(i, j), std::max(i, j)});
        if (it == edge_of.end())
            throw DomainError("arc " + face_name(tail) + " -> " + face_name(head) +
                              " does not match an edge");
        if (oriented[it->second])
            throw DomainError("edge " + face_name(it->second) + " is oriented twice");
        oriented[it->second] = true;
        c.arcs_.push_back(Arc{it->second, tail, head});
    }
    for (auto [_, e] : edge_of)
        if (!oriented[e])
            throw DomainError("edge " + face_name(e) + " has no orientation");
    std::sort(c.arcs_.begin(), c.arcs_.end(),
              [](const Arc& a, const Arc& b) { return a.edge < b.edge; });

    std::vector<std::vector<std::size_t>> out_arcs(nv);
    std::vector<std::vector<std::size_t>> succ(nv);
    for (std::size_t a = 0; a < c.arcs_.size(); ++a) {
        auto t = c.vertex_index_[c.arcs_[a].tail];
        out_arcs[t].push_back(a);
        succ[t].push_back(c.vertex_index_[c.arcs_[a].head]);
    }

    c.up_.assign(nv, boost::dynamic_bitset<>(nv));
    for (std::size_t s = 0; s < nv; ++s) {
        auto& seen = c.up_[s];
        std::vector<std::size_t> stack{s};
        seen.set(s);
        while (!stack.empty()) {
            auto i = stack.back();
            stack.pop_back();
            for (auto h : succ[i])
                if (!seen.test(h)) {
                    seen.set(h);
                    stack.push_back(h);
                }
        }
    }

    {
        std::vector<int> indeg(nv, 0);
        for (std::size_t i = 0; i < nv; ++i)
            for (auto h : succ[i])
                ++indeg[h];
        std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
        for (std::size_t i = 0; i < nv; ++i)
            if (indeg[i] == 0)
                ready.push(i);
        while (!ready.empty()) {
            auto i = ready.top();
            ready.pop();
            c.topo_.push_back(c.vertices_[i]);
            for (auto h : succ[i])
                if (--indeg[h] == 0)
                    ready.push(h);
        }
        if (c.topo_.size() != nv)
            c.topo_.clear();
    }

    c.report_ = compute_directed_report(c, out_arcs);
    return c;
}

DirectedReport validate_directed(const FaceComplex& c) {
    return c.directed_report();
}

FaceComplex induced_subcomplex(const FaceComplex& c, FaceId f) {
    auto subs = c.subfaces(f);
    std::vector<FaceId> renum(c.size(), kNoFace);
    FaceComplex::Builder b(c.family(), c.size_parameter());
    for (FaceId g : subs) {
        const auto& rec = c.face(g);
        renum[g] = b.add_face(rec.dim, rec.label, rec.triple);
    }
    for (auto [sub, super] : c.covers())
        if (renum[sub] != kNoFace && renum[super] != kNoFace)
            b.add_cover(renum[sub], renum[super]);
    for (const auto& a : c.skeleton())
        if (renum[a.edge] != kNoFace)
            b.add_arc(renum[a.tail], renum[a.head]);
    return std::move(b).build();
}

} // namespace freehedra
