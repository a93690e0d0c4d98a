#include "freehedra/supdim.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "freehedra/chain.hpp"
#include "freehedra/errors.hpp"

namespace freehedra {

int SupDimFunction::at(FaceId v) const {
    auto it = values.find(v);
    if (it == values.end())
        throw DomainError("function has no value at face " + std::to_string(v));
    return it->second;
}

SupDimFunction freehedron_D(const FaceComplex& c) {
    SupDimFunction d;
    for (FaceId v : c.vertices()) {
        const auto& t = c.face(v).triple;
        if (!t)
            throw DomainError("freehedron_D needs forest-tree-forest payloads");
        d.values[v] = static_cast<int>(t->left.size() + t->right.size()) - 1;
    }
    return d;
}

SupDimReport check_supdim(const FaceComplex& c, const SupDimFunction& d) {
    c.require_directed();
    SupDimReport rep;
    for (FaceId v : c.vertices())
        if (d.at(v) < 0) {
            rep.faces_ok = false;
            rep.violations.push_back("negative value at vertex " + std::to_string(v));
        }
    const FaceId top = c.top();
    if (d.at(c.min_vertex(top)) != c.dimension() - 1) {
        rep.boundary_ok = false;
        rep.violations.push_back("D(min P) = " + std::to_string(d.at(c.min_vertex(top))) +
                                 ", expected " + std::to_string(c.dimension() - 1));
    }
    if (d.at(c.max_vertex(top)) != 0) {
        rep.boundary_ok = false;
        rep.violations.push_back("D(max P) = " + std::to_string(d.at(c.max_vertex(top))) +
                                 ", expected 0");
    }
    rep.slack.reserve(c.size());
    for (FaceId f = 0; f < c.size(); ++f) {
        FaceSlack s;
        s.face = f;
        s.dim = c.dim(f);
        s.d_min = d.at(c.min_vertex(f));
        s.d_max = d.at(c.max_vertex(f));
        s.slack = s.d_min - s.d_max - (s.dim - 1);
        if (s.slack < 0) {
            rep.faces_ok = false;
            rep.violations.push_back("face " + std::to_string(f) + " has slack " +
                                     std::to_string(s.slack));
        }
        rep.slack.push_back(s);
    }
    return rep;
}

namespace {

struct AuditGraph {
    std::vector<FaceId> verts;                          // topological order
    std::vector<std::size_t> local;                     // by face id
    std::vector<std::vector<FaceId>> starting;          // members with min at vertex
    std::vector<std::uint64_t> count;                   // saturating
    std::vector<long double> weight;                    // for sampling
};

} // namespace

AuditReport audit_connected_chains(const FaceComplex& c, const SupDimFunction& d,
                                   const AuditOptions& opt) {
    const auto sup = check_supdim(c, d);
    if (!sup.sup_dimensional())
        throw DomainError("audit needs a sup-dimensional function");

    const FaceId top = c.top();
    AuditGraph g;
    g.verts = c.topological_vertices();
    g.local.assign(c.size(), 0);
    for (std::size_t i = 0; i < g.verts.size(); ++i)
        g.local[g.verts[i]] = i;
    const std::size_t n = g.verts.size();
    g.starting.resize(n);
    for (FaceId f = 0; f < c.size(); ++f)
        if (f != top && c.dim(f) >= 1)
            g.starting[g.local[c.min_vertex(f)]].push_back(f);

    const std::size_t sink = g.local[c.max_vertex(top)];
    g.count.assign(n, 0);
    g.weight.assign(n, 0);
    bool saturated = false;
    for (std::size_t v = n; v-- > 0;) {
        if (v == sink) {
            g.count[v] = 1;
            g.weight[v] = 1;
            continue;
        }
        std::uint64_t total = 0;
        long double w = 0;
        for (FaceId f : g.starting[v]) {
            auto h = g.local[c.max_vertex(f)];
            if (total > std::numeric_limits<std::uint64_t>::max() - g.count[h]) {
                saturated = true;
                total = std::numeric_limits<std::uint64_t>::max();
            } else {
                total += g.count[h];
            }
            w += g.weight[h];
        }
        g.count[v] = total;
        g.weight[v] = w;
    }

    AuditReport rep;
    const std::size_t source = g.local[c.min_vertex(top)];
    rep.total_chains = n <= 1 ? 0 : g.count[source];
    rep.exhaustive = !saturated && n <= opt.max_vertices && rep.total_chains <= opt.max_exhaustive_chains;
    if (!rep.exhaustive && !opt.allow_sampling)
        throw ResourceError("connected-chain audit exceeds exhaustive bounds");
    if (n <= 1)
        return rep;

    auto record = [&](const std::vector<FaceId>& faces) {
        AuditedChain ac;
        ac.faces = faces;
        ac.excess = excess(c, Chain{faces, top});
        for (FaceId f : faces) {
            if (sup.slack[f].slack > 0)
                ac.has_positive_slack = true;
            const auto& t = c.face(f).triple;
            ac.middle_empty.push_back(t ? std::optional<bool>(!t->middle) : std::nullopt);
        }
        ++rep.examined;
        if (!ac.has_positive_slack)
            ++rep.failures;
        if (rep.chains.size() < opt.max_recorded)
            rep.chains.push_back(std::move(ac));
    };

    std::vector<FaceId> path;
    if (rep.exhaustive) {
        auto dfs = [&](auto&& self, std::size_t v) -> void {
            if (v == sink) {
                record(path);
                return;
            }
            for (FaceId f : g.starting[v]) {
                path.push_back(f);
                self(self, g.local[c.max_vertex(f)]);
                path.pop_back();
            }
        };
        dfs(dfs, source);
    } else {
        std::mt19937_64 rng(opt.seed);
        for (std::size_t s = 0; s < opt.samples; ++s) {
            path.clear();
            std::size_t v = source;
            while (v != sink) {
                if (g.weight[v] <= 0)
                    throw DomainError("vertex without a connected path to max P");
                std::uniform_real_distribution<double> u(0.0, static_cast<double>(g.weight[v]));
                long double r = u(rng);
                FaceId pick = g.starting[v].back();
                for (FaceId f : g.starting[v]) {
                    r -= g.weight[g.local[c.max_vertex(f)]];
                    if (r < 0) {
                        pick = f;
                        break;
                    }
                }
                path.push_back(pick);
                v = g.local[c.max_vertex(pick)];
            }
            record(path);
        }
    }
    return rep;
}

} // namespace freehedra
