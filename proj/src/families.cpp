#include "freehedra/families.hpp"

#include <algorithm>
#include <map>

#include "freehedra/errors.hpp"
#include "freehedra/word.hpp"

namespace freehedra {

int PlanarTree::leaves() const {
    if (is_leaf())
        return 1;
    int n = 0;
    for (const auto& c : children)
        n += c.leaves();
    return n;
}

int PlanarTree::internal_nodes() const {
    if (is_leaf())
        return 0;
    int n = 1;
    for (const auto& c : children)
        n += c.internal_nodes();
    return n;
}

bool PlanarTree::is_binary() const {
    if (is_leaf())
        return true;
    if (children.size() != 2)
        return false;
    return children[0].is_binary() && children[1].is_binary();
}

std::strong_ordering PlanarTree::operator<=>(const PlanarTree& o) const {
    return std::lexicographical_compare_three_way(children.begin(), children.end(),
                                                  o.children.begin(), o.children.end());
}

bool PlanarTree::operator==(const PlanarTree& o) const { return children == o.children; }

std::string to_text(const PlanarTree& t) {
    if (t.is_leaf())
        return "x";
    std::string s = "(";
    for (const auto& c : t.children)
        s += to_text(c);
    s += ')';
    return s;
}

namespace {

PlanarTree node(std::vector<PlanarTree> children) {
    return PlanarTree{std::move(children)};
}

PlanarTree parse_node(std::string_view s, std::size_t& pos) {
    if (pos >= s.size())
        throw EncodingError("planar tree text ends early");
    if (s[pos] == 'x') {
        ++pos;
        return PlanarTree{};
    }
    if (s[pos] != '(')
        throw EncodingError("unexpected character in planar tree text");
    ++pos;
    std::vector<PlanarTree> kids;
    while (pos < s.size() && s[pos] != ')')
        kids.push_back(parse_node(s, pos));
    if (pos >= s.size())
        throw EncodingError("unbalanced planar tree text");
    ++pos;
    if (kids.size() < 2)
        throw EncodingError("internal node needs at least two children");
    return node(std::move(kids));
}

void compositions(int n, int min_parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        if (static_cast<int>(cur.size()) >= min_parts)
            out.push_back(cur);
        return;
    }
    for (int first = 1; first <= n; ++first) {
        cur.push_back(first);
        compositions(n - first, min_parts, cur, out);
        cur.pop_back();
    }
}

// For an edge face (exactly one ternary node, all others binary): the
// refinement grouping the first two (left) or last two children there.
PlanarTree resolve_ternary(const PlanarTree& t, bool group_first) {
    if (t.children.size() == 3) {
        const auto& c = t.children;
        if (group_first)
            return node({node({c[0], c[1]}), c[2]});
        return node({c[0], node({c[1], c[2]})});
    }
    PlanarTree out = t;
    for (auto& c : out.children)
        if (!c.is_binary()) {
            c = resolve_ternary(c, group_first);
            return out;
        }
    throw DomainError("tree is not an associahedron edge: " + to_text(t));
}

} // namespace

PlanarTree parse_planar_tree(std::string_view text) {
    std::size_t pos = 0;
    auto t = parse_node(text, pos);
    if (pos != text.size())
        throw EncodingError("trailing characters in planar tree text");
    return t;
}

std::vector<PlanarTree> enumerate_planar_trees(int leaves) {
    if (leaves < 1)
        throw DomainError("planar tree needs at least one leaf");
    std::vector<std::vector<PlanarTree>> memo(leaves + 1);
    memo[1] = {PlanarTree{}};
    for (int n = 2; n <= leaves; ++n) {
        std::vector<std::vector<int>> comps;
        std::vector<int> cur;
        compositions(n, 2, cur, comps);
        for (const auto& comp : comps) {
            std::vector<std::vector<PlanarTree>> partial{{}};
            for (int part : comp) {
                std::vector<std::vector<PlanarTree>> next;
                for (const auto& p : partial)
                    for (const auto& sub : memo[part]) {
                        auto q = p;
                        q.push_back(sub);
                        next.push_back(std::move(q));
                    }
                partial = std::move(next);
            }
            for (auto& kids : partial)
                memo[n].push_back(node(std::move(kids)));
        }
    }
    return memo[leaves];
}

std::vector<PlanarTree> one_step_refinements(const PlanarTree& t) {
    std::vector<PlanarTree> out;
    if (t.is_leaf())
        return out;
    const auto& c = t.children;
    const std::size_t k = c.size();
    for (std::size_t len = 2; len < k; ++len)
        for (std::size_t i = 0; i + len <= k; ++i) {
            std::vector<PlanarTree> kids(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(i));
            kids.push_back(node(std::vector<PlanarTree>(c.begin() + static_cast<std::ptrdiff_t>(i),
                                                        c.begin() + static_cast<std::ptrdiff_t>(i + len))));
            kids.insert(kids.end(), c.begin() + static_cast<std::ptrdiff_t>(i + len), c.end());
            out.push_back(node(std::move(kids)));
        }
    for (std::size_t j = 0; j < k; ++j)
        for (auto& r : one_step_refinements(c[j])) {
            PlanarTree copy = t;
            copy.children[j] = std::move(r);
            out.push_back(std::move(copy));
        }
    return out;
}

PlanarTree left_comb_refinement(const PlanarTree& t) {
    if (t.is_leaf())
        return t;
    std::vector<PlanarTree> kids;
    for (const auto& c : t.children)
        kids.push_back(left_comb_refinement(c));
    PlanarTree acc = node({kids[0], kids[1]});
    for (std::size_t i = 2; i < kids.size(); ++i)
        acc = node({std::move(acc), kids[i]});
    return acc;
}

PlanarTree right_comb_refinement(const PlanarTree& t) {
    if (t.is_leaf())
        return t;
    std::vector<PlanarTree> kids;
    for (const auto& c : t.children)
        kids.push_back(right_comb_refinement(c));
    const std::size_t k = kids.size();
    PlanarTree acc = node({kids[k - 2], kids[k - 1]});
    for (std::size_t i = k - 2; i-- > 0;)
        acc = node({kids[i], std::move(acc)});
    return acc;
}

FaceComplex freehedron_complex(int n, int bound) {
    const auto faces = enumerate_faces(n, bound);
    FaceComplex::Builder b("freehedron", n);
    std::map<Triple, FaceId> id;
    for (const auto& t : faces)
        id.emplace(t, b.add_face(dimension(t), to_text(t), t));
    for (const auto& t : faces) {
        if (dimension(t) == 0)
            continue;
        const auto bd = boundary(t);
        for (const auto& s : bd)
            b.add_cover(id.at(s), id.at(t));
        if (dimension(t) == 1) {
            if (bd.size() != 2)
                throw DomainError("freehedron edge " + to_text(t) + " does not have two vertices");
            auto w0 = word_of(bd[0]), w1 = word_of(bd[1]);
            if (word_leq(w0, w1))
                b.add_arc(id.at(bd[0]), id.at(bd[1]));
            else if (word_leq(w1, w0))
                b.add_arc(id.at(bd[1]), id.at(bd[0]));
            else
                throw DomainError("freehedron edge " + to_text(t) + " joins incomparable vertices");
        }
    }
    return std::move(b).build();
}

FaceId distinguished_facet(const FaceComplex& freehedron) {
    const int n = freehedron.size_parameter();
    if (freehedron.family() != "freehedron" || n < 1)
        throw DomainError("distinguished facet is defined for freehedra F^n, n >= 1");
    Triple x;
    x.right.emplace_back(std::vector<int>(n, 1));
    for (FaceId f = 0; f < freehedron.size(); ++f)
        if (freehedron.face(f).triple == x)
            return f;
    throw DomainError("distinguished facet not found");
}

FaceComplex cube_complex(int d) {
    if (d < 0)
        throw DomainError("cube dimension must be nonnegative");
    if (d > kMaxCubeDim)
        throw ResourceError("cube dimension " + std::to_string(d) + " exceeds bound " +
                            std::to_string(kMaxCubeDim));
    std::vector<std::string> words{""};
    for (int i = 0; i < d; ++i) {
        std::vector<std::string> next;
        for (const auto& w : words)
            for (char c : {'0', '1', '*'})
                next.push_back(w + c);
        words = std::move(next);
    }
    auto stars = [](const std::string& w) { return std::count(w.begin(), w.end(), '*'); };
    std::sort(words.begin(), words.end(), [&](const std::string& a, const std::string& b) {
        auto sa = stars(a), sb = stars(b);
        return sa != sb ? sa < sb : a < b;
    });
    FaceComplex::Builder b("cube", d);
    std::map<std::string, FaceId> id;
    for (const auto& w : words)
        id.emplace(w, b.add_face(static_cast<int>(stars(w)), w.empty() ? "()" : w));
    for (const auto& w : words)
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] != '*')
                continue;
            auto lo = w, hi = w;
            lo[i] = '0';
            hi[i] = '1';
            b.add_cover(id.at(lo), id.at(w));
            b.add_cover(id.at(hi), id.at(w));
            if (stars(w) == 1)
                b.add_arc(id.at(lo), id.at(hi));
        }
    return std::move(b).build();
}

FaceComplex simplex_complex(int d) {
    if (d < 0)
        throw DomainError("simplex dimension must be nonnegative");
    if (d > kMaxSimplexDim)
        throw ResourceError("simplex dimension " + std::to_string(d) + " exceeds bound " +
                            std::to_string(kMaxSimplexDim));
    const std::uint32_t n = static_cast<std::uint32_t>(d) + 1;
    std::vector<std::vector<int>> subsets;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (std::uint32_t i = 0; i < n; ++i)
            if (mask & (1u << i))
                s.push_back(static_cast<int>(i));
        subsets.push_back(std::move(s));
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    auto label = [](const std::vector<int>& s) {
        std::string out = "{";
        for (std::size_t i = 0; i < s.size(); ++i)
            out += (i ? "," : "") + std::to_string(s[i]);
        return out + "}";
    };
    FaceComplex::Builder b("simplex", d);
    std::map<std::vector<int>, FaceId> id;
    for (const auto& s : subsets)
        id.emplace(s, b.add_face(static_cast<int>(s.size()) - 1, label(s)));
    for (const auto& s : subsets) {
        if (s.size() < 2)
            continue;
        for (std::size_t i = 0; i < s.size(); ++i) {
            auto sub = s;
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
            b.add_cover(id.at(sub), id.at(s));
        }
        if (s.size() == 2)
            b.add_arc(id.at({s[0]}), id.at({s[1]}));
    }
    return std::move(b).build();
}

FaceComplex associahedron_complex(int leaves, int bound) {
    if (leaves < 3)
        throw DomainError("associahedron needs at least three leaves");
    if (leaves > bound)
        throw ResourceError("associahedron leaf count " + std::to_string(leaves) +
                            " exceeds bound " + std::to_string(bound));
    auto trees = enumerate_planar_trees(leaves);
    auto dim_of = [&](const PlanarTree& t) { return leaves - 1 - t.internal_nodes(); };
    std::vector<std::pair<std::pair<int, std::string>, PlanarTree>> keyed;
    for (auto& t : trees)
        keyed.push_back({{dim_of(t), to_text(t)}, std::move(t)});
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    FaceComplex::Builder b("associahedron", leaves);
    std::map<std::string, FaceId> id;
    for (const auto& [key, t] : keyed)
        id.emplace(key.second, b.add_face(key.first, key.second));
    for (const auto& [key, t] : keyed) {
        if (key.first == 0)
            continue;
        for (const auto& r : one_step_refinements(t))
            b.add_cover(id.at(to_text(r)), id.at(key.second));
        if (key.first == 1)
            b.add_arc(id.at(to_text(resolve_ternary(t, true))),
                      id.at(to_text(resolve_ternary(t, false))));
    }
    return std::move(b).build();
}

FaceComplex make_family(std::string_view name, int n, const FamilyBounds& bounds) {
    if (name == "freehedron")
        return freehedron_complex(n, bounds.freehedron);
    if (name == "cube")
        return cube_complex(n);
    if (name == "simplex")
        return simplex_complex(n);
    if (name == "associahedron")
        return associahedron_complex(n, bounds.associahedron);
    throw DomainError("unknown family '" + std::string(name) + "'");
}

} // namespace freehedra
