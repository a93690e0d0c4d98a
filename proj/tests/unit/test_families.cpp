#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>

#include "freehedra/errors.hpp"
#include "freehedra/families.hpp"
#include "freehedra/shortness.hpp"
#include "freehedra/word.hpp"
#include "oracles.hpp"

using namespace freehedra;

namespace {

std::vector<std::size_t> f_vector(const FaceComplex& c) {
    std::vector<std::size_t> f(c.dimension() + 1, 0);
    for (FaceId i = 0; i < c.size(); ++i)
        ++f[c.dim(i)];
    return f;
}

PlanarTree P(const char* text) { return parse_planar_tree(text); }

// Every binary tree reachable by repeatedly refining t.
std::vector<PlanarTree> binary_refinements(const PlanarTree& t) {
    if (t.is_binary())
        return {t};
    std::vector<PlanarTree> out;
    for (const auto& r : one_step_refinements(t))
        for (auto& b : binary_refinements(r))
            out.push_back(std::move(b));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

TEST_CASE("freehedron_complex") {
    const auto c2 = freehedron_complex(2);
    CHECK(c2.size() == 11);
    CHECK(c2.vertices().size() == 5);
    CHECK(c2.is_directed());
    CHECK(word_of(*c2.face(c2.min_vertex(c2.top())).triple).str() == "00");
    CHECK(word_of(*c2.face(c2.max_vertex(c2.top())).triple).str() == "22");

    const auto c1 = freehedron_complex(1);
    CHECK(f_vector(c1) == std::vector<std::size_t>{2, 1});
    CHECK(c1.skeleton().size() == 1);
    CHECK(word_of(*c1.face(c1.skeleton()[0].tail).triple).str() == "0");

    const auto c3 = freehedron_complex(3);
    CHECK(f_vector(c3) == std::vector<std::size_t>{12, 18, 8, 1});

    CHECK_THROWS_AS(freehedron_complex(9), ResourceError);
    CHECK_THROWS_AS(freehedron_complex(5, 4), ResourceError);
}

TEST_CASE("freehedron vertex count formula") {
    CHECK(freehedron_complex(1).vertices().size() == 2);
    for (int n = 2; n <= 8; ++n)
        CHECK(freehedron_complex(n).vertices().size() ==
              (std::size_t{1} << (n - 2)) * static_cast<std::size_t>(n + 3));
}

TEST_CASE("distinguished facet avoids the letter 0") {
    for (int n = 2; n <= 6; ++n) {
        const auto c = freehedron_complex(n);
        const FaceId x = distinguished_facet(c);
        CHECK(c.dim(x) == n - 1);
        const auto& t = *c.face(x).triple;
        CHECK(t.left.empty());
        CHECK_FALSE(t.middle);
        CHECK(t.right == Forest{Tree(std::vector<int>(n, 1))});
        const auto vs = c.vertices_of(x);
        CHECK(vs.size() == (std::size_t{1} << (n - 1)));
        for (FaceId v : vs)
            CHECK(word_of(*c.face(v).triple).str().find('0') == std::string::npos);
        // It is the only facet with that property.
        for (FaceId f = 0; f < c.size(); ++f) {
            if (f == x || c.dim(f) != n - 1)
                continue;
            const auto ws = c.vertices_of(f);
            CHECK(std::any_of(ws.begin(), ws.end(), [&](FaceId v) {
                return word_of(*c.face(v).triple).str().find('0') != std::string::npos;
            }));
        }
    }
    CHECK_THROWS_AS(distinguished_facet(freehedron_complex(0)), DomainError);
}

TEST_CASE("cube_complex") {
    CHECK(cube_complex(1).size() == 3);
    CHECK(cube_complex(2).size() == 9);
    CHECK(cube_complex(3).size() == 27);
    CHECK(is_short(cube_complex(2)).is_short);
    const auto c = cube_complex(3);
    CHECK(c.face(c.min_vertex(c.top())).label == "000");
    CHECK(c.face(c.max_vertex(c.top())).label == "111");
    for (FaceId f = 0; f < c.size(); ++f) {
        std::string lo = c.face(f).label, hi = lo;
        std::replace(lo.begin(), lo.end(), '*', '0');
        std::replace(hi.begin(), hi.end(), '*', '1');
        CHECK(c.face(c.min_vertex(f)).label == lo);
        CHECK(c.face(c.max_vertex(f)).label == hi);
    }
    for (FaceId u : c.vertices())
        for (FaceId v : c.vertices()) {
            const auto& a = c.face(u).label;
            const auto& b = c.face(v).label;
            bool leq = true;
            for (std::size_t i = 0; i < a.size(); ++i)
                leq = leq && a[i] <= b[i];
            CHECK(c.vertex_leq(u, v) == leq);
        }
    CHECK_THROWS_AS(cube_complex(9), ResourceError);
}

TEST_CASE("simplex_complex") {
    CHECK(simplex_complex(2).size() == 7);
    CHECK(is_short(simplex_complex(3)).is_short);
    const auto c = simplex_complex(3);
    CHECK(c.face(c.min_vertex(c.top())).label == "{0}");
    CHECK(c.face(c.max_vertex(c.top())).label == "{3}");
    for (std::size_t i = 0; i < c.vertices().size(); ++i)
        for (std::size_t j = 0; j < c.vertices().size(); ++j)
            CHECK(c.vertex_leq(c.vertices()[i], c.vertices()[j]) == (i <= j));
    CHECK_THROWS_AS(simplex_complex(10), ResourceError);
}

TEST_CASE("cubes and simplices are short up to dimension five") {
    for (int d = 0; d <= 5; ++d) {
        CHECK(is_short(cube_complex(d)).is_short);
        CHECK(is_short(simplex_complex(d)).is_short);
    }
}

TEST_CASE("planar tree text and refinements") {
    CHECK(to_text(P("((xx)x)")) == "((xx)x)");
    CHECK(P("(xxx)").leaves() == 3);
    CHECK(P("(xxx)").internal_nodes() == 1);
    CHECK(P("((xx)x)").is_binary());
    CHECK_THROWS_AS(P("(x)"), EncodingError);
    CHECK_THROWS_AS(P("((xx)"), EncodingError);
    CHECK_THROWS_AS(P("(xx)x"), EncodingError);
    CHECK(one_step_refinements(P("(xxx)")).size() == 2);
    CHECK(to_text(left_comb_refinement(P("(xxxx)"))) == "(((xx)x)x)");
    CHECK(to_text(right_comb_refinement(P("(xxxx)"))) == "(x(x(xx)))");
    for (int L = 1; L <= 7; ++L)
        CHECK(enumerate_planar_trees(L).size() == oracle::planar_tree_count(L));
}

TEST_CASE("associahedron_complex") {
    const auto k3 = associahedron_complex(3);
    CHECK(f_vector(k3) == std::vector<std::size_t>{2, 1});
    CHECK(k3.face(k3.min_vertex(k3.top())).label == "((xx)x)");
    CHECK(k3.face(k3.max_vertex(k3.top())).label == "(x(xx))");

    const auto k4 = associahedron_complex(4);
    CHECK(f_vector(k4) == std::vector<std::size_t>{5, 5, 1});
    CHECK(k4.is_directed());
    // Two edge paths from min to max, of lengths 2 and 3.
    std::map<FaceId, std::vector<FaceId>> out;
    for (const auto& a : k4.skeleton())
        out[a.tail].push_back(a.head);
    std::vector<std::size_t> lengths;
    std::function<void(FaceId, std::size_t)> walk = [&](FaceId v, std::size_t len) {
        if (v == k4.max_vertex(k4.top())) {
            lengths.push_back(len);
            return;
        }
        for (FaceId w : out[v])
            walk(w, len + 1);
    };
    walk(k4.min_vertex(k4.top()), 0);
    std::sort(lengths.begin(), lengths.end());
    CHECK(lengths == std::vector<std::size_t>{2, 3});

    CHECK(f_vector(associahedron_complex(5)) == std::vector<std::size_t>{14, 21, 9, 1});
    CHECK(associahedron_complex(6).size() == 197);
    CHECK(associahedron_complex(7).size() == 903);
    CHECK_THROWS_AS(associahedron_complex(2), DomainError);
    CHECK_THROWS_AS(associahedron_complex(8), ResourceError);
    CHECK_THROWS_AS(associahedron_complex(7, 6), ResourceError);
}

TEST_CASE("associahedron vertex order is the Tamari order") {
    for (int L = 3; L <= 6; ++L) {
        const auto c = associahedron_complex(L);
        const auto up = oracle::tamari_up_sets(L);
        REQUIRE(up.size() == c.vertices().size());
        for (FaceId u : c.vertices())
            for (FaceId v : c.vertices())
                CHECK(c.vertex_leq(u, v) == up.at(c.face(u).label).count(c.face(v).label) > 0);
    }
}

TEST_CASE("associahedron min/max are the comb refinements of each face") {
    for (int L = 3; L <= 6; ++L) {
        const auto c = associahedron_complex(L);
        for (FaceId f = 0; f < c.size(); ++f) {
            const auto t = P(c.face(f).label.c_str());
            const auto refinements = binary_refinements(t);
            CHECK(c.vertices_of(f).size() == refinements.size());
            std::vector<FaceId> ids;
            for (const auto& b : refinements)
                for (FaceId v : c.vertices_of(f))
                    if (c.face(v).label == to_text(b))
                        ids.push_back(v);
            REQUIRE(ids.size() == refinements.size());
            const auto lo = std::find_if(ids.begin(), ids.end(), [&](FaceId a) {
                return std::all_of(ids.begin(), ids.end(), [&](FaceId b) { return c.vertex_leq(a, b); });
            });
            const auto hi = std::find_if(ids.begin(), ids.end(), [&](FaceId a) {
                return std::all_of(ids.begin(), ids.end(), [&](FaceId b) { return c.vertex_leq(b, a); });
            });
            REQUIRE(lo != ids.end());
            REQUIRE(hi != ids.end());
            CHECK(c.face(*lo).label == to_text(left_comb_refinement(t)));
            CHECK(c.face(*hi).label == to_text(right_comb_refinement(t)));
        }
    }
}

TEST_CASE("every family is directed within bounds") {
    for (int n = 0; n <= 6; ++n)
        CHECK(freehedron_complex(n).is_directed());
    for (int d = 0; d <= 5; ++d) {
        CHECK(cube_complex(d).is_directed());
        CHECK(simplex_complex(d).is_directed());
    }
    for (int L = 3; L <= 7; ++L)
        CHECK(associahedron_complex(L).is_directed());
}

TEST_CASE("associahedron shortness by leaf count") {
    // The first failure is at six leaves; see the naive cross-check in the
    // complex tests for L <= 5.
    CHECK(is_short(associahedron_complex(4)).is_short);
    const auto k6 = is_short(associahedron_complex(6));
    CHECK_FALSE(k6.is_short);
    CHECK(*k6.witness_excess == 0);
    CHECK_FALSE(is_short(associahedron_complex(7)).is_short);
}

TEST_CASE("make_family") {
    CHECK(make_family("freehedron", 2).size() == 11);
    CHECK(make_family("cube", 2).size() == 9);
    CHECK(make_family("simplex", 2).size() == 7);
    CHECK(make_family("associahedron", 4).size() == 11);
    CHECK_THROWS_AS(make_family("permutohedron", 3), DomainError);
    FamilyBounds tight;
    tight.freehedron = 2;
    tight.associahedron = 4;
    CHECK_THROWS_AS(make_family("freehedron", 3, tight), ResourceError);
    CHECK_THROWS_AS(make_family("associahedron", 5, tight), ResourceError);
}
