// One PASS/FAIL line per acceptance criterion. With arguments, runs only the
// listed criteria. Exit status is nonzero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "freehedra/errors.hpp"
#include "freehedra/io.hpp"
#include "oracles.hpp"

using namespace freehedra;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
};

void fail(Outcome& o, const std::string& why) {
    if (o.pass)
        o.detail.clear();
    o.pass = false;
    if (!o.detail.empty())
        o.detail += "; ";
    o.detail += why;
}

std::size_t vertex_formula(int n) {
    return n == 1 ? 2 : (std::size_t{1} << (n - 2)) * static_cast<std::size_t>(n + 3);
}

Outcome vertex_counts() {
    Outcome o;
    std::ostringstream d;
    for (int n = 1; n <= 8; ++n) {
        const auto c = freehedron_complex(n);
        const std::size_t got = c.vertices().size();
        if (got != vertex_formula(n) || enumerate_words(n).size() != vertex_formula(n))
            fail(o, "n=" + std::to_string(n) + " has " + std::to_string(got) + " vertices");
        d << (n > 1 ? "," : "") << got;
    }
    if (o.pass)
        o.detail = "vertices n=1..8: " + d.str();
    return o;
}

Outcome word_bijection() {
    Outcome o;
    std::size_t total = 0;
    for (int n = 1; n <= 7; ++n) {
        std::size_t vertices = 0;
        for (const auto& t : enumerate_faces(n)) {
            if (!is_vertex(t))
                continue;
            ++vertices;
            if (label_of(word_of(t)) != t)
                fail(o, "label_of(word_of) differs at " + to_text(t));
        }
        for (const auto& w : enumerate_words(n))
            if (word_of(label_of(w)) != w)
                fail(o, "word_of(label_of) differs at " + w.str());
        if (vertices != enumerate_words(n).size())
            fail(o, "vertex and word counts differ at n=" + std::to_string(n));
        total += vertices;
    }
    if (o.pass)
        o.detail = std::to_string(total) + " vertices round-tripped, n<=7";
    return o;
}

Outcome face_counts() {
    Outcome o;
    const std::vector<std::uint64_t> expected{1, 3, 11, 39, 135, 459, 1539};
    std::ostringstream d;
    for (int n = 0; n <= 6; ++n) {
        const auto faces = enumerate_faces(n);
        long chi = 0;
        for (const auto& t : faces)
            chi += dimension(t) % 2 == 0 ? 1 : -1;
        if (faces.size() != count_faces(n) || faces.size() != expected[n])
            fail(o, "n=" + std::to_string(n) + " enumerates " + std::to_string(faces.size()) +
                        " faces, DP " + std::to_string(count_faces(n)));
        if (n >= 1 && chi != 1)
            fail(o, "Euler sum " + std::to_string(chi) + " at n=" + std::to_string(n));
        if (n >= 2)
            d << (n > 2 ? "," : "") << faces.size();
    }
    if (o.pass)
        o.detail = "faces n=2..6: " + d.str() + ", Euler sum 1";
    return o;
}

Outcome min_max_oracle() {
    Outcome o;
    std::size_t checked = 0;
    for (int n = 1; n <= 5; ++n)
        for (const auto& t : enumerate_faces(n)) {
            std::vector<VertexWord> ws;
            for (const auto& v : vertex_set(t))
                ws.push_back(word_of(v));
            std::vector<VertexWord> lo, hi;
            for (const auto& a : ws) {
                if (std::all_of(ws.begin(), ws.end(), [&](const auto& b) { return word_leq(a, b); }))
                    lo.push_back(a);
                if (std::all_of(ws.begin(), ws.end(), [&](const auto& b) { return word_leq(b, a); }))
                    hi.push_back(a);
            }
            if (lo.size() != 1 || hi.size() != 1 || lo[0] != word_of(min_vertex(t)) ||
                hi[0] != word_of(max_vertex(t)))
                fail(o, "min/max mismatch at " + to_text(t));
            ++checked;
        }
    if (o.pass)
        o.detail = std::to_string(checked) + " faces, n<=5";
    return o;
}

Outcome directedness() {
    Outcome o;
    std::size_t complexes = 0;
    auto check = [&](const FaceComplex& c) {
        ++complexes;
        if (!validate_directed(c).valid)
            fail(o, c.family() + " " + std::to_string(c.size_parameter()) + " not directed");
    };
    for (int n = 0; n <= 6; ++n)
        check(freehedron_complex(n));
    for (int d = 0; d <= 5; ++d) {
        check(cube_complex(d));
        check(simplex_complex(d));
    }
    for (int L = 3; L <= 6; ++L)
        check(associahedron_complex(L));
    if (o.pass)
        o.detail = std::to_string(complexes) + " complexes validated";
    return o;
}

Outcome main_theorem() {
    Outcome o;
    std::ostringstream d;
    for (int n = 1; n <= 5; ++n) {
        const auto c = freehedron_complex(n);
        const auto cert = is_short(c);
        if (!cert.is_short)
            fail(o, "F^" + std::to_string(n) + " has witness of excess " +
                        std::to_string(*cert.witness_excess));
        if (cert.faces.size() != c.size())
            fail(o, "certificate of F^" + std::to_string(n) + " skips faces");
        d << (n > 1 ? ", " : "") << "n=" << n << ": " << cert.faces.size() << " faces/"
          << cert.total_chains << " chains";
    }
    if (o.pass)
        o.detail = "short; " + d.str();
    return o;
}

Outcome negative_control() {
    Outcome o;
    const auto c = associahedron_complex(5);
    const auto cert = is_short(c);
    const oracle::Reach r(c);
    std::optional<int> naive_min;
    for (FaceId f = 0; f < c.size(); ++f) {
        const auto n = oracle::naive_chains(c, r, f);
        if (n.min_excess && (!naive_min || *n.min_excess < *naive_min))
            naive_min = n.min_excess;
    }
    if (cert.is_short) {
        const auto k6 = is_short(associahedron_complex(6));
        fail(o, "is_short(associahedron L=5) = true; naive enumerator agrees (least nontrivial "
                "excess " + std::to_string(naive_min.value_or(0)) +
                    "); first failure at L=6: " +
                    (k6.is_short ? std::string("none")
                                 : "witness of " + std::to_string(k6.witness->faces.size()) +
                                       " faces, excess " + std::to_string(*k6.witness_excess)));
        return o;
    }
    const auto& w = *cert.witness;
    bool ordered = true;
    int weight = 0;
    for (std::size_t i = 0; i < w.faces.size(); ++i) {
        if (i + 1 < w.faces.size())
            ordered = ordered && r.face_leq(w.faces[i], w.faces[i + 1]);
        weight += c.dim(w.faces[i]) - 1;
    }
    const int e = c.dim(w.ambient) - 1 - weight;
    if (!ordered || e > 0)
        fail(o, "witness does not re-check");
    else
        o.detail = "witness of excess " + std::to_string(e) + " re-checked";
    return o;
}

Outcome supdim() {
    Outcome o;
    std::size_t faces = 0;
    for (int n = 1; n <= 6; ++n) {
        const auto c = freehedron_complex(n);
        const auto rep = check_supdim(c, freehedron_D(c));
        if (!rep.sup_dimensional())
            fail(o, "F^" + std::to_string(n) + ": " + rep.violations.front());
        for (const auto& s : rep.slack) {
            const auto& t = *c.face(s.face).triple;
            if (s.d_min - s.d_max != mid_branch_spaces(t) ||
                s.dim != mid_branch_spaces(t) + (t.middle ? 1 : 0))
                fail(o, "equality fails at " + to_text(t));
            ++faces;
        }
    }
    if (o.pass)
        o.detail = std::to_string(faces) + " faces, n<=6";
    return o;
}

Outcome zero_excess_audit() {
    Outcome o;
    std::ostringstream d;
    for (int n = 1; n <= 3; ++n) {
        const auto c = freehedron_complex(n);
        const auto rep = audit_connected_chains(c, freehedron_D(c));
        if (!rep.exhaustive)
            fail(o, "n=" + std::to_string(n) + " not exhaustive");
        if (!rep.pass())
            fail(o, "n=" + std::to_string(n) + ": " + std::to_string(rep.failures) +
                        " chains without positive slack");
        d << "n=" << n << ": " << rep.examined << " chains, ";
    }
    const auto c4 = freehedron_complex(4);
    AuditOptions sampled;
    sampled.max_vertices = 0;
    const auto rep = audit_connected_chains(c4, freehedron_D(c4), sampled);
    if (!rep.pass())
        fail(o, "n=4 sample: " + std::to_string(rep.failures) + " chains without positive slack");
    d << "n=4: " << rep.examined << " sampled of " << rep.total_chains;
    if (o.pass)
        o.detail = d.str();
    return o;
}

Outcome operad_layer() {
    Outcome o;
    std::vector<FaceComplex> cs;
    for (int n = 0; n <= 4; ++n)
        cs.push_back(freehedron_complex(n));
    for (int d = 0; d <= 4; ++d) {
        cs.push_back(cube_complex(d));
        cs.push_back(simplex_complex(d));
    }
    for (int L = 3; L <= 6; ++L)
        cs.push_back(associahedron_complex(L));
    for (const auto& c : cs)
        if (is_augmented(c) != is_short(c).is_short)
            fail(o, "is_augmented differs from is_short on " + c.family() + " " +
                        std::to_string(c.size_parameter()));

    const auto iv = freehedron_complex(1);
    const FaceId a = iv.min_vertex(iv.top()), b = iv.max_vertex(iv.top()), e = iv.top();
    const auto img = hilbert_image(iv, e, 2).terms;
    auto mono = [](int k) { return LaurentPoly::monomial(k); };
    const bool interval_ok = img.terms().size() == 8 && img.coefficient({e}) == mono(0) &&
                             img.coefficient({a}) == mono(1) && img.coefficient({b}) == mono(1) &&
                             img.coefficient({a, e}) == mono(1) && img.coefficient({e, b}) == mono(1) &&
                             img.coefficient({a, b}) == mono(2) && img.coefficient({a, a}) == mono(2) &&
                             img.coefficient({b, b}) == mono(2);
    if (!interval_ok)
        fail(o, "interval image at L=2 differs from the hand-derived 8 terms");

    std::size_t residual_terms = 0;
    for (int n = 0; n <= 2; ++n) {
        const auto c = freehedron_complex(n);
        for (std::size_t L = 1; L <= 4; ++L)
            for (auto policy : {RepeatPolicy::include, RepeatPolicy::exclude})
                for (const auto& r : selfduality_residual(c, L, policy))
                    residual_terms += r.terms.terms().size();
    }
    if (o.pass)
        o.detail = std::to_string(cs.size()) + " complexes agree, interval image matches, " +
                   "residual reported (" + std::to_string(residual_terms) + " terms)";
    return o;
}

Outcome determinism() {
    Outcome o;
    const std::vector<std::vector<std::string>> commands{
        {"faces", "--family", "freehedron", "--n", "3", "--format", "json"},
        {"faces", "--family", "associahedron", "--n", "5"},
        {"check-short", "--family", "freehedron", "--n", "4"},
        {"check-short", "--family", "associahedron", "--n", "6", "--format", "text"},
        {"verify-supdim", "--n", "4"},
        {"verify-supdim", "--n", "3", "--format", "csv"},
        {"hilbert", "--n", "2", "--max-len", "3", "--format", "json"},
        {"hilbert", "--family", "cube", "--n", "2", "--max-len", "3", "--no-repeats"},
        {"residual", "--n", "2", "--max-len", "3"},
        {"lattice", "--n", "3", "--format", "dot"},
        {"lattice", "--n", "3", "--graph", "skeleton"},
        {"lattice", "--family", "simplex", "--n", "3", "--format", "json"},
        {"audit-chains", "--n", "4"},
        {"audit-chains", "--n", "3", "--format", "text"},
    };
    for (const auto& args : commands) {
        std::ostringstream a, b, ea, eb;
        const int ca = cli::run(args, a, ea);
        const int cb = cli::run(args, b, eb);
        if (ca != cb || a.str() != b.str() || a.str().empty()) {
            std::string line;
            for (const auto& s : args)
                line += (line.empty() ? "" : " ") + s;
            fail(o, "output differs: " + line);
        }
    }
    if (o.pass)
        o.detail = std::to_string(commands.size()) + " commands byte-identical across two runs";
    return o;
}

} // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all{
        {1, "vertex-count formula", 5, vertex_counts},
        {2, "word bijection", 10, word_bijection},
        {3, "face counts and Euler sum", 30, face_counts},
        {4, "min/max oracle", 60, min_max_oracle},
        {5, "directedness", 60, directedness},
        {6, "freehedra are short, n<=5", 300, main_theorem},
        {7, "associahedron L=5 not short", 60, negative_control},
        {8, "sup-dimensionality", 60, supdim},
        {9, "zero-excess audit", 60, zero_excess_audit},
        {10, "operad layer", 60, operad_layer},
        {11, "CLI determinism", 60, determinism},
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i)
        only.insert(std::stoi(argv[i]));

    int failed = 0;
    for (const auto& c : all) {
        if (!only.empty() && !only.count(c.id))
            continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_seconds)
            fail(o, "over time limit");
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", secs, c.limit_seconds);
        std::cout << "criterion " << c.id << ' ' << (o.pass ? "PASS" : "FAIL") << "  " << c.name
                  << "  (" << o.detail << "; " << timing << ")\n";
        failed += o.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
