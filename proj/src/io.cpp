#include "freehedra/io.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <tuple>

#include "freehedra/errors.hpp"

namespace freehedra {

namespace {

Json tree_to_json(const Tree& t) {
    return Json(t.branches());
}

Tree tree_from_json(const Json& j) {
    if (!j.is_array())
        throw EncodingError("tree must be a JSON array of integers");
    std::vector<int> b;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw EncodingError("branch leaf count must be an integer");
        b.push_back(x.get<int>());
    }
    try {
        return Tree(std::move(b));
    } catch (const DomainError& e) {
        throw EncodingError(e.what());
    }
}

Json forest_to_json(const Forest& f) {
    Json j = Json::array();
    for (const auto& t : f)
        j.push_back(tree_to_json(t));
    return j;
}

Forest forest_from_json(const Json& j) {
    if (!j.is_array())
        throw EncodingError("forest must be a JSON array of trees");
    Forest f;
    for (const auto& t : j)
        f.push_back(tree_from_json(t));
    return f;
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw EncodingError(std::string("missing JSON field '") + key + "'");
    return j.at(key);
}

} // namespace

Json triple_to_json(const Triple& t) {
    Json j;
    j["left"] = forest_to_json(t.left);
    j["middle"] = t.middle ? tree_to_json(*t.middle) : Json(nullptr);
    j["right"] = forest_to_json(t.right);
    return j;
}

Triple triple_from_json(const Json& j) {
    Triple t;
    t.left = forest_from_json(field(j, "left"));
    const auto& m = field(j, "middle");
    if (!m.is_null())
        t.middle = tree_from_json(m);
    t.right = forest_from_json(field(j, "right"));
    return t;
}

Json vertex_to_json(const Triple& vertex) {
    Json j;
    j["word"] = word_of(vertex).str();
    j["triple"] = triple_to_json(vertex);
    return j;
}

Json face_to_json(const FaceComplex& c, FaceId f) {
    const auto& rec = c.face(f);
    Json j;
    j["id"] = f;
    j["dim"] = rec.dim;
    j["label"] = rec.label;
    const FaceId lo = c.min_vertex(f), hi = c.max_vertex(f);
    j["min"] = lo;
    j["max"] = hi;
    if (rec.triple) {
        j["triple"] = triple_to_json(*rec.triple);
        if (rec.dim == 0)
            j["word"] = word_of(*rec.triple).str();
        j["min_word"] = word_of(*c.face(lo).triple).str();
        j["max_word"] = word_of(*c.face(hi).triple).str();
    } else {
        j["min_label"] = c.face(lo).label;
        j["max_label"] = c.face(hi).label;
    }
    return j;
}

Json complex_to_json(const FaceComplex& c) {
    Json j;
    j["family"] = c.family();
    j["n"] = c.size_parameter();
    Json faces = Json::array();
    for (FaceId f = 0; f < c.size(); ++f) {
        const auto& rec = c.face(f);
        Json r;
        r["id"] = f;
        r["dim"] = rec.dim;
        r["label"] = rec.label;
        if (rec.triple)
            r["triple"] = triple_to_json(*rec.triple);
        faces.push_back(std::move(r));
    }
    j["faces"] = std::move(faces);
    auto covers = c.covers();
    std::sort(covers.begin(), covers.end());
    Json inc = Json::array();
    for (auto [sub, super] : covers)
        inc.push_back({sub, super});
    j["incidence"] = std::move(inc);
    Json sk = Json::array();
    for (const auto& a : c.skeleton())
        sk.push_back({a.tail, a.head});
    j["skeleton"] = std::move(sk);
    j["top"] = c.top();
    return j;
}

FaceComplex complex_from_json(const Json& j) {
    try {
        FaceComplex::Builder b(field(j, "family").get<std::string>(), field(j, "n").get<int>());
        const auto& faces = field(j, "faces");
        if (!faces.is_array())
            throw EncodingError("'faces' must be an array");
        for (std::size_t i = 0; i < faces.size(); ++i) {
            const auto& r = faces[i];
            if (field(r, "id").get<std::size_t>() != i)
                throw EncodingError("face ids must be 0..N-1 in order");
            std::optional<Triple> t;
            if (r.contains("triple"))
                t = triple_from_json(r.at("triple"));
            std::string label = r.contains("label") ? r.at("label").get<std::string>() : std::to_string(i);
            b.add_face(field(r, "dim").get<int>(), std::move(label), std::move(t));
        }
        for (const auto& p : field(j, "incidence"))
            b.add_cover(p.at(0).get<FaceId>(), p.at(1).get<FaceId>());
        for (const auto& p : field(j, "skeleton"))
            b.add_arc(p.at(0).get<FaceId>(), p.at(1).get<FaceId>());
        auto c = std::move(b).build();
        if (j.contains("top") && j.at("top").get<FaceId>() != c.top())
            throw EncodingError("declared top does not match the face of largest dimension");
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw EncodingError(std::string("face complex JSON: ") + e.what());
    }
}

FaceComplex family_from_json(const Json& j, const FamilyBounds& bounds) {
    try {
        return make_family(field(j, "family").get<std::string>(), field(j, "n").get<int>(), bounds);
    } catch (const nlohmann::json::exception& e) {
        throw EncodingError(std::string("family JSON: ") + e.what());
    }
}

Json chain_to_json(const FaceComplex& c, const Chain& ch) {
    Json j;
    j["ambient"] = face_to_json(c, ch.ambient);
    Json faces = Json::array();
    for (FaceId f : ch.faces)
        faces.push_back(face_to_json(c, f));
    j["faces"] = std::move(faces);
    j["excess"] = excess(c, ch);
    return j;
}

Json certificate_to_json(const FaceComplex& c, const ShortnessCertificate& cert) {
    Json j;
    j["family"] = c.family();
    j["n"] = c.size_parameter();
    j["short"] = cert.is_short;
    j["faces_examined"] = cert.faces.size();
    j["chains_covered"] = cert.total_chains;
    Json per = Json::array();
    for (const auto& f : cert.faces) {
        Json r;
        r["face"] = f.face;
        r["dim"] = f.dim;
        r["vertices"] = f.vertices;
        r["members"] = f.members;
        r["chains"] = f.chains;
        r["chains_saturated"] = f.saturated;
        if (auto e = f.min_excess())
            r["min_excess"] = *e;
        else
            r["min_excess"] = nullptr;
        per.push_back(std::move(r));
    }
    j["per_face"] = std::move(per);
    if (cert.witness)
        j["witness"] = chain_to_json(c, *cert.witness);
    else
        j["witness"] = nullptr;
    return j;
}

Json supdim_to_json(const FaceComplex& c, const SupDimReport& rep) {
    Json j;
    j["family"] = c.family();
    j["n"] = c.size_parameter();
    j["sup_dimensional"] = rep.sup_dimensional();
    j["boundary_ok"] = rep.boundary_ok;
    std::map<int, std::size_t> hist;
    Json rows = Json::array();
    for (const auto& s : rep.slack) {
        Json r;
        r["face"] = s.face;
        r["label"] = c.face(s.face).label;
        r["dim"] = s.dim;
        r["d_min"] = s.d_min;
        r["d_max"] = s.d_max;
        r["slack"] = s.slack;
        const auto& t = c.face(s.face).triple;
        if (t)
            r["middle_empty"] = !t->middle;
        rows.push_back(std::move(r));
        ++hist[s.slack];
    }
    Json h = Json::object();
    for (auto [k, v] : hist)
        h[std::to_string(k)] = v;
    j["slack_histogram"] = std::move(h);
    j["violations"] = rep.violations;
    j["faces"] = std::move(rows);
    return j;
}

Json audit_to_json(const FaceComplex& c, const AuditReport& rep) {
    Json j;
    j["family"] = c.family();
    j["n"] = c.size_parameter();
    j["pass"] = rep.pass();
    j["mode"] = rep.exhaustive ? "exhaustive" : "sampled";
    j["total_chains"] = rep.total_chains;
    j["examined"] = rep.examined;
    j["failures"] = rep.failures;
    Json chains = Json::array();
    for (const auto& ch : rep.chains) {
        Json r;
        r["faces"] = ch.faces;
        r["excess"] = ch.excess;
        r["has_positive_slack"] = ch.has_positive_slack;
        Json me = Json::array();
        for (const auto& m : ch.middle_empty)
            me.push_back(m ? Json(*m) : Json(nullptr));
        r["middle_empty"] = std::move(me);
        chains.push_back(std::move(r));
    }
    j["chains"] = std::move(chains);
    return j;
}

std::vector<HilbertRow> hilbert_rows(const std::vector<HilbertImage>& images) {
    std::vector<HilbertRow> rows;
    for (const auto& img : images)
        for (const auto& [w, p] : img.terms.terms())
            for (auto [e, coef] : p.coefficients())
                rows.push_back({img.color, w, e, coef});
    std::sort(rows.begin(), rows.end(), [](const HilbertRow& a, const HilbertRow& b) {
        return std::tie(a.color, a.word, a.exponent) < std::tie(b.color, b.word, b.exponent);
    });
    return rows;
}

std::string word_to_string(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += ' ';
        s += std::to_string(w[i]);
    }
    return s;
}

Json hilbert_to_json(const std::vector<HilbertRow>& rows) {
    Json arr = Json::array();
    for (const auto& r : rows) {
        Json j;
        j["color"] = r.color;
        j["word"] = r.word;
        j["exponent"] = r.exponent;
        j["coefficient"] = r.coefficient;
        arr.push_back(std::move(j));
    }
    return arr;
}

void write_hilbert_csv(std::ostream& os, const std::vector<HilbertRow>& rows) {
    os << "color,word,exponent,coefficient\n";
    for (const auto& r : rows)
        os << r.color << ',' << word_to_string(r.word) << ',' << r.exponent << ',' << r.coefficient
           << '\n';
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\')
            out += '\\';
        out += ch;
    }
    return out;
}

std::string dot_label(const FaceComplex& c, FaceId f) {
    const auto& rec = c.face(f);
    if (rec.triple && rec.dim == 0)
        return word_of(*rec.triple).str();
    return rec.label;
}

} // namespace

void write_hasse_dot(std::ostream& os, const FaceComplex& c) {
    os << "digraph hasse {\n  rankdir=BT;\n";
    for (FaceId f = 0; f < c.size(); ++f)
        os << "  f" << f << " [label=\"" << dot_escape(dot_label(c, f)) << "\", dim=" << c.dim(f)
           << "];\n";
    auto covers = c.covers();
    std::sort(covers.begin(), covers.end());
    for (auto [sub, super] : covers)
        os << "  f" << sub << " -> f" << super << ";\n";
    os << "}\n";
}

void write_skeleton_dot(std::ostream& os, const FaceComplex& c) {
    os << "digraph skeleton {\n";
    for (FaceId v : c.vertices())
        os << "  f" << v << " [label=\"" << dot_escape(dot_label(c, v)) << "\"];\n";
    for (const auto& a : c.skeleton())
        os << "  f" << a.tail << " -> f" << a.head << " [edge=" << a.edge << "];\n";
    os << "}\n";
}

} // namespace freehedra
