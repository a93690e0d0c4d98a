#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "freehedra/errors.hpp"
#include "freehedra/io.hpp"

namespace freehedra::cli {

namespace {

constexpr std::size_t kResidualDefaultLength = 3;

int env_int(const char* name, int fallback, int lo, int hi) {
    const char* raw = std::getenv(name);
    if (!raw || !*raw)
        return fallback;
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(raw, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(name) + " is not an integer: '" + raw + "'");
    }
    if (used != std::string(raw).size())
        throw std::invalid_argument(std::string(name) + " is not an integer: '" + raw + "'");
    if (v < lo || v > hi)
        throw std::invalid_argument(std::string(name) + " must be in [" + std::to_string(lo) +
                                    ", " + std::to_string(hi) + "]");
    return v;
}

struct Config {
    std::string family = "freehedron";
    std::optional<int> n;
    std::string input;
    std::string format;
    std::string output;
    std::size_t max_len = 2;
    std::optional<FaceId> color;
    bool no_repeats = false;
    std::string graph = "hasse";
    std::size_t samples = AuditOptions{}.samples;
    std::uint64_t seed = AuditOptions{}.seed;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Scale { enumeration, certification };

// Family construction with the tool's bounds applied on top of the module
// limits.
FaceComplex load_complex(const Config& cfg, const Bounds& b, Scale scale) {
    if (!cfg.input.empty()) {
        std::ifstream in(cfg.input);
        if (!in)
            throw UsageError("cannot read input file '" + cfg.input + "'");
        Json j;
        try {
            j = Json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw EncodingError(std::string("input is not JSON: ") + e.what());
        }
        if (j.contains("faces"))
            return complex_from_json(j);
        Config sub = cfg;
        sub.input.clear();
        try {
            sub.family = j.at("family").get<std::string>();
            sub.n = j.at("n").get<int>();
        } catch (const nlohmann::json::exception& e) {
            throw EncodingError(std::string("family JSON: ") + e.what());
        }
        return load_complex(sub, b, scale);
    }
    if (!cfg.n)
        throw UsageError("--n is required unless --input is given");
    const int n = *cfg.n;
    FamilyBounds fb;
    fb.freehedron = scale == Scale::enumeration ? b.enumeration : b.certification;
    fb.associahedron = b.associahedron;
    return make_family(cfg.family, n, fb);
}

void require_format(const std::string& cmd, const std::string& fmt,
                    std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (fmt == a)
            return;
    std::string list;
    for (const char* a : allowed)
        list += list.empty() ? a : std::string("|") + a;
    throw UsageError(cmd + ": format '" + fmt + "' not supported (" + list + ")");
}

void dump(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

std::string face_words(const FaceComplex& c, FaceId f) {
    const FaceId lo = c.min_vertex(f), hi = c.max_vertex(f);
    if (c.face(f).triple)
        return word_of(*c.face(lo).triple).str() + " " + word_of(*c.face(hi).triple).str();
    return c.face(lo).label + " " + c.face(hi).label;
}

int cmd_faces(const Config& cfg, const Bounds& b, std::ostream& os) {
    const std::string fmt = cfg.format.empty() ? "text" : cfg.format;
    require_format("faces", fmt, {"text", "json"});
    const auto c = load_complex(cfg, b, Scale::enumeration);
    if (fmt == "json") {
        Json j;
        j["family"] = c.family();
        j["n"] = c.size_parameter();
        Json faces = Json::array();
        for (FaceId f = 0; f < c.size(); ++f)
            faces.push_back(face_to_json(c, f));
        j["faces"] = std::move(faces);
        dump(os, j);
    } else {
        os << "# id dim min max label\n";
        for (FaceId f = 0; f < c.size(); ++f)
            os << f << ' ' << c.dim(f) << ' ' << face_words(c, f) << ' ' << c.face(f).label << '\n';
    }
    return kOk;
}

int cmd_check_short(const Config& cfg, const Bounds& b, std::ostream& os) {
    const std::string fmt = cfg.format.empty() ? "json" : cfg.format;
    require_format("check-short", fmt, {"text", "json"});
    const auto c = load_complex(cfg, b, Scale::certification);
    c.require_directed();
    const auto cert = is_short(c);
    const Json j = certificate_to_json(c, cert);
    if (fmt == "json") {
        dump(os, j);
    } else {
        os << "family " << c.family() << " n " << c.size_parameter() << '\n';
        os << "faces examined " << cert.faces.size() << '\n';
        os << "chains covered " << cert.total_chains << '\n';
        os << "short " << (cert.is_short ? "yes" : "no") << '\n';
        if (cert.witness) {
            os << "witness in face " << cert.witness->ambient << " ("
               << c.face(cert.witness->ambient).label << "), excess " << *cert.witness_excess
               << ":\n";
            for (FaceId f : cert.witness->faces)
                os << "  " << f << " dim " << c.dim(f) << " " << c.face(f).label << '\n';
            os << j["witness"].dump() << '\n';
        }
    }
    return cert.is_short ? kOk : kViolated;
}

int cmd_verify_supdim(const Config& cfg, const Bounds& b, std::ostream& os) {
    const std::string fmt = cfg.format.empty() ? "json" : cfg.format;
    require_format("verify-supdim", fmt, {"text", "json", "csv"});
    if (cfg.input.empty() && cfg.family != "freehedron")
        throw UsageError("verify-supdim is defined for the freehedron family");
    const auto c = load_complex(cfg, b, Scale::certification);
    const auto rep = check_supdim(c, freehedron_D(c));
    const bool ok = rep.sup_dimensional();
    if (fmt == "json") {
        dump(os, supdim_to_json(c, rep));
    } else if (fmt == "csv") {
        os << "face,dim,d_min,d_max,slack,middle_empty,label\n";
        for (const auto& s : rep.slack) {
            const auto& t = c.face(s.face).triple;
            os << s.face << ',' << s.dim << ',' << s.d_min << ',' << s.d_max << ',' << s.slack << ','
               << (t ? (t->middle ? "false" : "true") : "") << ",\"" << c.face(s.face).label
               << "\"\n";
        }
    } else {
        os << "sup-dimensional " << (ok ? "yes" : "no") << '\n';
        for (const auto& v : rep.violations)
            os << "violation: " << v << '\n';
        os << "# face dim D(min) D(max) slack label\n";
        for (const auto& s : rep.slack)
            os << s.face << ' ' << s.dim << ' ' << s.d_min << ' ' << s.d_max << ' ' << s.slack << ' '
               << c.face(s.face).label << '\n';
    }
    return ok ? kOk : kViolated;
}

std::vector<HilbertImage> hilbert_images(const FaceComplex& c, const Config& cfg,
                                         RepeatPolicy policy) {
    std::vector<HilbertImage> images;
    if (cfg.color) {
        c.check_id(*cfg.color);
        images.push_back(hilbert_image(c, *cfg.color, cfg.max_len, policy));
    } else {
        for (FaceId col = 0; col < c.size(); ++col)
            images.push_back(hilbert_image(c, col, cfg.max_len, policy));
    }
    return images;
}

void emit_rows(std::ostream& os, const std::string& fmt, const FaceComplex& c, const Config& cfg,
               const std::vector<HilbertRow>& rows) {
    if (fmt == "csv") {
        write_hilbert_csv(os, rows);
        return;
    }
    Json j;
    j["family"] = c.family();
    j["n"] = c.size_parameter();
    j["max_len"] = cfg.max_len;
    j["repeats"] = !cfg.no_repeats;
    j["rows"] = hilbert_to_json(rows);
    dump(os, j);
}

int cmd_hilbert(const Config& cfg, const Bounds& b, std::ostream& os) {
    const std::string fmt = cfg.format.empty() ? "csv" : cfg.format;
    require_format("hilbert", fmt, {"csv", "json"});
    const auto c = load_complex(cfg, b, Scale::certification);
    const auto policy = cfg.no_repeats ? RepeatPolicy::exclude : RepeatPolicy::include;
    emit_rows(os, fmt, c, cfg, hilbert_rows(hilbert_images(c, cfg, policy)));
    return kOk;
}

int cmd_residual(const Config& cfg, const Bounds& b, std::ostream& os) {
    const std::string fmt = cfg.format.empty() ? "csv" : cfg.format;
    require_format("residual", fmt, {"csv", "json"});
    const auto c = load_complex(cfg, b, Scale::certification);
    const auto policy = cfg.no_repeats ? RepeatPolicy::exclude : RepeatPolicy::include;
    auto images = selfduality_residual(c, cfg.max_len, policy);
    if (cfg.color) {
        c.check_id(*cfg.color);
        images = {images.at(*cfg.color)};
    }
    emit_rows(os, fmt, c, cfg, hilbert_rows(images));
    return kOk;
}

int cmd_lattice(const Config& cfg, const Bounds& b, std::ostream& os) {
    const std::string fmt = cfg.format.empty() ? "dot" : cfg.format;
    require_format("lattice", fmt, {"dot", "json"});
    if (cfg.graph != "hasse" && cfg.graph != "skeleton")
        throw UsageError("lattice: --graph must be hasse or skeleton");
    const auto c = load_complex(cfg, b, Scale::enumeration);
    if (fmt == "json")
        dump(os, complex_to_json(c));
    else if (cfg.graph == "hasse")
        write_hasse_dot(os, c);
    else
        write_skeleton_dot(os, c);
    return kOk;
}

int cmd_audit_chains(const Config& cfg, const Bounds& b, std::ostream& os) {
    const std::string fmt = cfg.format.empty() ? "json" : cfg.format;
    require_format("audit-chains", fmt, {"text", "json"});
    if (cfg.input.empty() && cfg.family != "freehedron")
        throw UsageError("audit-chains is defined for the freehedron family");
    const auto c = load_complex(cfg, b, Scale::certification);
    AuditOptions opt;
    opt.samples = cfg.samples;
    opt.seed = cfg.seed;
    const auto rep = audit_connected_chains(c, freehedron_D(c), opt);
    if (fmt == "json") {
        dump(os, audit_to_json(c, rep));
    } else {
        os << "mode " << (rep.exhaustive ? "exhaustive" : "sampled") << '\n';
        os << "connected chains " << rep.total_chains << '\n';
        os << "examined " << rep.examined << '\n';
        os << "without positive slack " << rep.failures << '\n';
        for (const auto& ch : rep.chains)
            if (!ch.has_positive_slack) {
                os << "witness:";
                for (FaceId f : ch.faces)
                    os << ' ' << f;
                os << " excess " << ch.excess << '\n';
            }
    }
    return rep.pass() ? kOk : kViolated;
}

void add_common(CLI::App* sub, Config& cfg) {
    sub->add_option("--family", cfg.family, "freehedron, cube, simplex or associahedron")
        ->check(CLI::IsMember({"freehedron", "cube", "simplex", "associahedron"}));
    sub->add_option("--n", cfg.n, "size parameter (dimension, or leaves for associahedra)");
    sub->add_option("--input", cfg.input, "JSON face complex or {\"family\", \"n\"} file");
    sub->add_option("--format", cfg.format, "output format");
    sub->add_option("--output", cfg.output, "write to this file instead of stdout");
}

void add_series(CLI::App* sub, Config& cfg, std::size_t default_len) {
    sub->add_option("--max-len", cfg.max_len,
                    "truncate words longer than this (default " + std::to_string(default_len) + ")");
    sub->add_option("--color", cfg.color, "only this face id");
    sub->add_flag("--no-repeats", cfg.no_repeats, "forbid a face following itself in a chain");
}

} // namespace

Bounds bounds_from_env() {
    Bounds b;
    b.enumeration = env_int("FREEHEDRA_MAX_ENUM", b.enumeration, 0, kDefaultEnumerationBound + 1);
    b.certification = env_int("FREEHEDRA_MAX_CERT", b.certification, 0, b.enumeration);
    b.associahedron = env_int("FREEHEDRA_MAX_ASSOC", b.associahedron, 3, kMaxAssociahedronLeaves);
    return b;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Face lattices, shortness certificates and operad series of directed polytopes",
                 "freehedra"};
    app.require_subcommand(1);
    Config cfg;
    struct Command {
        CLI::App* app;
        int (*fn)(const Config&, const Bounds&, std::ostream&);
    };
    std::vector<Command> commands;
    auto add = [&](const char* name, const char* help,
                   int (*fn)(const Config&, const Bounds&, std::ostream&)) {
        CLI::App* sub = app.add_subcommand(name, help);
        add_common(sub, cfg);
        commands.push_back({sub, fn});
        return sub;
    };
    add("faces", "list faces with dims, labels and min/max vertices", cmd_faces);
    add("check-short", "certify shortness or emit a witness chain", cmd_check_short);
    add("verify-supdim", "per-face slack of D = a + b - 1 on a freehedron", cmd_verify_supdim);
    add_series(add("hilbert", "truncated Poincare-Hilbert images", cmd_hilbert), cfg, 2);
    CLI::App* res = add("residual", "self-duality residual f I f I - Id", cmd_residual);
    add_series(res, cfg, kResidualDefaultLength);
    add("lattice", "Hasse diagram or oriented 1-skeleton", cmd_lattice)
        ->add_option("--graph", cfg.graph, "hasse or skeleton");
    CLI::App* audit = add("audit-chains", "connected min-to-max chain audit", cmd_audit_chains);
    audit->add_option("--samples", cfg.samples, "chains to sample beyond the exhaustive range");
    audit->add_option("--seed", cfg.seed, "sampling seed");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "freehedra: " << e.what() << '\n';
        return kUsage;
    }

    const Command* chosen = nullptr;
    for (const auto& c : commands)
        if (c.app->parsed())
            chosen = &c;
    if (res->parsed() && res->count("--max-len") == 0)
        cfg.max_len = kResidualDefaultLength;

    try {
        const Bounds bounds = bounds_from_env();
        std::ostringstream buf;
        const int code = chosen->fn(cfg, bounds, buf);
        if (cfg.output.empty()) {
            out << buf.str();
        } else {
            std::ofstream f(cfg.output, std::ios::binary);
            if (!f)
                throw UsageError("cannot write '" + cfg.output + "'");
            f << buf.str();
        }
        return code;
    } catch (const UsageError& e) {
        err << "freehedra: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "freehedra: " << e.what() << '\n';
        return kUsage;
    } catch (const ResourceError& e) {
        err << "freehedra: resource bound: " << e.what() << '\n';
        return kResource;
    } catch (const Error& e) {
        err << "freehedra: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace freehedra::cli
