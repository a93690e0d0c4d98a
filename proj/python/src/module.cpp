#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "freehedra/chain.hpp"
#include "freehedra/errors.hpp"
#include "freehedra/families.hpp"
#include "freehedra/io.hpp"
#include "freehedra/operad.hpp"
#include "freehedra/shortness.hpp"
#include "freehedra/supdim.hpp"

namespace py = pybind11;
using namespace freehedra;

namespace {

// JSON crosses the boundary as text; the Python side parses it.
std::string text(const Json& j) { return j.dump(); }

RepeatPolicy policy(bool repeats) { return repeats ? RepeatPolicy::include : RepeatPolicy::exclude; }

Chain make_chain(const FaceComplex& c, std::vector<FaceId> faces, std::optional<FaceId> ambient) {
    for (FaceId f : faces)
        c.check_id(f);
    return {std::move(faces), ambient ? *ambient : c.top()};
}

std::string series_json(const FaceComplex& c, std::vector<HilbertImage> images,
                        std::size_t max_len, bool repeats) {
    Json j;
    j["family"] = c.family();
    j["n"] = c.size_parameter();
    j["max_len"] = max_len;
    j["repeats"] = repeats;
    j["rows"] = hilbert_to_json(hilbert_rows(images));
    return text(j);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<LocatorError>(m, "LocatorError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<EncodingError>(m, "EncodingError", base.ptr());
    py::register_exception<ResourceError>(m, "ResourceError", base.ptr());

    py::class_<FaceComplex>(m, "Complex")
        .def_property_readonly("family", &FaceComplex::family)
        .def_property_readonly("n", &FaceComplex::size_parameter)
        .def_property_readonly("dimension", &FaceComplex::dimension)
        .def_property_readonly("top", &FaceComplex::top)
        .def_property_readonly("vertices", &FaceComplex::vertices)
        .def("__len__", &FaceComplex::size)
        .def("dim", &FaceComplex::dim)
        .def("label", [](const FaceComplex& c, FaceId f) { return c.face(f).label; })
        .def("min_vertex", &FaceComplex::min_vertex)
        .def("max_vertex", &FaceComplex::max_vertex)
        .def("contains", &FaceComplex::contains, py::arg("outer"), py::arg("inner"))
        .def("subfaces", &FaceComplex::subfaces)
        .def("is_directed", &FaceComplex::is_directed)
        .def("find", [](const FaceComplex& c, const std::string& label) -> FaceId {
            for (FaceId f = 0; f < c.size(); ++f)
                if (c.face(f).label == label)
                    return f;
            throw py::key_error(label);
        })
        .def("_json", [](const FaceComplex& c) { return text(complex_to_json(c)); })
        .def("_dot", [](const FaceComplex& c, bool skeleton) {
            std::ostringstream os;
            if (skeleton)
                write_skeleton_dot(os, c);
            else
                write_hasse_dot(os, c);
            return os.str();
        }, py::arg("skeleton") = false)
        .def("__repr__", [](const FaceComplex& c) {
            return "<Complex " + c.family() + " n=" + std::to_string(c.size_parameter()) +
                   " faces=" + std::to_string(c.size()) + ">";
        });

    m.def("make_family", [](const std::string& name, int n) { return make_family(name, n); },
          py::arg("name"), py::arg("n"));
    m.def("_complex_from_json", [](const std::string& s) {
        try {
            const Json j = Json::parse(s);
            return j.contains("faces") ? complex_from_json(j) : family_from_json(j);
        } catch (const nlohmann::json::exception& e) {
            throw EncodingError(e.what());
        }
    });

    m.def("face_leq", &face_leq, py::arg("complex"), py::arg("a"), py::arg("b"));
    m.def("is_chain", [](const FaceComplex& c, std::vector<FaceId> faces, std::optional<FaceId> ambient) {
        return is_chain(c, make_chain(c, std::move(faces), ambient));
    }, py::arg("complex"), py::arg("faces"), py::arg("ambient") = std::nullopt);
    m.def("excess", [](const FaceComplex& c, std::vector<FaceId> faces, std::optional<FaceId> ambient) {
        return excess(c, make_chain(c, std::move(faces), ambient));
    }, py::arg("complex"), py::arg("faces"), py::arg("ambient") = std::nullopt);

    m.def("_is_short", [](const FaceComplex& c) {
        c.require_directed();
        return text(certificate_to_json(c, is_short(c)));
    });
    m.def("_check_supdim", [](const FaceComplex& c) {
        return text(supdim_to_json(c, check_supdim(c, freehedron_D(c))));
    });
    m.def("_audit", [](const FaceComplex& c, std::size_t samples, std::uint64_t seed) {
        AuditOptions opt;
        opt.samples = samples;
        opt.seed = seed;
        return text(audit_to_json(c, audit_connected_chains(c, freehedron_D(c), opt)));
    }, py::arg("complex"), py::arg("samples") = AuditOptions{}.samples,
       py::arg("seed") = AuditOptions{}.seed);

    m.def("_hilbert", [](const FaceComplex& c, std::size_t max_len, std::optional<FaceId> color, bool repeats) {
        std::vector<HilbertImage> images;
        if (color) {
            images.push_back(hilbert_image(c, *color, max_len, policy(repeats)));
        } else {
            for (FaceId f = 0; f < c.size(); ++f)
                images.push_back(hilbert_image(c, f, max_len, policy(repeats)));
        }
        return series_json(c, std::move(images), max_len, repeats);
    });
    m.def("_residual", [](const FaceComplex& c, std::size_t max_len, std::optional<FaceId> color, bool repeats) {
        auto images = selfduality_residual(c, max_len, policy(repeats));
        if (color) {
            c.check_id(*color);
            images = {images.at(*color)};
        }
        return series_json(c, std::move(images), max_len, repeats);
    });
    m.def("is_augmented", &is_augmented, py::arg("complex"));
}
