#ifndef FREEHEDRA_FACE_COMPLEX_HPP
#define FREEHEDRA_FACE_COMPLEX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "freehedra/tree.hpp"

namespace freehedra {

using FaceId = std::uint32_t;
inline constexpr FaceId kNoFace = static_cast<FaceId>(-1);

struct FaceRecord {
    int dim = 0;
    std::string label;
    std::optional<Triple> triple;  // set for freehedron faces
};

// Oriented 1-skeleton arc; `edge` is the dimension-1 face it comes from.
struct Arc {
    FaceId edge;
    FaceId tail;
    FaceId head;
};

struct DirectedViolation {
    FaceId face;
    std::string what;
};

// Per-face acyclicity and unique source/sink of the induced oriented
// 1-skeleton. min/max are kNoFace for faces that fail.
struct DirectedReport {
    bool valid = true;
    std::vector<DirectedViolation> violations;
    std::vector<FaceId> min;
    std::vector<FaceId> max;
};

// Finite face complex with an oriented 1-skeleton. Inclusion is vertex-set
// containment; the cover relation is kept as supplied for Hasse output. The
// vertex order is the reflexive-transitive closure of the skeleton.
// Immutable once built.
class FaceComplex {
public:
    class Builder;

    const std::string& family() const { return family_; }
    int size_parameter() const { return size_param_; }

    std::size_t size() const { return faces_.size(); }
    const FaceRecord& face(FaceId f) const;
    int dim(FaceId f) const { return face(f).dim; }
    FaceId top() const { return top_; }
    int dimension() const { return dim(top_); }

    // Vertex faces, ascending id.
    const std::vector<FaceId>& vertices() const { return vertices_; }
    std::size_t vertex_index(FaceId v) const;
    std::vector<FaceId> vertices_of(FaceId f) const;
    const boost::dynamic_bitset<>& vertex_bits(FaceId f) const { return vertex_sets_.at(f); }

    bool contains(FaceId outer, FaceId inner) const;
    // All G with G ⊆ f, ascending id (f included).
    std::vector<FaceId> subfaces(FaceId f) const;

    const std::vector<std::pair<FaceId, FaceId>>& covers() const { return covers_; }
    const std::vector<Arc>& skeleton() const { return arcs_; }

    bool vertex_leq(FaceId u, FaceId v) const;
    // A linear extension of the vertex order (empty if the skeleton is cyclic).
    const std::vector<FaceId>& topological_vertices() const { return topo_; }

    const DirectedReport& directed_report() const { return report_; }
    bool is_directed() const { return report_.valid; }
    void require_directed() const;
    FaceId min_vertex(FaceId f) const;
    FaceId max_vertex(FaceId f) const;

    // Checks an id and throws DomainError when unknown.
    void check_id(FaceId f) const;

private:
    FaceComplex() = default;

    std::string family_;
    int size_param_ = 0;
    std::vector<FaceRecord> faces_;
    std::vector<FaceId> vertices_;
    std::vector<std::size_t> vertex_index_;  // by face id; npos for non-vertices
    std::vector<boost::dynamic_bitset<>> vertex_sets_;
    std::vector<std::pair<FaceId, FaceId>> covers_;
    std::vector<Arc> arcs_;
    std::vector<boost::dynamic_bitset<>> up_;  // up_[i] = vertex indices >= vertex i
    std::vector<FaceId> topo_;
    FaceId top_ = kNoFace;
    DirectedReport report_;
};

class FaceComplex::Builder {
public:
    Builder(std::string family, int size_param);

    FaceId add_face(int dim, std::string label, std::optional<Triple> triple = std::nullopt);
    // sub is a facet of super.
    void add_cover(FaceId sub, FaceId super);
    // Orients the edge whose two vertices are tail and head.
    void add_arc(FaceId tail, FaceId head);

    // Throws DomainError when the data is not a well-formed complex (cover
    // grading, edges with two vertices, exactly one arc per edge, a unique
    // top containing everything). Directedness failures are reported, not
    // thrown.
    FaceComplex build() &&;

private:
    std::string family_;
    int size_param_;
    std::vector<FaceRecord> faces_;
    std::vector<std::pair<FaceId, FaceId>> covers_;
    std::vector<std::pair<FaceId, FaceId>> arcs_;
};

DirectedReport validate_directed(const FaceComplex& c);

// The faces of f as a complex of their own; ids are renumbered in ascending
// order of the original ids.
FaceComplex induced_subcomplex(const FaceComplex& c, FaceId f);

} // namespace freehedra

#endif
