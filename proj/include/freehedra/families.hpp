#ifndef FREEHEDRA_FAMILIES_HPP
#define FREEHEDRA_FAMILIES_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "freehedra/face_complex.hpp"

namespace freehedra {

inline constexpr int kMaxCubeDim = 8;
inline constexpr int kMaxSimplexDim = 9;
inline constexpr int kMaxAssociahedronLeaves = 7;

// Planar rooted tree; a node without children is a leaf, every internal
// node has at least two children.
struct PlanarTree {
    std::vector<PlanarTree> children;

    bool is_leaf() const { return children.empty(); }
    int leaves() const;
    int internal_nodes() const;
    bool is_binary() const;

    // Lexicographic on children; a leaf sorts first.
    std::strong_ordering operator<=>(const PlanarTree& o) const;
    bool operator==(const PlanarTree& o) const;
};

// Leaves are written `x`: ((xx)x) is the left comb on three leaves.
std::string to_text(const PlanarTree& t);
PlanarTree parse_planar_tree(std::string_view text);

std::vector<PlanarTree> enumerate_planar_trees(int leaves);
// Trees obtained by inserting one internal edge.
std::vector<PlanarTree> one_step_refinements(const PlanarTree& t);
PlanarTree left_comb_refinement(const PlanarTree& t);
PlanarTree right_comb_refinement(const PlanarTree& t);

// Faces labelled by forest-tree-forest triples, edges oriented by the
// coordinatewise order of vertex words. n = 0 gives the point.
FaceComplex freehedron_complex(int n, int bound = kDefaultEnumerationBound);
// The facet ([], none, [[1,...,1]]) (a vertex when n = 1).
FaceId distinguished_facet(const FaceComplex& freehedron);

// Faces are words over {0,1,*}; edges point from 0 to 1.
FaceComplex cube_complex(int d);
// Faces are nonempty subsets of {0..d}; edges point to the larger index.
FaceComplex simplex_complex(int d);
// Faces are planar trees on `leaves` leaves; rotations (ab)c -> a(bc) point up.
FaceComplex associahedron_complex(int leaves, int bound = kMaxAssociahedronLeaves);

struct FamilyBounds {
    int freehedron = kDefaultEnumerationBound;
    int associahedron = kMaxAssociahedronLeaves;
};

// "freehedron", "cube", "simplex" or "associahedron".
FaceComplex make_family(std::string_view name, int n, const FamilyBounds& bounds = {});

} // namespace freehedra

#endif
