#ifndef FREEHEDRA_CHAIN_HPP
#define FREEHEDRA_CHAIN_HPP

#include <vector>

#include "freehedra/face_complex.hpp"

namespace freehedra {

struct Chain {
    std::vector<FaceId> faces;
    FaceId ambient = kNoFace;

    bool operator==(const Chain&) const = default;
    auto operator<=>(const Chain&) const = default;
};

// a <= b iff max a <= min b in the vertex order.
bool face_leq(const FaceComplex& c, FaceId a, FaceId b);

// Nonempty, every member inside the ambient face, consecutive members
// ordered by face_leq.
bool is_chain(const FaceComplex& c, const Chain& ch);

// The singleton chain (F) in F.
bool is_trivial(const Chain& ch);

// (dim F - 1) - sum(dim F_i - 1). Throws DomainError for non-chains.
int excess(const FaceComplex& c, const Chain& ch);

} // namespace freehedra

#endif
