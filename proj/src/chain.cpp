#include "freehedra/chain.hpp"

#include "freehedra/errors.hpp"

namespace freehedra {

bool face_leq(const FaceComplex& c, FaceId a, FaceId b) {
    c.check_id(a);
    c.check_id(b);
    return c.vertex_leq(c.max_vertex(a), c.min_vertex(b));
}

bool is_chain(const FaceComplex& c, const Chain& ch) {
    if (ch.faces.empty())
        return false;
    c.check_id(ch.ambient);
    for (std::size_t i = 0; i < ch.faces.size(); ++i) {
        if (!c.contains(ch.ambient, ch.faces[i]))
            return false;
        if (i > 0 && !face_leq(c, ch.faces[i - 1], ch.faces[i]))
            return false;
    }
    return true;
}

bool is_trivial(const Chain& ch) {
    return ch.faces.size() == 1 && ch.faces.front() == ch.ambient;
}

int excess(const FaceComplex& c, const Chain& ch) {
    if (!is_chain(c, ch))
        throw DomainError("not a face chain");
    int e = c.dim(ch.ambient) - 1;
    for (FaceId f : ch.faces)
        e -= c.dim(f) - 1;
    return e;
}

} // namespace freehedra
