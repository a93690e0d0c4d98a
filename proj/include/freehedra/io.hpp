#ifndef FREEHEDRA_IO_HPP
#define FREEHEDRA_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "freehedra/chain.hpp"
#include "freehedra/families.hpp"
#include "freehedra/operad.hpp"
#include "freehedra/shortness.hpp"
#include "freehedra/supdim.hpp"
#include "freehedra/tree.hpp"
#include "freehedra/word.hpp"

namespace freehedra {

using Json = nlohmann::ordered_json;

// {"left": [[int,...],...], "middle": [int,...] | null, "right": [[int,...],...]}
Json triple_to_json(const Triple& t);
Triple triple_from_json(const Json& j);

// {"word": "21", "triple": {...}}
Json vertex_to_json(const Triple& vertex);

// One face: id, dim, label, min/max vertex ids, plus triple and words for
// freehedron faces.
Json face_to_json(const FaceComplex& c, FaceId f);

// faces, incidence (cover pairs), skeleton (tail, head pairs), top.
Json complex_to_json(const FaceComplex& c);
FaceComplex complex_from_json(const Json& j);

// {"family": "freehedron", "n": 3}
FaceComplex family_from_json(const Json& j, const FamilyBounds& bounds = {});

Json chain_to_json(const FaceComplex& c, const Chain& ch);
Json certificate_to_json(const FaceComplex& c, const ShortnessCertificate& cert);
Json supdim_to_json(const FaceComplex& c, const SupDimReport& rep);
Json audit_to_json(const FaceComplex& c, const AuditReport& rep);

struct HilbertRow {
    FaceId color;
    Word word;
    int exponent;
    std::int64_t coefficient;
};

// Rows ordered by color, word, exponent.
std::vector<HilbertRow> hilbert_rows(const std::vector<HilbertImage>& images);
std::string word_to_string(const Word& w);
Json hilbert_to_json(const std::vector<HilbertRow>& rows);
void write_hilbert_csv(std::ostream& os, const std::vector<HilbertRow>& rows);

// Hasse diagram of the cover relation, nodes sorted by id.
void write_hasse_dot(std::ostream& os, const FaceComplex& c);
// Oriented 1-skeleton.
void write_skeleton_dot(std::ostream& os, const FaceComplex& c);

} // namespace freehedra

#endif
