#ifndef FREEHEDRA_SUPDIM_HPP
#define FREEHEDRA_SUPDIM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "freehedra/face_complex.hpp"

namespace freehedra {

// Nonnegative integer function on the vertices of a complex.
struct SupDimFunction {
    std::map<FaceId, int> values;

    int at(FaceId v) const;
};

// D(v) = (trees in the left forest) + (trees in the right forest) - 1.
SupDimFunction freehedron_D(const FaceComplex& c);

struct FaceSlack {
    FaceId face = kNoFace;
    int dim = 0;
    int d_min = 0;  // D(min F)
    int d_max = 0;  // D(max F)
    int slack = 0;  // D(min F) - D(max F) - (dim F - 1)
};

struct SupDimReport {
    bool boundary_ok = true;  // D(min P) = dim P - 1 and D(max P) = 0
    bool faces_ok = true;     // every slack >= 0
    std::vector<FaceSlack> slack;
    std::vector<std::string> violations;

    bool sup_dimensional() const { return boundary_ok && faces_ok; }
};

SupDimReport check_supdim(const FaceComplex& c, const SupDimFunction& d);

struct AuditOptions {
    std::size_t max_vertices = 200;
    std::uint64_t max_exhaustive_chains = 200'000;
    std::size_t samples = 2'000;
    std::uint64_t seed = 0x5eedf4ee;
    bool allow_sampling = true;
    std::size_t max_recorded = 10'000;
};

struct AuditedChain {
    std::vector<FaceId> faces;
    int excess = 0;
    bool has_positive_slack = false;
    std::vector<std::optional<bool>> middle_empty;  // per member, when labelled by triples
};

// Connected chains max F_i = min F_{i+1} from min P to max P whose members
// have dim >= 1, the trivial chain (P) excluded.
struct AuditReport {
    bool exhaustive = true;
    std::uint64_t total_chains = 0;  // saturating
    std::uint64_t examined = 0;
    std::uint64_t failures = 0;      // examined chains without a positive-slack member
    std::vector<AuditedChain> chains;  // the first max_recorded examined chains

    bool pass() const { return failures == 0; }
};

// Throws DomainError when d is not sup-dimensional and ResourceError when
// the complex is beyond the exhaustive bounds and sampling is disabled.
AuditReport audit_connected_chains(const FaceComplex& c, const SupDimFunction& d,
                                   const AuditOptions& opt = {});

} // namespace freehedra

#endif
