#ifndef FREEHEDRA_SHORTNESS_HPP
#define FREEHEDRA_SHORTNESS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "freehedra/chain.hpp"

namespace freehedra {

// What the certifier looked at inside one ambient face. Only proper
// subfaces of dimension >= 1 take part: a vertex member raises the excess of
// a chain by exactly one, so it can never be part of a minimal-excess chain.
struct FaceCertificate {
    FaceId face = kNoFace;
    int dim = 0;
    std::size_t vertices = 0;
    std::size_t members = 0;     // proper subfaces of dim >= 1
    std::uint64_t chains = 0;    // nonempty chains of such members (saturating)
    int max_weight = -1;         // max of sum(dim G - 1); -1 when no member exists
    bool saturated = false;      // chain count overflowed

    // Least excess of a nontrivial chain without vertex members; nullopt when
    // there is none.
    std::optional<int> min_excess() const {
        if (max_weight < 0)
            return std::nullopt;
        return (dim - 1) - max_weight;
    }
    bool passes() const { return !min_excess() || *min_excess() > 0; }
};

// Longest-path DP over the DAG whose nodes are the vertices of `face`, with
// an arc min G -> max G of weight dim G - 1 for every proper subface G of
// dim >= 1 and free passage u -> v whenever u <= v.
FaceCertificate certify_face(const FaceComplex& c, FaceId face);

// Lexicographically least chain (by face ids) in `face` with excess <= 0,
// or nullopt.
std::optional<Chain> least_violating_chain(const FaceComplex& c, FaceId face);

// Every nontrivial chain of dim >= 1 members in `face` with excess <= 0, in
// lexicographic order. Throws ResourceError past `limit` chains.
std::vector<Chain> enumerate_zero_or_negative_excess_chains(const FaceComplex& c, FaceId face,
                                                            std::size_t limit = 1'000'000);

struct ShortnessCertificate {
    bool is_short = true;
    std::vector<FaceCertificate> faces;
    std::optional<Chain> witness;
    std::optional<int> witness_excess;
    std::uint64_t total_chains = 0;  // saturating
};

ShortnessCertificate is_short(const FaceComplex& c);

} // namespace freehedra

#endif
