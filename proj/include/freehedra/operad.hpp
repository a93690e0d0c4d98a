#ifndef FREEHEDRA_OPERAD_HPP
#define FREEHEDRA_OPERAD_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "freehedra/chain.hpp"
#include "freehedra/series.hpp"

namespace freehedra {

inline constexpr std::size_t kMaxHilbertLength = 6;
inline constexpr std::size_t kMaxResidualLength = 5;
// Chains visited by one Hilbert image before giving up.
inline constexpr std::size_t kMaxHilbertChains = 4'000'000;

// Whether a vertex may follow itself in a chain (v <= v is reflexive).
enum class RepeatPolicy { include, exclude };

// Total degree of the operation (F_1..F_n; F): the excess of the chain, or
// nullopt when the inputs do not form a chain (the zero space).
std::optional<int> operation_degree(const FaceComplex& c, const Chain& ch);

// Dimension series of the operation space k[l - n + 1]: t^(l - n + 1), or 0.
LaurentPoly operation_dimension(const FaceComplex& c, const Chain& ch);

struct HilbertImage {
    FaceId color = kNoFace;
    Series terms;
};

// f_P(color) truncated to words of length <= max_len: every chain in the
// color contributes t^excess on its word of colors.
HilbertImage hilbert_image(const FaceComplex& c, FaceId color, std::size_t max_len,
                           RepeatPolicy policy = RepeatPolicy::include);

// The whole Poincare-Hilbert endomorphism at one truncation.
Endomorphism poincare_hilbert(const FaceComplex& c, std::size_t max_len,
                              RepeatPolicy policy = RepeatPolicy::include);

// Degree-zero part of O_P consists of identities only. Computed from the
// Hilbert images: a nontrivial chain of excess <= 0 in F contains one of
// length <= dim F - 1 built from members of dim >= 2, so that truncation is
// exact.
bool is_augmented(const FaceComplex& c);

// f o I o f o I - Id on every generator, truncated; index = color.
std::vector<HilbertImage> selfduality_residual(const FaceComplex& c, std::size_t max_len,
                                               RepeatPolicy policy = RepeatPolicy::include);

} // namespace freehedra

#endif
