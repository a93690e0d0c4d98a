#ifndef FREEHEDRA_WORD_HPP
#define FREEHEDRA_WORD_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "freehedra/tree.hpp"

namespace freehedra {

// Coordinates of a freehedron vertex in the 2-scaled cube, as a word over
// {0,1,2}. Always satisfies condition star: a letter 1 never sits in the
// first position and is never preceded by a 0.
class VertexWord {
public:
    // Throws EncodingError on letters outside {0,1,2} and DomainError when
    // condition star fails.
    explicit VertexWord(std::string letters);

    const std::string& str() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    int operator[](std::size_t i) const { return letters_[i] - '0'; }

    auto operator<=>(const VertexWord&) const = default;

private:
    std::string letters_;
};

// True iff condition star holds. Throws EncodingError on foreign letters.
bool validate_word(std::string_view letters);

// All star-words of length n in lexicographic order.
std::vector<VertexWord> enumerate_words(int n);

VertexWord word_of(const Triple& vertex);
Triple label_of(const VertexWord& w);

// Coordinatewise order.
bool word_leq(const VertexWord& a, const VertexWord& b);

// Move the middle tree to the left forest, then push apart every space.
Triple min_vertex(const Triple& t);
// Move the middle tree to the right forest, then merge every space.
Triple max_vertex(const Triple& t);

// Zero-dimensional members of closure(t), canonical order.
std::vector<Triple> vertex_set(const Triple& t);

} // namespace freehedra

#endif
