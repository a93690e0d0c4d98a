#ifndef FREEHEDRA_TREE_HPP
#define FREEHEDRA_TREE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace freehedra {

inline constexpr int kDefaultEnumerationBound = 8;

// A depth-2 planar tree. Leaves on one branch are indistinguishable, so a
// branch is stored as its leaf count.
class Tree {
public:
    explicit Tree(std::vector<int> branches);
    static Tree single(int leaves) { return Tree({leaves}); }

    const std::vector<int>& branches() const { return branches_; }
    std::size_t branch_count() const { return branches_.size(); }
    std::size_t spaces() const { return branches_.size() - 1; }
    int leaves() const;

    auto operator<=>(const Tree&) const = default;

private:
    std::vector<int> branches_;
};

using Forest = std::vector<Tree>;

// Forest-tree-forest label of a freehedron face. The all-empty triple is the
// point F^0.
struct Triple {
    Forest left;
    std::optional<Tree> middle;
    Forest right;

    auto operator<=>(const Triple&) const = default;
};

enum class Region { left, middle, right };

// Names the mid-branch space between branches gap_index and gap_index + 1 of
// one tree. tree_index is ignored for the middle region.
struct SpaceLocator {
    Region region = Region::left;
    std::size_t tree_index = 0;
    std::size_t gap_index = 0;
};

int leaf_count(const Triple& t);
int mid_branch_spaces(const Triple& t);
int dimension(const Triple& t);
bool is_vertex(const Triple& t);

Triple merge(const Triple& t, const SpaceLocator& at);
Triple push_apart(const Triple& t, const SpaceLocator& at);
Triple move_left(const Triple& t, std::size_t k);
Triple move_right(const Triple& t, std::size_t k);

// Every triple reachable by exactly one face transformation, in canonical
// order, without duplicates.
std::vector<Triple> boundary(const Triple& t);

// Reflexive-transitive closure of boundary, in canonical order.
std::vector<Triple> closure(const Triple& t);

// All faces of F^n in canonical order (dimension, then text encoding).
std::vector<Triple> enumerate_faces(int n, int bound = kDefaultEnumerationBound);

// Face count of F^n by dynamic programming over forest/tree compositions;
// does not enumerate.
std::uint64_t count_faces(int n);

// `[[1],[2,1]] | [1,1] | []`; an empty middle is written `1`.
std::string to_text(const Triple& t);
Triple parse_triple(std::string_view text);

bool canonical_less(const Triple& a, const Triple& b);

} // namespace freehedra

#endif
