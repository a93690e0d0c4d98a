#include "freehedra/tree.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "freehedra/errors.hpp"

namespace freehedra {

Tree::Tree(std::vector<int> branches) : branches_(std::move(branches)) {
    if (branches_.empty())
        throw DomainError("tree must have at least one branch");
    for (int b : branches_)
        if (b < 1)
            throw DomainError("branch leaf count must be positive");
}

int Tree::leaves() const {
    return std::accumulate(branches_.begin(), branches_.end(), 0);
}

namespace {

int forest_leaves(const Forest& f) {
    int n = 0;
    for (const auto& t : f)
        n += t.leaves();
    return n;
}

int forest_spaces(const Forest& f) {
    int n = 0;
    for (const auto& t : f)
        n += static_cast<int>(t.spaces());
    return n;
}

Forest& forest_of(Triple& t, Region r) {
    return r == Region::left ? t.left : t.right;
}

const Tree& located_tree(const Triple& t, const SpaceLocator& at) {
    if (at.region == Region::middle) {
        if (!t.middle)
            throw LocatorError("locator names the middle tree, which is empty");
        return *t.middle;
    }
    const Forest& f = at.region == Region::left ? t.left : t.right;
    if (at.tree_index >= f.size())
        throw LocatorError("tree index " + std::to_string(at.tree_index) + " out of range");
    return f[at.tree_index];
}

void check_gap(const Tree& tree, const SpaceLocator& at) {
    if (at.gap_index + 1 >= tree.branch_count())
        throw LocatorError("gap index " + std::to_string(at.gap_index) + " out of range");
}

void write_tree(std::ostream& os, const Tree& tree) {
    os << '[';
    for (std::size_t i = 0; i < tree.branch_count(); ++i) {
        if (i)
            os << ',';
        os << tree.branches()[i];
    }
    os << ']';
}

void write_forest(std::ostream& os, const Forest& f) {
    os << '[';
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i)
            os << ',';
        write_tree(os, f[i]);
    }
    os << ']';
}

// Every composition of n, i.e. every tree with n leaves.
std::vector<Tree> trees_with(int n) {
    std::vector<Tree> out;
    if (n < 1)
        return out;
    // Bit i of mask set means "cut after leaf i".
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> parts;
        int run = 1;
        for (int i = 0; i < n - 1; ++i) {
            if (mask & (1u << i)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.emplace_back(std::move(parts));
    }
    return out;
}

std::vector<Forest> forests_with(int n, std::vector<std::vector<Forest>>& memo) {
    if (static_cast<std::size_t>(n) < memo.size() && !memo[n].empty())
        return memo[n];
    std::vector<Forest> out;
    if (n == 0) {
        out.emplace_back();
    } else {
        for (int first = 1; first <= n; ++first) {
            auto heads = trees_with(first);
            auto tails = forests_with(n - first, memo);
            for (const auto& h : heads)
                for (const auto& rest : tails) {
                    Forest f;
                    f.reserve(rest.size() + 1);
                    f.push_back(h);
                    f.insert(f.end(), rest.begin(), rest.end());
                    out.push_back(std::move(f));
                }
        }
    }
    if (memo.size() <= static_cast<std::size_t>(n))
        memo.resize(n + 1);
    memo[n] = out;
    return out;
}

void sort_canonical(std::vector<Triple>& v) {
    std::vector<std::pair<std::pair<int, std::string>, Triple>> keyed;
    keyed.reserve(v.size());
    for (auto& t : v)
        keyed.push_back({{dimension(t), to_text(t)}, std::move(t)});
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    keyed.erase(std::unique(keyed.begin(), keyed.end(),
                            [](const auto& a, const auto& b) { return a.first == b.first; }),
                keyed.end());
    v.clear();
    for (auto& k : keyed)
        v.push_back(std::move(k.second));
}

} // namespace

int leaf_count(const Triple& t) {
    return forest_leaves(t.left) + (t.middle ? t.middle->leaves() : 0) + forest_leaves(t.right);
}

int mid_branch_spaces(const Triple& t) {
    return forest_spaces(t.left) + (t.middle ? static_cast<int>(t.middle->spaces()) : 0) +
           forest_spaces(t.right);
}

int dimension(const Triple& t) {
    return mid_branch_spaces(t) + (t.middle ? 1 : 0);
}

bool is_vertex(const Triple& t) {
    return dimension(t) == 0;
}

Triple merge(const Triple& t, const SpaceLocator& at) {
    check_gap(located_tree(t, at), at);
    Triple out = t;
    Tree& tree = at.region == Region::middle ? *out.middle : forest_of(out, at.region)[at.tree_index];
    std::vector<int> b = tree.branches();
    b[at.gap_index] += b[at.gap_index + 1];
    b.erase(b.begin() + static_cast<std::ptrdiff_t>(at.gap_index) + 1);
    tree = Tree(std::move(b));
    return out;
}

Triple push_apart(const Triple& t, const SpaceLocator& at) {
    if (at.region == Region::middle)
        throw DomainError("push apart does not apply to the middle tree");
    check_gap(located_tree(t, at), at);
    Triple out = t;
    Forest& f = forest_of(out, at.region);
    const auto& b = f[at.tree_index].branches();
    auto cut = b.begin() + static_cast<std::ptrdiff_t>(at.gap_index) + 1;
    Tree first(std::vector<int>(b.begin(), cut));
    Tree second(std::vector<int>(cut, b.end()));
    auto pos = f.begin() + static_cast<std::ptrdiff_t>(at.tree_index);
    *pos = std::move(first);
    f.insert(pos + 1, std::move(second));
    return out;
}

Triple move_left(const Triple& t, std::size_t k) {
    if (!t.middle)
        throw DomainError("move left needs a nonempty middle tree");
    const auto& b = t.middle->branches();
    if (k < 1 || k > b.size())
        throw DomainError("move left: k out of range");
    Triple out = t;
    auto cut = b.begin() + static_cast<std::ptrdiff_t>(k);
    out.left.emplace_back(std::vector<int>(b.begin(), cut));
    if (k == b.size())
        out.middle.reset();
    else
        out.middle = Tree(std::vector<int>(cut, b.end()));
    return out;
}

Triple move_right(const Triple& t, std::size_t k) {
    if (!t.middle)
        throw DomainError("move right needs a nonempty middle tree");
    const auto& b = t.middle->branches();
    if (k < 1 || k > b.size())
        throw DomainError("move right: k out of range");
    Triple out = t;
    auto cut = b.end() - static_cast<std::ptrdiff_t>(k);
    out.right.emplace(out.right.begin(), std::vector<int>(cut, b.end()));
    if (k == b.size())
        out.middle.reset();
    else
        out.middle = Tree(std::vector<int>(b.begin(), cut));
    return out;
}

std::vector<Triple> boundary(const Triple& t) {
    if (dimension(t) == 0)
        throw DomainError("boundary of a vertex is undefined");
    std::vector<Triple> out;
    for (Region r : {Region::left, Region::right}) {
        const Forest& f = r == Region::left ? t.left : t.right;
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t g = 0; g < f[i].spaces(); ++g) {
                SpaceLocator at{r, i, g};
                out.push_back(merge(t, at));
                out.push_back(push_apart(t, at));
            }
    }
    if (t.middle) {
        for (std::size_t g = 0; g < t.middle->spaces(); ++g)
            out.push_back(merge(t, {Region::middle, 0, g}));
        for (std::size_t k = 1; k <= t.middle->branch_count(); ++k) {
            out.push_back(move_left(t, k));
            out.push_back(move_right(t, k));
        }
    }
    sort_canonical(out);
    return out;
}

std::vector<Triple> closure(const Triple& t) {
    std::set<Triple> seen{t};
    std::vector<Triple> frontier{t};
    while (!frontier.empty()) {
        std::vector<Triple> next;
        for (const auto& f : frontier) {
            if (dimension(f) == 0)
                continue;
            for (auto& b : boundary(f))
                if (seen.insert(b).second)
                    next.push_back(std::move(b));
        }
        frontier = std::move(next);
    }
    std::vector<Triple> out(seen.begin(), seen.end());
    sort_canonical(out);
    return out;
}

std::vector<Triple> enumerate_faces(int n, int bound) {
    if (n < 0)
        throw DomainError("leaf count must be nonnegative");
    if (n > bound)
        throw ResourceError("freehedron index " + std::to_string(n) + " exceeds enumeration bound " +
                            std::to_string(bound));
    std::vector<std::vector<Forest>> memo;
    std::vector<Triple> out;
    for (int a = 0; a <= n; ++a)
        for (int m = 0; a + m <= n; ++m) {
            std::vector<std::optional<Tree>> middles;
            if (m == 0)
                middles.emplace_back();
            else
                for (auto& tr : trees_with(m))
                    middles.emplace_back(std::move(tr));
            const auto lefts = forests_with(a, memo);
            const auto rights = forests_with(n - a - m, memo);
            for (const auto& l : lefts)
                for (const auto& mid : middles)
                    for (const auto& r : rights)
                        out.push_back(Triple{l, mid, r});
        }
    sort_canonical(out);
    return out;
}

std::uint64_t count_faces(int n) {
    if (n < 0)
        return 0;
    auto trees = [](int k) -> std::uint64_t { return k < 1 ? 0 : std::uint64_t{1} << (k - 1); };
    std::vector<std::uint64_t> forests(n + 1, 0);
    forests[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int j = 1; j <= k; ++j)
            forests[k] += trees(j) * forests[k - j];
    std::uint64_t total = 0;
    for (int a = 0; a <= n; ++a)
        for (int m = 0; a + m <= n; ++m)
            total += forests[a] * (m == 0 ? 1 : trees(m)) * forests[n - a - m];
    return total;
}

std::string to_text(const Triple& t) {
    std::ostringstream os;
    write_forest(os, t.left);
    os << " | ";
    if (t.middle)
        write_tree(os, *t.middle);
    else
        os << '1';
    os << " | ";
    write_forest(os, t.right);
    return os.str();
}

namespace {

class TextParser {
public:
    explicit TextParser(std::string_view s) : s_(s) {}

    Triple parse() {
        Triple t;
        t.left = forest();
        expect('|');
        skip();
        if (peek() == '1') {
            ++pos_;
        } else {
            t.middle = tree();
        }
        expect('|');
        t.right = forest();
        skip();
        if (pos_ != s_.size())
            fail("trailing characters");
        return t;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw EncodingError("triple text: " + what + " at offset " + std::to_string(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void expect(char c) {
        skip();
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    int integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected integer");
        return std::stoi(std::string(s_.substr(start, pos_ - start)));
    }
    Tree tree() {
        expect('[');
        std::vector<int> b;
        skip();
        if (peek() != ']') {
            b.push_back(integer());
            skip();
            while (peek() == ',') {
                ++pos_;
                b.push_back(integer());
                skip();
            }
        }
        expect(']');
        try {
            return Tree(std::move(b));
        } catch (const DomainError& e) {
            fail(e.what());
        }
    }
    Forest forest() {
        expect('[');
        Forest f;
        skip();
        if (peek() != ']') {
            f.push_back(tree());
            skip();
            while (peek() == ',') {
                ++pos_;
                f.push_back(tree());
                skip();
            }
        }
        expect(']');
        return f;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

Triple parse_triple(std::string_view text) {
    return TextParser(text).parse();
}

bool canonical_less(const Triple& a, const Triple& b) {
    int da = dimension(a), db = dimension(b);
    if (da != db)
        return da < db;
    return to_text(a) < to_text(b);
}

} // namespace freehedra
