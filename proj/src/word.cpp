#include "freehedra/word.hpp"

#include <algorithm>

#include "freehedra/errors.hpp"

namespace freehedra {

bool validate_word(std::string_view letters) {
    bool seen_zero = false;
    bool ok = true;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        char c = letters[i];
        if (c != '0' && c != '1' && c != '2')
            throw EncodingError(std::string("vertex word letter '") + c + "' is not in {0,1,2}");
        if (c == '1' && (i == 0 || seen_zero))
            ok = false;
        if (c == '0')
            seen_zero = true;
    }
    return ok;
}

VertexWord::VertexWord(std::string letters) : letters_(std::move(letters)) {
    if (!validate_word(letters_))
        throw DomainError("word '" + letters_ + "' violates condition star");
}

std::vector<VertexWord> enumerate_words(int n) {
    if (n < 1)
        throw DomainError("word length must be positive");
    // Extend prefixes one letter at a time; a star-word stays a star-word
    // under truncation, so no prefix is ever discarded.
    std::vector<std::pair<std::string, bool>> words{{"0", true}, {"2", false}};
    for (int len = 1; len < n; ++len) {
        std::vector<std::pair<std::string, bool>> next;
        next.reserve(words.size() * 3);
        for (const auto& [w, has_zero] : words) {
            next.emplace_back(w + '0', true);
            if (!has_zero)
                next.emplace_back(w + '1', false);
            next.emplace_back(w + '2', has_zero);
        }
        words = std::move(next);
    }
    std::vector<VertexWord> out;
    out.reserve(words.size());
    for (auto& [w, _] : words)
        out.emplace_back(std::move(w));
    std::sort(out.begin(), out.end());
    return out;
}

VertexWord word_of(const Triple& vertex) {
    if (!is_vertex(vertex))
        throw DomainError("word_of needs a zero-dimensional triple, got " + to_text(vertex));
    // Leaves right to left: (is in right forest, tree ordinal).
    struct Mark {
        bool right;
        std::size_t tree;
    };
    std::vector<Mark> marks;
    for (std::size_t i = vertex.right.size(); i-- > 0;)
        for (int l = 0; l < vertex.right[i].leaves(); ++l)
            marks.push_back({true, i});
    for (std::size_t i = vertex.left.size(); i-- > 0;)
        for (int l = 0; l < vertex.left[i].leaves(); ++l)
            marks.push_back({false, i});

    std::string letters;
    letters.reserve(marks.size());
    if (!marks.empty())
        letters.push_back(vertex.right.empty() ? '0' : '2');
    for (std::size_t i = 1; i < marks.size(); ++i) {
        const Mark& a = marks[i - 1];
        const Mark& b = marks[i];
        if (a.right == b.right && a.tree == b.tree)
            letters.push_back('2');
        else if (a.right && b.right)
            letters.push_back('1');
        else
            letters.push_back('0');
    }
    return VertexWord(std::move(letters));
}

Triple label_of(const VertexWord& w) {
    // Rebuild trees right to left; each tree of a vertex is a single branch.
    struct Run {
        bool right;
        int leaves;
    };
    std::vector<Run> runs;
    for (std::size_t i = 0; i < w.size(); ++i) {
        int c = w[i];
        if (i == 0)
            runs.push_back({c == 2, 1});
        else if (c == 2)
            ++runs.back().leaves;
        else
            runs.push_back({c == 1, 1});
    }
    Triple t;
    for (auto it = runs.rbegin(); it != runs.rend(); ++it)
        (it->right ? t.right : t.left).push_back(Tree::single(it->leaves));
    return t;
}

bool word_leq(const VertexWord& a, const VertexWord& b) {
    if (a.size() != b.size())
        throw DomainError("word_leq: length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

namespace {

void push_apart_all(Forest& f) {
    Forest out;
    for (const auto& tree : f)
        for (int b : tree.branches())
            out.push_back(Tree::single(b));
    f = std::move(out);
}

void merge_all(Forest& f) {
    for (auto& tree : f)
        tree = Tree::single(tree.leaves());
}

} // namespace

Triple min_vertex(const Triple& t) {
    Triple v = t.middle ? move_left(t, t.middle->branch_count()) : t;
    push_apart_all(v.left);
    push_apart_all(v.right);
    return v;
}

Triple max_vertex(const Triple& t) {
    Triple v = t.middle ? move_right(t, t.middle->branch_count()) : t;
    merge_all(v.left);
    merge_all(v.right);
    return v;
}

std::vector<Triple> vertex_set(const Triple& t) {
    std::vector<Triple> out;
    for (auto& f : closure(t))
        if (is_vertex(f))
            out.push_back(std::move(f));
    return out;
}

} // namespace freehedra
