#ifndef FREEHEDRA_SERIES_HPP
#define FREEHEDRA_SERIES_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "freehedra/face_complex.hpp"

namespace freehedra {

// Finitely supported Laurent polynomial in t with integer coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly monomial(int exponent, std::int64_t coefficient = 1);

    const std::map<int, std::int64_t>& coefficients() const { return coeffs_; }
    std::int64_t coefficient(int exponent) const;
    bool is_zero() const { return coeffs_.empty(); }
    std::optional<int> min_exponent() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;

    // t -> -t
    LaurentPoly flip_t() const;

    bool operator==(const LaurentPoly&) const = default;

    std::string to_string() const;

private:
    void add(int exponent, std::int64_t c);
    std::map<int, std::int64_t> coeffs_;
};

// Word in non-commuting color variables.
using Word = std::vector<FaceId>;

// Noncommutative polynomial with Laurent coefficients, truncated by word
// length only.
class Series {
public:
    Series() = default;
    static Series generator(FaceId color);

    const std::map<Word, LaurentPoly>& terms() const { return terms_; }
    LaurentPoly coefficient(const Word& w) const;
    void add_term(const Word& w, const LaurentPoly& p);
    bool is_zero() const { return terms_.empty(); }
    std::size_t max_length() const;

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    Series operator-() const;
    Series scaled(const LaurentPoly& p) const;

    // Terms of the product with word length <= max_len.
    static Series multiply(const Series& a, const Series& b, std::size_t max_len);
    Series truncated(std::size_t max_len) const;

    bool operator==(const Series&) const = default;

private:
    std::map<Word, LaurentPoly> terms_;
};

// Algebra endomorphism given by its value on each generator (index = color).
using Endomorphism = std::vector<Series>;

// Substitute every letter of s by its image, keep words of length <= max_len.
Series apply(const Endomorphism& f, const Series& s, std::size_t max_len);
// (f o g)(c) = f(g(c)).
Endomorphism compose(const Endomorphism& f, const Endomorphism& g, std::size_t max_len);
// Every variable c -> -c and t -> -t.
Series involution(const Series& s);

} // namespace freehedra

#endif
