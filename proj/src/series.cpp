#include "freehedra/series.hpp"

#include <sstream>

namespace freehedra {

LaurentPoly LaurentPoly::monomial(int exponent, std::int64_t coefficient) {
    LaurentPoly p;
    p.add(exponent, coefficient);
    return p;
}

void LaurentPoly::add(int exponent, std::int64_t c) {
    if (c == 0)
        return;
    auto [it, fresh] = coeffs_.emplace(exponent, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            coeffs_.erase(it);
    }
}

std::int64_t LaurentPoly::coefficient(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? 0 : it->second;
}

std::optional<int> LaurentPoly::min_exponent() const {
    if (coeffs_.empty())
        return std::nullopt;
    return coeffs_.begin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto [e, c] : o.coeffs_)
        add(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (auto [e, c] : o.coeffs_)
        add(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (auto [ea, ca] : a.coeffs_)
        for (auto [eb, cb] : b.coeffs_)
            out.add(ea + eb, ca * cb);
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (auto [e, c] : coeffs_)
        out.add(e, -c);
    return out;
}

LaurentPoly LaurentPoly::flip_t() const {
    LaurentPoly out;
    for (auto [e, c] : coeffs_)
        out.add(e, (e % 2 == 0) ? c : -c);
    return out;
}

std::string LaurentPoly::to_string() const {
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto [e, c] : coeffs_) {
        std::int64_t mag = c < 0 ? -c : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0)
            os << mag;
        else {
            if (mag != 1)
                os << mag << '*';
            os << 't';
            if (e != 1)
                os << '^' << e;
        }
    }
    return os.str();
}

Series Series::generator(FaceId color) {
    Series s;
    s.add_term({color}, LaurentPoly::monomial(0));
    return s;
}

LaurentPoly Series::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? LaurentPoly{} : it->second;
}

void Series::add_term(const Word& w, const LaurentPoly& p) {
    if (p.is_zero())
        return;
    auto [it, fresh] = terms_.emplace(w, p);
    if (!fresh) {
        it->second += p;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

std::size_t Series::max_length() const {
    std::size_t m = 0;
    for (const auto& [w, _] : terms_)
        m = std::max(m, w.size());
    return m;
}

Series& Series::operator+=(const Series& o) {
    for (const auto& [w, p] : o.terms_)
        add_term(w, p);
    return *this;
}

Series& Series::operator-=(const Series& o) {
    for (const auto& [w, p] : o.terms_)
        add_term(w, -p);
    return *this;
}

Series Series::operator-() const {
    Series out;
    for (const auto& [w, p] : terms_)
        out.terms_.emplace(w, -p);
    return out;
}

Series Series::scaled(const LaurentPoly& p) const {
    Series out;
    for (const auto& [w, q] : terms_)
        out.add_term(w, q * p);
    return out;
}

Series Series::multiply(const Series& a, const Series& b, std::size_t max_len) {
    Series out;
    for (const auto& [wa, pa] : a.terms_)
        for (const auto& [wb, pb] : b.terms_) {
            if (wa.size() + wb.size() > max_len)
                continue;
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, pa * pb);
        }
    return out;
}

Series Series::truncated(std::size_t max_len) const {
    Series out;
    for (const auto& [w, p] : terms_)
        if (w.size() <= max_len)
            out.terms_.emplace(w, p);
    return out;
}

Series apply(const Endomorphism& f, const Series& s, std::size_t max_len) {
    Series out;
    for (const auto& [w, p] : s.terms()) {
        if (w.size() > max_len)
            continue;
        Series prod;
        prod.add_term({}, LaurentPoly::monomial(0));
        for (FaceId letter : w) {
            prod = Series::multiply(prod, f.at(letter), max_len);
            if (prod.is_zero())
                break;
        }
        out += prod.scaled(p);
    }
    return out;
}

Endomorphism compose(const Endomorphism& f, const Endomorphism& g, std::size_t max_len) {
    Endomorphism h;
    h.reserve(g.size());
    for (const auto& image : g)
        h.push_back(apply(f, image, max_len));
    return h;
}

Series involution(const Series& s) {
    Series out;
    for (const auto& [w, p] : s.terms()) {
        LaurentPoly q = p.flip_t();
        out.add_term(w, w.size() % 2 == 0 ? q : -q);
    }
    return out;
}

} // namespace freehedra
