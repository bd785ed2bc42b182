#include "gpd/rational.hpp"

#include <stdexcept>

namespace gpd {

GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    if (b.is_zero()) throw std::domain_error("GaussRat: division by zero");
    Rat n = b.re * b.re + b.im * b.im;
    return GaussRat((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
}

std::string to_string(const Rat& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += "/";
        s += denominator(q).str();
    }
    return s;
}

std::string to_string(const GaussRat& q) {
    if (q.im == 0) return to_string(q.re);
    std::string s = to_string(q.re);
    s += (q.im < 0) ? "-" : "+";
    Rat a = abs(q.im);
    s += to_string(a);
    s += "*i";
    return s;
}

std::ostream& operator<<(std::ostream& os, const GaussRat& q) { return os << to_string(q); }

namespace {

// Parses [sign] digits [/ digits] starting at pos; advances pos.
std::optional<Rat> parse_signed_rat(std::string_view s, std::size_t& pos) {
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    std::size_t digits_begin = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits_begin) return std::nullopt;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        std::size_t den_begin = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == den_begin) return std::nullopt;
    }
    std::string text(s.substr(start, pos - start));
    if (text[0] == '+') text.erase(0, 1);
    try {
        Rat q(text);
        return q;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace

std::optional<Rat> parse_rat(std::string_view token) {
    std::size_t pos = 0;
    auto q = parse_signed_rat(token, pos);
    if (!q || pos != token.size()) return std::nullopt;
    return q;
}

std::optional<GaussRat> parse_gauss_rat(std::string_view token) {
    if (token.empty()) return std::nullopt;
    // Bare imaginary unit forms.
    if (token == "i") return GaussRat::i();
    if (token == "-i") return GaussRat(Rat(0), Rat(-1));
    if (token == "+i") return GaussRat::i();

    std::size_t pos = 0;
    auto first = parse_signed_rat(token, pos);
    if (!first) return std::nullopt;

    if (pos == token.size()) return GaussRat(*first);

    // "c/d*i" pure imaginary.
    if (token.substr(pos) == "*i") return GaussRat(Rat(0), *first);

    // "a/b+c/d*i" and "a/b-c/d*i".
    if (token[pos] != '+' && token[pos] != '-') return std::nullopt;
    auto second = parse_signed_rat(token, pos);
    if (!second) return std::nullopt;
    if (token.substr(pos) != "*i") return std::nullopt;
    return GaussRat(*first, *second);
}

std::int64_t rat_to_int(const Rat& q) {
    if (denominator(q) != 1) throw std::domain_error("rat_to_int: not an integer: " + to_string(q));
    return numerator(q).convert_to<std::int64_t>();
}

std::int64_t gauss_to_int(const GaussRat& q) {
    if (q.im != 0) throw std::domain_error("gauss_to_int: nonzero imaginary part: " + to_string(q));
    return rat_to_int(q.re);
}

}  // namespace gpd
