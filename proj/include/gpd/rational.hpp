#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace gpd {

using Rat = boost::multiprecision::cpp_rational;

/// Gaussian rational a + b*i with exact arbitrary-precision components.
/// The scalar field for all representation-theoretic computations; every
/// identity in this library is checked with exact equality, never tolerance.
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() = default;
    GaussRat(int v) : re(v) {}          // NOLINT(google-explicit-constructor)
    GaussRat(Rat r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat conj() const { return GaussRat(re, -im); }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re + b.re, a.im + b.im);
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re - b.re, a.im - b.im);
    }
    friend GaussRat operator-(const GaussRat& a) { return GaussRat(-a.re, -a.im); }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b);

    GaussRat& operator+=(const GaussRat& b) { *this = *this + b; return *this; }
    GaussRat& operator-=(const GaussRat& b) { *this = *this - b; return *this; }
    GaussRat& operator*=(const GaussRat& b) { *this = *this * b; return *this; }
    GaussRat& operator/=(const GaussRat& b) { *this = *this / b; return *this; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

/// Canonical token form: "3", "-3/2", "1+1/2*i", "0-2*i". Round-trips with
/// parse_gauss_rat.
std::string to_string(const GaussRat& q);
std::string to_string(const Rat& q);

std::ostream& operator<<(std::ostream& os, const GaussRat& q);

/// Accepts "a", "a/b", "a/b+c/d*i", "a/b-c/d*i", "c/d*i", "i", "-i",
/// with optional signs on both parts. Returns nullopt on malformed input.
std::optional<GaussRat> parse_gauss_rat(std::string_view token);
std::optional<Rat> parse_rat(std::string_view token);

/// Exact conversion for counts that are known to be integers. Throws if the
/// value has a nonzero denominator or imaginary part.
std::int64_t rat_to_int(const Rat& q);
std::int64_t gauss_to_int(const GaussRat& q);

}  // namespace gpd
