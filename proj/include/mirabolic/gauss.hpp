#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "mirabolic/errors.hpp"
#include "mirabolic/rational.hpp"

namespace mirabolic {

/// Gaussian rational a + bi with exact rational parts. Stands in for the
/// complex base field.
class GaussRational {
  public:
    GaussRational() = default;
    GaussRational(long n) : re_(n) {}  // NOLINT: implicit int -> field embedding
    GaussRational(Rational re) : re_(std::move(re)) {}  // NOLINT
    GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRational i() { return GaussRational(Rational(0), Rational(1)); }
    static GaussRational parse(std::string_view text);

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }

    GaussRational conj() const { return GaussRational(re_, -im_); }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussRational inv() const {
        Rational n = norm();
        if (n.is_zero()) throw DivisionByZero();
        return GaussRational(re_ / n, -(im_ / n));
    }

    std::string str() const;

    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
        return GaussRational(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
        return GaussRational(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return GaussRational(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend GaussRational operator/(const GaussRational& a, const GaussRational& b) { return a * b.inv(); }
    GaussRational operator-() const { return GaussRational(-re_, -im_); }

    GaussRational& operator+=(const GaussRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussRational& operator-=(const GaussRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussRational& operator*=(const GaussRational& o) { *this = *this * o; return *this; }
    GaussRational& operator/=(const GaussRational& o) { *this = *this / o; return *this; }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
    /// Lexicographic; only used for deterministic ordering in containers.
    friend bool operator<(const GaussRational& a, const GaussRational& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

  private:
    Rational re_;
    Rational im_;
};

inline std::string GaussRational::str() const {
    if (im_.is_zero()) return re_.str();
    std::string imag_part;
    Rational mag = im_.sign() < 0 ? -im_ : im_;
    imag_part = mag.is_one() ? "i" : mag.str() + "i";
    if (re_.is_zero()) return (im_.sign() < 0 ? "-" : "") + imag_part;
    return re_.str() + (im_.sign() < 0 ? "-" : "+") + imag_part;
}

inline GaussRational GaussRational::parse(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (c != ' ' && c != '\t') s.push_back(c);
    if (s.empty()) throw ParseError("empty scalar literal");

    // Split at the first interior sign; rational literals carry signs only
    // in front, so any '+'/'-' past position 0 separates real and imaginary
    // parts.
    std::size_t split = std::string::npos;
    for (std::size_t k = 1; k < s.size(); ++k) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    }

    auto parse_imag = [](std::string_view t) -> Rational {
        if (t.empty() || t.back() != 'i') throw ParseError("expected imaginary part ending in 'i'");
        t.remove_suffix(1);
        if (t.empty() || t == "+") return Rational(1);
        if (t == "-") return Rational(-1);
        return Rational::parse(t);
    };

    if (split == std::string::npos) {
        if (s.back() == 'i') return GaussRational(Rational(0), parse_imag(s));
        return GaussRational(Rational::parse(s));
    }
    std::string_view left(s.data(), split);
    std::string_view right(s.data() + split, s.size() - split);
    return GaussRational(Rational::parse(left), parse_imag(right));
}

inline std::int64_t characteristic(const GaussRational&) { return 0; }
inline GaussRational make_like(const GaussRational&, long v) { return GaussRational(v); }
inline std::string scalar_str(const GaussRational& x) { return x.str(); }

}  // namespace mirabolic
