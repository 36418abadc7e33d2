#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "mirabolic/errors.hpp"

namespace mirabolic {

/// Arbitrary-precision rational, always kept canonical (reduced, positive
/// denominator). Stands in for the real base field: every quantity this
/// library computes from rational input stays rational.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit by design, mirrors int -> field embedding
    Rational(long num, long den) : q_(num, den) {
        if (den == 0) throw DivisionByZero();
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) {
        if (q_.get_den() == 0) throw DivisionByZero();
        q_.canonicalize();
    }

    static Rational parse(std::string_view text);

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }

    Rational inv() const {
        if (is_zero()) throw DivisionByZero();
        return Rational(mpq_class(1 / q_));
    }

    /// Residue num * den^{-1} mod p. Throws BadReduction when the
    /// denominator vanishes mod p.
    std::int64_t mod_p(std::uint32_t p) const;

    std::string str() const { return q_.get_str(); }

    const mpq_class& raw() const { return q_; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DivisionByZero();
        return Rational(mpq_class(a.q_ / b.q_));
    }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero();
        q_ /= o.q_;
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  private:
    mpq_class q_;
};

inline Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty rational literal");
    try {
        mpq_class q(s);  // accepts "num" and "num/den"
        if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
        q.canonicalize();
        return Rational(std::move(q));
    } catch (const std::invalid_argument&) {
        throw ParseError("invalid rational literal '" + s + "'");
    }
}

inline std::int64_t Rational::mod_p(std::uint32_t p) const {
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class den_mod = q_.get_den() % pz;
    if (den_mod == 0) throw BadReduction("denominator vanishes mod " + std::to_string(p));
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den_mod.get_mpz_t(), pz.get_mpz_t()) == 0)
        throw BadReduction("denominator not invertible mod " + std::to_string(p));
    mpz_class num_mod = q_.get_num() % pz;
    mpz_class r = (num_mod * inv) % pz;
    if (r < 0) r += pz;
    return r.get_si();
}

inline std::int64_t characteristic(const Rational&) { return 0; }
inline Rational make_like(const Rational&, long v) { return Rational(v); }
inline std::string scalar_str(const Rational& x) { return x.str(); }

}  // namespace mirabolic
