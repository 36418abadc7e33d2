#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "mirabolic/errors.hpp"

namespace mirabolic {

/// p must be prime and fit in 31 bits; oracle fields are tiny by design.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline void require_valid_modulus(std::uint32_t p) {
    static thread_local std::uint32_t last_ok = 0;
    if (p == last_ok) return;
    if (p > (1u << 31)) throw BadPrime("modulus " + std::to_string(p) + " exceeds 2^31");
    if (!is_prime_u64(p)) throw BadPrime("modulus " + std::to_string(p) + " is not prime");
    last_ok = p;
}

/// Prime-field element carrying its modulus. Values built from bare integer
/// literals (as generic matrix code does for 0 and 1) start out unbound
/// (p == 0) and adopt the modulus of the first bound operand they meet.
class GFp {
  public:
    GFp() : v_(0), p_(0) {}
    GFp(long v) : v_(v), p_(0) {}  // NOLINT: unbound literal
    GFp(std::int64_t v, std::uint32_t p) : v_(v), p_(p) {
        require_valid_modulus(p);
        normalize();
    }

    static GFp parse(std::string_view text, std::uint32_t p);

    std::uint32_t modulus() const { return p_; }
    std::int64_t residue() const { return v_; }
    bool bound() const { return p_ != 0; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    GFp inv() const;

    std::string str() const { return std::to_string(v_); }

    friend GFp operator+(GFp a, GFp b) { join(a, b); return make(a.v_ + b.v_, a.p_); }
    friend GFp operator-(GFp a, GFp b) { join(a, b); return make(a.v_ - b.v_, a.p_); }
    friend GFp operator*(GFp a, GFp b) { join(a, b); return make(a.v_ * b.v_, a.p_); }
    friend GFp operator/(GFp a, GFp b) { join(a, b); return a * b.inv(); }
    GFp operator-() const { return make(-v_, p_); }

    GFp& operator+=(GFp o) { *this = *this + o; return *this; }
    GFp& operator-=(GFp o) { *this = *this - o; return *this; }
    GFp& operator*=(GFp o) { *this = *this * o; return *this; }
    GFp& operator/=(GFp o) { *this = *this / o; return *this; }

    friend bool operator==(GFp a, GFp b) { join(a, b); return a.v_ == b.v_; }
    friend bool operator!=(GFp a, GFp b) { return !(a == b); }
    /// Ordering by residue, for deterministic containers only.
    friend bool operator<(GFp a, GFp b) { join(a, b); return a.v_ < b.v_; }

  private:
    static GFp make(std::int64_t v, std::uint32_t p) {
        GFp r;
        r.v_ = v;
        r.p_ = p;
        r.normalize();
        return r;
    }

    void normalize() {
        if (p_ == 0) return;
        v_ %= static_cast<std::int64_t>(p_);
        if (v_ < 0) v_ += p_;
    }

    static void join(GFp& a, GFp& b) {
        if (a.p_ == b.p_) return;
        if (a.p_ == 0) {
            a.p_ = b.p_;
            a.normalize();
        } else if (b.p_ == 0) {
            b.p_ = a.p_;
            b.normalize();
        } else {
            throw FieldMismatch("residues modulo " + std::to_string(a.p_) + " and " + std::to_string(b.p_));
        }
    }

    std::int64_t v_;
    std::uint32_t p_;
};

inline GFp GFp::inv() const {
    if (v_ == 0) throw DivisionByZero();
    if (p_ == 0) {
        if (v_ == 1 || v_ == -1) return *this;
        throw FieldMismatch("cannot invert unbound integer " + std::to_string(v_));
    }
    // extended Euclid
    std::int64_t a = v_, m = p_, x0 = 1, x1 = 0;
    while (m != 0) {
        std::int64_t q = a / m;
        std::int64_t t = a - q * m;
        a = m;
        m = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    return make(x0, p_);
}

inline GFp GFp::parse(std::string_view text, std::uint32_t p) {
    if (text.empty()) throw ParseError("empty residue literal");
    std::size_t k = 0;
    bool neg = false;
    if (text[0] == '+' || text[0] == '-') {
        neg = text[0] == '-';
        k = 1;
    }
    if (k == text.size()) throw ParseError("invalid residue literal");
    std::int64_t v = 0;
    for (; k < text.size(); ++k) {
        if (text[k] < '0' || text[k] > '9') throw ParseError("invalid residue literal '" + std::string(text) + "'");
        v = v * 10 + (text[k] - '0');
        if (v > (std::int64_t(1) << 62) / 10) throw ParseError("residue literal too large");
    }
    return GFp(neg ? -v : v, p);
}

/// Smallest generator of the multiplicative group of F_p.
inline std::uint32_t primitive_root(std::uint32_t p) {
    require_valid_modulus(p);
    if (p == 2) return 1;
    auto order = [&](std::uint64_t g) {
        std::uint64_t x = g % p;
        std::uint32_t k = 1;
        while (x != 1) {
            x = x * g % p;
            ++k;
        }
        return k;
    };
    for (std::uint32_t g = 2; g < p; ++g)
        if (order(g) == p - 1) return g;
    throw BadPrime("no primitive root found for " + std::to_string(p));
}

inline std::int64_t characteristic(const GFp& x) { return x.modulus(); }
inline GFp make_like(const GFp& like, long v) {
    return like.bound() ? GFp(v, like.modulus()) : GFp(v);
}
inline std::string scalar_str(const GFp& x) { return x.str(); }

}  // namespace mirabolic
