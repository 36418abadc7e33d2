#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "mirabolic/errors.hpp"

namespace mirabolic {

/// Univariate polynomial over an exact field scalar S. Coefficients are
/// stored lowest degree first with trailing zeros stripped; the zero
/// polynomial is the empty coefficient list.
template <class S>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) { strip(); }
    Poly(std::initializer_list<S> coeffs) : c_(coeffs) { strip(); }

    static Poly zero() { return Poly(); }
    static Poly constant(S c) { return Poly(std::vector<S>{std::move(c)}); }
    static Poly x() { return Poly(std::vector<S>{S(0), S(1)}); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<S>& coeffs() const { return c_; }

    /// Coefficient of x^k (zero beyond the degree).
    S coeff(std::size_t k) const { return k < c_.size() ? c_[k] : S(0); }

    const S& leading() const {
        if (c_.empty()) throw ZeroPolynomial();
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    Poly monic() const {
        if (is_zero()) return *this;
        if (is_monic()) return *this;
        Poly r = *this;
        const S lead = r.c_.back();
        for (auto& a : r.c_) a /= lead;
        return r;
    }

    S eval(const S& x) const {
        S acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<S> d;
        d.reserve(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) {
            S factor = c_[k];
            S mult(0);
            for (std::size_t j = 0; j < k; ++j) mult += S(1);  // k as a field element, safe in char p
            d.push_back(factor * mult);
        }
        return Poly(std::move(d));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<S> r(std::max(a.c_.size(), b.c_.size()), S(0));
        for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<S> r(std::max(a.c_.size(), b.c_.size()), S(0));
        for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] -= b.c_[k];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<S> r(a.c_.size() + b.c_.size() - 1, S(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const S& s, const Poly& p) {
        Poly r = p;
        for (auto& a : r.c_) a *= s;
        r.strip();
        return r;
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& a : r.c_) a = -a;
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    friend bool operator<(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        for (std::size_t k = a.c_.size(); k-- > 0;) {
            if (a.c_[k] != b.c_[k]) return a.c_[k] < b.c_[k];
        }
        return false;
    }

  private:
    void strip() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<S> c_;
};

/// Quotient and remainder of a by b over the coefficient field.
template <class S>
std::pair<Poly<S>, Poly<S>> poly_divmod(const Poly<S>& a, const Poly<S>& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.degree() < b.degree()) return {Poly<S>(), a};
    std::vector<S> rem(a.coeffs());
    std::vector<S> quot(a.degree() - b.degree() + 1, S(0));
    const S lead_inv = S(1) / b.leading();
    for (int k = a.degree(); k >= b.degree(); --k) {
        S c = rem[k];
        if (c.is_zero()) continue;
        S q = c * lead_inv;
        quot[k - b.degree()] = q;
        for (int j = 0; j <= b.degree(); ++j) rem[k - b.degree() + j] -= q * b.coeff(j);
    }
    return {Poly<S>(std::move(quot)), Poly<S>(std::move(rem))};
}

template <class S>
Poly<S> operator/(const Poly<S>& a, const Poly<S>& b) {
    return poly_divmod(a, b).first;
}

template <class S>
Poly<S> operator%(const Poly<S>& a, const Poly<S>& b) {
    return poly_divmod(a, b).second;
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
template <class S>
Poly<S> poly_gcd(Poly<S> a, Poly<S> b) {
    while (!b.is_zero()) {
        Poly<S> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// True iff f has no repeated roots in the algebraic closure. Over F_p a
/// vanishing derivative forces f to be a p-th power (x -> x^p fixes every
/// coefficient), hence never squarefree in positive degree.
template <class S>
bool poly_is_squarefree(const Poly<S>& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    if (f.degree() == 0) return true;
    Poly<S> d = f.derivative();
    if (d.is_zero()) return false;  // only possible in char p, p | every exponent
    return poly_gcd(f, d).degree() == 0;
}

/// Product of (x - r) over the given roots.
template <class S>
Poly<S> poly_from_roots(const std::vector<S>& roots) {
    Poly<S> acc = Poly<S>::constant(S(1));
    for (const S& r : roots) acc = acc * Poly<S>({-r, S(1)});
    return acc;
}

/// Display form with descending powers, e.g. "x^2-3x+2". Composite
/// coefficients (those rendering with an interior sign) are parenthesized.
template <class S>
std::string poly_str(const Poly<S>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int k = f.degree(); k >= 0; --k) {
        S c = f.coeff(k);
        if (c.is_zero()) continue;
        std::string cs = scalar_str(c);
        bool neg = cs.size() > 1 && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
        bool composite = cs.find_first_of("+-", 1) != std::string::npos;
        std::string mag = neg ? cs.substr(1) : cs;
        if (composite) mag = "(" + cs + ")", neg = false;
        std::string term;
        if (k == 0) {
            term = mag;
        } else {
            std::string xs = k == 1 ? "x" : "x^" + std::to_string(k);
            term = (mag == "1") ? xs : mag + xs;
        }
        if (out.empty())
            out = (neg ? "-" : "") + term;
        else
            out += (neg ? "-" : "+") + term;
    }
    return out;
}

}  // namespace mirabolic
