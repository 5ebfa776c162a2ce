#pragma once

#include "unitri/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace unitri {

/**
 * Dense univariate polynomial with exact rational coefficients, stored
 * low-to-high.  The representation is normalized: no trailing zeros, and the
 * zero polynomial is the empty coefficient vector (degree -1).
 */
class Polynomial {
  public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    Polynomial(std::initializer_list<long> ints) {
        coeffs_.reserve(ints.size());
        for (long v : ints) coeffs_.emplace_back(v);
        normalize();
    }

    static Polynomial zero() { return Polynomial(); }

    static Polynomial constant(Rational c) {
        Polynomial p;
        if (c != 0) p.coeffs_.push_back(std::move(c));
        return p;
    }

    static Polynomial monomial(int exp, Rational c = Rational(1)) {
        Polynomial p;
        if (c != 0) {
            p.coeffs_.assign(static_cast<size_t>(exp) + 1, Rational(0));
            p.coeffs_.back() = std::move(c);
        }
        return p;
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
        return coeffs_[static_cast<size_t>(i)];
    }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

    bool operator==(const Polynomial& other) const { return coeffs_ == other.coeffs_; }
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& other) {
        if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
        for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
        normalize();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& other) {
        if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
        for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
        normalize();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(prod));
    }

    friend Polynomial operator*(const Rational& s, Polynomial p) {
        if (s == 0) return Polynomial();
        for (auto& c : p.coeffs_) c *= s;
        return p;
    }

    friend Polynomial operator*(Polynomial p, const Rational& s) { return s * std::move(p); }

    Polynomial pow(long e) const {
        Polynomial result = Polynomial::constant(Rational(1));
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return Polynomial();
        std::vector<Rational> d(coeffs_.size() - 1);
        for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
        return Polynomial(std::move(d));
    }

    Rational evaluate(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Polynomial composition this(inner), computed by Horner's scheme.
    Polynomial compose(const Polynomial& inner) const {
        Polynomial acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * inner + Polynomial::constant(*it);
        return acc;
    }

    bool has_integer_coeffs() const {
        for (const auto& c : coeffs_)
            if (!is_integer(c)) return false;
        return true;
    }

    bool has_nonnegative_coeffs() const {
        for (const auto& c : coeffs_)
            if (c < 0) return false;
        return true;
    }

    /// Sum of all coefficients, i.e. the value at x = 1.
    Rational coeff_sum() const { return evaluate(Rational(1)); }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            const Rational& c = coeffs_[i];
            if (c == 0) continue;
            if (first) {
                if (c < 0) out << "-";
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            Rational a = rational_abs(c);
            if (i == 0) {
                out << to_string(a);
            } else {
                if (a != 1) out << to_string(a) << "*";
                out << "x";
                if (i > 1) out << "^" << i;
            }
        }
        return out.str();
    }

  private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline Polynomial from_rationals(std::vector<Rational> v) { return Polynomial(std::move(v)); }

/// (1 + x)^n as a polynomial; handy for the f <-> h changes of basis.
inline Polynomial one_plus_x_pow(long n) { return Polynomial({1, 1}).pow(n); }

/**
 * h-polynomial of a face-count polynomial f of degree at most n:
 *   h(x) = (1 - x)^n f(x / (1 - x)) = sum_i f_i x^i (1 - x)^(n-i).
 */
inline Polynomial h_from_f(const Polynomial& f, int n) {
    if (f.degree() > n)
        throw std::invalid_argument("h_from_f: polynomial degree exceeds window " + std::to_string(n));
    Polynomial one_minus_x({1, -1});
    Polynomial result;
    for (int i = 0; i <= f.degree(); ++i) {
        if (f.coeff(i) == 0) continue;
        result += f.coeff(i) * (Polynomial::monomial(i) * one_minus_x.pow(n - i));
    }
    return result;
}

/// Inverse of h_from_f on the same window: f(x) = (1 + x)^n h(x / (1 + x)).
inline Polynomial f_from_h(const Polynomial& h, int n) {
    if (h.degree() > n)
        throw std::invalid_argument("f_from_h: polynomial degree exceeds window " + std::to_string(n));
    Polynomial one_plus_x({1, 1});
    Polynomial result;
    for (int i = 0; i <= h.degree(); ++i) {
        if (h.coeff(i) == 0) continue;
        result += h.coeff(i) * (Polynomial::monomial(i) * one_plus_x.pow(n - i));
    }
    return result;
}

/// Coefficient reversal within the window 0..n: x^n p(1/x).
inline Polynomial reversed(const Polynomial& p, int n) {
    if (p.degree() > n)
        throw std::invalid_argument("reversed: polynomial degree exceeds window " + std::to_string(n));
    std::vector<Rational> rev(static_cast<size_t>(n) + 1, Rational(0));
    for (int i = 0; i <= n; ++i) rev[static_cast<size_t>(n - i)] = p.coeff(i);
    return Polynomial(std::move(rev));
}

inline bool is_symmetric(const Polynomial& p, int n) { return p == reversed(p, n); }

/// The substitution x -> -1 - x (the reflection of the line fixing -1/2).
inline Polynomial reflect(const Polynomial& p) { return p.compose(Polynomial({-1, -1})); }

/**
 * The <r, i> section: picks the coefficients of x^(i + r*t) of g and lays them
 * out as a polynomial in one variable, sum_t g_(i + r*t) x^t.
 */
inline Polynomial section(const Polynomial& g, int r, int i) {
    if (r <= 0) throw std::invalid_argument("section: modulus must be positive");
    if (i < 0 || i >= r) throw std::invalid_argument("section: residue out of range");
    std::vector<Rational> picked;
    for (int e = i; e <= g.degree(); e += r) picked.push_back(g.coeff(e));
    return Polynomial(std::move(picked));
}

/**
 * The unique decomposition g = a + x*b with a symmetric about n/2 (within the
 * window 0..n) and b symmetric about (n-1)/2.  Exists for every g of degree at
 * most n; the parts may have negative coefficients.
 */
struct SymmetricDecomposition {
    Polynomial a;
    Polynomial b;
    int n = 0;
};

inline SymmetricDecomposition symmetric_decompose(const Polynomial& g, int n) {
    if (n < 0) throw std::invalid_argument("symmetric_decompose: negative window");
    if (g.degree() > n)
        throw std::invalid_argument("symmetric_decompose: polynomial degree exceeds window " +
                                    std::to_string(n));
    std::vector<Rational> a(static_cast<size_t>(n) + 1, Rational(0));
    std::vector<Rational> b(static_cast<size_t>(n), Rational(0));
    // Solve g_i = a_i + b_(i-1) together with a_i = a_(n-i), b_i = b_(n-1-i):
    // knowing b_(i-1) determines a_i, and the equation at index n - i then
    // determines b_(n-1-i) = b_i.
    for (int i = 0; i <= n; ++i) {
        Rational prev_b = (i >= 1 && i - 1 < n) ? b[static_cast<size_t>(i - 1)] : Rational(0);
        a[static_cast<size_t>(i)] = g.coeff(i) - prev_b;
        int mirror = n - 1 - i;
        if (mirror >= 0 && mirror < n) {
            Rational v = g.coeff(n - i) - a[static_cast<size_t>(i)];
            b[static_cast<size_t>(mirror)] = v;
            if (i < n) b[static_cast<size_t>(i)] = v;
        }
    }
    SymmetricDecomposition dec{Polynomial(std::move(a)), Polynomial(std::move(b)), n};
    if (dec.a + Polynomial::monomial(1) * dec.b != g || !is_symmetric(dec.a, n) ||
        (n >= 1 && !is_symmetric(dec.b, n - 1)))
        throw std::logic_error("symmetric_decompose: internal consistency failure");
    return dec;
}

struct DivModResult {
    Polynomial quotient;
    Polynomial remainder;
};

inline DivModResult divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
    std::vector<Rational> rem(num.coeffs());
    int dn = num.degree(), dd = den.degree();
    if (dn < dd) return {Polynomial(), num};
    std::vector<Rational> quot(static_cast<size_t>(dn - dd) + 1, Rational(0));
    const Rational lead = den.leading();
    for (int k = dn - dd; k >= 0; --k) {
        Rational c = rem[static_cast<size_t>(k + dd)] / lead;
        quot[static_cast<size_t>(k)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(k + j)] -= c * den.coeff(j);
    }
    rem.resize(static_cast<size_t>(std::max(dd, 0)));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

inline Polynomial poly_divexact(const Polynomial& num, const Polynomial& den) {
    DivModResult qr = divmod(num, den);
    if (!qr.remainder.is_zero()) throw std::logic_error("poly_divexact: division is not exact");
    return qr.quotient;
}

/// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return (Rational(1) / a.leading()) * a;
}

}  // namespace unitri
