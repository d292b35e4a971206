#pragma once

#include "ckrep/rational.hpp"

#include <map>
#include <optional>
#include <string>

namespace ckrep {

/// Exact scalar of the form sum_k c_k * sqrt(d_k) with rational c_k and
/// squarefree positive integer d_k. Closed under +, -, * and under square
/// roots of nonnegative rationals, which is exactly what amplitude factors
/// a_i^{+-1/2} and their products require. The rational part is the d = 1 term.
class Radical {
public:
    Radical() = default;
    Radical(const Rational& q) { set_term(BigInt(1), q); }  // NOLINT(google-explicit-constructor)
    Radical(int v) : Radical(Rational(v)) {}                // NOLINT(google-explicit-constructor)

    /// Exact square root of a nonnegative rational.
    static Radical sqrt_of(const Rational& q);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    /// The exact rational value, if the radical part vanishes.
    std::optional<Rational> as_rational() const;

    double to_double() const;
    std::string str() const;

    Radical operator-() const;
    Radical& operator+=(const Radical& o);
    Radical& operator-=(const Radical& o);
    Radical& operator*=(const Radical& o);
    /// Division by a single-term radical (or rational). Throws DomainError
    /// for multi-term divisors; the library never needs those.
    Radical& operator/=(const Radical& o);

    friend Radical operator+(Radical a, const Radical& b) { return a += b; }
    friend Radical operator-(Radical a, const Radical& b) { return a -= b; }
    friend Radical operator*(Radical a, const Radical& b) { return a *= b; }
    friend Radical operator/(Radical a, const Radical& b) { return a /= b; }
    friend bool operator==(const Radical& a, const Radical& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Radical& a, const Radical& b) { return !(a == b); }

private:
    // squarefree radicand -> nonzero rational coefficient
    std::map<BigInt, Rational> terms_;

    void set_term(const BigInt& d, const Rational& c);
    void add_term(const BigInt& d, const Rational& c);
};

}  // namespace ckrep
