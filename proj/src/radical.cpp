#include "ckrep/radical.hpp"

#include "ckrep/errors.hpp"

#include <cmath>
#include <sstream>

namespace ckrep {

namespace {

// n = square * squarefree. Trial division up to 10^6, then a perfect-square
// check; a leftover cofactor beyond that is taken squarefree (its prime
// factors all exceed 10^6, so a hidden square needs n > 10^12 — far outside
// the magnitudes sqrt_of ever receives here).
void split_square(const BigInt& n, BigInt& square_root, BigInt& squarefree) {
    square_root = 1;
    squarefree = 1;
    BigInt m = n;
    auto extract = [&](const BigInt& p) {
        int mult = 0;
        while (m % p == 0) {
            m /= p;
            ++mult;
        }
        if (mult == 0) return;
        for (int i = 0; i < mult / 2; ++i) square_root *= p;
        if (mult % 2) squarefree *= p;
    };
    extract(2);
    extract(3);
    for (BigInt p = 5; p * p <= m && p <= 1000000; p += (p % 6 == 5) ? 2 : 4) extract(p);
    if (m > 1) {
        BigInt r = boost::multiprecision::sqrt(m);
        if (r * r == m)
            square_root *= r;
        else
            squarefree *= m;
    }
}

}  // namespace

Radical Radical::sqrt_of(const Rational& q) {
    if (q < 0) throw DomainError("sqrt_of: negative rational");
    if (q == 0) return Radical();
    // sqrt(p/q) = sqrt(p*q) / q
    BigInt radicand = numerator(q) * denominator(q);
    BigInt s, d;
    split_square(radicand, s, d);
    Radical out;
    out.set_term(d, Rational(s, denominator(q)));
    return out;
}

bool Radical::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

std::optional<Rational> Radical::as_rational() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first == 1) return terms_.begin()->second;
    return std::nullopt;
}

double Radical::to_double() const {
    double acc = 0.0;
    for (const auto& [d, c] : terms_)
        acc += ckrep::to_double(c) * std::sqrt(d.convert_to<double>());
    return acc;
}

std::string Radical::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (!first) os << (c >= 0 ? " + " : " - ");
        Rational mag = (!first && c < 0) ? Rational(-c) : c;
        if (d == 1) {
            os << to_string(mag);
        } else if (mag == 1) {
            os << "sqrt(" << d << ")";
        } else if (mag == -1) {
            os << "-sqrt(" << d << ")";
        } else {
            os << to_string(mag) << "*sqrt(" << d << ")";
        }
        first = false;
    }
    return os.str();
}

void Radical::set_term(const BigInt& d, const Rational& c) {
    if (c != 0) terms_[d] = c;
}

void Radical::add_term(const BigInt& d, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        terms_.emplace(d, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Radical Radical::operator-() const {
    Radical out;
    for (const auto& [d, c] : terms_) out.terms_.emplace(d, Rational(-c));
    return out;
}

Radical& Radical::operator+=(const Radical& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
}

Radical& Radical::operator-=(const Radical& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, Rational(-c));
    return *this;
}

Radical& Radical::operator*=(const Radical& o) {
    std::map<BigInt, Rational> result;
    for (const auto& [d1, c1] : terms_) {
        for (const auto& [d2, c2] : o.terms_) {
            // sqrt(d1)*sqrt(d2) = g*sqrt((d1/g)*(d2/g)), g = gcd(d1,d2);
            // the product of coprime squarefree numbers is squarefree.
            BigInt g = gcd(d1, d2);
            BigInt d = (d1 / g) * (d2 / g);
            Rational c = c1 * c2 * Rational(g);
            auto it = result.find(d);
            if (it == result.end()) {
                if (c != 0) result.emplace(d, c);
            } else {
                it->second += c;
                if (it->second == 0) result.erase(it);
            }
        }
    }
    terms_ = std::move(result);
    return *this;
}

Radical& Radical::operator/=(const Radical& o) {
    if (o.terms_.empty()) throw DomainError("radical division by zero");
    if (o.terms_.size() != 1)
        throw DomainError("radical division by multi-term radical is not supported");
    const auto& [d, c] = *o.terms_.begin();
    // 1/(c*sqrt(d)) = sqrt(d)/(c*d)
    Radical inv;
    inv.set_term(d, Rational(1) / (c * Rational(d)));
    return *this *= inv;
}

}  // namespace ckrep
