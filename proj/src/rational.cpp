#include "ckrep/rational.hpp"

#include "ckrep/errors.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace ckrep {

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw DomainError("cannot convert non-finite double to rational");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    // mant in [0.5, 1); 53 shifts make it an integer.
    double mant = std::frexp(x, &exp);
    BigInt num = static_cast<std::int64_t>(std::ldexp(mant, 53));
    exp -= 53;
    Rational r(num);
    if (exp >= 0) {
        r *= Rational(BigInt(1) << exp);
    } else {
        r /= Rational(BigInt(1) << (-exp));
    }
    return r;
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Rational parse_decimal(const std::string& text) {
    // [sign] digits [. digits] [e[sign]digits]
    std::string s = text;
    bool neg = false;
    std::size_t pos = 0;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = s[pos] == '-';
        ++pos;
    }
    std::string intpart, fracpart, exppart;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) intpart += s[pos++];
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) fracpart += s[pos++];
    }
    long expval = 0;
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
        ++pos;
        bool eneg = false;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            eneg = s[pos] == '-';
            ++pos;
        }
        std::string digits;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits += s[pos++];
        if (digits.empty()) throw ParseError("malformed exponent in '" + text + "'");
        expval = std::strtol(digits.c_str(), nullptr, 10);
        if (eneg) expval = -expval;
    }
    if (pos != s.size() || (intpart.empty() && fracpart.empty()))
        throw ParseError("malformed number '" + text + "'");

    BigInt mant = intpart.empty() ? BigInt(0) : BigInt(intpart);
    for (char c : fracpart) {
        mant *= 10;
        mant += c - '0';
    }
    long scale = expval - static_cast<long>(fracpart.size());
    Rational r(mant);
    BigInt ten(10);
    if (scale > 0)
        r *= Rational(boost::multiprecision::pow(ten, static_cast<unsigned>(scale)));
    else if (scale < 0)
        r /= Rational(boost::multiprecision::pow(ten, static_cast<unsigned>(-scale)));
    return neg ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty number");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        bool neg = false;
        if (!num.empty() && (num[0] == '+' || num[0] == '-')) {
            neg = num[0] == '-';
            num = num.substr(1);
        }
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed fraction '" + text + "'");
        BigInt d(den);
        if (d == 0) throw ParseError("zero denominator in '" + text + "'");
        Rational r(BigInt(num), d);
        return neg ? Rational(-r) : r;
    }
    return parse_decimal(s);
}

std::vector<Rational> parse_rational_vector(const std::string& text) {
    std::string normalized = text;
    for (char& c : normalized)
        if (c == ',') c = ' ';
    std::istringstream in(normalized);
    std::vector<Rational> out;
    std::string tok;
    while (in >> tok) out.push_back(parse_rational(tok));
    return out;
}

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << "/" << denominator(q);
    return os.str();
}

Rational rational_approx(double x, std::int64_t max_den, double stop_tol) {
    if (!std::isfinite(x)) throw DomainError("rational_approx: non-finite input");
    const bool neg = x < 0;
    double y = std::abs(x);

    // Convergents p_k/q_k of the continued fraction of y, seeded with the
    // conventional h_{-1}/k_{-1} = 1/0 and h_{-2}/k_{-2} = 0/1.
    BigInt p_prev = 0, q_prev = 1;
    BigInt p = 1, q = 0;
    double rem = y;
    for (int k = 0; k < 64; ++k) {
        if (rem > static_cast<double>(std::numeric_limits<std::int64_t>::max())) break;
        const auto term = static_cast<std::int64_t>(std::floor(rem));
        BigInt p_next = term * p + p_prev;
        BigInt q_next = term * q + q_prev;
        if (q_next > max_den) break;
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
        const double approx = Rational(p, q).convert_to<double>();
        if (std::abs(y - approx) <= stop_tol) break;
        const double frac = rem - std::floor(rem);
        if (frac <= 0.0) break;
        rem = 1.0 / frac;
    }
    Rational r(p, q);
    return neg ? Rational(-r) : r;
}

}  // namespace ckrep
