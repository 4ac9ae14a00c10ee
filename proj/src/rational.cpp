#include "hullvol/rational.hpp"

#include <cmath>
#include <cstdlib>

#include "hullvol/errors.hpp"

namespace hullvol {

namespace {

// strict base-10 integer parse; avoids cpp_int's octal/hex prefix handling
// (a leading zero must not change the base)
Int int_from_decimal(const std::string& s) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size()) throw ParseError("bad integer '" + s + "'");
    Int v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw ParseError("bad integer '" + s + "'");
        v = v * 10 + (s[i] - '0');
    }
    return neg ? -v : v;
}

}  // namespace

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational string");
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            Int num = int_from_decimal(s.substr(0, slash));
            Int den = int_from_decimal(s.substr(slash + 1));
            if (den == 0) throw ParseError("zero denominator in '" + s + "'");
            return Rational(num, den);
        }
        // decimal, possibly with exponent
        std::string body = s;
        long exp10 = 0;
        auto epos = body.find_first_of("eE");
        if (epos != std::string::npos) {
            exp10 = std::stol(body.substr(epos + 1));
            body = body.substr(0, epos);
        }
        auto dot = body.find('.');
        std::string digits = body;
        long frac_len = 0;
        if (dot != std::string::npos) {
            frac_len = static_cast<long>(body.size() - dot - 1);
            digits = body.substr(0, dot) + body.substr(dot + 1);
        }
        if (digits.empty() || digits == "-" || digits == "+")
            throw ParseError("bad rational '" + s + "'");
        Int num = int_from_decimal(digits);
        Rational r(num, 1);
        long shift = exp10 - frac_len;
        Int ten(10);
        if (shift > 0)
            r *= Rational(boost::multiprecision::pow(ten, static_cast<unsigned>(shift)), 1);
        else if (shift < 0)
            r /= Rational(boost::multiprecision::pow(ten, static_cast<unsigned>(-shift)), 1);
        return r;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad rational '" + s + "'");
    }
}

std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw ParseError("non-finite double");
    return Rational(x);
}

Rational snap_to_grid(double x, int bits) {
    double scaled = std::ldexp(x, bits);
    double rounded = std::nearbyint(scaled);
    Int num = numerator(rational_from_double(rounded));
    Int den = Int(1) << bits;
    return Rational(num, den);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace hullvol
