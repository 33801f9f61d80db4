// Exact rational arithmetic used by the polynomial layer.
//
// Every finite double is a dyadic rational, so conversion from double is
// exact; conversion back rounds once. Decimal literals d.ddd become d/10^k.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace geosaddle {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Exact conversion; throws on NaN/Inf.
inline Rational rational_from_double(double x)
{
    if (!std::isfinite(x))
        throw std::invalid_argument("rational_from_double: non-finite input");
    if (x == 0.0)
        return Rational(0);
    int exp = 0;
    double m = std::frexp(x, &exp); // x = m * 2^exp, |m| in [0.5, 1)
    // 53 doublings make the mantissa integral.
    auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));
    exp -= 53;
    Rational r(mant);
    if (exp >= 0)
        r *= Rational(BigInt(1) << exp);
    else
        r /= Rational(BigInt(1) << -exp);
    return r;
}

/// "12", "-3", "2.75" -> exact rational (decimals as d/10^k).
inline Rational rational_from_decimal(const std::string& text)
{
    auto dot = text.find('.');
    if (dot == std::string::npos)
        return Rational(BigInt(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_len = text.size() - dot - 1;
    BigInt denom = 1;
    for (std::size_t i = 0; i < frac_len; ++i)
        denom *= 10;
    return Rational(BigInt(digits), denom);
}

inline int sign(const Rational& r) { return r.sign(); }

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// "p/q" or "p" when q == 1.
inline std::string to_string(const Rational& r)
{
    std::string s = numerator(r).str();
    if (denominator(r) != 1)
        s += "/" + denominator(r).str();
    return s;
}

} // namespace geosaddle
