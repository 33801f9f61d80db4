// Univariate polynomials in t with exact rational coefficients, stored in
// ascending degree order with a nonzero leading coefficient (unless zero).
#pragma once

#include <geosaddle/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace geosaddle {

class UniPoly {
public:
    UniPoly() = default;

    explicit UniPoly(Rational constant)
    {
        if (constant != 0)
            coeffs_.push_back(std::move(constant));
    }

    explicit UniPoly(std::vector<Rational> ascending_coeffs)
        : coeffs_(std::move(ascending_coeffs))
    {
        trim();
    }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(Rational c) { return UniPoly(std::move(c)); }

    /// The monomial c * t^k.
    static UniPoly monomial(Rational c, std::size_t k)
    {
        if (c == 0)
            return UniPoly();
        std::vector<Rational> v(k + 1, Rational(0));
        v[k] = std::move(c);
        return UniPoly(std::move(v));
    }

    /// t itself.
    static UniPoly t() { return monomial(Rational(1), 1); }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational& coeff(std::size_t k) const
    {
        static const Rational kZero(0);
        return k < coeffs_.size() ? coeffs_[k] : kZero;
    }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// (degree, coefficient) of the lowest-degree nonzero term.
    std::optional<std::pair<std::size_t, Rational>> lowest_term() const
    {
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            if (coeffs_[k] != 0)
                return std::make_pair(k, coeffs_[k]);
        return std::nullopt;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b)
    {
        std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()),
                                  Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            out[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
            out[i] += b.coeffs_[i];
        return UniPoly(std::move(out));
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b)
    {
        std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()),
                                  Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            out[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
            out[i] -= b.coeffs_[i];
        return UniPoly(std::move(out));
    }

    UniPoly operator-() const
    {
        std::vector<Rational> out(coeffs_);
        for (auto& c : out)
            c = -c;
        return UniPoly(std::move(out));
    }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return UniPoly();
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1,
                                  Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return UniPoly(std::move(out));
    }

    friend UniPoly operator*(const Rational& s, const UniPoly& a)
    {
        if (s == 0)
            return UniPoly();
        std::vector<Rational> out(a.coeffs_);
        for (auto& c : out)
            c *= s;
        return UniPoly(std::move(out));
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b)
    {
        return a.coeffs_ == b.coeffs_;
    }

    UniPoly pow(unsigned k) const
    {
        UniPoly result = constant(Rational(1));
        UniPoly base = *this;
        while (k) {
            if (k & 1u)
                result = result * base;
            base = base * base;
            k >>= 1u;
        }
        return result;
    }

    UniPoly derivative() const
    {
        if (coeffs_.size() <= 1)
            return UniPoly();
        std::vector<Rational> out(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            out[i - 1] = Rational(i) * coeffs_[i];
        return UniPoly(std::move(out));
    }

    Rational eval(const Rational& t) const
    {
        Rational acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            acc = acc * t + coeffs_[i];
        return acc;
    }

    double eval(double t) const
    {
        double acc = 0.0;
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            acc = acc * t + to_double(coeffs_[i]);
        return acc;
    }

    /// this(g(t)), exact.
    UniPoly compose(const UniPoly& g) const
    {
        UniPoly acc;
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            acc = acc * g + constant(coeffs_[i]);
        return acc;
    }

    std::string to_string(const std::string& var = "t") const
    {
        if (is_zero())
            return "0";
        std::string s;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] == 0)
                continue;
            std::string term = geosaddle::to_string(abs(coeffs_[k]));
            if (k >= 1) {
                if (term == "1")
                    term.clear();
                else
                    term += "*";
                term += var;
                if (k >= 2)
                    term += "^" + std::to_string(k);
            }
            if (s.empty())
                s = (coeffs_[k] < 0 ? "-" : "") + term;
            else
                s += (coeffs_[k] < 0 ? " - " : " + ") + term;
        }
        return s;
    }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_; // ascending degree
};

/// Remainder of a by b (b nonzero), exact division algorithm.
inline UniPoly poly_rem(UniPoly a, const UniPoly& b)
{
    const int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        Rational factor = a.coeff(a.degree()) / b.coeff(db);
        a = a - UniPoly::monomial(factor, a.degree() - db) * b;
    }
    return a;
}

/// Monic gcd; gcd(0, 0) = 0.
inline UniPoly poly_gcd(UniPoly a, UniPoly b)
{
    while (!b.is_zero()) {
        UniPoly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        Rational lead = a.coeff(a.degree());
        a = (Rational(1) / lead) * a;
    }
    return a;
}

/// Exact decision: does p have a real root in the closed interval [lo, hi]?
/// Sturm's theorem on the square-free part. The zero polynomial vanishes
/// everywhere, so it reports true.
inline bool has_real_root_in(const UniPoly& p, const Rational& lo,
                             const Rational& hi)
{
    if (p.is_zero())
        return true;
    if (p.eval(lo) == 0 || p.eval(hi) == 0)
        return true;
    if (p.degree() == 0)
        return false;

    UniPoly sf = p;
    UniPoly g = poly_gcd(p, p.derivative());
    if (g.degree() > 0) {
        // Square-free part p / gcd(p, p'): exact since g divides p.
        std::vector<Rational> qc(p.degree() - g.degree() + 1, Rational(0));
        UniPoly rem = p;
        while (!rem.is_zero() && rem.degree() >= g.degree()) {
            Rational factor = rem.coeff(rem.degree()) / g.coeff(g.degree());
            qc[rem.degree() - g.degree()] = factor;
            rem = rem - UniPoly::monomial(factor, rem.degree() - g.degree()) * g;
        }
        sf = UniPoly(std::move(qc));
    }
    if (sf.degree() == 0)
        return false;

    std::vector<UniPoly> chain{sf, sf.derivative()};
    while (!chain.back().is_zero()) {
        UniPoly r = poly_rem(chain[chain.size() - 2], chain.back());
        chain.push_back(-r);
    }
    chain.pop_back();

    // Endpoints are not roots of sf here, so V(lo) - V(hi) counts (lo, hi).
    auto sign_changes = [&](const Rational& x) {
        int changes = 0, prev = 0;
        for (const auto& q : chain) {
            int s = sign(q.eval(x));
            if (s == 0)
                continue;
            if (prev != 0 && s != prev)
                ++changes;
            prev = s;
        }
        return changes;
    };

    return sign_changes(lo) - sign_changes(hi) > 0;
}

} // namespace geosaddle
