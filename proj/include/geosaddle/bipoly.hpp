// Sparse bivariate polynomials in (x, y) with exact rational coefficients.
// Backs the exact classification route: composition with univariate paths,
// recentering at a point, and extraction of the lowest homogeneous part.
#pragma once

#include <geosaddle/rational.hpp>
#include <geosaddle/unipoly.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace geosaddle {

class BiPoly {
public:
    // (x-degree, y-degree) -> coefficient
    using TermMap = std::map<std::pair<int, int>, Rational>;

    BiPoly() = default;

    explicit BiPoly(TermMap terms) : terms_(std::move(terms)) { prune(); }

    static BiPoly constant(Rational c)
    {
        BiPoly p;
        if (c != 0)
            p.terms_[{0, 0}] = std::move(c);
        return p;
    }

    static BiPoly x() { return monomial(Rational(1), 1, 0); }
    static BiPoly y() { return monomial(Rational(1), 0, 1); }

    static BiPoly monomial(Rational c, int dx, int dy)
    {
        BiPoly p;
        if (c != 0)
            p.terms_[{dx, dy}] = std::move(c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    const TermMap& terms() const { return terms_; }

    int total_degree() const
    {
        int d = -1;
        for (const auto& [k, c] : terms_)
            d = std::max(d, k.first + k.second);
        return d;
    }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b)
    {
        BiPoly out = a;
        for (const auto& [k, c] : b.terms_)
            out.terms_[k] += c;
        out.prune();
        return out;
    }

    friend BiPoly operator-(const BiPoly& a, const BiPoly& b)
    {
        BiPoly out = a;
        for (const auto& [k, c] : b.terms_)
            out.terms_[k] -= c;
        out.prune();
        return out;
    }

    BiPoly operator-() const
    {
        BiPoly out = *this;
        for (auto& [k, c] : out.terms_)
            c = -c;
        return out;
    }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b)
    {
        BiPoly out;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                out.terms_[{ka.first + kb.first, ka.second + kb.second}] +=
                    ca * cb;
        out.prune();
        return out;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b)
    {
        return a.terms_ == b.terms_;
    }

    BiPoly pow(unsigned k) const
    {
        BiPoly result = constant(Rational(1));
        BiPoly base = *this;
        while (k) {
            if (k & 1u)
                result = result * base;
            base = base * base;
            k >>= 1u;
        }
        return result;
    }

    Rational eval(const Rational& px, const Rational& py) const
    {
        Rational acc(0);
        for (const auto& [k, c] : terms_) {
            Rational term = c;
            for (int i = 0; i < k.first; ++i)
                term *= px;
            for (int i = 0; i < k.second; ++i)
                term *= py;
            acc += term;
        }
        return acc;
    }

    double eval(double px, double py) const
    {
        double acc = 0.0;
        for (const auto& [k, c] : terms_) {
            double term = to_double(c);
            for (int i = 0; i < k.first; ++i)
                term *= px;
            for (int i = 0; i < k.second; ++i)
                term *= py;
            acc += term;
        }
        return acc;
    }

    /// Exact composition with a parametric path: f(x(t), y(t)).
    UniPoly compose(const UniPoly& x_of_t, const UniPoly& y_of_t) const
    {
        // Horner over x-degree with cached y powers.
        int max_dy = 0;
        for (const auto& [k, c] : terms_)
            max_dy = std::max(max_dy, k.second);
        std::vector<UniPoly> ypow(max_dy + 1);
        ypow[0] = UniPoly::constant(Rational(1));
        for (int j = 1; j <= max_dy; ++j)
            ypow[j] = ypow[j - 1] * y_of_t;

        // Group terms by descending x-degree.
        std::map<int, UniPoly, std::greater<>> rows;
        for (const auto& [k, c] : terms_) {
            auto [it, inserted] = rows.try_emplace(k.first);
            it->second = it->second + c * ypow[k.second];
        }
        UniPoly acc;
        int prev_deg = -1;
        for (const auto& [dx, row] : rows) {
            if (prev_deg >= 0)
                for (int i = 0; i < prev_deg - dx; ++i)
                    acc = acc * x_of_t;
            acc = acc + row;
            prev_deg = dx;
        }
        if (prev_deg > 0)
            for (int i = 0; i < prev_deg; ++i)
                acc = acc * x_of_t;
        return acc;
    }

    /// f(gx(x,y), gy(x,y)); used for recentering via x -> px + x, y -> py + y.
    BiPoly substitute(const BiPoly& gx, const BiPoly& gy) const
    {
        int max_dx = 0, max_dy = 0;
        for (const auto& [k, c] : terms_) {
            max_dx = std::max(max_dx, k.first);
            max_dy = std::max(max_dy, k.second);
        }
        std::vector<BiPoly> xp(max_dx + 1), yp(max_dy + 1);
        xp[0] = constant(Rational(1));
        yp[0] = constant(Rational(1));
        for (int i = 1; i <= max_dx; ++i)
            xp[i] = xp[i - 1] * gx;
        for (int j = 1; j <= max_dy; ++j)
            yp[j] = yp[j - 1] * gy;
        BiPoly acc;
        for (const auto& [k, c] : terms_)
            acc = acc + constant(c) * xp[k.first] * yp[k.second];
        return acc;
    }

    /// Taylor recentering: g(x, y) = f(cx + x, cy + y), exact.
    BiPoly recentered(const Rational& cx, const Rational& cy) const
    {
        return substitute(constant(cx) + x(), constant(cy) + y());
    }

    BiPoly derivative_x() const
    {
        BiPoly out;
        for (const auto& [k, c] : terms_)
            if (k.first > 0)
                out.terms_[{k.first - 1, k.second}] = Rational(k.first) * c;
        return out;
    }

    BiPoly derivative_y() const
    {
        BiPoly out;
        for (const auto& [k, c] : terms_)
            if (k.second > 0)
                out.terms_[{k.first, k.second - 1}] = Rational(k.second) * c;
        return out;
    }

    /// Sum of the terms of minimal total degree (zero polynomial for zero).
    BiPoly lowest_homogeneous_part() const
    {
        int dmin = -1;
        for (const auto& [k, c] : terms_) {
            int d = k.first + k.second;
            if (dmin < 0 || d < dmin)
                dmin = d;
        }
        BiPoly out;
        for (const auto& [k, c] : terms_)
            if (k.first + k.second == dmin)
                out.terms_[k] = c;
        return out;
    }

    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        for (const auto& [k, c] : terms_) {
            std::string term = geosaddle::to_string(abs(c));
            std::string vars;
            if (k.first > 0)
                vars += "x" + (k.first > 1 ? "^" + std::to_string(k.first)
                                           : std::string());
            if (k.second > 0) {
                if (!vars.empty())
                    vars += "*";
                vars += "y" + (k.second > 1 ? "^" + std::to_string(k.second)
                                            : std::string());
            }
            if (!vars.empty()) {
                if (term == "1")
                    term = vars;
                else
                    term += "*" + vars;
            }
            if (s.empty())
                s = (c < 0 ? "-" : "") + term;
            else
                s += (c < 0 ? " - " : " + ") + term;
        }
        return s;
    }

private:
    void prune()
    {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = it->second == 0 ? terms_.erase(it) : std::next(it);
    }

    TermMap terms_;
};

} // namespace geosaddle
