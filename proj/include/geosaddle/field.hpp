// Evaluation interface consumed by the path classifier and the certification
// engine. Expression-backed fields supply values, jets and an exact
// polynomial form; custom fields (piecewise definitions) may supply values
// only, in which case the engine falls back to sampling everywhere.
#pragma once

#include <geosaddle/bipoly.hpp>
#include <geosaddle/errors.hpp>
#include <geosaddle/expr.hpp>
#include <geosaddle/jet.hpp>
#include <geosaddle/vec2.hpp>

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>

namespace geosaddle {

class Field {
public:
    virtual ~Field() = default;

    virtual double value(Vec2 p) const = 0;

    /// Second-order data at p, or nullopt where unavailable (kinks, domain
    /// holes, or fields that cannot differentiate themselves).
    virtual std::optional<Jet2> jet(Vec2 p) const { return std::nullopt; }

    /// Exact polynomial form, or nullptr when there is none.
    virtual const BiPoly* polynomial() const { return nullptr; }

    virtual std::string describe() const = 0;
};

class ExprField final : public Field {
public:
    explicit ExprField(Expr e) : expr_(std::move(e))
    {
        if (is_polynomial(expr_))
            poly_ = to_bipoly(expr_);
    }

    double value(Vec2 p) const override { return eval_value(expr_, p); }

    std::optional<Jet2> jet(Vec2 p) const override
    {
        try {
            return eval_jet(expr_, p);
        } catch (const NondifferentiablePoint&) {
            return std::nullopt;
        } catch (const DomainError&) {
            return std::nullopt;
        }
    }

    const BiPoly* polynomial() const override
    {
        return poly_ ? &*poly_ : nullptr;
    }

    std::string describe() const override { return to_string(expr_); }

    const Expr& expr() const { return expr_; }

private:
    Expr expr_;
    std::optional<BiPoly> poly_;
};

/// Value-only field defined by a callable; used for functions outside the
/// expression grammar.
class CallableField final : public Field {
public:
    CallableField(std::function<double(Vec2)> fn, std::string description)
        : fn_(std::move(fn)), description_(std::move(description))
    {
    }

    double value(Vec2 p) const override { return fn_(p); }
    std::string describe() const override { return description_; }

private:
    std::function<double(Vec2)> fn_;
    std::string description_;
};

} // namespace geosaddle
