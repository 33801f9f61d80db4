// Exception types shared across the library.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace geosaddle {

/// Malformed expression text. Carries the byte offset of the failure and
/// the tokens that would have been accepted there.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::size_t offset, std::vector<std::string> expected)
        : std::runtime_error(make_message(offset, expected)),
          offset_(offset),
          expected_(std::move(expected))
    {
    }

    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    static std::string make_message(std::size_t offset,
                                    const std::vector<std::string>& expected)
    {
        std::string msg = "syntax error at offset " + std::to_string(offset);
        if (!expected.empty()) {
            msg += ", expected ";
            for (std::size_t i = 0; i < expected.size(); ++i) {
                if (i)
                    msg += " | ";
                msg += expected[i];
            }
        }
        return msg;
    }

    std::size_t offset_;
    std::vector<std::string> expected_;
};

class UnknownFunction : public std::runtime_error {
public:
    UnknownFunction(std::size_t offset, const std::string& name)
        : std::runtime_error("unknown function '" + name + "' at offset "
                             + std::to_string(offset)),
          offset_(offset),
          name_(name)
    {
    }

    std::size_t offset() const { return offset_; }
    const std::string& name() const { return name_; }

private:
    std::size_t offset_;
    std::string name_;
};

/// Exponent of ^ must be a non-negative integer literal.
class NonIntegerExponent : public std::runtime_error {
public:
    explicit NonIntegerExponent(std::size_t offset)
        : std::runtime_error("exponent at offset " + std::to_string(offset)
                             + " is not a non-negative integer literal"),
          offset_(offset)
    {
    }

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Division by zero or a non-finite intermediate during evaluation.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Abs/Min/Max evaluated with its kink argument inside the tolerance band;
/// no derivative is fabricated there.
class NondifferentiablePoint : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operation requires a polynomial expression (Const/Var/Neg/Add/Sub/Mul/IntPow).
class NotPolynomial : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroDirection : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Path derivative vanishes somewhere on the parameter domain.
class NotRegular : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DifferentCenters : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// indefinite_witness called on a form with ac - b^2 >= 0.
class NotIndefinite : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace geosaddle
