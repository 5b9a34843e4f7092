#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hopfkiss {

/// Malformed argument or unparseable input.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Operation undefined for the given value (division by zero, level 4 inverse).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An exact result would leave the field Q(sqrt 2).
class FieldOverflow : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/**
 * Element rat + irr*sqrt(2) of the real quadratic field Q(sqrt 2).
 *
 * Both components are GMP rationals kept canonical (lowest terms, positive
 * denominator), so equality is componentwise. Ordering is by real value and
 * is decided exactly.
 */
class ExactScalar {
public:
    ExactScalar() = default;
    ExactScalar(long value) : rat_(value) {}                   // NOLINT
    explicit ExactScalar(mpq_class rat, mpq_class irr = 0);

    static ExactScalar fraction(long num, long den);
    /// p/q * sqrt(2)
    static ExactScalar sqrt2(long num = 1, long den = 1);

    const mpq_class& rat() const { return rat_; }
    const mpq_class& irr() const { return irr_; }

    bool is_zero() const { return sgn(rat_) == 0 && sgn(irr_) == 0; }
    bool is_rational() const { return sgn(irr_) == 0; }
    bool is_integer() const { return is_rational() && rat_.get_den() == 1; }

    /// -1, 0 or +1.
    int sign() const;

    /// Galois conjugate rat - irr*sqrt(2).
    ExactScalar conjugate() const { return ExactScalar(rat_, -irr_); }
    /// Field norm rat^2 - 2 irr^2.
    mpq_class field_norm() const { return rat_ * rat_ - 2 * irr_ * irr_; }

    ExactScalar inverse() const;

    /// Non-negative square root if it lies in Q(sqrt 2).
    std::optional<ExactScalar> try_sqrt() const;

    double to_double() const;

    /// Canonical text form: "p/q" or "p/q+r/s√2" / "p/q-r/s√2".
    std::string to_string() const;
    /// Strict parser for exactly the canonical grammar of to_string().
    static ExactScalar parse(std::string_view text);

    ExactScalar operator-() const { return ExactScalar(-rat_, -irr_); }
    ExactScalar& operator+=(const ExactScalar& o);
    ExactScalar& operator-=(const ExactScalar& o);
    ExactScalar& operator*=(const ExactScalar& o);
    ExactScalar& operator/=(const ExactScalar& o);

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
        return a.rat_ == b.rat_ && a.irr_ == b.irr_;
    }
    friend std::strong_ordering operator<=>(const ExactScalar& a, const ExactScalar& b);

    std::size_t hash() const;

private:
    mpq_class rat_{0};
    mpq_class irr_{0};
};

struct ExactScalarHash {
    std::size_t operator()(const ExactScalar& x) const { return x.hash(); }
};

/// Exact square root of a non-negative rational, if it is rational.
std::optional<mpq_class> rational_sqrt(const mpq_class& q);

}  // namespace hopfkiss
