#ifndef JUMPLAB_RATIONAL_HPP
#define JUMPLAB_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <Eigen/Core>

namespace jumplab {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Operators return plain values, never GMP expression templates.
class Rational {
public:
    Rational() = default;
    Rational(int value) : value_(value) {}  // NOLINT: implicit, Eigen needs Scalar(0)
    Rational(long value) : value_(value) {}  // NOLINT
    Rational(long long value) : value_(static_cast<long>(value)) {}  // NOLINT
    Rational(unsigned long value) : value_(value) {}  // NOLINT
    Rational(std::int64_t numerator, std::int64_t denominator);
    explicit Rational(const mpq_class& value);
    explicit Rational(const mpz_class& value);

    /// Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view text);

    const mpq_class& gmp() const { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    /// "p/q", or "p" when the denominator is one.
    std::string str() const;
    double to_double() const { return value_.get_d(); }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& x);

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& x);

private:
    mpq_class value_;
};

Rational abs(const Rational& x);

} // namespace jumplab

namespace Eigen {

template <>
struct NumTraits<jumplab::Rational> : GenericNumTraits<jumplab::Rational> {
    using Real = jumplab::Rational;
    using NonInteger = jumplab::Rational;
    using Literal = jumplab::Rational;
    using Nested = jumplab::Rational;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 8,
        MulCost = 16
    };

    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen

#endif // JUMPLAB_RATIONAL_HPP
