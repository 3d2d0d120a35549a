#include "jumplab/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace jumplab {

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mpq_class(mpz_class(std::to_string(numerator)), mpz_class(std::to_string(denominator)));
    value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) {
    value_.canonicalize();
}

Rational::Rational(const mpz_class& value) : value_(value) {}

Rational Rational::parse(std::string_view text) {
    const std::string s(text);
    const auto slash = s.find('/');
    auto parse_int = [&](const std::string& part) {
        if (part.empty()) {
            throw std::invalid_argument("malformed rational '" + s + "'");
        }
        const std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (start == part.size()) {
            throw std::invalid_argument("malformed rational '" + s + "'");
        }
        for (std::size_t i = start; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') {
                throw std::invalid_argument("malformed rational '" + s + "'");
            }
        }
        return mpz_class(part[0] == '+' ? part.substr(1) : part);
    };
    if (slash == std::string::npos) {
        return Rational(parse_int(s));
    }
    const mpz_class num = parse_int(s.substr(0, slash));
    const mpz_class den = parse_int(s.substr(slash + 1));
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    return Rational(mpq_class(num, den));
}

std::string Rational::str() const {
    if (value_.get_den() == 1) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational operator-(const Rational& x) {
    return Rational(mpq_class(-x.value_));
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.str();
}

Rational abs(const Rational& x) {
    return x.sign() < 0 ? -x : x;
}

} // namespace jumplab
