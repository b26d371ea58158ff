#include "novikov/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace novikov {

Rational::Rational(std::int64_t n) {
    // mpq_class has no int64 constructor on every platform; go through mpz.
    value_ = mpq_class(mpz_class(std::to_string(n)));
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw std::invalid_argument("Rational: zero denominator");
    }
    value_ = mpq_class(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                                 : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw std::invalid_argument("Rational: malformed literal '" + std::string(text) + "'");
    }
    mpz_class n{std::string(num)};
    mpz_class d{std::string(den)};
    if (d == 0) {
        throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
    }
    if (negative) n = -n;
    return Rational(mpq_class(n, d));
}

long double Rational::to_long_double() const {
    const mpz_class& num = value_.get_num();
    const mpz_class& den = value_.get_den();
    if (num.fits_slong_p() && den.fits_slong_p()) {
        return static_cast<long double>(num.get_si()) / static_cast<long double>(den.get_si());
    }
    return value_.get_d();
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
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
    if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace novikov
