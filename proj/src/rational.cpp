#include "mvl/rational.hpp"

#include "mvl/errors.hpp"

#include <cctype>

namespace mvl {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw ParseError("not a rational numeral: '" + std::string(whole) + "'");
    Integer value{std::string(s)};
    return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty rational numeral");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(s.substr(0, slash), text);
        std::string_view den_text = s.substr(slash + 1);
        if (!all_digits(den_text)) throw ParseError("bad denominator in '" + std::string(text) + "'");
        Integer den(std::string{den_text});
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_text = s.substr(e + 1);
        std::string_view digits = exp_text;
        if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) digits.remove_prefix(1);
        if (!all_digits(digits) || digits.size() > 6) {
            throw ParseError("bad exponent in '" + std::string(text) + "'");
        }
        exponent = std::stoll(std::string(exp_text));
        s = s.substr(0, e);
    }
    std::string_view int_part = s;
    std::string_view frac_part;
    if (auto dot_pos = s.find('.'); dot_pos != std::string_view::npos) {
        int_part = s.substr(0, dot_pos);
        frac_part = s.substr(dot_pos + 1);
    }
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
        throw ParseError("not a rational numeral: '" + std::string(text) + "'");
    }
    std::string digits = std::string(int_part) + std::string(frac_part);
    Integer mantissa(digits.empty() ? std::string("0") : digits);
    exponent -= static_cast<long long>(frac_part.size());
    Rational value(mantissa);
    if (exponent > 0) value *= Rational(pow_int(10, static_cast<std::size_t>(exponent)));
    if (exponent < 0) value /= Rational(pow_int(10, static_cast<std::size_t>(-exponent)));
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
    const Integer& num = boost::multiprecision::numerator(value);
    const Integer& den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string to_string(const Integer& value) { return value.str(); }

Integer pow_int(unsigned base, std::size_t exponent) {
    return boost::multiprecision::pow(Integer(base), static_cast<unsigned>(exponent));
}

int sgn(const Rational& value) { return value.sign(); }

Rational dot(std::span<const Rational> lhs, std::span<const Rational> rhs) {
    if (lhs.size() != rhs.size()) throw DomainError("dot product of vectors with different lengths");
    Rational sum = 0;
    for (std::size_t i = 0; i < lhs.size(); ++i) sum += lhs[i] * rhs[i];
    return sum;
}

}  // namespace mvl
