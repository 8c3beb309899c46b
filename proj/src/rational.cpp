#include "afinv/rational.hpp"

#include "afinv/errors.hpp"

#include <numeric>

namespace afinv {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
    if (text.empty()) {
        throw InvalidInput("malformed rational '" + std::string(whole) + "'");
    }
    std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
    if (start == text.size()) {
        throw InvalidInput("malformed rational '" + std::string(whole) + "'");
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw InvalidInput("malformed rational '" + std::string(whole) + "'");
        }
    }
    std::string digits(text.front() == '+' ? text.substr(1) : text);
    return Integer(digits);
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    Integer num = parse_integer(text.substr(0, slash), text);
    Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) {
        throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

std::string to_string(const Rational& q) {
    const auto& num = boost::multiprecision::numerator(q);
    const auto& den = boost::multiprecision::denominator(q);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

std::string to_string(const Integer& n) { return n.str(); }

Rational frac_mod1(const Rational& q) {
    const Integer num = boost::multiprecision::numerator(q);
    const Integer den = boost::multiprecision::denominator(q);
    Integer r = num % den;
    if (r < 0) {
        r += den;
    }
    return Rational(r, den);
}

Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

std::int64_t lcm_int(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::vector<std::int64_t> prime_divisors(const Integer& n) {
    Integer m = boost::multiprecision::abs(n);
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; Integer(p) * p <= m; ++p) {
        if (m % p == 0) {
            out.push_back(p);
            while (m % p == 0) {
                m /= p;
            }
        }
    }
    if (m > 1) {
        out.push_back(m.convert_to<std::int64_t>());
    }
    return out;
}

Rational strip_primes(const Rational& q, const std::vector<std::int64_t>& primes) {
    Integer num = boost::multiprecision::numerator(q);
    Integer den = boost::multiprecision::denominator(q);
    if (num == 0) {
        return q;
    }
    for (auto p : primes) {
        while (num % p == 0) {
            num /= p;
        }
        while (den % p == 0) {
            den /= p;
        }
    }
    return Rational(num, den);
}

bool is_s_unit(const Rational& q, const std::vector<std::int64_t>& primes) {
    if (q == 0) {
        return false;
    }
    return boost::multiprecision::abs(strip_primes(q, primes)) == 1;
}

} // namespace afinv
