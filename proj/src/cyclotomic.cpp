#include "afinv/cyclotomic.hpp"

#include "afinv/errors.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

namespace afinv {

namespace {

using Poly = std::vector<Integer>;

Poly poly_divide_exact(Poly num, const Poly& den) {
    // den is monic.
    Poly quot(num.size() - den.size() + 1, Integer(0));
    for (std::size_t i = quot.size(); i-- > 0;) {
        Integer c = num[i + den.size() - 1];
        quot[i] = c;
        if (c != 0) {
            for (std::size_t j = 0; j < den.size(); ++j) {
                num[i + j] -= c * den[j];
            }
        }
    }
    return quot;
}

struct Tables {
    Poly phi;
    // x^k reduced mod Phi_e, for 0 <= k < e, as rational vectors of length phi(e).
    std::vector<std::vector<Rational>> powers;
};

const Tables& tables(std::int64_t e) {
    static std::mutex mu;
    static std::map<std::int64_t, Tables> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(e);
    if (it != cache.end()) {
        return it->second;
    }
    Tables t;
    Poly num(static_cast<std::size_t>(e) + 1, Integer(0));
    num[0] = -1;
    num[static_cast<std::size_t>(e)] = 1;
    // Divisors' tables are populated first by tables_checked().
    for (std::int64_t d = 1; d < e; ++d) {
        if (e % d == 0) {
            auto c = cache.find(d);
            if (c == cache.end()) {
                throw InternalConsistency("cyclotomic tables built out of order");
            }
            num = poly_divide_exact(num, c->second.phi);
        }
    }
    t.phi = num;
    const std::size_t deg = t.phi.size() - 1;
    t.powers.reserve(static_cast<std::size_t>(e));
    std::vector<Rational> cur(deg, Rational(0));
    if (deg > 0) {
        cur[0] = 1;
    }
    for (std::int64_t k = 0; k < e; ++k) {
        t.powers.push_back(cur);
        // Multiply by x and reduce with the monic Phi_e.
        Rational top = deg > 0 ? cur[deg - 1] : Rational(0);
        for (std::size_t j = deg; j-- > 1;) {
            cur[j] = cur[j - 1];
        }
        if (deg > 0) {
            cur[0] = 0;
        }
        if (top != 0) {
            for (std::size_t j = 0; j < deg; ++j) {
                cur[j] -= top * Rational(t.phi[j]);
            }
        }
    }
    return cache.emplace(e, std::move(t)).first->second;
}

const Tables& tables_checked(std::int64_t e) {
    if (e < 1) {
        throw InvalidInput("cyclotomic order must be >= 1");
    }
    // Populate divisors bottom-up so each table can reuse smaller ones.
    for (std::int64_t d = 1; d < e; ++d) {
        if (e % d == 0) {
            (void)tables(d);
        }
    }
    return tables(e);
}

} // namespace

const std::vector<Integer>& cyclotomic_polynomial(std::int64_t e) { return tables_checked(e).phi; }

std::int64_t totient(std::int64_t e) {
    std::int64_t count = 0;
    for (std::int64_t k = 1; k <= e; ++k) {
        if (std::gcd(k, e) == 1) {
            ++count;
        }
    }
    return count;
}

CyclotomicNumber::CyclotomicNumber(std::int64_t order)
    : order_(order), coeffs_(tables_checked(order).phi.size() - 1, Rational(0)) {}

CyclotomicNumber::CyclotomicNumber(std::int64_t order, const Rational& constant)
    : CyclotomicNumber(order) {
    coeffs_[0] = constant;
}

CyclotomicNumber CyclotomicNumber::power_of_zeta(std::int64_t k, std::int64_t order) {
    const auto& t = tables_checked(order);
    std::int64_t r = ((k % order) + order) % order;
    CyclotomicNumber z(order);
    z.coeffs_ = t.powers[static_cast<std::size_t>(r)];
    return z;
}

CyclotomicNumber CyclotomicNumber::from_group_ring(const std::vector<std::int64_t>& counts) {
    const auto e = static_cast<std::int64_t>(counts.size());
    const auto& t = tables_checked(e);
    CyclotomicNumber z(e);
    for (std::size_t k = 0; k < counts.size(); ++k) {
        if (counts[k] == 0) {
            continue;
        }
        const auto& p = t.powers[k];
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (p[j] != 0) {
                z.coeffs_[j] += p[j] * counts[k];
            }
        }
    }
    return z;
}

CyclotomicNumber CyclotomicNumber::lift(std::int64_t target) const {
    if (target == order_) {
        return *this;
    }
    if (target % order_ != 0) {
        throw InvalidInput("cannot lift Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                           std::to_string(target) + ")");
    }
    const auto& t = tables_checked(target);
    const std::int64_t step = target / order_;
    CyclotomicNumber z(target);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) {
            continue;
        }
        const auto& p = t.powers[static_cast<std::size_t>((static_cast<std::int64_t>(k) * step) % target)];
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (p[j] != 0) {
                z.coeffs_[j] += coeffs_[k] * p[j];
            }
        }
    }
    return z;
}

namespace {

void align(CyclotomicNumber& a, CyclotomicNumber& b) {
    if (a.order() != b.order()) {
        const auto l = std::lcm(a.order(), b.order());
        a = a.lift(l);
        b = b.lift(l);
    }
}

} // namespace

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& other) {
    CyclotomicNumber b = other;
    align(*this, b);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        coeffs_[j] += b.coeffs_[j];
    }
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& other) {
    CyclotomicNumber b = other;
    align(*this, b);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        coeffs_[j] -= b.coeffs_[j];
    }
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& other) {
    CyclotomicNumber b = other;
    align(*this, b);
    const auto& t = tables_checked(order_);
    std::vector<Rational> raw(2 * coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] != 0) {
                raw[i + j] += coeffs_[i] * b.coeffs_[j];
            }
        }
    }
    std::vector<Rational> out(coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < raw.size(); ++k) {
        if (raw[k] == 0) {
            continue;
        }
        const auto& p = t.powers[k % static_cast<std::size_t>(order_)];
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (p[j] != 0) {
                out[j] += raw[k] * p[j];
            }
        }
    }
    coeffs_ = std::move(out);
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& scalar) {
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator/=(const Rational& scalar) {
    if (scalar == 0) {
        throw InvalidInput("cyclotomic division by zero");
    }
    for (auto& c : coeffs_) {
        c /= scalar;
    }
    return *this;
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& other) const {
    if (order_ == other.order_) {
        return coeffs_ == other.coeffs_;
    }
    CyclotomicNumber a = *this;
    CyclotomicNumber b = other;
    align(a, b);
    return a.coeffs_ == b.coeffs_;
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : coeffs_) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

std::optional<Rational> CyclotomicNumber::as_rational() const {
    for (std::size_t j = 1; j < coeffs_.size(); ++j) {
        if (coeffs_[j] != 0) {
            return std::nullopt;
        }
    }
    return coeffs_[0];
}

std::optional<Integer> CyclotomicNumber::as_integer() const {
    auto q = as_rational();
    if (!q || boost::multiprecision::denominator(*q) != 1) {
        return std::nullopt;
    }
    return boost::multiprecision::numerator(*q);
}

std::complex<double> CyclotomicNumber::to_complex() const {
    std::complex<double> sum{0.0, 0.0};
    const double step = 2.0 * std::numbers::pi / static_cast<double>(order_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] != 0) {
            sum += coeffs_[k].convert_to<double>() * std::polar(1.0, step * static_cast<double>(k));
        }
    }
    return sum;
}

CyclotomicNumber root_of_unity(const Rational& theta, std::int64_t e) {
    Rational t = frac_mod1(theta);
    Rational scaled = t * e;
    if (boost::multiprecision::denominator(scaled) != 1) {
        throw InvalidInput("denominator of " + to_string(theta) + " does not divide " + std::to_string(e));
    }
    return CyclotomicNumber::power_of_zeta(boost::multiprecision::numerator(scaled).convert_to<std::int64_t>(), e);
}

std::optional<Integer> as_integer(const CyclotomicNumber& z) { return z.as_integer(); }

} // namespace afinv
