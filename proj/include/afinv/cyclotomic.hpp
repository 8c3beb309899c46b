#pragma once

#include "afinv/rational.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace afinv {

/// Integer coefficients of the e-th cyclotomic polynomial, lowest degree first.
const std::vector<Integer>& cyclotomic_polynomial(std::int64_t e);

/// Euler's totient.
std::int64_t totient(std::int64_t e);

/// An element of Q(zeta_e) = Q[x]/Phi_e(x), stored in the power basis 1, x, ..., x^(phi(e)-1).
/// The representation is canonical, so equality is coefficient equality.
class CyclotomicNumber {
public:
    CyclotomicNumber() : CyclotomicNumber(1) {}
    explicit CyclotomicNumber(std::int64_t order);
    CyclotomicNumber(std::int64_t order, const Rational& constant);

    static CyclotomicNumber zero(std::int64_t order) { return CyclotomicNumber(order); }
    static CyclotomicNumber one(std::int64_t order) { return CyclotomicNumber(order, Rational(1)); }
    /// zeta_e^k.
    static CyclotomicNumber power_of_zeta(std::int64_t k, std::int64_t order);
    /// sum_k counts[k] zeta_e^k; counts.size() must equal e.
    static CyclotomicNumber from_group_ring(const std::vector<std::int64_t>& counts);

    std::int64_t order() const { return order_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// The same number viewed in Q(zeta_target); order() must divide target.
    CyclotomicNumber lift(std::int64_t target) const;

    CyclotomicNumber& operator+=(const CyclotomicNumber& other);
    CyclotomicNumber& operator-=(const CyclotomicNumber& other);
    CyclotomicNumber& operator*=(const CyclotomicNumber& other);
    CyclotomicNumber& operator*=(const Rational& scalar);
    /// Throws InvalidInput on division by zero.
    CyclotomicNumber& operator/=(const Rational& scalar);

    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& s) { return a *= s; }
    friend CyclotomicNumber operator/(CyclotomicNumber a, const Rational& s) { return a /= s; }

    /// Compares after lifting both to a common order.
    bool operator==(const CyclotomicNumber& other) const;

    bool is_zero() const;
    std::optional<Rational> as_rational() const;
    std::optional<Integer> as_integer() const;
    std::complex<double> to_complex() const;

private:
    std::int64_t order_;
    std::vector<Rational> coeffs_;
};

/// zeta_e^(theta e) for theta in Q/Z; throws InvalidInput unless den(theta) divides e.
CyclotomicNumber root_of_unity(const Rational& theta, std::int64_t e);

/// Optional integer value of z, as an integer when z is exactly an integer constant.
std::optional<Integer> as_integer(const CyclotomicNumber& z);

} // namespace afinv
