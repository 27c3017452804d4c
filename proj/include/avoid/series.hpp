#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace avoid {

/**
 * Formal power series known exactly up to x^order, with rational coefficients.
 *
 * Binary operations truncate to the smaller operand order; nothing ever
 * extends precision. Reading a coefficient past `order()` throws DomainError.
 */
class TruncatedSeries {
public:
    /// coeffs[i] is the coefficient of x^i; order = coeffs.size() - 1.
    explicit TruncatedSeries(std::vector<mpq_class> coeffs);

    static TruncatedSeries zero(std::size_t order);
    static TruncatedSeries constant(const mpq_class& c, std::size_t order);
    /// Polynomial with integer coefficients, padded or cut to `order`.
    static TruncatedSeries polynomial(std::initializer_list<long> coeffs, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const mpq_class& operator[](std::size_t n) const;
    const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }

    TruncatedSeries truncate(std::size_t order) const;
    TruncatedSeries scale(const mpq_class& c) const;
    TruncatedSeries reciprocal() const;  // DomainError when the constant term is 0
    /// Division by x^k; requires coefficients 0..k-1 to vanish (DomainError names
    /// the first offending index). The result has order reduced by k.
    TruncatedSeries shift_divide(std::size_t k) const;
    /// Copy with coefficient n replaced.
    TruncatedSeries with_coefficient(std::size_t n, const mpq_class& value) const;

    bool all_integral() const;
    /// Coefficient n as an integer; InternalError if it is not one.
    mpz_class integer_coefficient(std::size_t n) const;

    /// "n: value" per line; integers plain, otherwise "p/q".
    std::string to_string() const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

private:
    std::vector<mpq_class> coeffs_;
};

/// (1 + step*x)^exponent to `order` via the generalized binomial theorem.
TruncatedSeries binomial_series(const mpq_class& exponent, const mpq_class& step, std::size_t order);

/// (1-8x)^{3/2} from the closed coefficients 1, -12 and
/// 3 * 2^{n+2} * (2n-4)! / (n! (n-2)!) for n >= 2.
TruncatedSeries one_minus_8x_pow_3_2(std::size_t order);

/// F(x) = (8x^2 + 12x - 1 + (1-8x)^{3/2}) / (32x): indecomposable 1342-avoiders.
TruncatedSeries indecomposable_series(std::size_t order);

/// H(x) = 32x / (-8x^2 + 20x + 1 - (1-8x)^{3/2}) = 1/(1-F): all 1342-avoiders.
TruncatedSeries avoider_series_by_division(std::size_t order);

/// H(x) = ((1-8x)^{3/2} - 8x^2 + 20x + 1) / (2 (1+x)^3), the rationalized form.
TruncatedSeries avoider_series_rational(std::size_t order);

/// 1 / (1 - F(x)).
TruncatedSeries avoider_series_from_blocks(std::size_t order);

/// Checks ((-8x^2 + 20x + 1) H - 32x)^2 == (1-8x)^3 H^2 coefficient-exactly up
/// to x^{h.order()+1}. This is the radical-free form of H's defining equation.
/// The top coefficient does not depend on H_{order+1}, and checking it is what
/// makes a change to the last coefficient of h detectable.
bool satisfies_avoider_equation(const TruncatedSeries& h);

/// satisfies_avoider_equation(avoider_series_by_division(order)).
bool verify_avoider_series_algebraic(std::size_t order);

}  // namespace avoid
