#include "avoid/series.hpp"

#include "avoid/error.hpp"

#include <algorithm>

namespace avoid {

TruncatedSeries::TruncatedSeries(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("a series needs at least the constant coefficient");
    for (auto& c : coeffs_) c.canonicalize();
}

TruncatedSeries TruncatedSeries::zero(std::size_t order) {
    return TruncatedSeries(std::vector<mpq_class>(order + 1));
}

TruncatedSeries TruncatedSeries::constant(const mpq_class& c, std::size_t order) {
    std::vector<mpq_class> v(order + 1);
    v[0] = c;
    return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::polynomial(std::initializer_list<long> coeffs, std::size_t order) {
    std::vector<mpq_class> v(order + 1);
    std::size_t i = 0;
    for (long c : coeffs) {
        if (i > order) break;
        v[i++] = c;
    }
    return TruncatedSeries(std::move(v));
}

const mpq_class& TruncatedSeries::operator[](std::size_t n) const {
    if (n > order()) {
        throw DomainError("coefficient " + std::to_string(n) + " beyond series order " +
                          std::to_string(order()));
    }
    return coeffs_[n];
}

TruncatedSeries TruncatedSeries::truncate(std::size_t order) const {
    if (order > this->order()) throw DomainError("cannot extend a truncated series");
    return TruncatedSeries(std::vector<mpq_class>(coeffs_.begin(),
                                                  coeffs_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
}

TruncatedSeries TruncatedSeries::scale(const mpq_class& c) const {
    std::vector<mpq_class> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeffs_[i] * c;
    return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::with_coefficient(std::size_t n, const mpq_class& value) const {
    (void)(*this)[n];
    TruncatedSeries out = *this;
    out.coeffs_[n] = value;
    out.coeffs_[n].canonicalize();
    return out;
}

bool TruncatedSeries::all_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const mpq_class& c) { return c.get_den() == 1; });
}

mpz_class TruncatedSeries::integer_coefficient(std::size_t n) const {
    const mpq_class& c = (*this)[n];
    if (c.get_den() != 1) {
        throw InternalError("coefficient " + std::to_string(n) + " = " + c.get_str() +
                            " is not an integer");
    }
    return c.get_num();
}

std::string TruncatedSeries::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out += std::to_string(i);
        out += ": ";
        out += coeffs_[i].get_str();
        out.push_back('\n');
    }
    return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<mpq_class> v(order + 1);
    for (std::size_t i = 0; i <= order; ++i) v[i] = a.coeffs_[i] + b.coeffs_[i];
    return TruncatedSeries(std::move(v));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<mpq_class> v(order + 1);
    for (std::size_t i = 0; i <= order; ++i) v[i] = a.coeffs_[i] - b.coeffs_[i];
    return TruncatedSeries(std::move(v));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<mpq_class> v(order + 1);
    if (a.all_integral() && b.all_integral()) {
        // Integer Cauchy product: skips a gcd per term.
        mpz_class acc;
        for (std::size_t n = 0; n <= order; ++n) {
            acc = 0;
            for (std::size_t i = 0; i <= n; ++i) {
                mpz_addmul(acc.get_mpz_t(), a.coeffs_[i].get_num_mpz_t(),
                           b.coeffs_[n - i].get_num_mpz_t());
            }
            v[n] = acc;
        }
    } else {
        for (std::size_t n = 0; n <= order; ++n) {
            mpq_class acc = 0;
            for (std::size_t i = 0; i <= n; ++i) acc += a.coeffs_[i] * b.coeffs_[n - i];
            v[n] = acc;
        }
    }
    return TruncatedSeries(std::move(v));
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
    const mpq_class& a0 = coeffs_[0];
    if (a0 == 0) throw DomainError("reciprocal of a series with zero constant term");
    const std::size_t order = this->order();
    std::vector<mpq_class> b(order + 1);

    if (all_integral()) {
        // With integer a_i, c_n = b_n * a0^{n+1} stays integral:
        //   c_0 = 1,  c_n = -sum_{i=1..n} a_i a0^{i-1} c_{n-i}.
        const mpz_class base = a0.get_num();
        std::vector<mpz_class> weighted(order + 1);  // a_i * a0^{i-1}
        mpz_class power = 1;
        for (std::size_t i = 1; i <= order; ++i) {
            weighted[i] = coeffs_[i].get_num() * power;
            power *= base;
        }
        std::vector<mpz_class> c(order + 1);
        c[0] = 1;
        mpz_class denominator = base;  // a0^{n+1}
        b[0] = mpq_class(c[0], denominator);
        b[0].canonicalize();
        for (std::size_t n = 1; n <= order; ++n) {
            mpz_class acc = 0;
            for (std::size_t i = 1; i <= n; ++i) {
                mpz_addmul(acc.get_mpz_t(), weighted[i].get_mpz_t(), c[n - i].get_mpz_t());
            }
            c[n] = -acc;
            denominator *= base;
            b[n] = mpq_class(c[n], denominator);
            b[n].canonicalize();
        }
        return TruncatedSeries(std::move(b));
    }

    b[0] = 1 / a0;
    for (std::size_t n = 1; n <= order; ++n) {
        mpq_class acc = 0;
        for (std::size_t i = 1; i <= n; ++i) acc += coeffs_[i] * b[n - i];
        b[n] = -acc * b[0];
    }
    return TruncatedSeries(std::move(b));
}

TruncatedSeries TruncatedSeries::shift_divide(std::size_t k) const {
    if (k > order()) throw DomainError("shift exceeds series order");
    for (std::size_t i = 0; i < k; ++i) {
        if (coeffs_[i] != 0) {
            throw DomainError("cannot divide by x^" + std::to_string(k) + ": coefficient " +
                              std::to_string(i) + " is nonzero");
        }
    }
    return TruncatedSeries(std::vector<mpq_class>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k),
                                                  coeffs_.end()));
}

TruncatedSeries binomial_series(const mpq_class& exponent, const mpq_class& step, std::size_t order) {
    std::vector<mpq_class> v(order + 1);
    v[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        v[n] = v[n - 1] * (exponent - static_cast<long>(n - 1)) * step / static_cast<long>(n);
    }
    return TruncatedSeries(std::move(v));
}

TruncatedSeries one_minus_8x_pow_3_2(std::size_t order) {
    std::vector<mpq_class> v(order + 1);
    v[0] = 1;
    if (order >= 1) v[1] = -12;
    mpz_class top;
    mpz_class n_fact;
    mpz_class nm2_fact;
    mpz_class pow2;
    for (std::size_t n = 2; n <= order; ++n) {
        const auto un = static_cast<unsigned long>(n);
        mpz_fac_ui(top.get_mpz_t(), 2 * un - 4);
        mpz_fac_ui(n_fact.get_mpz_t(), un);
        mpz_fac_ui(nm2_fact.get_mpz_t(), un - 2);
        mpz_ui_pow_ui(pow2.get_mpz_t(), 2, un + 2);
        v[n] = mpq_class(3 * pow2 * top, n_fact * nm2_fact);
        v[n].canonicalize();
    }
    return TruncatedSeries(std::move(v));
}

TruncatedSeries indecomposable_series(std::size_t order) {
    const TruncatedSeries numerator =
        TruncatedSeries::polynomial({-1, 12, 8}, order + 1) + one_minus_8x_pow_3_2(order + 1);
    return numerator.shift_divide(1).scale(mpq_class(1, 32));
}

TruncatedSeries avoider_series_by_division(std::size_t order) {
    const TruncatedSeries denominator =
        TruncatedSeries::polynomial({1, 20, -8}, order + 1) - one_minus_8x_pow_3_2(order + 1);
    return denominator.shift_divide(1).reciprocal().scale(32);
}

TruncatedSeries avoider_series_rational(std::size_t order) {
    const TruncatedSeries numerator =
        one_minus_8x_pow_3_2(order) + TruncatedSeries::polynomial({1, 20, -8}, order);
    const TruncatedSeries denominator = TruncatedSeries::polynomial({2, 6, 6, 2}, order);
    return numerator * denominator.reciprocal();
}

TruncatedSeries avoider_series_from_blocks(std::size_t order) {
    return (TruncatedSeries::constant(1, order) - indecomposable_series(order)).reciprocal();
}

bool satisfies_avoider_equation(const TruncatedSeries& h) {
    // H_k first enters the identity at x^{k+1} (its x^k factor is G_0 A_0 - C_0 H_0 = 0),
    // so the x^{order+1} coefficient is fixed by h alone and is checked as well.
    std::vector<mpq_class> padded = h.coefficients();
    padded.emplace_back(0);
    const TruncatedSeries hp(std::move(padded));
    const std::size_t order = hp.order();
    const TruncatedSeries a = TruncatedSeries::polynomial({1, 20, -8}, order);
    const TruncatedSeries cube = TruncatedSeries::polynomial({1, -24, 192, -512}, order);
    const TruncatedSeries lhs_root = a * hp - TruncatedSeries::polynomial({0, 32}, order);
    return lhs_root * lhs_root == cube * (hp * hp);
}

bool verify_avoider_series_algebraic(std::size_t order) {
    return satisfies_avoider_equation(avoider_series_by_division(order));
}

}  // namespace avoid
