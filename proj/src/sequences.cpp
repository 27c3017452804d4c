#include "avoid/sequences.hpp"

#include "avoid/error.hpp"
#include "avoid/series.hpp"
#include "avoid/tree_gen.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <string>

namespace avoid {

namespace {

mpz_class factorial(long n) {
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

mpz_class binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

mpq_class ratio(const mpz_class& num, const mpz_class& den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

mpz_class exact_integer(const mpq_class& q, const std::string& what) {
    if (q.get_den() != 1) throw InternalError(what + " is not an integer: " + q.get_str());
    return q.get_num();
}

void require_positive(long n, const char* name) {
    if (n < 1) throw DomainError(std::string(name) + " needs n >= 1, got " + std::to_string(n));
}

// 3 * 2^{i+1} (2i-4)! / (i! (i-2)!), the weight of index i in the closed sum.
mpq_class closed_term(long i) {
    mpz_class pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(i + 1));
    return ratio(3 * pow2 * factorial(2 * i - 4), factorial(i) * factorial(i - 2));
}

mpz_class closed_from_terms(long n, const std::vector<mpq_class>& terms) {
    const long sign_n1 = (n - 1) % 2 == 0 ? 1 : -1;
    mpq_class total = ratio(mpz_class(7 * n * n - 3 * n - 2) * sign_n1, 2);
    for (long i = 2; i <= n; ++i) {
        const mpz_class choose = binomial(n - i + 2, 2);
        mpq_class term = terms[static_cast<std::size_t>(i)] * choose;
        if ((n - i) % 2 != 0) term = -term;
        total += term;
    }
    return exact_integer(total, "s1342_closed(" + std::to_string(n) + ")");
}

}  // namespace

mpz_class t_closed(long n) {
    require_positive(n, "t_closed");
    mpz_class pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
    const mpq_class value = ratio(3 * pow2 * factorial(2 * n), factorial(n + 2) * factorial(n));
    return exact_integer(value, "t_closed(" + std::to_string(n) + ")");
}

std::vector<mpz_class> t_recurrence_table(long up_to) {
    std::vector<mpz_class> t(static_cast<std::size_t>(std::max(up_to, 0L)) + 1, 0);
    if (up_to < 1) return t;
    t[1] = 1;
    for (long n = 2; n <= up_to; ++n) {
        const mpz_class numerator = mpz_class(8 * n - 4) * t[static_cast<std::size_t>(n - 1)];
        mpz_class quotient;
        mpz_class remainder;
        mpz_fdiv_qr_ui(quotient.get_mpz_t(), remainder.get_mpz_t(), numerator.get_mpz_t(),
                       static_cast<unsigned long>(n + 2));
        if (remainder != 0) {
            throw InternalError("t recurrence division inexact at n=" + std::to_string(n));
        }
        t[static_cast<std::size_t>(n)] = quotient;
    }
    return t;
}

mpz_class t_recurrence(long n) {
    require_positive(n, "t_recurrence");
    return t_recurrence_table(n)[static_cast<std::size_t>(n)];
}

mpz_class catalan(long n) {
    if (n < 0) throw DomainError("catalan needs n >= 0");
    return binomial(2 * n, n) / (n + 1);
}

std::vector<mpz_class> catalan_recurrence_table(long up_to) {
    std::vector<mpz_class> c(static_cast<std::size_t>(std::max(up_to, 0L)) + 1, 0);
    c[0] = 1;
    for (long m = 0; m < up_to; ++m) {
        mpz_class sum = 0;
        for (long i = 0; i <= m; ++i) {
            sum += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - i)];
        }
        c[static_cast<std::size_t>(m + 1)] = sum;
    }
    return c;
}

mpz_class s1342_closed(long n) {
    require_positive(n, "s1342_closed");
    std::vector<mpq_class> terms(static_cast<std::size_t>(n) + 1);
    for (long i = 2; i <= n; ++i) terms[static_cast<std::size_t>(i)] = closed_term(i);
    return closed_from_terms(n, terms);
}

std::vector<mpz_class> s1342_closed_table(long up_to) {
    std::vector<mpz_class> out(static_cast<std::size_t>(std::max(up_to, 0L)) + 1);
    out[0] = 1;
    std::vector<mpq_class> terms(out.size());
    for (long i = 2; i <= up_to; ++i) terms[static_cast<std::size_t>(i)] = closed_term(i);
    for (long n = 1; n <= up_to; ++n) out[static_cast<std::size_t>(n)] = closed_from_terms(n, terms);
    return out;
}

std::vector<mpz_class> indecomposable_counts(long up_to) {
    const std::size_t order = static_cast<std::size_t>(std::max(up_to, 1L));
    const TruncatedSeries f = indecomposable_series(order);
    std::vector<mpz_class> out(static_cast<std::size_t>(std::max(up_to, 0L)) + 1);
    for (std::size_t n = 0; n < out.size(); ++n) out[n] = f.integer_coefficient(n);
    return out;
}

mpz_class indecomposable_count(long n) {
    require_positive(n, "indecomposable_count");
    return indecomposable_counts(n)[static_cast<std::size_t>(n)];
}

std::vector<mpz_class> s1342_convolution(long up_to) {
    const std::vector<mpz_class> blocks = indecomposable_counts(up_to);
    std::vector<mpz_class> s(blocks.size());
    s[0] = 1;
    for (std::size_t n = 1; n < s.size(); ++n) {
        mpz_class sum = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            mpz_addmul(sum.get_mpz_t(), blocks[i].get_mpz_t(), s[n - i].get_mpz_t());
        }
        s[n] = sum;
    }
    return s;
}

mpz_class s1234_closed(long n) {
    require_positive(n, "s1234_closed");
    mpq_class total = 0;
    for (long i = 0; i <= n; ++i) {
        const mpz_class cn = binomial(n, i);
        const mpz_class numerator = binomial(2 * i, i) * cn * cn *
                                    mpz_class(3 * i * i + 2 * i + 1 - n - 2 * i * n);
        const mpz_class denominator = mpz_class((i + 1) * (i + 1)) * (i + 2) * (n - i + 1);
        total += ratio(numerator, denominator);
    }
    total *= 2;
    return exact_integer(total, "s1234_closed(" + std::to_string(n) + ")");
}

double nth_root_estimate(long n) {
    require_positive(n, "nth_root_estimate");
    const mpz_class s = s1342_convolution(n)[static_cast<std::size_t>(n)];
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, s.get_mpz_t());
    const double log_s = std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
    return std::exp(log_s / static_cast<double>(n));
}

nlohmann::json SequenceReport::to_json() const {
    nlohmann::json out;
    out["name"] = name;
    out["entries"] = nlohmann::json::array();
    for (const auto& e : entries) {
        out["entries"].push_back(
            {{"sequence", e.sequence}, {"n", e.n}, {"value", e.value.get_str()}, {"method", e.method}});
    }
    out["discrepancies"] = nlohmann::json::array();
    for (const auto& d : discrepancies) {
        out["discrepancies"].push_back({{"sequence", d.sequence},
                                        {"n", d.n},
                                        {"method_a", d.method_a},
                                        {"method_b", d.method_b},
                                        {"value_a", d.value_a},
                                        {"value_b", d.value_b}});
    }
    return out;
}

namespace {

// One method's values, keyed by n.
struct MethodValues {
    std::string method;
    std::map<long, mpz_class> values;
};

class Collector {
public:
    explicit Collector(const std::optional<Mutation>& mutation) : mutation_(mutation) {}

    void add(const std::string& sequence, const std::string& method, long from, long to,
             const std::function<mpz_class(long)>& value_at) {
        MethodValues mv{sequence + "." + method, {}};
        for (long n = from; n <= to; ++n) {
            mpz_class v = value_at(n);
            if (mutation_ && mutation_->method == mv.method && mutation_->n == n) v += mutation_->delta;
            mv.values.emplace(n, std::move(v));
        }
        sequences_[sequence].push_back(std::move(mv));
        order_.push_back(sequence);
    }

    const mpz_class* find(const std::string& sequence, const std::string& method, long n) const {
        auto it = sequences_.find(sequence);
        if (it == sequences_.end()) return nullptr;
        for (const auto& mv : it->second) {
            if (mv.method != sequence + "." + method) continue;
            auto v = mv.values.find(n);
            return v == mv.values.end() ? nullptr : &v->second;
        }
        return nullptr;
    }

    void finish(SequenceReport& report) const {
        std::vector<std::string> seen;
        for (const auto& name : order_) {
            if (std::find(seen.begin(), seen.end(), name) != seen.end()) continue;
            seen.push_back(name);
            const auto& methods = sequences_.at(name);
            for (const auto& mv : methods) {
                for (const auto& [n, v] : mv.values) report.entries.push_back({name, n, v, mv.method});
            }
            std::map<long, const MethodValues*> reference;
            for (const auto& mv : methods) {
                for (const auto& [n, v] : mv.values) {
                    auto [it, inserted] = reference.emplace(n, &mv);
                    if (inserted) continue;
                    const mpz_class& ref = it->second->values.at(n);
                    if (ref != v) {
                        report.discrepancies.push_back(
                            {name, n, it->second->method, mv.method, ref.get_str(), v.get_str()});
                    }
                }
            }
        }
    }

private:
    std::optional<Mutation> mutation_;
    std::map<std::string, std::vector<MethodValues>> sequences_;
    std::vector<std::string> order_;
};

}  // namespace

SequenceReport cross_check(const CrossCheckOptions& options) {
    const long closed = std::max(options.up_to_closed, 0L);
    const long brute = std::max(options.up_to_brute, 0L);
    if (static_cast<std::size_t>(brute) > options.max_brute_n) {
        throw ResourceError("brute-force range " + std::to_string(brute) + " exceeds ceiling " +
                            std::to_string(options.max_brute_n));
    }

    const Permutation p1342{1, 3, 4, 2};
    const Permutation p1234{1, 2, 3, 4};
    const Permutation p132{1, 3, 2};
    auto brute_count = [&](const Permutation& q, AvoiderFilter filter) {
        return [&options, &q, filter](long n) {
            EnumerationOptions eo;
            eo.filter = filter;
            eo.max_n = options.max_brute_n;
            eo.workers = options.workers;
            return mpz_class(static_cast<unsigned long>(count_avoiders(static_cast<std::size_t>(n), q, eo)));
        };
    };
    auto from_table = [](const std::vector<mpz_class>& table) {
        return [&table](long n) { return table[static_cast<std::size_t>(n)]; };
    };

    Collector c(options.mutation);

    const std::vector<mpz_class> s_closed = s1342_closed_table(closed);
    const std::size_t order = static_cast<std::size_t>(closed);
    const TruncatedSeries h_div = avoider_series_by_division(order);
    const TruncatedSeries h_rat = avoider_series_rational(order);
    const std::vector<mpz_class> s_conv = s1342_convolution(closed);
    c.add("s1342", "closed", 1, closed, from_table(s_closed));
    c.add("s1342", "series_division", 0, closed, [&](long n) { return h_div.integer_coefficient(static_cast<std::size_t>(n)); });
    c.add("s1342", "series_rational", 0, closed, [&](long n) { return h_rat.integer_coefficient(static_cast<std::size_t>(n)); });
    c.add("s1342", "convolution", 0, closed, from_table(s_conv));
    c.add("s1342", "brute", 1, brute, brute_count(p1342, AvoiderFilter::all));

    const std::vector<mpz_class> t_rec = t_recurrence_table(closed);
    c.add("t", "closed", 1, closed, [](long n) { return t_closed(n); });
    c.add("t", "recurrence", 1, closed, from_table(t_rec));

    const std::vector<mpz_class> blocks = indecomposable_counts(closed);
    c.add("I", "series", 1, closed, from_table(blocks));
    c.add("I", "t_shifted", 1, closed, [](long n) { return n == 1 ? mpz_class(1) : t_closed(n - 1); });
    c.add("I", "brute", 1, brute, brute_count(p1342, AvoiderFilter::indecomposable));
    c.add("I", "trees", 1, brute, [&](long n) {
        return mpz_class(static_cast<unsigned long>(
            count_beta01(static_cast<std::size_t>(n), std::max(options.max_brute_n, kDefaultMaxTreeN))));
    });

    const std::vector<mpz_class> cat_rec = catalan_recurrence_table(closed);
    c.add("catalan", "closed", 0, closed, [](long n) { return catalan(n); });
    c.add("catalan", "recurrence", 0, closed, from_table(cat_rec));
    c.add("catalan", "brute", 1, brute, brute_count(p132, AvoiderFilter::all));

    std::vector<mpz_class> g_closed(static_cast<std::size_t>(closed) + 1);
    for (long n = 1; n <= closed; ++n) g_closed[static_cast<std::size_t>(n)] = s1234_closed(n);
    c.add("s1234", "closed", 1, closed, from_table(g_closed));
    c.add("s1234", "brute", 1, brute, brute_count(p1234, AvoiderFilter::all));

    SequenceReport report;
    report.name = "cross_check";
    c.finish(report);

    // S_n(1342) < 8^n.
    mpz_class eight_pow = 1;
    for (long n = 1; n <= closed; ++n) {
        eight_pow *= 8;
        const mpz_class& s = *c.find("s1342", "closed", n);
        if (!(s < eight_pow)) {
            report.discrepancies.push_back({"s1342", n, "s1342.closed", "bound.8^n", s.get_str(),
                                            eight_pow.get_str()});
        }
    }
    // S_n(1342) < S_n(1234) from n = 6 on, by closed forms and by oracle.
    for (const char* method : {"closed", "brute"}) {
        const long top = std::string(method) == "closed" ? closed : brute;
        for (long n = 6; n <= top; ++n) {
            const mpz_class* a = c.find("s1342", method, n);
            const mpz_class* b = c.find("s1234", method, n);
            if (a && b && !(*a < *b)) {
                report.discrepancies.push_back({"s1342", n, "s1342." + std::string(method),
                                                "s1234." + std::string(method), a->get_str(),
                                                b->get_str()});
            }
        }
    }
    return report;
}

}  // namespace avoid
