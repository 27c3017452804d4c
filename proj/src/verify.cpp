#include "avoid/verify.hpp"

#include "avoid/bijection.hpp"
#include "avoid/error.hpp"
#include "avoid/series.hpp"
#include "avoid/tree_gen.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace avoid {

void CheckResult::expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
}

void CheckResult::merge(const CheckResult& other) {
    checks += other.checks;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

namespace {

std::string at_n(const std::string& what, std::size_t n) {
    return what + " (n=" + std::to_string(n) + ")";
}

LabeledPlaneTree path_shape(std::size_t n) {
    LabeledPlaneTree t(0);
    for (std::size_t i = 1; i < n; ++i) t = LabeledPlaneTree(0, {std::move(t)});
    return t;
}

mpz_class as_mpz(std::uint64_t v) { return mpz_class(static_cast<unsigned long>(v)); }

}  // namespace

CheckResult check_tree_bijection(std::size_t n, std::size_t max_n) {
    CheckResult r;
    std::set<std::string> all_trees;
    for_each_beta01_tree(n, [&](const LabeledPlaneTree& t) { all_trees.insert(t.to_string()); },
                         max_n);

    std::set<std::string> image;
    EnumerationOptions eo;
    eo.filter = AvoiderFilter::indecomposable;
    eo.max_n = max_n;
    const Permutation p132{1, 3, 2};
    for_each_avoider(n, pattern_1342(), eo, [&](const Permutation& p) {
        const std::string ps = p.to_string();
        try {
            const LabeledPlaneTree t = perm_to_beta_tree(p);
            const std::string ts = t.to_string();
            r.expect(validate_beta01(t), "F(" + ps + ") = " + ts + " is not a beta(0,1)-tree");
            r.expect(image.insert(ts).second, "F not injective: second preimage " + ps + " of " + ts);
            const Permutation back = beta_tree_to_perm(t);
            r.expect(back == p, "F inverse of " + ts + " gave " + back.to_string() + ", expected " + ps);
            const ShapeFlags flags = classify_shape(t);
            if (avoids(p, p132)) r.expect(flags.all_zero_labels, "132-avoider " + ps + " maps to labeled " + ts);
            if (p[0] == 1) {
                r.expect(flags.single_path, ps + " starts with 1 but maps to non-path " + ts);
                r.expect(path_tree_from_perm(p) == t, "f and F disagree on " + ps);
            }
            r.expect(normalize_tree(t) == perm_to_zero_tree(normalize(p)),
                     "shape of F(" + ps + ") differs from the zero tree of N(p)");
        } catch (const std::exception& e) {
            r.expect(false, "exception on " + ps + ": " + e.what());
        }
    });
    r.expect(image.size() == all_trees.size(),
             at_n("image size " + std::to_string(image.size()) + " != tree count " +
                      std::to_string(all_trees.size()),
                  n));
    r.expect(image == all_trees, at_n("image of F is not the set of all beta(0,1)-trees", n));
    return r;
}

CheckResult check_path_trees(std::size_t n) {
    CheckResult r;
    std::uint64_t count = 0;
    for_each_beta01_labeling(flatten(path_shape(n)), [&](const PostorderTree& pt) {
        ++count;
        const LabeledPlaneTree t = unflatten(pt);
        try {
            const Permutation p = perm_from_path_tree(t);
            r.expect(p[0] == 1 && avoids(p, pattern_1342()),
                     "f inverse of " + t.to_string() + " gave " + p.to_string());
            r.expect(path_tree_from_perm(p) == t, "f roundtrip failed on " + t.to_string());
        } catch (const std::exception& e) {
            r.expect(false, "exception on " + t.to_string() + ": " + e.what());
        }
    });
    r.expect(as_mpz(count) == catalan(static_cast<long>(n) - 1),
             at_n("path tree count " + std::to_string(count) + " != Catalan(n-1)", n));
    return r;
}

CheckResult check_zero_trees(std::size_t n) {
    CheckResult r;
    const Permutation p132{1, 3, 2};
    const auto shapes = plane_tree_shapes(n);
    for (const auto& t : shapes) {
        try {
            const Permutation p = zero_tree_to_perm(t);
            r.expect(avoids(p, p132) && p[n - 1] == static_cast<int>(n),
                     "zero tree " + t.to_string() + " gave " + p.to_string());
            r.expect(perm_to_zero_tree(p) == t, "zero tree roundtrip failed on " + t.to_string());
        } catch (const std::exception& e) {
            r.expect(false, "exception on " + t.to_string() + ": " + e.what());
        }
    }
    r.expect(as_mpz(shapes.size()) == catalan(static_cast<long>(n) - 1),
             at_n("zero tree count " + std::to_string(shapes.size()) + " != Catalan(n-1)", n));
    return r;
}

CheckResult check_forests(std::size_t n, std::size_t max_n) {
    CheckResult r;
    EnumerationOptions eo;
    eo.max_n = max_n;
    std::uint64_t count = 0;
    for_each_avoider(n, pattern_1342(), eo, [&](const Permutation& p) {
        ++count;
        try {
            const auto forest = perm_to_beta_forest(p);
            r.expect(forest.size() == decompose(p).size(), "forest of " + p.to_string() + " has wrong size");
            r.expect(beta_forest_to_perm(forest) == p, "forest roundtrip failed on " + p.to_string());
        } catch (const std::exception& e) {
            r.expect(false, "exception on " + p.to_string() + ": " + e.what());
        }
    });
    if (n >= 1) {
        r.expect(as_mpz(count) == s1342_closed(static_cast<long>(n)),
                 at_n("forest count " + std::to_string(count) + " != closed form", n));
    }
    return r;
}

CheckResult check_series(std::size_t order, bool corrupt) {
    CheckResult r;
    TruncatedSeries h_div = avoider_series_by_division(order);
    if (corrupt) {
        const std::size_t k = std::min<std::size_t>(order, 5);
        h_div = h_div.with_coefficient(k, h_div[k] + 1);
    }
    const TruncatedSeries h_rat = avoider_series_rational(order);
    const TruncatedSeries h_blocks = avoider_series_from_blocks(order);
    r.expect(h_div == h_rat, "H by division differs from the rationalized form");
    r.expect(h_div == h_blocks, "H by division differs from 1/(1-F)");
    r.expect(one_minus_8x_pow_3_2(order) == binomial_series(mpq_class(3, 2), -8, order),
             "(1-8x)^{3/2} closed coefficients differ from the binomial expansion");
    r.expect(indecomposable_series(order).all_integral(), "F has a non-integral coefficient");
    r.expect(h_div.all_integral(), "H has a non-integral coefficient");
    r.expect(satisfies_avoider_equation(h_div), "H fails the algebraic identity");
    if (order >= 1) {
        const TruncatedSeries bumped = h_div.with_coefficient(order, h_div[order] + 1);
        r.expect(!satisfies_avoider_equation(bumped), "perturbed H still satisfies the identity");
    }
    return r;
}

bool VerifyOutcome::passed() const {
    for (const auto& s : suites) {
        if (!s.result.passed()) return false;
        if (s.report && !s.report->consistent()) return false;
    }
    return true;
}

nlohmann::json VerifyOutcome::to_json() const {
    nlohmann::json out;
    out["passed"] = passed();
    out["suites"] = nlohmann::json::array();
    for (const auto& s : suites) {
        nlohmann::json j;
        j["suite"] = s.name;
        j["passed"] = s.result.passed() && (!s.report || s.report->consistent());
        j["checks"] = s.result.checks;
        j["failures"] = s.result.failures;
        if (s.report) j["report"] = s.report->to_json();
        out["suites"].push_back(std::move(j));
    }
    return out;
}

std::string VerifyOutcome::to_text() const {
    std::ostringstream out;
    for (const auto& s : suites) {
        const bool ok = s.result.passed() && (!s.report || s.report->consistent());
        out << s.name << ": " << (ok ? "PASS" : "FAIL") << " (" << s.result.checks << " checks";
        if (s.report) out << ", " << s.report->entries.size() << " sequence values";
        out << ")\n";
        for (const auto& f : s.result.failures) out << "  " << f << '\n';
        if (s.report) {
            for (const auto& d : s.report->discrepancies) {
                out << "  " << d.sequence << " n=" << d.n << ": " << d.method_a << "=" << d.value_a
                    << " vs " << d.method_b << "=" << d.value_b << '\n';
            }
        }
    }
    out << (passed() ? "all suites passed" : "verification FAILED") << '\n';
    return out.str();
}

VerifyOutcome run_verification(const VerifyOptions& options) {
    const std::string& suite = options.suite;
    if (suite != "all" && suite != "bijection" && suite != "sequences" && suite != "series") {
        throw DomainError("unknown suite '" + suite + "'");
    }
    if (options.max_n > options.max_brute_n) {
        throw ResourceError("verification size " + std::to_string(options.max_n) +
                            " exceeds ceiling " + std::to_string(options.max_brute_n));
    }
    const bool all = suite == "all";
    VerifyOutcome outcome;

    if (all || suite == "bijection") {
        SuiteResult s{"bijection", {}, std::nullopt};
        for (std::size_t n = 1; n <= options.max_n; ++n) {
            s.result.merge(check_tree_bijection(n, options.max_brute_n));
            s.result.merge(check_path_trees(n));
            s.result.merge(check_zero_trees(n));
            s.result.merge(check_forests(n, options.max_brute_n));
        }
        if (options.inject_failure) {
            const std::size_t n = std::max<std::size_t>(options.max_n, 1);
            s.result.expect(count_beta01(n, options.max_brute_n) + 1 ==
                                count_avoiders(n, pattern_1342(),
                                               {AvoiderFilter::indecomposable, options.max_brute_n, options.workers}),
                            at_n("injected: tree count + 1 vs indecomposable avoiders", n));
        }
        outcome.suites.push_back(std::move(s));
    }

    if (all || suite == "sequences") {
        CrossCheckOptions cc;
        cc.up_to_closed = options.max_closed;
        cc.up_to_brute = static_cast<long>(options.max_n);
        cc.workers = options.workers;
        cc.max_brute_n = options.max_brute_n;
        if (options.inject_failure) {
            cc.mutation = Mutation{"s1342.closed", std::clamp(options.max_closed, 1L, 5L), 1};
        }
        SuiteResult s{"sequences", {}, cross_check(cc)};
        // The ratio form of the t recurrence, checked on the closed formula.
        for (long n = 2; n <= options.max_closed; ++n) {
            s.result.expect(t_closed(n) * (n + 2) == t_closed(n - 1) * (8 * n - 4),
                            "t_closed ratio wrong at n=" + std::to_string(n));
        }
        outcome.suites.push_back(std::move(s));
    }

    if (all || suite == "series") {
        SuiteResult s{"series", check_series(options.order, options.inject_failure), std::nullopt};
        outcome.suites.push_back(std::move(s));
    }
    return outcome;
}

}  // namespace avoid
