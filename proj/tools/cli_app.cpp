#include "cli_app.hpp"

#include "avoid/bijection.hpp"
#include "avoid/enumerate.hpp"
#include "avoid/error.hpp"
#include "avoid/kernels/window.hpp"
#include "avoid/sequences.hpp"
#include "avoid/series.hpp"
#include "avoid/tree_gen.hpp"
#include "avoid/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <ostream>
#include <thread>

namespace avoid::cli {

namespace {

/// Flag-level problems found after CLI11 parsing (bad combinations etc.).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Globals {
    std::string kernel = "auto";
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::size_t max_brute_n = kDefaultMaxBruteN;
};

std::string pattern_key(const Permutation& q) { return q.to_string(); }

void require_n(long n, const char* flag) {
    if (n < 0) throw UsageError(std::string(flag) + " must be >= 0");
}

EnumerationOptions brute_options(const Globals& g, AvoiderFilter filter = AvoiderFilter::all) {
    EnumerationOptions eo;
    eo.filter = filter;
    eo.max_n = g.max_brute_n;
    eo.workers = g.workers;
    return eo;
}

// Values for n = 1..up_to by one method, with the method/pattern whitelist.
std::vector<mpz_class> sequence_values(const Permutation& q, const std::string& method, long up_to,
                                       const Globals& g) {
    const std::string key = pattern_key(q);
    std::vector<mpz_class> out;
    if (up_to < 1) {
        if (method != "closed" && method != "series" && method != "convolution" && method != "brute") {
            throw UsageError("unknown method '" + method + "'");
        }
        return out;
    }
    if (method == "brute") {
        for (long n = 1; n <= up_to; ++n) {
            out.emplace_back(static_cast<unsigned long>(
                count_avoiders(static_cast<std::size_t>(n), q, brute_options(g))));
        }
        return out;
    }
    if (method == "closed" && key == "1342") {
        const auto table = s1342_closed_table(up_to);
        out.assign(table.begin() + 1, table.end());
        return out;
    }
    if (method == "closed" && key == "1234") {
        for (long n = 1; n <= up_to; ++n) out.push_back(s1234_closed(n));
        return out;
    }
    if (method == "series" && key == "1342") {
        const TruncatedSeries h = avoider_series_by_division(static_cast<std::size_t>(up_to));
        for (long n = 1; n <= up_to; ++n) out.push_back(h.integer_coefficient(static_cast<std::size_t>(n)));
        return out;
    }
    if (method == "convolution" && key == "1342") {
        const auto table = s1342_convolution(up_to);
        out.assign(table.begin() + 1, table.end());
        return out;
    }
    if (method != "closed" && method != "series" && method != "convolution") {
        throw UsageError("unknown method '" + method + "'");
    }
    throw UsageError("method '" + method + "' is not available for pattern " + key +
                     " (closed: 1342, 1234; series, convolution: 1342; brute: any)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Count, map and verify 1342-avoiding permutations and beta(0,1)-trees",
                 "avoid-cli"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--kernel", g.kernel, "Window-mask kernel: auto, scalar, sse2, avx2, neon");
    app.add_option("--workers", g.workers, "Worker threads for brute force")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-brute-n", g.max_brute_n, "Ceiling for brute-force enumeration");

    std::function<int()> action;

    // count
    std::string count_pattern = "1342";
    long count_n = -1;
    std::string count_method = "closed";
    auto* count = app.add_subcommand("count", "Count avoiders of a pattern at one length");
    count->add_option("--pattern", count_pattern, "Pattern in one-line notation");
    count->add_option("--n", count_n, "Length")->required();
    count->add_option("--method", count_method, "closed, series, convolution or brute");
    count->callback([&] {
        action = [&] {
            require_n(count_n, "--n");
            const Permutation q = Permutation::parse(count_pattern);
            if (count_n == 0) {
                (void)sequence_values(q, count_method, 0, g);  // validates the method name
                out << (count_method == "brute"
                            ? std::to_string(count_avoiders(0, q, brute_options(g)))
                            : std::string("1"))
                    << '\n';
                return kOk;
            }
            if (count_method == "brute") {
                out << count_avoiders(static_cast<std::size_t>(count_n), q, brute_options(g)) << '\n';
                return kOk;
            }
            if (count_method == "closed" && pattern_key(q) == "1342") {
                out << s1342_closed(count_n).get_str() << '\n';
                return kOk;
            }
            out << sequence_values(q, count_method, count_n, g).back().get_str() << '\n';
            return kOk;
        };
    });

    // sequence
    std::string seq_pattern = "1342";
    long seq_upto = 10;
    std::string seq_method = "closed";
    std::string seq_format = "text";
    bool seq_json = false;
    auto* sequence = app.add_subcommand("sequence", "Print counts for n = 1..upto");
    sequence->add_option("--pattern", seq_pattern, "Pattern in one-line notation");
    sequence->add_option("--upto", seq_upto, "Largest length");
    sequence->add_option("--method", seq_method, "closed, series, convolution or brute");
    sequence->add_option("--format", seq_format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    sequence->add_flag("--json", seq_json, "Same as --format json");
    sequence->callback([&] {
        action = [&] {
            require_n(seq_upto, "--upto");
            const Permutation q = Permutation::parse(seq_pattern);
            const auto values = sequence_values(q, seq_method, seq_upto, g);
            const std::string format = seq_json ? "json" : seq_format;
            if (format == "json") {
                nlohmann::json j;
                j["pattern"] = q.to_string();
                j["method"] = seq_method;
                j["values"] = nlohmann::json::array();
                for (std::size_t i = 0; i < values.size(); ++i) {
                    j["values"].push_back({{"n", i + 1}, {"value", values[i].get_str()}});
                }
                out << j.dump() << '\n';
            } else if (format == "csv") {
                out << "n,value\n";
                for (std::size_t i = 0; i < values.size(); ++i) out << i + 1 << ',' << values[i].get_str() << '\n';
            } else {
                for (std::size_t i = 0; i < values.size(); ++i) out << i + 1 << ' ' << values[i].get_str() << '\n';
            }
            return kOk;
        };
    });

    // map
    std::string map_direction;
    std::string map_input;
    auto* map = app.add_subcommand("map", "Apply one of the bijections");
    map->add_option("direction", map_direction, "perm-to-tree, tree-to-perm, perm-to-forest, forest-to-perm")
        ->required()
        ->check(CLI::IsMember({"perm-to-tree", "tree-to-perm", "perm-to-forest", "forest-to-perm"}));
    map->add_option("input", map_input, "Permutation, tree or forest text")->required();
    map->callback([&] {
        action = [&] {
            if (map_direction == "perm-to-tree") {
                out << perm_to_beta_tree(Permutation::parse(map_input)).to_string() << '\n';
            } else if (map_direction == "tree-to-perm") {
                out << beta_tree_to_perm(LabeledPlaneTree::parse(map_input)).to_string() << '\n';
            } else if (map_direction == "perm-to-forest") {
                out << forest_to_string(perm_to_beta_forest(Permutation::parse(map_input))) << '\n';
            } else {
                out << beta_forest_to_perm(parse_forest(map_input)).to_string() << '\n';
            }
            return kOk;
        };
    });

    // generate
    std::string gen_kind;
    long gen_n = -1;
    std::string gen_pattern = "1342";
    bool gen_indecomposable = false;
    bool gen_first_is_1 = false;
    bool gen_count_only = false;
    std::size_t gen_max_n = 0;
    auto* generate = app.add_subcommand("generate", "Stream trees or avoiders, one per line");
    generate->add_option("kind", gen_kind, "trees or avoiders")
        ->required()
        ->check(CLI::IsMember({"trees", "avoiders"}));
    generate->add_option("--n", gen_n, "Size")->required();
    generate->add_option("--pattern", gen_pattern, "Pattern for avoiders");
    generate->add_flag("--indecomposable", gen_indecomposable, "Only indecomposable avoiders");
    generate->add_flag("--first-entry-is-1", gen_first_is_1, "Only avoiders starting with 1");
    generate->add_flag("--count-only", gen_count_only, "Print only the count");
    generate->add_option("--max-n", gen_max_n, "Size ceiling (default: --max-brute-n)");
    generate->callback([&] {
        action = [&] {
            require_n(gen_n, "--n");
            const std::size_t n = static_cast<std::size_t>(gen_n);
            const std::size_t ceiling = gen_max_n > 0 ? gen_max_n : g.max_brute_n;
            std::uint64_t count = 0;
            if (gen_kind == "trees") {
                if (gen_indecomposable || gen_first_is_1) {
                    throw UsageError("--indecomposable and --first-entry-is-1 apply to avoiders only");
                }
                if (gen_count_only) {
                    count = n == 0 ? 0 : count_beta01(n, ceiling);
                } else if (n > 0) {
                    for_each_beta01_tree(n, [&](const LabeledPlaneTree& t) { out << t.to_string() << '\n'; },
                                         ceiling);
                }
            } else {
                if (gen_indecomposable && gen_first_is_1) {
                    throw UsageError("--indecomposable and --first-entry-is-1 are exclusive");
                }
                const Permutation q = Permutation::parse(gen_pattern);
                EnumerationOptions eo = brute_options(g, gen_indecomposable ? AvoiderFilter::indecomposable
                                                         : gen_first_is_1   ? AvoiderFilter::first_entry_is_1
                                                                            : AvoiderFilter::all);
                eo.max_n = ceiling;
                if (gen_count_only) {
                    count = count_avoiders(n, q, eo);
                } else {
                    for_each_avoider(n, q, eo, [&](const Permutation& p) { out << p.to_string() << '\n'; });
                }
            }
            if (gen_count_only) out << count << '\n';
            return kOk;
        };
    });

    // verify
    VerifyOptions vo;
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "Run self-verification suites");
    verify->add_option("--suite", vo.suite, "bijection, sequences, series or all")
        ->check(CLI::IsMember({"bijection", "sequences", "series", "all"}));
    verify->add_option("--max-n", vo.max_n, "Largest brute-force / bijection size");
    verify->add_option("--max-closed", vo.max_closed, "Largest index for closed-form checks");
    verify->add_option("--order", vo.order, "Series order");
    verify->add_flag("--json", verify_json, "JSON report");
    verify->add_flag("--expect-failure", vo.inject_failure,
                     "Inject a corrupt reference value; the run must then fail");
    verify->callback([&] {
        action = [&] {
            vo.workers = g.workers;
            vo.max_brute_n = g.max_brute_n;
            const VerifyOutcome outcome = run_verification(vo);
            if (verify_json) {
                out << outcome.to_json().dump() << '\n';
            } else {
                out << outcome.to_text();
            }
            return outcome.passed() ? kOk : kDiscrepancy;
        };
    });

    // normalize
    std::string norm_input;
    auto* norm = app.add_subcommand("normalize", "Print N(p), the 132-avoider in p's class");
    norm->add_option("perm", norm_input, "Permutation")->required();
    norm->callback([&] {
        action = [&] {
            out << normalize(Permutation::parse(norm_input)).to_string() << '\n';
            return kOk;
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUserError;
    }

    try {
        if (g.kernel != "auto") kernels::select_isa(kernels::parse_isa(g.kernel));
        return action();
    } catch (const ResourceError& e) {
        err << "refused: " << e.what() << '\n';
        return kCeiling;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kUserError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUserError;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUserError;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kDiscrepancy;
    }
}

}  // namespace avoid::cli
