// coinwords CLI: factorize words, trace the parity toggle, and run the
// exhaustive identity suites with machine-readable reports.
//
// Exit codes: 0 ok, 1 an asserted identity has a counterexample, 2 usage or
// parse error.

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "coinwords/enumeration.hpp"
#include "coinwords/errors.hpp"
#include "coinwords/involution.hpp"
#include "coinwords/lyndon.hpp"
#include "coinwords/permutations.hpp"
#include "coinwords/witt.hpp"
#include "coinwords/words.hpp"

namespace {

using coinwords::BigInt;
using coinwords::MultisetSpec;
using coinwords::Word;
using nlohmann::ordered_json;

struct OutputOptions {
    bool json = false;
    std::string out_path;
};

int finish(const ordered_json& report, const std::string& text, const OutputOptions& options) {
    if (options.json)
        std::cout << report.dump(2) << '\n';
    else
        std::cout << text;
    if (!options.out_path.empty()) {
        std::ofstream out(options.out_path);
        if (!out) {
            std::cerr << "cannot open output file: " << options.out_path << '\n';
            return 2;
        }
        out << report.dump(2) << '\n';
    }
    return report.at("status") == "ok" ? 0 : 1;
}

ordered_json terms_to_json(const coinwords::TruncatedPolynomial& p) {
    ordered_json terms = ordered_json::array();
    for (const auto& [exponents, value] : p.terms()) {
        ordered_json term;
        term["exponents"] = std::vector<int>(exponents.counts().begin(), exponents.counts().end());
        term["coefficient"] = value.str();
        terms.push_back(std::move(term));
    }
    return terms;
}

int cmd_factorize(const std::string& word_text, const OutputOptions& options) {
    const Word w = Word::parse(word_text);
    const auto factors = coinwords::cfl_factorization(w);
    const auto tuple = coinwords::lyndon_tuple(w);

    ordered_json report;
    report["command"] = "factorize";
    report["inputs"]["word"] = word_text;
    ordered_json result;
    ordered_json factor_list = ordered_json::array();
    std::string factor_text;
    for (const Word& factor : factors) {
        factor_list.push_back(factor.str());
        factor_text += "(" + factor.str() + ")";
    }
    result["factors"] = std::move(factor_list);
    std::string text = "word: " + w.str() + "\nfactors: " + factor_text + "\n";
    if (tuple) {
        result["tuple"] = tuple->str();
        result["non_distinct_factors"] = false;
        result["lyndon_index"] = tuple->index();
        result["parity"] = coinwords::to_string(tuple->parity());
        text += "tuple: " + tuple->str() + "\n";
        text += "lyndon index: " + std::to_string(tuple->index()) + "\n";
        text += std::string("parity: ") + coinwords::to_string(tuple->parity()) + "\n";
    } else {
        result["tuple"] = nullptr;
        result["non_distinct_factors"] = true;
        text += "tuple: none (repeated factor)\n";
    }
    report["result"] = std::move(result);
    report["status"] = "ok";
    return finish(report, text, options);
}

int cmd_involute(const std::string& word_text, const OutputOptions& options) {
    const Word w = Word::parse(word_text);
    if (w.size() < 2) {
        std::cerr << "involute needs a word of at least two letters\n";
        return 2;
    }
    const auto tuple = coinwords::lyndon_tuple(w);
    if (!tuple) {
        std::cerr << "word admits no Lyndon tuple (repeated factor)\n";
        return 2;
    }
    const bool split = coinwords::is_splittable(*tuple);
    const Word image = coinwords::tuple_to_word(coinwords::toggle(*tuple));
    const auto image_tuple = coinwords::lyndon_tuple(image);
    const bool round_trip_ok =
        image_tuple && coinwords::tuple_to_word(coinwords::toggle(*image_tuple)) == w;

    ordered_json report;
    report["command"] = "involute";
    report["inputs"]["word"] = word_text;
    report["result"]["image"] = image.str();
    report["result"]["case"] = split ? "split" : "merge";
    report["result"]["round_trip_ok"] = round_trip_ok;
    report["status"] = round_trip_ok ? "ok" : "failed";

    std::string text = "word: " + w.str() + "\nimage: " + image.str() + "\n";
    text += std::string("case: ") + (split ? "split" : "merge") + "\n";
    text += std::string("round trip: ") + (round_trip_ok ? "ok" : "FAILED") + "\n";
    return finish(report, text, options);
}

int verify_coin(const MultisetSpec& m, std::optional<int> only_k, int threads,
                const OutputOptions& options) {
    const auto census = coinwords::parity_census(m, threads);
    const BigInt alternating = coinwords::alternating_sum(census);
    const bool balanced = census.even == census.odd;
    const bool sum_zero = alternating.is_zero();

    const auto oracle = coinwords::b_count_oracle_all(m);
    ordered_json mismatches = ordered_json::array();
    const int max_k = static_cast<int>(m.cardinality());
    for (int k = 1; k <= max_k; ++k) {
        if (only_k && *only_k != k) continue;
        const BigInt counted = census.tuples_of_length(k);
        const auto it = oracle.find(k);
        const BigInt recounted = it == oracle.end() ? BigInt{} : it->second;
        if (counted != recounted) {
            ordered_json bad;
            bad["k"] = k;
            bad["b_count"] = counted.str();
            bad["oracle"] = recounted.str();
            mismatches.push_back(std::move(bad));
        }
    }
    const bool oracle_agrees = mismatches.empty();
    const bool ok = balanced && sum_zero && oracle_agrees;

    ordered_json report;
    report["command"] = "verify";
    report["inputs"]["suite"] = "coin";
    report["inputs"]["multiset"] = m.str();
    report["inputs"]["threads"] = threads;
    ordered_json result;
    result["multiset"] = m.str();
    result["N"] = m.cardinality();
    result["arrangements"] = coinwords::count_permutations(m).str();
    result["even"] = census.even.str();
    result["odd"] = census.odd.str();
    result["excluded"] = census.excluded.str();
    ordered_json by_k;
    for (const auto& [k, count] : census.by_k) by_k[std::to_string(k)] = count.str();
    result["by_k"] = std::move(by_k);
    result["alternating_sum"] = alternating.str();
    result["even_equals_odd"] = balanced;
    result["alternating_sum_zero"] = sum_zero;
    result["b_oracle"]["agrees"] = oracle_agrees;
    result["b_oracle"]["mismatches"] = std::move(mismatches);
    report["result"] = std::move(result);
    report["status"] = ok ? "ok" : "failed";

    std::string text = "suite: coin\nmultiset: " + m.str() + "\n";
    text += "N: " + std::to_string(m.cardinality()) + "\n";
    text += "arrangements: " + coinwords::count_permutations(m).str() + "\n";
    text += "even: " + census.even.str() + "\nodd: " + census.odd.str() + "\n";
    text += "excluded: " + census.excluded.str() + "\nby_k:";
    for (const auto& [k, count] : census.by_k)
        text += " " + std::to_string(k) + ":" + count.str();
    text += "\nalternating sum: " + alternating.str() + "\n";
    text += std::string("b-counts vs oracle: ") + (oracle_agrees ? "agree" : "DISAGREE") + "\n";
    text += std::string("status: ") + (ok ? "ok" : "failed") + "\n";
    return finish(report, text, options);
}

int verify_involution_suite(const MultisetSpec& m, int threads, const OutputOptions& options) {
    const auto verification = coinwords::verify_involution(m, threads);

    ordered_json report;
    report["command"] = "verify";
    report["inputs"]["suite"] = "involution";
    report["inputs"]["multiset"] = m.str();
    report["inputs"]["threads"] = threads;
    ordered_json result;
    result["multiset"] = m.str();
    result["checked"] = verification.checked.str();
    result["excluded"] = verification.excluded.str();
    ordered_json failures = ordered_json::array();
    for (const auto& failure : verification.failures) {
        ordered_json entry;
        entry["word"] = failure.word.str();
        entry["check"] = failure.check;
        entry["detail"] = failure.detail;
        failures.push_back(std::move(entry));
    }
    result["failures"] = std::move(failures);
    report["result"] = std::move(result);
    report["status"] = verification.ok() ? "ok" : "failed";

    std::string text = "suite: involution\nmultiset: " + m.str() + "\n";
    text += "checked: " + verification.checked.str() + "\n";
    text += "excluded: " + verification.excluded.str() + "\n";
    text += "failures: " + std::to_string(verification.failures.size()) + "\n";
    for (const auto& failure : verification.failures)
        text += "  " + failure.word.str() + " " + failure.check + ": " + failure.detail + "\n";
    text += std::string("status: ") + (verification.ok() ? "ok" : "failed") + "\n";
    return finish(report, text, options);
}

int verify_witt_suite(int vars, int degree, const OutputOptions& options) {
    const auto witt = coinwords::verify_witt(vars, degree);

    ordered_json report;
    report["command"] = "verify";
    report["inputs"]["suite"] = "witt";
    report["inputs"]["vars"] = vars;
    report["inputs"]["degree"] = degree;
    ordered_json result;
    result["k"] = witt.variable_count;
    result["D"] = witt.max_degree;
    result["equal"] = witt.equal;
    result["lhs_terms"] = terms_to_json(witt.lhs);
    result["rhs_terms"] = terms_to_json(witt.rhs);
    report["result"] = std::move(result);
    report["status"] = witt.equal ? "ok" : "failed";

    std::string text = "suite: witt\nvariables: " + std::to_string(vars) + "\n";
    text += "degree: " + std::to_string(degree) + "\n";
    text += "lhs: " + witt.lhs.str() + "\nrhs: " + witt.rhs.str() + "\n";
    text += std::string("equal: ") + (witt.equal ? "yes" : "NO") + "\n";
    text += std::string("status: ") + (witt.equal ? "ok" : "failed") + "\n";
    return finish(report, text, options);
}

int verify_cauchy(int n, const OutputOptions& options) {
    ordered_json mismatches = ordered_json::array();
    coinwords::for_each_permutation(n, [&](const coinwords::Permutation& t) {
        const int inv = coinwords::inversions(t);
        const int index = coinwords::cycle_index(t);
        if (inv % 2 != index % 2) {
            ordered_json bad;
            bad["permutation"] = t.str();
            bad["inversions"] = inv;
            bad["cycle_index"] = index;
            mismatches.push_back(std::move(bad));
        }
    });
    const auto [even, odd] = coinwords::even_odd_counts(n);
    const bool balanced = n == 1 || even == odd;
    const bool ok = mismatches.empty() && balanced;

    ordered_json report;
    report["command"] = "verify";
    report["inputs"]["suite"] = "cauchy";
    report["inputs"]["n"] = n;
    ordered_json result;
    result["n"] = n;
    result["permutations"] = BigInt::factorial(n).str();
    result["parity_mismatches"] = std::move(mismatches);
    result["even"] = even.str();
    result["odd"] = odd.str();
    result["even_equals_odd"] = balanced;
    report["result"] = std::move(result);
    report["status"] = ok ? "ok" : "failed";

    std::string text = "suite: cauchy\nn: " + std::to_string(n) + "\n";
    text += "permutations: " + BigInt::factorial(n).str() + "\n";
    text += "parity mismatches: " +
            std::to_string(report["result"]["parity_mismatches"].size()) + "\n";
    text += "even: " + even.str() + "\nodd: " + odd.str() + "\n";
    text += std::string("status: ") + (ok ? "ok" : "failed") + "\n";
    return finish(report, text, options);
}

int verify_stirling(int n, std::optional<int> only_k, const OutputOptions& options) {
    const MultisetSpec set_case = MultisetSpec::all_ones(n);
    const auto census = coinwords::parity_census(set_case);
    ordered_json rows = ordered_json::array();
    bool all_equal = true;
    std::string text = "suite: stirling\nn: " + std::to_string(n) + "\n";
    for (int k = 1; k <= n; ++k) {
        if (only_k && *only_k != k) continue;
        const BigInt stirling = coinwords::stirling_cycle(n, k);
        const BigInt counted = census.tuples_of_length(k);
        const bool equal = stirling == counted;
        all_equal = all_equal && equal;
        ordered_json row;
        row["k"] = k;
        row["stirling"] = stirling.str();
        row["b_count"] = counted.str();
        row["equal"] = equal;
        rows.push_back(std::move(row));
        text += "k=" + std::to_string(k) + ": stirling " + stirling.str() + ", b-count " +
                counted.str() + (equal ? "" : "  MISMATCH") + "\n";
    }
    BigInt row_sum;
    for (int k = 0; k <= n; ++k) row_sum += coinwords::stirling_cycle(n, k);
    const BigInt expected = BigInt::factorial(n);
    const bool row_sum_ok = row_sum == expected;
    const bool ok = all_equal && row_sum_ok;

    ordered_json report;
    report["command"] = "verify";
    report["inputs"]["suite"] = "stirling";
    report["inputs"]["n"] = n;
    ordered_json result;
    result["n"] = n;
    result["rows"] = std::move(rows);
    result["row_sum"] = row_sum.str();
    result["factorial"] = expected.str();
    result["row_sum_equals_factorial"] = row_sum_ok;
    report["result"] = std::move(result);
    report["status"] = ok ? "ok" : "failed";

    text += "row sum: " + row_sum.str() + " (n! = " + expected.str() + ")\n";
    text += std::string("status: ") + (ok ? "ok" : "failed") + "\n";
    return finish(report, text, options);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coinwords: Lyndon factorizations, word parities and exhaustive identity checks"};
    app.require_subcommand(1);

    std::string word_text;
    std::string suite;
    std::string multiset_text;
    int n = 0;
    int k_flag = -1;
    int vars = 2;
    int degree = 6;
    int threads = 1;
    OutputOptions options;

    auto add_output_flags = [&](CLI::App* cmd) {
        cmd->add_flag("--json", options.json, "emit the JSON report on stdout");
        cmd->add_option("--out", options.out_path, "also write the JSON report to this file");
    };

    CLI::App* factorize = app.add_subcommand("factorize", "Lyndon-factorize a word");
    factorize->add_option("word", word_text, "word as rank digits or a comma list")->required();
    add_output_flags(factorize);

    CLI::App* involute = app.add_subcommand("involute", "apply the parity toggle to a word");
    involute->add_option("word", word_text, "word as rank digits or a comma list")->required();
    add_output_flags(involute);

    CLI::App* verify = app.add_subcommand("verify", "run an exhaustive identity suite");
    verify->add_option("suite", suite, "one of coin, involution, witt, cauchy, stirling")
        ->required();
    verify->add_option("--multiset", multiset_text, "multiset as rank:multiplicity pairs");
    verify->add_option("--n", n, "ground-set size for cauchy/stirling");
    verify->add_option("--k", k_flag, "restrict per-k checks to this k");
    verify->add_option("--vars", vars, "variable count for witt (default 2)");
    verify->add_option("--degree", degree, "truncation degree for witt (default 6)");
    verify->add_option("--threads", threads, "shard enumeration suites over this many workers");
    add_output_flags(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const std::optional<int> only_k = k_flag >= 0 ? std::optional<int>(k_flag) : std::nullopt;

    try {
        if (factorize->parsed()) return cmd_factorize(word_text, options);
        if (involute->parsed()) return cmd_involute(word_text, options);

        if (suite == "coin" || suite == "involution") {
            if (multiset_text.empty()) {
                std::cerr << "suite " << suite << " needs --multiset\n";
                return 2;
            }
            const MultisetSpec m = MultisetSpec::parse(multiset_text);
            if (m.cardinality() < 2) {
                std::cerr << "suite " << suite << " needs cardinality >= 2\n";
                return 2;
            }
            return suite == "coin" ? verify_coin(m, only_k, threads, options)
                                   : verify_involution_suite(m, threads, options);
        }
        if (suite == "witt") return verify_witt_suite(vars, degree, options);
        if (suite == "cauchy" || suite == "stirling") {
            if (n < 1) {
                std::cerr << "suite " << suite << " needs --n >= 1\n";
                return 2;
            }
            return suite == "cauchy" ? verify_cauchy(n, options)
                                     : verify_stirling(n, only_k, options);
        }
        std::cerr << "unknown suite: " << suite << '\n';
        return 2;
    } catch (const coinwords::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
