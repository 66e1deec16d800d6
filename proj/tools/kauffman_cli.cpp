// Command-line front end for the 2-bridge Kauffman polynomial pipeline.
//
// Exit codes: 0 success, 1 verification/batch failure, 2 usage or parse
// error, 3 internal invariant violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "kauffman/oracle.hpp"
#include "kauffman/pipeline.hpp"
#include "kauffman/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

nlohmann::json output_record(const kauffman::KauffmanResult& r,
                             const std::string& format, double timing_ms) {
    return {{"notation", r.notation.entries},
            {"value", kauffman::to_json(r.value)},
            {"format", format},
            {"reduced", r.reduced},
            {"timing_ms", timing_ms}};
}

int run_compute(const std::string& text, const std::string& format,
                bool no_reduce, bool mirror_check) {
    const auto t0 = Clock::now();
    kauffman::FractionNotation f;
    try {
        f = kauffman::parse_notation(text);
    } catch (const kauffman::notation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    const auto result = kauffman::kauffman_2bridge(f, !no_reduce);

    if (mirror_check) {
        const auto mirrored = kauffman::kauffman_2bridge(f.negated(), false);
        if (!(mirrored.value == result.value.mirror())) {
            std::cerr << "internal error: mirror self-test failed for "
                      << f.render() << "\n";
            return kExitInternal;
        }
        std::cerr << "mirror check passed\n";
    }

    if (format == "plain") {
        std::cout << result.value.to_plain() << "\n";
    } else if (format == "latex") {
        std::cout << result.value.to_latex() << "\n";
    } else {
        std::cout << output_record(result, format, ms_since(t0)).dump() << "\n";
    }
    return kExitOk;
}

struct VerifyConfig {
    long max_length = 3;
    long entry_range = 2;
    int max_crossings = 12;
    long samples = 0;
    bool inject_fault = false;  // test fixture: corrupts the pipeline value
};

bool verify_one(const kauffman::FractionNotation& f, const VerifyConfig& cfg,
                long& checked, long& skipped) {
    if (f.total_crossings() > cfg.max_crossings) {
        ++skipped;
        return true;
    }
    ++checked;
    kauffman::OracleOptions opt;
    opt.crossing_limit = cfg.max_crossings;
    kauffman::RatFunc pipeline = kauffman::kauffman_2bridge(f).value;
    if (cfg.inject_fault) pipeline *= kauffman::RatFunc::alpha(1);
    const auto direct = kauffman::kauffman_bruteforce(kauffman::build_diagram(f), opt);
    if (!(direct == pipeline)) {
        std::cout << "MISMATCH pipeline vs oracle: " << f.render() << "\n";
        return false;
    }
    const auto mirrored = kauffman::kauffman_2bridge(f.negated(), false);
    if (!(mirrored.value == pipeline.mirror())) {
        std::cout << "MISMATCH mirror property: " << f.render() << "\n";
        return false;
    }
    return true;
}

int run_verify(const VerifyConfig& cfg) {
    long checked = 0, skipped = 0, failed = 0;

    // Exhaustive sweep over odd lengths and entries in [-K, K] \ {0}.
    std::vector<long> entry_values;
    for (long v = -cfg.entry_range; v <= cfg.entry_range; ++v)
        if (v != 0) entry_values.push_back(v);
    for (long len = 1; len <= cfg.max_length; len += 2) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(len), 0);
        for (;;) {
            std::vector<long> entries;
            for (auto i : idx) entries.push_back(entry_values[i]);
            const auto f = kauffman::FractionNotation::from_entries(entries);
            if (!verify_one(f, cfg, checked, skipped)) ++failed;
            std::size_t k = 0;
            while (k < idx.size() && ++idx[k] == entry_values.size()) idx[k++] = 0;
            if (k == idx.size()) break;
        }
    }

    // Pseudo-random longer notations, fixed seed.
    long produced = 0;
    std::mt19937 gen(20260826);
    while (produced < cfg.samples) {
        std::vector<long> entries;
        long total = 0;
        const long len = 5;
        for (long i = 0; i < len; ++i) {
            long v = static_cast<long>(gen() % 3) + 1;
            if (gen() & 1) v = -v;
            entries.push_back(v);
            total += std::abs(v);
        }
        if (total > cfg.max_crossings) continue;
        ++produced;
        const auto f = kauffman::FractionNotation::from_entries(entries);
        if (!verify_one(f, cfg, checked, skipped)) ++failed;
    }

    std::cout << "verify: " << checked << " checked, " << skipped
              << " skipped (crossing limit), " << failed << " failed\n";
    return failed == 0 ? kExitOk : kExitFailure;
}

int run_batch(const std::string& path, const std::string& format) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        return kExitUsage;
    }
    std::string line;
    long lineno = 0, failures = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto t0 = Clock::now();
        try {
            const auto f = kauffman::parse_notation(line);
            const auto result = kauffman::kauffman_2bridge(f);
            std::cout << output_record(result, format, ms_since(t0)).dump() << "\n";
        } catch (const kauffman::notation_error& e) {
            std::cerr << path << ":" << lineno << ": " << e.what() << "\n";
            ++failures;
        }
    }
    return failures == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kauffman polynomials of 2-bridge knots and links"};
    app.require_subcommand(1);

    std::string notation;
    std::string format = "plain";
    bool no_reduce = false;
    bool mirror_check = false;
    auto* compute = app.add_subcommand("compute",
                                       "Kauffman polynomial of one notation");
    compute->add_option("notation", notation, "e.g. \"[-2,1,-2]\"")->required();
    compute->add_option("--format", format, "plain|latex|json")
        ->check(CLI::IsMember({"plain", "latex", "json"}));
    compute->add_flag("--no-reduce", no_reduce, "keep the raw pipeline fraction");
    compute->add_flag("--mirror-check", mirror_check,
                      "run the (alpha,s)->(1/alpha,1/s) self-test inline");

    VerifyConfig vcfg;
    auto* verify = app.add_subcommand("verify",
                                      "pipeline-vs-oracle verification sweep");
    verify->add_option("--max-length", vcfg.max_length, "largest notation length")
        ->check(CLI::PositiveNumber);
    verify->add_option("--entry-range", vcfg.entry_range,
                       "sweep entries in [-K,K] without 0")
        ->check(CLI::PositiveNumber);
    verify->add_option("--max-crossings", vcfg.max_crossings,
                       "oracle crossing limit");
    verify->add_option("--samples", vcfg.samples,
                       "extra pseudo-random length-5 notations");
    verify->add_flag("--inject-fault", vcfg.inject_fault)->group("");

    std::string batch_path;
    std::string batch_format = "json";
    auto* batch = app.add_subcommand("batch", "one notation per line, JSON lines out");
    batch->add_option("file", batch_path, "input file")->required();
    batch->add_option("--format", batch_format, "json")
        ->check(CLI::IsMember({"json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (compute->parsed())
            return run_compute(notation, format, no_reduce, mirror_check);
        if (verify->parsed()) return run_verify(vcfg);
        return run_batch(batch_path, batch_format);
    } catch (const kauffman::notation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
