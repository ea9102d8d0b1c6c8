#include "multipart/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "multipart/bfile.hpp"

namespace multipart::cli {

namespace {

const BigInt kWordMax{"18446744073709551615"};

std::uint64_t parse_word(const std::string& text, const Options& opts) {
    return parse_positive(text, std::min(opts.max_n, kWordMax)).get_ui();
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const IntegralityError& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace

BigInt parse_positive(const std::string& text, const BigInt& cap) {
    if (text.empty() || !std::ranges::all_of(text, [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw UsageError("'" + text + "' is not a positive decimal integer");
    BigInt n(text);
    if (n < 1)
        throw UsageError("n must be at least 1");
    if (n > cap)
        throw UsageError("n exceeds the input cap " + cap.get_str() + " (raise it with --max-n)");
    return n;
}

std::string format_factorization(const Factorization& f) {
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i != 0)
            out += '.';
        out += std::to_string(f[i]);
    }
    return out;
}

std::vector<NamedEngine> default_engines() {
    struct State {
        StarCache cache;
        PartitionTable ptable;
    };
    auto hs = std::make_shared<State>();
    auto reduced = std::make_shared<State>();
    auto gf = std::make_shared<State>();
    return {
        {"brute", [](std::uint64_t n) { return brute_force_count(n); }},
        {"hs", [hs](std::uint64_t n) { return hs_count(to_signature(factorize(n)), hs->cache); }},
        {"reduced",
         [reduced](std::uint64_t n) {
             return reduced_count(to_signature(factorize(n)), reduced->cache, reduced->ptable);
         }},
        {"gf", [gf](std::uint64_t n) { return gf_count(to_signature(factorize(n)), gf->ptable); }},
    };
}

CompareReport compare_engines(std::uint64_t n_max, std::vector<NamedEngine> engines) {
    CompareReport report;
    report.n_max = n_max;
    report.stats.resize(engines.size());
    report.values.assign(engines.size(), std::vector<BigInt>(n_max));
    std::vector<std::exception_ptr> errors(engines.size());
    {
        std::vector<std::jthread> workers;
        for (std::size_t e = 0; e < engines.size(); ++e) {
            workers.emplace_back([&, e] {
                try {
                    const auto start = std::chrono::steady_clock::now();
                    BigInt total = 0;
                    for (std::uint64_t n = 1; n <= n_max; ++n) {
                        report.values[e][n - 1] = engines[e].fn(n);
                        total += report.values[e][n - 1];
                    }
                    report.stats[e] = {engines[e].name, total, std::chrono::steady_clock::now() - start};
                } catch (...) {
                    errors[e] = std::current_exception();
                }
            });
        }
    }
    for (const auto& ep : errors)
        if (ep)
            std::rethrow_exception(ep);

    for (std::uint64_t n = 1; n <= n_max && !report.first_mismatch; ++n)
        for (std::size_t e = 1; e < engines.size(); ++e)
            if (report.values[e][n - 1] != report.values[0][n - 1]) {
                report.first_mismatch = n;
                break;
            }
    return report;
}

int cmd_count(const std::string& n_text, Engine engine, const Options& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const BigInt n = parse_positive(n_text, opts.max_n);
        StarCache cache;
        PartitionTable ptable;
        out << count_with(engine, n, cache, ptable) << '\n';
        return kExitOk;
    });
}

int cmd_list(const std::string& n_text, const Options& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const std::uint64_t n = parse_word(n_text, opts);
        if (n == 1) {
            out << "1 (empty product)\n";
            return kExitOk;
        }
        for (const Factorization& f : brute_force_list(n))
            out << format_factorization(f) << '\n';
        return kExitOk;
    });
}

int cmd_compare(const std::string& n_max_text, const Options& opts, std::ostream& out, std::ostream& err,
                std::vector<NamedEngine> engines) {
    return guarded(err, [&] {
        const std::uint64_t n_max = parse_word(n_max_text, opts);
        const CompareReport report = compare_engines(n_max, std::move(engines));
        for (const EngineStats& s : report.stats) {
            out << std::left << std::setw(8) << s.name << " total=" << s.total;
            if (opts.timing)
                out << " time=" << std::fixed << std::setprecision(1) << s.elapsed.count() << "ms";
            out << '\n';
        }
        if (report.first_mismatch) {
            const std::uint64_t n = *report.first_mismatch;
            out << "MISMATCH at n=" << n << ':';
            for (std::size_t e = 0; e < report.stats.size(); ++e)
                out << ' ' << report.stats[e].name << '=' << report.values[e][n - 1];
            out << '\n';
            out << "FAIL " << n - 1 << '/' << n_max << " agree before first disagreement\n";
            return kExitDisagree;
        }
        out << "OK " << n_max << '/' << n_max << " agree\n";
        return kExitOk;
    });
}

int cmd_seq(const std::string& n_max_text, SeqFormat format, const Options& opts, std::ostream& out,
            std::ostream& err) {
    return guarded(err, [&] {
        const std::uint64_t n_max = parse_word(n_max_text, opts);
        Session session;
        for (std::uint64_t n = 1; n <= n_max; ++n) {
            const BigInt v = session.count(BigInt(static_cast<unsigned long>(n)));
            switch (format) {
            case SeqFormat::Plain: out << v << '\n'; break;
            case SeqFormat::BFile: out << n << ' ' << v << '\n'; break;
            case SeqFormat::Jsonl: out << "{\"n\":" << n << ",\"pstar\":" << v << "}\n"; break;
            }
        }
        return kExitOk;
    });
}

int cmd_termcount(const std::string& n_text, const Options& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const BigInt n = parse_positive(n_text, opts.max_n);
        if (n == 1)
            throw UsageError("termcount needs n >= 2");
        const TermCount tc = term_count(to_signature(factorize(n)));
        const auto claimed = static_cast<std::int64_t>(tc.claimed_difference);
        out << "hs_terms " << tc.hs_terms << '\n'
            << "reduced_terms " << tc.reduced_terms << '\n'
            << "measured_difference " << tc.measured_difference() << '\n'
            << "claimed_difference " << claimed << '\n';
        if (tc.measured_difference() == claimed)
            out << "claimed difference matches\n";
        else
            out << "MISMATCH: measured difference is " << claimed - tc.measured_difference()
                << " below the claimed (n_2+1)...(n_k+1)\n";
        return kExitOk;
    });
}

int cmd_verify(const std::string& path, std::optional<std::uint64_t> limit, const Options& opts, std::ostream& out,
               std::ostream& err) {
    (void)opts;
    return guarded(err, [&] {
        std::ifstream in(path);
        if (!in)
            throw UsageError("cannot open " + path);
        std::vector<BFileRecord> records;
        try {
            records = parse_bfile(in);
        } catch (const BFileParseError& e) {
            throw UsageError(path + ": " + e.what());
        }
        if (records.empty())
            err << "warning: " << path << " contains no records\n";

        Session session;
        std::uint64_t verified = 0;
        for (const BFileRecord& rec : records) {
            if (limit && rec.index > *limit)
                break;
            if (rec.index == 0)
                throw UsageError(path + ": index 0 is outside the sequence domain");
            const BigInt got = session.count(BigInt(static_cast<unsigned long>(rec.index)));
            if (got != rec.value) {
                out << "MISMATCH at index " << rec.index << ": b-file " << rec.value << ", computed " << got << '\n';
                return kExitMismatch;
            }
            ++verified;
        }
        out << "OK " << verified << " terms verified\n";
        return kExitOk;
    });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Count and enumerate unordered factorizations p*(n)", "multipart"};
    app.require_subcommand(1);

    Options opts;
    std::string max_n_text;
    bool no_timing = false;
    app.add_option("--max-n", max_n_text, "Largest accepted n (default 2^64-1)");
    app.add_flag("--no-timing", no_timing, "Suppress timing fields");

    std::string n_text;
    std::string engine_text = "auto";
    std::string format_text = "plain";
    std::string path;
    std::optional<std::uint64_t> limit;

    auto* count = app.add_subcommand("count", "Print p*(n)");
    count->add_option("n", n_text)->required();
    count->add_option("--engine", engine_text, "auto|brute|hs|reduced|gf")
        ->check(CLI::IsMember({"auto", "brute", "hs", "reduced", "gf"}));

    auto* list = app.add_subcommand("list", "Print every unordered factorization of n");
    list->add_option("n", n_text)->required();

    auto* compare = app.add_subcommand("compare", "Cross-check all engines on 1..n_max");
    compare->add_option("n_max", n_text)->required();

    auto* seq = app.add_subcommand("seq", "Print p*(1)..p*(n_max)");
    seq->add_option("n_max", n_text)->required();
    seq->add_option("--format", format_text, "plain|bfile|jsonl")
        ->check(CLI::IsMember({"plain", "bfile", "jsonl"}));

    auto* termcount = app.add_subcommand("termcount", "Compare summand counts of the two recurrences");
    termcount->add_option("n", n_text)->required();

    auto* verify = app.add_subcommand("verify", "Check p*(n) against an OEIS b-file");
    verify->add_option("bfile", path)->required();
    verify->add_option("--limit", limit, "Only check indices up to L");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    opts.timing = !no_timing;
    if (!max_n_text.empty()) {
        try {
            const bool digits = std::ranges::all_of(max_n_text, [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
            if (!digits)
                throw UsageError("'" + max_n_text + "' is not a positive decimal integer");
            opts.max_n = parse_positive(max_n_text, BigInt(max_n_text));
        } catch (const UsageError& e) {
            err << "error: --max-n: " << e.what() << '\n';
            return kExitUsage;
        }
    }

    if (*count)
        return cmd_count(n_text, *parse_engine(engine_text), opts, out, err);
    if (*list)
        return cmd_list(n_text, opts, out, err);
    if (*compare)
        return cmd_compare(n_text, opts, out, err);
    if (*seq) {
        const SeqFormat fmt = format_text == "bfile"   ? SeqFormat::BFile
                              : format_text == "jsonl" ? SeqFormat::Jsonl
                                                       : SeqFormat::Plain;
        return cmd_seq(n_text, fmt, opts, out, err);
    }
    if (*termcount)
        return cmd_termcount(n_text, opts, out, err);
    return cmd_verify(path, limit, opts, out, err);
}

}  // namespace multipart::cli
