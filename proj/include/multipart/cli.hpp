#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "multipart/arith.hpp"
#include "multipart/engines.hpp"

namespace multipart::cli {

// Exit codes are part of the scripting contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;
inline constexpr int kExitDisagree = 4;
inline constexpr int kExitMismatch = 5;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    BigInt max_n{"18446744073709551615"};  // 2^64 - 1
    bool timing = true;
};

enum class SeqFormat { Plain, BFile, Jsonl };

/// Parses a decimal n with 1 <= n <= cap, throwing UsageError otherwise.
BigInt parse_positive(const std::string& text, const BigInt& cap);

/// Factor lists joined with '.', e.g. "2.3.3".
std::string format_factorization(const Factorization& f);

struct NamedEngine {
    std::string name;
    std::function<BigInt(std::uint64_t)> fn;
};

/// brute, hs, reduced, gf, each owning a private cache and partition table.
std::vector<NamedEngine> default_engines();

struct EngineStats {
    std::string name;
    BigInt total;
    std::chrono::duration<double, std::milli> elapsed{};
};

struct CompareReport {
    std::uint64_t n_max = 0;
    std::vector<EngineStats> stats;
    std::optional<std::uint64_t> first_mismatch;
    /// values[e][n - 1] is engine e's answer for n.
    std::vector<std::vector<BigInt>> values;
};

/// Runs every engine over 1..n_max, one thread per engine.
CompareReport compare_engines(std::uint64_t n_max, std::vector<NamedEngine> engines);

int cmd_count(const std::string& n_text, Engine engine, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_list(const std::string& n_text, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_compare(const std::string& n_max_text, const Options& opts, std::ostream& out, std::ostream& err,
                std::vector<NamedEngine> engines = default_engines());
int cmd_seq(const std::string& n_max_text, SeqFormat format, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_termcount(const std::string& n_text, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& path, std::optional<std::uint64_t> limit, const Options& opts, std::ostream& out,
               std::ostream& err);

/// Full command line entry point, argv[0] included.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace multipart::cli
