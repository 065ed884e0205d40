#pragma once

#include "nnirank2/exact.hpp"
#include "nnirank2/solver.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nnirank2 {

struct BenchRecord {
    std::size_t n = 0;
    std::size_t m = 0;
    double sigma_or_t = 0;
    std::size_t count = 0;
    double avg_largest_entry = 0;
    double min_seconds = 0;
    double avg_seconds = 0;
    double max_seconds = 0;
    std::size_t rank2_count = 0;
    std::optional<double> reduce_seconds;         // table2
    std::optional<double> reduced_factor_seconds; // table2
    std::optional<double> avg_entry;              // near_t
};

enum class BenchSuite { table1, table2, bt, near_t };
BenchSuite parse_bench_suite(std::string_view s);
std::string_view to_string(BenchSuite s);

struct BenchConfig {
    BenchSuite suite = BenchSuite::table1;
    std::uint64_t seed = 0;
    std::size_t count = 100;
    std::vector<std::size_t> sizes;   // empty: suite default
    std::vector<double> sigmas;       // empty: suite default
    long t_min = 0;                   // 0: suite default
    long t_max = 0;
    unsigned threads = 1;
};

struct TimedSolve {
    SolveOutcome outcome;
    double seconds = 0;
};

/// Wall-clock time of solve() alone.
TimedSolve timed_solve(const IntMatrix& a);

/// One (n, sigma) cell of square product instances.
BenchRecord bench_product_cell(std::size_t n, double sigma, std::size_t count, std::uint64_t seed, unsigned threads = 1,
                               bool with_reduction = false);

std::vector<BenchRecord> run_bench(const BenchConfig& cfg);

/// Header plus one line per record; table2 and near_t add their columns.
void write_csv(std::ostream& os, BenchSuite suite, const std::vector<BenchRecord>& records);

/// NNIRANK2_THREADS, at least 1; 1 when unset or invalid.
unsigned env_threads();

} // namespace nnirank2
