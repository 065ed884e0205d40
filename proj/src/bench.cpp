#include "nnirank2/bench.hpp"

#include "nnirank2/instancegen.hpp"
#include "nnirank2/reduction.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <ostream>
#include <thread>

namespace nnirank2 {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t cell_seed(std::uint64_t master, std::size_t n, double sigma) {
    return mix(master ^ mix(n) ^ mix(static_cast<std::uint64_t>(sigma * 1000)));
}

template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& f) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i)
            f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; !failed && (i = next++) < count;) {
                try {
                    f(i);
                } catch (...) {
                    if (!failed.exchange(true))
                        err = std::current_exception();
                }
            }
        });
    for (auto& th : pool)
        th.join();
    if (err)
        std::rethrow_exception(err);
}

double to_double(const Int& v) { return v.get_d(); }

double max_entry(const IntMatrix& a) { return to_double(a.max_abs()); }

double mean_entry(const IntMatrix& a) {
    Int s = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            s += a(i, j);
    return to_double(s) / static_cast<double>(a.rows() * a.cols());
}

bool positive_verdict(Verdict v) { return v != Verdict::not_rank2; }

std::string num(double x) {
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, r.ptr);
}

void fill_times(BenchRecord& rec, const std::vector<double>& t) {
    rec.min_seconds = *std::min_element(t.begin(), t.end());
    rec.max_seconds = *std::max_element(t.begin(), t.end());
    double s = 0;
    for (double x : t)
        s += x;
    rec.avg_seconds = s / static_cast<double>(t.size());
}

} // namespace

BenchSuite parse_bench_suite(std::string_view s) {
    if (s == "table1")
        return BenchSuite::table1;
    if (s == "table2")
        return BenchSuite::table2;
    if (s == "bt")
        return BenchSuite::bt;
    if (s == "near_t")
        return BenchSuite::near_t;
    throw InputError("unknown bench suite '" + std::string(s) + "'");
}

std::string_view to_string(BenchSuite s) {
    switch (s) {
    case BenchSuite::table1:
        return "table1";
    case BenchSuite::table2:
        return "table2";
    case BenchSuite::bt:
        return "bt";
    case BenchSuite::near_t:
        return "near_t";
    }
    return "unknown";
}

unsigned env_threads() {
    const char* v = std::getenv("NNIRANK2_THREADS");
    if (!v)
        return 1;
    char* end = nullptr;
    const long n = std::strtol(v, &end, 10);
    if (end == v || *end != '\0' || n < 1)
        return 1;
    return static_cast<unsigned>(n);
}

TimedSolve timed_solve(const IntMatrix& a) {
    const auto t0 = Clock::now();
    SolveOutcome o = solve(a);
    const double s = seconds_since(t0);
    return {std::move(o), s};
}

BenchRecord bench_product_cell(std::size_t n, double sigma, std::size_t count, std::uint64_t seed, unsigned threads,
                               bool with_reduction) {
    if (count == 0)
        throw InputError("count must be positive");
    const auto seeds = instance_seeds(seed, count);
    std::vector<double> times(count), largest(count), red(count), red_factor(count);
    std::vector<char> positive(count);
    parallel_for(count, threads, [&](std::size_t i) {
        const IntMatrix a = gen_product(n, n, sigma, seeds[i]).A;
        largest[i] = max_entry(a);
        const TimedSolve ts = timed_solve(a);
        times[i] = ts.seconds;
        positive[i] = positive_verdict(ts.outcome.verdict);
        if (with_reduction) {
            const auto t0 = Clock::now();
            const IntMatrix c = reduce_to_3x3(a);
            red[i] = seconds_since(t0);
            const TimedSolve rs = timed_solve(c);
            red_factor[i] = rs.seconds;
            if (positive_verdict(rs.outcome.verdict) != positive[i])
                throw std::logic_error("reduced instance changed the verdict");
        }
    });
    BenchRecord rec;
    rec.n = rec.m = n;
    rec.sigma_or_t = sigma;
    rec.count = count;
    double s = 0;
    for (double x : largest)
        s += x;
    rec.avg_largest_entry = s / static_cast<double>(count);
    fill_times(rec, times);
    rec.rank2_count = static_cast<std::size_t>(std::count(positive.begin(), positive.end(), 1));
    if (with_reduction) {
        double r = 0, f = 0;
        for (std::size_t i = 0; i < count; ++i) {
            r += red[i];
            f += red_factor[i];
        }
        rec.reduce_seconds = r / static_cast<double>(count);
        rec.reduced_factor_seconds = f / static_cast<double>(count);
    }
    return rec;
}

std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
    std::vector<BenchRecord> out;
    switch (cfg.suite) {
    case BenchSuite::table1:
    case BenchSuite::table2: {
        const bool t2 = cfg.suite == BenchSuite::table2;
        std::vector<std::size_t> sizes = cfg.sizes;
        std::vector<double> sigmas = cfg.sigmas;
        if (sizes.empty())
            sizes = t2 ? std::vector<std::size_t>{10} : std::vector<std::size_t>{3, 5, 10, 50, 100};
        if (sigmas.empty())
            sigmas = {3, 6, 10, 25};
        for (std::size_t n : sizes)
            for (double sigma : sigmas)
                out.push_back(bench_product_cell(n, sigma, cfg.count, cell_seed(cfg.seed, n, sigma), cfg.threads, t2));
        break;
    }
    case BenchSuite::bt: {
        const long lo = cfg.t_min > 0 ? cfg.t_min : 1;
        const long hi = cfg.t_max > 0 ? cfg.t_max : 100;
        if (hi < lo)
            throw InputError("empty t range");
        for (long t = lo; t <= hi; ++t) {
            const IntMatrix a = gen_bt(t);
            const TimedSolve ts = timed_solve(a);
            BenchRecord rec;
            rec.n = rec.m = 3;
            rec.sigma_or_t = static_cast<double>(t);
            rec.count = 1;
            rec.avg_largest_entry = max_entry(a);
            rec.min_seconds = rec.avg_seconds = rec.max_seconds = ts.seconds;
            rec.rank2_count = positive_verdict(ts.outcome.verdict) ? 1 : 0;
            out.push_back(rec);
        }
        break;
    }
    case BenchSuite::near_t: {
        const long lo = cfg.t_min > 0 ? cfg.t_min : 3;
        const long hi = cfg.t_max > 0 ? cfg.t_max : 100;
        if (lo < 3 || hi < lo)
            throw InputError("t range must satisfy 3 <= t_min <= t_max");
        const auto seeds = instance_seeds(cfg.seed, cfg.count);
        out.resize(cfg.count);
        parallel_for(cfg.count, cfg.threads, [&](std::size_t i) {
            Rng rng(seeds[i]);
            const long t = std::uniform_int_distribution<long>(lo, hi)(rng);
            const IntMatrix a = gen_near_t(t, rng);
            const TimedSolve ts = timed_solve(a);
            BenchRecord& rec = out[i];
            rec.n = rec.m = 3;
            rec.sigma_or_t = static_cast<double>(t);
            rec.count = 1;
            rec.avg_largest_entry = max_entry(a);
            rec.min_seconds = rec.avg_seconds = rec.max_seconds = ts.seconds;
            rec.rank2_count = positive_verdict(ts.outcome.verdict) ? 1 : 0;
            rec.avg_entry = mean_entry(a);
        });
        break;
    }
    }
    return out;
}

void write_csv(std::ostream& os, BenchSuite suite, const std::vector<BenchRecord>& records) {
    os << "n,m,sigma_or_t,count,avg_largest_entry,min_seconds,avg_seconds,max_seconds,rank2_count";
    if (suite == BenchSuite::table2)
        os << ",reduce_seconds,reduced_factor_seconds";
    if (suite == BenchSuite::near_t)
        os << ",avg_entry";
    os << '\n';
    for (const auto& r : records) {
        os << r.n << ',' << r.m << ',' << num(r.sigma_or_t) << ',' << r.count << ',' << num(r.avg_largest_entry) << ','
           << num(r.min_seconds) << ',' << num(r.avg_seconds) << ',' << num(r.max_seconds) << ',' << r.rank2_count;
        if (suite == BenchSuite::table2)
            os << ',' << num(r.reduce_seconds.value_or(0)) << ',' << num(r.reduced_factor_seconds.value_or(0));
        if (suite == BenchSuite::near_t)
            os << ',' << num(r.avg_entry.value_or(0));
        os << '\n';
    }
}

} // namespace nnirank2
