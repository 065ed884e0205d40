#include "nnirank2/cli.hpp"

#include "nnirank2/bench.hpp"
#include "nnirank2/diagram.hpp"
#include "nnirank2/instancegen.hpp"
#include "nnirank2/matrix_io.hpp"
#include "nnirank2/oracle.hpp"
#include "nnirank2/reduction.hpp"
#include "nnirank2/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>

namespace nnirank2 {

namespace {

using nlohmann::json;

json to_json(const Int& v) {
    if (v.fits_slong_p())
        return v.get_si();
    return v.get_str();
}

json to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.push_back(to_json(m(i, j)));
        rows.push_back(std::move(r));
    }
    return rows;
}

json to_json(const PlanePoint& p) { return json::array({to_json(p.x), to_json(p.y)}); }

std::string point_list(const std::vector<PlanePoint>& pts) {
    std::ostringstream os;
    for (std::size_t i = 0; i < pts.size(); ++i)
        os << (i ? " " : "") << pts[i];
    return os.str();
}

struct FactorArgs {
    std::string input;
    bool json = false;
    int r = 1;
    bool explain = false;
};

int cmd_factor(const FactorArgs& a, std::ostream& out) {
    const IntMatrix m = read_matrix_file(a.input);
    SearchOptions opts;
    opts.canon_index = a.r;
    opts.record_rejections = a.explain;
    const SolveOutcome o = solve(m, opts);

    const IntMatrix* f1 = nullptr;
    const IntMatrix* f2 = nullptr;
    if (o.certificate) {
        f1 = &o.certificate->F1;
        f2 = &o.certificate->F2;
        if (!verify_factorization(m, *f1, *f2))
            throw std::logic_error("refusing to print an unverified factorization");
    } else if (o.rank1) {
        f1 = &o.rank1->left;
        f2 = &o.rank1->right;
        if (!(*f1 * *f2 == m) || !f1->is_nonnegative() || !f2->is_nonnegative())
            throw std::logic_error("refusing to print an unverified factorization");
    }

    if (a.json) {
        json doc;
        doc["verdict"] = std::string(to_string(o.verdict));
        doc["pairs_examined"] = o.pairs_examined;
        doc["F1"] = f1 ? to_json(*f1) : json(nullptr);
        doc["F2"] = f2 ? to_json(*f2) : json(nullptr);
        doc["generators"] =
            o.certificate ? json::array({to_json(o.certificate->pair.a), to_json(o.certificate->pair.b)}) : json(nullptr);
        if (a.explain) {
            json rej = json::array();
            for (const auto& r : o.rejections)
                rej.push_back({{"a", to_json(r.pair.a)},
                               {"b", to_json(r.pair.b)},
                               {"failing_point", r.failing_index},
                               {"w", json::array({to_string(r.w1), to_string(r.w2)})}});
            doc["rejections"] = std::move(rej);
        }
        out << doc.dump() << '\n';
    } else {
        out << "verdict: " << to_string(o.verdict) << '\n';
        out << "pairs_examined: " << o.pairs_examined << '\n';
        if (a.explain)
            for (const auto& r : o.rejections)
                out << "rejected: a=" << r.pair.a << " b=" << r.pair.b << " point=" << r.failing_index
                    << " w=(" << to_string(r.w1) << ", " << to_string(r.w2) << ")\n";
        if (o.certificate)
            out << "generators: " << o.certificate->pair.a << ' ' << o.certificate->pair.b << '\n';
        if (f1)
            out << "F1:\n" << *f1 << "F2:\n" << *f2;
    }
    return o.verdict == Verdict::not_rank2 ? exit_not_rank2 : exit_factorable;
}

struct ReduceArgs {
    std::string input;
    bool trace = false;
    std::string output;
};

int cmd_reduce(const ReduceArgs& a, std::ostream& out) {
    const IntMatrix m = read_matrix_file(a.input);
    ReductionTrace tr;
    const IntMatrix c = reduce_to_3x3(m, &tr);
    if (!a.output.empty())
        write_matrix_file(a.output, c);
    else
        out << c;
    if (a.trace)
        out << format_trace(tr);
    return exit_factorable;
}

struct GenerateArgs {
    std::string kind = "product";
    std::size_t rows = 3;
    std::size_t cols = 3;
    double sigma = 3;
    long t = 4;
    std::uint64_t seed = 0;
    std::size_t count = 1;
    std::string outdir = ".";
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
    GenSpec spec;
    spec.kind = parse_gen_kind(a.kind);
    spec.rows = a.rows;
    spec.cols = a.cols;
    spec.sigma = a.sigma;
    spec.t = a.t;
    spec.seed = a.seed;
    const auto mats = generate(spec, a.count);
    std::filesystem::create_directories(a.outdir);
    for (std::size_t i = 0; i < mats.size(); ++i) {
        const auto path = std::filesystem::path(a.outdir) /
                          (std::string(to_string(spec.kind)) + "_" + std::to_string(a.seed) + "_" + std::to_string(i) + ".txt");
        write_matrix_file(path.string(), mats[i]);
        out << path.string() << '\n';
    }
    return exit_factorable;
}

struct BenchArgs {
    std::string suite;
    std::uint64_t seed = 0;
    std::string out;
    std::size_t count = 100;
    std::vector<std::size_t> sizes;
    std::vector<double> sigmas;
    long t_min = 0;
    long t_max = 0;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
    BenchConfig cfg;
    cfg.suite = parse_bench_suite(a.suite);
    cfg.seed = a.seed;
    cfg.count = a.count;
    cfg.sizes = a.sizes;
    cfg.sigmas = a.sigmas;
    cfg.t_min = a.t_min;
    cfg.t_max = a.t_max;
    cfg.threads = env_threads();
    if (cfg.count == 0)
        throw InputError("count must be positive");
    const auto recs = run_bench(cfg);
    if (a.out.empty()) {
        write_csv(out, cfg.suite, recs);
    } else {
        std::ofstream f(a.out);
        if (!f)
            throw InputError("cannot write '" + a.out + "'");
        write_csv(f, cfg.suite, recs);
    }
    return exit_factorable;
}

struct DiagramArgs {
    std::string input;
    bool canonical = false;
    int r = 1;
    bool json = false;
};

int cmd_diagram(const DiagramArgs& a, std::ostream& out) {
    const IntMatrix m = read_matrix_file(a.input);
    CanonicalDiagram cd;
    cd.diagram = build_diagram(m);
    if (a.canonical)
        cd = canonicalize(cd.diagram, a.r);
    const Diagram& d = cd.diagram;
    if (a.json) {
        json doc;
        doc["basis"] = to_json(d.basis);
        json pts = json::array();
        for (const auto& p : d.points)
            pts.push_back(to_json(p));
        doc["points"] = std::move(pts);
        doc["cone"] = json::array({to_json(d.cone_gens[0]), to_json(d.cone_gens[1])});
        doc["ray_rows"] = json::array({d.ray_rows[0], d.ray_rows[1]});
        if (a.canonical) {
            doc["transform"] = to_json(cd.transform);
            doc["canon_index"] = cd.canon_index;
        }
        out << doc.dump() << '\n';
    } else {
        out << "basis:\n" << d.basis;
        out << "points: " << point_list(d.points) << '\n';
        out << "cone: " << d.cone_gens[0] << ' ' << d.cone_gens[1] << '\n';
        out << "ray_rows: " << d.ray_rows[0] << ' ' << d.ray_rows[1] << '\n';
        if (a.canonical)
            out << "transform:\n" << cd.transform << "canon_index: " << cd.canon_index << '\n';
    }
    return exit_factorable;
}

int cmd_oracle(const std::string& input, std::ostream& out) {
    const IntMatrix m = read_matrix_file(input);
    if (!m.is_nonnegative())
        throw InputError("matrix has negative entries");
    const std::size_t r = rank_exact(m);
    if (r > 2)
        throw RankError("matrix has rank " + std::to_string(r) + "; only rank <= 2 is supported");
    if (r <= 1) {
        out << "verdict: " << to_string(Verdict::rank_le_1) << '\n';
        return exit_factorable;
    }
    const OracleVerdict v = brute_force(canonicalize(build_diagram(m)));
    out << "verdict: " << (v.rank2 ? "rank2" : "not_rank2") << '\n';
    out << "pairs_enumerated: " << v.pairs_enumerated << '\n';
    if (v.witness)
        out << "witness: " << v.witness->a << ' ' << v.witness->b << '\n';
    return v.rank2 ? exit_factorable : exit_not_rank2;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Nonnegative integer rank 2 factorization"};
    app.name("nnirank2");
    app.require_subcommand(1);

    FactorArgs fa;
    auto* factor = app.add_subcommand("factor", "Decide rank 2 and print a factorization");
    factor->add_option("input", fa.input, "Matrix file")->required();
    factor->add_flag("--json", fa.json, "Machine-readable output");
    factor->add_option("--r", fa.r, "Cone generator sent to (1,0)")->check(CLI::IsMember({1, 2}));
    factor->add_flag("--explain", fa.explain, "Show why each candidate pair failed");

    ReduceArgs ra;
    auto* reduce = app.add_subcommand("reduce", "Reduce to an equivalent 3x3 matrix");
    reduce->add_option("input", ra.input, "Matrix file")->required();
    reduce->add_flag("--trace", ra.trace, "Print the construction");
    reduce->add_option("--output", ra.output, "Write the 3x3 matrix here");

    GenerateArgs ga;
    auto* gen = app.add_subcommand("generate", "Write random instances");
    gen->add_option("--kind", ga.kind, "product, bt or near_t");
    gen->add_option("--rows", ga.rows);
    gen->add_option("--cols", ga.cols);
    gen->add_option("--sigma", ga.sigma);
    gen->add_option("--t", ga.t);
    gen->add_option("--seed", ga.seed);
    gen->add_option("--count", ga.count);
    gen->add_option("--outdir", ga.outdir);

    BenchArgs ba;
    auto* bench = app.add_subcommand("bench", "Run a benchmark suite and write CSV");
    bench->add_option("--suite", ba.suite, "table1, table2, bt or near_t")->required();
    bench->add_option("--seed", ba.seed);
    bench->add_option("--out", ba.out, "CSV path (default stdout)");
    bench->add_option("--count", ba.count, "Instances per cell");
    bench->add_option("--sizes", ba.sizes, "Matrix sizes n")->delimiter(',');
    bench->add_option("--sigmas", ba.sigmas, "Sampler widths")->delimiter(',');
    bench->add_option("--t-min", ba.t_min);
    bench->add_option("--t-max", ba.t_max);

    DiagramArgs da;
    auto* diagram = app.add_subcommand("diagram", "Print the plane diagram");
    diagram->add_option("input", da.input, "Matrix file")->required();
    diagram->add_flag("--canonical", da.canonical);
    diagram->add_option("--r", da.r)->check(CLI::IsMember({1, 2}));
    diagram->add_flag("--json", da.json);

    std::string oracle_input;
    auto* oracle = app.add_subcommand("oracle", "Brute-force check of small instances");
    oracle->add_option("input", oracle_input, "Matrix file")->required();

    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.push_back("nnirank2");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : storage)
        argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_input_error;
    }

    try {
        if (factor->parsed())
            return cmd_factor(fa, out);
        if (reduce->parsed())
            return cmd_reduce(ra, out);
        if (gen->parsed())
            return cmd_generate(ga, out);
        if (bench->parsed())
            return cmd_bench(ba, out);
        if (diagram->parsed())
            return cmd_diagram(da, out);
        if (oracle->parsed())
            return cmd_oracle(oracle_input, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    }
    return exit_input_error;
}

} // namespace nnirank2
