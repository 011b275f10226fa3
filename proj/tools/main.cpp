// juntalab: junta approximation, heat-semigroup smoothing and inequality
// verification on l_inf-product spaces. Subcommands write machine-readable
// reports (JSON-lines or CSV) that are byte-identical for identical
// argv + seed.
//
// Exit codes: 0 success / all checks pass, 1 inequality violation or
// contract failure, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "juntalab/boxes.hpp"
#include "juntalab/hamming.hpp"
#include "juntalab/inequalities.hpp"
#include "juntalab/io.hpp"
#include "juntalab/junta.hpp"
#include "juntalab/version.hpp"

namespace {

using namespace juntalab;

struct CommonOpts {
    std::string out;           // empty = stdout
    std::string format = "json";  // json (JSON-lines) | csv
    std::optional<std::uint64_t> seed;
    std::int64_t samples = 0;  // force Monte-Carlo when > 0
    int grid_points = 0;       // force tensor grid when > 0
};

void add_common(CLI::App* sub, CommonOpts& c) {
    sub->add_option("--out", c.out, "Output path (default: stdout)");
    sub->add_option("--format", c.format, "Output format: json (JSON-lines) or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--seed", c.seed, "Seed for all randomness (env JUNTALAB_SEED, default 0)");
    sub->add_option("--samples", c.samples, "Force Monte-Carlo quadrature with this sample count");
    sub->add_option("--grid-points", c.grid_points, "Force tensor-grid quadrature, points per axis");
}

std::uint64_t resolve_seed(const CommonOpts& c, std::optional<std::uint64_t> fallback = {}) {
    if (c.seed) return *c.seed;
    if (const char* env = std::getenv("JUNTALAB_SEED")) return std::strtoull(env, nullptr, 10);
    return fallback.value_or(0);
}

QuadratureSpec resolve_quad(const CommonOpts& c, int dim, std::uint64_t seed) {
    if (c.grid_points > 0 && c.samples > 0)
        throw std::invalid_argument("choose one of --grid-points and --samples");
    if (c.grid_points > 0) {
        QuadratureSpec q = QuadratureSpec::tensor_grid(c.grid_points);
        q.seed = seed;
        return q;
    }
    if (c.samples > 0) return QuadratureSpec::monte_carlo(c.samples, seed);
    return QuadratureSpec::default_for(dim, seed);
}

EngineConfig resolve_engine(const CommonOpts& c, int dim, std::uint64_t seed) {
    EngineConfig cfg = EngineConfig::defaults(dim, seed);
    cfg.quad = resolve_quad(c, dim, seed);
    return cfg;
}

void emit(const CommonOpts& c, const std::vector<Record>& records,
          const std::vector<std::string>& schema = {}) {
    std::ostringstream body;
    if (c.format == "csv")
        write_csv(body, records, schema);
    else
        write_jsonl(body, records);
    if (c.out.empty()) {
        std::cout << body.str();
        return;
    }
    std::ofstream out(c.out, std::ios::binary);
    if (!out.good()) throw std::invalid_argument("cannot open output path " + c.out);
    out << body.str();
    if (!out.good()) throw std::invalid_argument("write failed for " + c.out);
}

int run(int argc, char** argv) {
    CLI::App app{"junta approximation and heat-semigroup verification on product spaces"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    // influences
    auto* inf_cmd = app.add_subcommand("influences", "Per-coordinate influences ||d_n f||_1");
    CommonOpts inf_c;
    std::string inf_fn;
    double inf_step = kDefaultFdStep();
    inf_cmd->add_option("--fn", inf_fn, "Function input (.json trig poly, .csv grid, .tp text)")
        ->required();
    inf_cmd->add_option("--step", inf_step, "Finite-difference step for black-box inputs");
    add_common(inf_cmd, inf_c);

    // junta
    auto* junta_cmd = app.add_subcommand("junta", "Extract a junta approximation");
    CommonOpts junta_c;
    std::string junta_fn, junta_mode = "empirical";
    double junta_eps = 0.0;
    junta_cmd->add_option("--fn", junta_fn, "Function input")->required();
    junta_cmd->add_option("--epsilon", junta_eps, "Target L1 error, in (0,2]")->required();
    junta_cmd->add_option("--mode", junta_mode, "Schedule mode")
        ->check(CLI::IsMember({"empirical", "certified"}));
    add_common(junta_cmd, junta_c);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run an inequality suite");
    CommonOpts verify_c;
    std::string suite_path;
    verify_cmd->add_option("--suite", suite_path, "Suite definition (JSON)")->required();
    add_common(verify_cmd, verify_c);

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "Best junta by exhaustive subset search");
    CommonOpts oracle_c;
    std::string oracle_fn;
    int oracle_size = 1;
    oracle_cmd->add_option("--fn", oracle_fn, "Function input")->required();
    oracle_cmd->add_option("--max-size", oracle_size, "Maximum junta size")->required();
    add_common(oracle_cmd, oracle_c);

    // hamming
    auto* ham_cmd = app.add_subcommand("hamming", "Junta-map a Hamming-Lipschitz vector map");
    CommonOpts ham_c;
    std::string map_path;
    double ham_eps = 0.0;
    ham_cmd->add_option("--map", map_path, "Vector map spec (JSON)")->required();
    ham_cmd->add_option("--epsilon", ham_eps, "Average-error target")->required();
    add_common(ham_cmd, ham_c);

    // isoperimetry
    auto* iso_cmd = app.add_subcommand("isoperimetry", "Junta form of a separated box pair");
    CommonOpts iso_c;
    std::string a_path, b_path;
    double iso_delta = 0.0, iso_eps = 0.1;
    iso_cmd->add_option("--a", a_path, "Box set A (JSON)")->required();
    iso_cmd->add_option("--b", b_path, "Box set B (JSON)")->required();
    iso_cmd->add_option("--delta", iso_delta, "Declared separation")->required();
    iso_cmd->add_option("--epsilon", iso_eps, "Measure-loss budget");
    add_common(iso_cmd, iso_c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::CallForVersion& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // usage error
    }

    if (inf_cmd->parsed()) {
        ProductFn f = load_function(inf_fn);
        const std::uint64_t seed = resolve_seed(inf_c);
        EngineConfig cfg = resolve_engine(inf_c, f.dim(), seed);
        cfg.fd_step = inf_step;
        InfluenceProfile prof = f.influence_profile(cfg);
        emit(inf_c, {influence_record(prof, cfg.quad, seed)});
        return 0;
    }
    if (junta_cmd->parsed()) {
        ProductFn f = load_function(junta_fn);
        const std::uint64_t seed = resolve_seed(junta_c);
        EngineConfig cfg = resolve_engine(junta_c, f.dim(), seed);
        const auto mode =
            junta_mode == "certified" ? ScheduleMode::Certified : ScheduleMode::Empirical;
        JuntaApproximation ja = extract_junta(f, junta_eps, mode, cfg);
        emit(junta_c, {junta_record(ja, seed)});
        return 0;
    }
    if (verify_cmd->parsed()) {
        SuiteSpec suite = load_suite(suite_path);
        suite.seed = resolve_seed(verify_c, suite.seed);
        std::vector<InequalityReport> reports = run_suite(suite);
        std::vector<Record> records;
        records.reserve(reports.size());
        bool all_pass = true;
        for (const auto& r : reports) {
            all_pass = all_pass && r.pass;
            records.push_back(to_record(r));
        }
        emit(verify_c, records, to_record(InequalityReport{}).keys());
        return all_pass ? 0 : 1;
    }
    if (oracle_cmd->parsed()) {
        ProductFn f = load_function(oracle_fn);
        const std::uint64_t seed = resolve_seed(oracle_c);
        EngineConfig cfg = resolve_engine(oracle_c, f.dim(), seed);
        OracleResult res = best_junta_oracle(f, oracle_size, cfg);
        emit(oracle_c, {oracle_record(res, seed)});
        return 0;
    }
    if (ham_cmd->parsed()) {
        VectorMap F = load_vector_map(map_path);
        const std::uint64_t seed = resolve_seed(ham_c);
        EngineConfig cfg = resolve_engine(ham_c, F.input_dim, seed);
        HammingJuntaResult res = hamming_junta_map(F, ham_eps, cfg);
        emit(ham_c, {hamming_record(res, ham_eps, seed)});
        return res.total_error.value < ham_eps ? 0 : 1;
    }
    if (iso_cmd->parsed()) {
        BoxSet A = load_boxset(a_path);
        BoxSet B = load_boxset(b_path);
        const std::uint64_t seed = resolve_seed(iso_c);
        EngineConfig cfg = resolve_engine(iso_c, A.dim(), seed);
        SeparatedSetsResult res = separated_junta_sets(A, B, iso_delta, iso_eps, cfg, seed);
        emit(iso_c, {separated_sets_record(res, seed)});
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
