#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "paulicap/ansatz.hpp"
#include "paulicap/codes.hpp"
#include "paulicap/coherent.hpp"
#include "paulicap/errors.hpp"
#include "paulicap/io.hpp"
#include "paulicap/optim.hpp"
#include "paulicap/scan.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace paulicap;

namespace {

std::string fmt(double x) { return detail::fmt12(x); }

struct GlobalOpts {
    fs::path out_dir = ".";
    int threads = 1;
};

fs::path resolve_out(const GlobalOpts& g, const std::string& name) {
    fs::path p(name);
    if (p.is_absolute()) return p;
    std::error_code ec;
    fs::create_directories(g.out_dir, ec);
    if (ec)
        throw IoError("cannot create " + g.out_dir.string() + ": " + ec.message());
    return g.out_dir / p;
}

json read_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read config " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return json::parse(ss.str());
}

void check_keys(const json& j, const std::string& ctx,
                std::initializer_list<const char*> allowed) {
    if (!j.is_object()) throw Unsupported(ctx + " must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) known = true;
        if (!known)
            throw Unsupported(ctx + ": unknown field \"" + it.key() + "\"");
    }
}

ProbVec4 channel_from_json(const json& j) {
    check_keys(j, "channel", {"p1", "p2", "p3"});
    return ProbVec4::from_p123(j.at("p1").get<double>(),
                               j.at("p2").get<double>(),
                               j.at("p3").get<double>());
}

json channel_to_json(const ProbVec4& p) {
    return json{{"p1", p.p1()}, {"p2", p.p2()}, {"p3", p.p3()}};
}

AnsatzSpec ansatz_from_json(const json& cfg) {
    AnsatzSpec spec = parse_ansatz(cfg.at("ansatz").get<std::string>());
    if (cfg.contains("encoding")) {
        std::string enc = cfg["encoding"].get<std::string>();
        if (enc == "zero_one")
            spec.encoding = BitEncoding::ZeroOne;
        else if (enc == "plus_minus")
            spec.encoding = BitEncoding::PlusMinus;
        else
            throw Unsupported("unknown encoding \"" + enc + "\"");
    }
    return spec;
}

GAConfig ga_overrides(GAConfig cfg, const json& j, const std::string& ctx) {
    check_keys(j, ctx,
               {"population_size", "generations", "cx_prob", "mut_prob",
                "mut_attr_prob", "mut_mean", "mut_sigma", "tournament_size"});
    if (j.contains("population_size")) cfg.population_size = j["population_size"].get<int>();
    if (j.contains("generations")) cfg.generations = j["generations"].get<int>();
    if (j.contains("cx_prob")) cfg.cx_prob = j["cx_prob"].get<double>();
    if (j.contains("mut_prob")) cfg.mut_prob = j["mut_prob"].get<double>();
    if (j.contains("mut_attr_prob")) cfg.mut_attr_prob = j["mut_attr_prob"].get<double>();
    if (j.contains("mut_mean")) cfg.mut_mean = j["mut_mean"].get<double>();
    if (j.contains("mut_sigma")) cfg.mut_sigma = j["mut_sigma"].get<double>();
    if (j.contains("tournament_size")) cfg.tournament_size = j["tournament_size"].get<int>();
    return cfg;
}

PSOConfig pso_overrides(PSOConfig cfg, const json& j, const std::string& ctx) {
    check_keys(j, ctx,
               {"n_particles", "generations", "alpha", "beta", "gamma", "v_min",
                "v_max", "global_best_mode"});
    if (j.contains("n_particles")) cfg.n_particles = j["n_particles"].get<int>();
    if (j.contains("generations")) cfg.generations = j["generations"].get<int>();
    if (j.contains("alpha")) cfg.alpha = j["alpha"].get<double>();
    if (j.contains("beta")) cfg.beta = j["beta"].get<double>();
    if (j.contains("gamma")) cfg.gamma = j["gamma"].get<double>();
    if (j.contains("v_min")) cfg.v_min = j["v_min"].get<double>();
    if (j.contains("v_max")) cfg.v_max = j["v_max"].get<double>();
    if (j.contains("global_best_mode")) {
        std::string m = j["global_best_mode"].get<std::string>();
        if (m == "history")
            cfg.global_best_mode = GlobalBestMode::History;
        else if (m == "generation")
            cfg.global_best_mode = GlobalBestMode::Generation;
        else
            throw Unsupported("unknown global_best_mode \"" + m + "\"");
    }
    return cfg;
}

json ga_to_json(const GAConfig& c) {
    return json{{"population_size", c.population_size},
                {"generations", c.generations},
                {"cx_prob", c.cx_prob},
                {"mut_prob", c.mut_prob},
                {"mut_attr_prob", c.mut_attr_prob},
                {"mut_mean", c.mut_mean},
                {"mut_sigma", c.mut_sigma},
                {"tournament_size", c.tournament_size},
                {"seed", c.seed}};
}

json pso_to_json(const PSOConfig& c) {
    return json{{"n_particles", c.n_particles},
                {"generations", c.generations},
                {"alpha", c.alpha},
                {"beta", c.beta},
                {"gamma", c.gamma},
                {"v_min", c.v_min},
                {"v_max", c.v_max},
                {"global_best_mode",
                 c.global_best_mode == GlobalBestMode::History ? "history"
                                                               : "generation"},
                {"seed", c.seed}};
}

std::vector<Family> families_from_string(const std::string& text, int shots) {
    if (text == "auto") {
        if (shots == 2) return {Family::PSI};
        if (shots == 3) return {Family::PHI, Family::CHI};
        throw Unsupported("no default code family for " + std::to_string(shots) +
                          " shots; pass --families");
    }
    std::vector<Family> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        std::string tok = next == std::string::npos ? text.substr(pos)
                                                    : text.substr(pos, next - pos);
        out.push_back(family_from_name(tok));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

struct AxisFlags {
    double lo = NAN, hi = NAN, step = NAN;
};

void add_axis_flags(CLI::App* cmd, const std::string& prefix, AxisFlags& f) {
    cmd->add_option("--" + prefix + "-lo", f.lo);
    cmd->add_option("--" + prefix + "-hi", f.hi);
    cmd->add_option("--" + prefix + "-step", f.step);
}

AxisSpec make_axis(const AxisFlags& f, double lo, double hi, double step) {
    AxisSpec a;
    a.lo = std::isnan(f.lo) ? lo : f.lo;
    a.hi = std::isnan(f.hi) ? hi : f.hi;
    a.step = std::isnan(f.step) ? step : f.step;
    return a;
}

void print_point(const ProbVec4& p) {
    std::cout << "p1 = " << fmt(p.p1()) << "\n"
              << "p2 = " << fmt(p.p2()) << "\n"
              << "p3 = " << fmt(p.p3()) << "\n";
}

void run_q1(double p1, double p2, double p3) {
    ProbVec4 p = ProbVec4::from_p123(p1, p2, p3);
    double raw = one_shot_capacity_raw(p);
    std::cout << "q1_raw = " << fmt(raw) << "\n"
              << "q1 = " << fmt(std::max(raw, 0.0)) << "\n";
}

void run_eval(const std::string& code, int shots, double p1, double p2,
              double p3, bool numeric, bool check) {
    CodeId id = code_id_from_name(code);
    if (shot_count(id.family) != shots)
        throw Unsupported("code " + code + " uses " +
                          std::to_string(shot_count(id.family)) +
                          " channel copies, not " + std::to_string(shots));
    ProbVec4 p = ProbVec4::from_p123(p1, p2, p3);

    double rate;
    if (check) {
        double closed = closed_rate(id, p);
        double num = code_rate(build_code(id), p, shots);
        std::cout << "rate_closed = " << fmt(closed) << "\n"
                  << "rate_numeric = " << fmt(num) << "\n"
                  << "check_diff = " << fmt(std::abs(closed - num)) << "\n";
        rate = closed;
    } else if (numeric) {
        rate = code_rate(build_code(id), p, shots);
    } else {
        rate = closed_rate(id, p);
    }

    double q1 = one_shot_capacity_raw(p);
    std::cout << "rate = " << fmt(rate) << "\n"
              << "q1_raw = " << fmt(q1) << "\n"
              << "gap_raw = " << fmt(rate - q1) << "\n"
              << "gap = " << fmt(rate - std::max(q1, 0.0)) << "\n";
}

void run_scan(const GlobalOpts& g, int shots, const std::string& families,
              double lo, double hi, double step, const AxisFlags& f1,
              const AxisFlags& f2, const AxisFlags& f3, const std::string& out) {
    GridSpec grid{make_axis(f1, lo, hi, step), make_axis(f2, lo, hi, step),
                  make_axis(f3, lo, hi, step)};
    auto recs = grid_scan(grid, shots, families_from_string(families, shots),
                          g.threads);
    std::size_t super = 0;
    for (const auto& r : recs) super += r.superadditive;
    fs::path path = resolve_out(g, out);
    write_scan_csv(path, recs);
    std::cout << "wrote " << path.string() << " (" << recs.size() << " records, "
              << super << " superadditive)\n";
}

void run_slice(const GlobalOpts& g, double p3, int shots,
               const std::string& families, double lo, double hi, double step,
               const std::string& mode, const std::string& out) {
    SliceSpec s;
    s.fixed_p3 = p3;
    s.p1 = AxisSpec{lo, hi, step};
    s.p2 = AxisSpec{lo, hi, step};
    if (mode == "gap")
        s.mode = SliceMode::Gap;
    else if (mode == "zero_q1")
        s.mode = SliceMode::ZeroQ1Gap;
    else
        throw Unsupported("unknown slice mode \"" + mode + "\"");

    auto slice = slice_density(s, shots, families_from_string(families, shots),
                               g.threads);
    std::size_t positive = 0;
    for (const auto& row : slice.values)
        for (double v : row) positive += v > 0.0;
    fs::path path = resolve_out(g, out);
    write_slice_csv(path, slice);
    std::cout << "wrote " << path.string() << " ("
              << slice.p1.size() * slice.p2.size() << " cells, " << positive
              << " positive)\n";
}

void run_compare(const GlobalOpts& g, double lo, double hi, double step,
                 const AxisFlags& f1, const AxisFlags& f2, const AxisFlags& f3,
                 const std::string& out) {
    GridSpec grid{make_axis(f1, lo, hi, step), make_axis(f2, lo, hi, step),
                  make_axis(f3, lo, hi, step)};
    auto recs = family_compare(grid, g.threads);
    std::size_t phi = 0, chi = 0, ties = 0;
    for (const auto& r : recs) {
        (r.winner == Family::PHI ? phi : chi) += 1;
        ties += r.tie;
    }
    fs::path path = resolve_out(g, out);
    write_compare_csv(path, recs);
    std::cout << "wrote " << path.string() << " (" << recs.size()
              << " superadditive records, phi " << phi << ", chi " << chi
              << ", ties " << ties << ")\n";
}

void run_gapmax(const std::string& family, int variant, int shots) {
    Family f = family_from_name(family);
    if (variant < 1 || variant > 3)
        throw Unsupported("variant must be 1, 2 or 3");
    if (shots == 0) shots = shot_count(f);
    auto [p, gap] = gap_maximize(f, static_cast<Variant>(variant), shots);
    std::cout << "code = " << code_name({f, static_cast<Variant>(variant)})
              << "\n"
              << "gap = " << fmt(gap) << "\n";
    print_point(p);
}

void run_optimize(const GlobalOpts& g, const std::string& config_path,
                  std::int64_t seed_override) {
    json cfg = read_config(config_path);
    check_keys(cfg, "config",
               {"algo", "channel", "shots", "ansatz", "encoding", "seed", "ga",
                "pso", "out_prefix"});
    std::string algo = cfg.at("algo").get<std::string>();
    if (algo != "ga" && algo != "pso")
        throw Unsupported("algo must be \"ga\" or \"pso\"");
    if (cfg.contains(algo == "ga" ? "pso" : "ga"))
        throw Unsupported("config has a " + std::string(algo == "ga" ? "pso" : "ga") +
                          " block but algo is " + algo);

    ProbVec4 channel = channel_from_json(cfg.at("channel"));
    int shots = cfg.at("shots").get<int>();
    FitnessSpec fit(channel, shots, ansatz_from_json(cfg));
    std::uint64_t seed = cfg.value("seed", std::uint64_t{0});
    if (seed_override >= 0) seed = static_cast<std::uint64_t>(seed_override);
    std::string prefix = cfg.value("out_prefix", std::string("optimize"));

    OptimResult res;
    json resolved;
    if (algo == "ga") {
        GAConfig ga = ga_overrides(GAConfig{}, cfg.value("ga", json::object()), "ga");
        ga.seed = seed;
        res = ga_run(fit, ga, g.threads);
        resolved = ga_to_json(ga);
    } else {
        PSOConfig pso = pso_overrides(PSOConfig{}, cfg.value("pso", json::object()), "pso");
        pso.seed = seed;
        res = pso_run(fit, pso, g.threads);
        resolved = pso_to_json(pso);
    }

    double q1 = one_shot_capacity_raw(channel);
    double rate = res.best_fitness / shots;
    fs::path curve_path = resolve_out(g, prefix + "_curve.csv");
    fs::path result_path = resolve_out(g, prefix + "_result.json");

    json out{{"algo", algo},
             {"ansatz", ansatz_name(fit.ansatz)},
             {"channel", channel_to_json(channel)},
             {"shots", shots},
             {"config", resolved},
             {"best_fitness", res.best_fitness},
             {"rate", rate},
             {"q1_raw", q1},
             {"gap_raw", rate - q1},
             {"gap", rate - std::max(q1, 0.0)},
             {"curve_file", curve_path.filename().string()}};
    write_text_atomic(result_path, out.dump(2) + "\n");
    write_curve_csv(curve_path, res.curve);

    std::cout << "best_fitness = " << fmt(res.best_fitness) << "\n"
              << "rate = " << fmt(rate) << "\n"
              << "q1_raw = " << fmt(q1) << "\n"
              << "gap = " << fmt(rate - std::max(q1, 0.0)) << "\n"
              << "wrote " << result_path.string() << "\n"
              << "wrote " << curve_path.string() << "\n";
}

void run_bench(const GlobalOpts& g, const std::string& config_path,
               std::int64_t seed_override) {
    json cfg = read_config(config_path);
    check_keys(cfg, "config",
               {"channel", "shots", "trials", "seed", "generations", "cells"});
    ProbVec4 channel = channel_from_json(cfg.at("channel"));
    int shots = cfg.at("shots").get<int>();
    int trials = cfg.at("trials").get<int>();
    std::uint64_t base_seed = cfg.value("seed", std::uint64_t{0});
    if (seed_override >= 0) base_seed = static_cast<std::uint64_t>(seed_override);

    const json& cells = cfg.at("cells");
    if (!cells.is_array() || cells.empty())
        throw Unsupported("config: cells must be a nonempty array");

    std::vector<std::string> names;
    json manifest_cells = json::array();
    for (const json& cell : cells) {
        check_keys(cell, "cell",
                   {"name", "algo", "ansatz", "encoding", "population",
                    "generations", "seed", "ga", "pso"});
        std::string name = cell.at("name").get<std::string>();
        if (name.empty() ||
            name.find_first_not_of("abcdefghijklmnopqrstuvwxyz"
                                   "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
                                   "0123456789._-") != std::string::npos)
            throw Unsupported("cell name \"" + name +
                              "\" must use only [A-Za-z0-9._-]");
        for (const auto& seen : names)
            if (seen == name) throw Unsupported("duplicate cell name " + name);
        names.push_back(name);

        std::string algo = cell.at("algo").get<std::string>();
        if (algo != "ga" && algo != "pso")
            throw Unsupported("cell " + name + ": algo must be \"ga\" or \"pso\"");
        if (cell.contains(algo == "ga" ? "pso" : "ga"))
            throw Unsupported("cell " + name + " has a mismatched config block");

        FitnessSpec fit(channel, shots, ansatz_from_json(cell));
        std::uint64_t seed = cell.value("seed", base_seed);

        LearningCurve curve;
        int population, generations;
        if (algo == "ga") {
            GAConfig ga = ga_overrides(GAConfig{}, cell.value("ga", json::object()),
                                       "cell " + name + " ga");
            if (cfg.contains("generations")) ga.generations = cfg["generations"].get<int>();
            if (cell.contains("generations")) ga.generations = cell["generations"].get<int>();
            if (cell.contains("population")) ga.population_size = cell["population"].get<int>();
            ga.seed = seed;
            curve = bench_curves(fit, ga, trials, g.threads);
            population = ga.population_size;
            generations = ga.generations;
        } else {
            PSOConfig pso = pso_overrides(PSOConfig{}, cell.value("pso", json::object()),
                                          "cell " + name + " pso");
            if (cfg.contains("generations")) pso.generations = cfg["generations"].get<int>();
            if (cell.contains("generations")) pso.generations = cell["generations"].get<int>();
            if (cell.contains("population")) pso.n_particles = cell["population"].get<int>();
            pso.seed = seed;
            curve = bench_curves(fit, pso, trials, g.threads);
            population = pso.n_particles;
            generations = pso.generations;
        }

        fs::path curve_path = resolve_out(g, name + ".csv");
        write_curve_csv(curve_path, curve);
        std::cout << "wrote " << curve_path.string() << " (cell " << name << ", "
                  << curve.size() << " rows)\n";
        manifest_cells.push_back(json{{"name", name},
                                      {"algo", algo},
                                      {"ansatz", ansatz_name(fit.ansatz)},
                                      {"population", population},
                                      {"generations", generations},
                                      {"seed", seed},
                                      {"file", curve_path.filename().string()}});
    }

    json manifest{{"channel", channel_to_json(channel)},
                  {"shots", shots},
                  {"trials", trials},
                  {"cells", manifest_cells}};
    fs::path manifest_path = resolve_out(g, "bench_manifest.json");
    write_text_atomic(manifest_path, manifest.dump(2) + "\n");
    std::cout << "wrote " << manifest_path.string() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coherent information of repeated qubit Pauli channel uses: "
                 "closed-form code rates, evolutionary code search, and "
                 "super-additivity maps"};
    app.require_subcommand(1);

    GlobalOpts g;
    if (const char* env = std::getenv("PAULICAP_OUTDIR")) g.out_dir = env;
    g.threads = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--out-dir", g.out_dir,
                   "Directory for output files (default $PAULICAP_OUTDIR or .)");
    app.add_option("--threads", g.threads, "Worker thread cap for sweeps");

    double p1 = 0, p2 = 0, p3 = 0;

    auto* q1 = app.add_subcommand("q1", "One-shot hashing rate of a channel");
    q1->add_option("--p1", p1)->required();
    q1->add_option("--p2", p2)->required();
    q1->add_option("--p3", p3)->required();
    q1->callback([&] { run_q1(p1, p2, p3); });

    auto* ev = app.add_subcommand("eval", "Rate and gap of a named code");
    std::string ev_code;
    int ev_shots = 0;
    bool ev_closed = false, ev_numeric = false, ev_check = false;
    ev->add_option("--code", ev_code, "mes, psi1..3, phi1..3 or chi1..3")->required();
    ev->add_option("--shots", ev_shots, "Parallel channel uses")->required();
    ev->add_option("--p1", p1)->required();
    ev->add_option("--p2", p2)->required();
    ev->add_option("--p3", p3)->required();
    auto* fc = ev->add_flag("--closed", ev_closed, "Use the closed forms (default)");
    auto* fn = ev->add_flag("--numeric", ev_numeric, "Use the channel simulation");
    fc->excludes(fn);
    ev->add_flag("--check", ev_check, "Print both paths and their difference");
    ev->callback([&] { run_eval(ev_code, ev_shots, p1, p2, p3, ev_numeric, ev_check); });

    int shots = 2;
    std::string families = "auto";
    double lo = 0.0, hi = 0.20, step = 0.01;
    AxisFlags f1, f2, f3;
    std::string out_file;

    auto* sc = app.add_subcommand("scan", "Closed-form sweep over a channel grid");
    sc->add_option("--shots", shots, "Parallel channel uses (default 2)");
    sc->add_option("--families", families,
                   "Comma-separated code families (default by shot count)");
    sc->add_option("--lo", lo, "Axis start (default 0)");
    sc->add_option("--hi", hi, "Axis end (default 0.2)");
    sc->add_option("--step", step, "Axis step (default 0.01)");
    add_axis_flags(sc, "p1", f1);
    add_axis_flags(sc, "p2", f2);
    add_axis_flags(sc, "p3", f3);
    sc->add_option("--out", out_file, "Output CSV (default scan.csv)");
    sc->callback([&] {
        run_scan(g, shots, families, lo, hi, step, f1, f2, f3,
                 out_file.empty() ? "scan.csv" : out_file);
    });

    auto* sl = app.add_subcommand("slice", "Fixed-p3 capacity-gap density map");
    double sl_p3 = 0.0;
    double sl_lo = 0.0, sl_hi = 0.20, sl_step = 0.005;
    std::string sl_mode = "gap";
    sl->add_option("--p3", sl_p3, "Fixed p3 value")->required();
    sl->add_option("--shots", shots, "Parallel channel uses (default 2)");
    sl->add_option("--families", families,
                   "Comma-separated code families (default by shot count)");
    sl->add_option("--lo", sl_lo, "Axis start (default 0)");
    sl->add_option("--hi", sl_hi, "Axis end (default 0.2)");
    sl->add_option("--step", sl_step, "Axis step (default 0.005)");
    sl->add_option("--mode", sl_mode, "gap or zero_q1 (default gap)");
    sl->add_option("--out", out_file, "Output CSV (default slice.csv)");
    sl->callback([&] {
        run_slice(g, sl_p3, shots, families, sl_lo, sl_hi, sl_step, sl_mode,
                  out_file.empty() ? "slice.csv" : out_file);
    });

    auto* cp = app.add_subcommand("compare",
                                  "Three-shot family contest over a grid");
    cp->add_option("--lo", lo, "Axis start (default 0)");
    cp->add_option("--hi", hi, "Axis end (default 0.2)");
    cp->add_option("--step", step, "Axis step (default 0.01)");
    add_axis_flags(cp, "p1", f1);
    add_axis_flags(cp, "p2", f2);
    add_axis_flags(cp, "p3", f3);
    cp->add_option("--out", out_file, "Output CSV (default compare.csv)");
    cp->callback([&] {
        run_compare(g, lo, hi, step, f1, f2, f3,
                    out_file.empty() ? "compare.csv" : out_file);
    });

    auto* gm = app.add_subcommand("gapmax",
                                  "Maximize a code's gap over the channel simplex");
    std::string gm_family;
    int gm_variant = 1, gm_shots = 0;
    gm->add_option("--family", gm_family, "psi, phi or chi")->required();
    gm->add_option("--variant", gm_variant, "1, 2 or 3 (default 1)");
    gm->add_option("--shots", gm_shots, "Parallel channel uses (default by family)");
    gm->callback([&] { run_gapmax(gm_family, gm_variant, gm_shots); });

    std::string config_path;
    std::int64_t seed_override = -1;

    auto* op = app.add_subcommand("optimize", "Evolutionary code search from a JSON config");
    op->add_option("--config", config_path, "JSON run configuration")->required();
    op->add_option("--seed", seed_override, "Override the config seed");
    op->callback([&] { run_optimize(g, config_path, seed_override); });

    auto* be = app.add_subcommand("bench",
                                  "Averaged learning curves for a grid of search setups");
    be->add_option("--config", config_path, "JSON bench configuration")->required();
    be->add_option("--seed", seed_override, "Override the config base seed");
    be->callback([&] { run_bench(g, config_path, seed_override); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
