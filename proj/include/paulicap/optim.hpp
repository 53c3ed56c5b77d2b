#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "paulicap/ansatz.hpp"
#include "paulicap/coherent.hpp"
#include "paulicap/errors.hpp"
#include "paulicap/parallel.hpp"

namespace paulicap {

struct GAConfig {
    int population_size = 300;
    int generations = 300;
    double cx_prob = 0.5;
    double mut_prob = 0.2;
    double mut_attr_prob = 0.5;
    double mut_mean = 0.5;
    double mut_sigma = 0.25;
    int tournament_size = 3;
    std::uint64_t seed = 0;
};

enum class GlobalBestMode { History, Generation };

struct PSOConfig {
    int n_particles = 100;
    int generations = 300;
    double alpha = 0.5;
    double beta = 0.5;
    double gamma = 0.5;
    double v_min = -1.0;
    double v_max = 1.0;
    GlobalBestMode global_best_mode = GlobalBestMode::History;
    std::uint64_t seed = 0;
};

struct CurvePoint {
    int generation;
    double mean_fitness;
    double gen_best;
    double best_so_far;
};

using LearningCurve = std::vector<CurvePoint>;

struct OptimResult {
    Chromosome best;
    double best_fitness = 0.0;
    LearningCurve curve;
};

// Objective for maximizing coherent information of an n-shot code under a
// fixed Pauli channel. Candidates that decode to the zero vector score the
// sentinel, strictly below the attainable range [-shots, shots].
struct FitnessSpec {
    ProbVec4 channel;
    int shots;
    AnsatzSpec ansatz;
    double sentinel;

    FitnessSpec(const ProbVec4& p, int n, AnsatzSpec a)
        : channel(p), shots(n), ansatz(std::move(a)), sentinel(-(n + 1.0)) {
        if (n < 1) throw DimError("FitnessSpec: shots must be >= 1");
    }
};

// A problem the optimizers can run on: how to draw a fresh individual and
// how to score one. Fitness must be pure (no RNG, no shared mutable state)
// so that evaluations may run concurrently within a generation.
struct OptimProblem {
    std::function<Chromosome(std::mt19937_64&)> init;
    std::function<double(const Chromosome&)> fitness;
};

inline OptimProblem make_problem(const FitnessSpec& spec) {
    // Template parameters fix the chromosome shapes; their values are never
    // read when restoring. Drawn from a throwaway stream, not the run seed.
    std::mt19937_64 shape_rng(0);
    auto tmpl = std::make_shared<AnsatzParams>(
        ansatz_init(spec.ansatz, spec.shots, shape_rng));
    OptimProblem prob;
    prob.init = [spec](std::mt19937_64& rng) {
        return chromosome_view(ansatz_init(spec.ansatz, spec.shots, rng));
    };
    prob.fitness = [spec, tmpl](const Chromosome& ch) {
        try {
            PureState psi = ansatz_decode(chromosome_restore(ch, *tmpl), spec.shots);
            return coherent_information(psi, spec.channel, spec.shots);
        } catch (const DegenerateState&) {
            return spec.sentinel;
        }
    };
    return prob;
}

namespace detail {

// Uniform over index pairs 0 <= lo <= hi < n, each of the n*(n+1)/2 pairs
// equally likely.
inline std::pair<int, int> sample_range(int n, std::mt19937_64& rng) {
    long total = static_cast<long>(n) * (n + 1) / 2;
    std::uniform_int_distribution<long> d(0, total - 1);
    long t = d(rng);
    for (int lo = 0; lo < n; ++lo) {
        long cnt = n - lo;
        if (t < cnt) return {lo, lo + static_cast<int>(t)};
        t -= cnt;
    }
    return {n - 1, n - 1};
}

inline int argmax_index(const std::vector<double>& xs) {
    int best = 0;
    for (int i = 1; i < static_cast<int>(xs.size()); ++i)
        if (xs[i] > xs[best]) best = i;
    return best;
}

inline void evaluate_all(const OptimProblem& prob, const std::vector<Chromosome>& pop,
                         std::vector<double>& out, int n_threads) {
    out.resize(pop.size());
    parallel_for(static_cast<std::int64_t>(pop.size()), n_threads,
                 [&](std::int64_t i) { out[i] = prob.fitness(pop[i]); });
}

inline double mean_of(const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

} // namespace detail

// Swaps a uniformly chosen axis-aligned block between two equal-shaped
// matrices. Rows and columns are sampled independently; the row range is
// drawn before the column range.
inline std::pair<Eigen::MatrixXd, Eigen::MatrixXd>
crossover_2d(Eigen::MatrixXd a, Eigen::MatrixXd b, std::mt19937_64& rng) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("crossover_2d: operands must have identical shape");
    auto [r1, r2] = detail::sample_range(static_cast<int>(a.rows()), rng);
    auto [c1, c2] = detail::sample_range(static_cast<int>(a.cols()), rng);
    Eigen::Index nr = r2 - r1 + 1, nc = c2 - c1 + 1;
    Eigen::MatrixXd keep = a.block(r1, c1, nr, nc);
    a.block(r1, c1, nr, nc) = b.block(r1, c1, nr, nc);
    b.block(r1, c1, nr, nc) = keep;
    return {std::move(a), std::move(b)};
}

namespace detail {

inline void validate(const GAConfig& cfg) {
    if (cfg.population_size < 1 || cfg.tournament_size < 1 || cfg.generations < 0)
        throw InvalidState("GAConfig: sizes must be positive");
    for (double p : {cfg.cx_prob, cfg.mut_prob, cfg.mut_attr_prob})
        if (!(p >= 0.0 && p <= 1.0))
            throw InvalidState("GAConfig: probabilities must lie in [0, 1]");
    if (cfg.mut_sigma < 0.0) throw InvalidState("GAConfig: mut_sigma must be >= 0");
}

inline void validate(const PSOConfig& cfg) {
    if (cfg.n_particles < 1 || cfg.generations < 0)
        throw InvalidState("PSOConfig: sizes must be positive");
    if (!(cfg.v_min < cfg.v_max))
        throw InvalidState("PSOConfig: v_min must be below v_max");
    if (cfg.alpha < 0.0 || cfg.beta < 0.0 || cfg.gamma < 0.0)
        throw InvalidState("PSOConfig: coefficients must be >= 0");
}

} // namespace detail

// Generational GA: size-k tournaments (drawn with replacement, ties to the
// lowest population index) fill a parent pool; adjacent parents cross with
// probability cx_prob, swapping a random block in every chromosome matrix;
// each offspring then mutates with probability mut_prob, perturbing entries
// independently. Offspring replace the population wholesale; the returned
// best is tracked across all evaluations.
inline OptimResult ga_run(const OptimProblem& prob, const GAConfig& cfg,
                          int n_threads = 1) {
    detail::validate(cfg);
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::uniform_int_distribution<int> pick(0, cfg.population_size - 1);
    std::normal_distribution<double> bump(cfg.mut_mean, cfg.mut_sigma);

    std::vector<Chromosome> pop;
    pop.reserve(cfg.population_size);
    for (int i = 0; i < cfg.population_size; ++i) pop.push_back(prob.init(rng));
    std::vector<double> fit;
    detail::evaluate_all(prob, pop, fit, n_threads);

    OptimResult res;
    int b = detail::argmax_index(fit);
    res.best = pop[b];
    res.best_fitness = fit[b];
    auto record = [&](int gen) {
        res.curve.push_back({gen, detail::mean_of(fit),
                             fit[detail::argmax_index(fit)], res.best_fitness});
    };
    record(0);

    for (int gen = 1; gen <= cfg.generations; ++gen) {
        std::vector<Chromosome> next;
        next.reserve(cfg.population_size);
        for (int i = 0; i < cfg.population_size; ++i) {
            int winner = pick(rng);
            for (int t = 1; t < cfg.tournament_size; ++t) {
                int c = pick(rng);
                if (fit[c] > fit[winner] || (fit[c] == fit[winner] && c < winner))
                    winner = c;
            }
            next.push_back(pop[winner]);
        }
        for (int i = 0; i + 1 < cfg.population_size; i += 2) {
            if (u01(rng) >= cfg.cx_prob) continue;
            for (std::size_t e = 0; e < next[i].size(); ++e) {
                auto [x, y] = crossover_2d(std::move(next[i][e]),
                                           std::move(next[i + 1][e]), rng);
                next[i][e] = std::move(x);
                next[i + 1][e] = std::move(y);
            }
        }
        for (int i = 0; i < cfg.population_size; ++i) {
            if (u01(rng) >= cfg.mut_prob) continue;
            for (auto& mat : next[i])
                for (Eigen::Index r = 0; r < mat.rows(); ++r)
                    for (Eigen::Index c = 0; c < mat.cols(); ++c)
                        if (u01(rng) < cfg.mut_attr_prob) mat(r, c) += bump(rng);
        }
        pop = std::move(next);
        detail::evaluate_all(prob, pop, fit, n_threads);
        b = detail::argmax_index(fit);
        if (fit[b] > res.best_fitness) {
            res.best = pop[b];
            res.best_fitness = fit[b];
        }
        record(gen);
    }
    return res;
}

struct Particle {
    Chromosome position;
    Chromosome velocity;
    Chromosome personal_best;
    double personal_best_fitness = 0.0;
};

// One velocity-and-position update. Per component: fresh attraction
// strengths beta*U(0,1) and gamma*U(0,1), inertia alpha on the old
// velocity, clamp to [v_min, v_max], then move. Matrices are walked in
// chromosome order, entries row by row.
inline void pso_step_particle(Particle& pt, const Chromosome& gbest,
                              const PSOConfig& cfg, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (std::size_t e = 0; e < pt.position.size(); ++e) {
        auto& x = pt.position[e];
        auto& v = pt.velocity[e];
        const auto& pb = pt.personal_best[e];
        const auto& gb = gbest[e];
        for (Eigen::Index r = 0; r < x.rows(); ++r)
            for (Eigen::Index c = 0; c < x.cols(); ++c) {
                double beta_r = cfg.beta * u01(rng);
                double gamma_r = cfg.gamma * u01(rng);
                double nv = cfg.alpha * v(r, c) + beta_r * (pb(r, c) - x(r, c)) +
                            gamma_r * (gb(r, c) - x(r, c));
                v(r, c) = std::clamp(nv, cfg.v_min, cfg.v_max);
                x(r, c) += v(r, c);
            }
    }
}

// Particle swarm with clamped velocities. The guide position is frozen
// while a generation moves and refreshed once all particles have been
// scored: History mode keeps the best position ever visited, Generation
// mode re-points it at the current generation's best regardless of value.
// The returned best is the history best in either mode. Particle i draws
// its initial position and then its initial velocity, uniform over the
// velocity box, before particle i+1 draws anything.
inline OptimResult pso_run(const OptimProblem& prob, const PSOConfig& cfg,
                           int n_threads = 1) {
    detail::validate(cfg);
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> uv(cfg.v_min, cfg.v_max);

    std::vector<Particle> swarm(cfg.n_particles);
    std::vector<Chromosome> positions(cfg.n_particles);
    for (int i = 0; i < cfg.n_particles; ++i) {
        auto& pt = swarm[i];
        pt.position = prob.init(rng);
        pt.velocity = pt.position;
        for (auto& mat : pt.velocity)
            for (Eigen::Index r = 0; r < mat.rows(); ++r)
                for (Eigen::Index c = 0; c < mat.cols(); ++c) mat(r, c) = uv(rng);
        pt.personal_best = pt.position;
        positions[i] = pt.position;
    }
    std::vector<double> fit;
    detail::evaluate_all(prob, positions, fit, n_threads);
    for (int i = 0; i < cfg.n_particles; ++i)
        swarm[i].personal_best_fitness = fit[i];

    int b = detail::argmax_index(fit);
    Chromosome gbest = swarm[b].position;
    double gbest_fitness = fit[b];

    OptimResult res;
    res.best = gbest;
    res.best_fitness = gbest_fitness;
    auto record = [&](int gen) {
        res.curve.push_back({gen, detail::mean_of(fit),
                             fit[detail::argmax_index(fit)], res.best_fitness});
    };
    record(0);

    for (int gen = 1; gen <= cfg.generations; ++gen) {
        for (auto& pt : swarm) pso_step_particle(pt, gbest, cfg, rng);
        for (int i = 0; i < cfg.n_particles; ++i) positions[i] = swarm[i].position;
        detail::evaluate_all(prob, positions, fit, n_threads);
        for (int i = 0; i < cfg.n_particles; ++i) {
            if (fit[i] > swarm[i].personal_best_fitness) {
                swarm[i].personal_best = swarm[i].position;
                swarm[i].personal_best_fitness = fit[i];
            }
        }
        b = detail::argmax_index(fit);
        if (fit[b] > res.best_fitness) {
            res.best = swarm[b].position;
            res.best_fitness = fit[b];
        }
        if (cfg.global_best_mode == GlobalBestMode::Generation) {
            gbest = swarm[b].position;
            gbest_fitness = fit[b];
        } else if (fit[b] > gbest_fitness) {
            gbest = swarm[b].position;
            gbest_fitness = fit[b];
        }
        record(gen);
    }
    return res;
}

inline OptimResult ga_run(const FitnessSpec& fit, const GAConfig& cfg,
                          int n_threads = 1) {
    return ga_run(make_problem(fit), cfg, n_threads);
}

inline OptimResult pso_run(const FitnessSpec& fit, const PSOConfig& cfg,
                           int n_threads = 1) {
    return pso_run(make_problem(fit), cfg, n_threads);
}

namespace detail {

inline void accumulate_curve(LearningCurve& acc, const LearningCurve& one) {
    if (acc.empty()) {
        acc = one;
        return;
    }
    if (acc.size() != one.size())
        throw InvalidState("bench_curves: trials produced unequal curve lengths");
    for (std::size_t i = 0; i < acc.size(); ++i) {
        acc[i].mean_fitness += one[i].mean_fitness;
        acc[i].gen_best += one[i].gen_best;
        acc[i].best_so_far += one[i].best_so_far;
    }
}

inline void scale_curve(LearningCurve& acc, double inv) {
    for (auto& pt : acc) {
        pt.mean_fitness *= inv;
        pt.gen_best *= inv;
        pt.best_so_far *= inv;
    }
}

} // namespace detail

// Pointwise average of n_trials learning curves; trial i reseeds the
// configured seed plus i.
inline LearningCurve bench_curves(const OptimProblem& prob, const GAConfig& cfg,
                                  int n_trials, int n_threads = 1) {
    if (n_trials < 1) throw InvalidState("bench_curves: n_trials must be >= 1");
    LearningCurve acc;
    for (int t = 0; t < n_trials; ++t) {
        GAConfig c = cfg;
        c.seed = cfg.seed + static_cast<std::uint64_t>(t);
        detail::accumulate_curve(acc, ga_run(prob, c, n_threads).curve);
    }
    detail::scale_curve(acc, 1.0 / n_trials);
    return acc;
}

inline LearningCurve bench_curves(const OptimProblem& prob, const PSOConfig& cfg,
                                  int n_trials, int n_threads = 1) {
    if (n_trials < 1) throw InvalidState("bench_curves: n_trials must be >= 1");
    LearningCurve acc;
    for (int t = 0; t < n_trials; ++t) {
        PSOConfig c = cfg;
        c.seed = cfg.seed + static_cast<std::uint64_t>(t);
        detail::accumulate_curve(acc, pso_run(prob, c, n_threads).curve);
    }
    detail::scale_curve(acc, 1.0 / n_trials);
    return acc;
}

inline LearningCurve bench_curves(const FitnessSpec& fit, const GAConfig& cfg,
                                  int n_trials, int n_threads = 1) {
    return bench_curves(make_problem(fit), cfg, n_trials, n_threads);
}

inline LearningCurve bench_curves(const FitnessSpec& fit, const PSOConfig& cfg,
                                  int n_trials, int n_threads = 1) {
    return bench_curves(make_problem(fit), cfg, n_trials, n_threads);
}

} // namespace paulicap
