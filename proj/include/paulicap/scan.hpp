#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <utility>
#include <vector>

#include "paulicap/coherent.hpp"
#include "paulicap/errors.hpp"
#include "paulicap/parallel.hpp"

namespace paulicap {

struct AxisSpec {
    double lo = 0.0;
    double hi = 0.20;
    double step = 0.01;
};

struct GridSpec {
    AxisSpec p1, p2, p3;
};

struct ScanRecord {
    double p1, p2, p3;
    double q1_raw;
    double best_rate;
    CodeId best_code;
    double gap;
    bool superadditive;
};

enum class SliceMode { Gap, ZeroQ1Gap };

struct SliceSpec {
    double fixed_p3 = 0.0;
    AxisSpec p1, p2;
    SliceMode mode = SliceMode::Gap;
};

struct SliceResult {
    std::vector<double> p1, p2;
    std::vector<std::vector<double>> values; // values[i][j] at (p1[i], p2[j])
};

struct CompareRecord {
    double p1, p2, p3;
    Family winner;
    double phi_rate, chi_rate;
    bool tie;
};

namespace detail {

inline std::vector<double> axis_values(const AxisSpec& a) {
    if (!(a.lo <= a.hi) || !(a.step > 0.0))
        throw InvalidState("axis requires lo <= hi and step > 0");
    std::vector<double> out;
    for (int i = 0;; ++i) {
        double v = a.lo + i * a.step;
        if (v > a.hi + a.step * 1e-9) break;
        out.push_back(v);
    }
    return out;
}

inline bool simplex_ok(double p1, double p2, double p3) {
    return 1.0 - p1 - p2 - p3 >= -1e-12;
}

inline void check_families(const std::vector<Family>& families, int n) {
    if (families.empty()) throw InvalidState("family set must be nonempty");
    for (Family f : families) {
        if (f == Family::MES)
            throw Unsupported("scans need a multi-shot code family");
        if (shot_count(f) != n)
            throw Unsupported("family " + family_name(f) + " is a " +
                              std::to_string(shot_count(f)) + "-shot code");
    }
}

struct BestOverFamilies {
    double rate;
    CodeId code;
};

inline BestOverFamilies best_over(const std::vector<Family>& families,
                                  const ProbVec4& p) {
    BestOverFamilies out{0.0, CodeId{families[0], Variant::I}};
    bool first = true;
    for (Family f : families) {
        BestVariant bv = best_family_rate(f, p);
        if (first || bv.rate > out.rate) {
            out.rate = bv.rate;
            out.code = CodeId{f, bv.variant};
            first = false;
        }
    }
    return out;
}

} // namespace detail

// Closed-form sweep over the inclusive grid, p1 outer, p2 middle, p3
// inner. Points leaving the probability simplex are skipped; everything
// else yields one record in iteration order regardless of thread count.
inline std::vector<ScanRecord> grid_scan(const GridSpec& g, int n,
                                         const std::vector<Family>& families,
                                         int n_threads = 1) {
    detail::check_families(families, n);
    auto v1 = detail::axis_values(g.p1);
    auto v2 = detail::axis_values(g.p2);
    auto v3 = detail::axis_values(g.p3);

    std::vector<std::array<double, 3>> points;
    for (double a : v1)
        for (double b : v2)
            for (double c : v3)
                if (detail::simplex_ok(a, b, c)) points.push_back({a, b, c});

    std::vector<ScanRecord> records(points.size(),
                                    ScanRecord{0, 0, 0, 0, 0,
                                               CodeId{families[0], Variant::I},
                                               0, false});
    parallel_for(static_cast<std::int64_t>(points.size()), n_threads,
                 [&](std::int64_t i) {
                     auto [a, b, c] = points[i];
                     ProbVec4 p = ProbVec4::from_p123(a, b, c);
                     double q1 = one_shot_capacity_raw(p);
                     auto best = detail::best_over(families, p);
                     double gap = best.rate - q1;
                     records[i] = ScanRecord{a,    b,         c,   q1,
                                             best.rate, best.code, gap,
                                             gap > 1e-9};
                 });
    return records;
}

// Fixed-p3 density map of the capacity gap best_rate - max(q1, 0),
// clamped at zero. Cells outside the simplex read 0; ZeroQ1Gap
// additionally zeroes cells where the one-shot capacity is positive,
// leaving only channels that are dead for single use yet alive for n
// joint uses.
inline SliceResult slice_density(const SliceSpec& s, int n,
                                 const std::vector<Family>& families,
                                 int n_threads = 1) {
    detail::check_families(families, n);
    SliceResult out;
    out.p1 = detail::axis_values(s.p1);
    out.p2 = detail::axis_values(s.p2);
    out.values.assign(out.p1.size(), std::vector<double>(out.p2.size(), 0.0));

    std::int64_t cells = static_cast<std::int64_t>(out.p1.size()) *
                         static_cast<std::int64_t>(out.p2.size());
    parallel_for(cells, n_threads, [&](std::int64_t idx) {
        std::size_t i = static_cast<std::size_t>(idx) / out.p2.size();
        std::size_t j = static_cast<std::size_t>(idx) % out.p2.size();
        double a = out.p1[i], b = out.p2[j];
        if (!detail::simplex_ok(a, b, s.fixed_p3)) return;
        ProbVec4 p = ProbVec4::from_p123(a, b, s.fixed_p3);
        double q1 = one_shot_capacity_raw(p);
        if (s.mode == SliceMode::ZeroQ1Gap && q1 > 0.0) return;
        double gap = detail::best_over(families, p).rate - std::max(q1, 0.0);
        out.values[i][j] = std::max(gap, 0.0);
    });
    return out;
}

// Three-shot family contest on a grid: at every superadditive point the
// strictly better of PHI and CHI wins; exact draws go to PHI and are
// flagged.
inline std::vector<CompareRecord> family_compare(const GridSpec& g,
                                                 int n_threads = 1) {
    auto v1 = detail::axis_values(g.p1);
    auto v2 = detail::axis_values(g.p2);
    auto v3 = detail::axis_values(g.p3);

    std::vector<std::array<double, 3>> points;
    for (double a : v1)
        for (double b : v2)
            for (double c : v3)
                if (detail::simplex_ok(a, b, c)) points.push_back({a, b, c});

    std::vector<CompareRecord> slots(points.size());
    std::vector<char> keep(points.size(), 0);
    parallel_for(static_cast<std::int64_t>(points.size()), n_threads,
                 [&](std::int64_t i) {
                     auto [a, b, c] = points[i];
                     ProbVec4 p = ProbVec4::from_p123(a, b, c);
                     double q1 = one_shot_capacity_raw(p);
                     double phi = best_family_rate(Family::PHI, p).rate;
                     double chi = best_family_rate(Family::CHI, p).rate;
                     if (std::max(phi, chi) - q1 <= 1e-9) return;
                     slots[i] = CompareRecord{
                         a,   b,   c, chi > phi ? Family::CHI : Family::PHI,
                         phi, chi, std::abs(phi - chi) <= 1e-12};
                     keep[i] = 1;
                 });
    std::vector<CompareRecord> records;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (keep[i]) records.push_back(slots[i]);
    return records;
}

// Deterministic maximization of the super-additivity gap for one code:
// the code's rate minus the one-shot capacity max(1 - H(p), 0). Flooring
// at zero matters: against the raw hashing rate the "gap" grows without
// meaning deep in the q1 < 0 region (2/3 at the uniform channel), while
// the capacity gap peaks in the interior, where activation actually happens. Search:
// coarse 0.02 grid over [0, 0.4]^3 inside the simplex, keep the 20 best
// cells, then repeatedly re-grid a +-step box around each survivor at a
// quarter of the step until the step drops below 1e-6.
inline std::pair<ProbVec4, double> gap_maximize(Family family, Variant variant,
                                                int n) {
    CodeId id{family, variant};
    if (family == Family::MES)
        throw Unsupported("gap of the one-shot code is identically zero");
    if (shot_count(family) != n)
        throw Unsupported("family " + family_name(family) + " is a " +
                          std::to_string(shot_count(family)) + "-shot code");

    constexpr double box = 0.4;
    struct Cand {
        std::array<double, 3> x;
        double gap;
    };
    auto gap_at = [&](const std::array<double, 3>& x) {
        ProbVec4 p = ProbVec4::from_p123(x[0], x[1], x[2]);
        return closed_rate(id, p) - std::max(one_shot_capacity_raw(p), 0.0);
    };
    auto keep_best = [](std::vector<Cand>& cands, std::size_t count) {
        std::stable_sort(cands.begin(), cands.end(),
                         [](const Cand& a, const Cand& b) { return a.gap > b.gap; });
        if (cands.size() > count) cands.resize(count);
    };

    double step = 0.02;
    std::vector<Cand> bests;
    for (int i = 0; i * step <= box + 1e-12; ++i)
        for (int j = 0; j * step <= box + 1e-12; ++j)
            for (int k = 0; k * step <= box + 1e-12; ++k) {
                std::array<double, 3> x{i * step, j * step, k * step};
                if (!detail::simplex_ok(x[0], x[1], x[2])) continue;
                bests.push_back({x, gap_at(x)});
            }
    keep_best(bests, 20);

    while (step / 4 >= 1e-6) {
        double next = step / 4;
        std::vector<Cand> cands;
        std::set<std::array<long long, 3>> seen;
        auto key_of = [&](const std::array<double, 3>& x) {
            return std::array<long long, 3>{std::llround(x[0] / next),
                                            std::llround(x[1] / next),
                                            std::llround(x[2] / next)};
        };
        for (const Cand& b : bests)
            if (seen.insert(key_of(b.x)).second) cands.push_back(b);
        for (const Cand& b : bests)
            for (int i = 0; i <= 8; ++i)
                for (int j = 0; j <= 8; ++j)
                    for (int k = 0; k <= 8; ++k) {
                        std::array<double, 3> x{
                            std::clamp(b.x[0] - step + i * next, 0.0, box),
                            std::clamp(b.x[1] - step + j * next, 0.0, box),
                            std::clamp(b.x[2] - step + k * next, 0.0, box)};
                        if (!detail::simplex_ok(x[0], x[1], x[2])) continue;
                        if (!seen.insert(key_of(x)).second) continue;
                        cands.push_back({x, gap_at(x)});
                    }
        keep_best(cands, 20);
        bests = std::move(cands);
        step = next;
    }
    const Cand& top = bests.front();
    return {ProbVec4::from_p123(top.x[0], top.x[1], top.x[2]), top.gap};
}

} // namespace paulicap
