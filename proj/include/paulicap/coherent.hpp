#pragma once

#include "paulicap/channel.hpp"
#include "paulicap/codes.hpp"
#include "paulicap/linalg.hpp"

namespace paulicap {

// I(psi, Lambda^(x)n) = S(Lambda(rho_S)) - S((Lambda (x) Id)(|psi><psi|)),
// in bits, not divided by n.
inline double coherent_information(const PureState& psi, const ProbVec4& p, int n) {
    DensityOp rho_sr = channel_on_purified(psi, p, n);
    DensityOp rho_s = partial_trace_R(rho_sr, psi.dimS(), psi.dimR());
    return von_neumann_entropy(rho_s) - von_neumann_entropy(rho_sr);
}

// Per-use rate, the quantity compared against the one-shot capacity.
inline double code_rate(const PureState& psi, const ProbVec4& p, int n) {
    return coherent_information(psi, p, n) / n;
}

namespace detail {

// Terms below have the shape coefficient * log2(argument); a vanishing
// coefficient kills the term even when the argument is zero too. Positive
// coefficients always come with positive arguments in these expressions.
inline double xlog2(double a, double b) {
    return a <= 0.0 ? 0.0 : a * std::log2(b);
}

inline double q2_psi_base(const ProbVec4& p) {
    double p0 = p.p0(), p1 = p.p1(), p2 = p.p2(), p3 = p.p3();
    double f = p1 + p2;
    double k = p0 + p3;
    double mix = 0.5 * (f * f + k * k);
    return xlog2(p1 * p2, 2.0 * p1 * p2)
         + xlog2(p0 * p3, 2.0 * p0 * p3)
         + xlog2(0.5 * (p1 * p1 + p2 * p2), p1 * p1 + p2 * p2)
         + xlog2(0.5 * (p0 * p0 + p3 * p3), p0 * p0 + p3 * p3)
         - xlog2(f * k, f * k)
         + xlog2(p0 * p2 + p1 * p3, p0 * p2 + p1 * p3)
         + xlog2(p0 * p1 + p2 * p3, p0 * p1 + p2 * p3)
         - xlog2(0.5 * k * k, mix)
         - xlog2(0.5 * f * f, mix);
}

inline double q3_phi_base(const ProbVec4& p) {
    double p0 = p.p0(), p1 = p.p1(), p2 = p.p2(), p3 = p.p3();
    double f = p1 + p2;
    double k = p0 + p3;
    double a1 = p0 * (p1 * p1 + p2 * p2) + 2.0 * p1 * p2 * p3;
    double a2 = 2.0 * p0 * p1 * p2 + (p1 * p1 + p2 * p2) * p3;
    double a3 = 2.0 * p0 * p2 * p3 + p1 * (p0 * p0 + p3 * p3);
    double a4 = 2.0 * p0 * p1 * p3 + p2 * (p0 * p0 + p3 * p3);
    return xlog2(p2 * (3.0 * p1 * p1 + p2 * p2) / 3.0, p2 * p2 * p2 + 3.0 * p1 * p1 * p2)
         + xlog2(p1 * (p1 * p1 + 3.0 * p2 * p2) / 3.0, p1 * p1 * p1 + 3.0 * p2 * p2 * p1)
         - xlog2(f * k, 0.5 * f * k)
         + xlog2(a1, a1)
         + xlog2(a2, a2)
         + xlog2(p3 * (3.0 * p0 * p0 + p3 * p3) / 3.0, p3 * p3 * p3 + 3.0 * p0 * p0 * p3)
         + xlog2(p0 * (p0 * p0 + 3.0 * p3 * p3) / 3.0, p0 * p0 * p0 + 3.0 * p3 * p3 * p0)
         - xlog2((1.0 - 3.0 * f * k) / 3.0, 0.5 * (1.0 - 3.0 * f * k))
         + xlog2(a3, a3)
         + xlog2(a4, a4);
}

inline double q3_chi_base(const ProbVec4& p) {
    double p0 = p.p0(), p1 = p.p1(), p2 = p.p2(), p3 = p.p3();
    double f = p1 + p2;
    double k = p0 + p3;
    double s12 = p1 * p1 + p2 * p2;
    double s03 = p3 * p3 + p0 * p0;
    double g1 = p1 * p3 + p2 * p0;
    double g2 = p1 * p0 + p2 * p3;
    double acc = 0.0;
    acc += xlog2(2.0 * p1 * p1 * p2, 2.0 * p1 * p1 * p2);
    acc += xlog2(2.0 * p1 * p2 * p2, 2.0 * p1 * p2 * p2);
    acc += xlog2(2.0 * p3 * p3 * p0, 2.0 * p3 * p3 * p0);
    acc += xlog2(2.0 * p3 * p0 * p0, 2.0 * p3 * p0 * p0);
    acc += xlog2(2.0 * p1 * p2 * p3, 2.0 * p1 * p2 * p3);
    acc += xlog2(2.0 * p1 * p2 * p0, 2.0 * p1 * p2 * p0);
    acc += xlog2(2.0 * p1 * p3 * p0, 2.0 * p1 * p3 * p0);
    acc += xlog2(2.0 * p2 * p3 * p0, 2.0 * p2 * p3 * p0);
    acc += xlog2(p1 * s12, p1 * s12);
    acc += xlog2(p1 * s03, p1 * s03);
    acc += xlog2(p2 * s03, p2 * s03);
    acc += xlog2(p3 * s03, p3 * s03);
    acc += xlog2(p2 * s12, p2 * s12);
    acc += xlog2(p3 * s12, p3 * s12);
    acc += xlog2(p0 * s03, p0 * s03);
    acc += xlog2(s12 * p0, s12 * p0);
    acc += xlog2(2.0 * p1 * g1, p1 * g1);
    acc += xlog2(2.0 * p1 * g2, p1 * g2);
    acc += xlog2(2.0 * p2 * g1, p2 * g1);
    acc += xlog2(2.0 * p2 * g2, p2 * g2);
    acc += xlog2(2.0 * p3 * g1, p3 * g1);
    acc += xlog2(2.0 * p3 * g2, p3 * g2);
    acc += xlog2(2.0 * p0 * g1, p0 * g1);
    acc += xlog2(2.0 * p0 * g2, p0 * g2);
    acc -= xlog2(2.0 * f * k, 0.5 * f * k);
    acc -= xlog2(f * f + k * k, 0.25 * (f * f + k * k));
    return acc / 3.0;
}

// The x and y variants reduce to the z formula with a relabeled channel.
inline ProbVec4 variant_relabel(Variant v, const ProbVec4& p) {
    switch (v) {
        case Variant::I: return p;
        case Variant::II: return ProbVec4(p.p0(), p.p3(), p.p2(), p.p1());
        default: return ProbVec4(p.p0(), p.p1(), p.p3(), p.p2());
    }
}

} // namespace detail

// Closed-form per-use rates for the named codes.
inline double q2_closed_psi(Variant v, const ProbVec4& p) {
    return detail::q2_psi_base(detail::variant_relabel(v, p));
}

inline double q3_closed_phi(Variant v, const ProbVec4& p) {
    return detail::q3_phi_base(detail::variant_relabel(v, p));
}

inline double q3_closed_chi(Variant v, const ProbVec4& p) {
    return detail::q3_chi_base(detail::variant_relabel(v, p));
}

inline double closed_rate(CodeId id, const ProbVec4& p) {
    switch (id.family) {
        case Family::MES: return one_shot_capacity_raw(p);
        case Family::PSI: return q2_closed_psi(id.variant, p);
        case Family::PHI: return q3_closed_phi(id.variant, p);
        default: return q3_closed_chi(id.variant, p);
    }
}

struct BestVariant {
    double rate;
    Variant variant;
    bool tie; // another variant matches the winner to within 1e-12
};

// Max closed-form rate over the three variants of one family; ties resolve
// toward the lowest variant index.
inline BestVariant best_family_rate(Family f, const ProbVec4& p) {
    if (f == Family::MES)
        throw Unsupported("best_family_rate: family has no variants");
    const Variant vs[3] = {Variant::I, Variant::II, Variant::III};
    double r[3];
    for (int i = 0; i < 3; ++i) r[i] = closed_rate({f, vs[i]}, p);
    int win = 0;
    for (int i = 1; i < 3; ++i)
        if (r[i] > r[win]) win = i;
    double second = std::max(r[win == 0 ? 1 : 0], r[win == 2 ? 1 : 2]);
    return {r[win], vs[win], r[win] - second <= 1e-12};
}

} // namespace paulicap
