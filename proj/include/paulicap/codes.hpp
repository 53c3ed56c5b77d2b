#pragma once

#include <string>
#include <vector>

#include "paulicap/channel.hpp"
#include "paulicap/linalg.hpp"

namespace paulicap {

enum class Family { MES, PSI, PHI, CHI };
enum class Variant { I = 1, II = 2, III = 3 };

// Axis values double as Pauli indices, so a stabilizer string along axis a is
// just {a, a, ...}.
enum class Axis : int { X = 1, Y = 2, Z = 3 };

struct CodeId {
    Family family;
    Variant variant = Variant::I; // ignored for MES
};

inline Axis variant_axis(Variant v) {
    switch (v) {
        case Variant::I: return Axis::Z;
        case Variant::II: return Axis::X;
        default: return Axis::Y;
    }
}

inline int shot_count(Family f) {
    switch (f) {
        case Family::MES: return 1;
        case Family::PSI: return 2;
        default: return 3;
    }
}

namespace detail {

// +1 / -1 eigenstates of sigma_a.
inline Eigen::Vector2cd axis_ket(Axis a, bool bar) {
    double s = 1.0 / std::sqrt(2.0);
    Eigen::Vector2cd v;
    switch (a) {
        case Axis::X: v << s, (bar ? -s : s); break;
        case Axis::Y: v << Complex(s, 0.0), (bar ? Complex(0.0, -s) : Complex(0.0, s)); break;
        default: v << (bar ? 0.0 : 1.0), (bar ? 1.0 : 0.0); break;
    }
    return v;
}

// One additive term of a code: bar flags for the S kets, then the R kets, and
// the sign in front.
struct CodeTerm {
    std::vector<int> s;
    std::vector<int> r;
    double sign;
};

inline std::vector<CodeTerm> code_terms(Family f) {
    switch (f) {
        case Family::MES:
            return {{{0}, {0}, 1.0}, {{1}, {1}, 1.0}};
        case Family::PSI:
            return {{{0, 0}, {1, 0}, 1.0},
                    {{0, 0}, {1, 1}, 1.0},
                    {{1, 1}, {0, 0}, 1.0},
                    {{1, 1}, {0, 1}, 1.0}};
        case Family::PHI:
            return {{{0, 0, 0}, {0}, 1.0}, {{1, 1, 1}, {1}, 1.0}};
        default: // CHI
            return {{{0, 0, 0}, {0, 0, 0}, 1.0},
                    {{1, 1, 1}, {0, 0, 0}, 1.0},
                    {{0, 1, 0}, {0, 0, 1}, 1.0},
                    {{1, 0, 1}, {0, 0, 1}, -1.0},
                    {{0, 0, 0}, {0, 1, 0}, 1.0},
                    {{1, 1, 1}, {0, 1, 0}, -1.0},
                    {{0, 1, 0}, {0, 1, 1}, 1.0},
                    {{1, 0, 1}, {0, 1, 1}, 1.0}};
    }
}

} // namespace detail

// Builds the named code as a PureState, S qubits first, R qubits last. Terms
// are summed and then divided by the computed norm; no normalization factor
// is hard-coded.
inline PureState build_code(CodeId id) {
    Axis a = id.family == Family::MES ? Axis::Z : variant_axis(id.variant);
    std::vector<detail::CodeTerm> terms = detail::code_terms(id.family);

    int ns = static_cast<int>(terms[0].s.size());
    int nr = static_cast<int>(terms[0].r.size());
    int dim_s = 1 << ns;
    int dim_r = 1 << nr;

    CVec amps = CVec::Zero(static_cast<Eigen::Index>(dim_s) * dim_r);
    for (const auto& t : terms) {
        CVec term(1);
        term(0) = t.sign;
        for (int q = 0; q < ns + nr; ++q) {
            bool bar = q < ns ? t.s[q] : t.r[q - ns];
            Eigen::Vector2cd k = detail::axis_ket(a, bar);
            CVec next(term.size() * 2);
            for (Eigen::Index i = 0; i < term.size(); ++i) {
                next(2 * i) = term(i) * k(0);
                next(2 * i + 1) = term(i) * k(1);
            }
            term = std::move(next);
        }
        amps += term;
    }
    amps /= amps.norm();
    return PureState(dim_s, dim_r, std::move(amps));
}

// True iff sigma_a (x) sigma_a on the S qubits leaves the code fixed. The
// one-parameter overload uses the variant's own axis.
inline bool stabilizer_check(CodeId id, Axis a) {
    if (id.family != Family::PSI)
        throw Unsupported("stabilizer_check: only the two-qubit codes have this form");
    PureState psi = build_code(id);
    PureState out = apply_pauli_string(psi, {static_cast<int>(a), static_cast<int>(a)});
    return (out.amps() - psi.amps()).norm() < 1e-12;
}

inline bool stabilizer_check(CodeId id) {
    return stabilizer_check(id, variant_axis(id.variant));
}

inline std::string code_name(CodeId id) {
    if (id.family == Family::MES) return "mes";
    std::string base;
    switch (id.family) {
        case Family::PSI: base = "psi"; break;
        case Family::PHI: base = "phi"; break;
        default: base = "chi"; break;
    }
    return base + std::to_string(static_cast<int>(id.variant));
}

inline std::string family_name(Family f) {
    switch (f) {
        case Family::MES: return "mes";
        case Family::PSI: return "psi";
        case Family::PHI: return "phi";
        default: return "chi";
    }
}

inline Family family_from_name(const std::string& name) {
    if (name == "mes") return Family::MES;
    if (name == "psi") return Family::PSI;
    if (name == "phi") return Family::PHI;
    if (name == "chi") return Family::CHI;
    throw Unsupported("unknown code family: " + name);
}

inline CodeId code_id_from_name(const std::string& name) {
    if (name == "mes") return {Family::MES, Variant::I};
    if (name.size() == 4 && name[3] >= '1' && name[3] <= '3') {
        Variant v = static_cast<Variant>(name[3] - '0');
        std::string base = name.substr(0, 3);
        if (base == "psi") return {Family::PSI, v};
        if (base == "phi") return {Family::PHI, v};
        if (base == "chi") return {Family::CHI, v};
    }
    throw Unsupported("unknown code name: " + name);
}

inline std::vector<CodeId> all_codes() {
    std::vector<CodeId> out{{Family::MES, Variant::I}};
    for (Family f : {Family::PSI, Family::PHI, Family::CHI})
        for (Variant v : {Variant::I, Variant::II, Variant::III}) out.push_back({f, v});
    return out;
}

} // namespace paulicap
