#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "paulicap/linalg.hpp"

namespace paulicap {

// Pauli error distribution (p0, p1, p2, p3). Channel points are handed
// around as (p1, p2, p3) externally and p0 is always derived, so grids can
// make the sum exact by construction.
class ProbVec4 {
public:
    ProbVec4(double p0, double p1, double p2, double p3) : p_{p0, p1, p2, p3} {
        double sum = 0.0;
        for (double& x : p_) {
            if (x < 0.0) {
                if (x < -1e-12)
                    throw InvalidDistribution("ProbVec4: negative probability");
                x = 0.0;
            }
            sum += x;
        }
        if (std::abs(sum - 1.0) > 1e-9)
            throw InvalidDistribution("ProbVec4: probabilities do not sum to 1");
    }

    static ProbVec4 from_p123(double p1, double p2, double p3) {
        return ProbVec4(1.0 - p1 - p2 - p3, p1, p2, p3);
    }

    double operator[](int k) const { return p_[k]; }
    double p0() const { return p_[0]; }
    double p1() const { return p_[1]; }
    double p2() const { return p_[2]; }
    double p3() const { return p_[3]; }
    std::vector<double> as_vector() const { return {p_[0], p_[1], p_[2], p_[3]}; }

private:
    double p_[4];
};

// Kraus label for one use per entry: 0=I, 1=X, 2=Y, 3=Z.
using PauliString = std::vector<int>;

// Applies sigma_{s1} (x) ... (x) sigma_{sn} to the S factor of psi, identity
// on R. Works by index arithmetic on the S bits (qubit j is bit n-1-j, most
// significant first): X flips a bit, Z contributes (-1)^bit, and Y = iXZ does
// both with a global i. No 2^n matrices are ever formed.
inline PureState apply_pauli_string(const PureState& psi, const PauliString& s) {
    int n = static_cast<int>(s.size());
    if (psi.dimS() != (1 << n))
        throw DimError("apply_pauli_string: string length does not match dimS");

    std::uint32_t flipmask = 0, zmask = 0;
    int y_count = 0;
    for (int j = 0; j < n; ++j) {
        int k = s[j];
        if (k < 0 || k > 3)
            throw InvalidState("apply_pauli_string: Pauli index out of range");
        std::uint32_t bit = 1u << (n - 1 - j);
        if (k == 1 || k == 2) flipmask |= bit;
        if (k == 2 || k == 3) zmask |= bit;
        if (k == 2) ++y_count;
    }

    const Complex phases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}; // i^k
    Complex global = phases[y_count & 3];

    int dim_r = psi.dimR();
    CVec out(psi.amps().size());
    for (std::uint32_t b = 0; b < static_cast<std::uint32_t>(psi.dimS()); ++b) {
        Complex phase = global;
        if (std::popcount(b & zmask) & 1) phase = -phase;
        std::uint32_t target = b ^ flipmask;
        for (int r = 0; r < dim_r; ++r)
            out(static_cast<Eigen::Index>(target) * dim_r + r) =
                phase * psi.amps()(static_cast<Eigen::Index>(b) * dim_r + r);
    }
    return PureState(psi.dimS(), dim_r, std::move(out));
}

// (Lambda^(x)n (x) Id_R) applied to |psi><psi|: sums the 4^n Kraus terms with
// product weights, skipping zero-weight strings.
inline DensityOp channel_on_purified(const PureState& psi, const ProbVec4& p, int n) {
    if (n < 1 || psi.dimS() != (1 << n))
        throw DimError("channel_on_purified: dimS must be 2^n");

    Eigen::Index dim = psi.amps().size();
    CMat acc = CMat::Zero(dim, dim);
    PauliString s(n);
    long total = 1L << (2 * n);
    for (long code = 0; code < total; ++code) {
        double w = 1.0;
        for (int j = 0; j < n; ++j) {
            s[j] = static_cast<int>((code >> (2 * (n - 1 - j))) & 3);
            w *= p[s[j]];
        }
        if (w == 0.0) continue;
        PureState out = apply_pauli_string(psi, s);
        acc.selfadjointView<Eigen::Lower>().rankUpdate(out.amps(), w);
    }
    CMat full = acc.selfadjointView<Eigen::Lower>();
    return DensityOp(std::move(full));
}

// 1 - H(p) in bits. Can go negative; callers wanting the capacity floor take
// max with zero themselves.
inline double one_shot_capacity_raw(const ProbVec4& p) {
    return 1.0 - shannon_entropy(p.as_vector());
}

} // namespace paulicap
