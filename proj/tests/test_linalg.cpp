#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include "paulicap/linalg.hpp"

using namespace paulicap;

namespace {

CMat pauli(int k) {
    CMat m(2, 2);
    const Complex I(0.0, 1.0);
    switch (k) {
        case 0: m << 1, 0, 0, 1; break;
        case 1: m << 0, 1, 1, 0; break;
        case 2: m << 0, -I, I, 0; break;
        default: m << 1, 0, 0, -1; break;
    }
    return m;
}

CMat hadamard() {
    CMat h(2, 2);
    double s = 1.0 / std::sqrt(2.0);
    h << s, s, s, -s;
    return h;
}

CVec random_unit_vector(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CVec v(n);
    for (int i = 0; i < n; ++i) v(i) = Complex(u(rng), u(rng));
    v /= v.norm();
    return v;
}

CMat random_hermitian(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CMat a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = Complex(u(rng), u(rng));
    return CMat(0.5 * (a + a.adjoint()));
}

DensityOp random_density(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CMat a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = Complex(u(rng), u(rng));
    CMat rho = a * a.adjoint();
    rho /= rho.trace().real();
    return DensityOp(std::move(rho));
}

// Independent eigenvalue route for the oracle tests: characteristic
// polynomial via Faddeev-LeVerrier in extended precision, then roots by
// Durand-Kerner iteration. Shares no code with the Eigen-backed path.
using LC = std::complex<long double>;

struct LMat {
    int n;
    std::vector<LC> a; // row-major

    LC& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    LC at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

LMat lmul(const LMat& x, const LMat& y) {
    LMat z{x.n, std::vector<LC>(static_cast<size_t>(x.n) * x.n)};
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            LC v = x.at(i, k);
            for (int j = 0; j < x.n; ++j) z.at(i, j) += v * y.at(k, j);
        }
    return z;
}

LC ltrace(const LMat& x) {
    LC t = 0;
    for (int i = 0; i < x.n; ++i) t += x.at(i, i);
    return t;
}

// Coefficients c[0..n] of det(xI - A) = c0 x^n + c1 x^{n-1} + ... + cn, c0 = 1.
std::vector<LC> charpoly(const LMat& a) {
    int n = a.n;
    std::vector<LC> c(n + 1);
    c[0] = 1;
    LMat m = a;
    c[1] = -ltrace(m);
    for (int k = 2; k <= n; ++k) {
        for (int i = 0; i < n; ++i) m.at(i, i) += c[k - 1];
        m = lmul(a, m);
        c[k] = -ltrace(m) / static_cast<long double>(k);
    }
    return c;
}

std::vector<LC> durand_kerner(const std::vector<LC>& c) {
    int n = static_cast<int>(c.size()) - 1;
    std::vector<LC> x(n);
    LC seed(0.4L, 0.9L);
    LC p = 1;
    for (int i = 0; i < n; ++i) {
        p *= seed;
        x[i] = p;
    }
    for (int iter = 0; iter < 2000; ++iter) {
        long double step = 0;
        for (int i = 0; i < n; ++i) {
            LC num = c[0];
            for (int k = 1; k <= n; ++k) num = num * x[i] + c[k];
            LC den = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) den *= x[i] - x[j];
            LC d = num / den;
            x[i] -= d;
            step = std::max(step, std::abs(d));
        }
        if (step < 1e-17L) break;
    }
    return x;
}

std::vector<double> eigenvalues_charpoly_oracle(const CMat& m) {
    int n = static_cast<int>(m.rows());
    LMat a{n, std::vector<LC>(static_cast<size_t>(n) * n)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a.at(i, j) = LC(m(i, j).real(), m(i, j).imag());
    std::vector<LC> roots = durand_kerner(charpoly(a));
    std::vector<double> ev;
    for (const LC& r : roots) ev.push_back(static_cast<double>(r.real()));
    std::sort(ev.begin(), ev.end());
    return ev;
}

} // namespace

TEST_CASE("kron basics") {
    CMat i2 = pauli(0);
    CMat i4 = kron(i2, i2);
    REQUIRE(i4.rows() == 4);
    REQUIRE((i4 - CMat::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);

    CVec v00 = CVec::Zero(4);
    v00(0) = 1.0;
    CVec flipped = kron(pauli(1), pauli(1)) * v00;
    REQUIRE(std::abs(flipped(3) - Complex(1.0, 0.0)) < 1e-15);
    REQUIRE(flipped.head(3).norm() < 1e-15);

    CMat zz = kron(pauli(3), pauli(3));
    CMat expect(4, 4);
    expect.setZero();
    expect(0, 0) = 1.0;
    expect(1, 1) = -1.0;
    expect(2, 2) = -1.0;
    expect(3, 3) = 1.0;
    REQUIRE((zz - expect).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("outer product density operators") {
    CVec e0(2);
    e0 << 1.0, 0.0;
    DensityOp rho0 = outer(PureState(2, 1, e0));
    REQUIRE(std::abs(rho0.mat()(0, 0) - Complex(1.0, 0.0)) < 1e-15);
    REQUIRE(std::abs(rho0.mat()(1, 1)) < 1e-15);

    CVec plus(2);
    plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    DensityOp rhop = outer(PureState(2, 1, plus));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            REQUIRE(std::abs(rhop.mat()(i, j) - Complex(0.5, 0.0)) < 1e-12);

    CVec bell = CVec::Zero(4);
    bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
    DensityOp rhob = outer(PureState(2, 2, bell));
    REQUIRE(std::abs(rhob.mat()(0, 0) - Complex(0.5, 0.0)) < 1e-12);
    REQUIRE(std::abs(rhob.mat()(0, 3) - Complex(0.5, 0.0)) < 1e-12);
    REQUIRE(std::abs(rhob.mat()(3, 0) - Complex(0.5, 0.0)) < 1e-12);
    REQUIRE(std::abs(rhob.mat()(3, 3) - Complex(0.5, 0.0)) < 1e-12);
    REQUIRE(std::abs(rhob.mat()(1, 1)) < 1e-15);
}

TEST_CASE("partial trace over R") {
    SECTION("Bell state reduces to maximally mixed") {
        CVec bell = CVec::Zero(4);
        bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
        DensityOp rs = partial_trace_R(outer(PureState(2, 2, bell)), 2, 2);
        REQUIRE((rs.mat() - 0.5 * CMat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
    }

    SECTION("product state keeps the S factor") {
        std::mt19937_64 rng(11);
        CVec a = random_unit_vector(rng, 4);
        CVec b = random_unit_vector(rng, 3);
        CVec amps(12);
        for (int s = 0; s < 4; ++s)
            for (int r = 0; r < 3; ++r) amps(s * 3 + r) = a(s) * b(r);
        DensityOp rs = partial_trace_R(outer(PureState(4, 3, amps)), 4, 3);
        CMat expect = a * a.adjoint();
        REQUIRE((rs.mat() - expect).cwiseAbs().maxCoeff() < 1e-12);
    }

    SECTION("random state matches index-summation oracle") {
        std::mt19937_64 rng(12);
        for (int rep = 0; rep < 25; ++rep) {
            DensityOp rho = random_density(rng, 4);
            DensityOp rs = partial_trace_R(rho, 2, 2);
            REQUIRE(std::abs(rs.mat().trace() - Complex(1.0, 0.0)) < 1e-12);
            // four explicit loops, nothing shared with the implementation
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    Complex acc(0.0, 0.0);
                    for (int r1 = 0; r1 < 2; ++r1)
                        for (int r2 = 0; r2 < 2; ++r2)
                            if (r1 == r2) acc += rho.mat()(i * 2 + r1, j * 2 + r2);
                    REQUIRE(std::abs(rs.mat()(i, j) - acc) < 1e-14);
                }
        }
    }

    SECTION("dimension mismatch is rejected") {
        std::mt19937_64 rng(13);
        DensityOp rho = random_density(rng, 4);
        REQUIRE_THROWS_AS(partial_trace_R(rho, 3, 2), DimError);
    }
}

TEST_CASE("hermitian eigenvalues") {
    SECTION("diagonal and Pauli cases") {
        CMat d(2, 2);
        d.setZero();
        d(0, 0) = 0.25;
        d(1, 1) = 0.75;
        auto ev = hermitian_eigenvalues(d);
        REQUIRE_THAT(ev[0], Catch::Matchers::WithinAbs(0.25, 1e-14));
        REQUIRE_THAT(ev[1], Catch::Matchers::WithinAbs(0.75, 1e-14));

        auto evx = hermitian_eigenvalues(pauli(1));
        REQUIRE_THAT(evx[0], Catch::Matchers::WithinAbs(-1.0, 1e-14));
        REQUIRE_THAT(evx[1], Catch::Matchers::WithinAbs(1.0, 1e-14));
    }

    SECTION("random 8x8 vs characteristic polynomial roots") {
        std::mt19937_64 rng(21);
        for (int rep = 0; rep < 10; ++rep) {
            CMat h = random_hermitian(rng, 8);
            auto got = hermitian_eigenvalues(h);
            auto want = eigenvalues_charpoly_oracle(h);
            REQUIRE(got.size() == want.size());
            REQUIRE(std::is_sorted(got.begin(), got.end()));
            for (size_t k = 0; k < got.size(); ++k)
                REQUIRE_THAT(got[k], Catch::Matchers::WithinAbs(want[k], 1e-9));
        }
    }

    SECTION("non-Hermitian input is rejected") {
        CMat m(2, 2);
        m << 0.0, 1.0, 0.0, 0.0;
        REQUIRE_THROWS_AS(hermitian_eigenvalues(m), NotHermitian);
    }
}

TEST_CASE("von Neumann entropy") {
    CVec e0(2);
    e0 << 1.0, 0.0;
    REQUIRE_THAT(von_neumann_entropy(outer(PureState(2, 1, e0))),
                 Catch::Matchers::WithinAbs(0.0, 1e-12));

    DensityOp mixed4(CMat(0.25 * CMat::Identity(4, 4)));
    REQUIRE_THAT(von_neumann_entropy(mixed4), Catch::Matchers::WithinAbs(2.0, 1e-12));

    CMat half = CMat::Zero(4, 4);
    half(0, 0) = half(1, 1) = 0.5;
    REQUIRE_THAT(von_neumann_entropy(DensityOp(half)), Catch::Matchers::WithinAbs(1.0, 1e-12));

    SECTION("tiny negative eigenvalues clamp, larger ones throw") {
        CMat ok = CMat::Zero(2, 2);
        ok(0, 0) = 1.0 + 5e-9;
        ok(1, 1) = -5e-9;
        REQUIRE(std::abs(von_neumann_entropy(DensityOp(ok))) < 1e-7);

        CMat bad = CMat::Zero(2, 2);
        bad(0, 0) = 1.0 + 5e-8;
        bad(1, 1) = -5e-8;
        REQUIRE_THROWS_AS(von_neumann_entropy(DensityOp(bad)), NotPSD);
    }
}

TEST_CASE("Shannon entropy") {
    REQUIRE_THAT(shannon_entropy({1.0, 0.0, 0.0, 0.0}), Catch::Matchers::WithinAbs(0.0, 1e-12));
    REQUIRE_THAT(shannon_entropy({0.25, 0.25, 0.25, 0.25}),
                 Catch::Matchers::WithinAbs(2.0, 1e-12));
    REQUIRE_THAT(shannon_entropy({0.5, 0.5, 0.0, 0.0}), Catch::Matchers::WithinAbs(1.0, 1e-12));

    REQUIRE_THROWS_AS(shannon_entropy({0.5, 0.6}), InvalidDistribution);
    REQUIRE_THROWS_AS(shannon_entropy({1.1, -0.1}), InvalidDistribution);
    // a -1e-13 entry is clamped, not rejected
    REQUIRE_THAT(shannon_entropy({1.0, -1e-13}), Catch::Matchers::WithinAbs(0.0, 1e-12));
}

TEST_CASE("type invariants are enforced") {
    CVec v(2);
    v << 1.0, 1.0;
    REQUIRE_THROWS_AS(PureState(2, 1, v), InvalidState);
    REQUIRE_THROWS_AS(PureState(3, 1, v), DimError);
    REQUIRE_THROWS_AS(PureState(0, 1, v), DimError);

    CMat notherm(2, 2);
    notherm << 0.5, Complex(0.1, 0.1), Complex(0.1, 0.1), 0.5;
    REQUIRE_THROWS_AS(DensityOp(notherm), NotHermitian);

    CMat badtrace = 0.75 * CMat::Identity(2, 2);
    REQUIRE_THROWS_AS(DensityOp(badtrace), InvalidState);

    CMat rect(2, 3);
    rect.setZero();
    REQUIRE_THROWS_AS(DensityOp(rect), DimError);
}

TEST_CASE("purification spectrum matches the S-side Gram matrix") {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 20; ++rep) {
        int ds = 2 << (rep % 2); // 2 or 4
        int dr = 3;
        CVec amps = random_unit_vector(rng, ds * dr);
        PureState psi(ds, dr, amps);
        auto got = hermitian_eigenvalues(partial_trace_R(outer(psi), ds, dr).mat());

        CMat gram(ds, ds);
        for (int i = 0; i < ds; ++i)
            for (int j = 0; j < ds; ++j) {
                Complex acc(0.0, 0.0);
                for (int r = 0; r < dr; ++r) acc += amps(i * dr + r) * std::conj(amps(j * dr + r));
                gram(i, j) = acc;
            }
        auto want = hermitian_eigenvalues(gram);
        for (size_t k = 0; k < got.size(); ++k)
            REQUIRE_THAT(got[k], Catch::Matchers::WithinAbs(want[k], 1e-9));
    }
}

TEST_CASE("entropy is additive over tensor products") {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 10; ++rep) {
        DensityOp a = random_density(rng, 4);
        DensityOp b = random_density(rng, 4);
        DensityOp ab(kron(a.mat(), b.mat()));
        REQUIRE_THAT(von_neumann_entropy(ab),
                     Catch::Matchers::WithinAbs(
                         von_neumann_entropy(a) + von_neumann_entropy(b), 1e-9));
    }
}

TEST_CASE("entropy is invariant under Pauli/Hadamard unitaries") {
    std::mt19937_64 rng(51);
    std::uniform_int_distribution<int> pick(0, 4);
    for (int rep = 0; rep < 10; ++rep) {
        DensityOp rho = random_density(rng, 4);
        CMat u = CMat::Identity(4, 4);
        for (int layer = 0; layer < 3; ++layer) {
            auto factor = [&](int c) { return c == 4 ? hadamard() : pauli(c); };
            u = kron(factor(pick(rng)), factor(pick(rng))) * u;
        }
        DensityOp rotated(CMat(u * rho.mat() * u.adjoint()));
        REQUIRE_THAT(von_neumann_entropy(rotated),
                     Catch::Matchers::WithinAbs(von_neumann_entropy(rho), 1e-9));
    }
}

TEST_CASE("density operators from library ops stay well formed") {
    std::mt19937_64 rng(61);
    for (int rep = 0; rep < 10; ++rep) {
        CVec amps = random_unit_vector(rng, 8);
        DensityOp rho = outer(PureState(4, 2, amps));
        DensityOp rs = partial_trace_R(rho, 4, 2);
        for (const DensityOp* op : {&rho, &rs}) {
            REQUIRE(std::abs(op->mat().trace() - Complex(1.0, 0.0)) < 1e-9);
            REQUIRE((op->mat() - op->mat().adjoint()).cwiseAbs().maxCoeff() < 1e-9);
            auto ev = hermitian_eigenvalues(op->mat());
            REQUIRE(ev.front() >= -1e-8);
        }
    }
}
