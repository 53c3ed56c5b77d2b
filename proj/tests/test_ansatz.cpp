#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "paulicap/ansatz.hpp"
#include "paulicap/codes.hpp"
#include "paulicap/coherent.hpp"

using namespace paulicap;

namespace {

AnsatzSpec nn_spec(std::vector<int> layers) {
    AnsatzSpec s;
    s.kind = AnsatzSpec::Kind::NN;
    s.layer_sizes = std::move(layers);
    return s;
}

// Reference forward pass for the 4 / 4x4 / 2 architecture, written without
// any layer loop or Eigen so the implementation has nothing in common with
// nn_decode.
void straight_line_forward(const NNParams& p, int x, double out[2]) {
    double in[4], a1[4], a2[4];
    for (int j = 0; j < 4; ++j) in[j] = (x >> (3 - j)) & 1;
    for (int i = 0; i < 4; ++i) {
        double z = p.biases[0](i);
        for (int j = 0; j < 4; ++j) z += p.weights[0](i, j) * in[j];
        a1[i] = std::cos(z);
    }
    for (int i = 0; i < 4; ++i) {
        double z = p.biases[1](i);
        for (int j = 0; j < 4; ++j) z += p.weights[1](i, j) * a1[j];
        a2[i] = std::tanh(z);
    }
    for (int i = 0; i < 2; ++i) {
        double z = p.biases[2](i);
        for (int j = 0; j < 4; ++j) z += p.weights[2](i, j) * a2[j];
        out[i] = z;
    }
}

} // namespace

TEST_CASE("network decode") {
    SECTION("matches a straight-line forward pass") {
        std::mt19937_64 rng(42);
        NNParams p = std::get<NNParams>(ansatz_init(nn_spec({4, 4, 4, 2}), 2, rng));
        PureState psi = nn_decode(p, 4);

        Complex ref[16];
        double norm2 = 0.0;
        for (int x = 0; x < 16; ++x) {
            double out[2];
            straight_line_forward(p, x, out);
            ref[x] = Complex(out[0], out[1]);
            norm2 += out[0] * out[0] + out[1] * out[1];
        }
        double norm = std::sqrt(norm2);
        for (int x = 0; x < 16; ++x)
            REQUIRE(std::abs(psi.amps()(x) - ref[x] / norm) < 1e-12);
    }

    SECTION("decoded states are normalized") {
        std::mt19937_64 rng(43);
        for (int rep = 0; rep < 5; ++rep) {
            AnsatzParams p = ansatz_init(nn_spec({4, 4, 4, 4, 4, 2}), 2, rng);
            REQUIRE_THAT(ansatz_decode(p, 2).amps().norm(),
                         Catch::Matchers::WithinAbs(1.0, 1e-12));
        }
    }

    SECTION("decode is deterministic") {
        std::mt19937_64 rng(44);
        NNParams p = std::get<NNParams>(ansatz_init(nn_spec({4, 4, 4, 2}), 2, rng));
        CVec a = nn_decode(p, 4).amps();
        CVec b = nn_decode(p, 4).amps();
        REQUIRE((a.array() == b.array()).all());
    }

    SECTION("an all-zero network has no state to offer") {
        // cos(0)=1 on the first hidden layer, but the zero weights of the
        // next layer erase it and the linear output stays exactly zero
        NNParams p;
        p.layer_sizes = {4, 4, 4, 4, 4, 2};
        for (size_t l = 0; l + 1 < p.layer_sizes.size(); ++l) {
            p.weights.emplace_back(
                Eigen::MatrixXd::Zero(p.layer_sizes[l + 1], p.layer_sizes[l]));
            p.biases.emplace_back(Eigen::VectorXd::Zero(p.layer_sizes[l + 1]));
        }
        REQUIRE_THROWS_AS(nn_decode(p, 4), DegenerateState);

        // a unit bias on the real output unit makes every amplitude equal
        p.biases.back()(0) = 1.0;
        PureState psi = nn_decode(p, 4);
        for (int x = 0; x < 16; ++x)
            REQUIRE(std::abs(psi.amps()(x) - Complex(0.25, 0.0)) < 1e-14);
    }

    SECTION("plus/minus input encoding changes the state") {
        std::mt19937_64 rng(45);
        NNParams p = std::get<NNParams>(ansatz_init(nn_spec({4, 4, 4, 2}), 2, rng));
        CVec zero_one = nn_decode(p, 4).amps();
        p.encoding = BitEncoding::PlusMinus;
        CVec pm = nn_decode(p, 4).amps();
        REQUIRE((zero_one - pm).norm() > 1e-6);
    }
}

TEST_CASE("raw decode") {
    SECTION("basis state") {
        RawParams p;
        p.values.assign(32, 0.0);
        p.values[0] = 1.0;
        PureState psi = raw_decode(p, 4);
        REQUIRE(std::abs(psi.amps()(0) - Complex(1.0, 0.0)) < 1e-15);
        REQUIRE(psi.dimS() == 4);
        REQUIRE(psi.dimR() == 4);
    }

    SECTION("equal real entries give the uniform superposition") {
        RawParams p;
        p.values.assign(32, 0.0);
        for (int j = 0; j < 16; ++j) p.values[2 * j] = 0.7;
        PureState psi = raw_decode(p, 4);
        for (int j = 0; j < 16; ++j)
            REQUIRE(std::abs(psi.amps()(j) - Complex(0.25, 0.0)) < 1e-14);
    }

    SECTION("random values normalize, zeros are rejected") {
        std::mt19937_64 rng(46);
        RawParams p = std::get<RawParams>(ansatz_init(AnsatzSpec{AnsatzSpec::Kind::Raw}, 2, rng));
        REQUIRE_THAT(raw_decode(p, 4).amps().norm(), Catch::Matchers::WithinAbs(1.0, 1e-12));

        RawParams zero;
        zero.values.assign(32, 0.0);
        REQUIRE_THROWS_AS(raw_decode(zero, 4), DegenerateState);
        zero.values.assign(16, 1.0);
        REQUIRE_THROWS_AS(raw_decode(zero, 4), ShapeError);
    }
}

TEST_CASE("schmidt decode") {
    SECTION("rank-2 terms reproduce the repetition code") {
        SchmidtParams p;
        p.rank = 2;
        p.coefficients = {1.0, 1.0};
        CVec s0 = CVec::Zero(8), s1 = CVec::Zero(8);
        s0(0) = 1.0;
        s1(7) = 1.0;
        CVec r0 = CVec::Zero(2), r1 = CVec::Zero(2);
        r0(0) = 1.0;
        r1(1) = 1.0;
        p.s_vectors = {s0, s1};
        p.r_vectors = {r0, r1};
        PureState psi = schmidt_decode(p, 3);
        PureState phi = build_code({Family::PHI, Variant::I});
        REQUIRE_THAT(std::abs(psi.amps().dot(phi.amps())),
                     Catch::Matchers::WithinAbs(1.0, 1e-12));
    }

    SECTION("rank 1 is a product state") {
        std::mt19937_64 rng(47);
        AnsatzSpec spec;
        spec.kind = AnsatzSpec::Kind::Schmidt;
        spec.schmidt_rank = 1;
        AnsatzParams p = ansatz_init(spec, 2, rng);
        PureState psi = ansatz_decode(p, 2);
        ProbVec4 channel = ProbVec4::from_p123(0.1, 0.05, 0.02);
        REQUIRE_THAT(coherent_information(psi, channel, 2),
                     Catch::Matchers::WithinAbs(0.0, 1e-10));
    }

    SECTION("singular values of the amplitude matrix respect the rank") {
        std::mt19937_64 rng(48);
        AnsatzSpec spec;
        spec.kind = AnsatzSpec::Kind::Schmidt;
        spec.schmidt_rank = 2;
        for (int rep = 0; rep < 5; ++rep) {
            PureState psi = ansatz_decode(ansatz_init(spec, 3, rng), 3);
            CMat m(8, 2);
            for (int s = 0; s < 8; ++s)
                for (int r = 0; r < 2; ++r) m(s, r) = psi.amp(s, r);
            Eigen::JacobiSVD<CMat> svd(m);
            int nonzero = 0;
            for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
                if (svd.singularValues()(i) > 1e-12) ++nonzero;
            REQUIRE(nonzero <= 2);
        }
    }

    SECTION("degenerate and malformed inputs") {
        SchmidtParams p;
        p.rank = 2;
        p.coefficients = {0.0, 0.0};
        p.s_vectors = {CVec::Zero(4), CVec::Zero(4)};
        p.r_vectors = {CVec::Zero(2), CVec::Zero(2)};
        REQUIRE_THROWS_AS(schmidt_decode(p, 2), DegenerateState);
        p.s_vectors[0] = CVec::Zero(8);
        REQUIRE_THROWS_AS(schmidt_decode(p, 2), ShapeError);
    }
}

TEST_CASE("chromosome round trips") {
    std::mt19937_64 rng(49);

    SECTION("network parameters") {
        AnsatzParams p = ansatz_init(nn_spec({4, 4, 4, 4, 4, 2}), 2, rng);
        Chromosome ch = chromosome_view(p);
        REQUIRE(ch.size() == 10); // five weight matrices, five bias rows
        REQUIRE(ch[0].rows() == 4);
        REQUIRE(ch[1].rows() == 1);
        AnsatzParams back = chromosome_restore(ch, p);
        Chromosome ch2 = chromosome_view(back);
        for (size_t i = 0; i < ch.size(); ++i)
            REQUIRE((ch[i].array() == ch2[i].array()).all());
    }

    SECTION("raw parameters") {
        AnsatzParams p = ansatz_init(AnsatzSpec{AnsatzSpec::Kind::Raw}, 2, rng);
        Chromosome ch = chromosome_view(p);
        REQUIRE(ch.size() == 1);
        REQUIRE(ch[0].rows() == 2);
        REQUIRE(ch[0].cols() == 16);
        AnsatzParams back = chromosome_restore(ch, p);
        REQUIRE((ansatz_decode(back, 2).amps() - ansatz_decode(p, 2).amps()).norm() == 0.0);
    }

    SECTION("schmidt parameters") {
        AnsatzSpec spec;
        spec.kind = AnsatzSpec::Kind::Schmidt;
        spec.schmidt_rank = 2;
        AnsatzParams p = ansatz_init(spec, 3, rng);
        Chromosome ch = chromosome_view(p);
        REQUIRE(ch.size() == 5); // coefficients + 2 s vectors + 2 r vectors
        REQUIRE(ch[1].cols() == 8);
        REQUIRE(ch[3].cols() == 2);
        AnsatzParams back = chromosome_restore(ch, p);
        REQUIRE((ansatz_decode(back, 3).amps() - ansatz_decode(p, 3).amps()).norm() == 0.0);
    }

    SECTION("shape mismatches are rejected") {
        AnsatzParams p = ansatz_init(nn_spec({4, 4, 4, 2}), 2, rng);
        Chromosome ch = chromosome_view(p);
        std::swap(ch[0], ch[1]);
        REQUIRE_THROWS_AS(chromosome_restore(ch, p), ShapeError);
        ch = chromosome_view(p);
        ch.pop_back();
        REQUIRE_THROWS_AS(chromosome_restore(ch, p), ShapeError);
    }
}

TEST_CASE("ansatz descriptor strings") {
    AnsatzSpec nn = parse_ansatz("nn:4x4x4x4x4x2");
    REQUIRE(nn.kind == AnsatzSpec::Kind::NN);
    REQUIRE(nn.layer_sizes == std::vector<int>{4, 4, 4, 4, 4, 2});
    REQUIRE(ansatz_name(nn) == "nn:4x4x4x4x4x2");

    REQUIRE(parse_ansatz("raw").kind == AnsatzSpec::Kind::Raw);

    AnsatzSpec sch = parse_ansatz("schmidt:k=3");
    REQUIRE(sch.kind == AnsatzSpec::Kind::Schmidt);
    REQUIRE(sch.schmidt_rank == 3);
    REQUIRE(parse_ansatz("schmidt").schmidt_rank == 2);

    REQUIRE_THROWS_AS(parse_ansatz("foo"), Unsupported);
    REQUIRE_THROWS_AS(parse_ansatz("nn:4"), Unsupported);
    REQUIRE_THROWS_AS(parse_ansatz("nn:4x4x3"), Unsupported);
    REQUIRE_THROWS_AS(parse_ansatz("schmidt:k=0"), Unsupported);
    REQUIRE_THROWS_AS(parse_ansatz("nn:axb"), Unsupported);
}

// Default-architecture configuration whose decoded state lands on the
// two-shot repetition code. The first layer's cosine rows flag x0 == x1
// and x0 != x2, a saturated tanh chain ANDs the two signs, and the output
// maps the result to amplitude 1 on matching basis states, 0 elsewhere.
TEST_CASE("default NN architecture reaches the two-shot repetition code") {
    const double pi = 3.14159265358979323846;
    NNParams params;
    params.layer_sizes = {4, 4, 4, 4, 4, 2};
    params.encoding = BitEncoding::ZeroOne;
    for (int l = 0; l < 5; ++l) {
        params.weights.push_back(Eigen::MatrixXd::Zero(
            params.layer_sizes[l + 1], params.layer_sizes[l]));
        params.biases.push_back(Eigen::VectorXd::Zero(params.layer_sizes[l + 1]));
    }
    params.weights[0](0, 0) = pi;
    params.weights[0](0, 1) = -pi;
    params.weights[0](1, 0) = pi;
    params.weights[0](1, 2) = pi;
    params.biases[0](1) = pi;
    params.biases[0](2) = pi / 2;
    params.biases[0](3) = pi / 2;
    params.weights[1](0, 0) = 5.0;
    params.weights[1](0, 1) = 5.0;
    params.biases[1](0) = -5.0;
    params.weights[2](0, 0) = 5.0;
    params.weights[3](0, 0) = 5.0;
    params.weights[4](0, 0) = 0.5;
    params.biases[4](0) = 0.5;

    PureState psi = nn_decode(params, 4, 2);
    PureState code = build_code({Family::PSI, Variant::I});
    double fidelity = std::norm(code.amps().dot(psi.amps()));
    REQUIRE(fidelity >= 0.999);

    ProbVec4 p = ProbVec4::from_p123(0.225688, 0.00801196, 0.0263041);
    REQUIRE(code_rate(psi, p, 2) ==
            Catch::Approx(code_rate(code, p, 2)).margin(1e-6));
}
