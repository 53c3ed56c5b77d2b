#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "paulicap/linalg.hpp"

namespace paulicap {

// How bit strings are fed into the network. The zero/one reading is the
// default; the symmetric encoding is available as a configuration switch.
enum class BitEncoding { ZeroOne, PlusMinus };

struct NNParams {
    std::vector<int> layer_sizes;          // input m, hidden widths..., output 2
    std::vector<Eigen::MatrixXd> weights;  // weights[l]: layer_sizes[l+1] x layer_sizes[l]
    std::vector<Eigen::VectorXd> biases;   // biases[l]: layer_sizes[l+1]
    BitEncoding encoding = BitEncoding::ZeroOne;
};

struct RawParams {
    std::vector<double> values; // 2 * 2^m, interleaved re/im
};

struct SchmidtParams {
    int rank = 2;
    std::vector<double> coefficients; // rank entries
    std::vector<CVec> s_vectors;      // rank vectors of dim 2^n
    std::vector<CVec> r_vectors;      // rank vectors of dim rank
};

// The optimizers only ever see this flattened form: an ordered list of real
// matrices whose shapes stay fixed for the whole run.
using Chromosome = std::vector<Eigen::MatrixXd>;

namespace detail {

inline void check_nn_shapes(const NNParams& p) {
    size_t transitions = p.layer_sizes.size() - 1;
    if (p.layer_sizes.size() < 2 || p.weights.size() != transitions ||
        p.biases.size() != transitions)
        throw ShapeError("NNParams: layer bookkeeping is inconsistent");
    for (size_t l = 0; l < transitions; ++l) {
        if (p.weights[l].rows() != p.layer_sizes[l + 1] ||
            p.weights[l].cols() != p.layer_sizes[l] ||
            p.biases[l].size() != p.layer_sizes[l + 1])
            throw ShapeError("NNParams: weight or bias shape mismatch");
    }
}

} // namespace detail

// Runs the feed-forward pass for every bit string of m qubits and normalizes
// the resulting amplitude vector. First hidden layer uses cos, later hidden
// layers tanh, output is linear and read as (re, im). The first n_s qubits
// form the S side; by default the qubits split in half.
inline PureState nn_decode(const NNParams& params, int m, int n_s = -1) {
    detail::check_nn_shapes(params);
    if (params.layer_sizes.front() != m)
        throw ShapeError("nn_decode: input layer size does not match qubit count");
    if (params.layer_sizes.back() != 2)
        throw ShapeError("nn_decode: output layer must have two units");
    if (n_s < 0) n_s = m / 2;
    if (n_s < 1 || n_s > m)
        throw DimError("nn_decode: bad S/R split");

    size_t transitions = params.layer_sizes.size() - 1;
    std::int64_t total = std::int64_t(1) << m;
    CVec amps(total);
    Eigen::VectorXd act, z;
    for (std::int64_t x = 0; x < total; ++x) {
        act.resize(m);
        for (int j = 0; j < m; ++j) {
            double bit = (x >> (m - 1 - j)) & 1;
            act(j) = params.encoding == BitEncoding::ZeroOne ? bit : 2.0 * bit - 1.0;
        }
        for (size_t l = 0; l < transitions; ++l) {
            z.noalias() = params.weights[l] * act;
            z += params.biases[l];
            if (l == transitions - 1)
                act = z;
            else if (l == 0)
                act = z.array().cos();
            else
                act = z.array().tanh();
        }
        amps(x) = Complex(act(0), act(1));
    }
    double norm = amps.norm();
    if (norm < 1e-12)
        throw DegenerateState("nn_decode: network collapsed to the zero vector");
    amps /= norm;
    return PureState(1 << n_s, 1 << (m - n_s), std::move(amps));
}

inline PureState raw_decode(const RawParams& params, int m, int n_s = -1) {
    std::int64_t total = std::int64_t(1) << m;
    if (static_cast<std::int64_t>(params.values.size()) != 2 * total)
        throw ShapeError("raw_decode: value count does not match qubit count");
    if (n_s < 0) n_s = m / 2;
    if (n_s < 1 || n_s > m)
        throw DimError("raw_decode: bad S/R split");
    CVec amps(total);
    for (std::int64_t j = 0; j < total; ++j)
        amps(j) = Complex(params.values[2 * j], params.values[2 * j + 1]);
    double norm = amps.norm();
    if (norm < 1e-12)
        throw DegenerateState("raw_decode: zero amplitude vector");
    amps /= norm;
    return PureState(1 << n_s, 1 << (m - n_s), std::move(amps));
}

// Sum of rank terms c_t |s_t>|r_t> with a rank-dimensional reference side.
// A rank below the S dimension restricts the search space; that is the point.
inline PureState schmidt_decode(const SchmidtParams& params, int n) {
    int k = params.rank;
    if (k < 1)
        throw ShapeError("schmidt_decode: rank must be positive");
    int dim_s = 1 << n;
    if (static_cast<int>(params.coefficients.size()) != k ||
        static_cast<int>(params.s_vectors.size()) != k ||
        static_cast<int>(params.r_vectors.size()) != k)
        throw ShapeError("schmidt_decode: term count mismatch");
    for (int t = 0; t < k; ++t)
        if (params.s_vectors[t].size() != dim_s || params.r_vectors[t].size() != k)
            throw ShapeError("schmidt_decode: component vector has wrong dimension");

    CVec amps = CVec::Zero(static_cast<Eigen::Index>(dim_s) * k);
    for (int t = 0; t < k; ++t)
        for (int s = 0; s < dim_s; ++s)
            for (int r = 0; r < k; ++r)
                amps(static_cast<Eigen::Index>(s) * k + r) +=
                    params.coefficients[t] * params.s_vectors[t](s) * params.r_vectors[t](r);
    double norm = amps.norm();
    if (norm < 1e-12)
        throw DegenerateState("schmidt_decode: zero amplitude vector");
    amps /= norm;
    return PureState(dim_s, k, std::move(amps));
}

// Chromosome layout. NN: W1, b1 (as a 1 x w row), W2, b2, ... Raw: a single
// 2 x 2^m matrix, real parts on row 0, imaginary parts on row 1. Schmidt:
// coefficients as 1 x k, then the s vectors, then the r vectors, each complex
// vector as a 2 x dim real matrix in the same row convention.
inline Chromosome chromosome_view(const NNParams& p) {
    detail::check_nn_shapes(p);
    Chromosome ch;
    for (size_t l = 0; l + 1 < p.layer_sizes.size(); ++l) {
        ch.push_back(p.weights[l]);
        ch.push_back(p.biases[l].transpose());
    }
    return ch;
}

inline Chromosome chromosome_view(const RawParams& p) {
    Eigen::Index half = static_cast<Eigen::Index>(p.values.size()) / 2;
    Eigen::MatrixXd m(2, half);
    for (Eigen::Index j = 0; j < half; ++j) {
        m(0, j) = p.values[2 * j];
        m(1, j) = p.values[2 * j + 1];
    }
    return {m};
}

inline Chromosome chromosome_view(const SchmidtParams& p) {
    Chromosome ch;
    Eigen::MatrixXd coeff(1, p.rank);
    for (int t = 0; t < p.rank; ++t) coeff(0, t) = p.coefficients[t];
    ch.push_back(coeff);
    auto split = [](const CVec& v) {
        Eigen::MatrixXd m(2, v.size());
        m.row(0) = v.real().transpose();
        m.row(1) = v.imag().transpose();
        return m;
    };
    for (const CVec& v : p.s_vectors) ch.push_back(split(v));
    for (const CVec& v : p.r_vectors) ch.push_back(split(v));
    return ch;
}

namespace detail {

inline void check_entry_shape(const Chromosome& ch, size_t idx, Eigen::Index rows,
                              Eigen::Index cols) {
    if (idx >= ch.size() || ch[idx].rows() != rows || ch[idx].cols() != cols)
        throw ShapeError("chromosome_restore: entry shape mismatch");
}

} // namespace detail

inline NNParams chromosome_restore(const Chromosome& ch, const NNParams& tmpl) {
    detail::check_nn_shapes(tmpl);
    size_t transitions = tmpl.layer_sizes.size() - 1;
    if (ch.size() != 2 * transitions)
        throw ShapeError("chromosome_restore: entry count mismatch");
    NNParams out = tmpl;
    for (size_t l = 0; l < transitions; ++l) {
        detail::check_entry_shape(ch, 2 * l, tmpl.layer_sizes[l + 1], tmpl.layer_sizes[l]);
        detail::check_entry_shape(ch, 2 * l + 1, 1, tmpl.layer_sizes[l + 1]);
        out.weights[l] = ch[2 * l];
        out.biases[l] = ch[2 * l + 1].row(0).transpose();
    }
    return out;
}

inline RawParams chromosome_restore(const Chromosome& ch, const RawParams& tmpl) {
    Eigen::Index half = static_cast<Eigen::Index>(tmpl.values.size()) / 2;
    if (ch.size() != 1)
        throw ShapeError("chromosome_restore: expected a single entry");
    detail::check_entry_shape(ch, 0, 2, half);
    RawParams out = tmpl;
    for (Eigen::Index j = 0; j < half; ++j) {
        out.values[2 * j] = ch[0](0, j);
        out.values[2 * j + 1] = ch[0](1, j);
    }
    return out;
}

inline SchmidtParams chromosome_restore(const Chromosome& ch, const SchmidtParams& tmpl) {
    int k = tmpl.rank;
    if (ch.size() != 1 + 2 * static_cast<size_t>(k))
        throw ShapeError("chromosome_restore: entry count mismatch");
    detail::check_entry_shape(ch, 0, 1, k);
    SchmidtParams out = tmpl;
    for (int t = 0; t < k; ++t) out.coefficients[t] = ch[0](0, t);
    auto merge = [](const Eigen::MatrixXd& m) {
        CVec v(m.cols());
        for (Eigen::Index j = 0; j < m.cols(); ++j) v(j) = Complex(m(0, j), m(1, j));
        return v;
    };
    Eigen::Index dim_s = tmpl.s_vectors[0].size();
    for (int t = 0; t < k; ++t) {
        detail::check_entry_shape(ch, 1 + t, 2, dim_s);
        out.s_vectors[t] = merge(ch[1 + t]);
    }
    for (int t = 0; t < k; ++t) {
        detail::check_entry_shape(ch, 1 + k + t, 2, k);
        out.r_vectors[t] = merge(ch[1 + k + t]);
    }
    return out;
}

// Tagged parameter bundle plus the plumbing the optimizers use.
using AnsatzParams = std::variant<NNParams, RawParams, SchmidtParams>;

struct AnsatzSpec {
    enum class Kind { NN, Raw, Schmidt } kind = Kind::NN;
    std::vector<int> layer_sizes;    // NN only
    int schmidt_rank = 2;            // Schmidt only
    BitEncoding encoding = BitEncoding::ZeroOne;
};

// Accepted forms: "nn:4x4x4x4x4x2" (input, hiddens..., output), "raw",
// "schmidt" or "schmidt:k=2".
inline AnsatzSpec parse_ansatz(const std::string& text) {
    AnsatzSpec spec;
    if (text == "raw") {
        spec.kind = AnsatzSpec::Kind::Raw;
        return spec;
    }
    if (text == "schmidt" || text.rfind("schmidt:k=", 0) == 0) {
        spec.kind = AnsatzSpec::Kind::Schmidt;
        if (text != "schmidt") {
            try {
                spec.schmidt_rank = std::stoi(text.substr(10));
            } catch (const std::exception&) {
                throw Unsupported("unrecognized ansatz: " + text);
            }
            if (spec.schmidt_rank < 1)
                throw Unsupported("schmidt rank must be positive");
        }
        return spec;
    }
    if (text.rfind("nn:", 0) == 0) {
        spec.kind = AnsatzSpec::Kind::NN;
        std::string rest = text.substr(3);
        size_t pos = 0;
        try {
            while (pos < rest.size()) {
                size_t next = rest.find('x', pos);
                std::string tok =
                    next == std::string::npos ? rest.substr(pos) : rest.substr(pos, next - pos);
                spec.layer_sizes.push_back(std::stoi(tok));
                pos = next == std::string::npos ? rest.size() : next + 1;
            }
        } catch (const std::exception&) {
            throw Unsupported("unrecognized ansatz: " + text);
        }
        if (spec.layer_sizes.size() < 2 || spec.layer_sizes.back() != 2)
            throw Unsupported("nn ansatz needs at least input and a final layer of 2");
        for (int s : spec.layer_sizes)
            if (s < 1) throw Unsupported("nn layer sizes must be positive");
        return spec;
    }
    throw Unsupported("unrecognized ansatz: " + text);
}

inline std::string ansatz_name(const AnsatzSpec& spec) {
    switch (spec.kind) {
        case AnsatzSpec::Kind::Raw: return "raw";
        case AnsatzSpec::Kind::Schmidt:
            return "schmidt:k=" + std::to_string(spec.schmidt_rank);
        default: {
            std::string s = "nn:";
            for (size_t i = 0; i < spec.layer_sizes.size(); ++i)
                s += (i ? "x" : "") + std::to_string(spec.layer_sizes[i]);
            return s;
        }
    }
}

// Fresh parameters for an n-shot problem. Weights and biases are standard
// normal; raw and Schmidt components are uniform on [-1, 1]. Draw order is
// fixed (weights row-major then bias, per transition; re before im) so runs
// are reproducible from the seed.
inline AnsatzParams ansatz_init(const AnsatzSpec& spec, int n, std::mt19937_64& rng) {
    switch (spec.kind) {
        case AnsatzSpec::Kind::Raw: {
            std::uniform_real_distribution<double> u(-1.0, 1.0);
            RawParams p;
            p.values.resize(size_t(2) << (2 * n));
            for (double& v : p.values) v = u(rng);
            return p;
        }
        case AnsatzSpec::Kind::Schmidt: {
            std::uniform_real_distribution<double> u(-1.0, 1.0);
            SchmidtParams p;
            p.rank = spec.schmidt_rank;
            p.coefficients.resize(p.rank);
            for (double& c : p.coefficients) c = u(rng);
            auto draw_vec = [&](Eigen::Index dim) {
                CVec v(dim);
                for (Eigen::Index i = 0; i < dim; ++i) {
                    double re = u(rng);
                    double im = u(rng);
                    v(i) = Complex(re, im);
                }
                return v;
            };
            for (int t = 0; t < p.rank; ++t) p.s_vectors.push_back(draw_vec(1 << n));
            for (int t = 0; t < p.rank; ++t) p.r_vectors.push_back(draw_vec(p.rank));
            return p;
        }
        default: {
            if (spec.layer_sizes.empty() || spec.layer_sizes.front() != 2 * n)
                throw ShapeError("ansatz_init: nn input layer must equal the qubit count");
            std::normal_distribution<double> g(0.0, 1.0);
            NNParams p;
            p.layer_sizes = spec.layer_sizes;
            p.encoding = spec.encoding;
            for (size_t l = 0; l + 1 < p.layer_sizes.size(); ++l) {
                Eigen::MatrixXd w(p.layer_sizes[l + 1], p.layer_sizes[l]);
                for (Eigen::Index i = 0; i < w.rows(); ++i)
                    for (Eigen::Index j = 0; j < w.cols(); ++j) w(i, j) = g(rng);
                Eigen::VectorXd b(p.layer_sizes[l + 1]);
                for (Eigen::Index i = 0; i < b.size(); ++i) b(i) = g(rng);
                p.weights.push_back(std::move(w));
                p.biases.push_back(std::move(b));
            }
            return p;
        }
    }
}

inline PureState ansatz_decode(const AnsatzParams& params, int n) {
    return std::visit(
        [n](const auto& p) -> PureState {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, NNParams>)
                return nn_decode(p, p.layer_sizes.front(), n);
            else if constexpr (std::is_same_v<T, RawParams>) {
                int m = 0;
                while ((std::int64_t(2) << m) < static_cast<std::int64_t>(p.values.size()))
                    ++m;
                return raw_decode(p, m, n);
            } else
                return schmidt_decode(p, n);
        },
        params);
}

inline Chromosome chromosome_view(const AnsatzParams& params) {
    return std::visit([](const auto& p) { return chromosome_view(p); }, params);
}

inline AnsatzParams chromosome_restore(const Chromosome& ch, const AnsatzParams& tmpl) {
    return std::visit(
        [&ch](const auto& t) -> AnsatzParams { return chromosome_restore(ch, t); }, tmpl);
}

} // namespace paulicap
