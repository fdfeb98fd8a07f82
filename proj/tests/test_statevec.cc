// Copyright 2026 The QWCP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwcp/statevec.h"

#include <cmath>
#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "qwcp/errors.h"
#include "qwcp/walkops.h"
#include "testing.h"

using namespace qwcp;
using qwcp::testing::make_graph;

namespace {

RegisterLayout data_layout(int n) {
    std::vector<DataQubit> order;
    for (int i = 0; i < n; ++i) {
        order.push_back({0, "q" + std::to_string(i)});
    }
    return RegisterLayout::data_only(order);
}

StateVector from_amplitudes(const RegisterLayout &layout, std::vector<Amplitude> amps) {
    return init_state_entangled(layout, {}, amps);
}

const double kHalf = std::sqrt(0.5);

}  // namespace

TEST(statevec, starts_in_zero_state) {
    StateVector s(data_layout(3));
    EXPECT_EQ(s.size(), 8u);
    EXPECT_EQ(s[0], Amplitude(1));
    EXPECT_DOUBLE_EQ(s.norm(), 1.0);
}

TEST(statevec, size_cap) {
    EXPECT_NO_THROW(StateVector(data_layout(kMaxTotalBits - 6)));
    EXPECT_THROW(StateVector(data_layout(kMaxTotalBits + 1)), PreconditionError);
}

TEST(statevec, init_state_product) {
    auto g = make_graph({"A", "B"}, {{"A", "B"}}, {{"A", {"a"}}, {"B", {"b"}}});
    RegisterLayout layout(g, 1);
    auto s = init_state(layout, {{1, 1}}, {{0, {kHalf, kHalf}}});
    // walker |B, 1>, a = |+>, b = |0>.
    uint64_t w = layout.walker_bits(0, 1, 1);
    EXPECT_NEAR(std::abs(s[w] - kHalf), 0, 1e-15);
    EXPECT_NEAR(std::abs(s[w | layout.data_mask(0)] - kHalf), 0, 1e-15);
    EXPECT_NEAR(s.norm(), 1, kNormTolerance);

    EXPECT_THROW(init_state(layout, {{0, 2}}), PreconditionError);
    EXPECT_THROW(init_state(layout, {}), PreconditionError);
    EXPECT_THROW(init_state(layout, {{0, 0}}, {{0, {1, 1}}}), PreconditionError);
}

TEST(statevec, walker_support_examples) {
    auto g = make_graph({"A", "B"}, {{"A", "B"}}, {{"A", {"a"}}, {"B", {"b"}}});
    RegisterLayout layout(g, 1);
    auto s = init_state(layout, {{0, 0}}, {{0, {kHalf, kHalf}}});
    EXPECT_EQ(walker_vertex_support(s, 0), std::vector<VertexId>{0});

    // a|A,0> + b|A,1> after a data-controlled port swap stays at A.
    apply_operator(s, make_data_controlled_coin(layout, 0, {0}, {true}, CoinSwap{0, 1}, 0));
    EXPECT_EQ(walker_vertex_support(s, 0), std::vector<VertexId>{0});
    // After the shift the walker is spread over A and B.
    apply_operator(s, make_flipflop_shift(layout, {0}));
    EXPECT_EQ(walker_vertex_support(s, 0), (std::vector<VertexId>{0, 1}));
    auto marginal = walker_vertex_marginal(s, 0);
    EXPECT_NEAR(marginal[0], 0.5, 1e-12);
    EXPECT_NEAR(marginal[1], 0.5, 1e-12);
    EXPECT_EQ(invalid_amplitude_weight(s), 0.0);
}

TEST(statevec, invalid_amplitude_weight_counts_bad_components) {
    auto g = make_graph({"A", "B", "C"}, {{"A", "B"}});
    RegisterLayout layout(g, 1);
    StateVector s(layout);
    s[0] = 0;
    s[layout.walker_bits(0, 2, 1)] = 1;  // C has no port 1
    EXPECT_NEAR(invalid_amplitude_weight(s), 1.0, 1e-15);
}

TEST(statevec, bell_pair_x_measurement_gives_two_branches) {
    auto layout = data_layout(2);
    auto bell = from_amplitudes(layout, {kHalf, 0, 0, kHalf});
    auto branches = measure(bell, {0, 1}, {Basis::X, Basis::X}, MeasureMode::branch());
    ASSERT_EQ(branches.size(), 2u);
    EXPECT_EQ(branches[0].record.outcomes, (std::vector<int>{0, 0}));
    EXPECT_EQ(branches[1].record.outcomes, (std::vector<int>{1, 1}));
    for (const auto &b : branches) {
        EXPECT_NEAR(b.record.probability, 0.5, 1e-12);
        EXPECT_NEAR(b.state.norm(), 1, kNormTolerance);
    }
    auto pp = from_amplitudes(layout, {0.5, 0.5, 0.5, 0.5});
    EXPECT_NEAR(fidelity(branches[0].state, pp), 1, 1e-12);
}

TEST(statevec, ghz_partial_x_measurement) {
    auto layout = data_layout(3);
    std::vector<Amplitude> ghz(8, 0);
    ghz[0] = ghz[7] = kHalf;
    auto s = from_amplitudes(layout, ghz);
    auto branches = measure(s, {0, 1}, {Basis::X, Basis::X}, MeasureMode::branch());
    ASSERT_EQ(branches.size(), 4u);
    for (const auto &b : branches) {
        EXPECT_NEAR(b.record.probability, 0.25, 1e-12);
        bool even = (b.record.outcomes[0] ^ b.record.outcomes[1]) == 0;
        Matrix rho = reduced_density_matrix(b.state, {2});
        // |+> has <0|rho|1> = 1/2, |-> has -1/2.
        EXPECT_NEAR(rho(0, 1).real(), even ? 0.5 : -0.5, 1e-12);
    }
}

TEST(statevec, z_measurement_probabilities) {
    std::mt19937_64 rng(3);
    auto layout = data_layout(4);
    auto amps = qwcp::testing::random_vector(16, rng);
    auto s = from_amplitudes(layout, amps);
    auto branches = measure(s, {1, 3}, {Basis::Z, Basis::Z}, MeasureMode::branch());
    double total = 0;
    for (const auto &b : branches) {
        double expect = 0;
        for (uint64_t i = 0; i < 16; ++i) {
            int q1 = (i >> 2) & 1;
            int q3 = i & 1;
            if (q1 == b.record.outcomes[0] && q3 == b.record.outcomes[1]) {
                expect += std::norm(amps[i]);
            }
        }
        EXPECT_NEAR(b.record.probability, expect, 1e-12);
        total += b.record.probability;
    }
    EXPECT_NEAR(total, 1, 1e-10);
}

TEST(statevec, sample_mode_is_deterministic) {
    std::mt19937_64 rng(8);
    auto layout = data_layout(5);
    auto s = from_amplitudes(layout, qwcp::testing::random_vector(32, rng));
    for (uint64_t seed : {0u, 1u, 42u}) {
        auto a = measure(s, {0, 2, 4}, {Basis::X, Basis::Z, Basis::X}, MeasureMode::sample(seed));
        auto b = measure(s, {0, 2, 4}, {Basis::X, Basis::Z, Basis::X}, MeasureMode::sample(seed));
        ASSERT_EQ(a.size(), 1u);
        ASSERT_EQ(b.size(), 1u);
        EXPECT_EQ(a[0].record.outcomes, b[0].record.outcomes);
        for (uint64_t i = 0; i < a[0].state.size(); ++i) {
            EXPECT_EQ(a[0].state[i], b[0].state[i]);
        }
    }
}

TEST(statevec, sample_frequencies_follow_probabilities) {
    auto layout = data_layout(1);
    auto s = from_amplitudes(layout, {std::sqrt(0.2), std::sqrt(0.8)});
    std::mt19937_64 rng(99);
    int ones = 0;
    const int n = 4000;
    for (int i = 0; i < n; ++i) {
        ones += measure(s, {0}, {Basis::Z}, MeasureMode::Kind::Sample, rng)[0].record.outcomes[0];
    }
    EXPECT_NEAR(ones / double(n), 0.8, 0.03);
}

TEST(statevec, measure_rejects_bad_requests) {
    StateVector s(data_layout(2));
    EXPECT_THROW(measure(s, {}, {}, MeasureMode::branch()), PreconditionError);
    EXPECT_THROW(measure(s, {0, 0}, {Basis::Z, Basis::Z}, MeasureMode::branch()), PreconditionError);
    EXPECT_THROW(measure(s, {0}, {Basis::Z, Basis::Z}, MeasureMode::branch()), PreconditionError);
}

TEST(statevec, purity_of_product_and_bell_states) {
    std::mt19937_64 rng(21);
    auto layout = data_layout(4);
    for (int trial = 0; trial < 10; ++trial) {
        auto left = qwcp::testing::random_vector(4, rng);
        auto right = qwcp::testing::random_vector(4, rng);
        std::vector<Amplitude> prod(16);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                prod[i * 4 + j] = left[i] * right[j];
            }
        }
        auto s = from_amplitudes(layout, prod);
        EXPECT_GE(purity_across_cut(s, {0, 1}), 1 - 1e-12);
        EXPECT_GE(purity_across_cut(s, {2, 3}), 1 - 1e-12);
    }
    auto bell = from_amplitudes(data_layout(2), {kHalf, 0, 0, kHalf});
    EXPECT_NEAR(purity_across_cut(bell, {0}), 0.5, 1e-12);
    EXPECT_THROW(purity_across_cut(bell, {0, 1}), PreconditionError);
}

TEST(statevec, fidelity_ignores_global_phase) {
    std::mt19937_64 rng(4);
    auto layout = data_layout(3);
    auto amps = qwcp::testing::random_vector(8, rng);
    auto a = from_amplitudes(layout, amps);
    for (auto &x : amps) {
        x *= std::polar(1.0, 0.7);
    }
    auto b = from_amplitudes(layout, amps);
    EXPECT_NEAR(fidelity(a, b), 1, 1e-12);
    auto zero = from_amplitudes(layout, {1, 0, 0, 0, 0, 0, 0, 0});
    auto one = from_amplitudes(layout, {0, 1, 0, 0, 0, 0, 0, 0});
    EXPECT_NEAR(fidelity(zero, one), 0, 1e-15);
    EXPECT_THROW(fidelity(a, StateVector(data_layout(2))), PreconditionError);
}

TEST(statevec, apply_data_unitary_matches_dense_gate) {
    std::mt19937_64 rng(17);
    auto layout = data_layout(4);
    for (int trial = 0; trial < 10; ++trial) {
        auto in = from_amplitudes(layout, qwcp::testing::random_vector(16, rng));
        std::vector<int> targets = trial % 2 ? std::vector<int>{3, 1} : std::vector<int>{2};
        Matrix u = qwcp::testing::random_unitary(1 << targets.size(), rng);
        auto out = in;
        apply_data_unitary(out, targets, u);
        Eigen::VectorXcd v(16);
        for (int i = 0; i < 16; ++i) {
            v[i] = in[i];
        }
        Eigen::VectorXcd w = qwcp::testing::dense_gate(4, OracleGate{{}, targets, u}) * v;
        for (int i = 0; i < 16; ++i) {
            EXPECT_NEAR(std::abs(out[i] - w[i]), 0, 1e-12);
        }
    }
    StateVector s(layout);
    EXPECT_THROW(apply_data_unitary(s, {0, 1}, named_gate("X")), PreconditionError);
}

TEST(statevec, extract_data_state_from_product) {
    auto g = make_graph({"A", "B"}, {{"A", "B"}}, {{"A", {"a"}}, {"B", {"b"}}});
    RegisterLayout layout(g, 1);
    std::mt19937_64 rng(6);
    auto data = qwcp::testing::random_vector(4, rng);
    auto s = init_state_entangled(layout, {{1, 1}}, data);
    auto d = extract_data_state(s);
    EXPECT_EQ(d.layout().total_bits(), 2);
    EXPECT_NEAR(fidelity(d, init_state_entangled(d.layout(), {}, data)), 1, 1e-12);
}

TEST(statevec, dump_format) {
    auto s = from_amplitudes(data_layout(2), {0, kHalf, 0, Amplitude(0, -kHalf)});
    std::ostringstream out;
    dump_state(s, out);
    std::string text = out.str();
    EXPECT_NE(text.find("01  0.70710678118654757  0\n"), std::string::npos) << text;
    EXPECT_NE(text.find("11  0  -0.70710678118654757\n"), std::string::npos) << text;
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2);
}
