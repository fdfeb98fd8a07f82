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

#ifndef QWCP_STATEVEC_H
#define QWCP_STATEVEC_H

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <random>
#include <span>
#include <vector>

#include "qwcp/gates.h"
#include "qwcp/layout.h"
#include "qwcp/operators.h"

namespace qwcp {

inline constexpr int kMaxTotalBits = 26;
inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kSupportTolerance = 1e-9;
inline constexpr double kFidelityTolerance = 1e-9;

/// Dense amplitude vector over the joint walker and data space.
class StateVector {
   public:
    /// The all-zero basis state |0...0>.
    explicit StateVector(RegisterLayout layout);

    const RegisterLayout &layout() const {
        return layout_;
    }
    uint64_t size() const {
        return amplitudes_.size();
    }
    std::span<const Amplitude> amplitudes() const {
        return amplitudes_;
    }
    std::span<Amplitude> amplitudes() {
        return amplitudes_;
    }
    Amplitude operator[](uint64_t index) const {
        return amplitudes_[index];
    }
    Amplitude &operator[](uint64_t index) {
        return amplitudes_[index];
    }

    double norm() const;
    void normalize();

   private:
    RegisterLayout layout_;
    std::vector<Amplitude> amplitudes_;
};

struct WalkerPlacement {
    VertexId vertex = 0;
    Coin coin = 0;
    friend bool operator==(const WalkerPlacement &, const WalkerPlacement &) = default;
};

using QubitState = std::array<Amplitude, 2>;

/// Product state (x)_j |v_j, c_j> (x) data. Unlisted data qubits start in |0>.
StateVector init_state(
    const RegisterLayout &layout,
    const std::vector<WalkerPlacement> &walkers,
    const std::map<int, QubitState> &data = {});

/// Walkers as a product of basis states, data plane given as a full
/// normalized vector over the data qubits (data_order, first most significant).
StateVector init_state_entangled(
    const RegisterLayout &layout, const std::vector<WalkerPlacement> &walkers, std::span<const Amplitude> data);

/// Checks that op refers only to walkers, vertices, ports and data qubits
/// of this layout, that blocks are unitary, and that data qubits touched by
/// a vertex-local operator live at that vertex. Throws PreconditionError.
void validate_operator(const RegisterLayout &layout, const OperatorSpec &op);

/// Applies the unitary denoted by op in place. MeasureAndCorrectOp is not
/// accepted here; see run_schedule.
void apply_operator(StateVector &state, const OperatorSpec &op);

/// Single- or multi-qubit unitary on data qubits (targets[0] most significant),
/// unconditionally.
void apply_data_unitary(StateVector &state, const std::vector<int> &targets, const Matrix &unitary);

enum class Basis { Z, X };

struct MeasurementRecord {
    std::vector<int> qubits;
    std::vector<Basis> bases;
    std::vector<int> outcomes;  // 0 = |0>/|+>, 1 = |1>/|->
    double probability = 1.0;
};

struct MeasureMode {
    enum class Kind { Sample, Branch };
    Kind kind = Kind::Branch;
    uint64_t seed = 0;

    static MeasureMode sample(uint64_t seed) {
        return {Kind::Sample, seed};
    }
    static MeasureMode branch() {
        return {Kind::Branch, 0};
    }
};

struct MeasuredBranch {
    MeasurementRecord record;
    StateVector state;
};

/// Projective measurement of the given qubits. Branch mode returns every
/// outcome with non-zero probability (ascending outcome order); sample mode
/// returns one outcome drawn with the Born rule from a generator seeded by
/// mode.seed. Post-measurement states are renormalized and left in the
/// measured eigenstate.
std::vector<MeasuredBranch> measure(
    const StateVector &state, const std::vector<int> &qubits, const std::vector<Basis> &bases, MeasureMode mode);

/// Same as above, drawing sample-mode outcomes from an existing generator.
std::vector<MeasuredBranch> measure(
    const StateVector &state, const std::vector<int> &qubits, const std::vector<Basis> &bases, MeasureMode::Kind kind,
    std::mt19937_64 &rng);

/// |<a|b>|^2.
double fidelity(const StateVector &a, const StateVector &b);

/// Reduced density matrix of the listed qubits (first listed most significant).
Matrix reduced_density_matrix(const StateVector &state, const std::vector<int> &qubits);

/// Tr(rho_sub^2) of the reduced state of the listed qubits.
double purity_across_cut(const StateVector &state, const std::vector<int> &qubits);

/// Marginal probability of walker j per vertex id (size 2^vertex_bits).
std::vector<double> walker_vertex_marginal(const StateVector &state, int walker);

/// Vertices whose marginal probability for walker j exceeds tol, ascending.
std::vector<VertexId> walker_vertex_support(
    const StateVector &state, int walker, double tol = kSupportTolerance);

/// Total probability on encodings that are not (vertex, valid port) pairs.
double invalid_amplitude_weight(const StateVector &state);

/// Principal eigenvector of the data-plane reduced state, as a state on the
/// data-only layout. Meaningful when the walkers are separable from the data.
StateVector extract_data_state(const StateVector &state);

/// `bits re im` per amplitude with |a| >= 1e-12, ascending index.
void dump_state(const StateVector &state, std::ostream &out);

}  // namespace qwcp

#endif
