// Copyright 2026 The qsync Authors
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

#ifndef QSYNC_STATEVECTOR_H
#define QSYNC_STATEVECTOR_H

#include <complex>
#include <span>
#include <vector>

#include "qsync/frame_sim.h"

namespace qsync {

constexpr size_t MAX_ORACLE_QUBITS = 20;

/// Dense state on up to 20 qubits. Qubit j is bit j of the basis index, matching the
/// coefficient-of-x^j convention used for codewords.
class StateVector {
   public:
    using Amplitude = std::complex<double>;

    /// |0...0>. Throws BudgetExceeded above MAX_ORACLE_QUBITS.
    explicit StateVector(size_t num_qubits);
    static StateVector basis_state(size_t num_qubits, const BitVec &bits);

    size_t num_qubits() const {
        return num_qubits_;
    }
    std::span<const Amplitude> amplitudes() const {
        return amps_;
    }
    Amplitude &operator[](uint64_t index) {
        return amps_[index];
    }
    const Amplitude &operator[](uint64_t index) const {
        return amps_[index];
    }

    double norm() const;
    /// <this|other>.
    Amplitude inner(const StateVector &other) const;

    void apply_x(size_t q);
    void apply_z(size_t q);
    void apply_cnot(size_t control, size_t target);
    /// X^bit_flips Z^phase_flips, i.e. signs (-1)^(basis . e_p) and then basis xor e_b.
    void apply_pauli(const BitVec &bit_flips, const BitVec &phase_flips);

   private:
    size_t num_qubits_;
    std::vector<Amplitude> amps_;
};

uint64_t basis_index(const BitVec &bits);

/// Uniform superposition over C^perp + rep + offset, amplitude 2^(-(n - k)/2).
StateVector coset_state(const CyclicCode &c, const BitVec &rep, const BitVec &offset);

/// Returns a copy with X^e_b Z^e_p applied.
StateVector apply_pauli(StateVector state, const BitVec &bit_flips, const BitVec &phase_flips);

/// CNOT network copying core qubit (a_l + n - a_l + j) onto ancilla j and core qubit
/// (a_l + j) onto ancilla (a_l + n + j). Self-inverse.
void apply_extension_cnots(StateVector &state, size_t n, size_t a_l, size_t a_r);

/// Places an n-qubit state at positions [a_l, a_l + n) beside fresh |0> ancillas, then copies.
StateVector extend(const StateVector &core, size_t a_l, size_t a_r);
/// Undoes the copies and projects the ancillas onto |0>; the result is unnormalized when
/// the ancillas were not returned to |0>.
StateVector unextend(const StateVector &extended, size_t n, size_t a_l, size_t a_r);

/// Deterministic generic logical state for the oracle: amplitudes with distinct magnitudes
/// and phases so that any nontrivial logical Pauli lowers the fidelity.
std::vector<StateVector::Amplitude> oracle_logical_amplitudes(size_t k_logical, uint64_t logical_index);

/// sum_i alpha_i |C^perp + r_i (+ g_D when translated)>.
StateVector encoded_state(const QsyncCode &code, std::span<const StateVector::Amplitude> logical, bool translated);

/// Replays the channel and the corrections a report prescribes on the dense state, undoes the
/// extension and the g_D translation, and returns |<ideal|final>| against the untranslated
/// encoded state with ancillas in |0>.
///
/// Returns 0 when the report has no slip estimate or a wrong one: the register the decoder
/// un-extends is then not this block, so nothing of the block is recovered.
double oracle_fidelity(const QsyncCode &code, uint64_t logical_index, const ChannelEffect &effect, const DecodeReport &report);

struct OracleRun {
    DecodeReport report;
    double fidelity;
};

OracleRun oracle_pipeline(const QsyncCode &code, uint64_t logical_index, const ChannelEffect &effect, uint64_t branch_seed);

}  // namespace qsync

#endif
