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

#include "qsync/statevector.h"

#include <bit>
#include <cmath>

#include "qsync/errors.h"

using namespace qsync;

StateVector::StateVector(size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits > MAX_ORACLE_QUBITS) {
        throw BudgetExceeded("state vector on " + std::to_string(num_qubits) + " qubits exceeds the " +
                                 std::to_string(MAX_ORACLE_QUBITS) + "-qubit budget",
                             std::ldexp(1.0, static_cast<int>(num_qubits)));
    }
    amps_.assign(size_t{1} << num_qubits, 0);
    amps_[0] = 1;
}

StateVector StateVector::basis_state(size_t num_qubits, const BitVec &bits) {
    if (bits.size() != num_qubits) {
        throw InvalidInput("basis state length mismatch");
    }
    StateVector s(num_qubits);
    s.amps_[0] = 0;
    s.amps_[basis_index(bits)] = 1;
    return s;
}

uint64_t qsync::basis_index(const BitVec &bits) {
    if (bits.size() > 64) {
        throw InvalidInput("basis index needs at most 64 qubits");
    }
    return bits.words().empty() ? 0 : bits.words()[0];
}

double StateVector::norm() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

StateVector::Amplitude StateVector::inner(const StateVector &other) const {
    if (other.num_qubits_ != num_qubits_) {
        throw InvalidInput("inner product between states of different sizes");
    }
    Amplitude total = 0;
    for (size_t i = 0; i < amps_.size(); i++) {
        total += std::conj(amps_[i]) * other.amps_[i];
    }
    return total;
}

void StateVector::apply_x(size_t q) {
    uint64_t bit = uint64_t{1} << q;
    for (uint64_t i = 0; i < amps_.size(); i++) {
        if (!(i & bit)) {
            std::swap(amps_[i], amps_[i | bit]);
        }
    }
}

void StateVector::apply_z(size_t q) {
    uint64_t bit = uint64_t{1} << q;
    for (uint64_t i = 0; i < amps_.size(); i++) {
        if (i & bit) {
            amps_[i] = -amps_[i];
        }
    }
}

void StateVector::apply_cnot(size_t control, size_t target) {
    uint64_t c = uint64_t{1} << control;
    uint64_t t = uint64_t{1} << target;
    for (uint64_t i = 0; i < amps_.size(); i++) {
        if ((i & c) && !(i & t)) {
            std::swap(amps_[i], amps_[i | t]);
        }
    }
}

void StateVector::apply_pauli(const BitVec &bit_flips, const BitVec &phase_flips) {
    if (bit_flips.size() != num_qubits_ || phase_flips.size() != num_qubits_) {
        throw InvalidInput("Pauli length does not match the qubit count");
    }
    uint64_t x_mask = basis_index(bit_flips);
    uint64_t z_mask = basis_index(phase_flips);
    std::vector<Amplitude> out(amps_.size());
    for (uint64_t i = 0; i < amps_.size(); i++) {
        Amplitude a = amps_[i];
        if (std::popcount(i & z_mask) & 1) {
            a = -a;
        }
        out[i ^ x_mask] = a;
    }
    amps_ = std::move(out);
}

StateVector qsync::coset_state(const CyclicCode &c, const BitVec &rep, const BitVec &offset) {
    size_t n = c.n();
    if (rep.size() != n || offset.size() != n) {
        throw InvalidInput("coset representative length mismatch");
    }
    StateVector state(n);
    state[0] = 0;
    auto rows = dual(c).generator_rows();
    uint64_t count = uint64_t{1} << rows.size();
    double amp = 1.0 / std::sqrt(static_cast<double>(count));
    uint64_t base = basis_index(rep ^ offset);
    uint64_t word = 0;
    for (uint64_t i = 0; i < count; i++) {
        if (i > 0) {
            word ^= basis_index(rows[std::countr_zero(i)]);
        }
        state[word ^ base] += amp;
    }
    return state;
}

StateVector qsync::apply_pauli(StateVector state, const BitVec &bit_flips, const BitVec &phase_flips) {
    state.apply_pauli(bit_flips, phase_flips);
    return state;
}

void qsync::apply_extension_cnots(StateVector &state, size_t n, size_t a_l, size_t a_r) {
    if (state.num_qubits() != n + a_l + a_r) {
        throw InvalidInput("extension CNOTs need n + a_l + a_r qubits");
    }
    for (size_t j = 0; j < a_l; j++) {
        state.apply_cnot(a_l + (n - a_l) + j, j);
    }
    for (size_t j = 0; j < a_r; j++) {
        state.apply_cnot(a_l + j, a_l + n + j);
    }
}

StateVector qsync::extend(const StateVector &core, size_t a_l, size_t a_r) {
    size_t n = core.num_qubits();
    StateVector out(n + a_l + a_r);
    out[0] = 0;
    for (uint64_t i = 0; i < core.amplitudes().size(); i++) {
        out[i << a_l] = core[i];
    }
    apply_extension_cnots(out, n, a_l, a_r);
    return out;
}

StateVector qsync::unextend(const StateVector &extended, size_t n, size_t a_l, size_t a_r) {
    StateVector work = extended;
    apply_extension_cnots(work, n, a_l, a_r);
    StateVector out(n);
    out[0] = 0;
    uint64_t core_mask = ((uint64_t{1} << n) - 1) << a_l;
    for (uint64_t i = 0; i < work.amplitudes().size(); i++) {
        if ((i & ~core_mask) == 0) {
            out[i >> a_l] = work[i];
        }
    }
    return out;
}

std::vector<StateVector::Amplitude> qsync::oracle_logical_amplitudes(size_t k_logical, uint64_t logical_index) {
    if (k_logical > 16) {
        throw BudgetExceeded("oracle logical state on " + std::to_string(k_logical) + " logical qubits", std::ldexp(1.0, static_cast<int>(k_logical)));
    }
    uint64_t count = uint64_t{1} << k_logical;
    std::vector<StateVector::Amplitude> amps(count);
    double total = 0;
    for (uint64_t j = 0; j < count; j++) {
        double magnitude = 1.0 + static_cast<double>((j + logical_index) % count);
        amps[j] = std::polar(magnitude, 0.9 * static_cast<double>(j) + 0.37 * static_cast<double>(j * j));
        total += magnitude * magnitude;
    }
    for (auto &a : amps) {
        a /= std::sqrt(total);
    }
    return amps;
}

StateVector qsync::encoded_state(const QsyncCode &code, std::span<const StateVector::Amplitude> logical, bool translated) {
    size_t n = code.n();
    if (logical.size() != (uint64_t{1} << code.k_logical())) {
        throw InvalidInput("logical amplitude count must be 2^k_logical");
    }
    StateVector state(n);
    state[0] = 0;
    BitVec offset = translated ? code.d().generator().to_bits(n) : BitVec(n);
    for (uint64_t j = 0; j < logical.size(); j++) {
        StateVector coset = coset_state(code.c(), code.logical_basis().representative(j), offset);
        for (uint64_t i = 0; i < coset.amplitudes().size(); i++) {
            state[i] += logical[j] * coset[i];
        }
    }
    return state;
}

double qsync::oracle_fidelity(const QsyncCode &code, uint64_t logical_index, const ChannelEffect &effect, const DecodeReport &report) {
    size_t n = code.n();
    size_t n_ext = code.n_ext();
    size_t a_l = code.a_l();
    size_t a_r = code.a_r();
    if (n_ext > MAX_ORACLE_QUBITS) {
        throw BudgetExceeded("oracle needs n + a_l + a_r <= " + std::to_string(MAX_ORACLE_QUBITS) + " qubits",
                             std::ldexp(1.0, static_cast<int>(n_ext)));
    }
    if (!report.slip_estimate || *report.slip_estimate != effect.slip) {
        return 0.0;
    }
    auto logical = oracle_logical_amplitudes(code.k_logical(), logical_index);

    StateVector state = extend(encoded_state(code, logical, true), a_l, a_r);
    state.apply_pauli(effect.bit_flips, effect.phase_flips);

    state.apply_pauli(report.total_bit_correction, BitVec(n_ext));
    apply_extension_cnots(state, n, a_l, a_r);

    BitVec untranslate(n_ext);
    untranslate.assign_range(a_l, code.d().generator().to_bits(n));
    BitVec z_fix(n_ext);
    z_fix.assign_range(a_l, report.phase_correction);
    state.apply_pauli(untranslate, z_fix);

    StateVector ideal = encoded_state(code, logical, false);
    StateVector ideal_ext(n_ext);
    ideal_ext[0] = 0;
    for (uint64_t i = 0; i < ideal.amplitudes().size(); i++) {
        ideal_ext[i << a_l] = ideal[i];
    }
    return std::abs(ideal_ext.inner(state));
}

OracleRun qsync::oracle_pipeline(const QsyncCode &code, uint64_t logical_index, const ChannelEffect &effect, uint64_t branch_seed) {
    OracleRun run{run_pipeline(code, logical_index, effect, branch_seed), 0};
    run.fidelity = oracle_fidelity(code, logical_index, effect, run.report);
    return run;
}
