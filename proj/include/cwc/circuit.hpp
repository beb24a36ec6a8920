#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "cwc/qubo.hpp"

namespace cwc {

enum class GateKind { Hadamard, Phase, ControlledPhase, InverseQFT, QFT, PauliZ, Diffusion };

std::string_view to_string(GateKind k) noexcept;

/// One gate of the state-preparation circuit. Phases are kept as integers in units of
/// 2 pi / 2^q2 so compiled circuits are exact and invertible.
struct Gate {
    GateKind kind = GateKind::Hadamard;
    int target = -1;
    std::vector<int> controls;
    std::int64_t units = 0; ///< Phase / ControlledPhase angle, in [0, 2^q2)
    int reg_begin = 0;      ///< QFT / InverseQFT register
    int reg_len = 0;

    friend bool operator==(const Gate&, const Gate&) = default;
};

/// Qubits 0..q1-1 hold x (qubit r is x_r); qubits q1..q1+q2-1 hold the value register,
/// most significant (sign) bit first.
struct GateList {
    int q1 = 0;
    int q2 = 0;
    std::vector<Gate> gates;

    int width() const noexcept { return q1 + q2; }
    double angle(const Gate& g) const;
};

/// A_y for E(x) - y: Hadamards, one phase block per nonzero term (q2 gates each), IQFT.
GateList compile_state_prep(const QuboProblem& qubo, std::int64_t y);

/// Adjoint circuit: reversed order, negated phases, QFT in place of IQFT.
GateList inverse(const GateList& gates);

inline constexpr int kDefaultSimulationWidth = 24;

/// Dense state over `qubits` qubits; basis index bit k is qubit k.
class StateVector {
public:
    explicit StateVector(int qubits, int max_width = kDefaultSimulationWidth);

    int qubits() const noexcept { return qubits_; }
    std::vector<std::complex<double>>& amplitudes() noexcept { return amp_; }
    const std::vector<std::complex<double>>& amplitudes() const noexcept { return amp_; }
    double norm() const noexcept;

    void hadamard(int q);
    void phase(int q, double angle);
    void controlled_phase(const std::vector<int>& controls, int q, double angle);
    void pauli_z(int q);
    void fourier(int reg_begin, int reg_len, bool inverse);
    /// 2|0><0| - I on every qubit.
    void reflect_zero();

private:
    int qubits_;
    std::vector<std::complex<double>> amp_;
};

void apply(StateVector& state, const GateList& gates);

/// Integer held by the value register of basis state `index`, MSB at qubit q1.
std::uint64_t value_register(std::uint64_t index, int q1, int q2) noexcept;

/// P(x, v) laid out as [x * 2^q2 + v].
std::vector<double> joint_distribution(const StateVector& state, int q1, int q2);

/// Distribution over the x register after A_y followed by L Grover operators A D A^H O.
std::vector<double> grover_iterate(const QuboProblem& qubo, std::int64_t y, std::uint64_t L,
                                   int max_width = kDefaultSimulationWidth);

struct GateCounts {
    std::int64_t h = 0;
    std::int64_t r = 0;
    std::int64_t cr1 = 0;
    std::int64_t cr2 = 0;
    std::int64_t iqft = 0;

    friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

/// Closed-form tallies for a dense QUBO: q1+q2, q2, q1 q2, q1(q1-1) q2 / 2, 1.
GateCounts gate_counts(std::int64_t q1, std::int64_t q2);

/// Tallies of an actual compiled list.
GateCounts tally(const GateList& gates);

std::string to_json(const GateList& gates);

} // namespace cwc
