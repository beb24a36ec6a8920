#include "cwc/circuit.hpp"

#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

#include "cwc/errors.hpp"

namespace cwc {

std::string_view to_string(GateKind k) noexcept
{
    switch (k) {
    case GateKind::Hadamard: return "H";
    case GateKind::Phase: return "R";
    case GateKind::ControlledPhase: return "CR";
    case GateKind::InverseQFT: return "IQFT";
    case GateKind::QFT: return "QFT";
    case GateKind::PauliZ: return "Z";
    case GateKind::Diffusion: return "D";
    }
    return "?";
}

double GateList::angle(const Gate& g) const
{
    return 2.0 * std::numbers::pi * static_cast<double>(g.units) / std::ldexp(1.0, q2);
}

namespace {

std::int64_t mod_pow2(std::int64_t a, int bits)
{
    const std::int64_t m = std::int64_t{1} << bits;
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// U_G(2 pi a / 2^q2): value qubit j (j = 0 is the MSB) rotates by 2^(q2-1-j) times the base angle.
void emit_term(GateList& out, std::int64_t coefficient, const std::vector<int>& controls)
{
    const std::int64_t a = mod_pow2(coefficient, out.q2);
    if (a == 0) return;
    for (int j = 0; j < out.q2; ++j) {
        const int weight_bit = out.q2 - 1 - j;
        Gate g;
        g.kind = controls.empty() ? GateKind::Phase : GateKind::ControlledPhase;
        g.target = out.q1 + j;
        g.controls = controls;
        g.units = (a & ((std::int64_t{1} << (out.q2 - weight_bit)) - 1)) << weight_bit;
        out.gates.push_back(std::move(g));
    }
}

} // namespace

GateList compile_state_prep(const QuboProblem& qubo, std::int64_t y)
{
    if (qubo.q2 < 1 || qubo.q2 > 62) throw ParameterError("value register width must be in [1, 62]");
    GateList out;
    out.q1 = qubo.q1;
    out.q2 = qubo.q2;
    for (int q = 0; q < out.width(); ++q) {
        Gate h;
        h.target = q;
        out.gates.push_back(std::move(h));
    }

    emit_term(out, qubo.constant - y, {});
    for (int r = 0; r < qubo.q1; ++r) emit_term(out, qubo.coeff(r, r), {r});
    for (int r = 0; r < qubo.q1; ++r)
        for (int c = r + 1; c < qubo.q1; ++c) emit_term(out, qubo.coeff(r, c), {r, c});

    Gate iqft;
    iqft.kind = GateKind::InverseQFT;
    iqft.reg_begin = out.q1;
    iqft.reg_len = out.q2;
    out.gates.push_back(iqft);
    return out;
}

GateList inverse(const GateList& gates)
{
    GateList out;
    out.q1 = gates.q1;
    out.q2 = gates.q2;
    out.gates.assign(gates.gates.rbegin(), gates.gates.rend());
    for (Gate& g : out.gates) {
        switch (g.kind) {
        case GateKind::Phase:
        case GateKind::ControlledPhase: g.units = mod_pow2(-g.units, gates.q2); break;
        case GateKind::InverseQFT: g.kind = GateKind::QFT; break;
        case GateKind::QFT: g.kind = GateKind::InverseQFT; break;
        default: break;
        }
    }
    return out;
}

StateVector::StateVector(int qubits, int max_width) : qubits_(qubits)
{
    if (qubits < 1 || qubits > max_width)
        throw ResourceError("statevector width " + std::to_string(qubits) + " outside [1, " +
                            std::to_string(max_width) + "]");
    amp_.assign(std::size_t{1} << qubits, {0.0, 0.0});
    amp_[0] = 1.0;
}

double StateVector::norm() const noexcept
{
    double s = 0.0;
    for (const auto& a : amp_) s += std::norm(a);
    return std::sqrt(s);
}

void StateVector::hadamard(int q)
{
    const double h = 1.0 / std::numbers::sqrt2;
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        if (i & bit) continue;
        const auto a = amp_[i];
        const auto b = amp_[i | bit];
        amp_[i] = (a + b) * h;
        amp_[i | bit] = (a - b) * h;
    }
}

void StateVector::phase(int q, double angle) { controlled_phase({}, q, angle); }

void StateVector::controlled_phase(const std::vector<int>& controls, int q, double angle)
{
    std::size_t mask = std::size_t{1} << q;
    for (int c : controls) mask |= std::size_t{1} << c;
    const std::complex<double> factor = std::polar(1.0, angle);
    for (std::size_t i = 0; i < amp_.size(); ++i)
        if ((i & mask) == mask) amp_[i] *= factor;
}

void StateVector::pauli_z(int q)
{
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < amp_.size(); ++i)
        if (i & bit) amp_[i] = -amp_[i];
}

void StateVector::fourier(int reg_begin, int reg_len, bool inverse_transform)
{
    if (reg_len > 12) throw ResourceError("dense Fourier transform limited to 12 qubits");
    const std::size_t dim = std::size_t{1} << reg_len;
    const double sign = inverse_transform ? -1.0 : 1.0;
    std::vector<std::complex<double>> matrix(dim * dim);
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t i = 0; i < dim; ++i)
            matrix[a * dim + i] = std::polar(1.0 / std::sqrt(static_cast<double>(dim)),
                                             sign * 2.0 * std::numbers::pi * static_cast<double>((a * i) % dim) /
                                                 static_cast<double>(dim));

    // Register value v maps to qubit reg_begin + j carrying bit (reg_len - 1 - j) of v.
    std::vector<std::size_t> offset(dim);
    for (std::size_t v = 0; v < dim; ++v) {
        std::size_t o = 0;
        for (int j = 0; j < reg_len; ++j)
            if ((v >> (reg_len - 1 - j)) & 1U) o |= std::size_t{1} << (reg_begin + j);
        offset[v] = o;
    }
    const std::size_t reg_mask = offset[dim - 1];
    std::vector<std::complex<double>> in(dim), out(dim);
    for (std::size_t base = 0; base < amp_.size(); ++base) {
        if (base & reg_mask) continue;
        for (std::size_t v = 0; v < dim; ++v) in[v] = amp_[base | offset[v]];
        for (std::size_t a = 0; a < dim; ++a) {
            std::complex<double> acc{0.0, 0.0};
            for (std::size_t i = 0; i < dim; ++i) acc += matrix[a * dim + i] * in[i];
            out[a] = acc;
        }
        for (std::size_t v = 0; v < dim; ++v) amp_[base | offset[v]] = out[v];
    }
}

void StateVector::reflect_zero()
{
    for (std::size_t i = 1; i < amp_.size(); ++i) amp_[i] = -amp_[i];
}

void apply(StateVector& state, const GateList& gates)
{
    if (state.qubits() != gates.width()) throw ParameterError("gate list width differs from the statevector");
    for (const Gate& g : gates.gates) {
        switch (g.kind) {
        case GateKind::Hadamard: state.hadamard(g.target); break;
        case GateKind::Phase: state.phase(g.target, gates.angle(g)); break;
        case GateKind::ControlledPhase: state.controlled_phase(g.controls, g.target, gates.angle(g)); break;
        case GateKind::InverseQFT: state.fourier(g.reg_begin, g.reg_len, true); break;
        case GateKind::QFT: state.fourier(g.reg_begin, g.reg_len, false); break;
        case GateKind::PauliZ: state.pauli_z(g.target); break;
        case GateKind::Diffusion: state.reflect_zero(); break;
        }
    }
}

std::uint64_t value_register(std::uint64_t index, int q1, int q2) noexcept
{
    std::uint64_t v = 0;
    for (int j = 0; j < q2; ++j) v = (v << 1) | ((index >> (q1 + j)) & 1U);
    return v;
}

std::vector<double> joint_distribution(const StateVector& state, int q1, int q2)
{
    std::vector<double> p(std::size_t{1} << (q1 + q2), 0.0);
    const std::uint64_t xmask = (std::uint64_t{1} << q1) - 1;
    const auto& amp = state.amplitudes();
    for (std::uint64_t i = 0; i < amp.size(); ++i)
        p[((i & xmask) << q2) | value_register(i, q1, q2)] += std::norm(amp[i]);
    return p;
}

std::vector<double> grover_iterate(const QuboProblem& qubo, std::int64_t y, std::uint64_t L, int max_width)
{
    const GateList prep = compile_state_prep(qubo, y);
    const GateList unprep = inverse(prep);
    StateVector state(prep.width(), max_width);
    apply(state, prep);
    for (std::uint64_t i = 0; i < L; ++i) {
        state.pauli_z(qubo.q1); // oracle: sign bit of E(x) - y
        apply(state, unprep);
        state.reflect_zero();
        apply(state, prep);
    }
    std::vector<double> px(std::size_t{1} << qubo.q1, 0.0);
    const std::uint64_t xmask = (std::uint64_t{1} << qubo.q1) - 1;
    const auto& amp = state.amplitudes();
    for (std::uint64_t i = 0; i < amp.size(); ++i) px[i & xmask] += std::norm(amp[i]);
    return px;
}

GateCounts gate_counts(std::int64_t q1, std::int64_t q2)
{
    return GateCounts{q1 + q2, q2, q1 * q2, q1 * (q1 - 1) * q2 / 2, 1};
}

GateCounts tally(const GateList& gates)
{
    GateCounts c;
    for (const Gate& g : gates.gates) {
        switch (g.kind) {
        case GateKind::Hadamard: ++c.h; break;
        case GateKind::Phase: ++c.r; break;
        case GateKind::ControlledPhase: (g.controls.size() == 1 ? c.cr1 : c.cr2) += 1; break;
        case GateKind::InverseQFT: ++c.iqft; break;
        default: break;
        }
    }
    return c;
}

std::string to_json(const GateList& gates)
{
    nlohmann::ordered_json j;
    j["q1"] = gates.q1;
    j["q2"] = gates.q2;
    j["angle_unit"] = "2*pi/2^q2";
    auto arr = nlohmann::ordered_json::array();
    for (const Gate& g : gates.gates) {
        nlohmann::ordered_json e;
        e["gate"] = to_string(g.kind);
        switch (g.kind) {
        case GateKind::InverseQFT:
        case GateKind::QFT:
            e["qubits"] = {g.reg_begin, g.reg_begin + g.reg_len - 1};
            break;
        case GateKind::Diffusion: break;
        default:
            e["qubits"] = nlohmann::ordered_json::array();
            for (int c : g.controls) e["qubits"].push_back(c);
            e["qubits"].push_back(g.target);
            break;
        }
        if (g.kind == GateKind::Phase || g.kind == GateKind::ControlledPhase) e["angle"] = g.units;
        arr.push_back(std::move(e));
    }
    j["gates"] = std::move(arr);
    return j.dump() + "\n";
}

} // namespace cwc
