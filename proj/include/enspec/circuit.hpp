#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "enspec/linalg.hpp"
#include "enspec/numeric.hpp"

namespace enspec {

enum class GateKind { H, T, S, X, Y, Z, CZ, CX, Rz, Rx, Matrix1, Matrix2 };

/// One named or explicit-matrix gate on one or two qubits.
struct Gate {
  GateKind kind = GateKind::X;
  std::vector<int> targets;
  double param = 0.0;
  Eigen::MatrixXcd matrix;  // Matrix1 / Matrix2 only

  static Gate one(GateKind k, int q) { return Gate{k, {q}, 0.0, {}}; }
  static Gate two(GateKind k, int a, int b) { return Gate{k, {a, b}, 0.0, {}}; }
  static Gate rz(int q, double angle) { return Gate{GateKind::Rz, {q}, angle, {}}; }
  static Gate rx(int q, double angle) { return Gate{GateKind::Rx, {q}, angle, {}}; }

  static Gate matrix1(int q, Eigen::MatrixXcd u) {
    return Gate{GateKind::Matrix1, {q}, 0.0, std::move(u)};
  }
  static Gate matrix2(int a, int b, Eigen::MatrixXcd u) {
    return Gate{GateKind::Matrix2, {a, b}, 0.0, std::move(u)};
  }

  int arity() const { return static_cast<int>(targets.size()); }

  /// The 2x2 or 4x4 matrix, first target = most significant sub-index bit.
  Eigen::MatrixXcd unitary() const {
    using std::cos;
    using std::sin;
    const cplx i(0, 1);
    Eigen::MatrixXcd u;
    switch (kind) {
      case GateKind::H:
        u.resize(2, 2);
        u << 1, 1, 1, -1;
        u /= std::sqrt(2.0);
        break;
      case GateKind::T:
        u = Eigen::Vector2cd(1.0, std::exp(i * pi / 4.0)).asDiagonal();
        break;
      case GateKind::S:
        u = Eigen::Vector2cd(1.0, i).asDiagonal();
        break;
      case GateKind::X:
        u.resize(2, 2);
        u << 0, 1, 1, 0;
        break;
      case GateKind::Y:
        u.resize(2, 2);
        u << 0, -i, i, 0;
        break;
      case GateKind::Z:
        u = Eigen::Vector2cd(1.0, -1.0).asDiagonal();
        break;
      case GateKind::CZ:
        u = Eigen::Vector4cd(1.0, 1.0, 1.0, -1.0).asDiagonal();
        break;
      case GateKind::CX:
        u = Eigen::MatrixXcd::Zero(4, 4);
        u(0, 0) = u(1, 1) = u(2, 3) = u(3, 2) = 1.0;
        break;
      case GateKind::Rz:
        u = Eigen::Vector2cd(std::exp(-i * param / 2.0), std::exp(i * param / 2.0))
                .asDiagonal();
        break;
      case GateKind::Rx:
        u.resize(2, 2);
        u << cos(param / 2.0), -i * sin(param / 2.0), -i * sin(param / 2.0),
            cos(param / 2.0);
        break;
      case GateKind::Matrix1:
      case GateKind::Matrix2:
        u = matrix;
        break;
    }
    return u;
  }
};

/// Ordered gate list; gates apply in sequence order (first gate first).
struct CircuitIR {
  int n = 0;
  std::vector<Gate> gates;

  int gate_count() const { return static_cast<int>(gates.size()); }

  static CircuitIR identity(int n) {
    CircuitIR c;
    c.n = n;
    c.gates.push_back(Gate::matrix1(0, Eigen::MatrixXcd::Identity(2, 2)));
    return c;
  }

  void validate() const {
    if (n < 1) throw validation_error("CircuitIR: need at least one qubit");
    if (gates.empty()) throw validation_error("CircuitIR: need at least one gate");
    for (const auto& g : gates) {
      const int expected = (g.kind == GateKind::CZ || g.kind == GateKind::CX ||
                            g.kind == GateKind::Matrix2)
                               ? 2
                               : 1;
      if (g.arity() != expected)
        throw validation_error("CircuitIR: wrong target count for gate");
      for (int t : g.targets)
        if (t < 0 || t >= n) throw validation_error("CircuitIR: target out of range");
      if (g.arity() == 2 && g.targets[0] == g.targets[1])
        throw validation_error("CircuitIR: duplicate targets");
      const Eigen::MatrixXcd u = g.unitary();
      const long long d = expected == 1 ? 2 : 4;
      if (u.rows() != d || u.cols() != d)
        throw validation_error("CircuitIR: gate matrix has the wrong shape");
      const double dev =
          (u.adjoint() * u - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
      if (dev > numeric_policy().unitarity_tol)
        throw validation_error("CircuitIR: gate matrix is not unitary");
    }
  }
};

namespace detail {

inline void apply_gate_in_place(const Gate& g, int n, Eigen::VectorXcd& amps) {
  const Eigen::MatrixXcd u = g.unitary();
  const long long dim = amps.size();
  if (g.arity() == 1) {
    const long long stride = 1LL << (n - 1 - g.targets[0]);
    for (long long base = 0; base < dim; ++base) {
      if (base & stride) continue;
      const cplx a0 = amps[base];
      const cplx a1 = amps[base | stride];
      amps[base] = u(0, 0) * a0 + u(0, 1) * a1;
      amps[base | stride] = u(1, 0) * a0 + u(1, 1) * a1;
    }
  } else {
    const long long sa = 1LL << (n - 1 - g.targets[0]);
    const long long sb = 1LL << (n - 1 - g.targets[1]);
    for (long long base = 0; base < dim; ++base) {
      if ((base & sa) || (base & sb)) continue;
      cplx a[4] = {amps[base], amps[base | sb], amps[base | sa], amps[base | sa | sb]};
      for (int r = 0; r < 4; ++r) {
        cplx acc = 0.0;
        for (int c = 0; c < 4; ++c) acc += u(r, c) * a[c];
        const long long idx = base | (r & 2 ? sa : 0) | (r & 1 ? sb : 0);
        amps[idx] = acc;
      }
    }
  }
}

}  // namespace detail

inline StateVector simulate(const CircuitIR& circuit, const StateVector& input) {
  circuit.validate();
  if (input.n != circuit.n)
    throw validation_error("simulate: qubit counts differ");
  Eigen::VectorXcd amps = input.amplitudes;
  for (const auto& g : circuit.gates) detail::apply_gate_in_place(g, circuit.n, amps);
  StateVector out;
  out.n = circuit.n;
  out.amplitudes = std::move(amps);
  return out;
}

inline DiscreteDistribution output_distribution(const CircuitIR& circuit,
                                                const StateVector& input) {
  const StateVector out = simulate(circuit, input);
  return DiscreteDistribution::from_vector(out.amplitudes.cwiseAbs2());
}

/// Full unitary of the circuit as a dense matrix (column-by-column).
inline Eigen::MatrixXcd dense_unitary(const CircuitIR& circuit) {
  circuit.validate();
  const long long dim = 1LL << circuit.n;
  if (dim > numeric_policy().eig_dim_guard)
    throw resource_error("dense_unitary: dimension exceeds the desk-scale guard");
  Eigen::MatrixXcd u(dim, dim);
  for (long long col = 0; col < dim; ++col) {
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);
    amps[col] = 1.0;
    for (const auto& g : circuit.gates) detail::apply_gate_in_place(g, circuit.n, amps);
    u.col(col) = amps;
  }
  return u;
}

/// Fixes bits b_i at strictly increasing qubit positions k_i; the empty
/// spec fixes nothing and selects every string.
struct MarginalSpec {
  std::vector<int> positions;
  std::vector<int> bits;

  int fixed_count() const { return static_cast<int>(positions.size()); }

  void validate(int n) const {
    if (positions.size() != bits.size())
      throw validation_error("MarginalSpec: positions and bits differ in length");
    for (std::size_t i = 0; i < positions.size(); ++i) {
      if (positions[i] < 0 || positions[i] >= n)
        throw validation_error("MarginalSpec: position out of range");
      if (i > 0 && positions[i] <= positions[i - 1])
        throw validation_error("MarginalSpec: positions must be strictly increasing");
      if (bits[i] != 0 && bits[i] != 1)
        throw validation_error("MarginalSpec: bits must be 0 or 1");
    }
  }

  bool selects(std::uint64_t y, int n) const {
    for (std::size_t i = 0; i < positions.size(); ++i)
      if (qubit_bit(y, positions[i], n) != bits[i]) return false;
    return true;
  }
};

/// p = sum over S* of |<y|U|x>|^2, exactly.
inline double marginal_probability(const CircuitIR& circuit, std::uint64_t x,
                                   const MarginalSpec& spec) {
  spec.validate(circuit.n);
  const StateVector out = simulate(circuit, StateVector::basis(circuit.n, x));
  double p = 0.0;
  for (long long y = 0; y < out.dim(); ++y)
    if (spec.selects(static_cast<std::uint64_t>(y), circuit.n))
      p += std::norm(out.amplitudes[y]);
  return p;
}

}  // namespace enspec
