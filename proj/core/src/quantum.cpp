#include "netcert/quantum.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace netcert {

int ProjectiveMeasurement::outcome_value(int i) const {
  int v = 0;
  for (char c : outcome_labels[size_t(i)]) v = 2 * v + (c == '1' ? 1 : 0);
  return v;
}

void validate(const PureState& s) {
  if (s.num_qubits <= 0) throw argument_error("pure state needs >= 1 qubit");
  if (s.amplitudes.size() != s.dim())
    throw argument_error("amplitude vector length must be 2^num_qubits");
  if (std::abs(s.amplitudes.squaredNorm() - 1.0) > tolerance())
    throw argument_error("pure state is not normalized");
}

void validate(const MixedState& s) {
  if (s.num_qubits <= 0) throw argument_error("mixed state needs >= 1 qubit");
  if (s.density.rows() != s.dim() || s.density.cols() != s.dim())
    throw argument_error("density matrix dimension must be 2^num_qubits");
  const double tol = tolerance();
  if ((s.density - s.density.adjoint()).cwiseAbs().maxCoeff() > tol)
    throw argument_error("density matrix is not Hermitian");
  if (std::abs(s.density.trace().real() - 1.0) > tol)
    throw argument_error("density matrix trace is not 1");
  Eigen::SelfAdjointEigenSolver<Mat> es(s.density, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol)
    throw argument_error("density matrix has a negative eigenvalue");
}

void validate(const Observable& o) {
  if (o.num_qubits <= 0) throw argument_error("observable needs >= 1 qubit");
  const int d = 1 << o.num_qubits;
  if (o.matrix.rows() != d || o.matrix.cols() != d)
    throw argument_error("observable dimension must be 2^num_qubits");
  if ((o.matrix - o.matrix.adjoint()).cwiseAbs().maxCoeff() > tolerance())
    throw argument_error("observable is not Hermitian");
}

void validate(const ProjectiveMeasurement& m) {
  if (m.projectors.empty()) throw argument_error("measurement has no projectors");
  if (m.outcome_labels.size() != m.projectors.size())
    throw argument_error("one outcome label per projector required");
  const double tol = tolerance();
  const int d = m.dim();
  Mat sum = Mat::Zero(d, d);
  for (const Mat& p : m.projectors) {
    if (p.rows() != d || p.cols() != d)
      throw argument_error("projector dimensions disagree");
    if ((p - p.adjoint()).cwiseAbs().maxCoeff() > tol)
      throw argument_error("projector is not Hermitian");
    if ((p * p - p).cwiseAbs().maxCoeff() > tol)
      throw argument_error("projector is not idempotent");
    sum += p;
  }
  if ((sum - Mat::Identity(d, d)).cwiseAbs().maxCoeff() > tol)
    throw argument_error("projectors do not sum to the identity");
  for (size_t i = 0; i < m.outcome_labels.size(); ++i)
    for (size_t j = i + 1; j < m.outcome_labels.size(); ++j)
      if (m.outcome_labels[i] == m.outcome_labels[j])
        throw argument_error("duplicate outcome label");
}

Mat pauli_x() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Mat pauli_y() {
  Mat m(2, 2);
  m << 0, cplx(0, -1), cplx(0, 1), 0;
  return m;
}

Mat pauli_z() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Mat identity2() { return Mat::Identity(2, 2); }

Mat tensor_product(const std::vector<Mat>& factors) {
  if (factors.empty()) throw argument_error("tensor_product needs >= 1 factor");
  Mat out = factors.front();
  for (size_t f = 1; f < factors.size(); ++f) {
    const Mat& b = factors[f];
    Mat next(out.rows() * b.rows(), out.cols() * b.cols());
    for (Eigen::Index i = 0; i < out.rows(); ++i)
      for (Eigen::Index j = 0; j < out.cols(); ++j)
        next.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = out(i, j) * b;
    out = std::move(next);
  }
  return out;
}

PureState generalized_epr(double theta) {
  PureState s;
  s.num_qubits = 2;
  s.amplitudes = Vec::Zero(4);
  s.amplitudes(0) = std::cos(theta);
  s.amplitudes(3) = std::sin(theta);
  return s;
}

Observable xz_observable(double vartheta, int sign) {
  if (sign != 1 && sign != -1) throw argument_error("sign must be +1 or -1");
  Observable o;
  o.num_qubits = 1;
  o.matrix = std::cos(vartheta) * pauli_z() + double(sign) * std::sin(vartheta) * pauli_x();
  return o;
}

Observable xy_observable(double phi) {
  Observable o;
  o.num_qubits = 1;
  o.matrix = std::cos(phi) * pauli_x() + std::sin(phi) * pauli_y();
  return o;
}

namespace {

std::string bit_label(int value, int width) {
  std::string s(size_t(width), '0');
  for (int b = 0; b < width; ++b)
    if (value >> (width - 1 - b) & 1) s[size_t(b)] = '1';
  return s;
}

}  // namespace

ProjectiveMeasurement projective_basis(BasisKind kind, int n) {
  ProjectiveMeasurement m;
  if (kind == BasisKind::bell) {
    if (n != 2) throw argument_error("bell basis is two-qubit");
    const double r = 1.0 / std::sqrt(2.0);
    // Columns of each |v>: basis order |00>,|01>,|10>,|11>.
    const std::vector<std::vector<double>> vecs = {
        {r, 0, 0, r},   // 00: phi+
        {r, 0, 0, -r},  // 01: phi-
        {0, r, r, 0},   // 10: psi+
        {0, r, -r, 0},  // 11: psi-
    };
    for (int k = 0; k < 4; ++k) {
      Vec v(4);
      for (int i = 0; i < 4; ++i) v(i) = vecs[size_t(k)][size_t(i)];
      m.projectors.push_back(v * v.adjoint());
      m.outcome_labels.push_back(bit_label(k, 2));
    }
    return m;
  }
  if (n < 2) throw argument_error("ghz basis needs n >= 2");
  const int d = 1 << n;
  const double r = 1.0 / std::sqrt(2.0);
  const int rest_mask = (1 << (n - 1)) - 1;
  for (int label = 0; label < d; ++label) {
    const int i1 = label >> (n - 1);
    const int rest = label & rest_mask;
    Vec v = Vec::Zero(d);
    v(rest) = r;  // |0, i_{[n-1]}>
    v(((1 << (n - 1)) | (~rest & rest_mask))) = (i1 ? -r : r);
    m.projectors.push_back(v * v.adjoint());
    m.outcome_labels.push_back(bit_label(label, n));
  }
  return m;
}

MixedState apply_werner_noise(const PureState& state, double v) {
  if (state.num_qubits != 2) throw argument_error("werner noise acts on 2-qubit states");
  if (v < 0.0 || v > 1.0) throw argument_error("visibility must lie in [0,1]");
  MixedState out;
  out.num_qubits = 2;
  out.density = v * (state.amplitudes * state.amplitudes.adjoint()) +
                (1.0 - v) / 4.0 * Mat::Identity(4, 4);
  return out;
}

ProjectiveMeasurement measurement_from_observable(const Observable& obs) {
  const int d = 1 << obs.num_qubits;
  ProjectiveMeasurement m;
  Mat id = Mat::Identity(d, d);
  m.projectors.push_back((id + obs.matrix) / 2.0);
  m.projectors.push_back((id - obs.matrix) / 2.0);
  m.outcome_labels = {"0", "1"};
  return m;
}

MixedState to_mixed(const PureState& s) {
  MixedState out;
  out.num_qubits = s.num_qubits;
  out.density = s.amplitudes * s.amplitudes.adjoint();
  return out;
}

}  // namespace netcert
