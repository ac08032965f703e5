#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "netcert/config.hpp"

namespace netcert {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// ---------------------------------------------------------------------------
// States, observables, measurements on few-qubit registers.
//
// Conventions used throughout:
//  * basis index bits are big-endian: qubit 0 is the most significant bit,
//    so kron(A, B) puts A on qubit 0.
//  * multi-bit outcome labels are '0'/'1' strings, most significant bit
//    first; their integer value is the behavior-table output index.
// ---------------------------------------------------------------------------

struct PureState {
  Vec amplitudes;
  int num_qubits = 0;

  int dim() const { return 1 << num_qubits; }
};

struct MixedState {
  Mat density;
  int num_qubits = 0;

  int dim() const { return 1 << num_qubits; }
};

struct Observable {
  Mat matrix;
  int num_qubits = 0;
};

struct ProjectiveMeasurement {
  std::vector<Mat> projectors;
  std::vector<std::string> outcome_labels;  // bit-strings, one per projector

  int dim() const { return projectors.empty() ? 0 : int(projectors.front().rows()); }
  int num_outcomes() const { return int(projectors.size()); }
  // Integer value of outcome label i (big-endian bits).
  int outcome_value(int i) const;
};

// Validation helpers; each throws argument_error when the corresponding
// type invariant fails beyond tolerance().
void validate(const PureState& s);
void validate(const MixedState& s);
void validate(const Observable& o);
void validate(const ProjectiveMeasurement& m);

// Pauli matrices and friends.
Mat pauli_x();
Mat pauli_y();
Mat pauli_z();
Mat identity2();

// Kronecker product of the factors in list order.
Mat tensor_product(const std::vector<Mat>& factors);

// cos(theta)|00> + sin(theta)|11>.
PureState generalized_epr(double theta);

// cos(vartheta) sigma_z + sign * sin(vartheta) sigma_x   (sign = +1 or -1).
Observable xz_observable(double vartheta, int sign);

// cos(phi) sigma_x + sin(phi) sigma_y.  Equatorial observable used by the
// Svetlichny-star branch measurements.
Observable xy_observable(double phi);

enum class BasisKind { bell, ghz };

// bell: the four Bell projectors labeled b0 b1 with
//   00 -> (|00>+|11>)/sqrt2, 01 -> (|00>-|11>)/sqrt2,
//   10 -> (|01>+|10>)/sqrt2, 11 -> (|01>-|10>)/sqrt2.
// ghz(n): 2^n projectors onto (|0,i> + (-1)^{i1} |1,~i>)/sqrt2 where the
// label is the n-bit string i1 i2 ... in and ~i complements i2..in.
ProjectiveMeasurement projective_basis(BasisKind kind, int n = 2);

// v * |phi><phi| + (1-v) * I/4 on a two-qubit state.
MixedState apply_werner_noise(const PureState& state, double v);

// Two-outcome measurement {(I+A)/2 -> "0", (I-A)/2 -> "1"} of a dichotomic
// observable (outcome 0 is the +1 eigenspace, matching the (-1)^a sign
// convention).
ProjectiveMeasurement measurement_from_observable(const Observable& obs);

MixedState to_mixed(const PureState& s);

}  // namespace netcert
