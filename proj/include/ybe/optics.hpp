#pragma once

#include <string>
#include <vector>

#include "ybe/matrix.hpp"
#include "ybe/yang_baxter.hpp"

namespace ybe {

enum class ElementKind {
  kQwp,
  kHwp,
  kBs,
  kPs0,
  kPs1,
  kMirror,
  kHadamard,
  kMz,
  kPbsCnot,
  kPathSwap,
};

enum class ChannelEncoding { kPolarization, kLocation };

/// One optical element. Wave plates and phase shifters carry one parameter,
/// the Mach-Zehnder four (phi1, phi2, vphi1, vphi2). Two-qubit kinds act on
/// the ordered target pair (first = target path qubit, second = control).
struct OpticalElement {
  ElementKind kind;
  std::vector<double> params;
  std::vector<int> targets;  // 0-based channel indices
};

struct OpticalCircuit {
  int width = 1;
  std::vector<ChannelEncoding> encodings;
  std::vector<OpticalElement> elements;
};

// Single-channel element unitaries
Matrix2 qwp(double delta);
Matrix2 hwp(double delta);
Matrix2 location_gate(ElementKind kind, double xi = 0.0);

/// Closed-form Mach-Zehnder unitary, equal to the element composition
/// PS1(phi1) H PS1(vphi2) PS0(vphi1) H PS0(phi2).
Matrix2 mach_zehnder(double phi1, double phi2, double vphi1, double vphi2);

/// Unitary of a single element on its own channel(s).
CMatrix element_unitary(const OpticalElement& elem);

enum class Gate2D { kA, kB };

/// Single-channel circuit realizing A(theta) or B(theta) in the given
/// encoding; equals a_2d/b_2d up to a global phase.
OpticalCircuit realize_2d(Gate2D gate, double theta, ChannelEncoding encoding);

/// Single-channel circuit realizing V_i (i in 1..6) of the two-CNOT
/// decomposition; V4 is the empty circuit.
OpticalCircuit realize_vi(int i, double phi, double theta,
                          ChannelEncoding encoding);

struct Cnot2Realization {
  CMatrix matrix;  // always the CNOT2 permutation
  OpticalElement element;
};

/// CNOT2 between a polarization control and location target (PBS) or two
/// location qubits (path-label swap).
Cnot2Realization optical_cnot2(ChannelEncoding control_encoding,
                               ChannelEncoding target_encoding);

CVector simulate(const OpticalCircuit& circuit, const CVector& input);
CMatrix circuit_unitary(const OpticalCircuit& circuit);

enum class Side { kLhs, kRhs };
enum class YbeDims { k2D, k4D };

/// Optical circuit for one side of the 2D or 4D YBE. 2D circuits have one
/// channel in the given encoding; 4D circuits fix three channels
/// (location, location, polarization) = sites 1, 2, 3.
OpticalCircuit build_ybe_circuit(Side side, YbeDims dims,
                                 const AngleParameters& angles,
                                 ChannelEncoding encoding_2d);

std::string circuit_to_json(const OpticalCircuit& circuit);
OpticalCircuit circuit_from_json(const std::string& text);

}  // namespace ybe
