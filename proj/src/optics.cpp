#include "ybe/optics.hpp"

#include <cmath>
#include <map>

#include <json.hpp>

#include "ybe/errors.hpp"

namespace ybe {

namespace {

const cxd kI(0.0, 1.0);
const double kSqrt2 = std::sqrt(2.0);

CMatrix cnot2_matrix() {
  CMatrix c = CMatrix::Zero(4, 4);
  c(0, 0) = 1;
  c(1, 3) = 1;
  c(2, 2) = 1;
  c(3, 1) = 1;
  return c;
}

std::size_t expected_params(ElementKind kind) {
  switch (kind) {
    case ElementKind::kQwp:
    case ElementKind::kHwp:
    case ElementKind::kPs0:
    case ElementKind::kPs1:
      return 1;
    case ElementKind::kMz:
      return 4;
    default:
      return 0;
  }
}

void append_retargeted(OpticalCircuit& dst, const OpticalCircuit& src,
                       int channel) {
  for (OpticalElement e : src.elements) {
    for (int& t : e.targets) t = channel;
    dst.elements.push_back(std::move(e));
  }
}

}  // namespace

Matrix2 qwp(double delta) {
  const double c = std::cos(2 * delta);
  const double s = std::sin(2 * delta);
  Matrix2 u;
  u << 1.0 - kI * c, -kI * s,
       -kI * s, 1.0 + kI * c;
  return u / kSqrt2;
}

Matrix2 hwp(double delta) {
  return qwp(delta) * qwp(delta);
}

Matrix2 location_gate(ElementKind kind, double xi) {
  Matrix2 u;
  switch (kind) {
    case ElementKind::kBs:
      u << 1, kI, kI, 1;
      return u / kSqrt2;
    case ElementKind::kMirror:
      return Matrix2::Identity();
    case ElementKind::kPs0:
      u << std::exp(kI * xi), 0, 0, 1;
      return u;
    case ElementKind::kPs1:
      u << 1, 0, 0, std::exp(kI * xi);
      return u;
    case ElementKind::kHadamard:
      // BS with its pair of -pi/2 phase shifters
      return location_gate(ElementKind::kPs1, -kPi / 2) *
             location_gate(ElementKind::kBs) *
             location_gate(ElementKind::kPs1, -kPi / 2);
    default:
      throw DimensionMismatch("location_gate: not a location element kind");
  }
}

Matrix2 mach_zehnder(double phi1, double phi2, double vphi1, double vphi2) {
  const double total = phi1 + phi2 + vphi1 + vphi2;
  const double lambda = vphi2 - vphi1;
  const double c = std::cos(lambda / 2);
  const double s = std::sin(lambda / 2);
  Matrix2 u;
  u << std::exp(-kI * (phi1 - phi2) / 2.0) * c,
       -kI * std::exp(-kI * (phi1 + phi2) / 2.0) * s,
       -kI * std::exp(kI * (phi1 + phi2) / 2.0) * s,
       std::exp(kI * (phi1 - phi2) / 2.0) * c;
  return std::exp(kI * total / 2.0) * u;
}

CMatrix element_unitary(const OpticalElement& elem) {
  if (elem.params.size() != expected_params(elem.kind))
    throw DimensionMismatch("element_unitary: wrong parameter count");
  switch (elem.kind) {
    case ElementKind::kQwp:
      return qwp(elem.params[0]);
    case ElementKind::kHwp:
      return hwp(elem.params[0]);
    case ElementKind::kBs:
    case ElementKind::kMirror:
    case ElementKind::kHadamard:
      return location_gate(elem.kind);
    case ElementKind::kPs0:
    case ElementKind::kPs1:
      return location_gate(elem.kind, elem.params[0]);
    case ElementKind::kMz:
      return mach_zehnder(elem.params[0], elem.params[1], elem.params[2],
                          elem.params[3]);
    case ElementKind::kPbsCnot:
    case ElementKind::kPathSwap:
      return cnot2_matrix();
  }
  throw DimensionMismatch("element_unitary: unknown kind");
}

OpticalCircuit realize_2d(Gate2D gate, double theta,
                          ChannelEncoding encoding) {
  OpticalCircuit c;
  c.width = 1;
  c.encodings = {encoding};
  if (encoding == ChannelEncoding::kPolarization) {
    // Sandwich of one HWP and two QWPs; unitary matches up to a phase.
    if (gate == Gate2D::kA) {
      c.elements = {{ElementKind::kQwp, {kPi / 4}, {0}},
                    {ElementKind::kHwp, {-kPi / 4 + theta / 2}, {0}},
                    {ElementKind::kQwp, {kPi / 4}, {0}}};
    } else {
      c.elements = {{ElementKind::kQwp, {kPi / 2}, {0}},
                    {ElementKind::kHwp, {theta / 2}, {0}},
                    {ElementKind::kQwp, {kPi / 2}, {0}}};
    }
  } else {
    if (gate == Gate2D::kA) {
      c.elements = {{ElementKind::kPs0, {-theta}, {0}},
                    {ElementKind::kPs1, {theta}, {0}}};
    } else {
      c.elements = {{ElementKind::kMz, {0, 0, -theta, theta}, {0}}};
    }
  }
  return c;
}

OpticalCircuit realize_vi(int i, double phi, double theta,
                          ChannelEncoding encoding) {
  OpticalCircuit c;
  c.width = 1;
  c.encodings = {encoding};
  const bool pol = encoding == ChannelEncoding::kPolarization;
  // Elements are listed in application order (rightmost factor first).
  switch (i) {
    case 1:
      if (pol) {
        c.elements = {{ElementKind::kQwp, {kPi / 2}, {0}},
                      {ElementKind::kHwp, {phi / 8}, {0}},
                      {ElementKind::kQwp, {kPi / 4}, {0}}};
      } else {
        c.elements = {{ElementKind::kHadamard, {}, {0}},
                      {ElementKind::kPs0, {-(kPi + phi) / 4}, {0}},
                      {ElementKind::kPs1, {(5 * kPi + phi) / 4}, {0}}};
      }
      break;
    case 2:
      if (pol) {
        c.elements = {{ElementKind::kQwp, {kPi / 2}, {0}},
                      {ElementKind::kHwp, {(kPi - phi) / 8}, {0}},
                      {ElementKind::kQwp, {-kPi / 4}, {0}}};
      } else {
        c.elements = {{ElementKind::kMz,
                       {kPi / 2 + phi / 2, kPi / 2, -kPi / 4, kPi / 4},
                       {0}}};
      }
      break;
    case 3:
      if (pol) {
        c.elements = {{ElementKind::kQwp, {kPi / 4}, {0}},
                      {ElementKind::kHwp, {(2 * theta - kPi) / 4}, {0}},
                      {ElementKind::kQwp, {kPi / 4}, {0}}};
      } else {
        c.elements = {{ElementKind::kPs0, {-theta}, {0}},
                      {ElementKind::kPs1, {theta}, {0}}};
      }
      break;
    case 4:
      break;  // identity, empty circuit
    case 5:
      // V1^dag: reversed plates, angles shifted by pi/2
      // (U_Q(d)^dag = U_Q(d + pi/2), U_H(d)^dag = U_H(d + pi/2)).
      if (pol) {
        c.elements = {{ElementKind::kQwp, {kPi / 4 + kPi / 2}, {0}},
                      {ElementKind::kHwp, {phi / 8 + kPi / 2}, {0}},
                      {ElementKind::kQwp, {kPi / 2 + kPi / 2}, {0}}};
      } else {
        c.elements = {{ElementKind::kPs0, {(kPi + phi) / 4}, {0}},
                      {ElementKind::kPs1, {-(5 * kPi + phi) / 4}, {0}},
                      {ElementKind::kHadamard, {}, {0}}};
      }
      break;
    case 6:
      // V2^dag
      if (pol) {
        c.elements = {{ElementKind::kQwp, {kPi / 4}, {0}},
                      {ElementKind::kHwp, {(5 * kPi - phi) / 8}, {0}},
                      {ElementKind::kQwp, {0.0}, {0}}};
      } else {
        // adjoint of the V2 interferometer: swapped external phases,
        // sigma-preserving internal phases with the difference negated
        c.elements = {{ElementKind::kMz,
                       {kPi / 2, kPi / 2 + phi / 2, -kPi - phi / 2 + kPi / 4,
                        -kPi - phi / 2 - kPi / 4},
                       {0}}};
      }
      break;
    default:
      throw DimensionMismatch("realize_vi: i must be in 1..6");
  }
  return c;
}

Cnot2Realization optical_cnot2(ChannelEncoding control_encoding,
                               ChannelEncoding target_encoding) {
  Cnot2Realization out;
  out.matrix = cnot2_matrix();
  if (control_encoding == ChannelEncoding::kPolarization &&
      target_encoding == ChannelEncoding::kLocation) {
    out.element = {ElementKind::kPbsCnot, {}, {0, 1}};
  } else if (control_encoding == ChannelEncoding::kLocation &&
             target_encoding == ChannelEncoding::kLocation) {
    out.element = {ElementKind::kPathSwap, {}, {0, 1}};
  } else {
    throw DimensionMismatch("optical_cnot2: unsupported encoding pair");
  }
  return out;
}

CVector simulate(const OpticalCircuit& circuit, const CVector& input) {
  const int dim = 1 << circuit.width;
  if (input.size() != dim)
    throw DimensionMismatch("simulate: input dimension mismatch");
  CVector state = input;
  for (const auto& elem : circuit.elements) {
    const CMatrix u = element_unitary(elem);
    for (int t : elem.targets)
      if (t < 0 || t >= circuit.width)
        throw DimensionMismatch("simulate: target out of range");
    if (elem.targets.size() == 1) {
      const int t = elem.targets[0];
      const CMatrix left = CMatrix::Identity(1 << t, 1 << t);
      const int rest = circuit.width - t - 1;
      const CMatrix right = CMatrix::Identity(1 << rest, 1 << rest);
      state = kron(kron(left, u), right) * state;
    } else if (elem.targets.size() == 2) {
      state = embed_pair(u, elem.targets[0] + 1, elem.targets[1] + 1,
                         circuit.width) *
              state;
    } else {
      throw DimensionMismatch("simulate: element needs 1 or 2 targets");
    }
  }
  return state;
}

CMatrix circuit_unitary(const OpticalCircuit& circuit) {
  const int dim = 1 << circuit.width;
  CMatrix u = CMatrix::Identity(dim, dim);
  for (int col = 0; col < dim; ++col) {
    CVector e = CVector::Zero(dim);
    e(col) = 1.0;
    u.col(col) = simulate(circuit, e);
  }
  return u;
}

namespace {

// One R(theta) block of the two-CNOT decomposition on channel pair (i, j),
// elements in application order. In the big-endian convention the gate
// V1 acts on the second qubit of the pair:
//   R = (V2 x V1) CNOT2 (V3 x 1) CNOT2 (V2^dag x V1^dag).
void append_r_block(OpticalCircuit& c, double theta, double phi, int ch_i,
                    int ch_j) {
  const auto enc = [&](int ch) { return c.encodings[ch]; };
  const auto cnot = [&]() {
    OpticalElement e;
    if (enc(ch_j) == ChannelEncoding::kPolarization)
      e = optical_cnot2(ChannelEncoding::kPolarization,
                        ChannelEncoding::kLocation)
              .element;
    else
      e = optical_cnot2(ChannelEncoding::kLocation, ChannelEncoding::kLocation)
              .element;
    e.targets = {ch_i, ch_j};
    return e;
  };
  append_retargeted(c, realize_vi(6, phi, theta, enc(ch_i)), ch_i);
  append_retargeted(c, realize_vi(5, phi, theta, enc(ch_j)), ch_j);
  c.elements.push_back(cnot());
  append_retargeted(c, realize_vi(3, phi, theta, enc(ch_i)), ch_i);
  c.elements.push_back(cnot());
  append_retargeted(c, realize_vi(2, phi, theta, enc(ch_i)), ch_i);
  append_retargeted(c, realize_vi(1, phi, theta, enc(ch_j)), ch_j);
}

}  // namespace

OpticalCircuit build_ybe_circuit(Side side, YbeDims dims,
                                 const AngleParameters& angles,
                                 ChannelEncoding encoding_2d) {
  OpticalCircuit c;
  if (dims == YbeDims::k2D) {
    c.width = 1;
    c.encodings = {encoding_2d};
    // LHS product A(t1) B(t2) A(t3): apply A(t3) first.
    if (side == Side::kLhs) {
      for (const auto& [g, t] :
           {std::pair{Gate2D::kA, angles.theta3},
            std::pair{Gate2D::kB, angles.theta2},
            std::pair{Gate2D::kA, angles.theta1}})
        append_retargeted(c, realize_2d(g, t, encoding_2d), 0);
    } else {
      for (const auto& [g, t] :
           {std::pair{Gate2D::kB, angles.theta1},
            std::pair{Gate2D::kA, angles.theta2},
            std::pair{Gate2D::kB, angles.theta3}})
        append_retargeted(c, realize_2d(g, t, encoding_2d), 0);
    }
    return c;
  }
  // 4D: channels (location, location, polarization) = sites 1, 2, 3.
  c.width = 3;
  c.encodings = {ChannelEncoding::kLocation, ChannelEncoding::kLocation,
                 ChannelEncoding::kPolarization};
  if (side == Side::kLhs) {
    append_r_block(c, angles.theta3, angles.phi, 0, 1);
    append_r_block(c, angles.theta2, angles.phi, 1, 2);
    append_r_block(c, angles.theta1, angles.phi, 0, 1);
  } else {
    append_r_block(c, angles.theta1, angles.phi, 1, 2);
    append_r_block(c, angles.theta2, angles.phi, 0, 1);
    append_r_block(c, angles.theta3, angles.phi, 1, 2);
  }
  return c;
}

namespace {

const std::map<ElementKind, std::string> kKindNames = {
    {ElementKind::kQwp, "QWP"},         {ElementKind::kHwp, "HWP"},
    {ElementKind::kBs, "BS"},           {ElementKind::kPs0, "PS0"},
    {ElementKind::kPs1, "PS1"},         {ElementKind::kMirror, "MIRROR"},
    {ElementKind::kHadamard, "HADAMARD"}, {ElementKind::kMz, "MZ"},
    {ElementKind::kPbsCnot, "PBS_CNOT"}, {ElementKind::kPathSwap, "PATH_SWAP"},
};

ElementKind kind_from_name(const std::string& name) {
  for (const auto& [k, n] : kKindNames)
    if (n == name) return k;
  throw DimensionMismatch("unknown element kind: " + name);
}

}  // namespace

std::string circuit_to_json(const OpticalCircuit& circuit) {
  nlohmann::json doc;
  doc["width"] = circuit.width;
  doc["encodings"] = nlohmann::json::array();
  for (auto e : circuit.encodings)
    doc["encodings"].push_back(
        e == ChannelEncoding::kPolarization ? "polarization" : "location");
  doc["elements"] = nlohmann::json::array();
  for (const auto& el : circuit.elements) {
    nlohmann::json je;
    je["kind"] = kKindNames.at(el.kind);
    je["params"] = el.params;
    je["targets"] = el.targets;
    doc["elements"].push_back(je);
  }
  return doc.dump(2) + "\n";
}

OpticalCircuit circuit_from_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  OpticalCircuit c;
  c.width = doc.at("width").get<int>();
  for (const auto& e : doc.at("encodings"))
    c.encodings.push_back(e.get<std::string>() == "polarization"
                              ? ChannelEncoding::kPolarization
                              : ChannelEncoding::kLocation);
  for (const auto& je : doc.at("elements")) {
    OpticalElement el;
    el.kind = kind_from_name(je.at("kind").get<std::string>());
    el.params = je.at("params").get<std::vector<double>>();
    el.targets = je.at("targets").get<std::vector<int>>();
    c.elements.push_back(std::move(el));
  }
  return c;
}

}  // namespace ybe
