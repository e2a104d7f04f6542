#pragma once

#include <map>
#include <string>
#include <vector>

#include "spikedet/errors.hpp"

namespace spikedet {

enum class NeuronKind { Sensor, Simple, Combined, Relay };

// Which detection half a neuron belongs to. Sensors are shared (None).
enum class Subcircuit { L2R, R2L, None };

enum class CircuitFamily { Bidirectional, PrototypeL2R, PrototypeR2L, PrototypePair };

const char* to_string(NeuronKind k);
const char* to_string(Subcircuit s);
const char* to_string(CircuitFamily f);

struct NeuronParams {
  double tau = 1.0;    // membrane decay time constant [s], > 0
  double theta = 1.0;  // firing threshold, > 0
  double t_ref = 0.0;  // refractory period [s], >= 0
};

struct NeuronSpec {
  int id = 0;
  NeuronKind kind = NeuronKind::Sensor;
  Subcircuit subcircuit = Subcircuit::None;
  int index = 0;  // position along the sensor row (pair index for detectors)
  NeuronParams params;
};

struct ConnectionSpec {
  int src = 0;
  int dst = 0;
  double weight = 0.0;  // > 0 excitatory, < 0 inhibitory
  double delay = 0.0;   // propagation latency [s], >= 0
};

// The tuned latencies of one detector circuit plus the design point they
// encode. The tuning rule is delta_rb - delta_lb = spacing / design_velocity;
// tune_delays() is the constructor that guarantees it.
struct DelayPlan {
  double delta_e = 0.05;         // sensor -> first-stage excitatory delay [s]
  double delta_i = 0.05;         // sensor -> first-stage inhibitory delay [s]
  double delta_lb = 0.01;        // short branch into a combined neuron [s]
  double delta_rb = 0.21;        // long branch into a combined neuron [s]
  double spacing = 0.1;          // adjacent sensor spacing [m]
  double design_velocity = 0.5;  // object speed the plan is tuned for [m/s]
};

// Per-kind neuron parameters and connection weights used by the builders.
// Defaults satisfy validate() over v in [0.1, 2.0] with wide margins.
struct KindParams {
  NeuronParams sensor{1.0, 1.0, 0.0};
  NeuronParams simple{1.0, 1.0, 0.3};
  NeuronParams combined{0.05, 1.8, 0.3};
  NeuronParams relay{0.05, 1.0, 0.3};
  double excitatory_weight = 1.0;
  double inhibitory_weight = 2.0;  // magnitude; stored negated on connections
};

struct CircuitSpec {
  std::vector<NeuronSpec> neurons;
  std::vector<ConnectionSpec> connections;
  int n_sensors = 0;
  DelayPlan plan;
  CircuitFamily family = CircuitFamily::Bidirectional;
};

struct NeuronCountReport {
  int sensors = 0;
  int detector_neurons = 0;  // everything that is not a Sensor
  std::map<NeuronKind, int> by_kind;
};

enum class ViolationKind { Structure, Blocking, Window, Plan };

struct Violation {
  ViolationKind kind;
  std::string message;
};

// delta_rb = delta_lb + spacing / design_velocity; all arguments must be > 0.
DelayPlan tune_delays(double spacing, double design_velocity, double delta_lb,
                      double delta_e, double delta_i);

// Symmetric two-stage detector: per subcircuit, one simple neuron per
// adjacent sensor pair and one combined neuron per adjacent simple pair.
// In the L2R half the left simple neuron feeds its combined neuron through
// the long branch (delta_rb); the R2L half is the mirror image.
// Detector neuron count is 2(2n-3). Requires n_sensors >= 3.
CircuitSpec build_bidirectional(int n_sensors, const DelayPlan& plan,
                                const KindParams& params = {});

// Single-direction 3-stage prototype: per adjacent sensor pair one relay
// neuron fed by the trailing sensor, one combined neuron fed by the relay
// (short branch) and by the leading sensor through one long connection of
// delay delta_e + spacing/design_velocity + delta_lb. No inhibition.
// Detector neuron count is 2(n-1). Requires n_sensors >= 2.
CircuitSpec build_prototype(int n_sensors, Subcircuit direction, const DelayPlan& plan,
                            const KindParams& params = {});

// Both prototype directions mounted on one shared sensor row; 4(n-1)
// detector neurons.
CircuitSpec build_prototype_pair(int n_sensors, const DelayPlan& plan,
                                 const KindParams& params = {});

// Counting convention: detector_neurons excludes sensors.
NeuronCountReport neuron_count(const CircuitSpec& circuit);

// Static checks over the velocity range [v_min, v_max] (which must contain
// the plan's design velocity):
//   Structure - graph and parameter invariants
//   Blocking  - wrong-direction simple neurons stay below threshold
//   Window    - coincidence window is sane and < 2*spacing/v_max
//   Plan      - positive latencies and the tuning rule itself
// Returns all violations found; empty means the circuit passes.
std::vector<Violation> validate(const CircuitSpec& circuit, double v_min, double v_max);

// Maximum arrival-time difference that still fires a combined neuron fed by
// two inputs of weight w: eps = tau * ln(w / (theta - w)). Requires
// w < theta <= 2w.
double coincidence_window(double input_weight, double tau, double theta);

// Window of the circuit's combined stage, read off the constructed graph.
double coincidence_window(const CircuitSpec& circuit);

// Deterministic text netlist: "N <id> <kind> <subcircuit> <index> <tau>
// <theta> <t_ref>" and "C <src> <dst> <weight> <delay>" lines, sorted by id
// then (src, dst).
std::string to_netlist(const CircuitSpec& circuit);

}  // namespace spikedet
