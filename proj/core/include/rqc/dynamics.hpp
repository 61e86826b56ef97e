#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rqc/correlations.hpp"
#include "rqc/families.hpp"
#include "rqc/noise.hpp"

namespace rqc {

/// Inclusive uniform grid of `count` points on [min, max].
struct Grid {
  double min = 0.0;
  double max = 3.0;
  int count = 600;

  void validate() const;
  std::vector<double> points() const;
};

enum class Measure { Concurrence, Laqc, Qs, Cs };

std::string_view measure_name(Measure m);
std::optional<Measure> parse_measure(std::string_view name);
double measure_value(Measure m, const MeasureSet& set);

/// State after the common dephasing bath with channel parameter lambda. The
/// coherences r and s scale by lambda^2, which is evolve_bloch in these
/// coordinates.
XStateParams evolve_state(const XStateParams& p, double lambda);

struct TrajectoryRow {
  double t = 0.0;
  double lambda = 1.0;
  double concurrence = 0.0;
  double laqc = 0.0;
  double qs = 0.0;
  double cs = 0.0;
};

std::vector<TrajectoryRow> trajectory(const XStateParams& state, const NoiseModel& noise,
                                      const Grid& time);

enum class EventKind { SuddenDeath, RevivalPeak, Asymptotic };

std::string_view event_kind_name(EventKind k);

struct EventRecord {
  EventKind kind = EventKind::SuddenDeath;
  Measure measure = Measure::Laqc;
  double t = 0.0;
  double value = 0.0;
};

struct EventOptions {
  // Peaks at or below this height are indistinguishable from the decayed envelope.
  double revival_threshold = 1e-4;
  // A measure below this is dead.
  double death_tol = 1e-9;
};

/// Sudden deaths and revivals of concurrence, LAQC and Qs along a trajectory.
///
/// LAQC and Qs can only die where Lambda vanishes, so their death times are
/// the bisection-polished zeros of Lambda (checked against the sign pattern of
/// the sampled Lambda column). Concurrence dies where its margin changes sign,
/// located by bisection between samples. Revival peaks come from a 3-point
/// scan refined by golden-section search and are reported only after a death
/// of the same measure and above the revival threshold. A measure that starts
/// positive and never dies gets one `Asymptotic` record at the last sample.
///
/// Events are returned ordered by time. Throws InvalidInput for fewer than 3
/// rows and NumericError if the sampled Lambda changes sign with no zero in
/// between.
std::vector<EventRecord> detect_events(const XStateParams& initial, const NoiseModel& noise,
                                       std::span<const TrajectoryRow> rows,
                                       const EventOptions& options = {});

struct SweepSpec {
  Family family = Family::Werner;
  Grid param{0.0, 1.0, 200};
  NoiseModel noise = RtnNoise{};
  Grid time{0.0, 3.0, 600};
};

struct SurfacePoint {
  double param = 0.0;
  double t = 0.0;
  double value = 0.0;
};

/// measure_a - measure_b over the (param, t) grid, param-major.
std::vector<SurfacePoint> surface(const SweepSpec& spec, Measure measure_a, Measure measure_b);

}  // namespace rqc
