#include "rqc/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rqc {

namespace {

MeasureSet measures_at(const XStateParams& initial, const NoiseModel& noise, double t) {
  return measures(evolve_state(initial, lambda_of_t(noise, t)));
}

double margin_at(const XStateParams& initial, const NoiseModel& noise, double t) {
  return concurrence_margin(evolve_state(initial, lambda_of_t(noise, t)));
}

template <class F>
std::pair<double, double> golden_max(F&& f, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int i = 0; i < 200 && hi - lo > 1e-13; ++i) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    }
  }
  const double t = 0.5 * (lo + hi);
  return {t, f(t)};
}

// Root of f on [lo, hi] given f(lo) > 0 >= f(hi).
template <class F>
double bisect_down(F&& f, double lo, double hi) {
  for (int i = 0; i < 200 && hi - lo > 1e-13; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0 ? lo : hi) = mid;
  }
  return hi;
}

double row_value(Measure m, const TrajectoryRow& r) {
  switch (m) {
    case Measure::Concurrence: return r.concurrence;
    case Measure::Laqc: return r.laqc;
    case Measure::Qs: return r.qs;
    case Measure::Cs: return r.cs;
  }
  return 0.0;
}

void scan_peaks(Measure m, const XStateParams& initial, const NoiseModel& noise,
                std::span<const TrajectoryRow> rows, const std::vector<double>& deaths,
                const EventOptions& opt, std::vector<EventRecord>& out) {
  if (deaths.empty()) return;
  for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
    const double prev = row_value(m, rows[i - 1]);
    const double cur = row_value(m, rows[i]);
    const double next = row_value(m, rows[i + 1]);
    if (!(prev < cur && cur >= next)) continue;
    const auto [tp, vp] = golden_max(
        [&](double t) { return measure_value(m, measures_at(initial, noise, t)); },
        rows[i - 1].t, rows[i + 1].t);
    if (vp > opt.revival_threshold && deaths.front() < tp) {
      out.push_back({EventKind::RevivalPeak, m, tp, vp});
    }
  }
}

}  // namespace

void Grid::validate() const {
  if (count < 2) throw InvalidInput("grid count must be >= 2");
  if (!(min < max)) throw InvalidInput("grid requires min < max");
}

std::vector<double> Grid::points() const {
  validate();
  std::vector<double> pts(static_cast<std::size_t>(count));
  const double step = (max - min) / (count - 1);
  for (int i = 0; i < count; ++i) pts[static_cast<std::size_t>(i)] = min + i * step;
  pts.back() = max;
  return pts;
}

std::string_view measure_name(Measure m) {
  switch (m) {
    case Measure::Concurrence: return "concurrence";
    case Measure::Laqc: return "laqc";
    case Measure::Qs: return "qs";
    case Measure::Cs: return "cs";
  }
  return "unknown";
}

std::optional<Measure> parse_measure(std::string_view name) {
  if (name == "concurrence" || name == "C") return Measure::Concurrence;
  if (name == "laqc" || name == "L") return Measure::Laqc;
  if (name == "qs" || name == "Qs") return Measure::Qs;
  if (name == "cs" || name == "Cs") return Measure::Cs;
  return std::nullopt;
}

double measure_value(Measure m, const MeasureSet& set) {
  switch (m) {
    case Measure::Concurrence: return set.concurrence;
    case Measure::Laqc: return set.laqc;
    case Measure::Qs: return set.qs;
    case Measure::Cs: return set.cs;
  }
  return 0.0;
}

std::string_view event_kind_name(EventKind k) {
  switch (k) {
    case EventKind::SuddenDeath: return "sudden_death";
    case EventKind::RevivalPeak: return "revival_peak";
    case EventKind::Asymptotic: return "asymptotic";
  }
  return "unknown";
}

XStateParams evolve_state(const XStateParams& p, double lambda) {
  require_valid(p);
  if (!(std::abs(lambda) <= 1.0 + kStructuralTol)) throw InvalidInput("|Lambda| must be <= 1");
  const double l2 = std::min(1.0, lambda * lambda);
  return {p.a, p.b, p.c, p.d, l2 * p.r, l2 * p.s};
}

std::vector<TrajectoryRow> trajectory(const XStateParams& state, const NoiseModel& noise,
                                      const Grid& time) {
  require_valid(state);
  validate_noise(noise);
  if (time.min < 0.0) throw InvalidInput("time grid must start at t >= 0");
  std::vector<TrajectoryRow> rows;
  for (double t : time.points()) {
    const double lambda = lambda_of_t(noise, t);
    const MeasureSet m = measures(evolve_state(state, lambda));
    rows.push_back({t, lambda, m.concurrence, m.laqc, m.qs, m.cs});
  }
  return rows;
}

std::vector<EventRecord> detect_events(const XStateParams& initial, const NoiseModel& noise,
                                       std::span<const TrajectoryRow> rows,
                                       const EventOptions& opt) {
  if (rows.size() < 3) throw InvalidInput("event detection needs at least 3 trajectory rows");
  require_valid(initial);
  const double t_first = rows.front().t;
  const double t_last = rows.back().t;

  std::vector<double> zeros;
  if (t_last > 0.0) {
    for (double z : lambda_zeros(noise, t_last))
      if (z >= t_first) zeros.push_back(z);
  }
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    if (rows[i].lambda * rows[i + 1].lambda >= 0.0) continue;
    const bool bracketed = std::any_of(zeros.begin(), zeros.end(), [&](double z) {
      return z >= rows[i].t - 1e-12 && z <= rows[i + 1].t + 1e-12;
    });
    if (!bracketed) {
      throw NumericError("Lambda changes sign near t=" + std::to_string(rows[i].t) +
                         " with no computed zero");
    }
  }

  std::vector<EventRecord> events;
  std::vector<std::vector<double>> deaths(4);

  for (Measure m : {Measure::Laqc, Measure::Qs}) {
    auto& d = deaths[static_cast<std::size_t>(m)];
    double prev = t_first;
    for (double z : zeros) {
      const double value = measure_value(m, measures_at(initial, noise, z));
      const double before = measure_value(m, measures_at(initial, noise, 0.5 * (prev + z)));
      if (value < opt.death_tol && before > opt.death_tol) {
        events.push_back({EventKind::SuddenDeath, m, z, value});
        d.push_back(z);
      }
      prev = z;
    }
  }

  {
    auto& d = deaths[static_cast<std::size_t>(Measure::Concurrence)];
    const auto margin = [&](double t) { return margin_at(initial, noise, t); };
    double m_prev = concurrence_margin(evolve_state(initial, rows.front().lambda));
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
      const double m_next = concurrence_margin(evolve_state(initial, rows[i + 1].lambda));
      if (m_prev > 0.0 && m_next <= 0.0) {
        const double t = bisect_down(margin, rows[i].t, rows[i + 1].t);
        events.push_back({EventKind::SuddenDeath, Measure::Concurrence, t,
                          std::max(0.0, margin(t))});
        d.push_back(t);
      }
      m_prev = m_next;
    }
  }

  for (Measure m : {Measure::Concurrence, Measure::Laqc, Measure::Qs}) {
    const auto& d = deaths[static_cast<std::size_t>(m)];
    scan_peaks(m, initial, noise, rows, d, opt, events);
    const double v0 = row_value(m, rows.front());
    if (d.empty() && v0 > opt.death_tol) {
      events.push_back({EventKind::Asymptotic, m, t_last, row_value(m, rows.back())});
    }
  }

  std::stable_sort(events.begin(), events.end(),
                   [](const EventRecord& x, const EventRecord& y) { return x.t < y.t; });
  return events;
}

std::vector<SurfacePoint> surface(const SweepSpec& spec, Measure measure_a, Measure measure_b) {
  validate_noise(spec.noise);
  const auto params = spec.param.points();
  const auto times = spec.time.points();
  if (spec.time.min < 0.0) throw InvalidInput("time grid must start at t >= 0");
  std::vector<double> lambdas;
  lambdas.reserve(times.size());
  for (double t : times) lambdas.push_back(lambda_of_t(spec.noise, t));

  std::vector<SurfacePoint> out;
  out.reserve(params.size() * times.size());
  for (double p : params) {
    const XStateParams s = make_state({spec.family, p});
    for (std::size_t k = 0; k < times.size(); ++k) {
      const MeasureSet m = measures(evolve_state(s, lambdas[k]));
      out.push_back({p, times[k], measure_value(measure_a, m) - measure_value(measure_b, m)});
    }
  }
  return out;
}

}  // namespace rqc
