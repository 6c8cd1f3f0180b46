#pragma once

#include <cstdint>
#include <list>
#include <optional>
#include <set>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "shocklab/flux.hpp"
#include "shocklab/riemann.hpp"
#include "shocklab/step_function.hpp"

namespace shocklab {

using FrontId = std::uint64_t;

// A front travels on x = x0 + speed * (t - t0) between its birth and death.
struct Front {
  FrontId id;
  double t0;
  double x0;
  double speed;
  double left;
  double right;

  double position(double t) const { return x0 + speed * (t - t0); }
};

struct FrontRecord {
  FrontId id;
  double t_birth;
  double x_birth;
  double speed;
  double left;
  double right;
  std::optional<double> t_death;
  std::optional<double> x_death;
};

struct Collision {
  double t;
  double x;
  std::vector<FrontId> fronts;  // left to right
};

struct EventRecord {
  double t;
  double x;
  std::vector<WaveFront> in;
  std::vector<WaveFront> out;
};

struct TrackingOptions {
  double eps_x_rel = 1e-9;      // grouping tolerance relative to the domain width
  double eps_t = 1e-12;
  double parallel_tol = 1e-14;  // speed gap below which fronts never meet
  std::size_t max_events = 1000000;
  bool keep_event_log = true;
};

class SimState {
 public:
  SimState(Flux flux, TrackingOptions options);

  double time() const { return t_; }
  const Flux& flux() const { return flux_; }
  const TrackingOptions& options() const { return options_; }
  std::vector<Front> fronts() const { return {fronts_.begin(), fronts_.end()}; }
  std::size_t front_count() const { return fronts_.size(); }
  std::size_t event_count() const { return event_count_; }
  const std::vector<EventRecord>& events() const { return events_; }
  const std::vector<FrontRecord>& history() const { return history_; }
  double initial_tv() const { return initial_tv_; }
  double min_state() const { return min_state_; }
  double max_state() const { return max_state_; }

  StepFunction profile() const;
  StepFunction profile_at(double t) const;  // t must not pass the next event
  std::optional<Collision> peek_collision() const;
  // Processes the earliest collision if it happens no later than t_limit.
  bool step(double t_limit);
  void set_time(double t);

 private:
  friend SimState init_state(const Flux& fl, const StepFunction& u0, TrackingOptions options);

  using FrontList = std::list<Front>;
  using Key = std::tuple<double, double, FrontId, FrontId>;

  FrontId emit(double t, double x, const WaveFront& w, FrontList::iterator before);
  void retire(FrontList::iterator it, double t, double x);
  void schedule(FrontList::iterator left);
  bool valid(const Key& key) const;
  Collision group(const Key& key) const;
  void process(const Collision& c);

  Flux flux_;
  TrackingOptions options_;
  double eps_x_ = 1e-9;
  double t_ = 0.0;
  double far_left_ = 0.0;
  FrontList fronts_;
  std::unordered_map<FrontId, FrontList::iterator> index_;
  std::set<Key> queue_;
  std::vector<EventRecord> events_;
  std::vector<FrontRecord> history_;
  std::unordered_map<FrontId, std::size_t> history_index_;
  FrontId next_id_ = 0;
  std::size_t event_count_ = 0;
  double initial_tv_ = 0.0;
  double min_state_ = 0.0;
  double max_state_ = 0.0;
};

SimState init_state(const Flux& fl, const StepFunction& u0, TrackingOptions options = {});

std::optional<Collision> next_event(const SimState& s);

StepFunction advance(SimState& s, double t_target);

struct StateRange {
  double lo;
  double hi;
  bool contains(double u) const { return u >= lo && u <= hi; }
  bool operator==(const StateRange&) const = default;
};

struct TimePoint {
  double t;
  double x;
};

struct EmergenceReport {
  bool emerged = false;
  double T0 = 0.0;
  double x0 = 0.0;
  std::vector<TimePoint> r_samples;
  std::vector<double> post_speeds;  // speeds of the separating front after T0
  StateRange left_range{0.0, 0.0};
  StateRange right_range{0.0, 0.0};
  double horizon = 0.0;
  std::size_t events = 0;
  std::size_t post_events_checked = 0;
  std::optional<double> T_tilde;
  std::optional<double> gamma;
};

// Index of the front separating left_range states from right_range states, if any.
std::optional<std::size_t> separating_front(const SimState& s, const StateRange& left,
                                            const StateRange& right);

// Watches a simulation event by event and records the earliest time after
// which a separating front persists.
class EmergenceTracker {
 public:
  EmergenceTracker(StateRange left_range, StateRange right_range);
  // Call once before stepping and after every processed event.
  void observe(const SimState& s, bool after_event);
  EmergenceReport finish(const SimState& s, double horizon);

 private:
  EmergenceReport rep_;
  std::optional<double> since_;
};

EmergenceReport run_until_single_front(SimState& s, const StateRange& left_range,
                                       const StateRange& right_range, double t_max);

}  // namespace shocklab
