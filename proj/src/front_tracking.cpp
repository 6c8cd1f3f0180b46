#include "shocklab/front_tracking.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "shocklab/error.hpp"

namespace shocklab {

SimState::SimState(Flux flux, TrackingOptions options)
    : flux_(std::move(flux)), options_(options) {}

FrontId SimState::emit(double t, double x, const WaveFront& w, FrontList::iterator before) {
  FrontId id = next_id_++;
  auto it = fronts_.insert(before, Front{id, t, x, w.speed, w.left, w.right});
  index_.emplace(id, it);
  history_index_.emplace(id, history_.size());
  history_.push_back({id, t, x, w.speed, w.left, w.right, std::nullopt, std::nullopt});
  return id;
}

void SimState::retire(FrontList::iterator it, double t, double x) {
  FrontRecord& rec = history_[history_index_.at(it->id)];
  rec.t_death = t;
  rec.x_death = x;
  index_.erase(it->id);
  fronts_.erase(it);
}

void SimState::schedule(FrontList::iterator left) {
  if (left == fronts_.end()) return;
  auto right = std::next(left);
  if (right == fronts_.end()) return;
  double ds = left->speed - right->speed;
  if (ds < options_.parallel_tol) return;
  double pl = left->position(t_);
  double pr = right->position(t_);
  double tc = t_ + std::max(pr - pl, 0.0) / ds;
  double xc = left->position(tc);
  queue_.insert({tc, xc, left->id, right->id});
}

bool SimState::valid(const Key& key) const {
  auto l = index_.find(std::get<2>(key));
  auto r = index_.find(std::get<3>(key));
  if (l == index_.end() || r == index_.end()) return false;
  auto next = std::next(l->second);
  return next != fronts_.end() && next->id == std::get<3>(key);
}

Collision SimState::group(const Key& key) const {
  double tc = std::get<0>(key);
  double xc = std::get<1>(key);
  auto first = index_.at(std::get<2>(key));
  auto last = index_.at(std::get<3>(key));
  while (first != fronts_.begin()) {
    auto prev = std::prev(first);
    if (std::abs(prev->position(tc) - xc) > eps_x_) break;
    first = prev;
  }
  for (auto next = std::next(last); next != fronts_.end(); ++next) {
    if (std::abs(next->position(tc) - xc) > eps_x_) break;
    last = next;
  }
  Collision c{tc, xc, {}};
  for (auto it = first;; ++it) {
    c.fronts.push_back(it->id);
    if (it == last) break;
  }
  return c;
}

void SimState::process(const Collision& c) {
  if (++event_count_ > options_.max_events) {
    throw Error(ErrorCode::EventOverflow,
                "more than " + std::to_string(options_.max_events) + " collisions");
  }
  t_ = std::max(t_, c.t);
  auto first = index_.at(c.fronts.front());
  auto last = index_.at(c.fronts.back());
  double u_l = first->left;
  double u_r = last->right;
  auto after = std::next(last);
  EventRecord rec{c.t, c.x, {}, {}};
  for (auto it = first; it != after;) {
    rec.in.push_back({it->speed, it->left, it->right});
    auto victim = it++;
    retire(victim, c.t, c.x);
  }
  WaveFan fan = solve_riemann(flux_, u_l, u_r);
  std::optional<FrontList::iterator> first_out;
  for (const WaveFront& w : fan.fronts) {
    FrontId id = emit(c.t, c.x, w, after);
    if (!first_out) first_out = index_.at(id);
  }
  rec.out = fan.fronts;
  auto left_neighbour = first_out.value_or(after);
  if (left_neighbour != fronts_.begin()) schedule(std::prev(left_neighbour));
  if (first_out) {
    for (auto it = *first_out; it != after; ++it) schedule(it);
  }
  if (options_.keep_event_log) events_.push_back(std::move(rec));
}

StepFunction SimState::profile_at(double t) const {
  std::vector<double> xs, vs{far_left_};
  xs.reserve(fronts_.size());
  vs.reserve(fronts_.size() + 1);
  double prev = -std::numeric_limits<double>::infinity();
  for (const Front& f : fronts_) {
    double x = std::max(f.position(t), prev);
    xs.push_back(x);
    vs.push_back(f.right);
    prev = x;
  }
  return StepFunction::from_pieces(std::move(xs), std::move(vs));
}

StepFunction SimState::profile() const { return profile_at(t_); }

std::optional<Collision> SimState::peek_collision() const {
  for (const Key& key : queue_) {
    if (valid(key)) return group(key);
  }
  return std::nullopt;
}

bool SimState::step(double t_limit) {
  while (!queue_.empty() && !valid(*queue_.begin())) queue_.erase(queue_.begin());
  if (queue_.empty()) return false;
  Key key = *queue_.begin();
  if (std::get<0>(key) > t_limit) return false;
  queue_.erase(queue_.begin());
  process(group(key));
  return true;
}

void SimState::set_time(double t) { t_ = std::max(t_, t); }

SimState init_state(const Flux& fl, const StepFunction& u0, TrackingOptions options) {
  SimState s(fl, options);
  const auto& js = u0.jumps();
  const auto& vs = u0.values();
  for (double v : vs) {
    if (!fl.contains(v)) {
      throw Error(ErrorCode::StateOutOfRange, "initial state outside the flux working interval");
    }
  }
  double width = js.empty() ? 1.0 : std::max(1.0, js.back() - js.front());
  s.eps_x_ = options.eps_x_rel * width;
  s.far_left_ = vs.front();
  s.initial_tv_ = u0.total_variation();
  s.min_state_ = u0.min();
  s.max_state_ = u0.max();
  for (std::size_t i = 0; i < js.size(); ++i) {
    WaveFan fan = solve_riemann(fl, vs[i], vs[i + 1]);
    for (const WaveFront& w : fan.fronts) s.emit(0.0, js[i], w, s.fronts_.end());
  }
  for (auto it = s.fronts_.begin(); it != s.fronts_.end(); ++it) s.schedule(it);
  return s;
}

std::optional<Collision> next_event(const SimState& s) { return s.peek_collision(); }

StepFunction advance(SimState& s, double t_target) {
  while (s.step(t_target)) {
  }
  s.set_time(t_target);
  return s.profile();
}

std::optional<std::size_t> separating_front(const SimState& s, const StateRange& left,
                                            const StateRange& right) {
  std::vector<Front> fs = s.fronts();
  if (fs.empty() || !left.contains(fs.front().left)) return std::nullopt;
  std::size_t j = 0;
  while (j < fs.size() && left.contains(fs[j].right)) ++j;
  if (j == fs.size()) return std::nullopt;
  for (std::size_t k = j; k < fs.size(); ++k) {
    if (!right.contains(fs[k].right)) return std::nullopt;
  }
  return j;
}

EmergenceTracker::EmergenceTracker(StateRange left_range, StateRange right_range) {
  rep_.left_range = left_range;
  rep_.right_range = right_range;
}

void EmergenceTracker::observe(const SimState& s, bool after_event) {
  auto j = separating_front(s, rep_.left_range, rep_.right_range);
  if (!j) {
    since_.reset();
    return;
  }
  Front f = s.fronts()[*j];
  if (!since_) {
    since_ = s.time();
    rep_.r_samples.clear();
    rep_.post_speeds.clear();
    rep_.post_events_checked = 0;
  } else if (after_event) {
    ++rep_.post_events_checked;
  }
  rep_.r_samples.push_back({s.time(), f.position(s.time())});
  if (rep_.post_speeds.empty() || rep_.post_speeds.back() != f.speed) {
    rep_.post_speeds.push_back(f.speed);
  }
}

EmergenceReport EmergenceTracker::finish(const SimState& s, double horizon) {
  EmergenceReport out = rep_;
  out.horizon = horizon;
  out.events = s.event_count();
  if (since_) {
    auto j = separating_front(s, out.left_range, out.right_range);
    Front f = s.fronts()[*j];
    if (out.r_samples.back().t < s.time()) out.r_samples.push_back({s.time(), f.position(s.time())});
    out.emerged = true;
    out.T0 = *since_;
    out.x0 = out.r_samples.front().x;
  } else {
    out.r_samples.clear();
    out.post_speeds.clear();
    out.post_events_checked = 0;
  }
  return out;
}

EmergenceReport run_until_single_front(SimState& s, const StateRange& left_range,
                                       const StateRange& right_range, double t_max) {
  if (!(t_max > 0.0)) throw Error(ErrorCode::NonPositiveTime, "horizon must be positive");
  EmergenceTracker tracker(left_range, right_range);
  tracker.observe(s, false);
  while (s.step(t_max)) tracker.observe(s, true);
  s.set_time(t_max);
  return tracker.finish(s, t_max);
}

}  // namespace shocklab
