#pragma once

#include <iosfwd>
#include <vector>

#include "sagvne/embedding.hpp"
#include "sagvne/vnr.hpp"

namespace sagvne {

// Sum of CPU demands plus, per virtual link, bandwidth demand times the
// substrate path's hop count.
Res embedding_cost(const Vnr& vnr, const Embedding& emb);

// Sum of CPU demands plus sum of bandwidth demands.
Res embedding_revenue(const Vnr& vnr);

struct MetricsSample {
  double time = 0.0;
  Res cum_revenue = 0;
  Res cum_cost = 0;
  int arrived = 0;
  int accepted = 0;
};

struct MetricsTimeSeries {
  std::vector<MetricsSample> samples;

  bool empty() const { return samples.empty(); }
  const MetricsSample& back() const { return samples.back(); }
};

// Final cum_revenue / time; 0 before any sample exists.
double long_term_average_revenue(const MetricsTimeSeries& s);
// Final cum_revenue / cum_cost; 1 while no cost has been booked.
double revenue_cost_ratio(const MetricsTimeSeries& s);
// Final accepted / arrived; 1 while nothing has arrived.
double acceptance_rate(const MetricsTimeSeries& s);

// Accumulates arrivals/acceptances and emits samples on a fixed grid of
// simulation times (interval, 2*interval, ...).
class MetricsCollector {
 public:
  explicit MetricsCollector(double interval);

  void on_arrival() { ++arrived_; }
  void on_accept(Res revenue, Res cost);

  // Emits every pending grid sample strictly before `t`. Call before
  // processing an event at time `t` so samples at a grid point reflect all
  // events up to and including that point.
  void advance_before(double t);

  // Emits grid samples through the first grid point at or after `end_time`.
  void finish(double end_time);

  const MetricsTimeSeries& series() const { return series_; }

 private:
  void emit(double t);

  double interval_;
  long long next_tick_ = 1;
  Res cum_revenue_ = 0;
  Res cum_cost_ = 0;
  int arrived_ = 0;
  int accepted_ = 0;
  MetricsTimeSeries series_;
};

// Fixed schema:
//   time,cum_revenue,cum_cost,arrived,accepted,avg_revenue,rc_ratio,acceptance
void write_metrics_csv(const MetricsTimeSeries& s, std::ostream& out);
MetricsTimeSeries read_metrics_csv(std::istream& in);

}  // namespace sagvne
