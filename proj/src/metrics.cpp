#include "sagvne/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace sagvne {

Res embedding_cost(const Vnr& vnr, const Embedding& emb) {
  Res cost = 0;
  for (const auto& nd : vnr.nodes) cost += nd.cpu_demand;
  for (const auto& p : emb.paths) {
    const auto& vl = vnr.links[static_cast<std::size_t>(p.vlink)];
    cost += vl.bw_demand * static_cast<Res>(p.links.size());
  }
  return cost;
}

Res embedding_revenue(const Vnr& vnr) {
  Res revenue = 0;
  for (const auto& nd : vnr.nodes) revenue += nd.cpu_demand;
  for (const auto& l : vnr.links) revenue += l.bw_demand;
  return revenue;
}

double long_term_average_revenue(const MetricsTimeSeries& s) {
  if (s.empty() || s.back().time <= 0.0) return 0.0;
  return static_cast<double>(s.back().cum_revenue) / s.back().time;
}

double revenue_cost_ratio(const MetricsTimeSeries& s) {
  if (s.empty() || s.back().cum_cost == 0) return 1.0;
  return static_cast<double>(s.back().cum_revenue) / static_cast<double>(s.back().cum_cost);
}

double acceptance_rate(const MetricsTimeSeries& s) {
  if (s.empty() || s.back().arrived == 0) return 1.0;
  return static_cast<double>(s.back().accepted) / static_cast<double>(s.back().arrived);
}

MetricsCollector::MetricsCollector(double interval) : interval_(interval) {
  if (!(interval > 0.0)) throw std::invalid_argument("sample interval must be > 0");
}

void MetricsCollector::on_accept(Res revenue, Res cost) {
  ++accepted_;
  cum_revenue_ += revenue;
  cum_cost_ += cost;
}

void MetricsCollector::emit(double t) {
  series_.samples.push_back({t, cum_revenue_, cum_cost_, arrived_, accepted_});
}

void MetricsCollector::advance_before(double t) {
  while (static_cast<double>(next_tick_) * interval_ < t) {
    emit(static_cast<double>(next_tick_) * interval_);
    ++next_tick_;
  }
}

void MetricsCollector::finish(double end_time) {
  advance_before(end_time);
  if (end_time > 0.0) {
    emit(static_cast<double>(next_tick_) * interval_);
    ++next_tick_;
  }
}

namespace {

double sample_avg_revenue(const MetricsSample& s) {
  return s.time > 0.0 ? static_cast<double>(s.cum_revenue) / s.time : 0.0;
}

double sample_rc(const MetricsSample& s) {
  return s.cum_cost != 0 ? static_cast<double>(s.cum_revenue) / static_cast<double>(s.cum_cost)
                         : 1.0;
}

double sample_acc(const MetricsSample& s) {
  return s.arrived != 0 ? static_cast<double>(s.accepted) / static_cast<double>(s.arrived) : 1.0;
}

}  // namespace

void write_metrics_csv(const MetricsTimeSeries& s, std::ostream& out) {
  out << "time,cum_revenue,cum_cost,arrived,accepted,avg_revenue,rc_ratio,acceptance\n";
  char buf[256];
  for (const auto& sample : s.samples) {
    std::snprintf(buf, sizeof buf, "%.6f,%lld,%lld,%d,%d,%.9f,%.9f,%.9f\n", sample.time,
                  static_cast<long long>(sample.cum_revenue),
                  static_cast<long long>(sample.cum_cost), sample.arrived, sample.accepted,
                  sample_avg_revenue(sample), sample_rc(sample), sample_acc(sample));
    out << buf;
  }
}

MetricsTimeSeries read_metrics_csv(std::istream& in) {
  MetricsTimeSeries out;
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("metrics csv: missing header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    MetricsSample s;
    long long rev = 0, cost = 0;
    double avg = 0, rc = 0, acc = 0;
    if (std::sscanf(line.c_str(), "%lf,%lld,%lld,%d,%d,%lf,%lf,%lf", &s.time, &rev, &cost,
                    &s.arrived, &s.accepted, &avg, &rc, &acc) != 8)
      throw std::invalid_argument("metrics csv: malformed row: " + line);
    s.cum_revenue = rev;
    s.cum_cost = cost;
    out.samples.push_back(s);
  }
  return out;
}

}  // namespace sagvne
