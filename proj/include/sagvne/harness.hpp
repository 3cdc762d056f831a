#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sagvne/baselines.hpp"
#include "sagvne/config.hpp"
#include "sagvne/embedder.hpp"
#include "sagvne/metrics.hpp"

namespace sagvne {

enum class Algorithm { Drl, Nrm, Rcr };
const char* to_string(Algorithm a);
Algorithm algorithm_from_string(const std::string& s);

// Substrate plus the train/test request split, ready for repeated runs.
// `pristine` restores the full ledger between runs; test arrivals are
// rebased so the test phase's clock starts near zero.
struct World {
  SubstrateNetwork net;
  LedgerSnapshot pristine;
  std::vector<Vnr> train_set;
  std::vector<Vnr> test_set;
};

World build_world(const SimulationConfig& cfg);

struct EpochStats {
  double avg_revenue = 0.0;
  double acceptance = 0.0;
  double rc_ratio = 0.0;
};

struct TrainResult {
  PolicyParams params;
  std::vector<EpochStats> curves;  // one entry per epoch
};

// One epoch replays the training arrivals/departures with stochastic node
// selection, updating the parameters after every batch of requests.
TrainResult train_on(World& world, const SimulationConfig& cfg);
TrainResult train(const SimulationConfig& cfg);

struct TestOptions {
  bool validate_accepted = false;   // check each acceptance against the pre-apply ledger
  std::ostream* trace = nullptr;    // one line per request when set
};

struct TestResult {
  MetricsTimeSeries series;
  int violations = 0;  // populated when validate_accepted is set
};

// Replays the test set's event stream: arrivals embed with the chosen
// algorithm (greedy node selection for Drl), departures release. `params`
// is required for Algorithm::Drl. Deterministic for a given (cfg, params).
TestResult run_test(World& world, const SimulationConfig& cfg, Algorithm algo,
                    const PolicyParams* params, const TestOptions& opts = {});

MetricsTimeSeries test(const SimulationConfig& cfg, const PolicyParams& params,
                       Algorithm algo);

struct RunReport {
  std::vector<std::pair<std::string, std::string>> config_echo;
  std::vector<EpochStats> train_curves;
  std::map<std::string, MetricsTimeSeries> test_series;  // keyed by algorithm name

  struct Summary {
    double avg_revenue = 0.0;
    double acceptance = 0.0;
    double rc_ratio = 0.0;
    Res final_cum_revenue = 0;
  };
  std::map<std::string, Summary> summaries;
};

RunReport::Summary summarize(const MetricsTimeSeries& s);

// Trains the policy, then runs drl/nrm/rcr on the same substrate, test set
// and seed.
RunReport compare(const SimulationConfig& cfg);

void write_report_json(const RunReport& report, const std::filesystem::path& file);

// Presentation only: one SVG per indicator (training curves, average
// revenue, acceptance rate, revenue-cost ratio, algorithm comparison).
void emit_plots(const RunReport& report, const std::filesystem::path& out_dir);

// Normalized observation of the pristine substrate as CSV (debug aid).
void write_feature_csv(const SubstrateNetwork& net, std::ostream& out);

}  // namespace sagvne
