#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sagvne/substrate.hpp"
#include "sagvne/vnr.hpp"

namespace sagvne {

// Flat experiment configuration. Every field is addressable by its name in
// `key = value` config files and as a CLI flag of the same name.
struct SimulationConfig {
  // substrate
  int space_nodes = 10, air_nodes = 30, ground_nodes = 60;
  int space_links = 30, air_links = 140, ground_links = 424;
  int inter_links_per_pair = 2;
  Res space_cpu_min = 20, space_cpu_max = 40;
  Res air_cpu_min = 20, air_cpu_max = 40;
  Res ground_cpu_min = 50, ground_cpu_max = 100;
  Res bw_min = 50, bw_max = 100;
  Res space_delay_min = 20, space_delay_max = 40;
  Res air_delay_min = 10, air_delay_max = 30;
  Res ground_delay_min = 1, ground_delay_max = 20;
  Res inter_delay_min = 40, inter_delay_max = 60;

  // requests
  int vnr_count = 2000;
  int train_count = 1000;
  int vnodes_min = 2, vnodes_max = 10;
  Res vcpu_min = 1, vcpu_max = 20;
  Res vbw_min = 1, vbw_max = 20;
  Res delay_cap = 50;
  double vlink_prob = 0.5;
  std::string domain_choice = "proportional";  // or "uniform"
  double arrival_rate = 0.04;
  double mean_lifetime = 1000.0;

  // training
  int epochs = 50;
  int batch_size = 100;
  double learning_rate = 0.005;

  // simulation
  double period_t = 50000.0;
  double sample_interval = 100.0;
  std::int64_t seed = 1;

  SubstrateConfig substrate_config() const;
  VnrConfig vnr_config() const;
  void validate() const;  // throws std::invalid_argument
};

using ConfigMember = std::variant<int SimulationConfig::*, Res SimulationConfig::*,
                                  double SimulationConfig::*, std::string SimulationConfig::*>;

struct ConfigField {
  const char* name;
  ConfigMember member;
};

// One entry per SimulationConfig field, in declaration order.
const std::vector<ConfigField>& config_fields();

// Parses and assigns one field; throws std::invalid_argument on an unknown
// key or malformed value.
void set_config_value(SimulationConfig& cfg, const std::string& key,
                      const std::string& value);

std::string get_config_value(const SimulationConfig& cfg, const std::string& key);

// `key = value` lines; '#' starts a comment; blank lines ignored.
void load_config_file(SimulationConfig& cfg, const std::filesystem::path& file);

std::vector<std::pair<std::string, std::string>> dump_config(const SimulationConfig& cfg);

}  // namespace sagvne
