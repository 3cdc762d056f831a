#include "sagvne/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace sagvne {

SubstrateConfig SimulationConfig::substrate_config() const {
  SubstrateConfig sc;
  sc.space = {space_nodes, space_links, {space_cpu_min, space_cpu_max},
              {space_delay_min, space_delay_max}};
  sc.air = {air_nodes, air_links, {air_cpu_min, air_cpu_max}, {air_delay_min, air_delay_max}};
  sc.ground = {ground_nodes, ground_links, {ground_cpu_min, ground_cpu_max},
               {ground_delay_min, ground_delay_max}};
  sc.bandwidth = {bw_min, bw_max};
  sc.inter_links_per_pair = inter_links_per_pair;
  sc.inter_delay = {inter_delay_min, inter_delay_max};
  return sc;
}

VnrConfig SimulationConfig::vnr_config() const {
  VnrConfig vc;
  vc.count = vnr_count;
  vc.nodes_min = vnodes_min;
  vc.nodes_max = vnodes_max;
  vc.cpu = {vcpu_min, vcpu_max};
  vc.bw = {vbw_min, vbw_max};
  vc.delay_cap = delay_cap;
  vc.link_prob = vlink_prob;
  if (domain_choice == "proportional")
    vc.domain_choice = VnrConfig::DomainChoice::Proportional;
  else if (domain_choice == "uniform")
    vc.domain_choice = VnrConfig::DomainChoice::Uniform;
  else
    throw std::invalid_argument("domain_choice must be 'proportional' or 'uniform'");
  vc.domain_weights = {space_nodes, air_nodes, ground_nodes};
  vc.arrival_rate = arrival_rate;
  vc.mean_lifetime = mean_lifetime;
  return vc;
}

void SimulationConfig::validate() const {
  substrate_config().validate();
  vnr_config().validate();
  if (train_count < 0 || train_count > vnr_count)
    throw std::invalid_argument("train_count must lie in [0, vnr_count]");
  if (epochs < 0) throw std::invalid_argument("epochs must be >= 0");
  if (batch_size <= 0) throw std::invalid_argument("batch_size must be > 0");
  if (train_count > 0 && batch_size > train_count)
    throw std::invalid_argument("batch_size must not exceed the training-set size");
  if (learning_rate < 0.0) throw std::invalid_argument("learning_rate must be >= 0");
  if (period_t <= 0.0) throw std::invalid_argument("period_t must be > 0");
  if (sample_interval <= 0.0) throw std::invalid_argument("sample_interval must be > 0");
}

const std::vector<ConfigField>& config_fields() {
  static const std::vector<ConfigField> fields = {
      {"space_nodes", &SimulationConfig::space_nodes},
      {"air_nodes", &SimulationConfig::air_nodes},
      {"ground_nodes", &SimulationConfig::ground_nodes},
      {"space_links", &SimulationConfig::space_links},
      {"air_links", &SimulationConfig::air_links},
      {"ground_links", &SimulationConfig::ground_links},
      {"inter_links_per_pair", &SimulationConfig::inter_links_per_pair},
      {"space_cpu_min", &SimulationConfig::space_cpu_min},
      {"space_cpu_max", &SimulationConfig::space_cpu_max},
      {"air_cpu_min", &SimulationConfig::air_cpu_min},
      {"air_cpu_max", &SimulationConfig::air_cpu_max},
      {"ground_cpu_min", &SimulationConfig::ground_cpu_min},
      {"ground_cpu_max", &SimulationConfig::ground_cpu_max},
      {"bw_min", &SimulationConfig::bw_min},
      {"bw_max", &SimulationConfig::bw_max},
      {"space_delay_min", &SimulationConfig::space_delay_min},
      {"space_delay_max", &SimulationConfig::space_delay_max},
      {"air_delay_min", &SimulationConfig::air_delay_min},
      {"air_delay_max", &SimulationConfig::air_delay_max},
      {"ground_delay_min", &SimulationConfig::ground_delay_min},
      {"ground_delay_max", &SimulationConfig::ground_delay_max},
      {"inter_delay_min", &SimulationConfig::inter_delay_min},
      {"inter_delay_max", &SimulationConfig::inter_delay_max},
      {"vnr_count", &SimulationConfig::vnr_count},
      {"train_count", &SimulationConfig::train_count},
      {"vnodes_min", &SimulationConfig::vnodes_min},
      {"vnodes_max", &SimulationConfig::vnodes_max},
      {"vcpu_min", &SimulationConfig::vcpu_min},
      {"vcpu_max", &SimulationConfig::vcpu_max},
      {"vbw_min", &SimulationConfig::vbw_min},
      {"vbw_max", &SimulationConfig::vbw_max},
      {"delay_cap", &SimulationConfig::delay_cap},
      {"vlink_prob", &SimulationConfig::vlink_prob},
      {"domain_choice", &SimulationConfig::domain_choice},
      {"arrival_rate", &SimulationConfig::arrival_rate},
      {"mean_lifetime", &SimulationConfig::mean_lifetime},
      {"epochs", &SimulationConfig::epochs},
      {"batch_size", &SimulationConfig::batch_size},
      {"learning_rate", &SimulationConfig::learning_rate},
      {"period_t", &SimulationConfig::period_t},
      {"sample_interval", &SimulationConfig::sample_interval},
      {"seed", &SimulationConfig::seed},
  };
  return fields;
}

namespace {

const ConfigField& find_field(const std::string& key) {
  for (const auto& f : config_fields()) {
    if (key == f.name) return f;
  }
  throw std::invalid_argument("unknown config key: " + key);
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
  std::istringstream in(value);
  T parsed{};
  char trailing = 0;
  if (!(in >> parsed) || (in >> trailing))
    throw std::invalid_argument("bad value for " + key + ": '" + value + "'");
  return parsed;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

void set_config_value(SimulationConfig& cfg, const std::string& key,
                      const std::string& value) {
  const auto& field = find_field(key);
  std::visit(
      [&](auto member) {
        using T = std::decay_t<decltype(cfg.*member)>;
        if constexpr (std::is_same_v<T, std::string>) {
          cfg.*member = value;
        } else {
          cfg.*member = parse_number<T>(key, value);
        }
      },
      field.member);
}

std::string get_config_value(const SimulationConfig& cfg, const std::string& key) {
  const auto& field = find_field(key);
  return std::visit(
      [&](auto member) -> std::string {
        using T = std::decay_t<decltype(cfg.*member)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return cfg.*member;
        } else if constexpr (std::is_same_v<T, double>) {
          char buf[64];
          std::snprintf(buf, sizeof buf, "%.17g", cfg.*member);
          return buf;
        } else {
          return std::to_string(cfg.*member);
        }
      },
      field.member);
}

void load_config_file(SimulationConfig& cfg, const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot read config file " + file.string());
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string trimmed = trim(line);
    if (trimmed.empty()) continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(file.string() + ":" + std::to_string(line_no) +
                                  ": expected 'key = value'");
    set_config_value(cfg, trim(trimmed.substr(0, eq)), trim(trimmed.substr(eq + 1)));
  }
}

std::vector<std::pair<std::string, std::string>> dump_config(const SimulationConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(config_fields().size());
  for (const auto& f : config_fields()) out.emplace_back(f.name, get_config_value(cfg, f.name));
  return out;
}

}  // namespace sagvne
