// Copyright 2026 The rdqsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rdq/circuit.hpp"
#include "rdq/config.hpp"
#include "rdq/errors.hpp"
#include "rdq/experiment.hpp"
#include "rdq/hamiltonian.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitRunFailure = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw rdq::ConfigError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

rdq::ExperimentConfig load_config(const std::string& path,
                                  const std::vector<std::string>& overrides) {
  std::string text = read_file(path);
  for (const std::string& o : overrides)
    text = rdq::apply_config_override(text, o);
  return rdq::parse_config(text);
}

int cmd_run(const std::string& config_path,
            const std::vector<std::string>& overrides,
            const std::string& out_path) {
  const rdq::ExperimentConfig cfg = load_config(config_path, overrides);
  const rdq::ExperimentResult result = rdq::run_experiment(cfg);
  if (out_path.empty())
    std::cout << result.to_csv();
  else
    write_file(out_path, result.to_csv());
  return 0;
}

int cmd_preset(const std::string& name,
               const std::vector<std::string>& overrides,
               const std::string& job_filter, const std::string& out_dir) {
  const rdq::Preset* preset = rdq::find_preset(name);
  if (!preset) throw rdq::ConfigError("unknown preset '" + name + "'");

  struct Job {
    std::string file_name;
    rdq::ExperimentConfig config;
  };
  std::vector<Job> jobs;
  for (const rdq::PresetJob& j : preset->jobs) {
    if (!job_filter.empty() && j.name != job_filter) continue;
    std::string text = j.config_text;
    for (const std::string& o : overrides)
      text = rdq::apply_config_override(text, o);
    jobs.push_back({preset->name + "_" + j.name + ".csv",
                    rdq::parse_config(text)});
  }
  if (jobs.empty())
    throw rdq::ConfigError("preset '" + name + "' has no job named '" +
                           job_filter + "'");

  // Jobs are independent; run them concurrently.
  std::vector<std::future<std::string>> futures;
  futures.reserve(jobs.size());
  for (const Job& j : jobs)
    futures.push_back(std::async(std::launch::async, [&j] {
      return rdq::run_experiment(j.config).to_csv();
    }));
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    std::filesystem::path out = out_dir.empty()
                                    ? std::filesystem::path(jobs[i].file_name)
                                    : std::filesystem::path(out_dir) /
                                          jobs[i].file_name;
    write_file(out.string(), futures[i].get());
    std::cout << out.string() << '\n';
  }
  return 0;
}

int cmd_dump_hamiltonian(const std::string& config_path,
                         const std::vector<std::string>& overrides) {
  const rdq::ExperimentConfig cfg = load_config(config_path, overrides);
  const bool validate = cfg.model.lattice.n_sites <= 6;
  std::cout << rdq::build_pauli(cfg.model, validate).dump();
  return 0;
}

int cmd_dump_circuit(const std::string& config_path,
                     const std::vector<std::string>& overrides, long steps) {
  const rdq::ExperimentConfig cfg = load_config(config_path, overrides);
  const rdq::PseudoHamiltonian h = rdq::build_pauli(cfg.model);
  std::cout << rdq::trotterize(h, steps * cfg.dt, cfg.dt).serialize();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Compiles lattice reaction-diffusion models to Trotterized quantum "
      "circuits, simulates them and compares against the exact master "
      "equation"};
  app.require_subcommand(1);

  std::string config_path, out_path, out_dir, preset_name, job_filter;
  std::vector<std::string> overrides;
  long steps = 1;

  CLI::App* run = app.add_subcommand("run", "run one experiment config");
  run->add_option("config", config_path, "INI config file")->required();
  run->add_option("--out", out_path, "CSV output file (default: stdout)");
  run->add_option("--override", overrides, "section.key=value override");

  CLI::App* preset =
      app.add_subcommand("preset", "run a shipped experiment preset");
  preset->add_option("name", preset_name, "preset name")->required();
  preset->add_option("--override", overrides, "section.key=value override");
  preset->add_option("--job", job_filter, "run only the named job");
  preset->add_option("--out-dir", out_dir, "directory for the CSV files");

  CLI::App* dump_h = app.add_subcommand(
      "dump-hamiltonian", "print the Pauli-basis pseudo-Hamiltonian");
  dump_h->add_option("config", config_path, "INI config file")->required();
  dump_h->add_option("--override", overrides, "section.key=value override");

  CLI::App* dump_c =
      app.add_subcommand("dump-circuit", "print the synthesized circuit");
  dump_c->add_option("config", config_path, "INI config file")->required();
  dump_c->add_option("--steps", steps, "number of Trotter steps")
      ->check(CLI::PositiveNumber);
  dump_c->add_option("--override", overrides, "section.key=value override");

  CLI::App* list =
      app.add_subcommand("list-presets", "print the preset catalog");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(config_path, overrides, out_path);
    if (preset->parsed())
      return cmd_preset(preset_name, overrides, job_filter, out_dir);
    if (dump_h->parsed()) return cmd_dump_hamiltonian(config_path, overrides);
    if (dump_c->parsed())
      return cmd_dump_circuit(config_path, overrides, steps);
    if (list->parsed()) {
      std::cout << rdq::list_presets_text();
      return 0;
    }
  } catch (const rdq::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const rdq::ExtinctionError& e) {
    std::cerr << "trajectory extinct: " << e.what() << '\n';
    return kExitRunFailure;
  } catch (const rdq::DecodeError& e) {
    std::cerr << "decode failure: " << e.what() << '\n';
    return kExitRunFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
