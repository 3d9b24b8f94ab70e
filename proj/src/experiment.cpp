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

#include "rdq/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

#include "rdq/encoding.hpp"
#include "rdq/errors.hpp"
#include "rdq/hamiltonian.hpp"
#include "rdq/oracle.hpp"
#include "rdq/statevector.hpp"

namespace rdq {

namespace {

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct Column {
  std::string name;
  DiagonalObservable observable;
};

// Expands the observable specs into named single-value columns, keeping the
// first occurrence of each name.
std::vector<Column> expand_observables(const ExperimentConfig& cfg) {
  const int n = cfg.model.lattice.n_sites;
  std::vector<Column> columns;
  auto add = [&](std::string name, DiagonalObservable obs) {
    for (const Column& c : columns)
      if (c.name == name) return;
    columns.push_back({std::move(name), std::move(obs)});
  };
  for (const ObservableSpec& o : cfg.observables) {
    switch (o.kind) {
      case ObservableKind::TotalParticles:
        add("total_particles", DiagonalObservable::total_particles(n));
        break;
      case ObservableKind::StateProb:
        add("p_" + pattern_string(n, o.config),
            DiagonalObservable::state_indicator(n, o.config));
        break;
      case ObservableKind::FullDistribution:
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i)
          add("p_" + pattern_string(n, i),
              DiagonalObservable::state_indicator(n, i));
        break;
    }
  }
  return columns;
}

}  // namespace

std::string format_success(double log_success) {
  // Values above the comfortable double range print directly.
  if (log_success > -650.0) return format_value(std::exp(log_success));
  const double y = log_success / std::log(10.0);
  double exponent = std::floor(y);
  double mantissa = std::pow(10.0, y - exponent);
  if (mantissa >= 10.0) {  // rounding pushed the fraction over
    mantissa /= 10.0;
    exponent += 1.0;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12ge%.0f", mantissa, exponent);
  return buf;
}

std::string ExperimentResult::to_csv() const {
  std::ostringstream os;
  os << "t";
  if (has_success) os << ",success_prob";
  for (const std::string& c : columns) os << ',' << c;
  os << '\n';
  for (const TimeSeriesRecord& r : records) {
    os << format_value(r.t);
    if (has_success) os << ',' << format_success(r.log_success);
    for (double v : r.values) os << ',' << format_value(v);
    os << '\n';
  }
  return os.str();
}

int ExperimentResult::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return static_cast<int>(i);
  return -1;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.model.validate();
  if (cfg.dt <= 0.0) throw ConfigError("dt must be > 0");
  if (cfg.t_max < 0.0) throw ConfigError("t_max must be >= 0");
  if (cfg.sample_every < 1) throw ConfigError("sample_every must be >= 1");
  const bool quantum = cfg.engine != Engine::Oracle;
  const bool oracle = cfg.engine != Engine::Quantum;
  const int n = cfg.model.lattice.n_sites;
  if (oracle && n > kMaxDenseQubits)
    throw CapacityError("oracle engine limited to " +
                        std::to_string(kMaxDenseQubits) + " sites");

  const std::vector<Column> observables = expand_observables(cfg);
  const ProbabilityState p0 = cfg.initial.to_state(n);
  const long n_steps = std::lround(cfg.t_max / cfg.dt);

  ExperimentResult result;
  result.has_success = quantum;
  for (const Column& c : observables) {
    if (quantum) result.columns.push_back(c.name);
    if (oracle)
      result.columns.push_back(quantum ? c.name + "_oracle" : c.name);
  }

  std::optional<SimState> state;
  Circuit step;
  if (quantum) {
    const PseudoHamiltonian h = build_pauli(cfg.model);
    step = synthesize_step(h, cfg.dt);
    state = encode(p0).state;
  }
  std::optional<ExactPropagator> propagator;
  std::optional<ProbabilityState> p_oracle;
  if (oracle) {
    propagator.emplace(cfg.model, cfg.sample_every * cfg.dt);
    p_oracle = p0;
  }

  for (long k = 0; k <= n_steps; ++k) {
    if (k > 0 && quantum) {
      try {
        state = run_circuit(step, std::move(*state));
      } catch (const ExtinctionError& e) {
        throw ExtinctionError(std::string(e.what()) + " at t = " +
                                  format_value(k * cfg.dt),
                              e.gate_index(), k * cfg.dt);
      }
    }
    if (k % cfg.sample_every != 0) continue;
    if (k > 0 && oracle) p_oracle = propagator->step(*p_oracle);

    TimeSeriesRecord record;
    record.t = k * cfg.dt;
    record.has_success = quantum;
    if (quantum) record.log_success = state->log_success();
    std::optional<ProbabilityState> pq;
    if (quantum) pq = decode(*state);
    for (const Column& c : observables) {
      if (quantum) record.values.push_back(expectation(*pq, c.observable));
      if (oracle) record.values.push_back(expectation(*p_oracle, c.observable));
    }
    result.records.push_back(std::move(record));
  }
  return result;
}

namespace {

std::string single_site_job(double generation_rate) {
  std::ostringstream os;
  os << "[model]\n"
        "sites = 1\n"
        "boundary = open\n"
        "decay = 1\n"
        "generation = "
     << format_value(generation_rate)
     << "\n"
        "\n[run]\n"
        "dt = 0.0125\n"
        "t_max = 5\n"
        "sample_every = 4\n"
        "engine = both\n"
        "initial = *\n"
        "\n[observables]\n"
        "total_particles = on\n";
  return os.str();
}

std::string hopping_job(double rate, const std::string& initial) {
  std::ostringstream os;
  os << "[model]\n"
        "sites = 4\n"
        "boundary = periodic\n"
        "hopping = "
     << format_value(rate)
     << "\n"
        "\n[run]\n"
        "dt = 0.05\n"
        "t_max = 8\n"
        "sample_every = 2\n"
        "engine = both\n"
        "initial = "
     << initial
     << "\n"
        "\n[observables]\n"
        "state_prob = *ooo\n"
        "state_prob = o*oo\n"
        "state_prob = oo*o\n"
        "state_prob = ooo*\n";
  return os.str();
}

std::string pair_annihilation_job(int sites, double dt, double t_max,
                                  int sample_every, bool track_edges) {
  std::ostringstream os;
  os << "[model]\n"
        "sites = "
     << sites
     << "\n"
        "boundary = periodic\n"
        "hopping = 1\n"
        "pair_annihilation = 1\n"
        "\n[run]\n"
        "dt = "
     << format_value(dt) << "\nt_max = " << format_value(t_max)
     << "\nsample_every = " << sample_every
     << "\n"
        "engine = both\n"
        "initial = "
     << std::string(sites, '*')
     << "\n"
        "\n[observables]\n"
        "total_particles = on\n";
  if (track_edges) {
    os << "state_prob = " << std::string(sites, 'o') << "\n";
    os << "state_prob = " << std::string(sites, '*') << "\n";
  }
  return os.str();
}

// The quantum run lags the exact decay into the absorbing state by O(dt)
// per unit time (the empty state is not an eigenstate of the individual
// Trotter factors), so the deep-absorbing job keeps a horizon over which
// dt = 1/200 still resolves the dynamics.
std::string dp_job(double decay_rate, double t_max) {
  std::ostringstream os;
  os << "[model]\n"
        "sites = 6\n"
        "boundary = periodic\n"
        "hopping = 1\n"
        "branching = 1\n"
        "decay = "
     << format_value(decay_rate)
     << "\n"
        "\n[run]\n"
        "dt = 0.005\n"
        "t_max = "
     << format_value(t_max)
     << "\n"
        "sample_every = 40\n"
        "engine = both\n"
        "initial = **oooo\n"
        "\n[observables]\n"
        "total_particles = on\n";
  return os.str();
}

std::vector<Preset> make_catalog() {
  std::vector<Preset> catalog;
  catalog.push_back(
      {"single-site",
       "one site, decay rate 1 vs. generation rate nu, from occupied",
       {{"nu0.2", single_site_job(0.2)},
        {"nu1", single_site_job(1.0)},
        {"nu5", single_site_job(5.0)}}});
  catalog.push_back(
      {"hopping",
       "free hopping on a 4-site ring, single-particle state probabilities",
       {{"d1", hopping_job(1.0, "*ooo")},
        {"mixture",
         hopping_job(0.6,
                     "0.66666666666666663:*ooo;0.33333333333333331:o*oo")}}});
  catalog.push_back(
      {"pair-annihilation",
       "diffusing pair annihilation from a fully occupied ring; even vs. "
       "odd site count",
       {{"sites6", pair_annihilation_job(6, 0.005, 10.0, 20, true)},
        {"sites7", pair_annihilation_job(7, 0.02, 20.0, 10, false)}}});
  catalog.push_back(
      {"dp",
       "branching/decay/diffusion sweep across the active-absorbing "
       "transition on a 6-site ring",
       {{"nu0.1", dp_job(0.1, 30.0)},
        {"nu0.2", dp_job(0.2, 30.0)},
        {"nu0.4", dp_job(0.4, 30.0)},
        {"nu1.0", dp_job(1.0, 6.0)}}});
  return catalog;
}

}  // namespace

const std::vector<Preset>& preset_catalog() {
  static const std::vector<Preset> catalog = make_catalog();
  return catalog;
}

const Preset* find_preset(const std::string& name) {
  for (const Preset& p : preset_catalog())
    if (p.name == name) return &p;
  return nullptr;
}

std::string list_presets_text() {
  std::ostringstream os;
  bool first = true;
  for (const Preset& p : preset_catalog()) {
    for (const PresetJob& j : p.jobs) {
      if (!first) os << '\n';
      first = false;
      os << "# preset " << p.name << " job " << j.name << '\n';
      os << "# " << p.summary << '\n';
      os << j.config_text;
    }
  }
  return os.str();
}

}  // namespace rdq
