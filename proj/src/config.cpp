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

#include "rdq/config.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "rdq/errors.hpp"

namespace rdq {

std::uint64_t parse_pattern(std::string_view pattern, int n_sites) {
  if (static_cast<int>(pattern.size()) != n_sites)
    throw ConfigError("pattern '" + std::string(pattern) + "' has " +
                      std::to_string(pattern.size()) + " sites, expected " +
                      std::to_string(n_sites));
  std::uint64_t config = 0;
  for (int k = 0; k < n_sites; ++k) {
    const char c = pattern[static_cast<std::size_t>(k)];
    if (c == 'o')
      config |= std::uint64_t{1} << (n_sites - 1 - k);
    else if (c != '*')
      throw ConfigError("pattern '" + std::string(pattern) +
                        "' contains '" + std::string(1, c) +
                        "', only '*' (occupied) and 'o' (empty) are allowed");
  }
  return config;
}

std::string pattern_string(int n_sites, std::uint64_t config) {
  std::string s(static_cast<std::size_t>(n_sites), '*');
  for (int k = 0; k < n_sites; ++k)
    if (config & (std::uint64_t{1} << (n_sites - 1 - k)))
      s[static_cast<std::size_t>(k)] = 'o';
  return s;
}

namespace {

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

double parse_double(const std::string& value, int line) {
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (end != value.c_str() + value.size() || value.empty())
    throw ConfigError("expected a number, got '" + value + "'", line);
  if (!std::isfinite(v)) throw ConfigError("non-finite number", line);
  return v;
}

long parse_long(const std::string& value, int line) {
  char* end = nullptr;
  const long v = std::strtol(value.c_str(), &end, 10);
  if (end != value.c_str() + value.size() || value.empty())
    throw ConfigError("expected an integer, got '" + value + "'", line);
  return v;
}

bool parse_flag(const std::string& value, int line) {
  if (value == "on" || value == "true" || value == "1") return true;
  if (value == "off" || value == "false" || value == "0") return false;
  throw ConfigError("expected on/off, got '" + value + "'", line);
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

InitialSpec InitialSpec::parse(std::string_view text, int n_sites) {
  InitialSpec spec;
  if (text.find(':') == std::string_view::npos) {
    spec.components.push_back({1.0, parse_pattern(trim(text), n_sites)});
    return spec;
  }
  std::string_view rest = text;
  double total = 0.0;
  while (!rest.empty()) {
    const auto semi = rest.find(';');
    const std::string_view part =
        semi == std::string_view::npos ? rest : rest.substr(0, semi);
    rest = semi == std::string_view::npos ? std::string_view{}
                                          : rest.substr(semi + 1);
    const auto colon = part.find(':');
    if (colon == std::string_view::npos)
      throw ConfigError("mixture component '" + std::string(part) +
                        "' is missing its weight");
    const double w = parse_double(trim(part.substr(0, colon)), 0);
    if (w < 0.0) throw ConfigError("negative mixture weight");
    spec.components.push_back(
        {w, parse_pattern(trim(part.substr(colon + 1)), n_sites)});
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw ConfigError("mixture weights sum to " + std::to_string(total) +
                      ", expected 1");
  return spec;
}

ProbabilityState InitialSpec::to_state(int n_sites) const {
  Eigen::VectorXd p = Eigen::VectorXd::Zero(Eigen::Index{1} << n_sites);
  for (const Component& c : components)
    p(static_cast<Eigen::Index>(c.config)) += c.weight;
  return ProbabilityState(n_sites, std::move(p));
}

std::string InitialSpec::str(int n_sites) const {
  if (components.size() == 1 && components.front().weight == 1.0)
    return pattern_string(n_sites, components.front().config);
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += ';';
    out += format_number(components[i].weight) + ":" +
           pattern_string(n_sites, components[i].config);
  }
  return out;
}

namespace {

struct ConfigEntry {
  int line;
  std::string key;
  std::string value;
};

struct ConfigSection {
  std::string name;
  int line = 0;
  std::vector<ConfigEntry> entries;
};

struct ConfigDoc {
  std::vector<ConfigSection> sections;

  static ConfigDoc parse(const std::string& text) {
    ConfigDoc doc;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    ConfigSection* current = nullptr;
    while (std::getline(in, raw)) {
      ++line_no;
      const std::string line = trim(raw);
      if (line.empty() || line[0] == '#' || line[0] == ';') continue;
      if (line.front() == '[') {
        if (line.back() != ']')
          throw ConfigError("unterminated section header", line_no);
        doc.sections.push_back(
            {trim(line.substr(1, line.size() - 2)), line_no, {}});
        current = &doc.sections.back();
        continue;
      }
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw ConfigError("expected 'key = value'", line_no);
      if (!current)
        throw ConfigError("key outside of any [section]", line_no);
      current->entries.push_back(
          {line_no, trim(line.substr(0, eq)), trim(line.substr(eq + 1))});
    }
    return doc;
  }

  std::string serialize() const {
    std::string out;
    for (std::size_t s = 0; s < sections.size(); ++s) {
      if (s) out += '\n';
      out += "[" + sections[s].name + "]\n";
      for (const ConfigEntry& e : sections[s].entries)
        out += e.key + " = " + e.value + "\n";
    }
    return out;
  }
};

const ConfigSection* find_section(const ConfigDoc& doc,
                                  const std::string& name) {
  for (const ConfigSection& s : doc.sections)
    if (s.name == name) return &s;
  return nullptr;
}

// Scalar keys may appear once.
void reject_duplicates(const ConfigSection& section,
                       const std::vector<std::string>& repeatable) {
  for (std::size_t i = 0; i < section.entries.size(); ++i) {
    const std::string& key = section.entries[i].key;
    bool rep = false;
    for (const std::string& r : repeatable) rep |= (key == r);
    if (rep) continue;
    for (std::size_t j = i + 1; j < section.entries.size(); ++j)
      if (section.entries[j].key == key)
        throw ConfigError("duplicate key '" + key + "'",
                          section.entries[j].line);
  }
}

struct ReactionKey {
  const char* key;
  ReactionKind kind;
};

constexpr ReactionKey kReactionKeys[] = {
    {"hopping", ReactionKind::Hopping},
    {"pair_annihilation", ReactionKind::PairAnnihilation},
    {"coagulation", ReactionKind::PairCoagulation},
    {"decay", ReactionKind::Decay},
    {"generation", ReactionKind::Generation},
    {"branching", ReactionKind::Branching},
};

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  const ConfigDoc doc = ConfigDoc::parse(text);
  for (const ConfigSection& s : doc.sections)
    if (s.name != "model" && s.name != "run" && s.name != "observables")
      throw ConfigError("unknown section [" + s.name + "]", s.line);

  ExperimentConfig cfg;

  const ConfigSection* model = find_section(doc, "model");
  if (!model) throw ConfigError("missing [model] section");
  reject_duplicates(*model, {});
  bool have_sites = false;
  for (const ConfigEntry& e : model->entries) {
    if (e.key == "sites") {
      const long n = parse_long(e.value, e.line);
      if (n < 1 || n > 24) throw ConfigError("sites out of range", e.line);
      cfg.model.lattice.n_sites = static_cast<int>(n);
      have_sites = true;
    } else if (e.key == "boundary") {
      if (e.value == "periodic")
        cfg.model.lattice.boundary = Boundary::Periodic;
      else if (e.value == "open")
        cfg.model.lattice.boundary = Boundary::Open;
      else
        throw ConfigError("boundary must be periodic or open", e.line);
    } else {
      bool matched = false;
      for (const ReactionKey& rk : kReactionKeys) {
        if (e.key == rk.key) {
          const double rate = parse_double(e.value, e.line);
          if (rate < 0.0) throw ConfigError("negative rate", e.line);
          cfg.model.reactions.push_back({rk.kind, rate});
          matched = true;
          break;
        }
      }
      if (!matched)
        throw ConfigError("unknown model key '" + e.key + "'", e.line);
    }
  }
  if (!have_sites) throw ConfigError("[model] is missing 'sites'");

  const ConfigSection* run = find_section(doc, "run");
  if (!run) throw ConfigError("missing [run] section");
  reject_duplicates(*run, {});
  bool have_dt = false, have_tmax = false, have_initial = false;
  for (const ConfigEntry& e : run->entries) {
    if (e.key == "dt") {
      cfg.dt = parse_double(e.value, e.line);
      if (cfg.dt <= 0.0) throw ConfigError("dt must be > 0", e.line);
      have_dt = true;
    } else if (e.key == "t_max") {
      cfg.t_max = parse_double(e.value, e.line);
      if (cfg.t_max < 0.0) throw ConfigError("t_max must be >= 0", e.line);
      have_tmax = true;
    } else if (e.key == "sample_every") {
      const long v = parse_long(e.value, e.line);
      if (v < 1) throw ConfigError("sample_every must be >= 1", e.line);
      cfg.sample_every = static_cast<int>(v);
    } else if (e.key == "engine") {
      if (e.value == "quantum")
        cfg.engine = Engine::Quantum;
      else if (e.value == "oracle")
        cfg.engine = Engine::Oracle;
      else if (e.value == "both")
        cfg.engine = Engine::Both;
      else
        throw ConfigError("engine must be quantum, oracle or both", e.line);
    } else if (e.key == "initial") {
      try {
        cfg.initial = InitialSpec::parse(e.value, cfg.model.lattice.n_sites);
      } catch (const ConfigError& err) {
        throw ConfigError(err.what(), e.line);
      }
      have_initial = true;
    } else {
      throw ConfigError("unknown run key '" + e.key + "'", e.line);
    }
  }
  if (!have_dt) throw ConfigError("[run] is missing 'dt'");
  if (!have_tmax) throw ConfigError("[run] is missing 't_max'");
  if (!have_initial) throw ConfigError("[run] is missing 'initial'");

  if (const ConfigSection* obs = find_section(doc, "observables")) {
    reject_duplicates(*obs, {"state_prob"});
    for (const ConfigEntry& e : obs->entries) {
      if (e.key == "total_particles") {
        if (parse_flag(e.value, e.line))
          cfg.observables.push_back({ObservableKind::TotalParticles});
      } else if (e.key == "full_distribution") {
        if (parse_flag(e.value, e.line))
          cfg.observables.push_back({ObservableKind::FullDistribution});
      } else if (e.key == "state_prob") {
        try {
          cfg.observables.push_back(
              {ObservableKind::StateProb,
               parse_pattern(e.value, cfg.model.lattice.n_sites)});
        } catch (const ConfigError& err) {
          throw ConfigError(err.what(), e.line);
        }
      } else {
        throw ConfigError("unknown observable key '" + e.key + "'", e.line);
      }
    }
  }
  if (cfg.observables.empty())
    cfg.observables.push_back({ObservableKind::TotalParticles});

  cfg.model.validate();
  return cfg;
}

std::string serialize_config(const ExperimentConfig& config) {
  std::ostringstream os;
  os << "[model]\n";
  os << "sites = " << config.model.lattice.n_sites << "\n";
  os << "boundary = "
     << (config.model.lattice.boundary == Boundary::Periodic ? "periodic"
                                                             : "open")
     << "\n";
  for (const ReactionKey& rk : kReactionKeys)
    for (const ReactionSpec& r : config.model.reactions)
      if (r.kind == rk.kind)
        os << rk.key << " = " << format_number(r.rate) << "\n";
  os << "\n[run]\n";
  os << "dt = " << format_number(config.dt) << "\n";
  os << "t_max = " << format_number(config.t_max) << "\n";
  os << "sample_every = " << config.sample_every << "\n";
  os << "engine = "
     << (config.engine == Engine::Quantum
             ? "quantum"
             : config.engine == Engine::Oracle ? "oracle" : "both")
     << "\n";
  os << "initial = " << config.initial.str(config.model.lattice.n_sites)
     << "\n";
  os << "\n[observables]\n";
  for (const ObservableSpec& o : config.observables) {
    switch (o.kind) {
      case ObservableKind::TotalParticles:
        os << "total_particles = on\n";
        break;
      case ObservableKind::FullDistribution:
        os << "full_distribution = on\n";
        break;
      case ObservableKind::StateProb:
        os << "state_prob = "
           << pattern_string(config.model.lattice.n_sites, o.config) << "\n";
        break;
    }
  }
  return os.str();
}

std::string apply_config_override(const std::string& config_text,
                                  const std::string& override_spec) {
  const auto eq = override_spec.find('=');
  if (eq == std::string::npos)
    throw ConfigError("override '" + override_spec +
                      "' must look like section.key=value");
  const std::string path = trim(override_spec.substr(0, eq));
  const std::string value = trim(override_spec.substr(eq + 1));
  const auto dot = path.find('.');
  if (dot == std::string::npos)
    throw ConfigError("override key '" + path +
                      "' must be qualified as section.key");
  const std::string section = path.substr(0, dot);
  const std::string key = path.substr(dot + 1);

  ConfigDoc doc = ConfigDoc::parse(config_text);
  for (ConfigSection& s : doc.sections) {
    if (s.name != section) continue;
    for (ConfigEntry& e : s.entries) {
      if (e.key == key) {
        e.value = value;
        return doc.serialize();
      }
    }
    s.entries.push_back({0, key, value});
    return doc.serialize();
  }
  doc.sections.push_back({section, 0, {{0, key, value}}});
  return doc.serialize();
}

}  // namespace rdq
