// Copyright 2026 The vtr-lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vtrlab/config.h"

#include <algorithm>

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace vtrlab {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct Entry {
  std::string value;
  int line;
};

using Section = std::map<std::string, Entry>;

const std::map<std::string, std::set<std::string>>& AllowedKeys() {
  static const auto* keys = new std::map<std::string, std::set<std::string>>{
      {"env",
       {"name", "states", "horizon", "p_success", "p_stay", "p_back", "reward_left",
        "reward_right", "terminals_per_branch"}},
      {"agent", {"name", "epsilon", "lambda", "delta", "norm_bound", "mix_canonical"}},
      {"run", {"episodes", "runs", "seed", "output_dir", "emit_plots"}},
  };
  return *keys;
}

class Reader {
 public:
  explicit Reader(std::map<std::string, Section> sections) : sections_(std::move(sections)) {}

  const Entry* Find(const std::string& section, const std::string& key) const {
    const auto s = sections_.find(section);
    if (s == sections_.end()) return nullptr;
    const auto e = s->second.find(key);
    return e == s->second.end() ? nullptr : &e->second;
  }

  const Entry& Require(const std::string& section, const std::string& key) const {
    const Entry* e = Find(section, key);
    if (!e) throw ConfigError(0, key, "missing required key [" + section + "] " + key);
    return *e;
  }

  static double Number(const std::string& key, const Entry& e) {
    double v = 0.0;
    const char* begin = e.value.data();
    const char* end = begin + e.value.size();
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end) {
      throw ConfigError(e.line, key, "expected a number for '" + key + "', got '" + e.value + "'");
    }
    return v;
  }

  static long long Integer(const std::string& key, const Entry& e) {
    long long v = 0;
    const char* begin = e.value.data();
    const char* end = begin + e.value.size();
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end) {
      throw ConfigError(e.line, key, "expected an integer for '" + key + "', got '" + e.value + "'");
    }
    return v;
  }

  static bool Boolean(const std::string& key, const Entry& e) {
    if (e.value == "true" || e.value == "1" || e.value == "yes") return true;
    if (e.value == "false" || e.value == "0" || e.value == "no") return false;
    throw ConfigError(e.line, key, "expected true/false for '" + key + "', got '" + e.value + "'");
  }

  void Set(const std::string& section, const std::string& key, double* out) const {
    if (const Entry* e = Find(section, key)) *out = Number(key, *e);
  }
  void Set(const std::string& section, const std::string& key, int* out) const {
    if (const Entry* e = Find(section, key)) *out = static_cast<int>(Integer(key, *e));
  }

 private:
  std::map<std::string, Section> sections_;
};

void Check(bool ok, const Reader& reader, const std::string& section,
           const std::string& key, const std::string& message) {
  if (ok) return;
  const Entry* e = reader.Find(section, key);
  throw ConfigError(e ? e->line : 0, key, message);
}

}  // namespace

ConfigError::ConfigError(int line, std::string key, const std::string& message)
    : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line),
      key_(std::move(key)) {}

std::string_view EnvNameString(EnvName env) {
  return env == EnvName::kRiverSwim ? "riverswim" : "widetree";
}

double ExperimentConfig::EffectiveEpsilon() const {
  if (epsilon) return *epsilon;
  return env == EnvName::kRiverSwim ? 0.01 : 0.1;
}

double ExperimentConfig::EffectiveDelta() const {
  return delta ? *delta : 1.0 / static_cast<double>(episodes);
}

int ExperimentConfig::RunsFor(AgentKind kind) const {
  if (runs) return *runs;
  return IsDithering(kind) ? kDefaultRunsDithering : kDefaultRunsOptimistic;
}

AgentParams ExperimentConfig::ParamsFor(AgentKind kind) const {
  AgentParams p;
  p.kind = kind;
  p.epsilon = EffectiveEpsilon();
  p.lambda = lambda;
  p.delta = EffectiveDelta();
  p.norm_bound = norm_bound.value_or(0.0);
  p.mix_canonical_enabled = mix_canonical;
  return p;
}

Environment ExperimentConfig::BuildEnvironment() const {
  return env == EnvName::kRiverSwim ? BuildRiverSwim(riverswim) : BuildWideTree(widetree);
}

ExperimentConfig ParseConfig(std::string_view text) {
  std::map<std::string, Section> sections;
  std::string current;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = Trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(line_no, "", "unterminated section header");
      current = std::string(Trim(line.substr(1, line.size() - 2)));
      if (!AllowedKeys().contains(current)) {
        throw ConfigError(line_no, current, "unknown section [" + current + "]");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(line_no, "", "expected 'key = value'");
    }
    if (current.empty()) throw ConfigError(line_no, "", "key outside of any section");
    const std::string key(Trim(line.substr(0, eq)));
    const std::string value(Trim(line.substr(eq + 1)));
    if (key.empty()) throw ConfigError(line_no, "", "empty key");
    if (!AllowedKeys().at(current).contains(key)) {
      throw ConfigError(line_no, key, "unknown key '" + key + "' in [" + current + "]");
    }
    if (value.empty()) throw ConfigError(line_no, key, "empty value for '" + key + "'");
    if (!sections[current].emplace(key, Entry{value, line_no}).second) {
      throw ConfigError(line_no, key, "duplicate key '" + key + "'");
    }
  }

  const Reader r(std::move(sections));
  ExperimentConfig c;

  const Entry& env_name = r.Require("env", "name");
  if (env_name.value == "riverswim") {
    c.env = EnvName::kRiverSwim;
  } else if (env_name.value == "widetree") {
    c.env = EnvName::kWideTree;
  } else {
    throw ConfigError(env_name.line, "name", "unknown environment '" + env_name.value + "'");
  }
  if (c.env == EnvName::kRiverSwim) {
    Check(!r.Find("env", "terminals_per_branch"), r, "env", "terminals_per_branch",
          "terminals_per_branch does not apply to riverswim");
    r.Set("env", "states", &c.riverswim.num_states);
    r.Set("env", "horizon", &c.riverswim.horizon);
    r.Set("env", "p_success", &c.riverswim.p_right_success);
    r.Set("env", "p_stay", &c.riverswim.p_right_stay);
    r.Set("env", "p_back", &c.riverswim.p_right_back);
    r.Set("env", "reward_left", &c.riverswim.reward_left_at_s1);
    r.Set("env", "reward_right", &c.riverswim.reward_right_at_sN);
    Check(c.riverswim.num_states >= 2, r, "env", "states", "states must be >= 2");
    Check(!r.Find("env", "horizon") || c.riverswim.horizon >= 1, r, "env", "horizon",
          "horizon must be >= 1");
  } else {
    for (const char* key : {"states", "horizon", "p_success", "p_stay", "p_back",
                            "reward_left", "reward_right"}) {
      Check(!r.Find("env", key), r, "env", key,
            std::string(key) + " does not apply to widetree");
    }
    r.Set("env", "terminals_per_branch", &c.widetree.terminals_per_branch);
    Check(c.widetree.terminals_per_branch >= 2 && c.widetree.terminals_per_branch % 2 == 0,
          r, "env", "terminals_per_branch", "terminals_per_branch must be even and >= 2");
  }

  const Entry& agent_names = r.Require("agent", "name");
  std::stringstream list(agent_names.value);
  for (std::string item; std::getline(list, item, ',');) {
    const std::string name(Trim(item));
    const auto kind = ParseAgentKind(name);
    if (!kind) throw ConfigError(agent_names.line, "name", "unknown agent '" + name + "'");
    if (std::find(c.agents.begin(), c.agents.end(), *kind) != c.agents.end()) {
      throw ConfigError(agent_names.line, "name", "agent '" + name + "' listed twice");
    }
    c.agents.push_back(*kind);
  }
  if (const Entry* e = r.Find("agent", "epsilon")) {
    c.epsilon = Reader::Number("epsilon", *e);
    Check(*c.epsilon > 0.0 && *c.epsilon < 1.0, r, "agent", "epsilon", "epsilon must lie in (0, 1)");
  }
  r.Set("agent", "lambda", &c.lambda);
  Check(c.lambda > 0.0, r, "agent", "lambda", "lambda must be positive");
  if (const Entry* e = r.Find("agent", "delta")) {
    c.delta = Reader::Number("delta", *e);
    Check(*c.delta > 0.0 && *c.delta < 1.0, r, "agent", "delta", "delta must lie in (0, 1)");
  }
  if (const Entry* e = r.Find("agent", "norm_bound")) {
    c.norm_bound = Reader::Number("norm_bound", *e);
    Check(*c.norm_bound > 0.0, r, "agent", "norm_bound", "norm_bound must be positive");
  }
  if (const Entry* e = r.Find("agent", "mix_canonical")) {
    c.mix_canonical = Reader::Boolean("mix_canonical", *e);
  }

  const Entry& episodes = r.Require("run", "episodes");
  const long long k = Reader::Integer("episodes", episodes);
  if (k < 1 || k > 100'000'000) throw ConfigError(episodes.line, "episodes", "episodes must be >= 1");
  c.episodes = static_cast<int>(k);
  if (const Entry* e = r.Find("run", "runs")) {
    const long long n = Reader::Integer("runs", *e);
    if (n < 1 || n > 1'000'000) throw ConfigError(e->line, "runs", "runs must be >= 1");
    c.runs = static_cast<int>(n);
  }
  if (const Entry* e = r.Find("run", "seed")) {
    const long long s = Reader::Integer("seed", *e);
    if (s < 0) throw ConfigError(e->line, "seed", "seed must be nonnegative");
    c.seed = static_cast<std::uint64_t>(s);
  }
  if (const Entry* e = r.Find("run", "output_dir")) c.output_dir = e->value;
  if (const Entry* e = r.Find("run", "emit_plots")) c.emit_plots = Reader::Boolean("emit_plots", *e);

  // Catch inconsistent environment parameters here so they report as
  // configuration errors rather than runtime failures.
  try {
    (void)c.BuildEnvironment();
  } catch (const InvalidArgumentError& err) {
    throw ConfigError(0, "env", err.what());
  }
  return c;
}

ExperimentConfig LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(0, "", "cannot read config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseConfig(buffer.str());
}

}  // namespace vtrlab
