#include "lmode/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "lmode/entanglement.hpp"
#include "lmode/errors.hpp"

namespace lmode::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_double(std::string_view text, std::string_view what) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty() ||
      !std::isfinite(value)) {
    throw UsageError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

int parse_int(std::string_view text, std::string_view what) {
  text = trim(text);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw UsageError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::optional<FockPair> parse_fock_pair(std::string_view text) {
  text = trim(text);
  if (text.starts_with("amps:")) return std::nullopt;
  const auto parts = split(text, ',');
  if (parts.size() != 2) {
    throw UsageError("initial state must be 'n,m' or 'amps:N:re,im;...', got '" +
                     std::string(text) + "'");
  }
  const FockPair pair{parse_int(parts[0], "quantum number n"),
                      parse_int(parts[1], "quantum number m")};
  if (pair.n < 0 || pair.m < 0) throw UsageError("quantum numbers must be non-negative");
  return pair;
}

SubspaceState parse_initial(std::string_view text) {
  text = trim(text);
  if (auto pair = parse_fock_pair(text)) return SubspaceState::basis(*pair);

  const auto fields = split(text.substr(5), ':');
  if (fields.size() != 2) throw UsageError("amplitude list must read 'amps:N:re,im;...'");
  const int total = parse_int(fields[0], "total quantum number");
  if (total < 0) throw UsageError("total quantum number must be non-negative");
  std::vector<cplx> amps;
  for (auto entry : split(fields[1], ';')) {
    const auto parts = split(entry, ',');
    if (parts.size() != 2) throw UsageError("amplitude '" + std::string(entry) + "' is not re,im");
    amps.emplace_back(parse_double(parts[0], "amplitude"), parse_double(parts[1], "amplitude"));
  }
  if (amps.size() != static_cast<std::size_t>(total) + 1) {
    throw UsageError("S_" + std::to_string(total) + " needs " + std::to_string(total + 1) +
                     " amplitudes, got " + std::to_string(amps.size()));
  }
  try {
    // Rebuild from the normalized amplitudes so that norm_correction() only
    // reflects later numerical drift, not the user's normalization.
    const SubspaceState parsed(total, std::move(amps));
    return {total, std::vector<cplx>(parsed.amps().begin(), parsed.amps().end())};
  } catch (const lmode::Error& e) {
    throw UsageError(e.what());
  }
}

double parse_time_value(std::string_view text) {
  text = trim(text);
  if (text.ends_with("pi")) {
    const auto factor = trim(text.substr(0, text.size() - 2));
    const double scale = factor.empty() ? 1.0 : parse_double(factor, "time value");
    return scale * std::numbers::pi;
  }
  return parse_double(text, "time value");
}

TimeUnit parse_time_unit(std::string_view text) {
  text = trim(text);
  if (text == "ps" || text == "picoseconds") return TimeUnit::picoseconds;
  if (text == "phase") return TimeUnit::phase;
  throw UsageError("time unit must be 'ps' or 'phase', got '" + std::string(text) + "'");
}

std::string_view time_unit_name(TimeUnit unit) {
  return unit == TimeUnit::picoseconds ? "ps" : "phase";
}

void apply_config(RunConfig& config, std::istream& in) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError("config line " + std::to_string(lineno) + " is not key=value");
    }
    const auto key = trim(view.substr(0, eq));
    const auto value = trim(view.substr(eq + 1));
    if (key == "omega_cm1") {
      config.params.omega = parse_double(value, "omega_cm1");
    } else if (key == "gamma_cm1") {
      config.params.gamma = parse_double(value, "gamma_cm1");
    } else if (key == "epsilon_cm1") {
      config.params.epsilon = parse_double(value, "epsilon_cm1");
    } else if (key == "initial") {
      config.initial = std::string(value);
    } else if (key == "t_max") {
      config.t_max = parse_time_value(value);
    } else if (key == "steps") {
      config.steps = parse_int(value, "steps");
    } else if (key == "time_unit") {
      config.unit = parse_time_unit(value);
    } else if (key == "lambda") {
      config.lambda = parse_double(value, "lambda");
    } else if (key == "witnesses") {
      config.witnesses.clear();
      for (auto name : split(value, ',')) config.witnesses.emplace_back(name);
    } else {
      throw UsageError("unknown config key '" + std::string(key) + "' on line " +
                       std::to_string(lineno));
    }
  }
}

void validate(const RunConfig& config) {
  try {
    config.params.validate();
  } catch (const lmode::Error& e) {
    throw UsageError(e.what());
  }
  if (config.steps < 1) throw UsageError("steps must be at least 1");
  if (!std::isfinite(config.t_max) || config.t_max < 0.0) {
    throw UsageError("t_max must be finite and non-negative");
  }
  if (config.steps > 1 && config.t_max == 0.0) {
    throw UsageError("t_max must be positive when steps > 1");
  }
  if (config.unit == TimeUnit::phase && config.params.epsilon <= 0.0) {
    throw UsageError("the phase time axis needs epsilon > 0; use --time-unit ps");
  }
  if (config.lambda == 0.0 || !std::isfinite(config.lambda)) {
    throw UsageError("lambda must be finite and nonzero");
  }
  const auto& known = witness_names();
  for (const auto& name : config.witnesses) {
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw UsageError("unknown witness '" + name + "'");
    }
  }
}

TimeSpec time_grid(const RunConfig& config) {
  try {
    return TimeSpec::uniform(config.unit, config.t_max, config.steps);
  } catch (const lmode::Error& e) {
    throw UsageError(e.what());
  }
}

}  // namespace lmode::cli
