#include "eccm/config.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace eccm {

namespace {

struct RawEntry {
  std::string value;
  int line = -1;  // -1: command-line override
};

using RawMap = std::map<std::string, RawEntry>;

std::string where(const std::string& key, int line) {
  if (line < 0) return "flag '" + key + "'";
  return "key '" + key + "' (line " + std::to_string(line) + ")";
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const RawEntry& e) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(e.value.c_str(), &end);
  if (end == e.value.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(v))
    throw ConfigError("malformed number for " + where(key, e.line) + ": '" + e.value + "'");
  return v;
}

long long parse_int(const std::string& key, const RawEntry& e) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(e.value.data(), e.value.data() + e.value.size(), v);
  if (ec != std::errc() || ptr != e.value.data() + e.value.size())
    throw ConfigError("malformed integer for " + where(key, e.line) + ": '" + e.value + "'");
  return v;
}

std::uint64_t parse_u64(const std::string& key, const RawEntry& e) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(e.value.data(), e.value.data() + e.value.size(), v);
  if (ec != std::errc() || ptr != e.value.data() + e.value.size())
    throw ConfigError("malformed unsigned integer for " + where(key, e.line) + ": '" +
                      e.value + "'");
  return v;
}

bool parse_on_off(const std::string& key, const RawEntry& e) {
  if (e.value == "on" || e.value == "true" || e.value == "1") return true;
  if (e.value == "off" || e.value == "false" || e.value == "0") return false;
  throw ConfigError("expected on/off for " + where(key, e.line) + ": '" + e.value + "'");
}

Vec parse_vec(const std::string& key, const RawEntry& e) {
  Vec out;
  std::stringstream ss(e.value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty())
      throw ConfigError("malformed vector for " + where(key, e.line) + ": '" + e.value + "'");
    out.push_back(parse_double(key, {item, e.line}));
  }
  if (out.empty())
    throw ConfigError("malformed vector for " + where(key, e.line) + ": '" + e.value + "'");
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const std::vector<KeySpec>& config_keys() {
  static const std::vector<KeySpec> keys = {
      {"d", "action dimension", "4"},
      {"steps", "slow-timescale interaction count K", "50"},
      {"lambda", "jammer coupling weight (known to the radar)", "0.5"},
      {"delta", "radar mitigation weight", "1"},
      {"eps_sinr", "SINR denominator regularizer", "1e-09"},
      {"tol_feas", "inequality-system feasibility tolerance", "1e-08"},
      {"theta_true", "true jammer parameters: 'random' or comma list", "random"},
      {"theta_hat0", "initial estimate: comma list, or one value for all axes", "0.5"},
      {"theta_lo", "parameter box lower bound", "0"},
      {"theta_hi", "parameter box upper bound", "1"},
      {"mode", "'adaptive' (estimate fed to the probe solver) or 'symmetric'", "adaptive"},
      {"estimator", "'max_margin' or 'min_slack'", "max_margin"},
      {"exploration", "decaying probe perturbation on/off", "off"},
      {"exploration_scale", "perturbation magnitude c in c/sqrt(k)", "0.2"},
      {"pap_random_starts", "seeded random starts for the probe search", "8"},
      {"pap_max_evals", "objective evaluation cap per probe solve", "20000"},
      {"pap_step_init", "pattern-search initial step", "0.25"},
      {"pap_step_min", "pattern-search terminal step", "0.0001"},
      {"tracker", "fast-timescale tracker on/off", "on"},
      {"tracker_sigma0_sq", "base measurement variance", "1"},
      {"tracker_c_r", "radar-power noise coupling", "1"},
      {"tracker_c_j", "jammer-power noise coupling", "4"},
      {"tracker_eps", "noise-variance denominator regularizer", "0.001"},
      {"tracker_period", "fast-timescale sampling period (s)", "1"},
      {"tracker_q", "process-noise intensity", "0.01"},
      {"tracker_steps", "fast steps per interaction", "100"},
      {"tracker_x0_pos", "initial position per axis (m)", "1000"},
      {"tracker_x0_vel", "initial velocity per axis (m/s)", "10"},
      {"tracker_p0_pos", "initial position variance", "100"},
      {"tracker_p0_vel", "initial velocity variance", "25"},
      {"seed", "master seed", "1"},
      {"seeds", "replication count", "1"},
  };
  return keys;
}

namespace {

bool known_key(const std::string& key) {
  for (const KeySpec& spec : config_keys())
    if (spec.name == key) return true;
  return false;
}

RawMap read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  RawMap raw;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("missing '=' on line " + std::to_string(lineno) + ": '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError("empty key on line " + std::to_string(lineno));
    if (!known_key(key))
      throw ConfigError("unknown key '" + key + "' (line " + std::to_string(lineno) + ")");
    raw[key] = {value, lineno};
  }
  return raw;
}

RunSpec build_spec(const RawMap& raw) {
  RunSpec spec;
  EngagementConfig& cfg = spec.cfg;

  const auto get = [&raw](const std::string& key) -> const RawEntry* {
    const auto it = raw.find(key);
    return it == raw.end() ? nullptr : &it->second;
  };

  if (const auto* e = get("d")) {
    const long long d = parse_int("d", *e);
    if (d < 1 || d > 64) throw ConfigError("d must lie in [1, 64], got " + e->value);
    cfg.d = static_cast<std::size_t>(d);
  }
  if (const auto* e = get("steps")) {
    const long long k = parse_int("steps", *e);
    if (k < 0) throw ConfigError("steps must be >= 0, got " + e->value);
    cfg.steps = static_cast<int>(k);
  }
  if (const auto* e = get("lambda")) cfg.lambda = parse_double("lambda", *e);
  if (const auto* e = get("delta")) cfg.delta = parse_double("delta", *e);
  if (const auto* e = get("eps_sinr")) cfg.eps_sinr = parse_double("eps_sinr", *e);
  if (const auto* e = get("tol_feas")) cfg.tol_feas = parse_double("tol_feas", *e);
  if (const auto* e = get("theta_lo")) cfg.box.lo = parse_double("theta_lo", *e);
  if (const auto* e = get("theta_hi")) cfg.box.hi = parse_double("theta_hi", *e);

  if (const auto* e = get("theta_true")) {
    if (e->value == "random") {
      cfg.theta_true.reset();
    } else {
      Vec v = parse_vec("theta_true", *e);
      if (v.size() == 1) v.assign(cfg.d, v.front());
      if (v.size() != cfg.d)
        throw ConfigError("theta_true needs " + std::to_string(cfg.d) + " entries, got " +
                          std::to_string(v.size()));
      if (!cfg.box.contains(v))
        throw ConfigError("theta_true outside the box [" + format_double(cfg.box.lo) + ", " +
                          format_double(cfg.box.hi) + "]");
      cfg.theta_true = std::move(v);
    }
  }
  {
    Vec hat0(cfg.d, 0.5 * (cfg.box.lo + cfg.box.hi));
    if (const auto* e = get("theta_hat0")) {
      Vec v = parse_vec("theta_hat0", *e);
      if (v.size() == 1) v.assign(cfg.d, v.front());
      if (v.size() != cfg.d)
        throw ConfigError("theta_hat0 needs " + std::to_string(cfg.d) + " entries, got " +
                          std::to_string(v.size()));
      hat0 = std::move(v);
    }
    if (!cfg.box.contains(hat0))
      throw ConfigError("theta_hat0 outside the box [" + format_double(cfg.box.lo) + ", " +
                        format_double(cfg.box.hi) + "]");
    cfg.theta_hat0 = std::move(hat0);
  }

  if (const auto* e = get("mode")) {
    if (e->value == "adaptive")
      cfg.mode = EngagementMode::kAdaptive;
    else if (e->value == "symmetric")
      cfg.mode = EngagementMode::kSymmetric;
    else
      throw ConfigError("mode must be 'adaptive' or 'symmetric', got '" + e->value + "'");
  }
  if (const auto* e = get("estimator")) {
    if (e->value == "max_margin")
      cfg.estimator = IrlEstimator::kMaxMargin;
    else if (e->value == "min_slack")
      cfg.estimator = IrlEstimator::kMinSlack;
    else
      throw ConfigError("estimator must be 'max_margin' or 'min_slack', got '" + e->value + "'");
  }
  if (const auto* e = get("exploration")) cfg.exploration = parse_on_off("exploration", *e);
  if (const auto* e = get("exploration_scale"))
    cfg.exploration_scale = parse_double("exploration_scale", *e);
  if (const auto* e = get("pap_random_starts"))
    cfg.budget.n_random = static_cast<int>(parse_int("pap_random_starts", *e));
  if (const auto* e = get("pap_max_evals"))
    cfg.budget.max_evals = parse_int("pap_max_evals", *e);
  if (const auto* e = get("pap_step_init"))
    cfg.budget.step_init = parse_double("pap_step_init", *e);
  if (const auto* e = get("pap_step_min"))
    cfg.budget.step_min = parse_double("pap_step_min", *e);

  if (const auto* e = get("tracker")) cfg.tracker.enabled = parse_on_off("tracker", *e);
  if (const auto* e = get("tracker_sigma0_sq"))
    cfg.tracker.noise.sigma0_sq = parse_double("tracker_sigma0_sq", *e);
  if (const auto* e = get("tracker_c_r")) cfg.tracker.noise.c_r = parse_double("tracker_c_r", *e);
  if (const auto* e = get("tracker_c_j")) cfg.tracker.noise.c_j = parse_double("tracker_c_j", *e);
  if (const auto* e = get("tracker_eps")) cfg.tracker.noise.eps = parse_double("tracker_eps", *e);
  if (const auto* e = get("tracker_period"))
    cfg.tracker.sample_period = parse_double("tracker_period", *e);
  if (const auto* e = get("tracker_q"))
    cfg.tracker.process_noise_q = parse_double("tracker_q", *e);
  if (const auto* e = get("tracker_steps"))
    cfg.tracker.steps_per_interaction = static_cast<int>(parse_int("tracker_steps", *e));
  if (const auto* e = get("tracker_x0_pos")) cfg.tracker.x0_pos = parse_double("tracker_x0_pos", *e);
  if (const auto* e = get("tracker_x0_vel")) cfg.tracker.x0_vel = parse_double("tracker_x0_vel", *e);
  if (const auto* e = get("tracker_p0_pos")) cfg.tracker.p0_pos = parse_double("tracker_p0_pos", *e);
  if (const auto* e = get("tracker_p0_vel")) cfg.tracker.p0_vel = parse_double("tracker_p0_vel", *e);

  if (const auto* e = get("seed")) cfg.seed = parse_u64("seed", *e);
  if (const auto* e = get("seeds")) {
    const long long s = parse_int("seeds", *e);
    if (s < 1) throw ConfigError("seeds must be >= 1, got " + e->value);
    spec.seeds = static_cast<int>(s);
  }

  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return spec;
}

}  // namespace

RunSpec parse_config(const std::string& path, const std::vector<Override>& overrides) {
  RawMap raw = read_config_file(path);
  for (const Override& o : overrides) {
    if (!known_key(o.key)) throw ConfigError("unknown key '" + o.key + "' (flag)");
    raw[o.key] = {o.value, -1};
  }
  return build_spec(raw);
}

RunSpec parse_config(const std::vector<Override>& overrides) {
  RawMap raw;
  for (const Override& o : overrides) {
    if (!known_key(o.key)) throw ConfigError("unknown key '" + o.key + "' (flag)");
    raw[o.key] = {o.value, -1};
  }
  return build_spec(raw);
}

std::map<std::string, std::string> config_to_kv(const RunSpec& spec) {
  const EngagementConfig& cfg = spec.cfg;
  std::map<std::string, std::string> kv;
  kv["d"] = std::to_string(cfg.d);
  kv["steps"] = std::to_string(cfg.steps);
  kv["lambda"] = format_double(cfg.lambda);
  kv["delta"] = format_double(cfg.delta);
  kv["eps_sinr"] = format_double(cfg.eps_sinr);
  kv["tol_feas"] = format_double(cfg.tol_feas);
  if (cfg.theta_true) {
    std::string list;
    for (std::size_t i = 0; i < cfg.theta_true->size(); ++i)
      list += (i ? "," : "") + format_double((*cfg.theta_true)[i]);
    kv["theta_true"] = list;
  } else {
    kv["theta_true"] = "random";
  }
  {
    const Vec hat0 = cfg.resolved_theta_hat0();
    std::string list;
    for (std::size_t i = 0; i < hat0.size(); ++i) list += (i ? "," : "") + format_double(hat0[i]);
    kv["theta_hat0"] = list;
  }
  kv["theta_lo"] = format_double(cfg.box.lo);
  kv["theta_hi"] = format_double(cfg.box.hi);
  kv["mode"] = cfg.mode == EngagementMode::kAdaptive ? "adaptive" : "symmetric";
  kv["estimator"] = cfg.estimator == IrlEstimator::kMaxMargin ? "max_margin" : "min_slack";
  kv["exploration"] = cfg.exploration ? "on" : "off";
  kv["exploration_scale"] = format_double(cfg.exploration_scale);
  kv["pap_random_starts"] = std::to_string(cfg.budget.n_random);
  kv["pap_max_evals"] = std::to_string(cfg.budget.max_evals);
  kv["pap_step_init"] = format_double(cfg.budget.step_init);
  kv["pap_step_min"] = format_double(cfg.budget.step_min);
  kv["tracker"] = cfg.tracker.enabled ? "on" : "off";
  kv["tracker_sigma0_sq"] = format_double(cfg.tracker.noise.sigma0_sq);
  kv["tracker_c_r"] = format_double(cfg.tracker.noise.c_r);
  kv["tracker_c_j"] = format_double(cfg.tracker.noise.c_j);
  kv["tracker_eps"] = format_double(cfg.tracker.noise.eps);
  kv["tracker_period"] = format_double(cfg.tracker.sample_period);
  kv["tracker_q"] = format_double(cfg.tracker.process_noise_q);
  kv["tracker_steps"] = std::to_string(cfg.tracker.steps_per_interaction);
  kv["tracker_x0_pos"] = format_double(cfg.tracker.x0_pos);
  kv["tracker_x0_vel"] = format_double(cfg.tracker.x0_vel);
  kv["tracker_p0_pos"] = format_double(cfg.tracker.p0_pos);
  kv["tracker_p0_vel"] = format_double(cfg.tracker.p0_vel);
  kv["seed"] = std::to_string(cfg.seed);
  kv["seeds"] = std::to_string(spec.seeds);
  return kv;
}

std::string render_config(const RunSpec& spec) {
  const auto kv = config_to_kv(spec);
  std::string out;
  for (const KeySpec& key : config_keys()) {
    const auto it = kv.find(key.name);
    if (it != kv.end()) out += key.name + "=" + it->second + "\n";
  }
  return out;
}

}  // namespace eccm
