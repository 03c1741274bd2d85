// Flat key=value configuration: file parsing, flag overrides, strict key
// checking, and the canonical resolved form written next to run outputs.
#pragma once

#include "eccm/engagement.hpp"

#include <map>
#include <string>

namespace eccm {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct KeySpec {
  std::string name;
  std::string doc;
  std::string default_value;
};

// Canonical key table, in resolved-output order.
const std::vector<KeySpec>& config_keys();

struct Override {
  std::string key;
  std::string value;
};

struct RunSpec {
  EngagementConfig cfg;
  int seeds = 1;
};

// Defaults, then the file (if any), then the overrides in order. Unknown
// keys, malformed values, and out-of-box parameters raise ConfigError naming
// the key (and the line, for file entries).
RunSpec parse_config(const std::string& path, const std::vector<Override>& overrides);
RunSpec parse_config(const std::vector<Override>& overrides);

// The fully-resolved key=value map for a spec; re-parsing it reproduces the
// run exactly.
std::map<std::string, std::string> config_to_kv(const RunSpec& spec);
std::string render_config(const RunSpec& spec);  // key=value lines, canonical order

std::string format_double(double v);  // %.17g, round-trip exact

}  // namespace eccm
