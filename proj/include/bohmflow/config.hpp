#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace bohmflow {

/// Scalar or array-of-scalar config value.
struct ConfigValue {
  using Array = std::vector<ConfigValue>;
  std::variant<std::string, double, bool, Array> data;

  bool is_string() const { return std::holds_alternative<std::string>(data); }
  bool is_number() const { return std::holds_alternative<double>(data); }
  bool is_bool() const { return std::holds_alternative<bool>(data); }
  bool is_array() const { return std::holds_alternative<Array>(data); }

  const std::string& as_string() const;
  double as_number() const;
  long as_integer() const;  // number that must be integral
  bool as_bool() const;
  const Array& as_array() const;
  std::vector<double> as_number_array() const;

  bool operator==(const ConfigValue& other) const;
};

struct config_error : std::runtime_error {
  config_error(const std::string& msg, std::string key_path = {}, int line = 0,
               int column = 0)
      : std::runtime_error(msg), key(std::move(key_path)), line(line),
        column(column) {}
  std::string key;
  int line, column;
};

/// Flat map of dotted keys to typed values, parsed from "key = value" lines.
class ConfigMap {
public:
  void set(const std::string& key, ConfigValue v) { entries_[key] = std::move(v); }
  bool has(const std::string& key) const { return entries_.count(key) > 0; }
  const ConfigValue& at(const std::string& key) const;
  const std::map<std::string, ConfigValue>& entries() const { return entries_; }

  std::string get_string(const std::string& key, const std::string& dflt) const;
  double get_number(const std::string& key, double dflt) const;
  long get_integer(const std::string& key, long dflt) const;
  bool get_bool(const std::string& key, bool dflt) const;
  std::vector<double> get_number_array(const std::string& key,
                                       std::vector<double> dflt) const;

  /// Apply other on top of this map (later layer wins).
  void merge_from(const ConfigMap& other);

  bool operator==(const ConfigMap& other) const {
    return entries_ == other.entries_;
  }

private:
  std::map<std::string, ConfigValue> entries_;
};

/// Parse config text; errors carry line/column.
ConfigMap parse_config(const std::string& text);
ConfigMap load_config_file(const std::filesystem::path& path);
/// Parse a single "key=value" override (CLI form).
std::pair<std::string, ConfigValue> parse_override(const std::string& spec);
/// Canonical serialization: sorted keys, round-trip number formatting.
std::string serialize_config(const ConfigMap& map);

/// Validated run configuration with layered defaults
/// (catalog -> file -> CLI overrides, later wins).
struct RunConfig {
  ConfigMap map;
  std::string scenario;
  std::filesystem::path out_dir;
  int workers = 1;
  unsigned long seed = 0;
  std::string format_version = "1";
  bool strict = true;

  std::string config_hash() const;
};

/// Validate a merged map against the known-key registry. Unknown keys are
/// rejected in strict mode with the exact key path; value constraints
/// (dt > 0, ...) are enforced in both modes.
RunConfig validate_config(const ConfigMap& merged, bool strict,
                          std::vector<std::string>* warnings = nullptr);

}  // namespace bohmflow
