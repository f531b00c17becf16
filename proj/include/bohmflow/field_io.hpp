#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "bohmflow/field.hpp"

namespace bohmflow {

/// Header of a .cfield / .rfield dump: text key:value lines terminated by an
/// "end-header" line, followed by raw little-endian 64-bit floats in
/// row-major axis order ((re, im) pairs for complex fields).
struct FieldHeader {
  std::string format = "bohmflow-field v1";
  std::string name;
  bool is_complex = true;
  std::vector<Eigen::Index> dims;
  std::vector<double> lower, upper;
  Boundary boundary = Boundary::Periodic;
  double hbar = 1.0;
  std::map<std::string, std::string> extra;  // config_hash, timestamp, ...

  GridPtr make_grid() const;
};

void write_cfield(const std::filesystem::path& path, const ComplexField& f,
                  const std::string& name,
                  const std::map<std::string, std::string>& extra = {});
void write_rfield(const std::filesystem::path& path, const RealField& f,
                  const std::string& name,
                  const std::map<std::string, std::string>& extra = {});

ComplexField read_cfield(const std::filesystem::path& path,
                         FieldHeader* header = nullptr);
RealField read_rfield(const std::filesystem::path& path,
                      FieldHeader* header = nullptr);

/// Header without the payload (any of .cfield/.rfield).
FieldHeader inspect_field(const std::filesystem::path& path);

/// Human-readable header echo plus norm/min/max summary, as printed by the
/// `inspect` subcommand.
std::string describe_field_file(const std::filesystem::path& path);

}  // namespace bohmflow
