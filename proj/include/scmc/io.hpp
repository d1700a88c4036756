#pragma once

#include <json.hpp>
#include <string>

#include "scmc/curve.hpp"
#include "scmc/frames.hpp"

namespace scmc {

using json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

// shortest decimal that reads back to the same double
std::string format_double(double v);

json to_json(const SpectralData& d);
json to_json(const Potential& p);
json to_json(const ConditionReport& r);

SpectralData spectral_data_from_json(const json& j);
Potential potential_from_json(const json& j);

// canonical text: two-space indented JSON with a trailing newline
std::string serialize(const SpectralData& d);
std::string serialize(const Potential& p);
SpectralData parse_spectral_data(const std::string& text);
Potential parse_potential(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace scmc
