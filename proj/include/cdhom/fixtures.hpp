#pragma once

#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

namespace cdhom {

// Golden tables evaluated from the written-out m = 1 and m = 2 formulas
// (cdhom::transcribed). Keys are the file stems: g2, w2, k2, g3, w3, k3.
std::map<std::string, nlohmann::ordered_json> golden_fixtures();

/// Writes <stem>.json for every table into dir (created if missing).
void write_fixtures(const std::filesystem::path &dir);

} // namespace cdhom
