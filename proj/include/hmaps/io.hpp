#pragma once

// JSON formats. Rationals are "p/q" strings; MapTable images are hex strings
// of the little-endian word; ProjectiveConfig points are integers < 2^m.

#include "hmaps/exact.hpp"
#include "hmaps/map_table.hpp"
#include "hmaps/projective.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hmaps::io {

using Json = nlohmann::ordered_json;

Json to_json(const Rat& r);
Json to_json(const std::vector<Rat>& v);
Json to_json(const MapTable& f);
Json to_json(const ProjectiveConfig& cfg);

/// Throws DomainError on malformed input.
MapTable map_from_json(const Json& j);
ProjectiveConfig config_from_json(const Json& j);

std::string hex(Word w);
/// Hex with or without a 0x prefix.
Word parse_hex(const std::string& text);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace hmaps::io
