#include "hmaps/io.hpp"

#include <fstream>
#include <sstream>

namespace hmaps::io {

Json to_json(const Rat& r) { return to_string(r); }

Json to_json(const std::vector<Rat>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(to_string(r));
  return a;
}

std::string hex(Word w) {
  std::ostringstream s;
  s << std::hex << w;
  return s.str();
}

Word parse_hex(const std::string& text) {
  std::string t = text;
  if (t.size() > 2 && t[0] == '0' && (t[1] == 'x' || t[1] == 'X')) t = t.substr(2);
  if (t.empty() || t.size() > 16) throw DomainError("bad hex word '" + text + "'");
  Word w = 0;
  for (char c : t) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else throw DomainError("bad hex word '" + text + "'");
    w = (w << 4) | static_cast<Word>(d);
  }
  return w;
}

Json to_json(const MapTable& f) {
  Json j;
  j["k"] = f.k;
  j["n"] = f.n;
  Json imgs = Json::array();
  for (Word w : f.images) imgs.push_back(hex(w));
  j["images"] = std::move(imgs);
  return j;
}

Json to_json(const ProjectiveConfig& cfg) {
  Json j;
  j["m"] = cfg.m;
  j["u"] = cfg.u;
  j["v"] = cfg.v;
  return j;
}

namespace {

int get_int(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer())
    throw DomainError(std::string("missing integer field '") + key + "'");
  return j[key].get<int>();
}

std::vector<Word> get_points(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw DomainError(std::string("missing array field '") + key + "'");
  std::vector<Word> out;
  for (const auto& e : j[key]) {
    if (!e.is_number_integer() || e.get<long long>() < 0)
      throw DomainError(std::string("field '") + key + "' must hold nonnegative integers");
    out.push_back(e.get<Word>());
  }
  return out;
}

}  // namespace

MapTable map_from_json(const Json& j) {
  const int k = get_int(j, "k"), n = get_int(j, "n");
  if (!j.contains("images") || !j["images"].is_array()) throw DomainError("missing array field 'images'");
  std::vector<Word> imgs;
  for (const auto& e : j["images"]) {
    if (!e.is_string()) throw DomainError("map images must be hex strings");
    imgs.push_back(parse_hex(e.get<std::string>()));
  }
  return MapTable(k, n, std::move(imgs));
}

ProjectiveConfig config_from_json(const Json& j) {
  ProjectiveConfig cfg{get_int(j, "m"), get_points(j, "u"), get_points(j, "v")};
  cfg.validate();
  return cfg;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw DomainError("malformed JSON in '" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write '" + path + "'");
  out << text;
}

}  // namespace hmaps::io
