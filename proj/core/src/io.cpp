#include "archcat/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace archcat {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message, const std::string& where) {
  throw ParseError(message, where);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail("not valid JSON: " + std::string(e.what()), "byte " + std::to_string(e.byte));
  }
}

void require_keys(const json& j, std::initializer_list<const char*> required,
                  const std::string& where) {
  if (!j.is_object()) fail("expected a JSON object", where);
  for (const char* key : required) {
    if (!j.contains(key)) fail(std::string("missing field '") + key + "'", where);
  }
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : required) {
      if (key == k) known = true;
    }
    if (!known) fail("unknown field '" + key + "'", where + "/" + key);
  }
}

std::string get_string(const json& j, const std::string& where) {
  if (!j.is_string()) fail("expected a string", where);
  return j.get<std::string>();
}

std::vector<std::string> get_string_array(const json& j, const std::string& where) {
  if (!j.is_array()) fail("expected an array", where);
  std::vector<std::string> out;
  for (size_t i = 0; i < j.size(); ++i) {
    out.push_back(get_string(j[i], where + "/" + std::to_string(i)));
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> get_pair_array(const json& j,
                                                                const std::string& where) {
  if (!j.is_array()) fail("expected an array", where);
  std::vector<std::pair<std::string, std::string>> out;
  for (size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "/" + std::to_string(i);
    if (!j[i].is_array() || j[i].size() != 2) fail("expected a pair [x, y]", at);
    out.emplace_back(get_string(j[i][0], at + "/0"), get_string(j[i][1], at + "/1"));
  }
  return out;
}

std::vector<std::array<std::string, 3>> get_triple_array(const json& j,
                                                         const std::string& where) {
  if (!j.is_array()) fail("expected an array", where);
  std::vector<std::array<std::string, 3>> out;
  for (size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "/" + std::to_string(i);
    if (!j[i].is_array() || j[i].size() != 3) fail("expected a triple [x, y, z]", at);
    out.push_back({get_string(j[i][0], at + "/0"), get_string(j[i][1], at + "/1"),
                   get_string(j[i][2], at + "/2")});
  }
  return out;
}

CategoryData category_from_json(const json& j) {
  require_keys(j, {"objects", "morphisms", "identities", "composition"}, "");
  CategoryData out;
  out.objects = get_string_array(j["objects"], "/objects");
  if (!j["morphisms"].is_array()) fail("expected an array", "/morphisms");
  for (size_t i = 0; i < j["morphisms"].size(); ++i) {
    const std::string at = "/morphisms/" + std::to_string(i);
    const json& m = j["morphisms"][i];
    require_keys(m, {"name", "dom", "cod"}, at);
    out.morphisms.push_back({get_string(m["name"], at + "/name"), get_string(m["dom"], at + "/dom"),
                             get_string(m["cod"], at + "/cod")});
  }
  if (!j["identities"].is_object()) fail("expected an object", "/identities");
  for (const auto& [obj, mor] : j["identities"].items()) {
    out.identities.emplace_back(obj, get_string(mor, "/identities/" + obj));
  }
  out.composition = get_triple_array(j["composition"], "/composition");
  return out;
}

PreorderData preorder_from_json(const json& j) {
  require_keys(j, {"elements", "pairs"}, "");
  PreorderData out;
  out.elements = get_string_array(j["elements"], "/elements");
  out.pairs = get_pair_array(j["pairs"], "/pairs");
  return out;
}

SemigroupData semigroup_from_json(const json& j) {
  require_keys(j, {"elements", "add", "leq", "zero"}, "");
  SemigroupData out;
  out.elements = get_string_array(j["elements"], "/elements");
  out.add = get_triple_array(j["add"], "/add");
  out.leq = get_pair_array(j["leq"], "/leq");
  out.zero = get_string(j["zero"], "/zero");
  return out;
}

}  // namespace

ParsedInput parse_input_text(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) fail("expected a JSON object at the top level", "");
  if (j.contains("objects")) return category_from_json(j);
  if (j.contains("add")) return semigroup_from_json(j);
  if (j.contains("elements") && j.contains("pairs")) return preorder_from_json(j);
  fail("unrecognized document: expected a category (objects/morphisms), a preorder "
       "(elements/pairs), or a semigroup (elements/add/leq/zero)",
       "");
}

CategoryData parse_category_text(const std::string& text) {
  return category_from_json(parse_json(text));
}

PreorderData parse_preorder_text(const std::string& text) {
  return preorder_from_json(parse_json(text));
}

SemigroupData parse_semigroup_text(const std::string& text) {
  return semigroup_from_json(parse_json(text));
}

namespace {

json to_json(const CategoryData& data) {
  json j;
  j["objects"] = data.objects;
  j["morphisms"] = json::array();
  for (const auto& m : data.morphisms) {
    j["morphisms"].push_back({{"name", m.name}, {"dom", m.dom}, {"cod", m.cod}});
  }
  j["identities"] = json::object();
  for (const auto& [obj, mor] : data.identities) j["identities"][obj] = mor;
  j["composition"] = json::array();
  for (const auto& entry : data.composition) {
    j["composition"].push_back({entry[0], entry[1], entry[2]});
  }
  return j;
}

json to_json(const PreorderData& data) {
  json j;
  j["elements"] = data.elements;
  j["pairs"] = json::array();
  for (const auto& [x, y] : data.pairs) j["pairs"].push_back({x, y});
  return j;
}

json to_json(const SemigroupData& data) {
  json j;
  j["elements"] = data.elements;
  j["add"] = json::array();
  for (const auto& entry : data.add) j["add"].push_back({entry[0], entry[1], entry[2]});
  j["leq"] = json::array();
  for (const auto& [x, y] : data.leq) j["leq"].push_back({x, y});
  j["zero"] = data.zero;
  return j;
}

}  // namespace

std::string to_text(const CategoryData& data) { return to_json(data).dump(2) + "\n"; }
std::string to_text(const PreorderData& data) { return to_json(data).dump(2) + "\n"; }
std::string to_text(const SemigroupData& data) { return to_json(data).dump(2) + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file '" + path + "'", path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace archcat
