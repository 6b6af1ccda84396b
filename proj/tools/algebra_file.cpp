#include "algebra_file.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

#include <json.hpp>

namespace nilcoh::cli {

namespace {

using nlohmann::json;

std::size_t index_field(const json& entry, const char* field, std::size_t dim, std::size_t n) {
  const auto it = entry.find(field);
  if (it == entry.end())
    throw ParseError("bracket " + std::to_string(n) + ": missing field '" + field + "'");
  if (!it->is_number_integer())
    throw ParseError("bracket " + std::to_string(n) + ": '" + field + "' must be an integer");
  const auto v = it->get<long long>();
  if (v < 1 || static_cast<unsigned long long>(v) > dim)
    throw ParseError("bracket " + std::to_string(n) + ": '" + field + "' = " + std::to_string(v) +
                     " outside 1.." + std::to_string(dim));
  return static_cast<std::size_t>(v - 1);
}

}  // namespace

LieAlgebra parse_algebra_file(std::string_view text, const std::string& fallback_name) {
  std::vector<std::set<std::string>> seen;
  std::optional<std::string> duplicate;
  json::parser_callback_t track = [&](int, json::parse_event_t event, json& parsed) {
    if (event == json::parse_event_t::object_start) {
      seen.emplace_back();
    } else if (event == json::parse_event_t::object_end) {
      seen.pop_back();
    } else if (event == json::parse_event_t::key) {
      const auto& key = parsed.get_ref<const std::string&>();
      if (!seen.back().insert(key).second && !duplicate) duplicate = key;
    }
    return true;
  };

  json doc;
  try {
    doc = json::parse(text.begin(), text.end(), track);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  if (duplicate) throw ParseError("duplicate key '" + *duplicate + "'");
  if (!doc.is_object()) throw ParseError("top level must be an object");

  for (const auto& [key, _] : doc.items())
    if (key != "name" && key != "dim" && key != "brackets") throw ParseError("unknown field '" + key + "'");

  std::string name = fallback_name;
  if (const auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw ParseError("'name' must be a string");
    name = it->get<std::string>();
  }

  const auto dim_it = doc.find("dim");
  if (dim_it == doc.end()) throw ParseError("missing field 'dim'");
  if (!dim_it->is_number_integer() || dim_it->get<long long>() < 1)
    throw ParseError("'dim' must be a positive integer");
  const auto dim = static_cast<std::size_t>(dim_it->get<long long>());

  const auto br_it = doc.find("brackets");
  if (br_it == doc.end()) throw ParseError("missing field 'brackets'");
  if (!br_it->is_array()) throw ParseError("'brackets' must be an array");

  std::vector<StructureConstant> constants;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> keys;
  std::size_t n = 0;
  for (const auto& entry : *br_it) {
    ++n;
    if (!entry.is_object()) throw ParseError("bracket " + std::to_string(n) + ": must be an object");
    for (const auto& [key, _] : entry.items())
      if (key != "i" && key != "j" && key != "k" && key != "c")
        throw ParseError("bracket " + std::to_string(n) + ": unknown field '" + key + "'");
    StructureConstant sc;
    sc.i = index_field(entry, "i", dim, n);
    sc.j = index_field(entry, "j", dim, n);
    sc.k = index_field(entry, "k", dim, n);
    const auto c_it = entry.find("c");
    if (c_it == entry.end()) throw ParseError("bracket " + std::to_string(n) + ": missing field 'c'");
    if (!c_it->is_string()) throw ParseError("bracket " + std::to_string(n) + ": 'c' must be a string");
    try {
      sc.value = parse_rational(c_it->get<std::string>());
    } catch (const InputError& e) {
      throw ParseError("bracket " + std::to_string(n) + ": " + e.what());
    }
    if (sc.i == sc.j) throw ParseError("bracket " + std::to_string(n) + ": i = j is not allowed");
    if (!keys.emplace(sc.i, sc.j, sc.k).second)
      throw ParseError("bracket " + std::to_string(n) + ": duplicate (i,j,k)");
    constants.push_back(sc);
  }
  try {
    return LieAlgebra(name, dim, std::move(constants));
  } catch (const InputError& e) {
    throw ParseError(e.what());
  }
}

LieAlgebra read_algebra_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_algebra_file(buffer.str(), path.stem().string());
}

std::string serialize_algebra(const LieAlgebra& a) {
  nlohmann::ordered_json doc;
  doc["name"] = a.name();
  doc["dim"] = a.dim();
  doc["brackets"] = nlohmann::ordered_json::array();
  for (const auto& sc : a.structure_constants()) {
    nlohmann::ordered_json entry;
    entry["i"] = sc.i + 1;
    entry["j"] = sc.j + 1;
    entry["k"] = sc.k + 1;
    entry["c"] = to_string(sc.value);
    doc["brackets"].push_back(std::move(entry));
  }
  return doc.dump() + "\n";
}

}  // namespace nilcoh::cli
