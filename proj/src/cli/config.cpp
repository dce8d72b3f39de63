#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qsched/cli.hpp"

namespace qsched::cli {
namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items())
    if (!allowed.contains(key)) throw ConfigError("unknown key '" + where + key + "'");
}

const json& require_object(const json& v, const std::string& key) {
  if (!v.is_object()) throw ConfigError("key '" + key + "' must be an object");
  return v;
}

int get_int(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError("missing key '" + path + key + "'");
  if (!it->is_number_integer()) throw ConfigError("key '" + path + key + "' must be an integer");
  const auto v = it->get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw ConfigError("key '" + path + key + "' is out of range");
  return static_cast<int>(v);
}

void read_group(const json& doc, const std::string& key, int& size, int& per_day) {
  auto it = doc.find(key);
  if (it == doc.end()) return;
  const json& g = require_object(*it, key);
  reject_unknown(g, {"size", "per_day"}, key + ".");
  size = get_int(g, "size", key + ".");
  per_day = get_int(g, "per_day", key + ".");
}

std::optional<double> get_weight(const json& w, const std::string& key) {
  auto it = w.find(key);
  if (it == w.end() || it->is_null()) return std::nullopt;
  if (!it->is_number()) throw ConfigError("key 'weights." + key + "' must be a number");
  return it->get<double>();
}

}  // namespace

nsp::Instance parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown(doc,
                 {"nurses", "graveyard", "night", "day_per_day", "max_consecutive", "days",
                  "first_weekday", "soft_two_day_leave", "weights", "workload_target"},
                 "");

  nsp::Instance inst;
  inst.nurses = get_int(doc, "nurses", "");
  read_group(doc, "graveyard", inst.graveyard_size, inst.graveyard_per_day);
  read_group(doc, "night", inst.night_size, inst.night_per_day);
  if (doc.contains("day_per_day")) inst.day_per_day = get_int(doc, "day_per_day", "");
  inst.max_consecutive = get_int(doc, "max_consecutive", "");
  inst.days = get_int(doc, "days", "");

  auto wd = doc.find("first_weekday");
  if (wd == doc.end()) throw ConfigError("missing key 'first_weekday'");
  if (!wd->is_string()) throw ConfigError("key 'first_weekday' must be a string such as \"Thu\"");
  auto day = nsp::parse_weekday(wd->get<std::string>());
  if (!day) throw ConfigError("key 'first_weekday' must be one of Mon, Tue, Wed, Thu, Fri, Sat, Sun");
  inst.first_weekday = *day;

  if (auto it = doc.find("soft_two_day_leave"); it != doc.end()) {
    if (!it->is_boolean()) throw ConfigError("key 'soft_two_day_leave' must be true or false");
    inst.soft_two_day_leave = it->get<bool>();
  }
  if (auto it = doc.find("weights"); it != doc.end() && !it->is_null()) {
    const json& w = require_object(*it, "weights");
    reject_unknown(w, {"t1", "t2", "t3", "t4", "workload", "soft"}, "weights.");
    inst.weights = {get_weight(w, "t1"), get_weight(w, "t2"),       get_weight(w, "t3"),
                    get_weight(w, "t4"), get_weight(w, "workload"), get_weight(w, "soft")};
  }
  if (auto it = doc.find("workload_target"); it != doc.end() && !it->is_null())
    inst.workload_target = get_int(doc, "workload_target", "");

  try {
    inst.validate();
  } catch (const InstanceError& e) {
    throw ConfigError(e.what());
  }
  return inst;
}

nsp::Instance load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace qsched::cli
