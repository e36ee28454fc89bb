#include "chainconic/cli/config_io.hpp"

#include <stdexcept>

namespace chainconic::cli {

namespace {

using nlohmann::json;

Rational rational_at(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw std::invalid_argument(std::string("missing key '") + key + "'");
  const auto& v = obj.at(key);
  if (!v.is_string()) throw std::invalid_argument(std::string("'") + key + "' must be a \"p/q\" string");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("'") + key + "': " + e.what());
  }
}

const json& object_at(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_object()) {
    throw std::invalid_argument(std::string("missing object '") + key + "'");
  }
  return obj.at(key);
}

}  // namespace

json point_to_json(const Point<Rational>& p) { return {{"x", p.x.str()}, {"y", p.y.str()}}; }

json line_to_json(const Line<Rational>& l) { return {{"a", l.a.str()}, {"b", l.b.str()}, {"c", l.c.str()}}; }

json config_to_json(const ChainConfiguration<Rational>& config) {
  json doc;
  doc["version"] = kConfigVersion;
  doc["n"] = config.n;
  const auto& k = config.carrier_k;
  doc["carrierK"] = {{"cx", k.center.x.str()}, {"cy", k.center.y.str()}, {"r", k.radius.str()}};
  if (const auto* circle = std::get_if<RadiusCircle<Rational>>(&config.carrier_l)) {
    doc["carrierL"] = {{"cx", circle->center.x.str()}, {"cy", circle->center.y.str()}, {"r", circle->radius.str()}};
  } else {
    doc["carrierL"] = {{"line", line_to_json(std::get<StraightLine<Rational>>(config.carrier_l).line)}};
  }
  json params = json::array();
  for (const auto& t : config.p_params) params.push_back(t.str());
  doc["pParams"] = std::move(params);
  if (const auto* t = std::get_if<Rational>(&config.q_start)) {
    doc["qStart"] = t->str();
  } else {
    doc["qStart"] = point_to_json(std::get<Point<Rational>>(config.q_start));
  }
  return doc;
}

ChainConfiguration<Rational> config_from_json(const json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("configuration must be a JSON object");
  if (!doc.contains("version") || !doc.at("version").is_number_integer() ||
      doc.at("version").get<int>() != kConfigVersion) {
    throw std::invalid_argument("unsupported or missing 'version' (expected 1)");
  }
  if (!doc.contains("n") || !doc.at("n").is_number_unsigned()) {
    throw std::invalid_argument("'n' must be a non-negative integer");
  }
  ChainConfiguration<Rational> config;
  config.n = doc.at("n").get<std::size_t>();

  const auto& k = object_at(doc, "carrierK");
  config.carrier_k = {{rational_at(k, "cx"), rational_at(k, "cy")}, rational_at(k, "r")};

  const auto& l = object_at(doc, "carrierL");
  if (l.contains("line")) {
    const auto& line = object_at(l, "line");
    const Line<Rational> parsed{rational_at(line, "a"), rational_at(line, "b"), rational_at(line, "c")};
    if (parsed.a.is_zero() && parsed.b.is_zero()) throw std::invalid_argument("carrierL.line needs (a, b) != (0, 0)");
    config.carrier_l = StraightLine<Rational>{parsed};
  } else {
    config.carrier_l = RadiusCircle<Rational>{{rational_at(l, "cx"), rational_at(l, "cy")}, rational_at(l, "r")};
  }

  if (!doc.contains("pParams") || !doc.at("pParams").is_array()) {
    throw std::invalid_argument("'pParams' must be an array");
  }
  for (const auto& t : doc.at("pParams")) {
    if (!t.is_string()) throw std::invalid_argument("'pParams' entries must be \"p/q\" strings");
    config.p_params.push_back(Rational::parse(t.get<std::string>()));
  }

  if (!doc.contains("qStart")) throw std::invalid_argument("missing key 'qStart'");
  const auto& q = doc.at("qStart");
  if (q.is_object()) {
    config.q_start = Point<Rational>{rational_at(q, "x"), rational_at(q, "y")};
  } else {
    config.q_start = rational_at(doc, "qStart");
  }
  return config;
}

std::string dump_config(const ChainConfiguration<Rational>& config) { return config_to_json(config).dump(2) + "\n"; }

ChainConfiguration<Rational> parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  return config_from_json(doc);
}

}  // namespace chainconic::cli
