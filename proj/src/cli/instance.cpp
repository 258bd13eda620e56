#include "strassen/cli/instance.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "strassen/errors.hpp"

namespace strassen::cli {
namespace {

using nlohmann::json;

const json& field(const json& object, const char* key,
                  const std::string& path) {
  if (!object.is_object()) throw ParseError(path + ": expected an object");
  auto it = object.find(key);
  if (it == object.end()) {
    throw ParseError(path + ": missing field '" + key + "'");
  }
  return *it;
}

std::string kind_of(const json& object, const std::string& path) {
  const json& kind = field(object, "kind", path);
  if (!kind.is_string()) throw ParseError(path + ".kind: expected a string");
  return kind.get<std::string>();
}

Index parse_index(const json& value, const std::string& path) {
  if (!value.is_number_unsigned()) {
    throw ParseError(path + ": expected a nonnegative integer");
  }
  return value.get<Index>();
}

Order parse_order(const json& doc) {
  const json& order = field(doc, "order", "instance");
  const std::string kind = kind_of(order, "order");
  if (kind == "total") return Order::total();
  if (kind == "divisibility") return Order::divisibility();
  if (kind != "explicit-pairs") {
    throw ParseError("order.kind: unknown order kind '" + kind + "'");
  }
  const json& pairs = field(order, "pairs", "order");
  if (!pairs.is_array()) throw ParseError("order.pairs: expected an array");
  std::vector<IndexPair> parsed;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string path = "order.pairs[" + std::to_string(i) + "]";
    const json& pair = pairs[i];
    if (!pair.is_array() || pair.size() != 2) {
      throw ParseError(path + ": expected [n, m]");
    }
    parsed.push_back({parse_index(pair[0], path + "[0]"),
                      parse_index(pair[1], path + "[1]")});
  }
  try {
    return Order::explicit_pairs(std::move(parsed));
  } catch (const CycleError& e) {
    throw ValidationError("order.pairs", std::string("cycle: ") + e.what());
  }
}

MeasureSource parse_measure(const json& doc, const char* name) {
  const std::string path = name;
  const json& measure = field(doc, name, "instance");
  const std::string kind = kind_of(measure, path);
  if (kind == "geometric") {
    Rational ratio =
        parse_rational(field(measure, "ratio", path), path + ".ratio");
    try {
      return MeasureSource::geometric(std::move(ratio));
    } catch (const DomainError& e) {
      throw ValidationError(path + ".ratio", e.what());
    }
  }
  if (kind != "explicit") {
    throw ParseError(path + ".kind: unknown measure kind '" + kind + "'");
  }
  const json& values = field(measure, "values", path);
  if (!values.is_array()) {
    throw ParseError(path + ".values: expected an array");
  }
  std::vector<Rational> parsed;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::string at = path + ".values[" + std::to_string(i) + "]";
    parsed.push_back(parse_rational(values[i], at));
    if (parsed.back().sign() < 0) {
      throw ValidationError(at, "negative mass " + parsed.back().str());
    }
  }
  try {
    return MeasureSource::explicit_values(std::move(parsed));
  } catch (const NormalizationError&) {
    throw ValidationError(path + ".values", "sum != 1");
  }
}

json serialize_measure(const MeasureSource& source) {
  if (source.kind() == MeasureSource::Kind::kGeometric) {
    return {{"kind", "geometric"}, {"ratio", source.ratio().str()}};
  }
  json values = json::array();
  for (const Rational& v : source.values()) values.push_back(v.str());
  return {{"kind", "explicit"}, {"values", std::move(values)}};
}

}  // namespace

Rational parse_rational(const json& value, const std::string& path) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (!value.is_string()) {
    throw ParseError(path + ": expected a rational string \"p/q\"");
  }
  try {
    return Rational::parse(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("instance: expected an object");

  Order order = parse_order(doc);
  MeasureSource mu = parse_measure(doc, "mu");
  MeasureSource nu = parse_measure(doc, "nu");
  std::optional<Index> hint;
  if (auto it = doc.find("ground_hint"); it != doc.end() && !it->is_null()) {
    hint = parse_index(*it, "ground_hint");
  }
  return Instance{std::move(order), std::move(mu), std::move(nu), hint};
}

json serialize_instance(const Instance& instance) {
  json order;
  switch (instance.order.kind()) {
    case Order::Kind::kTotal:
      order = {{"kind", "total"}};
      break;
    case Order::Kind::kDivisibility:
      order = {{"kind", "divisibility"}};
      break;
    case Order::Kind::kExplicitPairs: {
      json pairs = json::array();
      for (const IndexPair& pair : instance.order.pairs()) {
        pairs.push_back({pair.n, pair.m});
      }
      order = {{"kind", "explicit-pairs"}, {"pairs", std::move(pairs)}};
      break;
    }
  }
  json doc = {{"order", std::move(order)},
              {"mu", serialize_measure(instance.mu)},
              {"nu", serialize_measure(instance.nu)}};
  if (instance.ground_hint) doc["ground_hint"] = *instance.ground_hint;
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace strassen::cli
