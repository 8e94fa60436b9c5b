#include "g2fp/io.hpp"

#include <fstream>
#include <sstream>

namespace g2fp {

namespace {

BigInt decimal_field(const Json& v, const std::string& what) {
  if (!v.is_string()) throw MalformedData(what + " must be a decimal string");
  return parse_bigint(v.get<std::string>());
}

int read_n(const Json& doc) {
  if (!doc.is_object()) throw MalformedData("document must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw MalformedData("\"n\" must be an integer");
  }
  const auto n = doc["n"].get<long long>();
  if (n < 1 || n > 1'000'000) throw MalformedData("\"n\" out of range: " + std::to_string(n));
  if (!doc.contains("points") || !doc["points"].is_array()) {
    throw MalformedData("\"points\" must be an array");
  }
  if (doc["points"].size() != static_cast<std::size_t>(n) + 2) {
    throw MalformedData("\"points\" must hold n+2 = " + std::to_string(n + 2) + " entries");
  }
  return static_cast<int>(n);
}

BigInt read_phi(const Json& point, std::size_t i) {
  if (!point.is_object() || !point.contains("phi")) {
    throw MalformedData("point " + std::to_string(i) + " lacks \"phi\"");
  }
  return decimal_field(point["phi"], "phi of point " + std::to_string(i));
}

}  // namespace

FixedPointData parse_data_file(const Json& doc) {
  const int n = read_n(doc);
  std::vector<FixedPoint> points;
  std::size_t i = 0;
  for (const Json& p : doc["points"]) {
    FixedPoint fp{read_phi(p, i), {}};
    if (!p.contains("weights") || !p["weights"].is_array()) {
      throw MalformedData("point " + std::to_string(i) + " lacks a \"weights\" array");
    }
    for (const Json& w : p["weights"]) {
      fp.weights.push_back(decimal_field(w, "weight at point " + std::to_string(i)));
    }
    points.push_back(std::move(fp));
    ++i;
  }
  return FixedPointData(n, std::move(points));
}

MomentProfile parse_profile(const Json& doc) {
  const int n = read_n(doc);
  std::vector<BigInt> phi;
  std::size_t i = 0;
  for (const Json& p : doc["points"]) phi.push_back(read_phi(p, i++));
  try {
    return MomentProfile(n, std::move(phi));
  } catch (const InvalidProfile& e) {
    throw MalformedData(e.what());
  }
}

Json to_json(const FixedPointData& data) {
  Json doc;
  doc["n"] = data.n();
  Json points = Json::array();
  for (const auto& p : data.points()) {
    Json weights = Json::array();
    for (const auto& w : p.weights) weights.push_back(to_string(w));
    points.push_back(Json{{"phi", to_string(p.phi)}, {"weights", std::move(weights)}});
  }
  doc["points"] = std::move(points);
  return doc;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedData("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedData(path + ": " + e.what());
  }
}

}  // namespace g2fp
