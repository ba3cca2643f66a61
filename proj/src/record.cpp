#include "geoprod/record.hpp"

#include <sstream>

#include "geoprod/error.hpp"

namespace geoprod {

using nlohmann::json;

bool ResultRecord::all_checks_pass() const {
  for (const auto& [name, ok] : checks)
    if (!ok) return false;
  for (const auto& [name, t] : counts)
    if (t.passed != t.total) return false;
  return true;
}

bool ResultRecord::any_timeout() const { return (g && g->timeout) || (h && h->timeout); }

namespace {

json vertices_json(const std::vector<Coordinates>& vs) {
  json arr = json::array();
  for (const auto& c : vs) {
    if (c.size() == 1) {
      arr.push_back(c.front());
    } else {
      arr.push_back(c);
    }
  }
  return arr;
}

std::vector<Coordinates> vertices_from_json(const json& arr) {
  std::vector<Coordinates> out;
  for (const auto& v : arr) {
    if (v.is_array()) {
      out.push_back(v.get<Coordinates>());
    } else {
      out.push_back({v.get<Vertex>()});
    }
  }
  return out;
}

void put_param(json& j, const char* key, const char* upper_key, const std::optional<ParamValue>& p) {
  if (!p) return;
  if (p->timeout) {
    j[key] = "timeout";
    j[upper_key] = p->value;
  } else {
    j[key] = p->value;
  }
}

std::optional<ParamValue> get_param(const json& j, const char* key, const char* upper_key) {
  if (!j.contains(key)) return std::nullopt;
  const auto& v = j.at(key);
  if (v.is_string()) {
    if (v.get<std::string>() != "timeout") throw Error(ErrorCode::ParseError, std::string(key) + " must be an integer or \"timeout\"");
    return ParamValue{j.value(upper_key, std::size_t{0}), true};
  }
  return ParamValue{v.get<std::size_t>(), false};
}

}  // namespace

json to_json(const ResultRecord& r) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["instance"] = r.instance;
  put_param(j, "g", "g_upper", r.g);
  put_param(j, "h", "h_upper", r.h);
  if (!r.witness_g.empty()) j["witness_g"] = vertices_json(r.witness_g);
  if (!r.witness_h.empty()) j["witness_h"] = vertices_json(r.witness_h);
  if (r.reference_g) j["reference_g"] = *r.reference_g;
  if (r.reference_h) j["reference_h"] = *r.reference_h;
  if (!r.checks.empty()) j["checks"] = r.checks;
  if (!r.counts.empty()) {
    json c = json::object();
    for (const auto& [name, t] : r.counts) c[name] = {t.passed, t.total};
    j["counts"] = c;
  }
  if (!r.sets.empty()) {
    json s = json::object();
    for (const auto& [name, vs] : r.sets) s[name] = vertices_json(vs);
    j["sets"] = s;
  }
  if (!r.metrics.empty()) j["metrics"] = r.metrics;
  if (!r.failures.empty()) j["failures"] = r.failures;
  if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
  return j;
}

ResultRecord record_from_json(const json& j) {
  if (j.value("schema_version", 0) != kSchemaVersion) {
    throw Error(ErrorCode::ParseError, "unsupported schema_version");
  }
  ResultRecord r;
  r.instance = j.at("instance").get<std::string>();
  r.g = get_param(j, "g", "g_upper");
  r.h = get_param(j, "h", "h_upper");
  if (j.contains("witness_g")) r.witness_g = vertices_from_json(j.at("witness_g"));
  if (j.contains("witness_h")) r.witness_h = vertices_from_json(j.at("witness_h"));
  if (j.contains("reference_g")) r.reference_g = j.at("reference_g").get<std::string>();
  if (j.contains("reference_h")) r.reference_h = j.at("reference_h").get<std::string>();
  if (j.contains("checks")) r.checks = j.at("checks").get<std::map<std::string, bool>>();
  if (j.contains("counts")) {
    for (const auto& [name, pair] : j.at("counts").items()) r.counts[name] = {pair.at(0), pair.at(1)};
  }
  if (j.contains("sets")) {
    for (const auto& [name, vs] : j.at("sets").items()) r.sets[name] = vertices_from_json(vs);
  }
  if (j.contains("metrics")) r.metrics = j.at("metrics").get<std::map<std::string, long long>>();
  if (j.contains("failures")) r.failures = j.at("failures").get<std::vector<std::string>>();
  if (j.contains("timing_ms")) r.timing_ms = j.at("timing_ms").get<double>();
  return r;
}

std::string to_jsonl(const ResultRecord& r) { return to_json(r).dump(); }

std::string csv_header() { return "instance,g,h,ms"; }

std::string to_csv(const ResultRecord& r) {
  auto param = [](const std::optional<ParamValue>& p) -> std::string {
    if (!p) return "";
    return p->timeout ? "timeout" : std::to_string(p->value);
  };
  std::ostringstream os;
  // Instances never contain '"'; quote them because of the ',' in K<p>,<q>.
  os << '"' << r.instance << "\"," << param(r.g) << ',' << param(r.h) << ',';
  if (r.timing_ms) os << static_cast<long long>(*r.timing_ms + 0.5);
  return os.str();
}

std::vector<Coordinates> coordinates(const Instance& inst, const VertexSet& s) {
  std::vector<Coordinates> out;
  s.for_each([&](Vertex v) {
    if (inst.product) {
      const auto pv = inst.product->decode(v);
      out.push_back({pv.left, pv.right});
    } else {
      out.push_back({v});
    }
  });
  return out;
}

}  // namespace geoprod
