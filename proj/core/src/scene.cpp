#include "plankcert/scene.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace plankcert::scene {

using nlohmann::json;

std::vector<geom::AngularDomain> Scene::angular_domains() const {
  std::vector<geom::AngularDomain> out;
  out.reserve(domains.size());
  for (const DomainEntry& e : domains) out.push_back(e.as_angular());
  return out;
}

namespace {

double require_number(const json& j, const std::string& path) {
  if (!j.is_number()) throw scene_error(path, "expected a number");
  return j.get<double>();
}

double get_number(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.contains(key)) throw scene_error(path + "." + key, "missing field");
  return require_number(obj.at(key), path + "." + key);
}

geom::PointXY get_point(const json& obj, const std::string& key, const std::string& path) {
  const std::string p = path + "." + key;
  if (!obj.contains(key)) throw scene_error(p, "missing field");
  const json& arr = obj.at(key);
  if (!arr.is_array() || arr.size() != 2) throw scene_error(p, "expected [x, y]");
  return {require_number(arr[0], p + "[0]"), require_number(arr[1], p + "[1]")};
}

template <typename Fn>
auto rethrow_as(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const scene_error&) {
    throw;
  } catch (const std::exception& e) {
    throw scene_error(path, e.what());
  }
}

}  // namespace

Scene parse(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw scene_error("$", std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw scene_error("$", "expected a JSON object");

  if (!root.contains("version")) throw scene_error("version", "missing field");
  if (!root.at("version").is_number_integer() || root.at("version").get<int>() != kSceneVersion) {
    throw scene_error("version", "unsupported scene version (expected 1)");
  }

  Scene scene;
  if (!root.contains("config")) throw scene_error("config", "missing field");
  const json& cfg = root.at("config");
  if (!cfg.is_object()) throw scene_error("config", "expected an object");
  const double r = get_number(cfg, "r", "config");
  const double R = get_number(cfg, "R", "config");
  scene.config = rethrow_as("config", [&] { return geom::AnnulusConfig::make(r, R); });

  if (root.contains("domains")) {
    const json& arr = root.at("domains");
    if (!arr.is_array()) throw scene_error("domains", "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string path = "domains[" + std::to_string(i) + "]";
      const json& d = arr[i];
      if (!d.is_object()) throw scene_error(path, "expected an object");
      DomainEntry entry;
      if (d.contains("vertex")) {
        entry.kind = DomainEntry::Kind::angular;
        const geom::PointXY v = get_point(d, "vertex", path);
        const double start = get_number(d, "start_angle", path);
        const double sweep = get_number(d, "sweep", path);
        entry.angular = rethrow_as(path, [&] { return geom::AngularDomain::make(v, start, sweep); });
      } else if (d.contains("vertex_angle")) {
        entry.kind = DomainEntry::Kind::regular;
        const double va = get_number(d, "vertex_angle", path);
        const double chi = get_number(d, "chirality", path);
        const double alpha = get_number(d, "alpha", path);
        if (chi != 1.0 && chi != -1.0) throw scene_error(path + ".chirality", "must be +1 or -1");
        entry.regular = rethrow_as(
            path, [&] { return geom::make_regular(scene.config, va, static_cast<int>(chi), alpha); });
      } else {
        throw scene_error(path, "expected either {vertex, start_angle, sweep} or "
                                "{vertex_angle, chirality, alpha}");
      }
      scene.domains.push_back(entry);
    }
  }

  if (root.contains("strips")) {
    const json& arr = root.at("strips");
    if (!arr.is_array()) throw scene_error("strips", "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string path = "strips[" + std::to_string(i) + "]";
      const json& s = arr[i];
      if (!s.is_object()) throw scene_error(path, "expected an object");
      const double normal = get_number(s, "normal_angle", path);
      const double lo = get_number(s, "offset_low", path);
      const double hi = get_number(s, "offset_high", path);
      scene.strips.push_back(rethrow_as(path, [&] { return geom::Strip::make(normal, lo, hi); }));
    }
  }

  if (root.contains("metadata")) {
    const json& meta = root.at("metadata");
    if (!meta.is_object()) throw scene_error("metadata", "expected an object");
    for (const auto& [key, value] : meta.items()) {
      if (!value.is_string()) throw scene_error("metadata." + key, "expected a string");
      scene.metadata[key] = value.get<std::string>();
    }
  }

  return scene;
}

std::string serialize(const Scene& scene) {
  json root;
  root["version"] = kSceneVersion;
  root["config"] = {{"r", scene.config.r}, {"R", scene.config.R}};

  json domains = json::array();
  for (const DomainEntry& e : scene.domains) {
    if (e.kind == DomainEntry::Kind::angular) {
      domains.push_back({{"vertex", {e.angular.vertex.x, e.angular.vertex.y}},
                         {"start_angle", e.angular.start_direction},
                         {"sweep", e.angular.sweep}});
    } else {
      domains.push_back({{"vertex_angle", e.regular.vertex_angle},
                         {"chirality", e.regular.chirality},
                         {"alpha", e.regular.alpha}});
    }
  }
  root["domains"] = domains;

  json strips = json::array();
  for (const geom::Strip& s : scene.strips) {
    strips.push_back({{"normal_angle", s.normal_angle},
                      {"offset_low", s.offset_low},
                      {"offset_high", s.offset_high}});
  }
  root["strips"] = strips;

  json meta = json::object();
  for (const auto& [k, v] : scene.metadata) meta[k] = v;
  root["metadata"] = meta;

  return root.dump(2) + "\n";
}

Scene load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scene file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

void save_file(const Scene& scene, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write scene file: " + path);
  out << serialize(scene);
  if (!out) throw std::runtime_error("failed writing scene file: " + path);
}

Scene default_scene() {
  Scene s;
  s.config = geom::AnnulusConfig::make(1.0, 2.0);
  return s;
}

}  // namespace plankcert::scene
