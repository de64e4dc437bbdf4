#ifndef PLANKCERT_SCENE_HPP
#define PLANKCERT_SCENE_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "plankcert/geom.hpp"

// Scene files: the JSON fixtures consumed by the CLI. Angles are radians, the
// format carries an explicit version field, and parsing reports violations
// with the offending field path.

namespace plankcert::scene {

inline constexpr int kSceneVersion = 1;

/// A domain entry keeps the form it was written in so that
/// parse -> serialize -> parse is the identity.
struct DomainEntry {
  enum class Kind { angular, regular };
  Kind kind = Kind::angular;
  geom::AngularDomain angular;  // valid when kind == angular
  geom::RegularDomain regular;  // valid when kind == regular

  geom::AngularDomain as_angular() const {
    return kind == Kind::angular ? angular : regular.as_angular();
  }
};

struct Scene {
  geom::AnnulusConfig config;
  std::vector<DomainEntry> domains;
  std::vector<geom::Strip> strips;
  std::map<std::string, std::string> metadata;

  std::vector<geom::AngularDomain> angular_domains() const;
};

class scene_error : public std::runtime_error {
 public:
  scene_error(const std::string& field_path, const std::string& message)
      : std::runtime_error(field_path + ": " + message), field_path_(field_path) {}
  const std::string& field_path() const { return field_path_; }

 private:
  std::string field_path_;
};

Scene parse(const std::string& json_text);
std::string serialize(const Scene& scene);

Scene load_file(const std::string& path);
void save_file(const Scene& scene, const std::string& path);

/// The built-in default scene: r = 1, R = 2, no domains, no strips.
Scene default_scene();

}  // namespace plankcert::scene

#endif  // PLANKCERT_SCENE_HPP
