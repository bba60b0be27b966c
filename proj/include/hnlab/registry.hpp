#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hnlab/liealg.hpp"

namespace hnlab {

/// Directory of user algebra definition files (one JSON file per algebra).
/// HNLAB_REGISTRY overrides the default $XDG_DATA_HOME/hnlab/algebras
/// (falling back to ~/.local/share/hnlab/algebras).
class Registry {
 public:
  explicit Registry(std::filesystem::path dir) : dir_(std::move(dir)) {}

  static std::filesystem::path default_directory() {
    if (const char* env = std::getenv("HNLAB_REGISTRY"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_DATA_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "hnlab" / "algebras";
    if (const char* home = std::getenv("HOME"); home && *home)
      return std::filesystem::path(home) / ".local" / "share" / "hnlab" / "algebras";
    return std::filesystem::current_path() / ".hnlab" / "algebras";
  }
  static Registry open_default() { return Registry(default_directory()); }

  const std::filesystem::path& directory() const { return dir_; }

  /// All registered algebras, sorted by file name. Unreadable or invalid
  /// files throw, naming the file.
  std::vector<LieAlgebraSpec> load_all() const {
    std::vector<LieAlgebraSpec> out;
    if (!std::filesystem::is_directory(dir_)) return out;
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir_))
      if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      try {
        out.push_back(load_algebra(read_file(f)));
      } catch (const ParseError& e) {
        throw ParseError(f.string() + ": " + e.what());
      }
    }
    return out;
  }

  /// Persists a validated algebra. Throws std::invalid_argument when the
  /// name is already taken by a built-in or registered algebra.
  std::filesystem::path add(const LieAlgebraSpec& alg) const {
    for (const auto& b : builtin_catalog())
      if (b.name == alg.name) throw std::invalid_argument("algebra '" + alg.name + "' is built in");
    for (const auto& r : load_all())
      if (r.name == alg.name) throw std::invalid_argument("algebra '" + alg.name + "' is already registered");
    std::filesystem::create_directories(dir_);
    auto path = dir_ / (alg.name + ".json");
    std::ofstream out(path);
    out << serialize_algebra(alg) << "\n";
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return path;
  }

  static std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw ParseError("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

 private:
  std::filesystem::path dir_;
};

}  // namespace hnlab
