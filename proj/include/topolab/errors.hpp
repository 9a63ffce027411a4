#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

#include "topolab/types.hpp"

namespace topolab {

/// Base class for every error this library throws on its own behalf.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidMesh : public Error {
 public:
  using Error::Error;
};

class InvalidCharge : public Error {
 public:
  using Error::Error;
};

class StencilOutOfDomain : public Error {
 public:
  using Error::Error;
};

class StringSingularity : public Error {
 public:
  using Error::Error;
};

class OriginSingularity : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class InvalidIndex : public Error {
 public:
  using Error::Error;
};

class CoincidentPoints : public Error {
 public:
  using Error::Error;
};

class GeometryOverlap : public Error {
 public:
  using Error::Error;
};

class DegenerateSample : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Field magnitude below tolerance; remembers where.
class ZeroFieldPoint : public Error {
 public:
  explicit ZeroFieldPoint(const Vec3& x) : Error(format(x)), location_(x) {}
  const Vec3& location() const { return location_; }

 private:
  static std::string format(const Vec3& x) {
    std::ostringstream os;
    os << "field magnitude below tolerance at (" << x.x() << ", " << x.y()
       << ", " << x.z() << ")";
    return os.str();
  }
  Vec3 location_;
};

/// Configuration problem; remembers the offending key.
class ConfigError : public Error {
 public:
  ConfigError(std::string key, const std::string& what)
      : Error("config key '" + key + "': " + what), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

}  // namespace topolab
