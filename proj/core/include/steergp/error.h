#ifndef STEERGP_ERROR_H_
#define STEERGP_ERROR_H_

#include <stdexcept>
#include <string>

namespace steergp {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Angular sampling too coarse for the requested mode window.
class BandlimitError : public Error {
 public:
  using Error::Error;
};

// Channel counts, grids or windows of two operands disagree.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A radial grid is not the sample set a transform was planned for.
class GridMismatchError : public Error {
 public:
  using Error::Error;
};

// A mode falls outside the declared window.
class WindowError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent configuration. `key()` names the offending entry.
class ConfigError : public Error {
 public:
  ConfigError(std::string key, const std::string& what)
      : Error("config key '" + key + "': " + what), key_(std::move(key)) {}

  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

}  // namespace steergp

#endif  // STEERGP_ERROR_H_
