#pragma once

#include <stdexcept>

namespace patchfx {

// Error taxonomy maps onto the CLI exit-code contract:
//   2 = usage / schema / bad spec, 3 = data quality, 4 = internal invariant.

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid synthetic-data specification.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DataQualityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Frame cannot be built or fitted (degenerate arm, empty frame, ...).
class FrameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace patchfx
