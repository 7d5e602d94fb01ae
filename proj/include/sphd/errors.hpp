#pragma once

#include <stdexcept>
#include <string>

namespace sphd {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: non-finite coordinates, dimension mismatches,
// values outside an operation's domain.
class invalid_input : public error {
 public:
  using error::error;
};

// Fewer data points than the depth definition needs (2 for pairs, 3 for
// triangles).
class insufficient_data : public error {
 public:
  using error::error;
};

// Angle queried at a vertex that coincides with one of its rays.
class degenerate_angle : public error {
 public:
  using error::error;
};

}  // namespace sphd
