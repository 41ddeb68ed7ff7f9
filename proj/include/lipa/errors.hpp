#pragma once

#include <stdexcept>
#include <string>

namespace lipa {

// Base class for every validation or precondition failure thrown by the
// library. Messages carry the offending indices where the contract asks
// for them.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NonPositiveMeasure final : Error {
  using Error::Error;
};
struct MetricViolation final : Error {
  using Error::Error;
};
struct DimensionMismatch final : Error {
  using Error::Error;
};
struct EmptySet final : Error {
  using Error::Error;
};
struct EmptyCompact final : Error {
  using Error::Error;
};
struct NoCoordinates final : Error {
  using Error::Error;
};
struct InvalidData final : Error {
  using Error::Error;
};
struct TooLarge final : Error {
  using Error::Error;
};
struct InvalidRadius final : Error {
  using Error::Error;
};
struct NonMonotoneDeltas final : Error {
  using Error::Error;
};
struct ResolutionTooLow final : Error {
  using Error::Error;
};
struct EmptyBall final : Error {
  using Error::Error;
};
struct ConfigError final : Error {
  using Error::Error;
};

}  // namespace lipa
