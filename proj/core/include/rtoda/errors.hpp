#pragma once

#include <stdexcept>
#include <string>

namespace rtoda {

// Numerical failures map to CLI exit code 2, configuration failures to 3.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define RTODA_ERROR(Name)                                               \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& what) : Error(#Name, what) {}    \
  };

RTODA_ERROR(PoleHit)
RTODA_ERROR(AccuracyLoss)
RTODA_ERROR(NonConvergent)
RTODA_ERROR(DegenerateParameter)
RTODA_ERROR(IndexError)
RTODA_ERROR(PinchedContour)
RTODA_ERROR(NoDecaySector)
RTODA_ERROR(ToleranceNotMet)
RTODA_ERROR(HigherOrderPole)
RTODA_ERROR(CoefficientPole)
RTODA_ERROR(FrozenDirection)
RTODA_ERROR(NotLaurent)
RTODA_ERROR(UnsupportedCurve)
RTODA_ERROR(Mismatch)
RTODA_ERROR(ConfigError)
RTODA_ERROR(DomainError)

#undef RTODA_ERROR

bool is_config_error(const Error& e);

}  // namespace rtoda
