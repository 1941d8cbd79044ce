#ifndef FOCKCP_ERRORS_HPP
#define FOCKCP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fockcp {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Drive frequency equals the transition frequency: every implemented formula
// has a pole there and the model provides no linewidth to regularize it.
class ResonantDriveError : public Error {
 public:
  explicit ResonantDriveError(const std::string& what) : Error(what) {}
};

class InvalidScenarioError : public Error {
 public:
  explicit InvalidScenarioError(const std::string& what) : Error(what) {}
};

// |k_z + k_z^d| (or the TM analogue) underflowed: grazing/branch-point input.
class DegenerateDenominatorError : public Error {
 public:
  explicit DegenerateDenominatorError(const std::string& what) : Error(what) {}
};

class ToleranceNotMetError : public Error {
 public:
  ToleranceNotMetError(const std::string& what, double achieved, double target)
      : Error(what), achieved_error(achieved), target_error(target) {}
  double achieved_error;
  double target_error;
};

class NonFiniteIntegrandError : public Error {
 public:
  explicit NonFiniteIntegrandError(const std::string& what) : Error(what) {}
};

class NonDecayingIntegrandError : public Error {
 public:
  explicit NonDecayingIntegrandError(const std::string& what) : Error(what) {}
};

}  // namespace fockcp

#endif
