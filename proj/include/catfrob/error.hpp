#ifndef CATFROB_ERROR_HPP
#define CATFROB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace catfrob {

/// Thrown when a caller breaks a documented precondition (shape mismatch,
/// non-composable arrows, non-parallel pair, ...).
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

/// Thrown when a construction cannot be completed because a law it relies on
/// fails on the supplied data. The message names the failing law.
class ConstructionError : public std::runtime_error {
 public:
  explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw ContractViolation(message);
}

}  // namespace catfrob

#endif  // CATFROB_ERROR_HPP
