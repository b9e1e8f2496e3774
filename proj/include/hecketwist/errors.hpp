#ifndef HECKETWIST_ERRORS_HPP
#define HECKETWIST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hecketwist {

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what)
      : std::runtime_error("config: " + what) {}
};

struct InfiniteType : std::runtime_error {
  explicit InfiniteType(const std::string& what)
      : std::runtime_error("infinite type: " + what) {}
};

struct ContextMismatch : std::runtime_error {
  ContextMismatch() : std::runtime_error("elements belong to different algebra contexts") {}
  explicit ContextMismatch(const std::string& what)
      : std::runtime_error("context mismatch: " + what) {}
};

struct NotInSubgroup : std::runtime_error {
  NotInSubgroup() : std::runtime_error("element outside the requested subgroup/subalgebra") {}
};

struct NotInHD : std::runtime_error {
  NotInHD() : std::runtime_error("element is not in the twist-compatible summand H_D") {}
};

struct NotEpsStable : std::runtime_error {
  NotEpsStable() : std::runtime_error("subset J is not stable under the diagram automorphism") {}
};

struct IncompatibleTwist : std::runtime_error {
  IncompatibleTwist() : std::runtime_error("configured lattice twist violates the compatibility identity") {}
};

}  // namespace hecketwist

#endif
