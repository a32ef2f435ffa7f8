#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace snap {

enum class Errc {
  IndexOutOfRange,
  CyclicGraph,
  InvalidGraph,
  InvalidQuery,
  EmptySelection,
  SizeMismatch,
  ParseError,
  SingularCovariance,
  InsufficientSamples,
  NotCategorical,
  NotContinuous,
  MissingSepset,
  NotIdentifiable,
  UndirectedIncidence,
  SingularDesign,
  MissingPair,
  InfeasibleConfig,
  NoIdentifiableSet,
  InvalidConfig,
};

std::string_view to_string(Errc code) noexcept;

/// Single exception type for the library; `code()` tells callers what went wrong.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace snap
