#include "snap/error.hpp"

namespace snap {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::CyclicGraph: return "CyclicGraph";
    case Errc::InvalidGraph: return "InvalidGraph";
    case Errc::InvalidQuery: return "InvalidQuery";
    case Errc::EmptySelection: return "EmptySelection";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::SingularCovariance: return "SingularCovariance";
    case Errc::InsufficientSamples: return "InsufficientSamples";
    case Errc::NotCategorical: return "NotCategorical";
    case Errc::NotContinuous: return "NotContinuous";
    case Errc::MissingSepset: return "MissingSepset";
    case Errc::NotIdentifiable: return "NotIdentifiable";
    case Errc::UndirectedIncidence: return "UndirectedIncidence";
    case Errc::SingularDesign: return "SingularDesign";
    case Errc::MissingPair: return "MissingPair";
    case Errc::InfeasibleConfig: return "InfeasibleConfig";
    case Errc::NoIdentifiableSet: return "NoIdentifiableSet";
    case Errc::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace snap
