#include "jetscheme/error.hpp"

namespace jetscheme {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::incompatible_operands: return "incompatible-operands";
    case ErrorKind::non_unit: return "non-unit";
    case ErrorKind::range: return "range";
    case ErrorKind::instance: return "instance";
    case ErrorKind::model: return "model";
    case ErrorKind::horizon: return "horizon";
    case ErrorKind::input: return "input";
    case ErrorKind::budget: return "budget";
    case ErrorKind::sampling: return "sampling";
    case ErrorKind::inconsistent_input: return "inconsistent-input";
  }
  return "unknown";
}

}  // namespace jetscheme
