#include "wqo/error.hpp"

namespace wqo {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidElement: return "InvalidElement";
    case ErrorKind::EmptyOrder: return "EmptyOrder";
    case ErrorKind::NotOmegaPlusForm: return "NotOmegaPlusForm";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::HeightMismatch: return "HeightMismatch";
    case ErrorKind::InvalidTerm: return "InvalidTerm";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::InvalidQuasiOrder: return "InvalidQuasiOrder";
    case ErrorKind::MissingValue: return "MissingValue";
    case ErrorKind::InvalidNode: return "InvalidNode";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotTriangleRelated: return "NotTriangleRelated";
    case ErrorKind::TooShort: return "TooShort";
    case ErrorKind::HeightExhausted: return "HeightExhausted";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::WindowTooLarge: return "WindowTooLarge";
    case ErrorKind::NotDescending: return "NotDescending";
    case ErrorKind::AlreadyMinimal: return "AlreadyMinimal";
    case ErrorKind::UnsupportedLeafDescent: return "UnsupportedLeafDescent";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::CheckFailed: return "CheckFailed";
  }
  return "Unknown";
}

}  // namespace wqo
