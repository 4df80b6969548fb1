#include "mostar/error.hpp"

namespace mostar {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidEdge: return "InvalidEdge";
    case ErrorKind::kOutOfRange: return "OutOfRange";
    case ErrorKind::kNotConnected: return "NotConnected";
    case ErrorKind::kNotAnEdge: return "NotAnEdge";
    case ErrorKind::kNotABridge: return "NotABridge";
    case ErrorKind::kPendantBridge: return "PendantBridge";
    case ErrorKind::kNotPendant: return "NotPendant";
    case ErrorKind::kInvalidMove: return "InvalidMove";
    case ErrorKind::kDegenerateFamily: return "DegenerateFamily";
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kIo: return "IoError";
  }
  return "Unknown";
}

}  // namespace mostar
