#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mostar {

enum class ErrorKind {
  kInvalidEdge,
  kOutOfRange,
  kNotConnected,
  kNotAnEdge,
  kNotABridge,
  kPendantBridge,
  kNotPendant,
  kInvalidMove,
  kDegenerateFamily,
  kParse,
  kIo,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (and tests)
// can branch on the category without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mostar
