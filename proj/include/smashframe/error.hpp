#ifndef SMASHFRAME_ERROR_HPP
#define SMASHFRAME_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace smashframe {

// Every failure carries a stable machine-readable code plus a human message.
// The CLI renders these as "error: CODE(message)" and maps codes to exit status.
struct Error : std::runtime_error {
  std::string code;
  std::string message;

  Error(std::string code_, std::string message_)
      : std::runtime_error(code_ + "(" + message_ + ")"),
        code(std::move(code_)),
        message(std::move(message_)) {}
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool ok, const std::string& code, const std::string& message) {
  if (!ok) fail(code, message);
}

}  // namespace smashframe

#endif
