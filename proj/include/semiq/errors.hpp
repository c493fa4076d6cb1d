#ifndef SEMIQ_ERRORS_HPP
#define SEMIQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace semiq {

// Broad classes of failure. They map onto CLI exit codes:
// input (bad schema, bad dimensions, unusable input) -> 3,
// limit (enumeration caps hit)                       -> 2,
// internal (a checked invariant was violated)        -> 4.
enum class ErrorKind { input, limit, internal };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  // Stable machine-readable identifier, e.g. "closure_exceeded".
  const std::string& code() const noexcept { return code_; }

  int exit_code() const noexcept {
    switch (kind_) {
      case ErrorKind::limit:
        return 2;
      case ErrorKind::input:
        return 3;
      case ErrorKind::internal:
        return 4;
    }
    return 4;
  }

 private:
  ErrorKind kind_;
  std::string code_;
};

inline Error input_error(std::string code, const std::string& message) {
  return Error(ErrorKind::input, std::move(code), message);
}
inline Error limit_error(std::string code, const std::string& message) {
  return Error(ErrorKind::limit, std::move(code), message);
}
inline Error internal_error(std::string code, const std::string& message) {
  return Error(ErrorKind::internal, std::move(code), message);
}

}  // namespace semiq

#endif  // SEMIQ_ERRORS_HPP
