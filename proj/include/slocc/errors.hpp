#ifndef SLOCC_ERRORS_HPP
#define SLOCC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace slocc {

enum class ErrorCode {
  kNotTrueEntangled = 1,
  kParseError = 2,
  kIllConditioned = 3,
  kIndeterminate = 4,
  kSingular = 5,
  kInvalidArgument = 6,
  kInternal = 7,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

struct NotTrueEntangled : Error {
  explicit NotTrueEntangled(const std::string& w) : Error(ErrorCode::kNotTrueEntangled, w) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(ErrorCode::kParseError, w) {}
};
struct IllConditioned : Error {
  explicit IllConditioned(const std::string& w) : Error(ErrorCode::kIllConditioned, w) {}
};
struct Singular : Error {
  explicit Singular(const std::string& w) : Error(ErrorCode::kSingular, w) {}
};
struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& w) : Error(ErrorCode::kInvalidArgument, w) {}
};

}  // namespace slocc

#endif  // SLOCC_ERRORS_HPP
