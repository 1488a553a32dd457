#ifndef QRES_ERROR_HPP
#define QRES_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qres {

enum class ErrorCategory {
  usage,
  parse,
  domain,
  unsupported_fragment,
  internal_consistency,
};

inline const char *to_string(ErrorCategory c) {
  switch (c) {
  case ErrorCategory::usage:
    return "usage";
  case ErrorCategory::parse:
    return "parse";
  case ErrorCategory::domain:
    return "domain";
  case ErrorCategory::unsupported_fragment:
    return "unsupported-fragment";
  case ErrorCategory::internal_consistency:
    return "internal-consistency";
  }
  return "unknown";
}

class Error : public std::runtime_error {
public:
  Error(ErrorCategory category, const std::string &what)
      : std::runtime_error(std::string(to_string(category)) + ": " + what),
        category_(category) {}

  ErrorCategory category() const { return category_; }

private:
  ErrorCategory category_;
};

[[noreturn]] inline void fail(ErrorCategory c, const std::string &msg) {
  throw Error(c, msg);
}

} // namespace qres

#endif
