#ifndef VTWIN_ERRORS_HPP
#define VTWIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vtwin {

// Raised on malformed word/hom/permutation text. `position` is the 1-based
// byte column of the offending token start, or 0 when not applicable.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& msg, std::size_t position = 0)
      : std::runtime_error(msg), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// Raised when a search or enumeration exceeds its configured budget. The
// caller must treat this as "not decided at this scale", never as a verdict.
class budget_error : public std::runtime_error {
public:
  explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace vtwin

#endif
