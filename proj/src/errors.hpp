#ifndef RW_ERRORS_HPP
#define RW_ERRORS_HPP

#include <stdexcept>

namespace rw {

// spec-string or value parsing failed
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// operation requires exact mode (nonempty period) or vice versa
class ModeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// a classifier was asked outside the family it is proved for
class ScopeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// a finite directive truncation cannot stabilize the requested object
class InsufficientDirectiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// an oracle scan ran out of certified prefix margin
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// an oracle scan has too few observations to report anything
class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rw

#endif
