#pragma once

#include <stdexcept>
#include <string>

namespace fibgreedy {

// Malformed numeric or sequence text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Sequence parameters violating conditions a) or c).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Target outside (0, 1].
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A configured size limit (term count, Fibonacci index) was exceeded.
class LimitError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A caller violated a documented precondition.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class UnsupportedPreset : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace fibgreedy
