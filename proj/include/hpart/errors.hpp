#pragma once

#include <stdexcept>
#include <string>

namespace hpart {

// Bad arguments, malformed files, violated preconditions detectable up front.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// An exact search exceeded its configured budget. Never a wrong answer.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

// A certificate or invariant failed to check.
class VerifyError : public std::runtime_error {
 public:
  explicit VerifyError(const std::string& msg) : std::runtime_error(msg) {}
};

// A caller-asserted precondition turned out false mid-construction; carries
// a description of the refuting evidence.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// A construction reached a state the underlying theory rules out.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace hpart
