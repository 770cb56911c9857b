#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace camix {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition was violated (dimension mismatch, modulus
// mismatch, out-of-range symbol, ...). The message names the precondition.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// Malformed rule / event / config text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An enumeration was requested whose exact size exceeds the caller's cap.
// Carries the exact count so callers can decide what to do.
class EnumerationRefused : public Error {
 public:
  EnumerationRefused(const std::string& what, boost::multiprecision::cpp_int exact_count)
      : Error(what), count(std::move(exact_count)) {}

  boost::multiprecision::cpp_int count;
};

// A brute-force pass would enumerate more words than the configured budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, boost::multiprecision::cpp_int required_words,
                 boost::multiprecision::cpp_int budget_words)
      : Error(what), required(std::move(required_words)), budget(std::move(budget_words)) {}

  boost::multiprecision::cpp_int required;
  boost::multiprecision::cpp_int budget;
};

}  // namespace camix
