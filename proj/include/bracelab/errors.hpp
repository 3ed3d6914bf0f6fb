#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bracelab {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Structural defects found while checking braces and solutions.
enum class Fault {
  NotAGroup,
  NotAbelian,
  BraceAxiomViolated,
  NotBijective,
  NotInvolutive,
  BraidViolated,
  NotASubbrace,
  NotAnIdeal,
  QuotientIllDefined,
};

inline const char* fault_name(Fault f) {
  switch (f) {
    case Fault::NotAGroup: return "NotAGroup";
    case Fault::NotAbelian: return "NotAbelian";
    case Fault::BraceAxiomViolated: return "BraceAxiomViolated";
    case Fault::NotBijective: return "NotBijective";
    case Fault::NotInvolutive: return "NotInvolutive";
    case Fault::BraidViolated: return "BraidViolated";
    case Fault::NotASubbrace: return "NotASubbrace";
    case Fault::NotAnIdeal: return "NotAnIdeal";
    case Fault::QuotientIllDefined: return "QuotientIllDefined";
  }
  return "UnknownFault";
}

/// Validation failure carrying the first witness in scan order.
/// `where` names the offending table or map ("add", "mul", "lambda", "rho");
/// `witness` holds the element indices of the witness (1..3 of them).
class ValidationError : public Error {
 public:
  ValidationError(Fault fault, std::string where, std::vector<int> witness,
                  const std::string& detail)
      : Error(detail), fault_(fault), where_(std::move(where)),
        witness_(std::move(witness)) {}

  Fault fault() const { return fault_; }
  const std::string& where() const { return where_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  Fault fault_;
  std::string where_;
  std::vector<int> witness_;
};

/// Malformed input file.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& reason)
      : Error("ParseError at line " + std::to_string(line) + ": " + reason),
        line_(line), reason_(reason) {}

  int line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  int line_;
  std::string reason_;
};

/// Requested enumeration exceeds the configured cap.
class OrderCapExceeded : public Error {
 public:
  OrderCapExceeded(int order, int cap)
      : Error("OrderCapExceeded: order " + std::to_string(order) +
              " exceeds cap " + std::to_string(cap)),
        order_(order), cap_(cap) {}

  int order() const { return order_; }
  int cap() const { return cap_; }

 private:
  int order_;
  int cap_;
};

}  // namespace bracelab
