#ifndef BOLNET_ERROR_HPP
#define BOLNET_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace bolnet {

enum class ErrorCode {
  NotLatin,
  NoUnit,
  BadEntry,
  UnknownName,
  DegreeMismatch,
  NotSubset,
  NotPGroup,
  NotAbelian,
  BadOrder,
  OrderTooLarge,
  NotBol,
  UnsupportedLoop,
  ParseError,
  MixedOrders,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotLatin: return "NotLatin";
    case ErrorCode::NoUnit: return "NoUnit";
    case ErrorCode::BadEntry: return "BadEntry";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotSubset: return "NotSubset";
    case ErrorCode::NotPGroup: return "NotPGroup";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::NotBol: return "NotBol";
    case ErrorCode::UnsupportedLoop: return "UnsupportedLoop";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MixedOrders: return "MixedOrders";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// ParseError with the 1-based position of the offending token.
class ParseFailure : public Error {
 public:
  ParseFailure(std::size_t line, std::size_t column, const std::string& what)
      : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace bolnet

#endif  // BOLNET_ERROR_HPP
