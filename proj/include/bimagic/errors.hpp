#pragma once

#include <stdexcept>
#include <string>

namespace bimagic {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: bad alphabet, width, order, property name.
class InputError : public Error {
 public:
  using Error::Error;
};

// Dimensions that do not fit together (digit-set size vs order, block shape).
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A grid failed validation at a specific cell.
class GridError : public Error {
 public:
  GridError(int row, int col, const std::string& what)
      : Error("cell (" + std::to_string(row) + "," + std::to_string(col) +
              "): " + what),
        row_(row),
        col_(col) {}

  int row() const { return row_; }
  int col() const { return col_; }

 private:
  int row_;
  int col_;
};

// A digit has no image under a rotation or mirror map.
class UnmappableDigitError : public Error {
 public:
  UnmappableDigitError(int digit, int position, const std::string& where)
      : Error(where + "digit " + std::to_string(digit) + " at position " +
              std::to_string(position) + " has no image"),
        digit_(digit),
        position_(position) {}

  int digit() const { return digit_; }
  int position() const { return position_; }

 private:
  int digit_;
  int position_;
};

// The functional search ran out of budget.
class SearchFailure : public Error {
 public:
  using Error::Error;
};

// Broken internal arithmetic invariant.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace bimagic
