#pragma once

#include <stdexcept>
#include <string>

namespace qwotoc {

// Operand shapes do not fit the operation (non-square trace, matmul mismatch).
class ShapeError : public std::invalid_argument {
public:
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

// Argument outside the operation's mathematical domain.
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

class IndexError : public std::out_of_range {
public:
  explicit IndexError(const std::string& what) : std::out_of_range(what) {}
};

// Method label that is unknown or not defined for the requested placement.
class MethodError : public std::invalid_argument {
public:
  explicit MethodError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace qwotoc
