#ifndef LIERED_ERRORS_HPP
#define LIERED_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liered {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionError : Error {
  explicit DimensionError(const std::string& msg) : Error(msg) {}
};

struct SingularMatrix : Error {
  explicit SingularMatrix(const std::string& msg) : Error(msg) {}
};

struct DependentInput : Error {
  explicit DependentInput(const std::string& msg) : Error(msg) {}
};

struct NotAnIdeal : Error {
  explicit NotAnIdeal(const std::string& msg) : Error(msg) {}
};

/// Structure-constant validation failure (antisymmetry, Jacobi or grading).
struct InvalidAlgebra : Error {
  enum class Kind { Antisymmetry, Jacobi, Grading };
  Kind kind;
  std::size_t i = 0, j = 0, k = 0;  // offending triple for Jacobi failures
  InvalidAlgebra(Kind kind_, const std::string& msg, std::size_t i_ = 0,
                 std::size_t j_ = 0, std::size_t k_ = 0)
      : Error(msg), kind(kind_), i(i_), j(j_), k(k_) {}
};

struct ParseError : Error {
  std::size_t line;
  ParseError(std::size_t line_, const std::string& msg)
      : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct NotAComplement : Error {
  explicit NotAComplement(const std::string& msg) : Error(msg) {}
};

struct CenterNotInsideA : Error {
  explicit CenterNotInsideA(const std::string& msg) : Error(msg) {}
};

struct DegeneratePairing : Error {
  explicit DegeneratePairing(const std::string& msg) : Error(msg) {}
};

struct PreconditionFailure : Error {
  explicit PreconditionFailure(const std::string& msg) : Error(msg) {}
};

struct ConstructionFailure : Error {
  explicit ConstructionFailure(const std::string& msg) : Error(msg) {}
};

struct HomomorphismFailure : Error {
  explicit HomomorphismFailure(const std::string& msg) : Error(msg) {}
};

struct DimensionCapExceeded : Error {
  explicit DimensionCapExceeded(const std::string& msg) : Error(msg) {}
};

struct MaximalAbelianIdealNotSupported : Error {
  explicit MaximalAbelianIdealNotSupported(const std::string& msg) : Error(msg) {}
};

}  // namespace liered

#endif
