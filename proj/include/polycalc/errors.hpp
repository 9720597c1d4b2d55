#pragma once

#include <stdexcept>
#include <string>

namespace polycalc {

// Base class for every failure this library raises on purpose.
struct GeomError : std::runtime_error {
  explicit GeomError(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroDirection : GeomError {
  explicit ZeroDirection(const std::string& w = "direction has (near-)zero length") : GeomError(w) {}
};
struct LowerDimensional : GeomError {
  explicit LowerDimensional(const std::string& w = "operation requires a full-dimensional body") : GeomError(w) {}
};
struct DimensionMismatch : GeomError {
  explicit DimensionMismatch(const std::string& w = "operands live in different dimensions") : GeomError(w) {}
};
struct EmptyInput : GeomError {
  explicit EmptyInput(const std::string& w = "empty input") : GeomError(w) {}
};
struct EmptyBody : GeomError {
  explicit EmptyBody(const std::string& w = "halfspace intersection is empty") : GeomError(w) {}
};
struct Unbounded : GeomError {
  explicit Unbounded(const std::string& w = "normals do not positively span; intersection is unbounded") : GeomError(w) {}
};
struct FitInconsistent : GeomError {
  explicit FitInconsistent(const std::string& w = "Steiner polynomial fit failed its consistency check") : GeomError(w) {}
};
struct WrongDimension : GeomError {
  explicit WrongDimension(const std::string& w = "operation is only defined in a specific dimension") : GeomError(w) {}
};
struct NotDetermining : GeomError {
  explicit NotDetermining(const std::string& w = "direction set does not determine the body") : GeomError(w) {}
};
struct OutOfRange : GeomError {
  explicit OutOfRange(const std::string& w = "parameter outside the admissible range") : GeomError(w) {}
};
struct DomainError : GeomError {
  explicit DomainError(const std::string& w = "sampled body left the admissible domain") : GeomError(w) {}
};
struct UnsupportedDimension : GeomError {
  explicit UnsupportedDimension(const std::string& w = "only dimensions 2 and 3 are supported") : GeomError(w) {}
};
struct BadParams : GeomError {
  explicit BadParams(const std::string& w = "bad parameters") : GeomError(w) {}
};
struct ParseError : GeomError {
  explicit ParseError(const std::string& w = "parse error") : GeomError(w) {}
};
struct ConstructionError : GeomError {
  explicit ConstructionError(const std::string& w = "polytope construction failed cross-validation") : GeomError(w) {}
};

}  // namespace polycalc
