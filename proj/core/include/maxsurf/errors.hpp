#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace maxsurf {

/// Failure categories raised by the library. The CLI maps them to exit codes.
enum class ErrorKind {
  Domain,             // argument outside the mathematical domain
  Divergence,         // quantity diverges (e.g. K(1))
  Pole,               // evaluation at a pole (tn at K mod 2K)
  Range,              // inverse-function argument outside the principal image
  OutOfInterval,      // x outside the maximal interval of a solution
  SingularInterval,   // integration range crosses a zero of the denominator
  NotApplicable,      // operation undefined for this branch / sign of E
  FrameValidation,    // frame not orthonormal / not positively oriented
  WrongEigenspace,    // bivector not in the requested star eigenspace
  OffManifold,        // point not on the declared quadric
  DegenerateTangent,  // tangent Gram matrix singular
  StencilOutOfDomain, // finite-difference stencil leaves the chart domain
  HopfMismatch,       // Hopf constants differ where they must agree
  Unsupported,        // configuration with no formula (E = 0 immersions)
  EmptyGrid,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

}  // namespace maxsurf
