#include "maxsurf/errors.hpp"

namespace maxsurf {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Divergence: return "divergence";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::Range: return "range";
    case ErrorKind::OutOfInterval: return "out-of-interval";
    case ErrorKind::SingularInterval: return "singular-interval";
    case ErrorKind::NotApplicable: return "not-applicable";
    case ErrorKind::FrameValidation: return "frame-validation";
    case ErrorKind::WrongEigenspace: return "wrong-eigenspace";
    case ErrorKind::OffManifold: return "off-manifold";
    case ErrorKind::DegenerateTangent: return "degenerate-tangent";
    case ErrorKind::StencilOutOfDomain: return "stencil-out-of-domain";
    case ErrorKind::HopfMismatch: return "hopf-mismatch";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::EmptyGrid: return "empty-grid";
  }
  return "unknown";
}

void raise(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

}  // namespace maxsurf
