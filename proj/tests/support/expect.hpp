#pragma once

#include <optional>

#include "maxsurf/errors.hpp"

/// Kind of the maxsurf::Error thrown by fn, or nullopt if it returns normally.
template <class Fn>
std::optional<maxsurf::ErrorKind> error_kind(Fn&& fn) {
  try {
    fn();
  } catch (const maxsurf::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}
