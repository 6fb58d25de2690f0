#pragma once

#include <stdexcept>
#include <string>

namespace mixgauss {

/// Two independent computations of the same quantity disagreed, or an exact
/// division left a remainder. Always an implementation bug.
class InconsistencyError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// A request would exceed the exhaustive-search size limits.
class ResourceGuardError : public std::length_error {
  public:
    using std::length_error::length_error;
};

}  // namespace mixgauss
