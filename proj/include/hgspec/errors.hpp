#pragma once

#include <stdexcept>
#include <string>

namespace hgspec {

/// Invalid argument for a hypergraph operation (out-of-range vertex,
/// malformed edge list, bad construction parameters).
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation that needs even uniformity receives odd k.
class UnsupportedUniformity : public DomainError {
public:
  explicit UnsupportedUniformity(int k)
      : DomainError("uniformity k=" + std::to_string(k) +
                    " is odd; the least H-eigenvalue is the minimum of "
                    "A x^k over the unit k-norm sphere only for even k"),
        k_(k) {}

  int k() const noexcept { return k_; }

private:
  int k_;
};

/// A caller-side precondition on numerical data does not hold.
class PreconditionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Malformed hypergraph file or report document.
class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace hgspec
