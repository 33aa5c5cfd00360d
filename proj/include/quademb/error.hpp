#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quademb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: shape or length mismatch, ring mismatch, parse failure.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The operation is not defined over the ring of its arguments.
class UnsupportedRing : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Generator images violate the Clifford relations at the basis pair (i, j).
class RelationError : public Error {
 public:
  RelationError(std::size_t i, std::size_t j, const std::string& what)
      : Error(what), i_(i), j_(j) {}
  std::size_t first() const { return i_; }
  std::size_t second() const { return j_; }

 private:
  std::size_t i_;
  std::size_t j_;
};

/// A basis image is inconsistent with the requested involution form.
class InvolutionConsistencyError : public PreconditionError {
 public:
  InvolutionConsistencyError(std::size_t basis_index, const std::string& what)
      : PreconditionError(what), index_(basis_index) {}
  std::size_t basis_index() const { return index_; }

 private:
  std::size_t index_;
};

/// A computed object contradicts a structural guarantee (closure, injectivity,
/// existence of a J-matrix). Seeing one means the input or the code is broken.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace quademb
