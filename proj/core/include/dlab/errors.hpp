#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace dlab {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input that makes an inverse operation singular (e.g. log of a series with a_1 = 0).
class SingularInputError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Requested size exceeds the memory budget of a table or grid.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Output truncation needs coefficients that the inputs do not carry.
class TruncationError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Index outside a table, or an integer result that does not fit.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class CacheError : public std::runtime_error {
 public:
  enum class Kind { kIo, kBadMagic, kVersionMismatch, kTruncated, kChecksum };

  CacheError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Adaptive quadrature stopped before reaching its tolerance.
class ToleranceError : public std::runtime_error {
 public:
  ToleranceError(const std::string& what, double estimate, double error_estimate)
      : std::runtime_error(what), estimate_(estimate), error_estimate_(error_estimate) {}

  double estimate() const noexcept { return estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double estimate_;
  double error_estimate_;
};

/// A quadrature integrand returned a non-finite value.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, std::complex<double> node)
      : std::runtime_error(what), node_(node) {}

  std::complex<double> node() const noexcept { return node_; }

 private:
  std::complex<double> node_;
};

/// A claimed self-map of the disk sent a grid node outside the open disk.
class MappingError : public std::runtime_error {
 public:
  MappingError(const std::string& what, std::complex<double> node, std::complex<double> image)
      : std::runtime_error(what), node_(node), image_(image) {}

  std::complex<double> node() const noexcept { return node_; }
  std::complex<double> image() const noexcept { return image_; }

 private:
  std::complex<double> node_;
  std::complex<double> image_;
};

}  // namespace dlab
