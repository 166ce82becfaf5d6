#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace liecohom {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class BadParameter : public Error {
 public:
  using Error::Error;
};

/// The Jacobi sum of the basis triple (i, j, k) is nonzero.
class JacobiViolation : public Error {
 public:
  JacobiViolation(std::size_t i, std::size_t j, std::size_t k,
                  std::vector<std::string> residual, const std::string& what)
      : Error(what), i_(i), j_(j), k_(k), residual_(std::move(residual)) {}

  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }
  std::size_t k() const { return k_; }
  /// Residual vector as exact rational strings, one per basis coordinate.
  const std::vector<std::string>& residual() const { return residual_; }

 private:
  std::size_t i_, j_, k_;
  std::vector<std::string> residual_;
};

class FormNotInvariant : public Error {
 public:
  using Error::Error;
};

class DegenerateForm : public Error {
 public:
  using Error::Error;
};

class NotSkewDerivation : public Error {
 public:
  using Error::Error;
};

class NotSymplectic : public Error {
 public:
  using Error::Error;
};

/// Raised when the induced map on ad(g) depends on the chosen representative.
class WellDefinednessFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace liecohom
