#pragma once

#include <stdexcept>
#include <string>

namespace m1j {

// Base of every error raised by the library. Failures of identity checks are
// reported through OpReport instead; these exceptions signal misuse or a
// broken algebraic invariant.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define M1J_DECLARE_ERROR(Name)                                                \
  class Name : public Error {                                                  \
  public:                                                                      \
    explicit Name(const std::string &what) : Error(#Name ": " + what) {}       \
  }

M1J_DECLARE_ERROR(NegativeExponentResidue);
M1J_DECLARE_ERROR(PoleAtZero);
M1J_DECLARE_ERROR(PochhammerPole);
M1J_DECLARE_ERROR(QPochhammerPole);
M1J_DECLARE_ERROR(GammaPole);
M1J_DECLARE_ERROR(ParameterPole);
M1J_DECLARE_ERROR(DegenerateDenominator);
M1J_DECLARE_ERROR(OutsideSupport);
M1J_DECLARE_ERROR(RegimeMismatch);
M1J_DECLARE_ERROR(KernelPole);
M1J_DECLARE_ERROR(NonzeroRemainder);
M1J_DECLARE_ERROR(SingularPoint);
M1J_DECLARE_ERROR(InvalidParameter);
M1J_DECLARE_ERROR(QuadratureFailure);

#undef M1J_DECLARE_ERROR

// Raised when level doubling hits the cap; carries the best estimate.
class NoConvergence : public Error {
public:
  NoConvergence(double value, double err_est)
      : Error("NoConvergence: value " + std::to_string(value) + ", error estimate " +
              std::to_string(err_est)),
        value_(value), err_est_(err_est) {}

  double value() const { return value_; }
  double err_est() const { return err_est_; }

private:
  double value_;
  double err_est_;
};

} // namespace m1j
