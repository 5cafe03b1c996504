#ifndef PHSCALC_ERRORS_HPP
#define PHSCALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace phscalc {

enum class Err {
  UnfactoredInput,
  NotAutomorphism,
  NotTauInvariant,
  FlipIdentityFails,
  InequalityFails,
  UnsupportedBase,
  BoundExceeded,
  ZeroH,
  NotReal,
  UnresolvableSupport,
  OnePointFamily,
  NonPrimitiveWeight,
  UnsupportedRank,
  UnboundedFiber,
  InvolutionFails,
  SyntaxError,
  UndeclaredSymbol,
  BadInput,
};

const char* err_name(Err e);

/// Error raised by library operations. `witness` names the offending
/// prime, symbol or position when one exists.
class CalcError : public std::runtime_error {
public:
  CalcError(Err kind, std::string msg, std::string witness = {})
      : std::runtime_error(std::string(err_name(kind)) + ": " + msg +
                           (witness.empty() ? "" : " [" + witness + "]")),
        kind_(kind), witness_(std::move(witness)) {}

  Err kind() const { return kind_; }
  const std::string& witness() const { return witness_; }

private:
  Err kind_;
  std::string witness_;
};

} // namespace phscalc

#endif
