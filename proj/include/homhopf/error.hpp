#pragma once

#include <stdexcept>
#include <string>

namespace homhopf {

enum class Errc {
  UnknownBasisIndex,
  NotInvertible,
  NotAssociative,
  NotEndomorphism,
  NotCommutingPair,
  NotBialgebraMorphism,
  AntipodeNotInvertible,
  NotInvertibleAlpha,
  NotInvertibleBeta,
  NotInvertibleGamma,
  NotLieEndomorphism,
  NotHomLie,
  NotMatchedPair,
  NotMutualPair,
  PairingDegenerate,
  OrderConstraintViolated,
  TruncationOverflow,
  InverseMismatch,
  SchemaError,
};

char const* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string const& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Thrown when a product leaves the truncated degree window.  Checkers catch
// it per tuple and count the tuple as skipped.
class TruncationOverflow : public Error {
 public:
  explicit TruncationOverflow(std::string const& what) : Error(Errc::TruncationOverflow, what) {}
};

}  // namespace homhopf
