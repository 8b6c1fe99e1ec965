#pragma once

#include <stdexcept>
#include <string>

namespace momentforge {

/// An exhaustive enumeration or exact sum would exceed its configured size guard.
class SizeGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A fitted closed form failed one of its held-out verification points.
class VerificationError : public std::runtime_error {
 public:
  VerificationError(const std::string& what, int residue, long point)
      : std::runtime_error(what), residue_(residue), point_(point) {}
  int residue() const { return residue_; }
  long point() const { return point_; }

 private:
  int residue_;
  long point_;
};

}  // namespace momentforge
