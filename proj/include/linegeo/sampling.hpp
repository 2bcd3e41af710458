#ifndef LINEGEO_SAMPLING_HPP
#define LINEGEO_SAMPLING_HPP

#include <cstdint>

#include "linegeo/scalar.hpp"

namespace linegeo {

// Deterministic sequence of small rationals; every "random" choice in the
// library and test suites draws from this so runs are reproducible.  The
// stream for a given seed index is fixed forever.
class RationalSeq {
 public:
  explicit RationalSeq(uint64_t seed) : state_(seed * 0x9e3779b97f4a7c15ULL + 1) {}

  uint64_t next_raw();
  // integer in [lo, hi]
  long next_int(long lo, long hi);
  // rational with numerator in [-9, 9] and denominator in [1, 4]
  mpq_class next_rational();
  // nonzero variant
  mpq_class next_nonzero();
  Scalar next_scalar() { return Scalar(next_rational()); }

 private:
  uint64_t state_;
};

}  // namespace linegeo

#endif
