#include "linegeo/sampling.hpp"

namespace linegeo {

uint64_t RationalSeq::next_raw() {
  // splitmix64
  state_ += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long RationalSeq::next_int(long lo, long hi) {
  return lo + static_cast<long>(next_raw() % static_cast<uint64_t>(hi - lo + 1));
}

mpq_class RationalSeq::next_rational() {
  long num = next_int(-9, 9);
  long den = next_int(1, 4);
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

mpq_class RationalSeq::next_nonzero() {
  for (;;) {
    mpq_class q = next_rational();
    if (q != 0) return q;
  }
}

}  // namespace linegeo
