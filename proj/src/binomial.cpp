#include "fatflats/binomial.hpp"

#include <string>

namespace fatflats {

Integer binom(long a, long b) {
  if (a < 0) throw DomainError("binom: negative upper argument " + std::to_string(a));
  if (b < 0 || b > a) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

}  // namespace fatflats
