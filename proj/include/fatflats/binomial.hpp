#pragma once

#include "fatflats/rational.hpp"

namespace fatflats {

/// C(a, b) with C(a, b) = 0 for b < 0 or b > a. Negative `a` is a DomainError.
Integer binom(long a, long b);

}  // namespace fatflats
