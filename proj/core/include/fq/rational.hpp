#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fq {

// Exact rational scalar used throughout the library.  GMP keeps values in
// canonical form (reduced fraction, positive denominator) as long as they are
// built through rat() or arithmetic on already-canonical values.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string to_string(const Rat& r) { return r.get_str(); }

// Invariant checks that must stay active in release builds: the library's
// correctness arguments lean on them, so a violation throws instead of being
// compiled away.
#define FQ_CHECK(cond, msg)                                          \
  do {                                                               \
    if (!(cond)) throw std::logic_error(std::string("check failed: ") + (msg)); \
  } while (0)

}  // namespace fq
