#ifndef TWISTGEN_RAT_HPP
#define TWISTGEN_RAT_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace twistgen {

/// Exact rational scalar. GMP keeps the gcd(num,den)=1, den>0 invariants
/// as long as values are built through canonical constructors below.
using Rat = mpq_class;

inline Rat rat_of(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p" or "p/q" (q > 0). Throws std::invalid_argument on bad syntax.
Rat rat_parse(const std::string& text);

std::string rat_str(const Rat& r);

/// r^e with e possibly negative; throws std::domain_error on 0^(e<=0).
Rat rat_pow(const Rat& r, std::int64_t e);

/// Exact square root if r is a perfect square of a rational, else nullopt.
std::optional<Rat> rat_sqrt(const Rat& r);

inline int rat_sign(const Rat& r) { return sgn(r); }

}  // namespace twistgen

#endif
