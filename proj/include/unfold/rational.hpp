#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace unfold {

// Exact rational arithmetic throughout. All numbers that enter a comparison or
// an equality test are mpq_class values in canonical form.
using Rat = mpq_class;
using Int = mpz_class;

// Raised when an internal consistency check fails (never for bad user input).
// The CLI maps it to exit code 3.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// mpq_class(n, d) does not canonicalize; every construction from a pair goes
// through here.
inline Rat rat(long n, long d = 1) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

inline Rat rat(const Int& n, const Int& d) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(n);
  r /= Rat(d);
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Floor division toward -infinity, exact.
inline Int rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

inline Rat frac_part(const Rat& r) { return r - Rat(rat_floor(r)); }

// Canonical "p/q" text; integers print without the denominator ("0", "2", "5/11").
std::string to_string(const Rat& r);

// Accepts "p", "p/q", optional leading '-'; throws std::invalid_argument on
// malformed text or zero denominator.
Rat rat_from_string(const std::string& s);

double to_double(const Rat& r);

}  // namespace unfold
