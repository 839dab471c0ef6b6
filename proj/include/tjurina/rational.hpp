#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace tjurina {

// Exact scalars. mpq_class keeps values canonical: lowest terms, positive
// denominator. All field arithmetic in the artifact goes through these.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
Rat rat_from_string(const std::string& text);

// Canonical rendering: "p" for integers, "p/q" otherwise.
std::string rat_to_string(const Rat& q);

// q^e for e >= 0.
Rat rat_pow(const Rat& q, unsigned long e);

Int binomial(unsigned long n, unsigned long k);

// Conversion guarded against silent truncation.
long long to_longlong(const Int& z);

}  // namespace tjurina
