#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tjurina/rational.hpp"

namespace tjurina {

// Prime field F_p for the fast path, p an odd prime below 2^31 so products
// fit in 64 bits. Mixing moduli between contexts is rejected by the callers
// that combine results (see crt_combine).
class PrimeField {
  public:
    explicit PrimeField(uint64_t p) : p_(p) {}
    uint64_t modulus() const { return p_; }

    uint64_t add(uint64_t a, uint64_t b) const { return (a + b) % p_; }
    uint64_t sub(uint64_t a, uint64_t b) const { return (a + p_ - b) % p_; }
    uint64_t mul(uint64_t a, uint64_t b) const { return (a * b) % p_; }
    uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    uint64_t inv(uint64_t a) const;

    uint64_t reduce(const Int& z) const { return mpz_fdiv_ui(z.get_mpz_t(), p_); }

  private:
    uint64_t p_;
};

// Deterministic stream of distinct ~31-bit random primes.
class PrimeStream {
  public:
    explicit PrimeStream(uint64_t seed);
    uint64_t next();

  private:
    uint64_t state_;
    std::vector<uint64_t> emitted_;
};

// Incremental CRT accumulator: value in [0, modulus).
struct CrtValue {
    Int residue{0};
    Int modulus{1};
};

// Combines with residue r mod p; requires gcd(modulus, p) = 1, which holds
// for distinct primes. Throws on a repeated modulus.
void crt_combine(CrtValue& acc, uint64_t r, uint64_t p);

// Wang rational reconstruction: finds n/d with |n|, d <= sqrt(m/2),
// n = u*d mod m, gcd(n, d) = 1. Empty when no such pair exists.
std::optional<Rat> rational_reconstruct(const Int& u, const Int& m);

}  // namespace tjurina
