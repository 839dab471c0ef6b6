#include "tjurina/modular.hpp"

#include <algorithm>

#include "tjurina/errors.hpp"

namespace tjurina {

uint64_t PrimeField::inv(uint64_t a) const {
    internal_check(a % p_ != 0, "inverse of zero mod p");
    // Extended Euclid on (a, p).
    int64_t t = 0, new_t = 1;
    int64_t r = static_cast<int64_t>(p_), new_r = static_cast<int64_t>(a % p_);
    while (new_r != 0) {
        int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    internal_check(r == 1, "modulus not prime");
    if (t < 0) t += static_cast<int64_t>(p_);
    return static_cast<uint64_t>(t);
}

namespace {

uint64_t splitmix64(uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

PrimeStream::PrimeStream(uint64_t seed) : state_(seed) {}

uint64_t PrimeStream::next() {
    for (;;) {
        uint64_t candidate = (splitmix64(state_) % (1ULL << 30)) + (1ULL << 30);
        Int z(static_cast<unsigned long>(candidate));
        mpz_nextprime(z.get_mpz_t(), z.get_mpz_t());
        uint64_t p = z.get_ui();
        if (p >= (1ULL << 31)) continue;
        if (std::find(emitted_.begin(), emitted_.end(), p) != emitted_.end()) continue;
        emitted_.push_back(p);
        return p;
    }
}

void crt_combine(CrtValue& acc, uint64_t r, uint64_t p) {
    Int pz(static_cast<unsigned long>(p));
    internal_check(mpz_fdiv_ui(acc.modulus.get_mpz_t(), p) != 0, "repeated CRT modulus");
    // acc.residue + acc.modulus * ((r - acc.residue) * inv(acc.modulus) mod p)
    PrimeField field(p);
    uint64_t m_mod_p = field.reduce(acc.modulus);
    uint64_t a_mod_p = field.reduce(acc.residue);
    uint64_t delta = field.mul(field.sub(r % p, a_mod_p), field.inv(m_mod_p));
    acc.residue += acc.modulus * Int(static_cast<unsigned long>(delta));
    acc.modulus *= pz;
}

std::optional<Rat> rational_reconstruct(const Int& u, const Int& m) {
    Int bound;
    mpz_fdiv_q_ui(bound.get_mpz_t(), m.get_mpz_t(), 2);
    mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());
    if (bound == 0) return std::nullopt;

    Int r0 = m, r1 = u % m;
    if (r1 < 0) r1 += m;
    Int t0 = 0, t1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0) return std::nullopt;
    Int den = abs(t1);
    Int num = t1 < 0 ? Int(-r1) : r1;
    if (den > bound) return std::nullopt;
    Int g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) return std::nullopt;
    Rat q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace tjurina
