#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tjurina/rational.hpp"

namespace tjurina {

// Monomial in n_vars variables x0..x_{n_vars-1}, stored as exponent vector.
// The global term order is graded, then lexicographic with x0 > x1 > ...;
// every basis enumeration in the artifact uses this order.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

    int n_vars() const { return static_cast<int>(exps_.size()); }
    int degree() const;
    int exponent(int j) const { return exps_[static_cast<size_t>(j)]; }
    const std::vector<int>& exponents() const { return exps_; }

    Monomial times(const Monomial& other) const;

    // Partial derivative exponent shift; valid only when exponent(j) > 0.
    Monomial lower(int j) const;

    // Extends to more variables by padding zero exponents.
    Monomial widened(int new_n_vars) const;

    Rat eval(const std::vector<Rat>& point) const;

    // Packed key for hashing; requires every exponent < 64 and n_vars <= 10.
    uint64_t pack() const;

    std::string str() const;

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

  private:
    std::vector<int> exps_;
};

// Strict "comes before" in the fixed term order. Within a degree the
// x0-dominant monomial comes first, so enumeration of S_3 in two variables
// yields x0^3, x0^2 x1, x0 x1^2, x1^3.
bool monomial_before(const Monomial& a, const Monomial& b);

struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const { return monomial_before(a, b); }
};

// Ordered basis of S_k: all degree-k monomials in n_vars variables, sorted by
// the fixed term order. Size is C(k + n_vars - 1, n_vars - 1).
std::vector<Monomial> monomials_of_degree(int n_vars, int k);

// dim S_k as a plain integer; throws if it does not fit.
long long dim_sk(int n_vars, int k);

}  // namespace tjurina
