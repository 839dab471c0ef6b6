#pragma once

#include <vector>

#include "tjurina/linalg.hpp"
#include "tjurina/polynomial.hpp"

namespace tjurina {

// Result of the Hilbert-function route to tau: dim (S/J_f)_k scanned from
// n(d-2) until three consecutive equal values.
struct HilbertScan {
    long long tau = 0;
    int stable_from = 0;                // first k of the stable window
    std::vector<long long> values;      // dims for k = n(d-2), ..., last scanned
};

HilbertScan hilbert_tau(const HomogeneousPoly& f, const LinOptions& opt = {});

// Points claimed to be ordinary nodes (one-dimensional local algebras).
// Nodality is a caller claim; pairwise projective distinctness is checked.
struct NodalConfiguration {
    std::vector<std::vector<Rat>> points;
};

// dim coker of the evaluation map S_k -> functions on the points: number of
// points minus the rank of the point-evaluation matrix on the degree-k
// monomial basis.
long long nodal_defect(const NodalConfiguration& config, int k, const LinOptions& opt = {});

// tau = mu = prod (a_i - 1) for the quasi-homogeneous germ sum y_i^{a_i}.
long long brieskorn_tau(const std::vector<int>& exponents);

// f'(x_0..x_{n'}) + x_{n'+1}^d + ... + x_n^d; preserves mdr.
HomogeneousPoly suspend(const HomogeneousPoly& f_prime, int n);

}  // namespace tjurina
