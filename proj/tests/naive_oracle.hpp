#pragma once

// Test-only brute force. Dense rational Gaussian elimination and direct
// assembly of the graded maps through polynomial products, kept independent
// of the sparse fraction-free path in the library.

#include <vector>

#include "tjurina/monomial.hpp"
#include "tjurina/polynomial.hpp"
#include "tjurina/rational.hpp"

namespace naive {

using tjurina::HomogeneousPoly;
using tjurina::Monomial;
using tjurina::Rat;

using DenseMatrix = std::vector<std::vector<Rat>>;

inline long long rank(DenseMatrix m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    long long r = 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t piv = row;
        while (piv < rows && sgn(m[piv][col]) == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        for (size_t i = row + 1; i < rows; ++i) {
            if (sgn(m[i][col]) == 0) continue;
            Rat factor = m[i][col] / m[row][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= factor * m[row][j];
        }
        ++row;
        ++r;
    }
    return r;
}

inline int index_of(const std::vector<Monomial>& basis, const Monomial& m) {
    for (size_t i = 0; i < basis.size(); ++i) {
        if (basis[i] == m) return static_cast<int>(i);
    }
    return -1;
}

// Map (S_k)^{n+1} -> S_{k+d-1}, (a_j) -> sum a_j f_j, as a dense matrix.
inline DenseMatrix ar_map(const HomogeneousPoly& f, int k) {
    int nv = f.n_vars();
    auto cols_basis = tjurina::monomials_of_degree(nv, k);
    auto rows_basis = tjurina::monomials_of_degree(nv, k + f.degree() - 1);
    DenseMatrix m(rows_basis.size(), std::vector<Rat>(nv * cols_basis.size(), Rat(0)));
    for (int j = 0; j < nv; ++j) {
        HomogeneousPoly fj = tjurina::partial_derivative(f, j);
        for (size_t t = 0; t < cols_basis.size(); ++t) {
            HomogeneousPoly prod = fj.times_monomial(cols_basis[t]);
            for (const auto& [mono, c] : prod.terms()) {
                m[static_cast<size_t>(index_of(rows_basis, mono))][static_cast<size_t>(j) * cols_basis.size() + t] = c;
            }
        }
    }
    return m;
}

// Map (S_{k-d+1})^{C(n+1,2)} -> (S_k)^{n+1} on the Koszul generators.
inline DenseMatrix koszul_map(const HomogeneousPoly& f, int k) {
    int nv = f.n_vars();
    auto rows_basis = tjurina::monomials_of_degree(nv, k);
    size_t block = rows_basis.size();
    if (k < f.degree() - 1) return DenseMatrix(nv * block, std::vector<Rat>(0));
    auto gens = tjurina::monomials_of_degree(nv, k - f.degree() + 1);
    size_t pairs = static_cast<size_t>(nv * (nv - 1) / 2);
    DenseMatrix m(nv * block, std::vector<Rat>(pairs * gens.size(), Rat(0)));
    size_t col = 0;
    for (int i = 0; i < nv; ++i) {
        for (int j = i + 1; j < nv; ++j) {
            HomogeneousPoly fi = tjurina::partial_derivative(f, i);
            HomogeneousPoly fj = tjurina::partial_derivative(f, j);
            for (const Monomial& nu : gens) {
                HomogeneousPoly plus = fj.times_monomial(nu);
                for (const auto& [mono, c] : plus.terms()) {
                    m[static_cast<size_t>(i) * block + static_cast<size_t>(index_of(rows_basis, mono))][col] = c;
                }
                HomogeneousPoly minus = fi.times_monomial(nu);
                for (const auto& [mono, c] : minus.terms()) {
                    m[static_cast<size_t>(j) * block + static_cast<size_t>(index_of(rows_basis, mono))][col] = -c;
                }
                ++col;
            }
        }
    }
    return m;
}

inline long long ar_dim(const HomogeneousPoly& f, int k) {
    DenseMatrix m = ar_map(f, k);
    long long cols = m.empty() ? 0 : static_cast<long long>(m[0].size());
    return cols - rank(std::move(m));
}

inline long long kr_dim(const HomogeneousPoly& f, int k) {
    if (k < f.degree() - 1) return 0;
    return rank(koszul_map(f, k));
}

}  // namespace naive
