#pragma once

#include <map>
#include <string>
#include <vector>

#include "tjurina/monomial.hpp"
#include "tjurina/rational.hpp"

namespace tjurina {

// Sparse homogeneous polynomial over the rationals. Invariants: every stored
// monomial has the declared degree and a nonzero coefficient; the zero
// polynomial is representable at any degree.
class HomogeneousPoly {
  public:
    using TermMap = std::map<Monomial, Rat, MonomialOrder>;

    HomogeneousPoly(int n_vars, int degree) : n_vars_(n_vars), degree_(degree) {}

    static HomogeneousPoly zero(int n_vars, int degree) { return HomogeneousPoly(n_vars, degree); }

    // Single-variable power c * xj^d.
    static HomogeneousPoly power(int n_vars, int j, int d, const Rat& c = Rat(1));

    int n_vars() const { return n_vars_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Adds c * m; drops the term if the coefficient cancels. Degree checked.
    void add_term(const Monomial& m, const Rat& c);

    Rat coefficient(const Monomial& m) const;

    HomogeneousPoly operator+(const HomogeneousPoly& other) const;
    HomogeneousPoly operator-(const HomogeneousPoly& other) const;
    HomogeneousPoly scaled(const Rat& c) const;
    HomogeneousPoly times_monomial(const Monomial& m) const;
    HomogeneousPoly operator*(const HomogeneousPoly& other) const;

    bool operator==(const HomogeneousPoly& other) const;

    // Uses the given affine representative; homogeneity makes zero-ness of the
    // result independent of the representative.
    Rat eval(const std::vector<Rat>& point) const;

    // True when the polynomial does not involve xj.
    bool independent_of(int j) const;

    // Same polynomial viewed in more variables.
    HomogeneousPoly widened(int new_n_vars) const;

    std::string str() const;

  private:
    int n_vars_;
    int degree_;
    TermMap terms_;
};

// d/dxj; degree drops by one (zero polynomial at degree 0 for constants).
HomogeneousPoly partial_derivative(const HomogeneousPoly& f, int j);

}  // namespace tjurina
