#include "tjurina/monomial.hpp"

#include <numeric>

#include "tjurina/errors.hpp"

namespace tjurina {

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

Monomial Monomial::times(const Monomial& other) const {
    internal_check(n_vars() == other.n_vars(), "monomial product across variable counts");
    std::vector<int> e(exps_);
    for (size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::lower(int j) const {
    internal_check(exps_[static_cast<size_t>(j)] > 0, "lowering a zero exponent");
    std::vector<int> e(exps_);
    --e[static_cast<size_t>(j)];
    return Monomial(std::move(e));
}

Monomial Monomial::widened(int new_n_vars) const {
    internal_check(new_n_vars >= n_vars(), "widening shrinks variable count");
    std::vector<int> e(exps_);
    e.resize(static_cast<size_t>(new_n_vars), 0);
    return Monomial(std::move(e));
}

Rat Monomial::eval(const std::vector<Rat>& point) const {
    internal_check(point.size() == exps_.size(), "evaluation point size mismatch");
    Rat out(1);
    for (size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > 0) out *= rat_pow(point[i], static_cast<unsigned long>(exps_[i]));
    }
    return out;
}

uint64_t Monomial::pack() const {
    internal_check(exps_.size() <= 10, "pack supports at most 10 variables");
    uint64_t key = 0;
    for (int e : exps_) {
        internal_check(e >= 0 && e < 64, "pack supports exponents below 64");
        key = (key << 6) | static_cast<uint64_t>(e);
    }
    return key;
}

std::string Monomial::str() const {
    std::string out;
    for (size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(i);
        if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
    }
    if (out.empty()) out = "1";
    return out;
}

bool monomial_before(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // Same degree: larger exponent tuple (x0 weighed heaviest) comes first.
    return a.exponents() > b.exponents();
}

namespace {

void enumerate(int n_vars, int k, int var, std::vector<int>& partial, std::vector<Monomial>& out) {
    if (var == n_vars - 1) {
        partial[static_cast<size_t>(var)] = k;
        out.emplace_back(partial);
        return;
    }
    for (int e = k; e >= 0; --e) {
        partial[static_cast<size_t>(var)] = e;
        enumerate(n_vars, k - e, var + 1, partial, out);
    }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int n_vars, int k) {
    internal_check(n_vars >= 1 && k >= 0, "monomials_of_degree preconditions");
    std::vector<Monomial> out;
    out.reserve(static_cast<size_t>(dim_sk(n_vars, k)));
    std::vector<int> partial(static_cast<size_t>(n_vars), 0);
    enumerate(n_vars, k, 0, partial, out);
    return out;
}

long long dim_sk(int n_vars, int k) {
    return to_longlong(binomial(static_cast<unsigned long>(k + n_vars - 1),
                                static_cast<unsigned long>(n_vars - 1)));
}

}  // namespace tjurina
