#include "tjurina/polynomial.hpp"

#include "tjurina/errors.hpp"

namespace tjurina {

HomogeneousPoly HomogeneousPoly::power(int n_vars, int j, int d, const Rat& c) {
    HomogeneousPoly out(n_vars, d);
    std::vector<int> e(static_cast<size_t>(n_vars), 0);
    e[static_cast<size_t>(j)] = d;
    out.add_term(Monomial(std::move(e)), c);
    return out;
}

void HomogeneousPoly::add_term(const Monomial& m, const Rat& c) {
    internal_check(m.n_vars() == n_vars_, "term variable count mismatch");
    internal_check(m.degree() == degree_, "term degree mismatch");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Rat HomogeneousPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

HomogeneousPoly HomogeneousPoly::operator+(const HomogeneousPoly& other) const {
    internal_check(n_vars_ == other.n_vars_ && degree_ == other.degree_, "adding unlike polynomials");
    HomogeneousPoly out(*this);
    for (const auto& [m, c] : other.terms_) out.add_term(m, c);
    return out;
}

HomogeneousPoly HomogeneousPoly::operator-(const HomogeneousPoly& other) const {
    internal_check(n_vars_ == other.n_vars_ && degree_ == other.degree_, "subtracting unlike polynomials");
    HomogeneousPoly out(*this);
    for (const auto& [m, c] : other.terms_) out.add_term(m, -c);
    return out;
}

HomogeneousPoly HomogeneousPoly::scaled(const Rat& c) const {
    HomogeneousPoly out(n_vars_, degree_);
    if (sgn(c) == 0) return out;
    for (const auto& [m, coef] : terms_) out.terms_.emplace(m, coef * c);
    return out;
}

HomogeneousPoly HomogeneousPoly::times_monomial(const Monomial& m) const {
    HomogeneousPoly out(n_vars_, degree_ + m.degree());
    for (const auto& [mono, c] : terms_) out.terms_.emplace(mono.times(m), c);
    return out;
}

HomogeneousPoly HomogeneousPoly::operator*(const HomogeneousPoly& other) const {
    internal_check(n_vars_ == other.n_vars_, "multiplying across variable counts");
    HomogeneousPoly out(n_vars_, degree_ + other.degree_);
    for (const auto& [m, c] : other.terms_) {
        for (const auto& [mono, coef] : terms_) out.add_term(mono.times(m), coef * c);
    }
    return out;
}

bool HomogeneousPoly::operator==(const HomogeneousPoly& other) const {
    if (n_vars_ != other.n_vars_) return false;
    if (is_zero() && other.is_zero()) return true;
    return degree_ == other.degree_ && terms_ == other.terms_;
}

Rat HomogeneousPoly::eval(const std::vector<Rat>& point) const {
    Rat out(0);
    for (const auto& [m, c] : terms_) out += c * m.eval(point);
    return out;
}

bool HomogeneousPoly::independent_of(int j) const {
    for (const auto& [m, c] : terms_) {
        if (m.exponent(j) > 0) return false;
    }
    return true;
}

HomogeneousPoly HomogeneousPoly::widened(int new_n_vars) const {
    HomogeneousPoly out(new_n_vars, degree_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m.widened(new_n_vars), c);
    return out;
}

std::string HomogeneousPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        Rat a = abs(c);
        if (out.empty()) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        bool constant_term = m.degree() == 0;
        if (a != 1 || constant_term) {
            out += rat_to_string(a);
            if (!constant_term) out += "*";
        }
        if (!constant_term) out += m.str();
    }
    return out;
}

HomogeneousPoly partial_derivative(const HomogeneousPoly& f, int j) {
    internal_check(j >= 0 && j < f.n_vars(), "derivative variable out of range");
    if (f.degree() == 0) return HomogeneousPoly::zero(f.n_vars(), 0);
    HomogeneousPoly out(f.n_vars(), f.degree() - 1);
    for (const auto& [m, c] : f.terms()) {
        int e = m.exponent(j);
        if (e == 0) continue;
        out.add_term(m.lower(j), c * e);
    }
    return out;
}

}  // namespace tjurina
