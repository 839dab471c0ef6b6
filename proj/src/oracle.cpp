#include "tjurina/oracle.hpp"

#include <algorithm>
#include <unordered_map>

#include "tjurina/errors.hpp"
#include "tjurina/syzygy.hpp"

namespace tjurina {

namespace {

// Multiplication map (S_{k-d+1})^{n+1} -> S_k on the Jacobian generators,
// assembled directly from the partials. dim (S/J_f)_k = dim S_k - rank.
long long jacobian_ideal_dim(const std::vector<HomogeneousPoly>& partials, int k, const LinOptions& opt) {
    const int nv = partials.front().n_vars();
    const int gen_degree = partials.front().degree();
    if (k < gen_degree) return 0;

    std::vector<Monomial> row_monos = monomials_of_degree(nv, k);
    std::vector<Monomial> mult_monos = monomials_of_degree(nv, k - gen_degree);
    std::unordered_map<uint64_t, int> row_index;
    row_index.reserve(row_monos.size() * 2);
    for (size_t i = 0; i < row_monos.size(); ++i) row_index.emplace(row_monos[i].pack(), static_cast<int>(i));

    GradedMatrix m = GradedMatrix::with_shape(static_cast<int>(row_monos.size()),
                                              nv * static_cast<int>(mult_monos.size()));
    for (const Monomial& mono : row_monos) m.row_basis.push_back({-1, mono});
    int col = 0;
    for (int j = 0; j < nv; ++j) {
        for (const Monomial& nu : mult_monos) {
            m.col_basis.push_back({j, nu});
            std::vector<std::pair<int, Rat>> entries;
            entries.reserve(partials[static_cast<size_t>(j)].term_count());
            for (const auto& [mono, c] : partials[static_cast<size_t>(j)].terms()) {
                entries.emplace_back(row_index.at(mono.times(nu).pack()), c);
            }
            std::sort(entries.begin(), entries.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            for (auto& [row, c] : entries) m.add_entry(col, row, c);
            ++col;
        }
    }
    return m.cols == 0 ? 0 : matrix_rank(m, opt);
}

}  // namespace

HilbertScan hilbert_tau(const HomogeneousPoly& f, const LinOptions& opt) {
    const int nv = f.n_vars();
    const int n = nv - 1;
    const int d = f.degree();
    internal_check(d >= 2 && nv >= 3, "hilbert_tau expects a hypersurface of degree >= 2 in >= 3 variables");

    Jacobian jac = jacobian(f);
    {
        // Cheap cone rejection: constant relations among the partials.
        std::vector<Monomial> row_monos = monomials_of_degree(nv, d - 1);
        std::unordered_map<uint64_t, int> row_index;
        for (size_t i = 0; i < row_monos.size(); ++i) row_index.emplace(row_monos[i].pack(), static_cast<int>(i));
        GradedMatrix m = GradedMatrix::with_shape(static_cast<int>(row_monos.size()), nv);
        for (const Monomial& mono : row_monos) m.row_basis.push_back({-1, mono});
        for (int j = 0; j < nv; ++j) {
            m.col_basis.push_back({j, Monomial(std::vector<int>(static_cast<size_t>(nv), 0))});
            for (const auto& [mono, c] : jac.partials[static_cast<size_t>(j)].terms()) {
                m.add_entry(j, row_index.at(mono.pack()), c);
            }
        }
        if (matrix_rank(m, opt) < nv) {
            fail(ErrorCode::ConeInput, "input is a cone; dim (S/J_f)_k never stabilizes");
        }
    }

    const int start = n * (d - 2);
    const int cap = (n + 1) * (d - 1);
    HilbertScan scan;
    for (int k = start; k <= cap; ++k) {
        long long quotient_dim = dim_sk(nv, k) - jacobian_ideal_dim(jac.partials, k, opt);
        scan.values.push_back(quotient_dim);
        size_t m = scan.values.size();
        if (m >= 3 && scan.values[m - 1] == scan.values[m - 2] && scan.values[m - 2] == scan.values[m - 3]) {
            scan.tau = scan.values[m - 1];
            scan.stable_from = k - 2;
            return scan;
        }
    }
    fail(ErrorCode::NoStabilization,
         "dim (S/J_f)_k did not stabilize by k = " + std::to_string(cap) +
             "; non-isolated singularities suspected");
}

long long nodal_defect(const NodalConfiguration& config, int k, const LinOptions& opt) {
    internal_check(k >= 0, "nodal_defect needs k >= 0");
    const size_t npts = config.points.size();
    if (npts == 0) return 0;
    const int nv = static_cast<int>(config.points.front().size());
    for (const auto& p : config.points) {
        internal_check(static_cast<int>(p.size()) == nv, "point dimension mismatch");
        bool nonzero = std::any_of(p.begin(), p.end(), [](const Rat& c) { return !is_zero(c); });
        if (!nonzero) fail(ErrorCode::BadInput, "projective point must have a nonzero coordinate");
    }
    // Pairwise distinct as projective points: no two rows proportional.
    for (size_t a = 0; a + 1 < npts; ++a) {
        for (size_t b = a + 1; b < npts; ++b) {
            bool proportional = true;
            for (int i = 0; i < nv && proportional; ++i) {
                for (int j = i + 1; j < nv && proportional; ++j) {
                    if (config.points[a][static_cast<size_t>(i)] * config.points[b][static_cast<size_t>(j)] !=
                        config.points[a][static_cast<size_t>(j)] * config.points[b][static_cast<size_t>(i)]) {
                        proportional = false;
                    }
                }
            }
            if (proportional) fail(ErrorCode::BadInput, "nodal configuration points must be pairwise distinct");
        }
    }

    std::vector<Monomial> monos = monomials_of_degree(nv, k);
    GradedMatrix m = GradedMatrix::with_shape(static_cast<int>(npts), static_cast<int>(monos.size()));
    for (size_t row = 0; row < npts; ++row) m.row_basis.push_back({static_cast<int>(row), Monomial(std::vector<int>(static_cast<size_t>(nv), 0))});
    for (size_t c = 0; c < monos.size(); ++c) {
        m.col_basis.push_back({-1, monos[c]});
        for (size_t row = 0; row < npts; ++row) {
            m.add_entry(static_cast<int>(c), static_cast<int>(row), monos[c].eval(config.points[row]));
        }
    }
    return static_cast<long long>(npts) - matrix_rank(m, opt);
}

long long brieskorn_tau(const std::vector<int>& exponents) {
    long long tau = 1;
    for (int a : exponents) {
        internal_check(a >= 2, "Brieskorn exponents must be at least 2");
        tau *= a - 1;
    }
    return tau;
}

HomogeneousPoly suspend(const HomogeneousPoly& f_prime, int n) {
    const int n_prime = f_prime.n_vars() - 1;
    const int d = f_prime.degree();
    internal_check(n > n_prime, "suspension must add at least one variable");
    internal_check(d >= 2, "suspension needs degree >= 2");
    HomogeneousPoly out = f_prime.widened(n + 1);
    for (int j = n_prime + 1; j <= n; ++j) {
        out = out + HomogeneousPoly::power(n + 1, j, d);
    }
    return out;
}

}  // namespace tjurina
