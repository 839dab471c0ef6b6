#include "tjurina/syzygy.hpp"

#include <algorithm>
#include <unordered_map>

#include "tjurina/errors.hpp"

namespace tjurina {

namespace {

std::unordered_map<uint64_t, int> index_basis(const std::vector<Monomial>& basis) {
    std::unordered_map<uint64_t, int> index;
    index.reserve(basis.size() * 2);
    for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i].pack(), static_cast<int>(i));
    return index;
}

// Sorted sparse coordinates of g * m in the given row basis.
std::vector<std::pair<int, Rat>> product_coords(const HomogeneousPoly& g, const Monomial& m,
                                                const std::unordered_map<uint64_t, int>& row_index,
                                                int row_offset) {
    std::vector<std::pair<int, Rat>> entries;
    entries.reserve(g.term_count());
    for (const auto& [mono, c] : g.terms()) {
        auto it = row_index.find(mono.times(m).pack());
        internal_check(it != row_index.end(), "product monomial missing from row basis");
        entries.emplace_back(row_offset + it->second, c);
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return entries;
}

}  // namespace

Jacobian jacobian(const HomogeneousPoly& f) {
    internal_check(f.degree() >= 1, "jacobian needs degree >= 1");
    Jacobian out;
    out.partials.reserve(static_cast<size_t>(f.n_vars()));
    for (int j = 0; j < f.n_vars(); ++j) {
        out.partials.push_back(partial_derivative(f, j));
        if (out.partials.back().is_zero()) out.has_zero_partial = true;
    }
    return out;
}

JacobianSyzygies::JacobianSyzygies(HomogeneousPoly f, LinOptions opt) : f_(std::move(f)), opt_(opt) {
    if (f_.n_vars() < 3 || f_.n_vars() > 10) {
        fail(ErrorCode::BadInput, "supported inputs live in P^n with 2 <= n <= 9 (3..10 variables)");
    }
    if (f_.is_zero()) fail(ErrorCode::BadInput, "zero polynomial");
    if (f_.degree() < 2) fail(ErrorCode::BadInput, "degree must be at least 2 (hyperplanes are smooth and excluded)");
    jac_ = jacobian(f_);
}

bool JacobianSyzygies::is_cone() { return ar_dim(0) > 0; }

GradedMatrix JacobianSyzygies::ar_matrix(int k) const {
    internal_check(k >= 0, "ar_matrix needs k >= 0");
    const int nv = f_.n_vars();
    const int d = f_.degree();
    std::vector<Monomial> col_monos = monomials_of_degree(nv, k);
    std::vector<Monomial> row_monos = monomials_of_degree(nv, k + d - 1);
    auto row_index = index_basis(row_monos);

    GradedMatrix m = GradedMatrix::with_shape(static_cast<int>(row_monos.size()),
                                              nv * static_cast<int>(col_monos.size()));
    m.row_basis.reserve(row_monos.size());
    for (const Monomial& mono : row_monos) m.row_basis.push_back({-1, mono});
    m.col_basis.reserve(m.columns.size());

    int col = 0;
    for (int j = 0; j < nv; ++j) {
        const HomogeneousPoly& fj = jac_.partials[static_cast<size_t>(j)];
        for (const Monomial& mono : col_monos) {
            m.col_basis.push_back({j, mono});
            for (auto& [row, c] : product_coords(fj, mono, row_index, 0)) m.add_entry(col, row, c);
            ++col;
        }
    }
    return m;
}

GradedMatrix JacobianSyzygies::koszul_matrix(int k) const {
    internal_check(k >= 0, "koszul_matrix needs k >= 0");
    const int nv = f_.n_vars();
    const int d = f_.degree();
    std::vector<Monomial> row_monos = monomials_of_degree(nv, k);
    const int block = static_cast<int>(row_monos.size());

    if (k < d - 1) {
        GradedMatrix m = GradedMatrix::with_shape(nv * block, 0);
        for (int l = 0; l < nv; ++l) {
            for (const Monomial& mono : row_monos) m.row_basis.push_back({l, mono});
        }
        return m;
    }

    std::vector<Monomial> gen_monos = monomials_of_degree(nv, k - d + 1);
    auto row_index = index_basis(row_monos);
    const int pairs = nv * (nv - 1) / 2;
    GradedMatrix m = GradedMatrix::with_shape(nv * block, pairs * static_cast<int>(gen_monos.size()));
    for (int l = 0; l < nv; ++l) {
        for (const Monomial& mono : row_monos) m.row_basis.push_back({l, mono});
    }

    int col = 0;
    for (int i = 0; i < nv; ++i) {
        for (int j = i + 1; j < nv; ++j) {
            const HomogeneousPoly& fi = jac_.partials[static_cast<size_t>(i)];
            const HomogeneousPoly& fj = jac_.partials[static_cast<size_t>(j)];
            for (const Monomial& nu : gen_monos) {
                m.col_basis.push_back({i * nv + j, nu});
                // Component i carries nu*f_j, component j carries -nu*f_i;
                // component blocks are already row-ascending since i < j.
                for (auto& [row, c] : product_coords(fj, nu, row_index, i * block)) m.add_entry(col, row, c);
                for (auto& [row, c] : product_coords(fi, nu, row_index, j * block)) m.add_entry(col, row, -c);
                ++col;
            }
        }
    }
    return m;
}

long long JacobianSyzygies::ar_dim(int k) {
    internal_check(k >= 0, "ar_dim needs k >= 0");
    auto it = ar_dims_.find(k);
    if (it != ar_dims_.end()) return it->second;
    GradedMatrix m = ar_matrix(k);
    long long dim = m.cols - matrix_rank(m, opt_);
    ar_dims_.emplace(k, dim);
    return dim;
}

long long JacobianSyzygies::kr_dim(int k) {
    internal_check(k >= 0, "kr_dim needs k >= 0");
    auto it = kr_dims_.find(k);
    if (it != kr_dims_.end()) return it->second;
    long long dim = 0;
    if (k >= f_.degree() - 1) dim = matrix_rank(koszul_matrix(k), opt_);
    kr_dims_.emplace(k, dim);
    return dim;
}

long long JacobianSyzygies::er_dim(int k) {
    long long ar = ar_dim(k);
    long long kr = kr_dim(k);
    internal_check(kr <= ar, "Koszul relations must embed into all relations");
    return ar - kr;
}

SyzygyVector JacobianSyzygies::to_syzygy(const IntVec& v, int k) const {
    SyzygyVector out;
    out.degree = k;
    out.components.assign(static_cast<size_t>(f_.n_vars()), HomogeneousPoly(f_.n_vars(), k));
    std::vector<Monomial> col_monos = monomials_of_degree(f_.n_vars(), k);
    const int block = static_cast<int>(col_monos.size());
    for (const auto& [col, z] : v) {
        int j = col / block;
        int t = col % block;
        out.components[static_cast<size_t>(j)].add_term(col_monos[static_cast<size_t>(t)], Rat(z));
    }
    return out;
}

std::vector<SyzygyVector> JacobianSyzygies::ar_basis(int k) {
    GradedMatrix m = ar_matrix(k);
    KernelResult kernel = nullspace(m, opt_);
    ar_dims_.emplace(k, static_cast<long long>(kernel.basis.size()));
    std::vector<SyzygyVector> out;
    out.reserve(kernel.basis.size());
    for (const IntVec& v : kernel.basis) out.push_back(to_syzygy(v, k));
    return out;
}

std::vector<SyzygyVector> JacobianSyzygies::er_representatives(int k) {
    long long want = er_dim(k);
    if (want == 0) return {};
    GradedMatrix koszul = koszul_matrix(k);
    KernelResult kernel = nullspace(ar_matrix(k), opt_);

    std::vector<RatCol> chosen;
    std::vector<SyzygyVector> out;
    long long base = matrix_rank(koszul, opt_);
    for (const IntVec& v : kernel.basis) {
        if (static_cast<long long>(out.size()) == want) break;
        RatCol col;
        col.reserve(v.size());
        for (const auto& [c, z] : v) col.emplace_back(c, Rat(z));
        chosen.push_back(std::move(col));
        if (rank_with_extra_columns(koszul, chosen, opt_) > base + static_cast<long long>(out.size())) {
            out.push_back(to_syzygy(v, k));
        } else {
            chosen.pop_back();
        }
    }
    internal_check(static_cast<long long>(out.size()) == want, "failed to complete Koszul image to an AR basis");
    return out;
}

JacobianSyzygies::MdrResult JacobianSyzygies::mdr() {
    if (is_cone()) return {0, true};
    for (int k = 1; k <= degree() - 1; ++k) {
        if (ar_dim(k) > 0) return {k, false};
    }
    internal_check(false, "no relation found through degree d-1");
    return {};
}

std::optional<int> JacobianSyzygies::mder() {
    const int top = stabilization_degree();
    for (int k = 0; k <= top; ++k) {
        if (er_dim(k) > 0) return k;
    }
    return std::nullopt;
}

GradedDims JacobianSyzygies::graded_dims(int cap) {
    const int top = stabilization_degree();
    if (cap < top) fail(ErrorCode::BadInput, "cap must be at least n(d-2) = " + std::to_string(top));
    GradedDims out;
    out.cap = cap;
    out.table.reserve(static_cast<size_t>(cap) + 1);
    for (int k = 0; k <= cap; ++k) {
        long long ar = ar_dim(k);
        long long kr = kr_dim(k);
        out.table.push_back({ar, kr, ar - kr});
    }
    for (int k = top; k <= cap; ++k) {
        if (out.er(k) != out.er(top)) {
            fail(ErrorCode::NonIsolatedOrBug,
                 "dim ER failed to stabilize at n(d-2): er(" + std::to_string(top) + ")=" +
                     std::to_string(out.er(top)) + " but er(" + std::to_string(k) + ")=" +
                     std::to_string(out.er(k)) + "; non-isolated singularities or an upstream bug");
        }
    }
    return out;
}

}  // namespace tjurina
