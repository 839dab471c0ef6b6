#include "tjurina/linalg.hpp"

#include <algorithm>
#include <cstdlib>

#include "tjurina/errors.hpp"
#include "tjurina/modular.hpp"

namespace tjurina {

void GradedMatrix::add_entry(int col, int row, Rat value) {
    internal_check(col >= 0 && col < cols && row >= 0 && row < rows, "matrix entry out of range");
    if (is_zero(value)) return;
    auto& column = columns[static_cast<size_t>(col)];
    internal_check(column.empty() || column.back().first < row, "column entries must arrive row-ascending");
    column.emplace_back(row, std::move(value));
}

namespace {

// ---------------------------------------------------------------------------
// Integer row form. Scaling each row to a primitive integer vector changes
// neither the rank nor the kernel, and keeps the elimination fraction-free.
// ---------------------------------------------------------------------------

struct SparseRow {
    std::vector<std::pair<int, Int>> e;
    bool empty() const { return e.empty(); }
    int lead() const { return e.front().first; }
};

// Divide by the content and make the leading entry positive.
void normalize_row(SparseRow& r) {
    if (r.e.empty()) return;
    Int g(0);
    for (const auto& [c, v] : r.e) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (sgn(r.e.front().second) < 0) g = -g;
    if (g != 1) {
        for (auto& [c, v] : r.e) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
}

std::vector<SparseRow> build_int_rows(const GradedMatrix& m, const std::vector<RatCol>* extra) {
    std::vector<std::vector<std::pair<int, Rat>>> rowbuf(static_cast<size_t>(m.rows));
    auto add_col = [&](int c, const RatCol& col) {
        for (const auto& [r, q] : col) {
            internal_check(r >= 0 && r < m.rows, "column entry row out of range");
            if (!is_zero(q)) rowbuf[static_cast<size_t>(r)].emplace_back(c, q);
        }
    };
    for (int c = 0; c < m.cols; ++c) add_col(c, m.columns[static_cast<size_t>(c)]);
    if (extra) {
        for (size_t i = 0; i < extra->size(); ++i) add_col(m.cols + static_cast<int>(i), (*extra)[i]);
    }

    std::vector<SparseRow> rows;
    rows.reserve(rowbuf.size());
    for (auto& entries : rowbuf) {
        SparseRow row;
        if (!entries.empty()) {
            Int scale(1);
            for (const auto& [c, q] : entries) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
            row.e.reserve(entries.size());
            for (const auto& [c, q] : entries) {
                Int v = q.get_num() * (scale / q.get_den());
                row.e.emplace_back(c, std::move(v));
            }
            normalize_row(row);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// out = b*t - a*q; the shared leading column cancels exactly.
SparseRow combine_rows(const SparseRow& t, const SparseRow& q, const Int& a, const Int& b) {
    SparseRow out;
    out.e.reserve(t.e.size() + q.e.size());
    size_t i = 0, k = 0;
    while (i < t.e.size() || k < q.e.size()) {
        if (k == q.e.size() || (i < t.e.size() && t.e[i].first < q.e[k].first)) {
            out.e.emplace_back(t.e[i].first, b * t.e[i].second);
            ++i;
        } else if (i == t.e.size() || q.e[k].first < t.e[i].first) {
            out.e.emplace_back(q.e[k].first, -(a * q.e[k].second));
            ++k;
        } else {
            Int v = b * t.e[i].second - a * q.e[k].second;
            if (v != 0) out.e.emplace_back(t.e[i].first, std::move(v));
            ++i;
            ++k;
        }
    }
    return out;
}

struct Echelon {
    long long rank = 0;
    std::vector<int> pivot_cols;
    std::vector<SparseRow> rows;  // one per pivot, lead == pivot column
};

// Fraction-free elimination, columns left to right, pivot = first remaining
// row (original order) with a nonzero entry in the column. Rows keep only a
// primitive representative after each cross-multiplied update, which bounds
// entries by the corresponding minors of the input.
Echelon eliminate_exact(std::vector<SparseRow> rows, int ncols) {
    Echelon ech;
    std::vector<std::vector<int>> bucket(static_cast<size_t>(ncols));
    for (size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].empty()) bucket[static_cast<size_t>(rows[i].lead())].push_back(static_cast<int>(i));
    }
    for (int j = 0; j < ncols; ++j) {
        auto& cand = bucket[static_cast<size_t>(j)];
        if (cand.empty()) continue;
        std::sort(cand.begin(), cand.end());
        int piv = cand[0];
        for (size_t t = 1; t < cand.size(); ++t) {
            int r = cand[t];
            Int a = rows[static_cast<size_t>(r)].e.front().second;
            Int b = rows[static_cast<size_t>(piv)].e.front().second;
            rows[static_cast<size_t>(r)] = combine_rows(rows[static_cast<size_t>(r)], rows[static_cast<size_t>(piv)], a, b);
            normalize_row(rows[static_cast<size_t>(r)]);
            if (!rows[static_cast<size_t>(r)].empty()) {
                bucket[static_cast<size_t>(rows[static_cast<size_t>(r)].lead())].push_back(r);
            }
        }
        ech.pivot_cols.push_back(j);
        ech.rows.push_back(std::move(rows[static_cast<size_t>(piv)]));
    }
    ech.rank = static_cast<long long>(ech.pivot_cols.size());
    return ech;
}

IntVec canonicalize_rational_vector(std::vector<std::pair<int, Rat>> entries) {
    Int scale(1);
    for (const auto& [c, q] : entries) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
    IntVec v;
    v.reserve(entries.size());
    Int g(0);
    for (const auto& [c, q] : entries) {
        Int z = q.get_num() * (scale / q.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        v.emplace_back(c, std::move(z));
    }
    if (!v.empty()) {
        if (sgn(v.front().second) < 0) g = -g;
        if (g != 1) {
            for (auto& [c, z] : v) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
        }
    }
    return v;
}

// Canonical kernel basis: per free column j the unique kernel vector with
// coordinate 1 at j and 0 at every other free column, scaled to a primitive
// integer vector with positive first nonzero entry.
std::vector<IntVec> kernel_from_echelon(const Echelon& ech, int ncols) {
    std::vector<char> is_pivot(static_cast<size_t>(ncols), 0);
    for (int c : ech.pivot_cols) is_pivot[static_cast<size_t>(c)] = 1;
    std::vector<IntVec> basis;
    std::vector<Rat> w(static_cast<size_t>(ncols), Rat(0));
    for (int j = 0; j < ncols; ++j) {
        if (is_pivot[static_cast<size_t>(j)]) continue;
        std::fill(w.begin(), w.end(), Rat(0));
        w[static_cast<size_t>(j)] = 1;
        for (size_t i = ech.rows.size(); i-- > 0;) {
            const SparseRow& row = ech.rows[i];
            int pc = ech.pivot_cols[i];
            Rat acc(0);
            for (const auto& [c, v] : row.e) {
                if (c == pc) continue;
                if (sgn(w[static_cast<size_t>(c)]) != 0) acc += Rat(v) * w[static_cast<size_t>(c)];
            }
            if (sgn(acc) != 0) {
                w[static_cast<size_t>(pc)] = -acc / Rat(row.e.front().second);
            } else {
                w[static_cast<size_t>(pc)] = 0;
            }
        }
        std::vector<std::pair<int, Rat>> entries;
        for (int c = 0; c < ncols; ++c) {
            if (sgn(w[static_cast<size_t>(c)]) != 0) entries.emplace_back(c, w[static_cast<size_t>(c)]);
        }
        basis.push_back(canonicalize_rational_vector(std::move(entries)));
    }
    return basis;
}

bool verify_kernel_vector(const std::vector<SparseRow>& rows, const IntVec& v) {
    for (const SparseRow& row : rows) {
        Int acc(0);
        size_t i = 0, k = 0;
        while (i < row.e.size() && k < v.size()) {
            if (row.e[i].first < v[k].first) {
                ++i;
            } else if (v[k].first < row.e[i].first) {
                ++k;
            } else {
                acc += row.e[i].second * v[k].second;
                ++i;
                ++k;
            }
        }
        if (acc != 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Modular path.
// ---------------------------------------------------------------------------

struct ModRow {
    std::vector<std::pair<int, uint64_t>> e;
    bool empty() const { return e.empty(); }
    int lead() const { return e.front().first; }
};

struct ModEchelon {
    long long rank = 0;
    std::vector<int> pivot_cols;
    std::vector<ModRow> rows;  // monic, lead == pivot column
};

void make_monic(ModRow& r, const PrimeField& field) {
    if (r.e.empty()) return;
    uint64_t inv = field.inv(r.e.front().second);
    if (inv == 1) return;
    for (auto& [c, v] : r.e) v = field.mul(v, inv);
}

ModEchelon eliminate_mod(const std::vector<SparseRow>& input, int ncols, const PrimeField& field) {
    std::vector<ModRow> rows;
    rows.reserve(input.size());
    for (const SparseRow& src : input) {
        ModRow row;
        row.e.reserve(src.e.size());
        for (const auto& [c, v] : src.e) {
            uint64_t rv = field.reduce(v);
            if (rv != 0) row.e.emplace_back(c, rv);
        }
        rows.push_back(std::move(row));
    }

    ModEchelon ech;
    std::vector<std::vector<int>> bucket(static_cast<size_t>(ncols));
    for (size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].empty()) {
            make_monic(rows[i], field);
            bucket[static_cast<size_t>(rows[i].lead())].push_back(static_cast<int>(i));
        }
    }
    for (int j = 0; j < ncols; ++j) {
        auto& cand = bucket[static_cast<size_t>(j)];
        if (cand.empty()) continue;
        std::sort(cand.begin(), cand.end());
        int piv = cand[0];
        const ModRow& prow = rows[static_cast<size_t>(piv)];
        for (size_t t = 1; t < cand.size(); ++t) {
            int r = cand[t];
            ModRow& row = rows[static_cast<size_t>(r)];
            uint64_t a = row.e.front().second;  // pivot row is monic
            ModRow out;
            out.e.reserve(row.e.size() + prow.e.size());
            size_t i = 0, k = 0;
            while (i < row.e.size() || k < prow.e.size()) {
                if (k == prow.e.size() || (i < row.e.size() && row.e[i].first < prow.e[k].first)) {
                    out.e.push_back(row.e[i]);
                    ++i;
                } else if (i == row.e.size() || prow.e[k].first < row.e[i].first) {
                    out.e.emplace_back(prow.e[k].first, field.neg(field.mul(a, prow.e[k].second)));
                    ++k;
                } else {
                    uint64_t v = field.sub(row.e[i].second, field.mul(a, prow.e[k].second));
                    if (v != 0) out.e.emplace_back(row.e[i].first, v);
                    ++i;
                    ++k;
                }
            }
            row = std::move(out);
            if (!row.empty()) {
                make_monic(row, field);
                bucket[static_cast<size_t>(row.lead())].push_back(r);
            }
        }
        ech.pivot_cols.push_back(j);
        ech.rows.push_back(rows[static_cast<size_t>(piv)]);
    }
    ech.rank = static_cast<long long>(ech.pivot_cols.size());
    return ech;
}

// Reduction mod p of the canonical rational kernel vectors (coordinate 1 at
// the free column), one dense vector per free column.
std::vector<std::vector<uint64_t>> kernel_mod(const ModEchelon& ech, int ncols, const PrimeField& field) {
    std::vector<char> is_pivot(static_cast<size_t>(ncols), 0);
    for (int c : ech.pivot_cols) is_pivot[static_cast<size_t>(c)] = 1;
    std::vector<std::vector<uint64_t>> basis;
    for (int j = 0; j < ncols; ++j) {
        if (is_pivot[static_cast<size_t>(j)]) continue;
        std::vector<uint64_t> w(static_cast<size_t>(ncols), 0);
        w[static_cast<size_t>(j)] = 1;
        for (size_t i = ech.rows.size(); i-- > 0;) {
            const ModRow& row = ech.rows[i];
            int pc = ech.pivot_cols[i];
            uint64_t acc = 0;
            for (const auto& [c, v] : row.e) {
                if (c == pc) continue;
                if (w[static_cast<size_t>(c)] != 0) acc = field.add(acc, field.mul(v, w[static_cast<size_t>(c)]));
            }
            w[static_cast<size_t>(pc)] = field.neg(acc);  // row is monic
        }
        basis.push_back(std::move(w));
    }
    return basis;
}

// Crude bit bound on numerators/denominators of kernel entries (Hadamard on
// the rows); used only as the give-up threshold of the fast path.
double kernel_entry_bits(const std::vector<SparseRow>& rows) {
    double total = 0.0;
    for (const SparseRow& row : rows) {
        if (row.empty()) continue;
        size_t max_bits = 1;
        for (const auto& [c, v] : row.e) max_bits = std::max(max_bits, mpz_sizeinbase(v.get_mpz_t(), 2));
        total += static_cast<double>(max_bits) + 0.5 * static_cast<double>(row.e.size() > 1 ? 64 - __builtin_clzll(row.e.size()) : 1);
    }
    return total;
}

KernelResult exact_kernel(const std::vector<SparseRow>& rows, int ncols) {
    Echelon ech = eliminate_exact(rows, ncols);
    KernelResult out;
    out.rank = ech.rank;
    out.pivot_cols = ech.pivot_cols;
    out.basis = kernel_from_echelon(ech, ncols);
    return out;
}

// Modular prefilter with exact confirmation. Three random primes must agree
// on rank and pivot set; the kernel is then rebuilt exactly by CRT plus
// rational reconstruction and certified by checking M.v = 0 over the
// integers together with the reduced support pattern. Any failure falls back
// to the exact route.
KernelResult fast_kernel(const std::vector<SparseRow>& rows, int ncols, const LinOptions& opt) {
    PrimeStream stream(opt.prime_seed);
    std::vector<uint64_t> primes;
    std::vector<ModEchelon> echelons;
    for (int i = 0; i < 3; ++i) {
        primes.push_back(stream.next());
        echelons.push_back(eliminate_mod(rows, ncols, PrimeField(primes.back())));
    }
    if (echelons[1].pivot_cols != echelons[0].pivot_cols || echelons[2].pivot_cols != echelons[0].pivot_cols) {
        return exact_kernel(rows, ncols);
    }
    const std::vector<int> pivot_cols = echelons[0].pivot_cols;
    const long long rank = echelons[0].rank;

    std::vector<int> free_cols;
    {
        std::vector<char> is_pivot(static_cast<size_t>(ncols), 0);
        for (int c : pivot_cols) is_pivot[static_cast<size_t>(c)] = 1;
        for (int c = 0; c < ncols; ++c) {
            if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
        }
    }
    if (free_cols.empty()) {
        // rank >= |pivots| is certified by the nonzero pivot minor mod p, and
        // rank <= ncols always; nothing left to confirm.
        return KernelResult{rank, pivot_cols, {}};
    }

    const size_t nullity = free_cols.size();
    std::vector<std::vector<CrtValue>> crt(nullity, std::vector<CrtValue>(static_cast<size_t>(ncols)));
    size_t folded = 0;
    auto fold_prime = [&](uint64_t p, const ModEchelon& ech) {
        PrimeField field(p);
        auto vecs = kernel_mod(ech, ncols, field);
        internal_check(vecs.size() == nullity, "modular kernel size mismatch");
        for (size_t i = 0; i < nullity; ++i) {
            for (int c = 0; c < ncols; ++c) crt_combine(crt[i][static_cast<size_t>(c)], vecs[i][static_cast<size_t>(c)], p);
        }
        ++folded;
    };
    for (size_t i = 0; i < primes.size(); ++i) fold_prime(primes[i], echelons[i]);
    echelons.clear();

    const size_t prime_limit = static_cast<size_t>((2.0 * kernel_entry_bits(rows) + 64.0) / 31.0) + 4;
    int anomalies = 0;
    for (;;) {
        // Attempt reconstruction with the primes folded so far.
        bool ok = true;
        std::vector<IntVec> basis;
        basis.reserve(nullity);
        for (size_t i = 0; i < nullity && ok; ++i) {
            std::vector<std::pair<int, Rat>> entries;
            for (int c = 0; c < ncols && ok; ++c) {
                const CrtValue& acc = crt[i][static_cast<size_t>(c)];
                if (acc.residue == 0) continue;
                auto q = rational_reconstruct(acc.residue, acc.modulus);
                if (!q) {
                    ok = false;
                } else if (!is_zero(*q)) {
                    entries.emplace_back(c, *q);
                }
            }
            if (ok) basis.push_back(canonicalize_rational_vector(std::move(entries)));
        }
        if (ok) {
            // Exact certification: pattern plus membership.
            for (size_t i = 0; i < nullity && ok; ++i) {
                const IntVec& v = basis[i];
                int j = free_cols[i];
                bool has_unit = false;
                for (const auto& [c, z] : v) {
                    if (c == j) {
                        has_unit = true;
                    } else if (c > j || std::binary_search(free_cols.begin(), free_cols.end(), c)) {
                        ok = false;  // support must be {pivots < j} plus {j}
                        break;
                    }
                }
                if (!has_unit) ok = false;
                if (ok && !verify_kernel_vector(rows, v)) ok = false;
            }
            if (ok) return KernelResult{rank, pivot_cols, std::move(basis)};
        }
        // Need more primes (or hit a bad prime): extend, keeping only primes
        // that reproduce the agreed pivot set.
        size_t target = folded * 2;
        while (folded < target) {
            if (folded >= prime_limit || anomalies > 3) return exact_kernel(rows, ncols);
            uint64_t p = stream.next();
            ModEchelon ech = eliminate_mod(rows, ncols, PrimeField(p));
            if (ech.pivot_cols != pivot_cols) {
                ++anomalies;
                continue;
            }
            fold_prime(p, ech);
        }
    }
}

long long count_nonzero_rows(const std::vector<SparseRow>& rows) {
    long long n = 0;
    for (const SparseRow& r : rows) {
        if (!r.empty()) ++n;
    }
    return n;
}

}  // namespace

long long matrix_rank(const GradedMatrix& m, const LinOptions& opt) {
    if (m.cols == 0 || m.rows == 0) return 0;
    std::vector<SparseRow> rows = build_int_rows(m, nullptr);
    if (opt.mode == FieldMode::Exact) return eliminate_exact(std::move(rows), m.cols).rank;

    PrimeStream stream(opt.prime_seed);
    long long rank = -1;
    bool agree = true;
    for (int i = 0; i < 3; ++i) {
        long long r = eliminate_mod(rows, m.cols, PrimeField(stream.next())).rank;
        if (rank < 0) rank = r;
        agree = agree && (r == rank);
    }
    if (agree && (rank == m.cols || rank == count_nonzero_rows(rows))) {
        // Certified: the pivot minor is nonzero mod p, and the rank cannot
        // exceed the column count / nonzero row count it already reached.
        return rank;
    }
    return fast_kernel(rows, m.cols, opt).rank;
}

KernelResult nullspace(const GradedMatrix& m, const LinOptions& opt) {
    if (m.cols == 0) return {};
    std::vector<SparseRow> rows = build_int_rows(m, nullptr);
    if (opt.mode == FieldMode::Exact) return exact_kernel(rows, m.cols);
    return fast_kernel(rows, m.cols, opt);
}

long long rank_with_extra_columns(const GradedMatrix& m, const std::vector<RatCol>& extra,
                                  const LinOptions& opt) {
    (void)opt;  // span tests are small; the exact route keeps them certified
    int total_cols = m.cols + static_cast<int>(extra.size());
    if (total_cols == 0) return 0;
    std::vector<SparseRow> rows = build_int_rows(m, &extra);
    return eliminate_exact(std::move(rows), total_cols).rank;
}

std::vector<Rat> apply_matrix(const GradedMatrix& m, const IntVec& v) {
    std::vector<Rat> out(static_cast<size_t>(m.rows), Rat(0));
    for (const auto& [c, z] : v) {
        internal_check(c >= 0 && c < m.cols, "vector coordinate out of range");
        Rat coef(z);
        for (const auto& [r, q] : m.columns[static_cast<size_t>(c)]) out[static_cast<size_t>(r)] += coef * q;
    }
    return out;
}

}  // namespace tjurina
