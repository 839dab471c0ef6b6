#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tjurina/monomial.hpp"
#include "tjurina/rational.hpp"

namespace tjurina {

// Sparse column / vector entries, row index ascending.
using RatCol = std::vector<std::pair<int, Rat>>;
using IntVec = std::vector<std::pair<int, Int>>;

// Basis label for one coordinate of a graded map: a monomial, optionally
// tagged with the component it sits in (tuples of forms). component = -1
// for plain polynomial coordinate spaces.
struct BasisLabel {
    int component = -1;
    Monomial mono;
};

// Exact-entry matrix of a graded linear map, stored column-sparse together
// with the ordered bases its coordinates refer to.
struct GradedMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<RatCol> columns;
    std::vector<BasisLabel> row_basis;
    std::vector<BasisLabel> col_basis;

    static GradedMatrix with_shape(int rows, int cols) {
        GradedMatrix m;
        m.rows = rows;
        m.cols = cols;
        m.columns.resize(static_cast<size_t>(cols));
        return m;
    }

    // Entries must be appended in ascending row order within a column.
    void add_entry(int col, int row, Rat value);
};

enum class FieldMode {
    Exact,        // fraction-free elimination over the integers, authoritative
    FastConfirm,  // modular prefilter + exact confirmation; falls back to Exact
};

struct LinOptions {
    FieldMode mode = FieldMode::Exact;
    // Seed for the random-prime stream of the fast path. Fixed by default so
    // reports are reproducible run to run.
    uint64_t prime_seed = 0x7461752d736575ULL;
};

struct KernelResult {
    long long rank = 0;
    std::vector<int> pivot_cols;
    // Canonical basis of ker(M): one vector per free column j, ascending in j.
    // Each vector is an integer primitive vector, first nonzero entry
    // positive, with zero coordinates at every other free column. This basis
    // is unique for a given matrix, so both field modes must reproduce it
    // bit for bit.
    std::vector<IntVec> basis;
};

long long matrix_rank(const GradedMatrix& m, const LinOptions& opt = {});
KernelResult nullspace(const GradedMatrix& m, const LinOptions& opt = {});

// rank([cols | extra]) for span-membership tests on small matrices.
long long rank_with_extra_columns(const GradedMatrix& m, const std::vector<RatCol>& extra,
                                  const LinOptions& opt = {});

// Exact sparse product M . v over the rationals, v given as integer vector.
std::vector<Rat> apply_matrix(const GradedMatrix& m, const IntVec& v);

}  // namespace tjurina
