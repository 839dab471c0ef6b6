#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "tjurina/linalg.hpp"
#include "tjurina/polynomial.hpp"

namespace tjurina {

struct Jacobian {
    std::vector<HomogeneousPoly> partials;
    // A vanishing partial shows (without any coordinate change) that the
    // hypersurface is a cone. Sufficient, not necessary; ar_dim at k = 0 is
    // the complete test.
    bool has_zero_partial = false;
};

Jacobian jacobian(const HomogeneousPoly& f);

// Tuple (a_0, ..., a_n) of degree-k forms with sum a_j f_j = 0.
struct SyzygyVector {
    int degree = 0;
    std::vector<HomogeneousPoly> components;
};

// Per-degree table k -> (dim AR_k, dim KR_k, dim ER_k) for 0 <= k <= cap.
struct GradedDims {
    int cap = 0;
    std::vector<std::array<long long, 3>> table;

    long long ar(int k) const { return table[static_cast<size_t>(k)][0]; }
    long long kr(int k) const { return table[static_cast<size_t>(k)][1]; }
    long long er(int k) const { return table[static_cast<size_t>(k)][2]; }
};

// Graded pieces of the Jacobian syzygy module of a fixed f: dimensions and
// bases of AR_k, KR_k, ER_k and the derived invariants. Dimensions are
// memoized per degree; results are deterministic for a fixed input.
class JacobianSyzygies {
  public:
    explicit JacobianSyzygies(HomogeneousPoly f, LinOptions opt = {});

    const HomogeneousPoly& polynomial() const { return f_; }
    const std::vector<HomogeneousPoly>& partials() const { return jac_.partials; }
    int degree() const { return f_.degree(); }
    int n() const { return f_.n_vars() - 1; }
    int n_vars() const { return f_.n_vars(); }
    const LinOptions& options() const { return opt_; }

    bool has_zero_partial() const { return jac_.has_zero_partial; }
    bool is_cone();

    // Coordinate matrix of (S_k)^{n+1} -> S_{k+d-1}, (a_j) -> sum a_j f_j.
    GradedMatrix ar_matrix(int k) const;
    // Coordinate matrix of (S_{k-d+1})^{C(n+1,2)} -> (S_k)^{n+1} sending the
    // (i, j) generator g to g*(f_j e_i - f_i e_j); zero columns count when
    // k < d - 1. Row indexing matches ar_matrix's column indexing.
    GradedMatrix koszul_matrix(int k) const;

    long long ar_dim(int k);
    long long kr_dim(int k);
    long long er_dim(int k);

    std::vector<SyzygyVector> ar_basis(int k);

    // Deterministic coset representatives: AR basis vectors completing a
    // basis of the Koszul image, in elimination order.
    std::vector<SyzygyVector> er_representatives(int k);

    struct MdrResult {
        int value = 0;
        bool cone = false;
    };
    MdrResult mdr();

    // Empty result certifies tau = 0 (no essential relation through n(d-2)).
    std::optional<int> mder();

    GradedDims graded_dims(int cap);

    // n(d-2), the degree where dim ER stabilizes to tau.
    int stabilization_degree() const { return n() * (degree() - 2); }

  private:
    SyzygyVector to_syzygy(const IntVec& v, int k) const;

    HomogeneousPoly f_;
    Jacobian jac_;
    LinOptions opt_;
    std::map<int, long long> ar_dims_;
    std::map<int, long long> kr_dims_;
};

}  // namespace tjurina
