#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tjurina/oracle.hpp"
#include "tjurina/syzygy.hpp"

namespace tjurina {

// Projective point certified (by substitution) to lie in the singular locus
// of the f it was built against.
class SingularPoint {
  public:
    // Throws NotSingular when f or one of its partials does not vanish.
    static SingularPoint certify(const HomogeneousPoly& f, std::vector<Rat> coords);

    const std::vector<Rat>& coords() const { return coords_; }

  private:
    explicit SingularPoint(std::vector<Rat> coords) : coords_(std::move(coords)) {}
    std::vector<Rat> coords_;
};

// tau via the stabilized ER dimension, cross-checked against the next degree
// and the independent Hilbert-function oracle. All three must agree.
struct TjurinaAgreement {
    long long tau = 0;
    long long er_at_top = 0;
    long long er_past_top = 0;
    long long hilbert = 0;
};

TjurinaAgreement global_tjurina(JacobianSyzygies& calc);

// defect_m for 0 <= m <= n(d-2)-1, read off the ER table.
std::vector<long long> defect_table(JacobianSyzygies& calc, long long tau);

struct VersalityVerdict {
    int a = 0;
    bool a_versal = false;
    int eval_degree = 0;       // n(d-2)-1-a
    long long defect = 0;      // defect at eval_degree
    bool defect_criterion = false;
};

VersalityVerdict versality_report(JacobianSyzygies& calc, int a);

struct TSmoothnessVerdict {
    bool holds = false;
    long long threshold = 0;  // n(d-2)-d-1
    int mder = 0;
    std::string plane_curve_form;  // "d-5 < mder" restated for n = 2
};

TSmoothnessVerdict t_smoothness(JacobianSyzygies& calc, long long tau);

struct WitnessVerdict {
    bool topologically_versal = false;
    std::vector<Rat> evaluation;
    SyzygyVector representative;
    bool coset_checked = false;  // Koszul vanishing at p verified
};

// Requires dim ER_a = 1; the non-simple claim on p is the caller's.
WitnessVerdict topological_versality_witness(JacobianSyzygies& calc, int a, const SingularPoint& p);

struct DpwBounds {
    long long lower = 0;
    long long upper = 0;
    long long tau = 0;
    int r = 0;
    bool lower_attained = false;
    bool upper_attained = false;
    bool asserted = false;  // bounds are only asserted in the singular case
};

DpwBounds dpw_bounds(JacobianSyzygies& calc, long long tau);

struct FreenessVerdict {
    bool free_curve = false;
    long long tau = 0;
    long long upper = 0;  // (d-1)^2 - r(d-r-1)
    int r = 0;
};

// n = 2 only; reducedness is a recorded input claim.
FreenessVerdict is_free_curve(JacobianSyzygies& calc, long long tau);

struct StabilityVerdict {
    bool holds = false;
    int d_prime = 0;
    int epsilon = 0;
    int c1 = 0;
    long long threshold = 0;
    long long tau = 0;
    bool vanishing_verified = false;  // AR_{d'} = 0 checked when the hypothesis holds
};

// n = 3 only.
StabilityVerdict stability_hypothesis(JacobianSyzygies& calc, long long tau);

struct TorelliVerdict {
    bool holds = false;
    int m = 0;
    long long threshold = 0;
    long long tau = 0;
    bool mdr_verified = false;        // mdr > d-2 checked when the hypothesis holds
    bool binomial_strict = false;     // threshold < (d-1)^{n-1} checked
    std::string conclusion;
};

// d >= 4 only.
TorelliVerdict torelli_hypothesis(JacobianSyzygies& calc, long long tau);

struct MderGapVerdict {
    bool holds = false;
    int mder = 0;
    long long rhs = 0;  // n(d-2) - tau
};

struct VersalitySummary {
    std::optional<int> min_nonversal_a;
    bool criteria_agree = true;
};

struct InvariantsReport {
    std::string polynomial;
    int d = 0;
    int n = 0;
    bool cone = false;
    int mdr = 0;
    std::optional<int> mder;
    long long tau = 0;
    TjurinaAgreement agreement;
    GradedDims dims;
    std::vector<long long> defects;
    DpwBounds bounds;
    VersalitySummary versality;
    std::optional<MderGapVerdict> mder_gap;          // tau > 0
    std::optional<TSmoothnessVerdict> t_smooth;      // tau > 0
    std::optional<FreenessVerdict> freeness;         // n == 2
    std::optional<StabilityVerdict> stability;       // n == 3
    std::optional<TorelliVerdict> torelli;           // d >= 4
    std::vector<std::pair<std::string, double>> timings_ms;
};

struct ReportOptions {
    LinOptions lin;
    std::optional<int> cap;  // graded-dims cap, defaults to n(d-2)+1
};

InvariantsReport full_report(const HomogeneousPoly& f, const ReportOptions& opt = {});

}  // namespace tjurina
