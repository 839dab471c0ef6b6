#include "tjurina/invariants.hpp"

#include <chrono>

#include "tjurina/errors.hpp"

namespace tjurina {

namespace {

long long power_ll(long long base, int e) {
    Int z;
    mpz_ui_pow_ui(z.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
    return to_longlong(z);
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

SingularPoint SingularPoint::certify(const HomogeneousPoly& f, std::vector<Rat> coords) {
    if (static_cast<int>(coords.size()) != f.n_vars()) {
        fail(ErrorCode::BadInput, "point has " + std::to_string(coords.size()) + " coordinates, expected " +
                                      std::to_string(f.n_vars()));
    }
    bool nonzero = false;
    for (const Rat& c : coords) nonzero = nonzero || !is_zero(c);
    if (!nonzero) fail(ErrorCode::BadInput, "projective point must have a nonzero coordinate");
    if (!is_zero(f.eval(coords))) fail(ErrorCode::NotSingular, "f does not vanish at the point");
    for (int j = 0; j < f.n_vars(); ++j) {
        if (!is_zero(partial_derivative(f, j).eval(coords))) {
            fail(ErrorCode::NotSingular, "partial derivative " + std::to_string(j) + " does not vanish at the point");
        }
    }
    return SingularPoint(std::move(coords));
}

TjurinaAgreement global_tjurina(JacobianSyzygies& calc) {
    if (calc.is_cone()) fail(ErrorCode::ConeInput, "tau is undefined here: the input is a cone");
    const int top = calc.stabilization_degree();
    TjurinaAgreement out;
    out.er_at_top = calc.er_dim(top);
    out.er_past_top = calc.er_dim(top + 1);
    out.hilbert = hilbert_tau(calc.polynomial(), calc.options()).tau;
    if (out.er_at_top != out.er_past_top || out.er_at_top != out.hilbert) {
        fail(ErrorCode::NonIsolatedOrBug,
             "tau computations disagree: er(" + std::to_string(top) + ")=" + std::to_string(out.er_at_top) +
                 ", er(" + std::to_string(top + 1) + ")=" + std::to_string(out.er_past_top) +
                 ", hilbert=" + std::to_string(out.hilbert));
    }
    out.tau = out.er_at_top;
    return out;
}

std::vector<long long> defect_table(JacobianSyzygies& calc, long long tau) {
    if (calc.is_cone()) fail(ErrorCode::ConeInput, "defects are undefined here: the input is a cone");
    const int top = calc.stabilization_degree();
    std::vector<long long> defects;
    defects.reserve(static_cast<size_t>(std::max(top, 0)));
    for (int m = 0; m <= top - 1; ++m) {
        long long value = calc.er_dim(top - 1 - m);
        internal_check(value >= 0 && value <= tau, "defect outside [0, tau]");
        defects.push_back(value);
    }
    return defects;
}

VersalityVerdict versality_report(JacobianSyzygies& calc, int a) {
    if (calc.is_cone()) fail(ErrorCode::ConeInput, "versality is undefined here: the input is a cone");
    const int top = calc.stabilization_degree();
    if (a < 0 || a > top - 1) {
        fail(ErrorCode::BadInput, "a must satisfy 0 <= a <= n(d-2)-1 = " + std::to_string(top - 1));
    }
    VersalityVerdict v;
    v.a = a;
    v.eval_degree = top - 1 - a;
    auto mder = calc.mder();
    v.a_versal = !mder.has_value() || a < *mder;
    v.defect = calc.er_dim(a);
    v.defect_criterion = (v.defect == 0);
    internal_check(v.a_versal == v.defect_criterion, "versality criteria disagree");
    return v;
}

TSmoothnessVerdict t_smoothness(JacobianSyzygies& calc, long long tau) {
    if (tau <= 0) fail(ErrorCode::BadInput, "T-smoothness check applies to singular inputs only");
    TSmoothnessVerdict v;
    const int n = calc.n();
    const int d = calc.degree();
    auto mder = calc.mder();
    internal_check(mder.has_value(), "singular input must have an essential relation");
    v.mder = *mder;
    v.threshold = static_cast<long long>(n) * (d - 2) - d - 1;
    v.holds = v.threshold < v.mder;
    if (n == 2) {
        v.plane_curve_form = "d-5 = " + std::to_string(d - 5) + (v.holds ? " < " : " >= ") +
                             "mder = " + std::to_string(v.mder);
    }
    return v;
}

WitnessVerdict topological_versality_witness(JacobianSyzygies& calc, int a, const SingularPoint& p) {
    if (calc.is_cone()) fail(ErrorCode::ConeInput, "witness is undefined here: the input is a cone");
    long long dim = calc.er_dim(a);
    if (dim != 1) {
        fail(ErrorCode::DimensionNotOne,
             "dim ER_" + std::to_string(a) + " = " + std::to_string(dim) + ", witness needs dimension 1");
    }
    WitnessVerdict v;
    auto reps = calc.er_representatives(a);
    internal_check(reps.size() == 1, "expected exactly one coset representative");
    v.representative = std::move(reps.front());

    v.evaluation.reserve(v.representative.components.size());
    bool nonzero = false;
    for (const HomogeneousPoly& comp : v.representative.components) {
        v.evaluation.push_back(comp.eval(p.coords()));
        nonzero = nonzero || !is_zero(v.evaluation.back());
    }
    v.topologically_versal = nonzero;

    // Coset independence: any second representative differs by a Koszul
    // element, and Koszul syzygies vanish at singular points because every
    // partial does. Verified on the first Koszul column when one exists.
    if (calc.kr_dim(a) > 0) {
        GradedMatrix koszul = calc.koszul_matrix(a);
        std::vector<Monomial> monos = monomials_of_degree(calc.n_vars(), a);
        const int block = static_cast<int>(monos.size());
        std::vector<HomogeneousPoly> kappa(static_cast<size_t>(calc.n_vars()),
                                           HomogeneousPoly(calc.n_vars(), a));
        for (const auto& [row, c] : koszul.columns.front()) {
            kappa[static_cast<size_t>(row / block)].add_term(monos[static_cast<size_t>(row % block)], c);
        }
        for (const HomogeneousPoly& comp : kappa) {
            internal_check(is_zero(comp.eval(p.coords())), "Koszul syzygy does not vanish at a singular point");
        }
        v.coset_checked = true;
    }
    return v;
}

DpwBounds dpw_bounds(JacobianSyzygies& calc, long long tau) {
    auto mdr = calc.mdr();
    if (mdr.cone) fail(ErrorCode::ConeInput, "bounds are undefined for cones");
    DpwBounds b;
    b.tau = tau;
    b.r = mdr.value;
    const int d = calc.degree();
    const int n = calc.n();
    const long long r = b.r;
    b.lower = (d - r - 1) * power_ll(d - 1, n - 1);
    b.upper = power_ll(d - 1, n) - r * (d - r - 1) * power_ll(d - 1, n - 2);
    b.lower_attained = (b.lower == tau);
    b.upper_attained = (b.upper == tau);
    b.asserted = tau > 0;
    if (b.asserted && !(b.lower <= tau && tau <= b.upper)) {
        fail(ErrorCode::BoundViolation,
             "Tjurina bounds violated: " + std::to_string(b.lower) + " <= " + std::to_string(tau) +
                 " <= " + std::to_string(b.upper) + " fails (r=" + std::to_string(r) + ")");
    }
    return b;
}

FreenessVerdict is_free_curve(JacobianSyzygies& calc, long long tau) {
    if (calc.n() != 2) fail(ErrorCode::WrongDimension, "freeness via the Tjurina bound applies to plane curves (n=2)");
    FreenessVerdict v;
    auto mdr = calc.mdr();
    if (mdr.cone) fail(ErrorCode::ConeInput, "freeness check rejects cones");
    v.r = mdr.value;
    v.tau = tau;
    const long long dm1 = calc.degree() - 1;
    v.upper = dm1 * dm1 - v.r * (calc.degree() - v.r - 1);
    v.free_curve = (tau == v.upper);
    return v;
}

StabilityVerdict stability_hypothesis(JacobianSyzygies& calc, long long tau) {
    if (calc.n() != 3) fail(ErrorCode::WrongDimension, "stability hypothesis applies to surfaces in P^3");
    StabilityVerdict v;
    const int d = calc.degree();
    v.d_prime = (d - 1) / 3;
    v.epsilon = d - 3 * v.d_prime;
    v.c1 = 1 - v.epsilon;
    v.tau = tau;
    const long long dm1 = d - 1;
    v.threshold = (d - v.d_prime - 1) * dm1 * dm1;
    v.holds = tau < v.threshold;
    if (v.holds) {
        internal_check(calc.ar_dim(v.d_prime) == 0, "stability hypothesis holds but AR_{d'} != 0");
        v.vanishing_verified = true;
    }
    return v;
}

TorelliVerdict torelli_hypothesis(JacobianSyzygies& calc, long long tau) {
    const int d = calc.degree();
    if (d < 4) fail(ErrorCode::DegreeTooSmall, "Torelli hypothesis needs degree >= 4");
    TorelliVerdict v;
    const int n = calc.n();
    v.m = (d - 2) / 2;
    v.threshold = to_longlong(binomial(static_cast<unsigned long>(v.m + n - 1), static_cast<unsigned long>(n - 1)));
    v.tau = tau;
    v.holds = tau < v.threshold;
    if (v.holds) {
        internal_check(v.threshold < power_ll(d - 1, n - 1), "binomial threshold not below (d-1)^{n-1}");
        v.binomial_strict = true;
        internal_check(calc.mdr().value > d - 2, "Torelli hypothesis holds but mdr <= d-2");
        v.mdr_verified = true;
        v.conclusion = "DK-Torelli or Sebastiani-Thom type (the check does not decide which)";
    }
    return v;
}

InvariantsReport full_report(const HomogeneousPoly& f, const ReportOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    InvariantsReport report;
    JacobianSyzygies calc(f, opt.lin);
    report.polynomial = f.str();
    report.d = calc.degree();
    report.n = calc.n();

    if (calc.is_cone()) {
        fail(ErrorCode::ConeInput,
             calc.has_zero_partial()
                 ? "input is a cone (a partial derivative vanishes identically)"
                 : "input is a cone (the partial derivatives are linearly dependent)");
    }
    report.timings_ms.emplace_back("setup", ms_since(t0));

    auto t1 = std::chrono::steady_clock::now();
    report.mdr = calc.mdr().value;
    report.mder = calc.mder();
    report.agreement = global_tjurina(calc);
    report.tau = report.agreement.tau;
    report.timings_ms.emplace_back("tjurina", ms_since(t1));

    auto t2 = std::chrono::steady_clock::now();
    const int top = calc.stabilization_degree();
    int cap = opt.cap.value_or(top + 1);
    if (cap < top) fail(ErrorCode::BadInput, "cap must be at least n(d-2) = " + std::to_string(top));
    report.dims = calc.graded_dims(cap);
    report.defects = defect_table(calc, report.tau);
    report.timings_ms.emplace_back("tables", ms_since(t2));

    auto t3 = std::chrono::steady_clock::now();
    report.bounds = dpw_bounds(calc, report.tau);

    report.versality.criteria_agree = true;
    for (int a = 0; a <= top - 1; ++a) {
        VersalityVerdict v = versality_report(calc, a);
        if (!v.a_versal && !report.versality.min_nonversal_a) report.versality.min_nonversal_a = a;
    }

    if (report.tau > 0) {
        MderGapVerdict gap;
        gap.mder = *report.mder;
        gap.rhs = static_cast<long long>(top) - report.tau;
        gap.holds = gap.mder > gap.rhs;
        report.mder_gap = gap;
        report.t_smooth = t_smoothness(calc, report.tau);
    }
    if (report.n == 2) report.freeness = is_free_curve(calc, report.tau);
    if (report.n == 3) report.stability = stability_hypothesis(calc, report.tau);
    if (report.d >= 4) report.torelli = torelli_hypothesis(calc, report.tau);
    report.timings_ms.emplace_back("verdicts", ms_since(t3));

    return report;
}

}  // namespace tjurina
