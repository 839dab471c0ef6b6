#include <doctest.h>

#include <random>

#include "tjurina/corpus.hpp"
#include "tjurina/errors.hpp"
#include "tjurina/invariants.hpp"
#include "tjurina/parse.hpp"

using namespace tjurina;

namespace {

JacobianSyzygies make(const char* expr) { return JacobianSyzygies(parse_poly(expr)); }

}  // namespace

TEST_CASE("global tau with three-way agreement") {
    JacobianSyzygies triangle = make("x0*x1*x2");
    TjurinaAgreement a = global_tjurina(triangle);
    CHECK(a.tau == 3);
    CHECK(a.er_at_top == a.er_past_top);
    CHECK(a.hilbert == 3);

    JacobianSyzygies quintic = make("x0^5 + x1^4*x2");
    CHECK(global_tjurina(quintic).tau == 12);

    JacobianSyzygies fermat = make("x0^3 + x1^3 + x2^3");
    CHECK(global_tjurina(fermat).tau == 0);
}

TEST_CASE("defect table of the triangle") {
    JacobianSyzygies triangle = make("x0*x1*x2");
    long long tau = global_tjurina(triangle).tau;
    std::vector<long long> defects = defect_table(triangle, tau);
    REQUIRE(defects.size() == 2);
    CHECK(defects[0] == 2);  // constants see one value on three points
    CHECK(defects[1] == 0);  // linear forms separate the coordinate points
    CHECK(triangle.er_dim(0) == 0);
    CHECK(triangle.er_dim(1) == 2);
}

TEST_CASE("versality verdicts") {
    JacobianSyzygies quintic = make("x0^5 + x1^4*x2");
    VersalityVerdict a1 = versality_report(quintic, 1);
    CHECK_FALSE(a1.a_versal);
    CHECK(a1.defect > 0);
    VersalityVerdict a0 = versality_report(quintic, 0);
    CHECK(a0.a_versal);
    CHECK(a0.defect == 0);

    JacobianSyzygies fermat = make("x0^3 + x1^3 + x2^3");
    for (int a = 0; a <= 1; ++a) CHECK(versality_report(fermat, a).a_versal);

    CHECK_THROWS_AS(versality_report(quintic, 99), Error);
}

TEST_CASE("T-smoothness") {
    JacobianSyzygies quintic = make("x0^5 + x1^4*x2");
    TSmoothnessVerdict v = t_smoothness(quintic, 12);
    CHECK(v.holds);
    CHECK(v.threshold == 0);
    CHECK(v.mder == 1);
    CHECK(v.plane_curve_form.find("d-5 = 0") != std::string::npos);

    // tau <= d-1 forces the condition (here through the verdict itself).
    JacobianSyzygies nodal = make("x1^2*x2 - x0^3 - x0^2*x2");
    CHECK(t_smoothness(nodal, global_tjurina(nodal).tau).holds);

    JacobianSyzygies triangle = make("x0*x1*x2");
    TSmoothnessVerdict t = t_smoothness(triangle, 3);
    CHECK(t.holds);
    CHECK(t.threshold == -2);

    JacobianSyzygies fermat = make("x0^3 + x1^3 + x2^3");
    CHECK_THROWS_AS(t_smoothness(fermat, 0), Error);
}

TEST_CASE("topological versality witness at the quintic's singular point") {
    HomogeneousPoly f = parse_poly("x0^5 + x1^4*x2");
    JacobianSyzygies calc(f);
    SingularPoint p = SingularPoint::certify(f, {Rat(0), Rat(0), Rat(1)});
    WitnessVerdict v = topological_versality_witness(calc, 1, p);
    CHECK(v.topologically_versal);
    REQUIRE(v.evaluation.size() == 3);
    CHECK(v.evaluation[0] == Rat(0));
    CHECK(v.evaluation[1] == Rat(0));
    CHECK(v.evaluation[2] == Rat(-4));

    // A smooth point of the curve fails certification.
    CHECK_THROWS_AS(SingularPoint::certify(f, {Rat(0), Rat(1), Rat(0)}), Error);
    try {
        SingularPoint::certify(f, {Rat(0), Rat(1), Rat(0)});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotSingular);
    }

    // Witness needs a one-dimensional graded piece.
    CHECK_THROWS_AS(topological_versality_witness(calc, 3, p), Error);
}

TEST_CASE("witness coset check runs when the Koszul part is nonzero") {
    // At a = 2 = d-1 the nodal cubic has dim ER_2 = 1 with nonzero Koszul
    // part, so the second-representative check is exercised.
    HomogeneousPoly f = parse_poly("x1^2*x2 - x0^3 - x0^2*x2");
    JacobianSyzygies calc(f);
    REQUIRE(calc.er_dim(2) == 1);
    REQUIRE(calc.kr_dim(2) > 0);
    SingularPoint p = SingularPoint::certify(f, {Rat(0), Rat(0), Rat(1)});
    WitnessVerdict v = topological_versality_witness(calc, 2, p);
    CHECK(v.coset_checked);
    CHECK(v.topologically_versal);
    REQUIRE(v.evaluation.size() == 3);
    CHECK(v.evaluation[0] == Rat(0));
    CHECK(v.evaluation[1] == Rat(0));
    CHECK(v.evaluation[2] == Rat(4));
}

TEST_CASE("Koszul syzygies vanish at singular points") {
    HomogeneousPoly f = parse_poly("x0^5 + x1^4*x2");
    JacobianSyzygies calc(f);
    SingularPoint p = SingularPoint::certify(f, {Rat(0), Rat(0), Rat(1)});
    int k = 5;  // above d-1 so Koszul columns exist
    GradedMatrix koszul = calc.koszul_matrix(k);
    REQUIRE(koszul.cols > 0);
    auto monos = monomials_of_degree(3, k);
    const int block = static_cast<int>(monos.size());
    for (int c = 0; c < koszul.cols; ++c) {
        std::vector<HomogeneousPoly> comps(3, HomogeneousPoly(3, k));
        for (const auto& [row, value] : koszul.columns[static_cast<size_t>(c)]) {
            comps[static_cast<size_t>(row / block)].add_term(monos[static_cast<size_t>(row % block)], value);
        }
        for (const HomogeneousPoly& comp : comps) CHECK(sgn(comp.eval(p.coords())) == 0);
    }
}

TEST_CASE("Tjurina bounds") {
    JacobianSyzygies quintic = make("x0^5 + x1^4*x2");
    DpwBounds b = dpw_bounds(quintic, 12);
    CHECK(b.lower == 12);
    CHECK(b.upper == 13);
    CHECK(b.lower_attained);
    CHECK_FALSE(b.upper_attained);
    CHECK(b.asserted);

    JacobianSyzygies triangle = make("x0*x1*x2");
    DpwBounds t = dpw_bounds(triangle, 3);
    CHECK(t.lower == 2);
    CHECK(t.upper == 3);
    CHECK(t.upper_attained);

    JacobianSyzygies fermat = make("x0^3 + x1^3 + x2^3");
    DpwBounds s = dpw_bounds(fermat, 0);
    CHECK_FALSE(s.asserted);
    CHECK(s.lower == 0);  // r = d-1 makes the lower bound vanish
}

TEST_CASE("freeness of plane curves") {
    JacobianSyzygies triangle = make("x0*x1*x2");
    FreenessVerdict free_triangle = is_free_curve(triangle, 3);
    CHECK(free_triangle.free_curve);
    CHECK(free_triangle.upper == 3);

    JacobianSyzygies quintic = make("x0^5 + x1^4*x2");
    CHECK_FALSE(is_free_curve(quintic, 12).free_curve);

    JacobianSyzygies cusp = make("x1^2*x2 - x0^3");
    FreenessVerdict cusp_verdict = is_free_curve(cusp, global_tjurina(cusp).tau);
    CHECK(cusp_verdict.tau == 2);
    CHECK_FALSE(cusp_verdict.free_curve);

    JacobianSyzygies fermat = make("x0^3 + x1^3 + x2^3");
    CHECK_FALSE(is_free_curve(fermat, 0).free_curve);

    JacobianSyzygies surface = make("x0*x1*x2 + x3^3");
    CHECK_THROWS_AS(is_free_curve(surface, 6), Error);
}

TEST_CASE("stability hypothesis for surfaces") {
    JacobianSyzygies susp = make("x0*x1*x2 + x3^3");
    StabilityVerdict v = stability_hypothesis(susp, global_tjurina(susp).tau);
    CHECK(v.tau == 6);
    CHECK(v.threshold == 8);
    CHECK(v.holds);
    CHECK(v.d_prime == 0);
    CHECK(v.epsilon == 3);
    CHECK(v.c1 == -2);
    CHECK(v.vanishing_verified);

    // Decomposition arithmetic for d = 4 and d = 5.
    JacobianSyzygies quartic = make("x0^2*x2^2 - x1^2*x2^2 + x0^4 + x1^4 + x3^4");
    StabilityVerdict q = stability_hypothesis(quartic, global_tjurina(quartic).tau);
    CHECK(q.threshold == 18);
    CHECK(q.d_prime == 1);
    CHECK(q.epsilon == 1);
    CHECK(q.c1 == 0);
    CHECK(q.holds);

    JacobianSyzygies quintic_susp = make("x0^5 + x1^4*x2 + x3^5");
    StabilityVerdict s = stability_hypothesis(quintic_susp, global_tjurina(quintic_susp).tau);
    CHECK(s.threshold == 48);
    CHECK(s.tau == 48);
    CHECK_FALSE(s.holds);
    CHECK(s.c1 == -1);

    JacobianSyzygies curve = make("x0*x1*x2");
    CHECK_THROWS_AS(stability_hypothesis(curve, 3), Error);
}

TEST_CASE("Torelli hypothesis") {
    JacobianSyzygies sextic = make("x0^2*x2^4 - x1^2*x2^4 + x0^6 + x1^6");
    long long tau = global_tjurina(sextic).tau;
    CHECK(tau == 1);
    TorelliVerdict v = torelli_hypothesis(sextic, tau);
    CHECK(v.m == 2);
    CHECK(v.threshold == 3);
    CHECK(v.holds);
    CHECK(v.mdr_verified);
    CHECK(sextic.mdr().value == 5);

    JacobianSyzygies quintic = make("x0^5 + x1^4*x2");
    TorelliVerdict f = torelli_hypothesis(quintic, 12);
    CHECK_FALSE(f.holds);
    CHECK(f.threshold == 2);

    // Even-degree surface: threshold C(d'+1, 2) with d = 2d'.
    JacobianSyzygies surface = make("x0^6 + x1^5*x2 + x3^6");
    TorelliVerdict s = torelli_hypothesis(surface, 100);
    CHECK(s.threshold == 6);
    CHECK_FALSE(s.holds);

    JacobianSyzygies cubic = make("x1^2*x2 - x0^3");
    CHECK_THROWS_AS(torelli_hypothesis(cubic, 2), Error);
}

TEST_CASE("full report on the running example") {
    InvariantsReport r = full_report(parse_poly("x0^5 + x1^4*x2"));
    CHECK(r.d == 5);
    CHECK(r.n == 2);
    CHECK(r.mdr == 1);
    REQUIRE(r.mder.has_value());
    CHECK(*r.mder == 1);
    CHECK(r.tau == 12);
    CHECK(r.bounds.lower == 12);
    CHECK(r.bounds.upper == 13);
    CHECK(r.bounds.lower_attained);
    REQUIRE(r.freeness.has_value());
    CHECK_FALSE(r.freeness->free_curve);
    REQUIRE(r.t_smooth.has_value());
    CHECK(r.t_smooth->holds);
    REQUIRE(r.versality.min_nonversal_a.has_value());
    CHECK(*r.versality.min_nonversal_a == 1);
    CHECK(r.versality.criteria_agree);
    REQUIRE(r.mder_gap.has_value());
    CHECK(r.mder_gap->holds);
}

TEST_CASE("full report on the free triangle") {
    InvariantsReport r = full_report(parse_poly("x0*x1*x2"));
    CHECK(r.mdr == 1);
    CHECK(r.tau == 3);
    REQUIRE(r.freeness.has_value());
    CHECK(r.freeness->free_curve);
    CHECK(r.bounds.upper_attained);
}

TEST_CASE("full report on a smooth hypersurface") {
    InvariantsReport r = full_report(parse_poly("x0^3 + x1^3 + x2^3"));
    CHECK(r.tau == 0);
    CHECK_FALSE(r.mder.has_value());
    for (long long defect : r.defects) CHECK(defect == 0);
    CHECK_FALSE(r.t_smooth.has_value());
    CHECK_FALSE(r.bounds.asserted);
}

TEST_CASE("cones are rejected with the dedicated error") {
    try {
        full_report(parse_poly("x0^3 + x1^3", 3));
        FAIL("expected ConeInput");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ConeInput);
    }
}

TEST_CASE("corpus curated tau values agree everywhere") {
    for (const CorpusInstance& inst : corpus()) {
        CAPTURE(inst.name);
        InvariantsReport r = full_report(parse_poly(inst.expression));
        CHECK(r.tau == inst.expected_tau());
    }
}

TEST_CASE("small tau forces T-smoothness") {
    // tau <= d-1 implies the T-condition through the mder gap.
    for (const CorpusInstance& inst : corpus()) {
        long long tau = inst.expected_tau();
        if (tau == 0) continue;
        JacobianSyzygies calc(parse_poly(inst.expression));
        if (tau <= calc.degree() - 1) {
            CAPTURE(inst.name);
            CHECK(t_smoothness(calc, tau).holds);
        }
    }
}

TEST_CASE("tau routes cross-validate on random singular curves") {
    // Random curves forced singular at (0:0:1): every term vanishes there to
    // order two. global_tjurina runs the ER route, the next-degree check and
    // the Hilbert oracle and throws unless all three agree; random inputs
    // with non-isolated loci abort loudly and are skipped.
    std::mt19937 rng(48151623);
    std::uniform_int_distribution<int> coef(-4, 4);
    int agreements = 0;
    for (int trial = 0; trial < 25; ++trial) {
        int d = 3 + trial % 3;
        auto monos = monomials_of_degree(3, d);
        HomogeneousPoly f(3, d);
        for (const Monomial& m : monos) {
            if (m.exponent(0) + m.exponent(1) >= 2) {
                int c = coef(rng);
                if (c != 0) f.add_term(m, Rat(c));
            }
        }
        if (f.is_zero()) continue;
        try {
            JacobianSyzygies calc(f);
            TjurinaAgreement a = global_tjurina(calc);
            CHECK(a.tau >= 1);  // the forced singular point contributes
            ++agreements;
        } catch (const Error& e) {
            bool expected = e.code() == ErrorCode::ConeInput || e.code() == ErrorCode::NonIsolatedOrBug ||
                            e.code() == ErrorCode::NoStabilization;
            CHECK(expected);
        }
    }
    CHECK(agreements >= 10);
}

TEST_CASE("fast mode reproduces full reports on random singular curves") {
    std::mt19937 rng(271828);
    std::uniform_int_distribution<int> coef(-3, 3);
    ReportOptions fast;
    fast.lin.mode = FieldMode::FastConfirm;
    int compared = 0;
    for (int trial = 0; trial < 12 && compared < 6; ++trial) {
        int d = 3 + trial % 3;
        auto monos = monomials_of_degree(3, d);
        HomogeneousPoly f(3, d);
        for (const Monomial& m : monos) {
            if (m.exponent(0) + m.exponent(1) >= 2) {
                int c = coef(rng);
                if (c != 0) f.add_term(m, Rat(c));
            }
        }
        if (f.is_zero()) continue;
        InvariantsReport exact_report, fast_report;
        try {
            exact_report = full_report(f);
        } catch (const Error&) {
            continue;  // cone or non-isolated; both modes reject identically
        }
        fast_report = full_report(f, fast);
        CHECK(exact_report.tau == fast_report.tau);
        CHECK(exact_report.mdr == fast_report.mdr);
        CHECK(exact_report.mder == fast_report.mder);
        CHECK(exact_report.dims.table == fast_report.dims.table);
        CHECK(exact_report.defects == fast_report.defects);
        ++compared;
    }
    CHECK(compared >= 4);
}

TEST_CASE("the cusp-line quartic is free with mixed singularity types") {
    JacobianSyzygies calc(make("x1^2*x2^2 - x0^3*x2"));
    long long tau = global_tjurina(calc).tau;
    CHECK(tau == 7);  // cusp (2) plus the contact-three point (5)
    CHECK(calc.mdr().value == 1);
    DpwBounds b = dpw_bounds(calc, tau);
    CHECK(b.upper == 7);
    CHECK(b.upper_attained);
    CHECK(is_free_curve(calc, tau).free_curve);
}

TEST_CASE("the braid line arrangement is a free sextic") {
    const CorpusInstance* inst = corpus_find("braid-sextic");
    REQUIRE(inst != nullptr);
    HomogeneousPoly f = parse_poly(inst->expression);
    JacobianSyzygies calc(f);
    long long tau = global_tjurina(calc).tau;
    CHECK(tau == 19);  // four triple points and three nodes
    CHECK(tau == inst->expected_tau());
    CHECK(calc.mdr().value == 2);
    CHECK(is_free_curve(calc, tau).free_curve);
    for (const auto& coords : inst->singular_points) SingularPoint::certify(f, coords);
}

TEST_CASE("one-node octic sits on the mder boundary") {
    // mdr = d-1 is the one case where mder may exceed mdr; here mder reaches
    // the n(d-2) cap and the gap inequality mder > n(d-2) - tau is tight.
    InvariantsReport r = full_report(parse_poly("x0^8 - x1^8 + x0^2*x2^6 - x1^2*x2^6 + x0^3*x1^3*x2^2"));
    CHECK(r.tau == 1);
    CHECK(r.mdr == 7);
    REQUIRE(r.mder.has_value());
    CHECK(*r.mder == 12);
    REQUIRE(r.mder_gap.has_value());
    CHECK(r.mder_gap->holds);
    CHECK(r.mder_gap->rhs == 11);
    // A single point imposes independent conditions in every degree, so all
    // defects vanish and every a in range is versal.
    for (long long defect : r.defects) CHECK(defect == 0);
    CHECK_FALSE(r.versality.min_nonversal_a.has_value());
}

TEST_CASE("smooth hypersurfaces have no relation below degree d-1") {
    // ER = 0 everywhere forces AR = KR, whose generators live in degree d-1.
    for (const CorpusInstance& inst : corpus()) {
        if (inst.expected_tau() != 0) continue;
        CAPTURE(inst.name);
        JacobianSyzygies calc(parse_poly(inst.expression));
        CHECK(calc.mdr().value == calc.degree() - 1);
    }
    // Also on a non-Fermat smooth quartic.
    JacobianSyzygies klein(make("x0^3*x1 + x1^3*x2 + x2^3*x0"));
    CHECK(global_tjurina(klein).tau == 0);
    CHECK(klein.mdr().value == 3);
}
