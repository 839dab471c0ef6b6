#include "tjurina/report.hpp"

#include <json.hpp>

#include <set>
#include <sstream>

#include "tjurina/errors.hpp"
#include "tjurina/parse.hpp"

namespace tjurina {

namespace {

using json = nlohmann::ordered_json;

std::set<std::string> check_set(const std::string& checks) {
    std::set<std::string> out;
    size_t start = 0;
    while (start <= checks.size()) {
        size_t comma = checks.find(',', start);
        std::string piece = checks.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!piece.empty()) out.insert(piece);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty()) out.insert("all");
    return out;
}

bool wants(const std::set<std::string>& checks, const std::string& name) {
    return checks.count("all") > 0 || checks.count(name) > 0;
}

// Reports describe the input and its invariants only; the field mode is not
// echoed, so exact and fast-with-confirm runs emit identical bytes.
json json_input(const InvariantsReport& r, const RenderOptions& opt) {
    json in;
    if (!opt.instance_name.empty()) in["name"] = opt.instance_name;
    in["polynomial"] = r.polynomial;
    in["n_vars"] = r.n + 1;
    in["n"] = r.n;
    in["d"] = r.d;
    return in;
}

json json_bounds(const DpwBounds& b) {
    json out;
    out["r"] = b.r;
    out["lower"] = b.lower;
    out["upper"] = b.upper;
    out["tau"] = b.tau;
    out["lower_attained"] = b.lower_attained;
    out["upper_attained"] = b.upper_attained;
    out["asserted"] = b.asserted;
    return out;
}

json json_freeness(const FreenessVerdict& v) {
    json out;
    out["holds"] = v.free_curve;
    out["tau"] = v.tau;
    out["upper"] = v.upper;
    out["r"] = v.r;
    out["reducedness"] = "caller claim";
    return out;
}

json json_stability(const StabilityVerdict& v) {
    json out;
    out["holds"] = v.holds;
    out["d_prime"] = v.d_prime;
    out["epsilon"] = v.epsilon;
    out["c1"] = v.c1;
    out["threshold"] = v.threshold;
    out["tau"] = v.tau;
    out["ar_vanishing_verified"] = v.vanishing_verified;
    return out;
}

json json_torelli(const TorelliVerdict& v) {
    json out;
    out["holds"] = v.holds;
    out["m"] = v.m;
    out["threshold"] = v.threshold;
    out["tau"] = v.tau;
    out["mdr_gap_verified"] = v.mdr_verified;
    out["threshold_strictly_below_power"] = v.binomial_strict;
    out["conclusion"] = v.conclusion;
    return out;
}

json json_tsmooth(const TSmoothnessVerdict& v) {
    json out;
    out["holds"] = v.holds;
    out["threshold"] = v.threshold;
    out["mder"] = v.mder;
    if (!v.plane_curve_form.empty()) out["plane_curve_form"] = v.plane_curve_form;
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string render_report(const InvariantsReport& r, const RenderOptions& opt) {
    const auto checks = check_set(opt.checks);
    if (opt.format == OutputFormat::Structured) {
        json doc;
        doc["input"] = json_input(r, opt);

        json inv;
        inv["mdr"] = r.mdr;
        if (r.mder) {
            inv["mder"] = *r.mder;
        } else {
            inv["mder"] = nullptr;
        }
        inv["tau"] = r.tau;
        inv["cone"] = r.cone;
        doc["invariants"] = inv;

        json tables;
        json dims = json::array();
        for (int k = 0; k <= r.dims.cap; ++k) {
            json row;
            row["k"] = k;
            row["ar"] = r.dims.ar(k);
            row["kr"] = r.dims.kr(k);
            row["er"] = r.dims.er(k);
            dims.push_back(row);
        }
        tables["graded_dims"] = dims;
        json defects = json::array();
        for (size_t m = 0; m < r.defects.size(); ++m) {
            json row;
            row["m"] = m;
            row["defect"] = r.defects[m];
            defects.push_back(row);
        }
        tables["defects"] = defects;
        doc["tables"] = tables;

        doc["bounds"] = json_bounds(r.bounds);

        json verdicts;
        if (wants(checks, "tjurina")) {
            json agreement;
            agreement["er_at_top"] = r.agreement.er_at_top;
            agreement["er_past_top"] = r.agreement.er_past_top;
            agreement["hilbert"] = r.agreement.hilbert;
            agreement["holds"] = true;
            verdicts["tjurina_agreement"] = agreement;
        }
        if (wants(checks, "versality")) {
            json versality;
            if (r.versality.min_nonversal_a) {
                versality["min_nonversal_a"] = *r.versality.min_nonversal_a;
            } else {
                versality["min_nonversal_a"] = nullptr;
            }
            versality["criteria_agree"] = r.versality.criteria_agree;
            verdicts["versality"] = versality;
        }
        if (wants(checks, "mder_gap")) {
            if (r.mder_gap) {
                json gap;
                gap["holds"] = r.mder_gap->holds;
                gap["mder"] = r.mder_gap->mder;
                gap["rhs"] = r.mder_gap->rhs;
                verdicts["mder_tau_gap"] = gap;
            } else {
                verdicts["mder_tau_gap"] = nullptr;
            }
        }
        if (wants(checks, "t_smoothness")) {
            verdicts["t_smoothness"] = r.t_smooth ? json_tsmooth(*r.t_smooth) : json(nullptr);
        }
        if (wants(checks, "freeness")) {
            verdicts["freeness"] = r.freeness ? json_freeness(*r.freeness) : json(nullptr);
        }
        if (wants(checks, "stability")) {
            verdicts["stability"] = r.stability ? json_stability(*r.stability) : json(nullptr);
        }
        if (wants(checks, "torelli")) {
            verdicts["torelli"] = r.torelli ? json_torelli(*r.torelli) : json(nullptr);
        }
        doc["verdicts"] = verdicts;

        json timings = json::object();
        if (opt.include_timings) {
            for (const auto& [stage, ms] : r.timings_ms) timings[stage] = ms;
        }
        doc["timings"] = timings;
        return dump(doc);
    }

    std::ostringstream out;
    if (!opt.instance_name.empty()) out << "instance: " << opt.instance_name << "\n";
    out << "input: " << r.polynomial << "\n";
    out << "d = " << r.d << "   n = " << r.n << "\n";
    out << "mdr = " << r.mdr << "   mder = ";
    if (r.mder) {
        out << *r.mder;
    } else {
        out << "NONE (certified smooth)";
    }
    out << "   tau = " << r.tau << "\n";
    const int top = r.n * (r.d - 2);
    out << "tau agreement: er(" << top << ") = " << r.agreement.er_at_top << ", er(" << top + 1
        << ") = " << r.agreement.er_past_top << ", hilbert = " << r.agreement.hilbert << "\n";
    out << "graded dims  k : ar kr er\n";
    for (int k = 0; k <= r.dims.cap; ++k) {
        out << "  " << k << " : " << r.dims.ar(k) << " " << r.dims.kr(k) << " " << r.dims.er(k) << "\n";
    }
    if (!r.defects.empty()) {
        out << "defects  m : defect_m\n";
        for (size_t m = 0; m < r.defects.size(); ++m) out << "  " << m << " : " << r.defects[m] << "\n";
    }
    out << "bounds: " << r.bounds.lower << " <= tau = " << r.bounds.tau << " <= " << r.bounds.upper
        << "  (r = " << r.bounds.r;
    if (r.bounds.lower_attained) out << ", lower attained";
    if (r.bounds.upper_attained) out << ", upper attained";
    out << (r.bounds.asserted ? ")" : "; tau = 0, bound not asserted)") << "\n";
    if (wants(checks, "versality")) {
        out << "versality: ";
        if (r.versality.min_nonversal_a) {
            out << "a-versal iff a < " << *r.versality.min_nonversal_a;
        } else {
            out << "a-versal for every a in range";
        }
        out << (r.versality.criteria_agree ? "  [defect criterion agrees]" : "  [criteria disagree]") << "\n";
    }
    if (wants(checks, "mder_gap") && r.mder_gap) {
        out << "mder gap: mder = " << r.mder_gap->mder << " > n(d-2) - tau = " << r.mder_gap->rhs << "  ["
            << (r.mder_gap->holds ? "holds" : "FAILS") << "]\n";
    }
    if (wants(checks, "t_smoothness") && r.t_smooth) {
        out << "T-smoothness: n(d-2)-d-1 = " << r.t_smooth->threshold << " < mder = " << r.t_smooth->mder
            << "  [" << (r.t_smooth->holds ? "holds" : "fails") << "]";
        if (!r.t_smooth->plane_curve_form.empty()) out << "  (" << r.t_smooth->plane_curve_form << ")";
        out << "\n";
    }
    if (wants(checks, "freeness") && r.freeness) {
        out << "freeness: tau = " << r.freeness->tau << (r.freeness->free_curve ? " = " : " != ")
            << r.freeness->upper << " = (d-1)^2 - r(d-r-1)  [" << (r.freeness->free_curve ? "free" : "not free")
            << "]\n";
    }
    if (wants(checks, "stability") && r.stability) {
        out << "stability: tau = " << r.stability->tau << (r.stability->holds ? " < " : " >= ")
            << r.stability->threshold << " = (d-d'-1)(d-1)^2, d' = " << r.stability->d_prime
            << ", c1 = " << r.stability->c1 << "  [" << (r.stability->holds ? "holds" : "fails") << "]";
        if (r.stability->vanishing_verified) out << "  [AR_{d'} = 0 verified]";
        out << "\n";
    }
    if (wants(checks, "torelli") && r.torelli) {
        out << "torelli: tau = " << r.torelli->tau << (r.torelli->holds ? " < " : " >= ")
            << r.torelli->threshold << " = C(m+n-1, n-1), m = " << r.torelli->m << "  ["
            << (r.torelli->holds ? "holds" : "fails") << "]";
        if (r.torelli->holds) out << "  -> " << r.torelli->conclusion;
        if (r.torelli->mdr_verified) out << "  [mdr > d-2 verified]";
        out << "\n";
    }
    if (opt.include_timings) {
        out << "timings (ms):";
        for (const auto& [stage, ms] : r.timings_ms) out << " " << stage << "=" << ms;
        out << "\n";
    }
    return out.str();
}

std::string render_witness(const WitnessVerdict& v, int a, const RenderOptions& opt) {
    if (opt.format == OutputFormat::Structured) {
        json doc;
        doc["a"] = a;
        json rho = json::array();
        for (const HomogeneousPoly& comp : v.representative.components) rho.push_back(comp.str());
        doc["representative"] = rho;
        json eval = json::array();
        for (const Rat& value : v.evaluation) eval.push_back(rat_to_string(value));
        doc["evaluation"] = eval;
        doc["topologically_versal"] = v.topologically_versal;
        doc["coset_checked"] = v.coset_checked;
        doc["non_simple_point"] = "caller claim";
        return dump(doc);
    }
    std::ostringstream out;
    out << "representative rho = (";
    for (size_t i = 0; i < v.representative.components.size(); ++i) {
        if (i) out << ", ";
        out << v.representative.components[i].str();
    }
    out << ")\n";
    out << "evaluation at the point: (";
    for (size_t i = 0; i < v.evaluation.size(); ++i) {
        if (i) out << ", ";
        out << rat_to_string(v.evaluation[i]);
    }
    out << ")\n";
    out << "verdict: " << (v.topologically_versal ? "topologically " + std::to_string(a) + "-versal"
                                                  : "witness vanishes (no conclusion)")
        << "\n";
    out << "note: the point being non-simple is a caller claim, not machine-checked\n";
    return out.str();
}

std::string render_versality(const VersalityVerdict& v, const RenderOptions& opt) {
    if (opt.format == OutputFormat::Structured) {
        json doc;
        doc["a"] = v.a;
        doc["a_versal"] = v.a_versal;
        doc["eval_degree"] = v.eval_degree;
        doc["defect"] = v.defect;
        doc["defect_criterion"] = v.defect_criterion;
        return dump(doc);
    }
    std::ostringstream out;
    out << "a = " << v.a << ": " << (v.a_versal ? "versal" : "non-versal")
        << "  (defect_" << v.eval_degree << " = " << v.defect << ", criteria agree)\n";
    return out.str();
}

std::string render_bounds(const DpwBounds& b, const RenderOptions& opt) {
    if (opt.format == OutputFormat::Structured) return dump(json_bounds(b));
    std::ostringstream out;
    out << b.lower << " <= tau = " << b.tau << " <= " << b.upper << "  (r = " << b.r;
    if (b.lower_attained) out << ", lower attained";
    if (b.upper_attained) out << ", upper attained";
    out << (b.asserted ? ")" : "; tau = 0, bound not asserted)") << "\n";
    return out.str();
}

std::string render_freeness(const FreenessVerdict& v, const RenderOptions& opt) {
    if (opt.format == OutputFormat::Structured) return dump(json_freeness(v));
    std::ostringstream out;
    out << "tau = " << v.tau << (v.free_curve ? " = " : " != ") << v.upper
        << " = (d-1)^2 - r(d-r-1)  [" << (v.free_curve ? "free" : "not free") << "]\n";
    return out.str();
}

std::string render_stability(const StabilityVerdict& v, const RenderOptions& opt) {
    if (opt.format == OutputFormat::Structured) return dump(json_stability(v));
    std::ostringstream out;
    out << "tau = " << v.tau << (v.holds ? " < " : " >= ") << v.threshold
        << " = (d-d'-1)(d-1)^2  (d' = " << v.d_prime << ", epsilon = " << v.epsilon << ", c1 = " << v.c1
        << ")  [" << (v.holds ? "holds" : "fails") << "]";
    if (v.vanishing_verified) out << "  [AR_{d'} = 0 verified]";
    out << "\n";
    return out.str();
}

std::string render_torelli(const TorelliVerdict& v, const RenderOptions& opt) {
    if (opt.format == OutputFormat::Structured) return dump(json_torelli(v));
    std::ostringstream out;
    out << "tau = " << v.tau << (v.holds ? " < " : " >= ") << v.threshold << " = C(m+n-1, n-1)  (m = "
        << v.m << ")  [" << (v.holds ? "holds" : "fails") << "]";
    if (v.holds) out << "  -> " << v.conclusion;
    out << "\n";
    return out.str();
}

std::string render_dims(const GradedDims& dims, const RenderOptions& opt) {
    if (opt.format == OutputFormat::Structured) {
        json doc = json::array();
        for (int k = 0; k <= dims.cap; ++k) {
            json row;
            row["k"] = k;
            row["ar"] = dims.ar(k);
            row["kr"] = dims.kr(k);
            row["er"] = dims.er(k);
            doc.push_back(row);
        }
        return dump(doc);
    }
    std::ostringstream out;
    out << "k : ar kr er\n";
    for (int k = 0; k <= dims.cap; ++k) {
        out << k << " : " << dims.ar(k) << " " << dims.kr(k) << " " << dims.er(k) << "\n";
    }
    return out.str();
}

}  // namespace tjurina
