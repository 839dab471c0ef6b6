#include "tjurina/corpus.hpp"

#include "tjurina/oracle.hpp"

namespace tjurina {

namespace {

std::vector<Rat> pt(std::initializer_list<long> coords) {
    std::vector<Rat> out;
    out.reserve(coords.size());
    for (long c : coords) out.emplace_back(c);
    return out;
}

std::vector<CorpusInstance> build() {
    std::vector<CorpusInstance> all;

    for (int d : {5, 6, 7, 10}) {
        CorpusInstance inst;
        inst.name = "exB-d" + std::to_string(d);
        inst.expression = "x0^" + std::to_string(d) + " + x1^" + std::to_string(d - 1) + "*x2";
        inst.description = "plane curve with one non-simple singular point at (0:0:1)";
        inst.singular_points = {pt({0, 0, 1})};
        inst.local_exponents = {{d, d - 1}};
        all.push_back(std::move(inst));
    }

    for (int d : {3, 4, 5}) {
        for (int nv : {3, 4}) {
            CorpusInstance inst;
            inst.name = "fermat-d" + std::to_string(d) + (nv == 4 ? "-n3" : "");
            std::string expr;
            for (int j = 0; j < nv; ++j) {
                if (j) expr += " + ";
                expr += "x" + std::to_string(j) + "^" + std::to_string(d);
            }
            inst.expression = expr;
            inst.description = "smooth Fermat hypersurface (tau = 0)";
            if (nv == 4) inst.suspension_of = "fermat-d" + std::to_string(d);
            all.push_back(std::move(inst));
        }
    }

    {
        CorpusInstance inst;
        inst.name = "triangle";
        inst.expression = "x0*x1*x2";
        inst.description = "three lines, nodes at the coordinate points; free curve";
        inst.singular_points = {pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})};
        inst.all_nodes = true;
        inst.local_exponents = {{2, 2}, {2, 2}, {2, 2}};
        all.push_back(std::move(inst));
    }
    {
        CorpusInstance inst;
        inst.name = "triangle-susp3";
        inst.expression = "x0*x1*x2 + x3^3";
        inst.description = "suspension of the triangle into P^3";
        inst.singular_points = {pt({1, 0, 0, 0}), pt({0, 1, 0, 0}), pt({0, 0, 1, 0})};
        inst.local_exponents = {{2, 2, 3}, {2, 2, 3}, {2, 2, 3}};
        inst.suspension_of = "triangle";
        all.push_back(std::move(inst));
    }
    {
        CorpusInstance inst;
        inst.name = "nodal-cubic";
        inst.expression = "x1^2*x2 - x0^3 - x0^2*x2";
        inst.description = "cubic with one node at (0:0:1)";
        inst.singular_points = {pt({0, 0, 1})};
        inst.all_nodes = true;
        inst.local_exponents = {{2, 2}};
        all.push_back(std::move(inst));
    }
    {
        CorpusInstance inst;
        inst.name = "cuspidal-cubic";
        inst.expression = "x1^2*x2 - x0^3";
        inst.description = "cubic with one cusp at (0:0:1)";
        inst.singular_points = {pt({0, 0, 1})};
        inst.local_exponents = {{3, 2}};
        all.push_back(std::move(inst));
    }
    {
        CorpusInstance inst;
        inst.name = "collinear-quartic";
        inst.expression = "x0^2*x1*x2 - x0*x1^2*x2 + x2^4";
        inst.description = "line times smooth cubic: three collinear nodes on x2 = 0";
        inst.singular_points = {pt({1, 0, 0}), pt({0, 1, 0}), pt({1, 1, 0})};
        inst.all_nodes = true;
        inst.local_exponents = {{2, 2}, {2, 2}, {2, 2}};
        all.push_back(std::move(inst));
    }
    {
        CorpusInstance inst;
        inst.name = "braid-sextic";
        inst.expression =
            "x0^3*x1^2*x2 - x0^3*x1*x2^2 - x0^2*x1^3*x2 + x0*x1^3*x2^2 + x0^2*x1*x2^3 - x0*x1^2*x2^3";
        inst.description = "six lines with four triple points and three nodes; free sextic";
        inst.singular_points = {pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}), pt({1, 1, 1}),
                                pt({0, 1, 1}), pt({1, 0, 1}), pt({1, 1, 0})};
        // ordinary triple points are equivalent to u^3 + v^3
        inst.local_exponents = {{3, 3}, {3, 3}, {3, 3}, {3, 3}, {2, 2}, {2, 2}, {2, 2}};
        all.push_back(std::move(inst));
    }
    {
        CorpusInstance inst;
        inst.name = "cusp-line-quartic";
        inst.expression = "x1^2*x2^2 - x0^3*x2";
        inst.description = "line times cuspidal cubic: a cusp at (0:0:1) and a contact-three point at (0:1:0); free";
        inst.singular_points = {pt({0, 0, 1}), pt({0, 1, 0})};
        // local normal forms u^3 + v^2 and u^2 + v^6
        inst.local_exponents = {{3, 2}, {2, 6}};
        all.push_back(std::move(inst));
    }
    {
        CorpusInstance inst;
        inst.name = "quartic-node";
        inst.expression = "x0^2*x2^2 - x1^2*x2^2 + x0^4 + x1^4";
        inst.description = "quartic with one node at (0:0:1)";
        inst.singular_points = {pt({0, 0, 1})};
        inst.all_nodes = true;
        inst.local_exponents = {{2, 2}};
        all.push_back(std::move(inst));
    }
    {
        CorpusInstance inst;
        inst.name = "quartic-node-susp3";
        inst.expression = "x0^2*x2^2 - x1^2*x2^2 + x0^4 + x1^4 + x3^4";
        inst.description = "d=4 surface in P^3 with a single small singularity";
        inst.singular_points = {pt({0, 0, 1, 0})};
        inst.local_exponents = {{2, 2, 4}};
        inst.suspension_of = "quartic-node";
        all.push_back(std::move(inst));
    }
    {
        CorpusInstance inst;
        inst.name = "sextic-node";
        inst.expression = "x0^2*x2^4 - x1^2*x2^4 + x0^6 + x1^6";
        inst.description = "sextic with one node at (0:0:1)";
        inst.singular_points = {pt({0, 0, 1})};
        inst.all_nodes = true;
        inst.local_exponents = {{2, 2}};
        all.push_back(std::move(inst));
    }
    {
        CorpusInstance inst;
        inst.name = "exB-d5-susp3";
        inst.expression = "x0^5 + x1^4*x2 + x3^5";
        inst.description = "suspension of exB-d5 into P^3";
        inst.singular_points = {pt({0, 0, 1, 0})};
        inst.local_exponents = {{5, 4, 5}};
        inst.suspension_of = "exB-d5";
        all.push_back(std::move(inst));
    }
    {
        CorpusInstance inst;
        inst.name = "surface-d6";
        inst.expression = "x0^6 + x1^5*x2 + x3^6";
        inst.description = "d=6 surface in P^3, one singular point at (0:0:1:0)";
        inst.singular_points = {pt({0, 0, 1, 0})};
        inst.local_exponents = {{6, 5, 6}};
        all.push_back(std::move(inst));
    }

    return all;
}

}  // namespace

long long CorpusInstance::expected_tau() const {
    long long tau = 0;
    for (const auto& exps : local_exponents) tau += brieskorn_tau(exps);
    return tau;
}

const std::vector<CorpusInstance>& corpus() {
    static const std::vector<CorpusInstance> instances = build();
    return instances;
}

const CorpusInstance* corpus_find(const std::string& name) {
    for (const CorpusInstance& inst : corpus()) {
        if (inst.name == name) return &inst;
    }
    return nullptr;
}

}  // namespace tjurina
