#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tjurina/rational.hpp"

namespace tjurina {

// Built-in instance with curated ground truth: the singular points (exact
// coordinates) and the Brieskorn exponents of each local normal form, from
// which the expected tau is the sum of products of (a_i - 1).
struct CorpusInstance {
    std::string name;
    std::string expression;
    std::string description;
    std::vector<std::vector<Rat>> singular_points;
    bool all_nodes = false;  // every singularity is an ordinary node
    std::vector<std::vector<int>> local_exponents;
    std::optional<std::string> suspension_of;

    long long expected_tau() const;
};

const std::vector<CorpusInstance>& corpus();
const CorpusInstance* corpus_find(const std::string& name);

}  // namespace tjurina
