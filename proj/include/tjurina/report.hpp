#pragma once

#include <string>

#include "tjurina/invariants.hpp"

namespace tjurina {

enum class OutputFormat { Table, Structured };

struct RenderOptions {
    OutputFormat format = OutputFormat::Table;
    bool include_timings = false;  // timings break byte-identical output, off by default
    std::string checks = "all";    // comma list filtering the verdicts section
    std::string instance_name;     // set for corpus instances
};

// Full report rendering. The structured format is a JSON document with a
// frozen key order: input, invariants, tables, bounds, verdicts, timings.
std::string render_report(const InvariantsReport& report, const RenderOptions& opt);

std::string render_witness(const WitnessVerdict& verdict, int a, const RenderOptions& opt);
std::string render_versality(const VersalityVerdict& verdict, const RenderOptions& opt);
std::string render_bounds(const DpwBounds& bounds, const RenderOptions& opt);
std::string render_freeness(const FreenessVerdict& verdict, const RenderOptions& opt);
std::string render_stability(const StabilityVerdict& verdict, const RenderOptions& opt);
std::string render_torelli(const TorelliVerdict& verdict, const RenderOptions& opt);
std::string render_dims(const GradedDims& dims, const RenderOptions& opt);

}  // namespace tjurina
