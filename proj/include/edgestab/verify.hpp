#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace edgestab {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyOptions {
    /// Directory with graphs<n>.g6 files. Orders whose file is missing are
    /// enumerated in memory instead.
    std::string census_dir;
    /// Base seed of the random samples.
    std::uint64_t seed = 20240611;
};

/// Criterion ids of a named suite: petersen, class2, general, bipartite,
/// pruning, counterexample, coloring or all. Throws std::invalid_argument
/// for an unknown name.
std::vector<int> suite_criteria(const std::string& suite);
std::vector<std::string> suite_names();

CriterionResult run_criterion(int id, const VerifyOptions& options);

/// Runs the suite in id order, reporting each result as it completes.
std::vector<CriterionResult> run_suite(const std::string& suite, const VerifyOptions& options,
    const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  4 bipartite formula ... (1.2 s)" style line.
std::string format_result(const CriterionResult& result);

} // namespace edgestab
