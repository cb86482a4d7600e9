#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "copra/embedding.hpp"

namespace copra {

struct SuiteOptions {
    std::uint64_t seed = 0;
    int scale = 1;  // multiplies the sample counts
    SearchLimits limits{};
};

struct SuiteResult {
    std::string name;
    int passed = 0;
    int failed = 0;
    std::vector<std::string> failures;  // first few diagnostics

    bool ok() const { return failed == 0; }
};

const std::vector<std::string>& verification_suite_names();

/// Runs one named property suite.  Throws input_error for unknown names.
SuiteResult run_verification_suite(const std::string& name, const SuiteOptions& options = {});

/// Reference enumeration of Emb(pattern, host): every injection is checked
/// against the definition, with no pruning.  Kept independent of the search
/// engine so the two can be played against each other.
std::vector<Embedding> naive_embeddings(const FiniteBinaryStructure& pattern,
                                        const FiniteBinaryStructure& host);

} // namespace copra
