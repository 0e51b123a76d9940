#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pruefer/classifier/report.hpp"

namespace pruefer {

struct HarnessAssertion {
    std::string name;
    bool passed = true;
    /// Not evaluated because a verdict it needs is only bounded.
    bool skipped = false;
    std::string detail;
};

struct HarnessResult {
    std::string instance;
    std::string spec;  ///< spec text of the input ring, for reproducing failures
    std::vector<HarnessAssertion> assertions;

    bool passed() const;
};

nlohmann::json to_json(const HarnessResult& result);

/// Builds R = A ∝ (A/M)ⁿ for a local ring (A, M) and checks:
///   R is a total ring of quotients and Prüfer;
///   R Gaussian ⇔ A Gaussian (only when both verdicts are exact);
///   R arithmetical ⇔ A is a field and n = 1;
///   R has infinite weak dimension.
/// Throws ArgumentError when A is not local or n = 0.
HarnessResult check_residue_extension(const RingPtr& base, std::size_t n, const ClassifierConfig& config = {});

/// For R = A ∝ E, forms R/(0 ∝ E), checks it is isomorphic to A, and checks that
/// an exact Gaussian (resp. arithmetical) verdict for R holds for the quotient too.
/// Throws ArgumentError when R was not built as a trivial extension.
HarnessResult check_factor_descent(const RingPtr& extension, const ClassifierConfig& config = {});

}  // namespace pruefer
