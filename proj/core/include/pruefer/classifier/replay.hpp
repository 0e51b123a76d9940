#pragma once

#include <string>
#include <vector>

#include "pruefer/classifier/report.hpp"

namespace pruefer {

struct ReplayOptions {
    /// Rings above this order only get witness checks; exhaustive re-derivations are skipped.
    std::size_t exhaustive_limit = 256;
};

struct ReplayResult {
    std::vector<std::string> failures;
    std::size_t checked = 0;
    std::size_t skipped = 0;

    bool ok() const noexcept { return failures.empty(); }
};

/// Re-verifies one certificate against the ring with deliberately naive code:
/// ideals are closed element by element and localizations are recomputed from
/// their kernels, sharing nothing with the deciders beyond ring arithmetic.
ReplayResult replay_certificate(const RingPtr& ring, Condition condition, const ConditionResult& result,
                                ReplayOptions options = {});

/// Every certificate of a report, plus cross-checks between related conditions.
ReplayResult replay_report(const RingPtr& ring, const ClassificationReport& report, ReplayOptions options = {});

}  // namespace pruefer
