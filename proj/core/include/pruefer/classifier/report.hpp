#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "pruefer/ideal_lattice/lattice.hpp"
#include "pruefer/poly_content/gaussian.hpp"

namespace pruefer {

/// Three-valued answer. `bounded_yes` means a search up to a stated bound found
/// no counterexample; it is never treated as a proof.
enum class Verdict { yes, no, bounded_yes };

const char* to_string(Verdict verdict) noexcept;

enum class CertificateKind { structural, witness, bounded };

const char* to_string(CertificateKind kind) noexcept;

/// Why a verdict holds. `payload` is self-contained (element literals, ideal
/// generators, nested certificates) so a checker can re-verify it from the ring alone.
struct Certificate {
    CertificateKind kind = CertificateKind::structural;
    std::string rule;
    nlohmann::json payload = nlohmann::json::object();
};

nlohmann::json to_json(const Certificate& certificate);
Certificate certificate_from_json(const nlohmann::json& json);

struct ConditionResult {
    Verdict verdict = Verdict::no;
    Certificate certificate;
    std::optional<nlohmann::json> witness;
    std::optional<unsigned> bound;
    double millis = 0;

    bool holds() const noexcept { return verdict == Verdict::yes; }
    bool exact() const noexcept { return verdict != Verdict::bounded_yes; }
};

enum class Condition {
    semihereditary,
    weak_dimension_zero,
    arithmetical,
    gaussian,
    pruefer,
    total_quotient_ring,
    pseudo_arithmetical,
    zero_locally_irreducible,
    reduced,
    von_neumann_regular,
};

inline constexpr std::size_t kConditionCount = 10;
inline constexpr std::array<Condition, kConditionCount> kConditions = {
    Condition::semihereditary,      Condition::weak_dimension_zero,      Condition::arithmetical,
    Condition::gaussian,            Condition::pruefer,                  Condition::total_quotient_ring,
    Condition::pseudo_arithmetical, Condition::zero_locally_irreducible, Condition::reduced,
    Condition::von_neumann_regular,
};

/// JSON key, e.g. "weak_dimension" or "total_quotient_ring".
const char* key(Condition condition) noexcept;
std::optional<Condition> condition_from_key(std::string_view key) noexcept;

enum class WeakDimension { zero, infinite };

struct ClassifierConfig {
    SearchLimits limits;
    LatticeOptions lattice;
    /// Run polynomial witness searches after structural certificates too.
    bool audit = false;
};

struct ClassificationReport {
    std::string ring_name;
    std::string spec;  ///< spec text rebuilding the ring; empty when it has no spec
    std::size_t order = 0;
    std::array<ConditionResult, kConditionCount> results;

    const ConditionResult& operator[](Condition c) const { return results[static_cast<std::size_t>(c)]; }
    ConditionResult& operator[](Condition c) { return results[static_cast<std::size_t>(c)]; }

    WeakDimension weak_dimension() const {
        return (*this)[Condition::weak_dimension_zero].holds() ? WeakDimension::zero : WeakDimension::infinite;
    }
};

struct ReportOptions {
    bool timings = false;
};

/// One key per condition plus a "ring" header. Weak dimension is written as "0" or "infinite".
nlohmann::json to_json(const ClassificationReport& report, ReportOptions options = {});
ClassificationReport report_from_json(const nlohmann::json& json);
std::string render_markdown(const ClassificationReport& report, ReportOptions options = {});

/// Verdict text as it appears in reports.
std::string verdict_text(Condition condition, const ConditionResult& result);

}  // namespace pruefer
