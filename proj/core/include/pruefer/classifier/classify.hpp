#pragma once

#include <memory>

#include "pruefer/classifier/report.hpp"
#include "pruefer/ideal_lattice/localization.hpp"

namespace pruefer {

/// Deciders, each evaluated on a shared RingAnalysis. Those that depend on an
/// earlier verdict take it as an argument, which fixes the evaluation order.
ConditionResult decide_reduced(const RingAnalysis& analysis);
ConditionResult decide_von_neumann_regular(const RingAnalysis& analysis);
ConditionResult decide_weak_dimension(const RingAnalysis& analysis, const ConditionResult& vn_regular);
ConditionResult decide_semihereditary(const RingAnalysis& analysis, const ConditionResult& vn_regular);
ConditionResult decide_arithmetical(const RingAnalysis& analysis);
/// Rules in order: arithmetical; split into local factors; local with N² = 0;
/// A ∝ E with A local, ME = 0, E ≠ 0 and A Gaussian; then a bounded search for
/// f, g with c(fg) ≠ c(f)c(g).
ConditionResult decide_gaussian(const RingAnalysis& analysis, const ConditionResult& arithmetical,
                                const ClassifierConfig& config);
ConditionResult decide_pruefer(const RingAnalysis& analysis);
ConditionResult decide_total_quotient_ring(const RingAnalysis& analysis);
ConditionResult decide_pseudo_arithmetical(const RingAnalysis& analysis, const ConditionResult& arithmetical,
                                           const ConditionResult& gaussian, const ClassifierConfig& config);
ConditionResult decide_zero_locally_irreducible(const RingAnalysis& analysis);

/// All conditions, with the implication chain checked before returning.
ClassificationReport classify(const RingPtr& ring, const ClassifierConfig& config = {});
ClassificationReport classify(const RingAnalysis& analysis, const ClassifierConfig& config = {});

/// semihereditary ⇒ weak dimension 0 ⇒ arithmetical ⇒ Gaussian ⇒ Prüfer, and
/// arithmetical ⇒ pseudo-arithmetical, on exact verdicts. Throws ConsistencyError.
void check_implication_chain(const ClassificationReport& report);

bool is_reduced(const RingPtr& ring);
bool is_vn_regular(const RingPtr& ring);
WeakDimension weak_dim_class(const RingPtr& ring);
bool is_semihereditary(const RingPtr& ring);
bool is_arithmetical(const RingPtr& ring);
bool is_pruefer_ring(const RingPtr& ring);
bool is_total_quotient_ring(const RingPtr& ring);
ConditionResult is_gaussian_ring(const RingPtr& ring, const ClassifierConfig& config = {});
ConditionResult is_pseudo_arithmetical(const RingPtr& ring, const ClassifierConfig& config = {});

/// JSON forms used in witnesses and certificates.
nlohmann::json ideal_json(const Ideal& ideal);
nlohmann::json poly_json(const RingPoly& poly);
nlohmann::json element_json(const FiniteRing& ring, Elem e);

}  // namespace pruefer
