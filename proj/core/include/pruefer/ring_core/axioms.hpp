#pragma once

#include <optional>
#include <string>

#include "pruefer/ring_core/finite_module.hpp"
#include "pruefer/ring_core/finite_ring.hpp"
#include "pruefer/ring_core/ring_hom.hpp"

namespace pruefer {

/// Exhaustive check of the commutative-ring axioms over all element triples.
/// Returns a description of the first failure. O(n³).
std::optional<std::string> find_ring_axiom_violation(const FiniteRing& ring);

/// Abelian group axioms plus unital, distributive and associative action. O(|A|²|E|).
std::optional<std::string> find_module_axiom_violation(const FiniteModule& module);

/// Some ring isomorphism R → S, found by assigning images to a ring generating set.
std::optional<RingHom> find_isomorphism(const RingPtr& source, const RingPtr& target);

}  // namespace pruefer
