#pragma once

#include <optional>
#include <vector>

#include "pruefer/ring_core/finite_ring.hpp"

namespace pruefer {

class Ideal;

enum class ElementKind { unit, zerodivisor };

const char* to_string(ElementKind kind) noexcept;

/// Unit iff ∃x: ax = 1; zerodivisor iff ∃x ≠ 0: ax = 0. Throws ConsistencyError
/// when neither (or both) hold, which cannot happen in a finite commutative ring.
ElementKind element_kind(const FiniteRing& ring, Elem a);

/// Not a zerodivisor. Zero counts as a zerodivisor.
bool is_regular_element(const FiniteRing& ring, Elem a);

/// Element kinds for a whole ring, with inverses for units and an annihilating
/// witness for zerodivisors.
struct ElementTable {
    std::vector<ElementKind> kind;
    std::vector<Elem> partner;  ///< inverse for units, nonzero annihilator otherwise
    ElementSet units;

    bool is_unit(Elem a) const { return kind[a] == ElementKind::unit; }
    std::size_t unit_count() const { return units.count(); }
};

ElementTable classify_elements(const FiniteRing& ring);

/// The unique maximal ideal when R is local: the non-units, provided they are
/// closed under addition.
std::optional<Ideal> is_local(const RingPtr& ring);
std::optional<Ideal> is_local(const RingPtr& ring, const ElementTable& elements);

bool is_field(const FiniteRing& ring, const ElementTable& elements);

}  // namespace pruefer
