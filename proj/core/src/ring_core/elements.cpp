#include "pruefer/ring_core/elements.hpp"

#include "pruefer/errors.hpp"
#include "pruefer/ideal_lattice/ideal.hpp"

namespace pruefer {

const char* to_string(ElementKind kind) noexcept {
    return kind == ElementKind::unit ? "unit" : "zerodivisor";
}

namespace {

struct Probe {
    ElementKind kind;
    Elem partner;
};

Probe probe(const FiniteRing& ring, Elem a) {
    const Elem one = ring.one();
    for (Elem x = 0; x < ring.order(); ++x) {
        Elem p = ring.mul(a, x);
        if (p == one) return {ElementKind::unit, x};
        if (p == 0 && x != 0) return {ElementKind::zerodivisor, x};
    }
    throw ConsistencyError("element " + ring.format(a) + " of " + ring.name() + " is neither a unit nor a zerodivisor");
}

}  // namespace

ElementKind element_kind(const FiniteRing& ring, Elem a) { return probe(ring, a).kind; }

bool is_regular_element(const FiniteRing& ring, Elem a) { return element_kind(ring, a) == ElementKind::unit; }

ElementTable classify_elements(const FiniteRing& ring) {
    const std::size_t n = ring.order();
    ElementTable table;
    table.kind.assign(n, ElementKind::zerodivisor);
    table.partner.assign(n, 0);
    table.units.resize(n);
    ElementSet known(n);
    for (Elem a = 0; a < n; ++a) {
        if (known.test(a)) continue;
        Probe p = probe(ring, a);
        table.kind[a] = p.kind;
        table.partner[a] = p.partner;
        known.set(a);
        if (p.kind == ElementKind::unit) {
            table.units.set(a);
            table.kind[p.partner] = ElementKind::unit;
            table.partner[p.partner] = a;
            table.units.set(p.partner);
            known.set(p.partner);
        }
    }
    return table;
}

std::optional<Ideal> is_local(const RingPtr& ring) { return is_local(ring, classify_elements(*ring)); }

std::optional<Ideal> is_local(const RingPtr& ring, const ElementTable& elements) {
    ElementSet nonunits = ~elements.units;
    const std::vector<Elem> members = members_of(nonunits);
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (elements.is_unit(ring->add(members[i], members[j]))) return std::nullopt;
        }
    }
    return ideal_from_members(ring, nonunits);
}

bool is_field(const FiniteRing& ring, const ElementTable& elements) {
    return elements.unit_count() + 1 == ring.order();
}

}  // namespace pruefer
