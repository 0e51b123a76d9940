#include "pruefer/ideal_lattice/localization.hpp"

#include "pruefer/errors.hpp"

namespace pruefer {

bool is_maximal_ideal(const Ideal& ideal, const ElementTable& elements) {
    const FiniteRing& ring = *ideal.ring();
    if (ideal.is_unit()) return false;
    const ElementSet& m = ideal.members();
    for (Elem r = 0; r < ring.order(); ++r) {
        if (m.test(r) || elements.is_unit(r)) continue;
        if (!detail::join_members(ring, m, detail::principal_members(ring, r)).all()) return false;
    }
    return true;
}

Localization localize_at(const RingPtr& ring, const Ideal& maximal) {
    return localize_at(ring, maximal, classify_elements(*ring));
}

Localization localize_at(const RingPtr& ring, const Ideal& maximal, const ElementTable& elements) {
    if (maximal.ring().get() != ring.get()) throw ArgumentError("ideal does not belong to " + ring->name());
    if (!is_maximal_ideal(maximal, elements)) {
        throw ArgumentError(maximal.to_string() + " is not a maximal ideal of " + ring->name());
    }
    const FiniteRing& r = *ring;
    // Units outside m annihilate nothing, so only non-units outside m matter.
    std::vector<Elem> outside;
    for (Elem s = 0; s < r.order(); ++s) {
        if (!maximal.contains(s) && !elements.is_unit(s)) outside.push_back(s);
    }
    ElementSet kernel = r.empty_set();
    kernel.set(0);
    if (!outside.empty()) {
        for (Elem x = 1; x < r.order(); ++x) {
            for (Elem s : outside) {
                if (r.mul(s, x) == 0) {
                    kernel.set(x);
                    break;
                }
            }
        }
    }
    Ideal kernel_ideal(ring, kernel, detail::greedy_generators(r, kernel));
    QuotientRing q = make_quotient(ring, kernel_ideal);
    return Localization{maximal, std::move(kernel), std::move(q.ring), std::move(q.projection)};
}

bool is_locally_principal(const Ideal& ideal) {
    RingAnalysis analysis(ideal.ring());
    return analysis.is_locally_principal(analysis.lattice().id_of(ideal));
}

bool zero_ideal_locally_irreducible(const RingPtr& ring) {
    RingAnalysis analysis(ring);
    for (const auto& local : analysis.localizations()) {
        if (!is_irreducible(*local.lattice, local.lattice->zero_id())) return false;
    }
    return true;
}

RingAnalysis::RingAnalysis(RingPtr ring, LatticeOptions options) : ring_(std::move(ring)), options_(options) {
    if (ring_->order() > options_.max_order) {
        throw BoundError("ideal enumeration limited to rings of order " + std::to_string(options_.max_order) + ", " +
                         ring_->name() + " has " + std::to_string(ring_->order()));
    }
    elements_ = std::make_shared<const ElementTable>(classify_elements(*ring_));
    lattice_ = std::make_shared<const IdealLattice>(enumerate_ideals(ring_, *elements_, options_));
    is_field_ = pruefer::is_field(*ring_, *elements_);

    for (IdealId m : lattice_->maximal()) {
        Localization loc = localize_at(ring_, (*lattice_)[m], *elements_);
        std::shared_ptr<const IdealLattice> lat;
        std::shared_ptr<const ElementTable> els;
        if (loc.ring.get() == ring_.get()) {
            lat = lattice_;
            els = elements_;
        } else {
            els = std::make_shared<const ElementTable>(classify_elements(*loc.ring));
            lat = std::make_shared<const IdealLattice>(enumerate_ideals(loc.ring, *els, options_));
        }
        locals_.push_back(Local{std::move(loc), std::move(lat), std::move(els), m});
    }

    non_principal_.resize(lattice_->size());
    for (IdealId id = 0; id < lattice_->size(); ++id) {
        for (std::size_t i = 0; i < locals_.size(); ++i) {
            if (!locals_[i].lattice->is_principal(pushed_id(id, i))) {
                non_principal_[id] = i;
                break;
            }
        }
    }
}

std::optional<std::size_t> RingAnalysis::non_principal_at(IdealId id) const { return non_principal_[id]; }

IdealId RingAnalysis::pushed_id(IdealId id, std::size_t local_index) const {
    const Local& local = locals_[local_index];
    if (local.lattice == lattice_) return id;
    return local.lattice->id_of(local.localization.push((*lattice_)[id]));
}

}  // namespace pruefer
