#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "pruefer/ideal_lattice/ideal.hpp"
#include "pruefer/ideal_lattice/lattice.hpp"
#include "pruefer/ring_core/constructions.hpp"
#include "pruefer/ring_core/ring_hom.hpp"

namespace pruefer {

/// R_m for a finite ring, realised as R / {r : ∃ s ∉ m, sr = 0}.
struct Localization {
    Ideal maximal;
    ElementSet kernel;
    RingPtr ring;
    RingHom projection;

    /// Image of an ideal of R in R_m (an ideal, since the projection is onto).
    ElementSet push(const Ideal& ideal) const { return projection.image(ideal.members()); }
};

/// Whether R/m is a field, i.e. m is proper and m + Rr = R for all r ∉ m.
bool is_maximal_ideal(const Ideal& ideal, const ElementTable& elements);

/// Throws ArgumentError when `maximal` is not a maximal ideal.
Localization localize_at(const RingPtr& ring, const Ideal& maximal);
Localization localize_at(const RingPtr& ring, const Ideal& maximal, const ElementTable& elements);

/// Convenience form that enumerates the maximal ideals itself.
bool is_locally_principal(const Ideal& ideal);

/// Whether the zero ideal of every localization has at most one atom.
bool zero_ideal_locally_irreducible(const RingPtr& ring);

/// Element classification, ideal lattice and localizations of one ring,
/// computed once and shared by all deciders.
class RingAnalysis {
public:
    struct Local {
        Localization localization;
        std::shared_ptr<const IdealLattice> lattice;
        std::shared_ptr<const ElementTable> elements;
        IdealId maximal_id;  ///< m in R's lattice
    };

    explicit RingAnalysis(RingPtr ring, LatticeOptions options = {});

    const RingPtr& ring_ptr() const noexcept { return ring_; }
    const FiniteRing& ring() const noexcept { return *ring_; }
    const ElementTable& elements() const noexcept { return *elements_; }
    const IdealLattice& lattice() const noexcept { return *lattice_; }
    const std::shared_ptr<const ElementTable>& elements_ptr() const noexcept { return elements_; }
    const std::shared_ptr<const IdealLattice>& lattice_ptr() const noexcept { return lattice_; }
    const std::vector<Local>& localizations() const noexcept { return locals_; }
    bool is_local() const noexcept { return locals_.size() == 1; }
    bool is_field() const noexcept { return is_field_; }
    const LatticeOptions& options() const noexcept { return options_; }

    /// Index into localizations() of one where the ideal's image is not principal.
    std::optional<std::size_t> non_principal_at(IdealId id) const;
    bool is_locally_principal(IdealId id) const { return !non_principal_at(id).has_value(); }
    /// Image of an ideal in a localization, as an id of that localization's lattice.
    IdealId pushed_id(IdealId id, std::size_t local_index) const;

private:
    RingPtr ring_;
    LatticeOptions options_;
    std::shared_ptr<const ElementTable> elements_;
    std::shared_ptr<const IdealLattice> lattice_;
    std::vector<Local> locals_;
    std::vector<std::optional<std::size_t>> non_principal_;
    bool is_field_ = false;
};

}  // namespace pruefer
