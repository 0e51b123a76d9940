#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pruefer/ideal_lattice/ideal.hpp"
#include "pruefer/ring_core/elements.hpp"

namespace pruefer {

using IdealId = std::size_t;

struct LatticeOptions {
    std::size_t max_order = 4096;
};

/// All ideals of a ring, sorted by cardinality and then by member list, with
/// sum/product tables and the covering relation. Id 0 is the zero ideal and the
/// last id is the unit ideal.
class IdealLattice {
public:
    IdealLattice(RingPtr ring, std::vector<Ideal> ideals, std::vector<IdealId> principal_ids,
                 std::vector<IdealId> sum_table);

    const RingPtr& ring() const noexcept { return ring_; }
    std::size_t size() const noexcept { return ideals_.size(); }
    const Ideal& operator[](IdealId id) const { return ideals_[id]; }
    const std::vector<Ideal>& ideals() const noexcept { return ideals_; }

    IdealId zero_id() const noexcept { return 0; }
    IdealId unit_id() const noexcept { return ideals_.size() - 1; }

    std::optional<IdealId> find(const ElementSet& members) const;
    /// Throws ArgumentError when `members` is not an ideal of this ring.
    IdealId id_of(const ElementSet& members) const;
    IdealId id_of(const Ideal& ideal) const { return id_of(ideal.members()); }

    IdealId principal_id(Elem a) const { return principal_ids_[a]; }
    IdealId sum(IdealId a, IdealId b) const { return sum_[a * ideals_.size() + b]; }
    IdealId product(IdealId a, IdealId b) const { return product_[a * ideals_.size() + b]; }
    IdealId intersection(IdealId a, IdealId b) const;
    IdealId power(IdealId a, unsigned k) const;
    bool contains(IdealId big, IdealId small) const;

    /// Ideal generated by `elems`, folded through the sum table.
    IdealId generated_id(std::span<const Elem> elems) const;

    std::optional<Elem> principal_generator(IdealId id) const;
    bool is_principal(IdealId id) const { return principal_generator(id).has_value(); }

    const std::vector<IdealId>& upper_covers(IdealId id) const { return upper_[id]; }
    const std::vector<IdealId>& lower_covers(IdealId id) const { return lower_[id]; }
    /// Coatoms.
    const std::vector<IdealId>& maximal() const noexcept { return maximal_; }
    /// Proper nonzero ideals covering zero. Empty for a field.
    const std::vector<IdealId>& atoms() const noexcept { return atoms_; }

private:
    struct Hash {
        std::size_t operator()(const ElementSet& s) const { return boost::hash_value(s); }
    };

    RingPtr ring_;
    std::vector<Ideal> ideals_;
    std::vector<IdealId> principal_ids_;
    std::vector<IdealId> sum_;
    std::vector<IdealId> product_;
    std::vector<std::vector<IdealId>> upper_;
    std::vector<std::vector<IdealId>> lower_;
    std::vector<IdealId> maximal_;
    std::vector<IdealId> atoms_;
    std::unordered_map<ElementSet, IdealId, Hash> index_;
};

/// Closes the set of principal ideals under pairwise sums. Throws BoundError
/// when the ring order exceeds `options.max_order`.
IdealLattice enumerate_ideals(const RingPtr& ring, LatticeOptions options = {});
IdealLattice enumerate_ideals(const RingPtr& ring, const ElementTable& elements, LatticeOptions options = {});

/// Minimal nonzero proper ideals.
std::vector<Ideal> minimal_nonzero_ideals(const IdealLattice& lattice);

/// No J, K with J ∩ K = I, J ≠ I ≠ K.
bool is_irreducible(const IdealLattice& lattice, IdealId id);

/// Two ideals strictly above `id` whose intersection is `id`, if any.
std::optional<std::pair<IdealId, IdealId>> reducing_pair(const IdealLattice& lattice, IdealId id);

/// Some J with I·J principal and generated by a regular element.
std::optional<IdealId> inverse_partner(const IdealLattice& lattice, IdealId id, const ElementTable& elements);

/// Invertibility by the general definition. Also checks that the answer agrees
/// with I = R, which holds in every finite ring; throws ConsistencyError otherwise.
bool is_invertible(const IdealLattice& lattice, IdealId id, const ElementTable& elements);

}  // namespace pruefer
