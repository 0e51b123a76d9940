#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pruefer/ring_core/elements.hpp"
#include "pruefer/ring_core/finite_ring.hpp"

namespace pruefer {

/// An ideal of a finite ring: membership bitset plus a generating list.
/// Generators are chosen greedily, so none is redundant given its predecessors.
class Ideal {
public:
    /// Trusted constructor; callers guarantee `members` is the ideal generated by `gens`.
    Ideal(RingPtr ring, ElementSet members, std::vector<Elem> gens);

    const RingPtr& ring() const noexcept { return ring_; }
    const ElementSet& members() const noexcept { return members_; }
    const std::vector<Elem>& generators() const noexcept { return gens_; }

    std::size_t size() const { return members_.count(); }
    bool contains(Elem e) const { return members_.test(e); }
    bool is_zero() const { return members_.count() == 1; }
    bool is_unit() const { return members_.count() == ring_->order(); }
    bool is_subset_of(const Ideal& other) const { return members_.is_subset_of(other.members_); }

    /// `(g1, g2, ...)` using the ring's element notation.
    std::string to_string() const;
    std::vector<std::string> member_literals() const;

    friend bool operator==(const Ideal& a, const Ideal& b) {
        return a.ring_.get() == b.ring_.get() && a.members_ == b.members_;
    }

private:
    RingPtr ring_;
    ElementSet members_;
    std::vector<Elem> gens_;
};

Ideal zero_ideal(const RingPtr& ring);
Ideal unit_ideal(const RingPtr& ring);
Ideal principal_ideal(const RingPtr& ring, Elem a);

/// Smallest ideal containing `gens`; empty input gives the zero ideal.
Ideal ideal_generated_by(const RingPtr& ring, std::span<const Elem> gens);

/// Wraps a member set, choosing generators. Throws ArgumentError if the set is not an ideal.
Ideal ideal_from_members(const RingPtr& ring, const ElementSet& members);

bool is_ideal(const FiniteRing& ring, const ElementSet& members);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
/// Ideal generated by all products; computed from pairwise generator products.
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
/// (a : b) = { r : r·b ⊆ a }.
Ideal ideal_quotient(const Ideal& a, const Ideal& b);
Ideal annihilator(const Ideal& a);
Ideal ideal_power(const Ideal& a, unsigned k);

/// Some a with I = Ra, smallest index first.
std::optional<Elem> principal_generator(const Ideal& ideal);
inline bool is_principal(const Ideal& ideal) { return principal_generator(ideal).has_value(); }

/// Contains a non-zerodivisor.
bool is_regular_ideal(const Ideal& ideal);
bool is_regular_ideal(const Ideal& ideal, const ElementTable& elements);

namespace detail {
/// Smallest additive subgroup containing `base` and `x`, given that `base` is a subgroup.
void join_cyclic(const FiniteRing& ring, ElementSet& base, Elem x);
/// Members of Ra.
ElementSet principal_members(const FiniteRing& ring, Elem a);
/// Sum of two ideals given as member sets.
ElementSet join_members(const FiniteRing& ring, const ElementSet& a, const ElementSet& b);
/// Greedy generating list for a set already known to be an ideal.
std::vector<Elem> greedy_generators(const FiniteRing& ring, const ElementSet& members);
}  // namespace detail

}  // namespace pruefer
