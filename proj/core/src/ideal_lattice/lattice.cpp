#include "pruefer/ideal_lattice/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "pruefer/errors.hpp"

namespace pruefer {

IdealLattice::IdealLattice(RingPtr ring, std::vector<Ideal> ideals, std::vector<IdealId> principal_ids,
                           std::vector<IdealId> sum_table)
    : ring_(std::move(ring)),
      ideals_(std::move(ideals)),
      principal_ids_(std::move(principal_ids)),
      sum_(std::move(sum_table)) {
    const std::size_t n = ideals_.size();
    for (IdealId i = 0; i < n; ++i) index_.emplace(ideals_[i].members(), i);

    product_.assign(n * n, 0);
    for (IdealId a = 0; a < n; ++a) {
        for (IdealId b = a; b < n; ++b) {
            IdealId id = zero_id();
            for (Elem x : ideals_[a].generators()) {
                for (Elem y : ideals_[b].generators()) id = sum(id, principal_id(ring_->mul(x, y)));
            }
            product_[a * n + b] = product_[b * n + a] = id;
        }
    }

    upper_.resize(n);
    lower_.resize(n);
    for (IdealId a = 0; a < n; ++a) {
        for (IdealId b = a + 1; b < n; ++b) {
            if (ideals_[a].size() == ideals_[b].size() || !contains(b, a)) continue;
            bool cover = true;
            for (IdealId c : upper_[a]) {
                if (contains(b, c)) {
                    cover = false;
                    break;
                }
            }
            if (cover) {
                upper_[a].push_back(b);
                lower_[b].push_back(a);
            }
        }
    }
    maximal_ = n > 1 ? lower_[unit_id()] : std::vector<IdealId>{};
    for (IdealId c : upper_[zero_id()]) {
        if (c != unit_id()) atoms_.push_back(c);
    }
}

std::optional<IdealId> IdealLattice::find(const ElementSet& members) const {
    auto it = index_.find(members);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

IdealId IdealLattice::id_of(const ElementSet& members) const {
    if (auto id = find(members)) return *id;
    throw ArgumentError("element set is not an ideal of " + ring_->name());
}

IdealId IdealLattice::intersection(IdealId a, IdealId b) const {
    return id_of(ideals_[a].members() & ideals_[b].members());
}

IdealId IdealLattice::power(IdealId a, unsigned k) const {
    IdealId out = unit_id();
    for (unsigned i = 0; i < k; ++i) out = product(out, a);
    return out;
}

bool IdealLattice::contains(IdealId big, IdealId small) const {
    return ideals_[small].members().is_subset_of(ideals_[big].members());
}

IdealId IdealLattice::generated_id(std::span<const Elem> elems) const {
    IdealId id = zero_id();
    for (Elem e : elems) id = sum(id, principal_id(e));
    return id;
}

std::optional<Elem> IdealLattice::principal_generator(IdealId id) const {
    const ElementSet& m = ideals_[id].members();
    for (auto i = m.find_first(); i != ElementSet::npos; i = m.find_next(i)) {
        if (principal_ids_[i] == id) return static_cast<Elem>(i);
    }
    return std::nullopt;
}

IdealLattice enumerate_ideals(const RingPtr& ring, LatticeOptions options) {
    if (ring->order() > options.max_order) {
        throw BoundError("ideal enumeration limited to rings of order " + std::to_string(options.max_order) + ", " +
                         ring->name() + " has " + std::to_string(ring->order()));
    }
    return enumerate_ideals(ring, classify_elements(*ring), options);
}

IdealLattice enumerate_ideals(const RingPtr& ring, const ElementTable& elements, LatticeOptions options) {
    const FiniteRing& r = *ring;
    const std::size_t n = r.order();
    if (n > options.max_order) {
        throw BoundError("ideal enumeration limited to rings of order " + std::to_string(options.max_order) + ", " +
                         ring->name() + " has " + std::to_string(n));
    }
    struct Hash {
        std::size_t operator()(const ElementSet& s) const { return boost::hash_value(s); }
    };
    std::vector<ElementSet> found;
    std::unordered_map<ElementSet, std::size_t, Hash> seen;
    auto intern = [&](ElementSet s) {
        auto [it, fresh] = seen.emplace(s, found.size());
        if (fresh) found.push_back(std::move(s));
        return it->second;
    };

    // Ru·a = Ra, so each unit orbit needs one principal computation.
    constexpr std::size_t kUnassigned = ~std::size_t{0};
    std::vector<std::size_t> principal(n, kUnassigned);
    const std::vector<Elem> units = members_of(elements.units);
    for (Elem a = 0; a < n; ++a) {
        if (principal[a] != kUnassigned) continue;
        std::size_t id = intern(detail::principal_members(r, a));
        for (Elem u : units) principal[r.mul(u, a)] = id;
        principal[a] = id;
    }

    for (std::size_t i = 0; i < found.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (found[j].is_subset_of(found[i]) || found[i].is_subset_of(found[j])) continue;
            intern(detail::join_members(r, found[i], found[j]));
        }
    }

    std::vector<std::vector<Elem>> lists(found.size());
    for (std::size_t i = 0; i < found.size(); ++i) lists[i] = members_of(found[i]);
    std::vector<std::size_t> order(found.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (lists[a].size() != lists[b].size()) return lists[a].size() < lists[b].size();
        return lists[a] < lists[b];
    });
    std::vector<IdealId> rank(found.size());
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

    std::vector<Elem> smallest_generator(found.size(), 0);
    std::vector<bool> principal_found(found.size(), false);
    for (Elem a = 0; a < n; ++a) {
        if (!principal_found[principal[a]]) {
            principal_found[principal[a]] = true;
            smallest_generator[principal[a]] = a;
        }
    }

    std::vector<Ideal> ideals;
    ideals.reserve(found.size());
    for (std::size_t idx : order) {
        std::vector<Elem> gens;
        if (!principal_found[idx]) {
            gens = detail::greedy_generators(r, found[idx]);
        } else if (found[idx].all()) {
            gens = {r.one()};
        } else if (smallest_generator[idx] != 0) {
            gens = {smallest_generator[idx]};
        }
        ideals.emplace_back(ring, found[idx], std::move(gens));
    }
    std::vector<IdealId> principal_ids(n);
    for (Elem a = 0; a < n; ++a) principal_ids[a] = rank[principal[a]];

    const std::size_t count = ideals.size();
    std::vector<IdealId> sums(count * count);
    for (IdealId a = 0; a < count; ++a) {
        for (IdealId b = a; b < count; ++b) {
            IdealId id;
            const ElementSet& ma = ideals[a].members();
            const ElementSet& mb = ideals[b].members();
            if (ma.is_subset_of(mb)) {
                id = b;
            } else if (mb.is_subset_of(ma)) {
                id = a;
            } else {
                id = rank[seen.at(detail::join_members(r, ma, mb))];
            }
            sums[a * count + b] = sums[b * count + a] = id;
        }
    }
    return IdealLattice(ring, std::move(ideals), std::move(principal_ids), std::move(sums));
}

std::vector<Ideal> minimal_nonzero_ideals(const IdealLattice& lattice) {
    std::vector<Ideal> out;
    for (IdealId id : lattice.atoms()) out.push_back(lattice[id]);
    return out;
}

std::optional<std::pair<IdealId, IdealId>> reducing_pair(const IdealLattice& lattice, IdealId id) {
    // If I = J ∩ K with J, K strictly above I, covers of I below J and K also work.
    const auto& covers = lattice.upper_covers(id);
    for (std::size_t i = 0; i < covers.size(); ++i) {
        for (std::size_t j = i + 1; j < covers.size(); ++j) {
            if (lattice.intersection(covers[i], covers[j]) == id) return std::pair{covers[i], covers[j]};
        }
    }
    return std::nullopt;
}

bool is_irreducible(const IdealLattice& lattice, IdealId id) { return !reducing_pair(lattice, id).has_value(); }

std::optional<IdealId> inverse_partner(const IdealLattice& lattice, IdealId id, const ElementTable& elements) {
    for (IdealId j = 0; j < lattice.size(); ++j) {
        IdealId p = lattice.product(id, j);
        const ElementSet& m = lattice[p].members();
        for (auto i = m.find_first(); i != ElementSet::npos; i = m.find_next(i)) {
            if (lattice.principal_id(static_cast<Elem>(i)) == p && elements.is_unit(static_cast<Elem>(i))) return j;
        }
    }
    return std::nullopt;
}

bool is_invertible(const IdealLattice& lattice, IdealId id, const ElementTable& elements) {
    const bool invertible = inverse_partner(lattice, id, elements).has_value();
    if (invertible != (id == lattice.unit_id())) {
        throw ConsistencyError("invertibility of " + lattice[id].to_string() + " in " + lattice.ring()->name() +
                               " disagrees with I = R");
    }
    return invertible;
}

}  // namespace pruefer
