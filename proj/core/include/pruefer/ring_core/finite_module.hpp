#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pruefer/ring_core/finite_ring.hpp"

namespace pruefer {

class Ideal;

enum class ModuleKind { free, quotient, direct_sum };

struct ModuleProvenance {
    ModuleKind kind = ModuleKind::free;
    std::string description;
    std::size_t rank = 0;               ///< free
    std::optional<ElementSet> ideal;    ///< quotient: I in A/I
    std::vector<ModulePtr> summands;    ///< direct_sum
    std::shared_ptr<const ModuleSpec> spec;
};

/// A finite unital module over a FiniteRing, stored as dense tables.
class FiniteModule {
public:
    static constexpr std::size_t kOrderLimit = 4096;

    FiniteModule(Label label, RingPtr base, std::size_t order, std::vector<std::uint16_t> add,
                 std::vector<std::uint16_t> neg, std::vector<std::uint16_t> act, NotationPtr notation,
                 ModuleProvenance provenance);

    const RingPtr& base() const noexcept { return base_; }
    std::size_t order() const noexcept { return order_; }
    Elem zero() const noexcept { return 0; }

    Elem add(Elem e, Elem f) const { return add_[static_cast<std::size_t>(e) * order_ + f]; }
    Elem neg(Elem e) const { return neg_[e]; }
    /// Scalar action a·e.
    Elem act(Elem a, Elem e) const { return act_[static_cast<std::size_t>(a) * order_ + e]; }

    const std::string& name() const noexcept { return name_; }
    const ModuleProvenance& provenance() const noexcept { return provenance_; }
    const ElementNotation& notation() const noexcept { return *notation_; }
    const NotationPtr& notation_ptr() const noexcept { return notation_; }
    std::string format(Elem e) const { return notation_->to_string(e); }

private:
    std::string name_;
    RingPtr base_;
    std::size_t order_;
    std::vector<std::uint16_t> add_;
    std::vector<std::uint16_t> neg_;
    std::vector<std::uint16_t> act_;
    NotationPtr notation_;
    ModuleProvenance provenance_;
};

/// Aⁿ with componentwise action; indices are lexicographic, first component most significant.
ModulePtr make_free_module(RingPtr ring, std::size_t rank, Label label = {});

/// A/I with the action of A through the projection.
ModulePtr make_quotient_module(RingPtr ring, const Ideal& ideal, Label label = {});

/// Flat direct sum M₁ ⊕ … ⊕ Mₖ of modules over the same ring.
ModulePtr make_direct_sum(std::span<const ModulePtr> summands, Label label = {});

/// (A/M)ⁿ for a local ring (A, M), realised as A-modules annihilated by M.
/// Throws ArgumentError when A is not local or n == 0.
ModulePtr make_residue_space(RingPtr ring, std::size_t n, Label label = {});

}  // namespace pruefer
