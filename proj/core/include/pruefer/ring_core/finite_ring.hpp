#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pruefer/ring_core/element.hpp"
#include "pruefer/ring_core/notation.hpp"

namespace pruefer {

struct RingSpec;
struct ModuleSpec;
class FiniteRing;
class FiniteModule;

using RingPtr = std::shared_ptr<const FiniteRing>;
using ModulePtr = std::shared_ptr<const FiniteModule>;

enum class RingKind { zmod, gf, product, quotient, trivial_ext };

const char* to_string(RingKind kind) noexcept;

/// Name and (optional) originating spec attached to a constructed object.
struct Label {
    std::string name;
    std::shared_ptr<const RingSpec> ring_spec;
    std::shared_ptr<const ModuleSpec> module_spec;
};

/// How a ring was built. Only the fields relevant to `kind` are set.
struct RingProvenance {
    RingKind kind = RingKind::zmod;
    std::string description;          ///< spec-like rendering, e.g. `trivext(zmod(4), ...)`
    std::uint64_t modulus = 0;        ///< zmod
    std::uint32_t prime = 0;          ///< gf
    std::uint32_t degree = 0;         ///< gf
    std::vector<std::uint32_t> poly;  ///< gf, normalised monic, lowest degree first
    RingPtr left;                     ///< product left factor, quotient parent, trivext base
    RingPtr right;                    ///< product right factor
    ModulePtr module;                 ///< trivext module
    std::optional<ElementSet> ideal;  ///< quotient: the ideal of `left` divided out
    std::shared_ptr<const RingSpec> spec;
};

/// Arithmetic on element indices, used directly for rings too large for tables.
class RingArithmetic {
public:
    virtual ~RingArithmetic() = default;
    virtual Elem add(Elem a, Elem b) const = 0;
    virtual Elem mul(Elem a, Elem b) const = 0;
    virtual Elem neg(Elem a) const = 0;
};

/// A finite commutative ring with identity on indices 0..order-1.
///
/// Rings up to kDenseLimit elements store full operation tables; larger rings
/// evaluate through their structured arithmetic (pairs, residues, cosets).
/// Immutable after construction.
class FiniteRing {
public:
    static constexpr std::size_t kDenseLimit = 4096;

    FiniteRing(Label label, std::size_t order, Elem one, std::shared_ptr<const RingArithmetic> arith,
               NotationPtr notation, RingProvenance provenance);

    std::size_t order() const noexcept { return order_; }
    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return one_; }
    bool is_dense() const noexcept { return dense_; }

    Elem add(Elem a, Elem b) const {
        return dense_ ? add_[static_cast<std::size_t>(a) * order_ + b] : arith_->add(a, b);
    }
    Elem mul(Elem a, Elem b) const {
        return dense_ ? mul_[static_cast<std::size_t>(a) * order_ + b] : arith_->mul(a, b);
    }
    Elem neg(Elem a) const { return dense_ ? neg_[a] : arith_->neg(a); }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem pow(Elem a, std::uint64_t k) const;

    const std::string& name() const noexcept { return name_; }
    const RingProvenance& provenance() const noexcept { return provenance_; }
    RingKind kind() const noexcept { return provenance_.kind; }
    const std::shared_ptr<const RingSpec>& spec() const noexcept { return provenance_.spec; }

    const ElementNotation& notation() const noexcept { return *notation_; }
    const NotationPtr& notation_ptr() const noexcept { return notation_; }
    std::string format(Elem e) const { return notation_->to_string(e); }
    Elem parse(const Literal& literal) const { return notation_->parse(literal); }
    Elem parse(std::string_view text) const;

    ElementSet empty_set() const { return ElementSet(order_); }
    ElementSet full_set() const {
        ElementSet s(order_);
        s.set();
        return s;
    }

private:
    std::string name_;
    std::size_t order_;
    Elem one_;
    bool dense_;
    std::vector<std::uint16_t> add_;
    std::vector<std::uint16_t> mul_;
    std::vector<std::uint16_t> neg_;
    std::shared_ptr<const RingArithmetic> arith_;
    NotationPtr notation_;
    RingProvenance provenance_;
};

}  // namespace pruefer
