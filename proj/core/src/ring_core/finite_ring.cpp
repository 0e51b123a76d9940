#include "pruefer/ring_core/finite_ring.hpp"

#include "pruefer/errors.hpp"

namespace pruefer {

const char* to_string(RingKind kind) noexcept {
    switch (kind) {
        case RingKind::zmod: return "zmod";
        case RingKind::gf: return "gf";
        case RingKind::product: return "product";
        case RingKind::quotient: return "quotient";
        case RingKind::trivial_ext: return "trivial_ext";
    }
    return "?";
}

FiniteRing::FiniteRing(Label label, std::size_t order, Elem one, std::shared_ptr<const RingArithmetic> arith,
                       NotationPtr notation, RingProvenance provenance)
    : name_(std::move(label.name)),
      order_(order),
      one_(one),
      dense_(order <= kDenseLimit),
      arith_(std::move(arith)),
      notation_(std::move(notation)),
      provenance_(std::move(provenance)) {
    if (order_ == 0 || order_ > kMaxOrder) {
        throw BoundError("ring order " + std::to_string(order_) + " outside [1, " + std::to_string(kMaxOrder) + "]");
    }
    if (label.ring_spec) provenance_.spec = std::move(label.ring_spec);
    if (name_.empty()) name_ = provenance_.description;
    if (dense_) {
        add_.resize(order_ * order_);
        mul_.resize(order_ * order_);
        neg_.resize(order_);
        for (std::size_t a = 0; a < order_; ++a) {
            neg_[a] = static_cast<std::uint16_t>(arith_->neg(static_cast<Elem>(a)));
            for (std::size_t b = a; b < order_; ++b) {
                auto s = static_cast<std::uint16_t>(arith_->add(static_cast<Elem>(a), static_cast<Elem>(b)));
                auto p = static_cast<std::uint16_t>(arith_->mul(static_cast<Elem>(a), static_cast<Elem>(b)));
                add_[a * order_ + b] = add_[b * order_ + a] = s;
                mul_[a * order_ + b] = mul_[b * order_ + a] = p;
            }
        }
    }
}

Elem FiniteRing::pow(Elem a, std::uint64_t k) const {
    Elem result = one_;
    Elem base = a;
    while (k > 0) {
        if (k & 1U) result = mul(result, base);
        base = mul(base, base);
        k >>= 1U;
    }
    return result;
}

Elem FiniteRing::parse(std::string_view text) const { return notation_->parse(parse_literal(text)); }

}  // namespace pruefer
