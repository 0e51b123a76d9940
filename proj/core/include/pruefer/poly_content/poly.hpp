#pragma once

#include <string>
#include <vector>

#include "pruefer/ideal_lattice/ideal.hpp"
#include "pruefer/ring_core/finite_ring.hpp"
#include "pruefer/ring_core/literal.hpp"

namespace pruefer {

/// A polynomial in one variable over a finite ring, lowest degree first.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class RingPoly {
public:
    explicit RingPoly(RingPtr ring, std::vector<Elem> coeffs = {});

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    Elem operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

    /// Coefficient literals, e.g. `[(2,0), (0,1)]`.
    std::vector<Literal> literals() const;
    std::string to_string() const;

    friend bool operator==(const RingPoly& a, const RingPoly& b) {
        return a.ring_.get() == b.ring_.get() && a.coeffs_ == b.coeffs_;
    }

private:
    RingPtr ring_;
    std::vector<Elem> coeffs_;
};

/// Parses coefficient literals in the ring's notation.
RingPoly parse_poly(const RingPtr& ring, const std::vector<Literal>& coeffs);

RingPoly poly_add(const RingPoly& f, const RingPoly& g);
RingPoly poly_mul(const RingPoly& f, const RingPoly& g);
RingPoly poly_scale(const RingPoly& f, Elem a);

/// Ideal generated by the coefficients.
Ideal content(const RingPoly& f);

/// Coefficient-wise product into `out`, which is resized; no trimming.
void convolve(const FiniteRing& ring, const std::vector<Elem>& f, const std::vector<Elem>& g, std::vector<Elem>& out);

}  // namespace pruefer
