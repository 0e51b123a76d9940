#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pruefer/ring_core/finite_module.hpp"
#include "pruefer/ring_core/finite_ring.hpp"
#include "pruefer/ring_core/ring_hom.hpp"

namespace pruefer {

class Ideal;

/// Z/n, residues in order.
RingPtr make_zmod(std::uint64_t n, Label label = {});

/// GF(p^k) = F_p[x]/(poly). `poly` holds k+1 coefficients, lowest degree first,
/// and must be irreducible of degree k. Element index = Σ cᵢ pⁱ.
RingPtr make_gf(std::uint32_t p, std::uint32_t k, std::span<const std::uint32_t> poly, Label label = {});

/// Whether `poly` (lowest degree first) is irreducible over F_p. Exhaustive factor search.
bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p);
bool is_prime(std::uint64_t n);

/// Smallest monic irreducible polynomial of degree k over F_p in coefficient order.
std::vector<std::uint32_t> first_irreducible(std::uint32_t p, std::uint32_t k);

/// A × B; index a·|B| + b.
RingPtr make_product(RingPtr left, RingPtr right, Label label = {});

struct ProductRing {
    RingPtr ring;
    RingHom to_left;
    RingHom to_right;
};

/// Projections of a ring built by make_product onto its two factors.
ProductRing product_projections(const RingPtr& product);

struct TrivialExtension {
    RingPtr ring;
    RingHom embedding;   ///< a ↦ (a, 0)
    RingHom projection;  ///< (a, e) ↦ a
};

/// A ∝ E on pairs with (a,e)(a',e') = (aa', ae' + a'e); index a·|E| + e.
/// E = 0 is allowed and yields a copy of A.
TrivialExtension make_trivial_extension(RingPtr base, ModulePtr module, Label label = {});

/// Recovers the maps of a ring built by make_trivial_extension.
TrivialExtension trivial_extension_maps(const RingPtr& ring);

struct QuotientRing {
    RingPtr ring;
    RingHom projection;
};

/// R/I on cosets ordered by smallest representative. The quotient by the zero
/// ideal returns R itself with the identity map. Throws ArgumentError for I = R.
QuotientRing make_quotient(const RingPtr& ring, const Ideal& ideal, Label label = {});

}  // namespace pruefer
