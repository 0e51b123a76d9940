#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "pruefer/ideal_lattice/lattice.hpp"
#include "pruefer/poly_content/poly.hpp"

namespace pruefer {

enum class GaussianStatus { certified, refuted, bounded };
enum class GaussianReason { unit_content, local_square_zero_maximal, ring_certified_gaussian };

const char* to_string(GaussianStatus status) noexcept;
const char* to_string(GaussianReason reason) noexcept;

struct SearchLimits {
    unsigned degree_bound = 3;
    /// Largest number of candidate polynomials (or pairs) one search may test.
    std::uint64_t cap = 2'000'000;
};

struct GaussianVerdict {
    GaussianStatus status = GaussianStatus::bounded;
    std::optional<GaussianReason> reason;  ///< certified
    std::optional<RingPoly> witness;       ///< refuted: g with c(fg) ≠ c(f)c(g)
    std::optional<unsigned> bound;         ///< bounded: every g of degree ≤ bound was tested
    bool capped = false;                   ///< the requested bound was lowered to fit the cap
};

/// Everything needed to test content multiplicativity by table lookup:
/// content ids fold the lattice sum table over principal ids.
class GaussianContext {
public:
    explicit GaussianContext(RingPtr ring, LatticeOptions options = {});
    GaussianContext(std::shared_ptr<const IdealLattice> lattice, std::shared_ptr<const ElementTable> elements);

    const RingPtr& ring() const noexcept { return lattice_->ring(); }
    const IdealLattice& lattice() const noexcept { return *lattice_; }
    const ElementTable& elements() const noexcept { return *elements_; }

    /// Local with maximal ideal N and N² = 0; then every polynomial is Gaussian.
    bool square_zero_maximal() const noexcept { return square_zero_maximal_; }
    /// Set once a classifier has proved the ring Gaussian.
    void set_ring_certified(bool value) noexcept { ring_certified_ = value; }
    bool ring_certified() const noexcept { return ring_certified_; }

    IdealId content_id(std::span<const Elem> coeffs) const { return lattice_->generated_id(coeffs); }
    IdealId content_id(const RingPoly& f) const { return content_id(f.coeffs()); }

    /// c(fg) = c(f)c(g), given c(f) as an id. `scratch` avoids reallocating the product.
    bool multiplicative(std::span<const Elem> f, IdealId cf, std::span<const Elem> g, std::vector<Elem>& scratch) const;
    bool multiplicative(const RingPoly& f, const RingPoly& g) const;

private:
    std::shared_ptr<const IdealLattice> lattice_;
    std::shared_ptr<const ElementTable> elements_;
    bool square_zero_maximal_ = false;
    bool ring_certified_ = false;
};

/// Walks coefficient vectors of length `length` in numeric order Σ cᵢ nⁱ, i.e. by
/// degree and then lexicographically from the leading coefficient down.
class PolyOdometer {
public:
    PolyOdometer(std::size_t ring_order, std::size_t length) : n_(static_cast<Elem>(ring_order)), c_(length, 0) {}

    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    /// False once every vector has been visited.
    bool next() {
        for (Elem& c : c_) {
            if (++c < n_) return true;
            c = 0;
        }
        return false;
    }

private:
    Elem n_;
    std::vector<Elem> c_;
};

/// n^(D+1), saturating at UINT64_MAX.
std::uint64_t search_space(std::size_t ring_order, unsigned degree_bound);

/// First g of degree ≤ D (in odometer order) with c(fg) ≠ c(f)c(g). Exhaustive,
/// without structural shortcuts. Throws BoundError when |R|^(D+1) exceeds `cap`.
std::optional<RingPoly> gaussian_witness_search(const GaussianContext& ctx, const RingPoly& f, unsigned degree_bound,
                                                std::uint64_t cap = SearchLimits{}.cap);
std::optional<RingPoly> gaussian_witness_search(const RingPoly& f, unsigned degree_bound,
                                                std::uint64_t cap = SearchLimits{}.cap);

/// Structural certificates first (unit content, N² = 0, ring certified), then the
/// witness search with the degree bound lowered until the search fits the cap.
/// With `audit`, the search also runs after a certificate and a refutation of a
/// certified f throws ConsistencyError.
GaussianVerdict certify_gaussian(const GaussianContext& ctx, const RingPoly& f, SearchLimits limits = {},
                                 bool audit = false);
GaussianVerdict certify_gaussian(const RingPoly& f, SearchLimits limits = {});

/// c(f)^m c(fg) = c(f)^(m+1) c(g) with m = deg g, using Ideal operations.
bool dedekind_mertens_check(const RingPoly& f, const RingPoly& g);
/// The same identity through the lattice's product table.
bool dedekind_mertens_check(const GaussianContext& ctx, const RingPoly& f, const RingPoly& g);

}  // namespace pruefer
