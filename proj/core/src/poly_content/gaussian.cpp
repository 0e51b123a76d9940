#include "pruefer/poly_content/gaussian.hpp"

#include <limits>

#include "pruefer/errors.hpp"

namespace pruefer {

const char* to_string(GaussianStatus status) noexcept {
    switch (status) {
        case GaussianStatus::certified: return "certified";
        case GaussianStatus::refuted: return "refuted";
        default: return "bounded";
    }
}

const char* to_string(GaussianReason reason) noexcept {
    switch (reason) {
        case GaussianReason::unit_content: return "unit_content";
        case GaussianReason::local_square_zero_maximal: return "local_square_zero_maximal";
        default: return "ring_certified_gaussian";
    }
}

GaussianContext::GaussianContext(RingPtr ring, LatticeOptions options) {
    auto elements = std::make_shared<const ElementTable>(classify_elements(*ring));
    auto lattice = std::make_shared<const IdealLattice>(enumerate_ideals(ring, *elements, options));
    *this = GaussianContext(std::move(lattice), std::move(elements));
}

GaussianContext::GaussianContext(std::shared_ptr<const IdealLattice> lattice,
                                 std::shared_ptr<const ElementTable> elements)
    : lattice_(std::move(lattice)), elements_(std::move(elements)) {
    const auto& maximal = lattice_->maximal();
    square_zero_maximal_ = maximal.size() == 1 && lattice_->product(maximal[0], maximal[0]) == lattice_->zero_id();
}

bool GaussianContext::multiplicative(std::span<const Elem> f, IdealId cf, std::span<const Elem> g,
                                     std::vector<Elem>& scratch) const {
    const FiniteRing& r = *ring();
    const IdealId cg = content_id(g);
    const IdealId expected = lattice_->product(cf, cg);
    if (f.empty() || g.empty()) return expected == lattice_->zero_id();
    scratch.assign(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j) scratch[i + j] = r.add(scratch[i + j], r.mul(f[i], g[j]));
    }
    return content_id(scratch) == expected;
}

bool GaussianContext::multiplicative(const RingPoly& f, const RingPoly& g) const {
    std::vector<Elem> scratch;
    return multiplicative(f.coeffs(), content_id(f), g.coeffs(), scratch);
}

std::uint64_t search_space(std::size_t ring_order, unsigned degree_bound) {
    std::uint64_t total = 1;
    for (unsigned i = 0; i <= degree_bound; ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / ring_order) return std::numeric_limits<std::uint64_t>::max();
        total *= ring_order;
    }
    return total;
}

std::optional<RingPoly> gaussian_witness_search(const GaussianContext& ctx, const RingPoly& f, unsigned degree_bound,
                                                std::uint64_t cap) {
    if (f.ring().get() != ctx.ring().get()) throw ArgumentError("polynomial is not over the context ring");
    const std::size_t n = ctx.ring()->order();
    if (search_space(n, degree_bound) > cap) {
        throw BoundError("witness search over " + std::to_string(n) + "^" + std::to_string(degree_bound + 1) +
                         " polynomials exceeds the cap of " + std::to_string(cap));
    }
    const IdealId cf = ctx.content_id(f);
    std::vector<Elem> scratch;
    PolyOdometer g(n, degree_bound + 1);
    do {
        std::span<const Elem> coeffs(g.coeffs());
        while (!coeffs.empty() && coeffs.back() == 0) coeffs = coeffs.first(coeffs.size() - 1);
        if (!ctx.multiplicative(f.coeffs(), cf, coeffs, scratch)) {
            return RingPoly(ctx.ring(), std::vector<Elem>(coeffs.begin(), coeffs.end()));
        }
    } while (g.next());
    return std::nullopt;
}

std::optional<RingPoly> gaussian_witness_search(const RingPoly& f, unsigned degree_bound, std::uint64_t cap) {
    return gaussian_witness_search(GaussianContext(f.ring()), f, degree_bound, cap);
}

GaussianVerdict certify_gaussian(const GaussianContext& ctx, const RingPoly& f, SearchLimits limits, bool audit) {
    GaussianVerdict verdict;
    if (ctx.content_id(f) == ctx.lattice().unit_id()) {
        verdict.reason = GaussianReason::unit_content;
    } else if (ctx.square_zero_maximal()) {
        verdict.reason = GaussianReason::local_square_zero_maximal;
    } else if (ctx.ring_certified()) {
        verdict.reason = GaussianReason::ring_certified_gaussian;
    }
    if (verdict.reason) verdict.status = GaussianStatus::certified;
    if (verdict.reason && !audit) return verdict;

    const std::size_t n = ctx.ring()->order();
    unsigned degree = limits.degree_bound;
    while (degree > 0 && search_space(n, degree) > limits.cap) --degree;
    if (search_space(n, degree) > limits.cap) {
        // Not even constants fit; nothing was searched.
        return verdict;
    }
    auto witness = gaussian_witness_search(ctx, f, degree, limits.cap);
    if (verdict.reason) {
        if (witness) {
            throw ConsistencyError("certified polynomial " + f.to_string() + " refuted by " + witness->to_string());
        }
        return verdict;
    }
    if (witness) {
        verdict.status = GaussianStatus::refuted;
        verdict.witness = std::move(witness);
    } else {
        verdict.status = GaussianStatus::bounded;
        verdict.bound = degree;
        verdict.capped = degree < limits.degree_bound;
    }
    return verdict;
}

GaussianVerdict certify_gaussian(const RingPoly& f, SearchLimits limits) {
    return certify_gaussian(GaussianContext(f.ring()), f, limits);
}

bool dedekind_mertens_check(const RingPoly& f, const RingPoly& g) {
    const unsigned m = g.degree() > 0 ? static_cast<unsigned>(g.degree()) : 0;
    Ideal cf = content(f);
    Ideal lhs = ideal_product(ideal_power(cf, m), content(poly_mul(f, g)));
    Ideal rhs = ideal_product(ideal_power(cf, m + 1), content(g));
    return lhs == rhs;
}

bool dedekind_mertens_check(const GaussianContext& ctx, const RingPoly& f, const RingPoly& g) {
    const IdealLattice& lat = ctx.lattice();
    const unsigned m = g.degree() > 0 ? static_cast<unsigned>(g.degree()) : 0;
    const IdealId cf = ctx.content_id(f);
    const IdealId lhs = lat.product(lat.power(cf, m), ctx.content_id(poly_mul(f, g)));
    const IdealId rhs = lat.product(lat.power(cf, m + 1), ctx.content_id(g));
    return lhs == rhs;
}

}  // namespace pruefer
