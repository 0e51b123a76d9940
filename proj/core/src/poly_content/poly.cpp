#include "pruefer/poly_content/poly.hpp"

#include <algorithm>

#include "pruefer/errors.hpp"

namespace pruefer {

namespace {

void trim(std::vector<Elem>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

void require_same_ring(const RingPoly& f, const RingPoly& g) {
    if (f.ring().get() != g.ring().get()) throw ArgumentError("polynomials over different rings");
}

}  // namespace

RingPoly::RingPoly(RingPtr ring, std::vector<Elem> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    for (Elem c : coeffs_) {
        if (c >= ring_->order()) throw ArgumentError("coefficient index out of range for " + ring_->name());
    }
    trim(coeffs_);
}

std::vector<Literal> RingPoly::literals() const {
    std::vector<Literal> out;
    out.reserve(coeffs_.size());
    for (Elem c : coeffs_) out.push_back(ring_->notation().format(c));
    return out;
}

std::string RingPoly::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ", ";
        out += ring_->format(coeffs_[i]);
    }
    return out + "]";
}

RingPoly parse_poly(const RingPtr& ring, const std::vector<Literal>& coeffs) {
    std::vector<Elem> c;
    c.reserve(coeffs.size());
    for (const Literal& l : coeffs) c.push_back(ring->parse(l));
    return RingPoly(ring, std::move(c));
}

RingPoly poly_add(const RingPoly& f, const RingPoly& g) {
    require_same_ring(f, g);
    const FiniteRing& r = *f.ring();
    std::vector<Elem> c(std::max(f.coeffs().size(), g.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = r.add(f[i], g[i]);
    return RingPoly(f.ring(), std::move(c));
}

void convolve(const FiniteRing& ring, const std::vector<Elem>& f, const std::vector<Elem>& g, std::vector<Elem>& out) {
    if (f.empty() || g.empty()) {
        out.clear();
        return;
    }
    out.assign(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j) out[i + j] = ring.add(out[i + j], ring.mul(f[i], g[j]));
    }
}

RingPoly poly_mul(const RingPoly& f, const RingPoly& g) {
    require_same_ring(f, g);
    std::vector<Elem> c;
    convolve(*f.ring(), f.coeffs(), g.coeffs(), c);
    return RingPoly(f.ring(), std::move(c));
}

RingPoly poly_scale(const RingPoly& f, Elem a) {
    std::vector<Elem> c = f.coeffs();
    for (Elem& x : c) x = f.ring()->mul(a, x);
    return RingPoly(f.ring(), std::move(c));
}

Ideal content(const RingPoly& f) { return ideal_generated_by(f.ring(), f.coeffs()); }

}  // namespace pruefer
