#include "pruefer/ring_core/constructions.hpp"

#include <algorithm>

#include "pruefer/errors.hpp"
#include "pruefer/ideal_lattice/ideal.hpp"

namespace pruefer {

namespace {

class ZmodArithmetic final : public RingArithmetic {
public:
    explicit ZmodArithmetic(std::uint64_t n) : n_(n) {}
    Elem add(Elem a, Elem b) const override { return static_cast<Elem>((std::uint64_t{a} + b) % n_); }
    Elem mul(Elem a, Elem b) const override { return static_cast<Elem>((std::uint64_t{a} * b) % n_); }
    Elem neg(Elem a) const override { return static_cast<Elem>((n_ - a) % n_); }

private:
    std::uint64_t n_;
};

// Polynomials over F_p, lowest degree first, no trailing zeros.
using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    for (std::uint32_t x = 1; x < p; ++x) {
        if ((std::uint64_t{a} * x) % p == 1) return x;
    }
    throw ArgumentError("no inverse mod p");
}

Coeffs poly_rem(Coeffs num, const Coeffs& den, std::uint32_t p) {
    trim(num);
    const std::size_t dd = den.size() - 1;
    const std::uint32_t lead_inv = inverse_mod(den.back(), p);
    while (num.size() >= den.size()) {
        std::uint32_t factor = static_cast<std::uint32_t>((std::uint64_t{num.back()} * lead_inv) % p);
        std::size_t shift = num.size() - 1 - dd;
        for (std::size_t i = 0; i < den.size(); ++i) {
            std::uint64_t sub = (std::uint64_t{factor} * den[i]) % p;
            num[shift + i] = static_cast<std::uint32_t>((num[shift + i] + p - sub) % p);
        }
        trim(num);
    }
    return num;
}

class GfArithmetic final : public RingArithmetic {
public:
    GfArithmetic(std::uint32_t p, std::uint32_t k, Coeffs modulus) : p_(p), k_(k), modulus_(std::move(modulus)) {}

    Elem add(Elem a, Elem b) const override {
        Coeffs x = decode(a), y = decode(b);
        for (std::uint32_t i = 0; i < k_; ++i) x[i] = (x[i] + y[i]) % p_;
        return encode(x);
    }
    Elem neg(Elem a) const override {
        Coeffs x = decode(a);
        for (auto& c : x) c = (p_ - c) % p_;
        return encode(x);
    }
    Elem mul(Elem a, Elem b) const override {
        Coeffs x = decode(a), y = decode(b);
        Coeffs prod(2 * k_, 0);
        for (std::uint32_t i = 0; i < k_; ++i) {
            for (std::uint32_t j = 0; j < k_; ++j) {
                prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{x[i]} * y[j]) % p_);
            }
        }
        Coeffs r = poly_rem(std::move(prod), modulus_, p_);
        r.resize(k_, 0);
        return encode(r);
    }

private:
    Coeffs decode(Elem a) const {
        Coeffs c(k_);
        for (std::uint32_t i = 0; i < k_; ++i) {
            c[i] = a % p_;
            a /= p_;
        }
        return c;
    }
    Elem encode(const Coeffs& c) const {
        Elem v = 0;
        for (std::uint32_t i = k_; i-- > 0;) v = v * p_ + c[i];
        return v;
    }

    std::uint32_t p_, k_;
    Coeffs modulus_;
};

class ProductArithmetic final : public RingArithmetic {
public:
    ProductArithmetic(RingPtr a, RingPtr b) : a_(std::move(a)), b_(std::move(b)), nb_(static_cast<Elem>(b_->order())) {}
    Elem add(Elem x, Elem y) const override {
        return a_->add(x / nb_, y / nb_) * nb_ + b_->add(x % nb_, y % nb_);
    }
    Elem mul(Elem x, Elem y) const override {
        return a_->mul(x / nb_, y / nb_) * nb_ + b_->mul(x % nb_, y % nb_);
    }
    Elem neg(Elem x) const override { return a_->neg(x / nb_) * nb_ + b_->neg(x % nb_); }

private:
    RingPtr a_, b_;
    Elem nb_;
};

class TrivialExtensionArithmetic final : public RingArithmetic {
public:
    TrivialExtensionArithmetic(RingPtr a, ModulePtr e)
        : a_(std::move(a)), e_(std::move(e)), ne_(static_cast<Elem>(e_->order())) {}
    Elem add(Elem x, Elem y) const override {
        return a_->add(x / ne_, y / ne_) * ne_ + e_->add(x % ne_, y % ne_);
    }
    // (a,e)(a',e') = (aa', ae' + a'e)
    Elem mul(Elem x, Elem y) const override {
        Elem a = x / ne_, e = x % ne_, b = y / ne_, f = y % ne_;
        return a_->mul(a, b) * ne_ + e_->add(e_->act(a, f), e_->act(b, e));
    }
    Elem neg(Elem x) const override { return a_->neg(x / ne_) * ne_ + e_->neg(x % ne_); }

private:
    RingPtr a_;
    ModulePtr e_;
    Elem ne_;
};

class QuotientArithmetic final : public RingArithmetic {
public:
    QuotientArithmetic(RingPtr parent, std::vector<Elem> class_of, std::vector<Elem> rep)
        : parent_(std::move(parent)), class_of_(std::move(class_of)), rep_(std::move(rep)) {}
    Elem add(Elem x, Elem y) const override { return class_of_[parent_->add(rep_[x], rep_[y])]; }
    Elem mul(Elem x, Elem y) const override { return class_of_[parent_->mul(rep_[x], rep_[y])]; }
    Elem neg(Elem x) const override { return class_of_[parent_->neg(rep_[x])]; }

private:
    RingPtr parent_;
    std::vector<Elem> class_of_;
    std::vector<Elem> rep_;
};

std::string join_literals(const FiniteRing& ring, const std::vector<Elem>& elems) {
    std::string out;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i) out += ",";
        out += ring.format(elems[i]);
    }
    return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p) {
    Coeffs f(poly.begin(), poly.end());
    for (auto& c : f) c %= p;
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t degree = f.size() - 1;
    if (degree == 1) return true;
    for (std::size_t d = 1; d <= degree / 2; ++d) {
        // monic divisors of degree d
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Coeffs q(d + 1);
            std::uint64_t rest = code;
            for (std::size_t i = 0; i < d; ++i) {
                q[i] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            q[d] = 1;
            if (poly_rem(f, q, p).empty()) return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> first_irreducible(std::uint32_t p, std::uint32_t k) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
        Coeffs q(k + 1);
        std::uint64_t rest = code;
        for (std::uint32_t i = 0; i < k; ++i) {
            q[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        q[k] = 1;
        if (is_irreducible_mod_p(q, p)) return q;
    }
    throw ArgumentError("no irreducible polynomial found");
}

RingPtr make_zmod(std::uint64_t n, Label label) {
    if (n < 2) throw ArgumentError("zmod modulus must be at least 2, got " + std::to_string(n));
    if (n > kMaxOrder) throw BoundError("zmod modulus " + std::to_string(n) + " exceeds ring order ceiling");
    RingProvenance prov;
    prov.kind = RingKind::zmod;
    prov.modulus = n;
    prov.description = "zmod(" + std::to_string(n) + ")";
    return std::make_shared<FiniteRing>(std::move(label), n, 1, std::make_shared<ZmodArithmetic>(n),
                                        integer_notation(n, true), std::move(prov));
}

RingPtr make_gf(std::uint32_t p, std::uint32_t k, std::span<const std::uint32_t> poly, Label label) {
    if (!is_prime(p)) throw ArgumentError("gf characteristic " + std::to_string(p) + " is not prime");
    if (k < 1) throw ArgumentError("gf degree must be at least 1");
    if (poly.size() != k + 1) {
        throw ArgumentError("gf(" + std::to_string(p) + "," + std::to_string(k) + ") needs " + std::to_string(k + 1) +
                            " polynomial coefficients, got " + std::to_string(poly.size()));
    }
    Coeffs f(poly.begin(), poly.end());
    for (auto& c : f) c %= p;
    if (f.back() == 0) throw ArgumentError("gf polynomial has degree below " + std::to_string(k));
    if (!is_irreducible_mod_p(f, p)) throw ArgumentError("gf polynomial is reducible mod " + std::to_string(p));
    const std::uint32_t lead_inv = inverse_mod(f.back(), p);
    for (auto& c : f) c = static_cast<std::uint32_t>((std::uint64_t{c} * lead_inv) % p);
    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < k; ++i) order *= p;
    if (order > FiniteRing::kDenseLimit) throw BoundError("gf order " + std::to_string(order) + " exceeds table limit");

    RingProvenance prov;
    prov.kind = RingKind::gf;
    prov.prime = p;
    prov.degree = k;
    prov.poly = f;
    prov.description = "gf(" + std::to_string(p) + "," + std::to_string(k) + ",poly=[";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) prov.description += ",";
        prov.description += std::to_string(f[i]);
    }
    prov.description += "])";
    return std::make_shared<FiniteRing>(std::move(label), order, 1, std::make_shared<GfArithmetic>(p, k, f),
                                        integer_notation(order, false), std::move(prov));
}

RingPtr make_product(RingPtr left, RingPtr right, Label label) {
    const std::size_t order = left->order() * right->order();
    if (order > kMaxOrder) throw BoundError("product order " + std::to_string(order) + " exceeds ring order ceiling");
    RingProvenance prov;
    prov.kind = RingKind::product;
    prov.description = "product(" + left->name() + ", " + right->name() + ")";
    prov.left = left;
    prov.right = right;
    Elem one = left->one() * static_cast<Elem>(right->order()) + right->one();
    auto notation = tuple_notation({left->notation_ptr(), right->notation_ptr()});
    auto arith = std::make_shared<ProductArithmetic>(left, right);
    return std::make_shared<FiniteRing>(std::move(label), order, one, std::move(arith), std::move(notation),
                                        std::move(prov));
}

ProductRing product_projections(const RingPtr& product) {
    const auto& prov = product->provenance();
    if (prov.kind != RingKind::product) throw ArgumentError(product->name() + " was not built as a product");
    const auto nb = static_cast<Elem>(prov.right->order());
    std::vector<Elem> to_left(product->order()), to_right(product->order());
    for (Elem x = 0; x < product->order(); ++x) {
        to_left[x] = x / nb;
        to_right[x] = x % nb;
    }
    return {product, RingHom(product, prov.left, std::move(to_left)), RingHom(product, prov.right, std::move(to_right))};
}

TrivialExtension make_trivial_extension(RingPtr base, ModulePtr module, Label label) {
    if (module->base().get() != base.get()) {
        throw ArgumentError("trivial extension: module " + module->name() + " is not over " + base->name());
    }
    const std::size_t order = base->order() * module->order();
    if (order > kMaxOrder) throw BoundError("trivial extension order " + std::to_string(order) + " exceeds ceiling");
    RingProvenance prov;
    prov.kind = RingKind::trivial_ext;
    prov.description = "trivext(" + base->name() + ", " + module->name() + ")";
    prov.left = base;
    prov.module = module;
    const auto ne = static_cast<Elem>(module->order());
    auto notation = tuple_notation({base->notation_ptr(), module->notation_ptr()});
    auto arith = std::make_shared<TrivialExtensionArithmetic>(base, module);
    auto ring = std::make_shared<const FiniteRing>(std::move(label), order, base->one() * ne, std::move(arith),
                                                   std::move(notation), std::move(prov));
    return trivial_extension_maps(ring);
}

TrivialExtension trivial_extension_maps(const RingPtr& ring) {
    const auto& prov = ring->provenance();
    if (prov.kind != RingKind::trivial_ext) throw ArgumentError(ring->name() + " was not built as a trivial extension");
    const auto ne = static_cast<Elem>(prov.module->order());
    std::vector<Elem> embed(prov.left->order()), project(ring->order());
    for (Elem a = 0; a < embed.size(); ++a) embed[a] = a * ne;
    for (Elem x = 0; x < project.size(); ++x) project[x] = x / ne;
    return {ring, RingHom(prov.left, ring, std::move(embed)), RingHom(ring, prov.left, std::move(project))};
}

QuotientRing make_quotient(const RingPtr& ring, const Ideal& ideal, Label label) {
    if (ideal.ring().get() != ring.get()) throw ArgumentError("quotient: ideal belongs to another ring");
    if (ideal.is_unit()) throw ArgumentError("quotient by the unit ideal of " + ring->name());
    if (ideal.is_zero() && label.name.empty() && !label.ring_spec) return {ring, RingHom::identity(ring)};

    const std::size_t n = ring->order();
    constexpr Elem kUnassigned = ~Elem{0};
    std::vector<Elem> class_of(n, kUnassigned);
    std::vector<Elem> rep;
    const std::vector<Elem> members = members_of(ideal.members());
    for (Elem e = 0; e < n; ++e) {
        if (class_of[e] != kUnassigned) continue;
        auto c = static_cast<Elem>(rep.size());
        rep.push_back(e);
        for (Elem m : members) class_of[ring->add(e, m)] = c;
    }
    RingProvenance prov;
    prov.kind = RingKind::quotient;
    prov.left = ring;
    prov.ideal = ideal.members();
    prov.description = "quotient(" + ring->name() + ", gens=[" + join_literals(*ring, ideal.generators()) + "])";
    const std::size_t order = rep.size();
    Elem one = class_of[ring->one()];
    auto notation = coset_notation(ring->notation_ptr(), class_of, rep);
    auto arith = std::make_shared<QuotientArithmetic>(ring, class_of, rep);
    auto quotient = std::make_shared<const FiniteRing>(std::move(label), order, one, std::move(arith),
                                                       std::move(notation), std::move(prov));
    return {quotient, RingHom(ring, quotient, std::move(class_of))};
}

}  // namespace pruefer
