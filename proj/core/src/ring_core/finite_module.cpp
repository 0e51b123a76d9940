#include "pruefer/ring_core/finite_module.hpp"

#include "pruefer/errors.hpp"
#include "pruefer/ideal_lattice/ideal.hpp"
#include "pruefer/ring_core/constructions.hpp"
#include "pruefer/ring_core/elements.hpp"

namespace pruefer {

FiniteModule::FiniteModule(Label label, RingPtr base, std::size_t order, std::vector<std::uint16_t> add,
                           std::vector<std::uint16_t> neg, std::vector<std::uint16_t> act, NotationPtr notation,
                           ModuleProvenance provenance)
    : name_(std::move(label.name)),
      base_(std::move(base)),
      order_(order),
      add_(std::move(add)),
      neg_(std::move(neg)),
      act_(std::move(act)),
      notation_(std::move(notation)),
      provenance_(std::move(provenance)) {
    if (label.module_spec) provenance_.spec = std::move(label.module_spec);
    if (name_.empty()) name_ = provenance_.description;
}

namespace {

void check_order(std::size_t order) {
    if (order == 0 || order > FiniteModule::kOrderLimit) {
        throw BoundError("module order " + std::to_string(order) + " outside [1, " +
                         std::to_string(FiniteModule::kOrderLimit) + "]");
    }
}

}  // namespace

ModulePtr make_free_module(RingPtr ring, std::size_t rank, Label label) {
    if (rank == 0) throw ArgumentError("free module of rank 0 requested");
    const std::size_t n = ring->order();
    std::size_t order = 1;
    for (std::size_t i = 0; i < rank; ++i) {
        order *= n;
        check_order(order);
    }
    std::vector<std::uint16_t> add(order * order), neg(order), act(n * order);
    std::vector<Elem> x(rank), y(rank);
    auto decode = [&](std::size_t idx, std::vector<Elem>& out) {
        for (std::size_t i = rank; i-- > 0;) {
            out[i] = static_cast<Elem>(idx % n);
            idx /= n;
        }
    };
    auto encode = [&](const std::vector<Elem>& v) {
        std::size_t idx = 0;
        for (Elem c : v) idx = idx * n + c;
        return static_cast<std::uint16_t>(idx);
    };
    std::vector<Elem> z(rank);
    for (std::size_t e = 0; e < order; ++e) {
        decode(e, x);
        for (std::size_t i = 0; i < rank; ++i) z[i] = ring->neg(x[i]);
        neg[e] = encode(z);
        for (std::size_t f = 0; f < order; ++f) {
            decode(f, y);
            for (std::size_t i = 0; i < rank; ++i) z[i] = ring->add(x[i], y[i]);
            add[e * order + f] = encode(z);
        }
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t i = 0; i < rank; ++i) z[i] = ring->mul(static_cast<Elem>(a), x[i]);
            act[a * order + e] = encode(z);
        }
    }
    std::vector<NotationPtr> parts(rank, ring->notation_ptr());
    ModuleProvenance prov;
    prov.kind = ModuleKind::free;
    prov.rank = rank;
    prov.description = "free(" + ring->name() + ", " + std::to_string(rank) + ")";
    return std::make_shared<FiniteModule>(std::move(label), std::move(ring), order, std::move(add), std::move(neg),
                                          std::move(act), tuple_notation(std::move(parts)), std::move(prov));
}

ModulePtr make_quotient_module(RingPtr ring, const Ideal& ideal, Label label) {
    if (ideal.ring().get() != ring.get()) throw ArgumentError("quotient module: ideal belongs to another ring");
    if (ideal.is_unit()) throw ArgumentError("quotient module A/A is the zero module");
    auto q = make_quotient(ring, ideal);
    const FiniteRing& quot = *q.ring;
    const std::size_t order = quot.order();
    check_order(order);
    const std::size_t n = ring->order();
    std::vector<std::uint16_t> add(order * order), neg(order), act(n * order);
    for (std::size_t e = 0; e < order; ++e) {
        neg[e] = static_cast<std::uint16_t>(quot.neg(static_cast<Elem>(e)));
        for (std::size_t f = 0; f < order; ++f) {
            add[e * order + f] = static_cast<std::uint16_t>(quot.add(static_cast<Elem>(e), static_cast<Elem>(f)));
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        Elem image = q.projection(static_cast<Elem>(a));
        for (std::size_t e = 0; e < order; ++e) {
            act[a * order + e] = static_cast<std::uint16_t>(quot.mul(image, static_cast<Elem>(e)));
        }
    }
    ModuleProvenance prov;
    prov.kind = ModuleKind::quotient;
    prov.ideal = ideal.members();
    prov.description = "quot_module(" + ring->name() + ", gens=[";
    for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
        if (i) prov.description += ",";
        prov.description += ring->format(ideal.generators()[i]);
    }
    prov.description += "])";
    return std::make_shared<FiniteModule>(std::move(label), std::move(ring), order, std::move(add), std::move(neg),
                                          std::move(act), quot.notation_ptr(), std::move(prov));
}

ModulePtr make_direct_sum(std::span<const ModulePtr> summands, Label label) {
    if (summands.empty()) throw ArgumentError("direct sum of no modules");
    const RingPtr& ring = summands.front()->base();
    std::size_t order = 1;
    for (const auto& m : summands) {
        if (m->base().get() != ring.get()) throw ArgumentError("direct sum: summands over different rings");
        order *= m->order();
        check_order(order);
    }
    const std::size_t k = summands.size();
    const std::size_t n = ring->order();
    std::vector<std::size_t> radix(k);
    for (std::size_t i = 0; i < k; ++i) radix[i] = summands[i]->order();
    auto decode = [&](std::size_t idx, std::vector<Elem>& out) {
        for (std::size_t i = k; i-- > 0;) {
            out[i] = static_cast<Elem>(idx % radix[i]);
            idx /= radix[i];
        }
    };
    auto encode = [&](const std::vector<Elem>& v) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < k; ++i) idx = idx * radix[i] + v[i];
        return static_cast<std::uint16_t>(idx);
    };
    std::vector<std::uint16_t> add(order * order), neg(order), act(n * order);
    std::vector<Elem> x(k), y(k), z(k);
    for (std::size_t e = 0; e < order; ++e) {
        decode(e, x);
        for (std::size_t i = 0; i < k; ++i) z[i] = summands[i]->neg(x[i]);
        neg[e] = encode(z);
        for (std::size_t f = 0; f < order; ++f) {
            decode(f, y);
            for (std::size_t i = 0; i < k; ++i) z[i] = summands[i]->add(x[i], y[i]);
            add[e * order + f] = encode(z);
        }
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t i = 0; i < k; ++i) z[i] = summands[i]->act(static_cast<Elem>(a), x[i]);
            act[a * order + e] = encode(z);
        }
    }
    std::vector<NotationPtr> parts;
    ModuleProvenance prov;
    prov.kind = ModuleKind::direct_sum;
    prov.description = "sum(";
    for (std::size_t i = 0; i < k; ++i) {
        parts.push_back(summands[i]->notation_ptr());
        prov.summands.push_back(summands[i]);
        if (i) prov.description += ",";
        prov.description += summands[i]->name();
    }
    prov.description += ")";
    // A one-summand "sum" still reads as a tuple so literals stay unambiguous.
    NotationPtr notation = k == 1 ? summands[0]->notation_ptr() : tuple_notation(std::move(parts));
    return std::make_shared<FiniteModule>(std::move(label), ring, order, std::move(add), std::move(neg),
                                          std::move(act), std::move(notation), std::move(prov));
}

ModulePtr make_residue_space(RingPtr ring, std::size_t n, Label label) {
    if (n == 0) throw ArgumentError("residue space of dimension 0 requested; a nonzero module is required");
    auto maximal = is_local(ring);
    if (!maximal) throw ArgumentError("residue space requires a local ring; " + ring->name() + " is not local");
    auto residue = make_quotient_module(ring, *maximal);
    if (n == 1) {
        if (!label.name.empty() || label.module_spec) {
            std::vector<ModulePtr> one{residue};
            return make_direct_sum(one, std::move(label));
        }
        return residue;
    }
    std::vector<ModulePtr> parts(n, residue);
    return make_direct_sum(parts, std::move(label));
}

}  // namespace pruefer
