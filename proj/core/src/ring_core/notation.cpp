#include "pruefer/ring_core/notation.hpp"

#include "pruefer/errors.hpp"

namespace pruefer {

namespace {

class IntegerNotation final : public ElementNotation {
public:
    IntegerNotation(std::size_t n, bool reduce) : n_(n), reduce_(reduce) {}

    std::size_t order() const override { return n_; }
    Literal format(Elem e) const override { return Literal(static_cast<std::int64_t>(e)); }

    Elem parse(const Literal& literal) const override {
        if (!literal.is_integer()) throw ArgumentError("expected an integer literal, got " + pruefer::to_string(literal));
        std::int64_t v = literal.integer();
        auto n = static_cast<std::int64_t>(n_);
        if (reduce_) return static_cast<Elem>(((v % n) + n) % n);
        if (v < 0 || v >= n) {
            throw ArgumentError("literal " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")");
        }
        return static_cast<Elem>(v);
    }

private:
    std::size_t n_;
    bool reduce_;
};

class TupleNotation final : public ElementNotation {
public:
    explicit TupleNotation(std::vector<NotationPtr> parts) : parts_(std::move(parts)) {
        order_ = 1;
        for (const auto& p : parts_) order_ *= p->order();
    }

    std::size_t order() const override { return order_; }

    Literal format(Elem e) const override {
        if (parts_.size() == 1) return parts_[0]->format(e);
        std::vector<Literal> items(parts_.size());
        std::size_t rest = e;
        for (std::size_t i = parts_.size(); i-- > 0;) {
            std::size_t radix = parts_[i]->order();
            items[i] = parts_[i]->format(static_cast<Elem>(rest % radix));
            rest /= radix;
        }
        return Literal(std::move(items));
    }

    Elem parse(const Literal& literal) const override {
        if (parts_.size() == 1) {
            if (!literal.is_integer() && literal.items().size() == 1) return parts_[0]->parse(literal.items()[0]);
            return parts_[0]->parse(literal);
        }
        if (literal.is_integer() || literal.items().size() != parts_.size()) {
            throw ArgumentError("expected a " + std::to_string(parts_.size()) + "-tuple, got " + pruefer::to_string(literal));
        }
        std::size_t index = 0;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            index = index * parts_[i]->order() + parts_[i]->parse(literal.items()[i]);
        }
        return static_cast<Elem>(index);
    }

private:
    std::vector<NotationPtr> parts_;
    std::size_t order_;
};

class CosetNotation final : public ElementNotation {
public:
    CosetNotation(NotationPtr parent, std::vector<Elem> class_of, std::vector<Elem> representative)
        : parent_(std::move(parent)), class_of_(std::move(class_of)), rep_(std::move(representative)) {}

    std::size_t order() const override { return rep_.size(); }
    Literal format(Elem e) const override { return parent_->format(rep_[e]); }
    Elem parse(const Literal& literal) const override { return class_of_[parent_->parse(literal)]; }

private:
    NotationPtr parent_;
    std::vector<Elem> class_of_;
    std::vector<Elem> rep_;
};

}  // namespace

NotationPtr integer_notation(std::size_t n, bool reduce) { return std::make_shared<IntegerNotation>(n, reduce); }

NotationPtr tuple_notation(std::vector<NotationPtr> parts) {
    return std::make_shared<TupleNotation>(std::move(parts));
}

NotationPtr coset_notation(NotationPtr parent, std::vector<Elem> class_of, std::vector<Elem> representative) {
    return std::make_shared<CosetNotation>(std::move(parent), std::move(class_of), std::move(representative));
}

}  // namespace pruefer
