#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "pruefer/ring_core/element.hpp"
#include "pruefer/ring_core/literal.hpp"

namespace pruefer {

/// Maps element indices to literals and back. Each ring and module carries one.
class ElementNotation {
public:
    virtual ~ElementNotation() = default;

    virtual std::size_t order() const = 0;
    virtual Literal format(Elem e) const = 0;
    /// Throws ArgumentError when the literal does not denote an element.
    virtual Elem parse(const Literal& literal) const = 0;

    std::string to_string(Elem e) const { return pruefer::to_string(format(e)); }
};

using NotationPtr = std::shared_ptr<const ElementNotation>;

/// Residues 0..n-1. With `reduce`, any integer is accepted and reduced mod n.
NotationPtr integer_notation(std::size_t n, bool reduce);

/// Mixed-radix tuples; the first component is most significant.
/// A one-part tuple formats as its bare component.
NotationPtr tuple_notation(std::vector<NotationPtr> parts);

/// Cosets written by their smallest representative in the parent notation.
/// `class_of` has one entry per parent element; `representative` one per class.
NotationPtr coset_notation(NotationPtr parent, std::vector<Elem> class_of,
                           std::vector<Elem> representative);

}  // namespace pruefer
