#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pruefer/ring_core/finite_module.hpp"
#include "pruefer/ring_core/finite_ring.hpp"
#include "pruefer/ring_core/literal.hpp"

namespace pruefer {

struct RingSpec;
struct ModuleSpec;
using RingSpecPtr = std::shared_ptr<const RingSpec>;
using ModuleSpecPtr = std::shared_ptr<const ModuleSpec>;

struct ZmodParams {
    std::uint64_t modulus = 0;
};
struct GfParams {
    std::uint32_t prime = 0;
    std::uint32_t degree = 0;
    std::vector<std::uint32_t> poly;
};
struct ProductParams {
    RingSpecPtr left, right;
};
struct QuotientParams {
    RingSpecPtr base;
    std::vector<Literal> gens;
};
struct TrivextParams {
    RingSpecPtr base;
    ModuleSpecPtr module;
};

/// A node of a ring construction tree.
struct RingSpec {
    std::string name;
    std::variant<ZmodParams, GfParams, ProductParams, QuotientParams, TrivextParams> params;

    RingKind kind() const noexcept;
};

struct FreeParams {
    RingSpecPtr ring;
    std::size_t rank = 0;
};
struct QuotModuleParams {
    RingSpecPtr ring;
    std::vector<Literal> gens;
};
struct SumParams {
    std::vector<ModuleSpecPtr> summands;
};

struct ModuleSpec {
    std::string name;
    std::variant<FreeParams, QuotModuleParams, SumParams> params;

    const RingSpecPtr& ring() const;
};

struct PolySpec {
    std::string name;
    std::vector<Literal> coeffs;
};

/// Every declaration in a spec file, in order. Polynomials refer to the target ring.
struct SpecDocument {
    std::map<std::string, RingSpecPtr, std::less<>> rings;
    std::map<std::string, ModuleSpecPtr, std::less<>> modules;
    std::vector<PolySpec> polys;
    std::vector<std::string> ring_order;  ///< ring names in declaration order

    /// The last declared ring, or the named one. Throws ArgumentError if absent.
    RingSpecPtr target(std::string_view name = {}) const;
};

/// Parses the line-oriented spec language. Statements end at a newline or `;`,
/// and `#` starts a comment. Throws ParseError with line/column on bad input.
SpecDocument parse_spec_document(std::string_view text);

/// The last ring declared in `text`.
RingSpecPtr parse_ring_spec(std::string_view text);

/// Renders a spec tree back into spec-file statements ending with the root.
std::string render_spec(const RingSpecPtr& spec);

/// Builds rings and modules from specs, sharing subtrees so that identical spec
/// nodes map to the same FiniteRing.
class RingBuilder {
public:
    RingPtr build(const RingSpecPtr& spec);
    ModulePtr build(const ModuleSpecPtr& spec);

private:
    std::map<const RingSpec*, RingPtr> rings_;
    std::map<const ModuleSpec*, ModulePtr> modules_;
};

RingPtr build_ring(const RingSpecPtr& spec);

}  // namespace pruefer
