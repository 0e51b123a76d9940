#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pruefer {

/// Element literal: an integer or a parenthesised tuple of literals, e.g. `3`, `(2,1)`, `((1,0),1)`.
struct Literal {
    std::variant<std::int64_t, std::vector<Literal>> value;

    Literal() : value(std::int64_t{0}) {}
    Literal(std::int64_t v) : value(v) {}  // NOLINT(google-explicit-constructor)
    explicit Literal(std::vector<Literal> items) : value(std::move(items)) {}

    bool is_integer() const noexcept { return std::holds_alternative<std::int64_t>(value); }
    std::int64_t integer() const { return std::get<std::int64_t>(value); }
    const std::vector<Literal>& items() const { return std::get<std::vector<Literal>>(value); }

    friend bool operator==(const Literal&, const Literal&) = default;
};

std::string to_string(const Literal& literal);

/// Parses a complete literal; trailing garbage is an error.
Literal parse_literal(std::string_view text);

/// Parses `[lit, lit, ...]`.
std::vector<Literal> parse_literal_list(std::string_view text);

}  // namespace pruefer
