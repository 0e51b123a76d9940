#include "pruefer/ring_core/literal.hpp"

#include <cctype>
#include <charconv>

#include "pruefer/errors.hpp"

namespace pruefer {

namespace {

class LiteralReader {
public:
    explicit LiteralReader(std::string_view text) : text_(text) {}

    Literal read() {
        skip_space();
        if (pos_ >= text_.size()) fail("expected element literal");
        if (text_[pos_] == '(') {
            ++pos_;
            std::vector<Literal> items;
            items.push_back(read());
            skip_space();
            while (pos_ < text_.size() && text_[pos_] == ',') {
                ++pos_;
                items.push_back(read());
                skip_space();
            }
            expect(')');
            return Literal(std::move(items));
        }
        return Literal(read_integer());
    }

    std::vector<Literal> read_list() {
        skip_space();
        expect('[');
        std::vector<Literal> items;
        skip_space();
        if (peek() == ']') {
            ++pos_;
            return items;
        }
        items.push_back(read());
        skip_space();
        while (peek() == ',') {
            ++pos_;
            items.push_back(read());
            skip_space();
        }
        expect(']');
        return items;
    }

    void finish() {
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_space();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::int64_t read_integer() {
        skip_space();
        std::size_t start = pos_;
        if (peek() == '-' || peek() == '+') ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::int64_t value = 0;
        const char* first = text_.data() + start;
        if (*first == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, value);
        if (ec != std::errc() || ptr != text_.data() + pos_ || pos_ == start) {
            pos_ = start;
            fail("expected integer");
        }
        return value;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Literal& literal) {
    if (literal.is_integer()) return std::to_string(literal.integer());
    std::string out = "(";
    bool first = true;
    for (const auto& item : literal.items()) {
        if (!first) out += ",";
        out += to_string(item);
        first = false;
    }
    return out + ")";
}

Literal parse_literal(std::string_view text) {
    LiteralReader reader(text);
    Literal lit = reader.read();
    reader.finish();
    return lit;
}

std::vector<Literal> parse_literal_list(std::string_view text) {
    LiteralReader reader(text);
    auto items = reader.read_list();
    reader.finish();
    return items;
}

}  // namespace pruefer
