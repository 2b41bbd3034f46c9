#ifndef EDIST_TEXT_HPP
#define EDIST_TEXT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace edist {

using Symbol = std::uint32_t;

// A finite sequence of symbols over a small integer alphabet. Every symbol
// code must be < alphabet_size; the codes are logical, not bytes, so
// alphabets above 256 (up to 2^16) are representable.
struct Text {
    std::vector<Symbol> symbols;
    Symbol alphabet_size = 0;

    Text() = default;
    Text(std::vector<Symbol> syms, Symbol sigma)
        : symbols(std::move(syms)), alphabet_size(sigma) {
        validate();
    }

    std::size_t size() const { return symbols.size(); }
    bool empty() const { return symbols.empty(); }
    Symbol operator[](std::size_t i) const { return symbols[i]; }

    void validate() const {
        for (Symbol s : symbols)
            if (s >= alphabet_size)
                throw std::invalid_argument("Text: symbol code out of alphabet");
    }

    bool operator==(const Text& other) const {
        return symbols == other.symbols;
    }
};

// Convenience constructor for tests: one byte per symbol, alphabet 256.
Text text_from_string(std::string_view s);

// Raw byte codec: one byte per code, requires alphabet_size <= 256.
Text text_from_bytes(const std::string& bytes, Symbol alphabet_size = 256);
std::string text_to_bytes(const Text& t);

// hex16 codec: two bytes per code, big-endian, for logical alphabets up to
// 2^16.
Text text_from_hex16(const std::string& bytes, Symbol alphabet_size = 65536);
std::string text_to_hex16(const Text& t);

// Rescales both texts onto a common alphabet (the max of the two).
void unify_alphabet(Text& x, Text& y);

}  // namespace edist

#endif
