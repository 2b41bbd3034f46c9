#include "edist/text.hpp"

#include <algorithm>

namespace edist {

Text text_from_string(std::string_view s) {
    std::vector<Symbol> syms(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        syms[i] = static_cast<unsigned char>(s[i]);
    return Text(std::move(syms), 256);
}

Text text_from_bytes(const std::string& bytes, Symbol alphabet_size) {
    if (alphabet_size > 256)
        throw std::invalid_argument("raw byte codec requires alphabet <= 256");
    std::vector<Symbol> syms(bytes.size());
    for (std::size_t i = 0; i < bytes.size(); ++i)
        syms[i] = static_cast<unsigned char>(bytes[i]);
    Text t(std::move(syms), alphabet_size == 0 ? 256 : alphabet_size);
    return t;
}

std::string text_to_bytes(const Text& t) {
    if (t.alphabet_size > 256)
        throw std::invalid_argument("raw byte codec requires alphabet <= 256");
    std::string out(t.size(), '\0');
    for (std::size_t i = 0; i < t.size(); ++i)
        out[i] = static_cast<char>(t.symbols[i] & 0xff);
    return out;
}

Text text_from_hex16(const std::string& bytes, Symbol alphabet_size) {
    if (bytes.size() % 2 != 0)
        throw std::invalid_argument("hex16 codec requires an even byte count");
    std::vector<Symbol> syms(bytes.size() / 2);
    for (std::size_t i = 0; i < syms.size(); ++i) {
        Symbol hi = static_cast<unsigned char>(bytes[2 * i]);
        Symbol lo = static_cast<unsigned char>(bytes[2 * i + 1]);
        syms[i] = (hi << 8) | lo;
    }
    return Text(std::move(syms), alphabet_size);
}

std::string text_to_hex16(const Text& t) {
    std::string out(2 * t.size(), '\0');
    for (std::size_t i = 0; i < t.size(); ++i) {
        out[2 * i] = static_cast<char>((t.symbols[i] >> 8) & 0xff);
        out[2 * i + 1] = static_cast<char>(t.symbols[i] & 0xff);
    }
    return out;
}

void unify_alphabet(Text& x, Text& y) {
    Symbol sigma = std::max(x.alphabet_size, y.alphabet_size);
    x.alphabet_size = sigma;
    y.alphabet_size = sigma;
}

}  // namespace edist
