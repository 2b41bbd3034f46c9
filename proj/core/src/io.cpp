#include "edist/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace edist {

Codec parse_codec(const std::string& name) {
    if (name == "raw") return Codec::kRaw;
    if (name == "hex16") return Codec::kHex16;
    throw std::invalid_argument("unknown codec: " + name);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

Text read_text_file(const std::string& path, Codec codec, Symbol alphabet_size) {
    const std::string data = read_file(path);
    if (codec == Codec::kRaw)
        return text_from_bytes(data, alphabet_size == 0 ? 256 : alphabet_size);
    return text_from_hex16(data, alphabet_size == 0 ? 65536 : alphabet_size);
}

void write_text_file(const std::string& path, const Text& t, Codec codec) {
    write_file(path, codec == Codec::kRaw ? text_to_bytes(t) : text_to_hex16(t));
}

}  // namespace edist
