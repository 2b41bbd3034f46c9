#ifndef EDIST_IO_HPP
#define EDIST_IO_HPP

#include <string>

#include "edist/text.hpp"

namespace edist {

enum class Codec { kRaw, kHex16 };

Codec parse_codec(const std::string& name);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& data);

Text read_text_file(const std::string& path, Codec codec = Codec::kRaw,
                    Symbol alphabet_size = 0);
void write_text_file(const std::string& path, const Text& t,
                     Codec codec = Codec::kRaw);

}  // namespace edist

#endif
