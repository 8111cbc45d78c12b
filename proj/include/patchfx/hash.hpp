#pragma once

#include <string>
#include <string_view>

namespace patchfx {

// Lowercase hex SHA-256 of a byte string. Used for input fingerprints and
// frame identity in serialized outputs.
std::string sha256_hex(std::string_view data);

// Hash of a file's raw bytes; throws std::runtime_error if unreadable.
std::string sha256_file_hex(const std::string& path);

}  // namespace patchfx
