#pragma once

#include <string>
#include <string_view>

namespace cosbench {

/// SHA-256 of `data`, lowercase hex.
std::string sha256_hex(std::string_view data);

/// Short content id: first 16 hex chars of SHA-256.
std::string short_hash(std::string_view data);

/// "sha256:<hex>" digest of a file's bytes. Throws on I/O failure.
std::string file_digest(const std::string& path);

} // namespace cosbench
