#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace botlint::zipio {

struct ZipEntry {
    std::string name;            // path within the archive, '/'-separated
    std::uint16_t method = 0;    // 0 = stored, 8 = deflate
    std::uint32_t compressed_size = 0;
    std::uint32_t uncompressed_size = 0;
    std::uint32_t local_header_offset = 0;
    std::uint32_t crc32 = 0;
};

// True when the buffer starts with a zip local-file or end-of-central-directory
// signature.
bool looks_like_zip(const std::string& bytes);

// Central-directory listing, in directory order. Throws std::runtime_error on a
// structurally broken archive.
std::vector<ZipEntry> list_entries(const std::string& bytes);

// Extracts one entry (stored and deflate methods only).
std::string read_entry(const std::string& bytes, const ZipEntry& entry);

} // namespace botlint::zipio
