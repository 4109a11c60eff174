#include "botlint/zipio.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

#include <zlib.h>

namespace botlint::zipio {

namespace {

constexpr std::uint32_t kLocalHeaderSig = 0x04034b50;
constexpr std::uint32_t kCentralDirSig = 0x02014b50;
constexpr std::uint32_t kEndOfCentralDirSig = 0x06054b50;

std::uint16_t read_u16(const std::string& b, std::size_t off) {
    return static_cast<std::uint16_t>(static_cast<unsigned char>(b[off]) |
                                      (static_cast<unsigned char>(b[off + 1]) << 8));
}

std::uint32_t read_u32(const std::string& b, std::size_t off) {
    return static_cast<std::uint32_t>(static_cast<unsigned char>(b[off])) |
           (static_cast<std::uint32_t>(static_cast<unsigned char>(b[off + 1])) << 8) |
           (static_cast<std::uint32_t>(static_cast<unsigned char>(b[off + 2])) << 16) |
           (static_cast<std::uint32_t>(static_cast<unsigned char>(b[off + 3])) << 24);
}

std::string inflate_raw(const char* data, std::size_t size, std::size_t expected) {
    std::string out(expected, '\0');
    z_stream zs;
    std::memset(&zs, 0, sizeof(zs));
    // negative window bits: raw deflate stream, as stored in zip entries
    if (inflateInit2(&zs, -MAX_WBITS) != Z_OK)
        throw std::runtime_error("inflateInit2 failed");
    zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data));
    zs.avail_in = static_cast<uInt>(size);
    zs.next_out = reinterpret_cast<Bytef*>(out.data());
    zs.avail_out = static_cast<uInt>(out.size());
    int rc = inflate(&zs, Z_FINISH);
    inflateEnd(&zs);
    if (rc != Z_STREAM_END)
        throw std::runtime_error("corrupt deflate stream in zip entry");
    out.resize(out.size() - zs.avail_out);
    return out;
}

} // namespace

bool looks_like_zip(const std::string& bytes) {
    if (bytes.size() < 4)
        return false;
    std::uint32_t sig = read_u32(bytes, 0);
    return sig == kLocalHeaderSig || sig == kEndOfCentralDirSig;
}

std::vector<ZipEntry> list_entries(const std::string& bytes) {
    if (bytes.size() < 22)
        throw std::runtime_error("too small to be a zip archive");

    // End-of-central-directory record: scan backwards over the (possibly
    // comment-bearing) tail.
    std::size_t scan_start = bytes.size() - 22;
    std::size_t scan_floor = bytes.size() > 22 + 0xffff ? bytes.size() - 22 - 0xffff : 0;
    std::size_t eocd = std::string::npos;
    for (std::size_t off = scan_start + 1; off-- > scan_floor;) {
        if (read_u32(bytes, off) == kEndOfCentralDirSig) {
            eocd = off;
            break;
        }
    }
    if (eocd == std::string::npos)
        throw std::runtime_error("missing end-of-central-directory record");

    std::uint16_t entry_count = read_u16(bytes, eocd + 10);
    std::uint32_t dir_offset = read_u32(bytes, eocd + 16);

    std::vector<ZipEntry> entries;
    entries.reserve(entry_count);
    std::size_t off = dir_offset;
    for (std::uint16_t i = 0; i < entry_count; ++i) {
        if (off + 46 > bytes.size() || read_u32(bytes, off) != kCentralDirSig)
            throw std::runtime_error("corrupt central directory");
        ZipEntry e;
        e.method = read_u16(bytes, off + 10);
        e.crc32 = read_u32(bytes, off + 16);
        e.compressed_size = read_u32(bytes, off + 20);
        e.uncompressed_size = read_u32(bytes, off + 24);
        std::uint16_t name_len = read_u16(bytes, off + 28);
        std::uint16_t extra_len = read_u16(bytes, off + 30);
        std::uint16_t comment_len = read_u16(bytes, off + 32);
        e.local_header_offset = read_u32(bytes, off + 42);
        if (off + 46 + name_len > bytes.size())
            throw std::runtime_error("corrupt central directory entry name");
        e.name = bytes.substr(off + 46, name_len);
        entries.push_back(std::move(e));
        off += 46 + name_len + extra_len + comment_len;
    }
    return entries;
}

std::string read_entry(const std::string& bytes, const ZipEntry& entry) {
    std::size_t off = entry.local_header_offset;
    if (off + 30 > bytes.size() || read_u32(bytes, off) != kLocalHeaderSig)
        throw std::runtime_error("corrupt local header for " + entry.name);
    std::uint16_t name_len = read_u16(bytes, off + 26);
    std::uint16_t extra_len = read_u16(bytes, off + 28);
    std::size_t data_off = off + 30 + name_len + extra_len;
    if (data_off + entry.compressed_size > bytes.size())
        throw std::runtime_error("truncated data for " + entry.name);

    std::string out;
    switch (entry.method) {
    case 0:
        out = bytes.substr(data_off, entry.compressed_size);
        break;
    case 8:
        out = inflate_raw(bytes.data() + data_off, entry.compressed_size,
                          entry.uncompressed_size);
        break;
    default:
        throw std::runtime_error("unsupported compression method for " + entry.name);
    }
    if (out.size() != entry.uncompressed_size)
        throw std::runtime_error("size mismatch for " + entry.name);
    if (::crc32(0, reinterpret_cast<const Bytef*>(out.data()),
                static_cast<uInt>(out.size())) != entry.crc32)
        throw std::runtime_error("crc mismatch for " + entry.name);
    return out;
}

} // namespace botlint::zipio
