#include <openssl/sha.h>

#include <array>
#include <cstring>
#include <fstream>
#include <string>

#include "dlab/arith.hpp"
#include "dlab/errors.hpp"

namespace dlab::arith {

namespace {

constexpr std::array<char, 4> kMagic = {'D', 'L', 'A', 'B'};
constexpr std::size_t kHeaderBytes = 4 + 4 + 8;
constexpr std::size_t kChecksumBytes = 8;

std::array<unsigned char, kChecksumBytes> payload_checksum(std::span<const std::uint8_t> payload) {
  std::array<unsigned char, SHA256_DIGEST_LENGTH> digest{};
  SHA256(payload.data(), payload.size(), digest.data());
  std::array<unsigned char, kChecksumBytes> out{};
  std::memcpy(out.data(), digest.data(), kChecksumBytes);
  return out;
}

template <typename UInt>
void put_le(std::ostream& os, UInt value) {
  std::array<char, sizeof(UInt)> bytes{};
  for (std::size_t i = 0; i < sizeof(UInt); ++i) bytes[i] = static_cast<char>((value >> (8 * i)) & 0xFF);
  os.write(bytes.data(), bytes.size());
}

template <typename UInt>
UInt get_le(const unsigned char* bytes) {
  UInt value = 0;
  for (std::size_t i = 0; i < sizeof(UInt); ++i) value |= static_cast<UInt>(bytes[i]) << (8 * i);
  return value;
}

}  // namespace

void save_cache(const FactorTable& table, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw CacheError(CacheError::Kind::kIo, "save_cache: cannot open " + path.string());
  const auto payload = table.omega_values();
  os.write(kMagic.data(), kMagic.size());
  put_le<std::uint32_t>(os, kCacheVersion);
  put_le<std::uint64_t>(os, table.limit());
  os.write(reinterpret_cast<const char*>(payload.data()), static_cast<std::streamsize>(payload.size()));
  const auto checksum = payload_checksum(payload);
  os.write(reinterpret_cast<const char*>(checksum.data()), checksum.size());
  if (!os) throw CacheError(CacheError::Kind::kIo, "save_cache: write failed for " + path.string());
}

FactorTable load_cache(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw CacheError(CacheError::Kind::kIo, "load_cache: cannot open " + path.string());

  std::array<unsigned char, kHeaderBytes> header{};
  is.read(reinterpret_cast<char*>(header.data()), header.size());
  if (is.gcount() < 4) throw CacheError(CacheError::Kind::kTruncated, "load_cache: file shorter than magic");
  if (std::memcmp(header.data(), kMagic.data(), kMagic.size()) != 0) {
    throw CacheError(CacheError::Kind::kBadMagic, "load_cache: bad magic in " + path.string());
  }
  if (static_cast<std::size_t>(is.gcount()) < header.size()) {
    throw CacheError(CacheError::Kind::kTruncated, "load_cache: truncated header");
  }
  const auto version = get_le<std::uint32_t>(header.data() + 4);
  if (version != kCacheVersion) {
    throw CacheError(CacheError::Kind::kVersionMismatch,
                     "load_cache: version " + std::to_string(version) + ", expected " +
                         std::to_string(kCacheVersion));
  }
  const auto limit = get_le<std::uint64_t>(header.data() + 8);
  if (limit == 0 || limit > kMaxSieveLimit) {
    throw CacheError(CacheError::Kind::kTruncated, "load_cache: implausible limit " + std::to_string(limit));
  }

  std::vector<std::uint8_t> omega(limit);
  is.read(reinterpret_cast<char*>(omega.data()), static_cast<std::streamsize>(limit));
  if (static_cast<std::uint64_t>(is.gcount()) != limit) {
    throw CacheError(CacheError::Kind::kTruncated, "load_cache: payload shorter than X = " + std::to_string(limit));
  }
  std::array<unsigned char, kChecksumBytes> stored{};
  is.read(reinterpret_cast<char*>(stored.data()), stored.size());
  if (static_cast<std::size_t>(is.gcount()) != stored.size()) {
    throw CacheError(CacheError::Kind::kTruncated, "load_cache: missing checksum");
  }
  if (stored != payload_checksum(omega)) {
    throw CacheError(CacheError::Kind::kChecksum, "load_cache: checksum mismatch in " + path.string());
  }
  return FactorTable(limit, {}, std::move(omega));
}

}  // namespace dlab::arith
