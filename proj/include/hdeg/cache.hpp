#ifndef HDEG_CACHE_HPP
#define HDEG_CACHE_HPP

#include <array>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "hdeg/groebner.hpp"

namespace hdeg {

namespace detail {

/// Plain SHA-256 (FIPS 180-4); used for content addressing only.
class Sha256 {
public:
    Sha256() { reset(); }

    void reset() {
        h_ = {0x6a09e667u, 0xbb67ae85u, 0x3c6ef372u, 0xa54ff53au,
              0x510e527fu, 0x9b05688cu, 0x1f83d9abu, 0x5be0cd19u};
        buffer_len_ = 0;
        total_ = 0;
    }

    void update(const void* data, std::size_t len) {
        const auto* p = static_cast<const unsigned char*>(data);
        total_ += len;
        while (len > 0) {
            std::size_t take = std::min<std::size_t>(64 - buffer_len_, len);
            std::memcpy(buffer_.data() + buffer_len_, p, take);
            buffer_len_ += take;
            p += take;
            len -= take;
            if (buffer_len_ == 64) {
                process(buffer_.data());
                buffer_len_ = 0;
            }
        }
    }

    std::string hex_digest() {
        uint64_t bits = total_ * 8;
        unsigned char pad = 0x80;
        update(&pad, 1);
        unsigned char zero = 0;
        while (buffer_len_ != 56) update(&zero, 1);
        unsigned char lenb[8];
        for (int i = 0; i < 8; ++i) lenb[i] = static_cast<unsigned char>(bits >> (56 - 8 * i));
        update(lenb, 8);
        static const char* hexd = "0123456789abcdef";
        std::string out;
        for (uint32_t h : h_)
            for (int i = 28; i >= 0; i -= 4) out += hexd[(h >> i) & 0xf];
        return out;
    }

private:
    static uint32_t rotr(uint32_t x, int n) { return (x >> n) | (x << (32 - n)); }

    void process(const unsigned char* block) {
        static const uint32_t K[64] = {
            0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1,
            0x923f82a4, 0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3,
            0x72be5d74, 0x80deb1fe, 0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786,
            0x0fc19dc6, 0x240ca1cc, 0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da,
            0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147,
            0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc, 0x53380d13,
            0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
            0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070,
            0x19a4c116, 0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a,
            0x5b9cca4f, 0x682e6ff3, 0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208,
            0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2};
        uint32_t w[64];
        for (int i = 0; i < 16; ++i)
            w[i] = (uint32_t(block[4 * i]) << 24) | (uint32_t(block[4 * i + 1]) << 16) |
                   (uint32_t(block[4 * i + 2]) << 8) | uint32_t(block[4 * i + 3]);
        for (int i = 16; i < 64; ++i) {
            uint32_t s0 = rotr(w[i - 15], 7) ^ rotr(w[i - 15], 18) ^ (w[i - 15] >> 3);
            uint32_t s1 = rotr(w[i - 2], 17) ^ rotr(w[i - 2], 19) ^ (w[i - 2] >> 10);
            w[i] = w[i - 16] + s0 + w[i - 7] + s1;
        }
        uint32_t a = h_[0], b = h_[1], c = h_[2], d = h_[3];
        uint32_t e = h_[4], f = h_[5], g = h_[6], h = h_[7];
        for (int i = 0; i < 64; ++i) {
            uint32_t S1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
            uint32_t ch = (e & f) ^ (~e & g);
            uint32_t t1 = h + S1 + ch + K[i] + w[i];
            uint32_t S0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
            uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
            uint32_t t2 = S0 + maj;
            h = g; g = f; f = e; e = d + t1;
            d = c; c = b; b = a; a = t1 + t2;
        }
        h_[0] += a; h_[1] += b; h_[2] += c; h_[3] += d;
        h_[4] += e; h_[5] += f; h_[6] += g; h_[7] += h;
    }

    std::array<uint32_t, 8> h_;
    std::array<unsigned char, 64> buffer_;
    std::size_t buffer_len_ = 0;
    uint64_t total_ = 0;
};

} // namespace detail

inline std::string sha256_hex(const std::string& data) {
    detail::Sha256 s;
    s.update(data.data(), data.size());
    return s.hex_digest();
}

/// Content-addressed on-disk cache: <dir>/<hash[0:2]>/<hash>.bin with a
/// format-version header; stores are atomic (write temp, rename); corrupt
/// entries read as misses and are evicted.
class DiskCache {
public:
    static constexpr const char* format_header = "HDEGCACHE 1\n";

    explicit DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {
        std::filesystem::create_directories(dir_);
    }

    std::optional<std::string> lookup(const std::string& key) {
        std::filesystem::path p = path_for(sha256_hex(key));
        std::ifstream in(p, std::ios::binary);
        if (!in) { ++misses_; return std::nullopt; }
        std::string content((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
        in.close();
        std::string header(format_header);
        if (content.size() < header.size() || content.compare(0, header.size(), header) != 0) {
            std::error_code ec;
            std::filesystem::remove(p, ec); // corrupt entry: evict
            ++misses_;
            return std::nullopt;
        }
        ++hits_;
        return content.substr(header.size());
    }

    void store(const std::string& key, const std::string& value) {
        std::string hash = sha256_hex(key);
        std::filesystem::path p = path_for(hash);
        std::error_code ec;
        std::filesystem::create_directories(p.parent_path(), ec);
        std::filesystem::path tmp = p;
        tmp += ".tmp." + std::to_string(
            std::hash<std::string>{}(hash) ^ static_cast<std::size_t>(::getpid()));
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) return; // cache failures are silent: purely an accelerator
            out << format_header << value;
        }
        std::filesystem::rename(tmp, p, ec);
        if (ec) std::filesystem::remove(tmp, ec);
    }

    long hits() const { return hits_; }
    long misses() const { return misses_; }

private:
    std::filesystem::path path_for(const std::string& hash) const {
        return dir_ / hash.substr(0, 2) / (hash + ".bin");
    }

    std::filesystem::path dir_;
    long hits_ = 0;
    long misses_ = 0;
};

/// Routes basis computations through a disk cache. The cache object must
/// outlive the computations; pass nullptr to uninstall.
inline void install_cache(DiskCache* cache) {
    auto& hooks = gb_cache_hooks();
    if (!cache) {
        hooks.lookup = nullptr;
        hooks.store = nullptr;
        return;
    }
    hooks.lookup = [cache](const std::string& key) { return cache->lookup(key); };
    hooks.store = [cache](const std::string& key, const std::string& value) {
        cache->store(key, value);
    };
}

} // namespace hdeg

#endif
