#include "c2/primes.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <string>

#include "c2/error.hpp"

namespace c2 {

bool PrimeTable::is_prime(u64 n) const {
    if (empty() || n < lo_ || n > hi_) {
        throw RangeError("insufficient-table-range",
                         "prime table [" + std::to_string(lo_) + ", " + std::to_string(hi_) +
                             "] does not contain " + std::to_string(n),
                         std::to_string(n));
    }
    return test(n - lo_);
}

u64 PrimeTable::next_set(u64 index) const {
    const u64 n = span();
    if (index >= n) return n;
    u64 w = index / 64;
    u64 bits = words_[w] & (~u64{0} << (index % 64));
    while (bits == 0) {
        if (++w == words_.size()) return n;
        bits = words_[w];
    }
    return std::min(n, w * 64 + static_cast<u64>(std::countr_zero(bits)));
}

u64 PrimeTable::count() const {
    u64 total = 0;
    for (u64 w : words_) total += static_cast<u64>(std::popcount(w));
    return total;
}

PrimeTable PrimeTable::slice(u64 a, u64 b) const {
    if (a > b || !covers(a, b)) {
        throw RangeError("insufficient-table-range", "slice outside prime table",
                         std::to_string(a) + "," + std::to_string(b));
    }
    PrimeTable out(a, b);
    for (u64 i = a; i <= b; ++i) {
        if (test(i - lo_)) out.set(i - a);
    }
    return out;
}

PrimeTable sieve(u64 lo, u64 hi, u64 max_span) {
    if (lo < 2 || lo > hi) {
        throw InvalidArgument("sieve range must satisfy 2 <= lo <= hi",
                              std::to_string(lo) + "," + std::to_string(hi));
    }
    if (hi - lo >= max_span) {
        throw RangeError("range-too-large",
                         "sieve span " + std::to_string(hi - lo + 1) + " exceeds budget " +
                             std::to_string(max_span),
                         std::to_string(lo) + "," + std::to_string(hi));
    }

    const u64 root = isqrt(hi);
    std::vector<u64> base;
    {
        std::vector<bool> composite(root + 1, false);
        for (u64 p = 2; p <= root; ++p) {
            if (composite[p]) continue;
            base.push_back(p);
            for (u64 m = p * p; m <= root; m += p) composite[m] = true;
        }
    }

    PrimeTable table(lo, hi);
    std::vector<unsigned char> segment;
    for (u64 start = lo;; start += kSegmentSize) {
        const u64 stop = (hi - start < kSegmentSize) ? hi : start + kSegmentSize - 1;
        segment.assign(stop - start + 1, 1);
        for (u64 p : base) {
            const u64 pp = p * p;
            if (pp > stop) break;
            u64 first = std::max(pp, (start + p - 1) / p * p);
            for (u64 m = first; m <= stop; m += p) {
                segment[m - start] = 0;
                if (m > stop - p) break;
            }
        }
        for (u64 i = 0; i < segment.size(); ++i) {
            if (segment[i]) table.set(start - lo + i);
        }
        if (stop == hi) break;
    }
    return table;
}

namespace {

constexpr std::array<char, 4> kMagic = {'C', '2', 'S', 'V'};

template <typename T>
void put_le(std::ostream& out, T value) {
    for (unsigned i = 0; i < sizeof(T); ++i) {
        out.put(static_cast<char>((value >> (8 * i)) & 0xff));
    }
}

template <typename T>
bool get_le(std::istream& in, T& value) {
    value = 0;
    for (unsigned i = 0; i < sizeof(T); ++i) {
        const int c = in.get();
        if (c == std::char_traits<char>::eof()) return false;
        value |= static_cast<T>(static_cast<unsigned char>(c)) << (8 * i);
    }
    return true;
}

}  // namespace

void save_sieve_cache(const std::filesystem::path& path, const PrimeTable& table) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("io", path.string(), "cannot write sieve cache " + path.string());
    out.write(kMagic.data(), kMagic.size());
    put_le<std::uint32_t>(out, kSieveCacheVersion);
    put_le<u64>(out, table.lo());
    put_le<u64>(out, table.hi());
    const u64 bytes = (table.hi() - table.lo()) / 8 + 1;
    const auto& words = table.words();
    for (u64 j = 0; j < bytes; ++j) {
        out.put(static_cast<char>((words[j / 8] >> (8 * (j % 8))) & 0xff));
    }
    if (!out) throw Error("io", path.string(), "failed writing sieve cache " + path.string());
}

std::optional<PrimeTable> load_sieve_cache(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::array<char, 4> magic{};
    in.read(magic.data(), magic.size());
    if (!in || magic != kMagic) return std::nullopt;
    std::uint32_t version = 0;
    u64 lo = 0, hi = 0;
    if (!get_le(in, version) || !get_le(in, lo) || !get_le(in, hi)) return std::nullopt;
    if (version != kSieveCacheVersion || lo < 2 || lo > hi || hi - lo >= kDefaultMaxSpan) {
        return std::nullopt;
    }
    PrimeTable table(lo, hi);
    const u64 bytes = (hi - lo) / 8 + 1;
    std::vector<char> raw(bytes);
    in.read(raw.data(), static_cast<std::streamsize>(bytes));
    if (static_cast<u64>(in.gcount()) != bytes) return std::nullopt;
    for (u64 j = 0; j < bytes; ++j) {
        table.words_[j / 8] |= static_cast<u64>(static_cast<unsigned char>(raw[j])) << (8 * (j % 8));
    }
    // Bits past hi must be clear or iteration would walk off the interval.
    const u64 tail = (hi - lo + 1) % 64;
    if (tail != 0 && (table.words_.back() >> tail) != 0) return std::nullopt;
    return table;
}

PrimeTable sieve_cached(u64 lo, u64 hi, const std::optional<std::filesystem::path>& cache,
                        u64 max_span) {
    if (!cache) return sieve(lo, hi, max_span);
    if (auto stored = load_sieve_cache(*cache); stored && stored->covers(lo, hi)) {
        return (stored->lo() == lo && stored->hi() == hi) ? *std::move(stored)
                                                          : stored->slice(lo, hi);
    }
    PrimeTable fresh = sieve(lo, hi, max_span);
    try {
        save_sieve_cache(*cache, fresh);
    } catch (const Error&) {
        // unwritable cache location: the table is still correct
    }
    return fresh;
}

}  // namespace c2
