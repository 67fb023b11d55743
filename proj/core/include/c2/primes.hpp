#pragma once

#include <cstddef>
#include <filesystem>
#include <iterator>
#include <optional>
#include <ranges>
#include <vector>

#include "c2/arith.hpp"

namespace c2 {

// Numbers per sieve segment.
inline constexpr u64 kSegmentSize = u64{1} << 22;
// Default cap on hi - lo + 1 (one bit per number, so 512 MiB of bitmap).
inline constexpr u64 kDefaultMaxSpan = u64{1} << 32;

/// Primality bitmap over the closed interval [lo, hi]. Immutable after
/// construction; iteration yields primes in increasing order.
class PrimeTable {
public:
    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = u64;
        using difference_type = std::ptrdiff_t;
        using reference = u64;

        const_iterator() = default;
        u64 operator*() const { return table_->lo_ + index_; }
        const_iterator& operator++() {
            index_ = table_->next_set(index_ + 1);
            return *this;
        }
        const_iterator operator++(int) {
            auto copy = *this;
            ++*this;
            return copy;
        }
        bool operator==(const const_iterator& o) const { return index_ == o.index_; }

    private:
        friend class PrimeTable;
        const_iterator(const PrimeTable* t, u64 i) : table_(t), index_(i) {}
        const PrimeTable* table_ = nullptr;
        u64 index_ = 0;
    };

    PrimeTable() = default;

    u64 lo() const noexcept { return lo_; }
    u64 hi() const noexcept { return hi_; }
    bool empty() const noexcept { return words_.empty(); }
    bool covers(u64 a, u64 b) const noexcept { return !empty() && lo_ <= a && b <= hi_; }

    /// Membership; throws RangeError("insufficient-table-range") outside [lo, hi].
    bool is_prime(u64 n) const;

    const_iterator begin() const { return {this, next_set(0)}; }
    const_iterator end() const { return {this, span()}; }

    /// Primes p in [lo, hi] with p = residue (mod 8), ascending.
    auto residue_class(unsigned residue) const {
        return std::views::filter(*this, [residue](u64 p) { return p % 8 == residue; });
    }

    u64 count() const;

    /// Sub-table over [a, b]; must be covered.
    PrimeTable slice(u64 a, u64 b) const;

    const std::vector<u64>& words() const noexcept { return words_; }

    bool operator==(const PrimeTable&) const = default;

private:
    friend PrimeTable sieve(u64 lo, u64 hi, u64 max_span);
    friend std::optional<PrimeTable> load_sieve_cache(const std::filesystem::path& path);

    PrimeTable(u64 lo, u64 hi) : lo_(lo), hi_(hi), words_((hi - lo) / 64 + 1, 0) {}

    u64 span() const noexcept { return empty() ? 0 : hi_ - lo_ + 1; }
    u64 next_set(u64 index) const;
    void set(u64 index) { words_[index / 64] |= u64{1} << (index % 64); }
    bool test(u64 index) const { return (words_[index / 64] >> (index % 64)) & 1; }

    u64 lo_ = 0;
    u64 hi_ = 0;
    std::vector<u64> words_;
};

/// Segmented sieve of Eratosthenes over [lo, hi], 2 <= lo <= hi.
/// Throws RangeError("range-too-large") when hi - lo + 1 exceeds max_span.
PrimeTable sieve(u64 lo, u64 hi, u64 max_span = kDefaultMaxSpan);

// Cache file layout (little-endian): "C2SV", u32 version, u64 lo, u64 hi,
// then ceil((hi - lo + 1) / 8) bytes of bitmap, bit i of byte j standing for
// lo + 8j + i.
inline constexpr unsigned kSieveCacheVersion = 1;

void save_sieve_cache(const std::filesystem::path& path, const PrimeTable& table);

/// Returns nullopt for a missing, truncated, or foreign file.
std::optional<PrimeTable> load_sieve_cache(const std::filesystem::path& path);

/// sieve() backed by an optional cache file. A cache covering [lo, hi] is
/// sliced; otherwise the table is computed and the cache rewritten.
PrimeTable sieve_cached(u64 lo, u64 hi, const std::optional<std::filesystem::path>& cache,
                        u64 max_span = kDefaultMaxSpan);

}  // namespace c2
