#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <shared_mutex>
#include <utility>

#include "hurwitz/partition.hpp"

namespace hurwitz {

/// Memo table of irreducible characters chi^lambda(C_mu) of S(d).
///
/// Values are evaluated with the Murnaghan-Nakayama rule: strip rim hooks of
/// length mu_1 (the largest part) from lambda in every possible way and
/// recurse with sign (-1)^{height}. Reads take a shared lock, inserts a
/// unique one; two threads racing on the same key compute the same value,
/// so a duplicated insert is harmless.
class CharacterCache {
public:
    struct Stats {
        std::uint64_t hits = 0;
        std::uint64_t misses = 0;
    };

    CharacterCache() = default;
    CharacterCache(const CharacterCache&) = delete;
    CharacterCache& operator=(const CharacterCache&) = delete;

    /// chi^lambda(C_mu); throws std::invalid_argument("incompatible sizes")
    /// when |lambda| != |mu|.
    std::int64_t character(const Partition& lambda, const Partition& mu);

    /// dim lambda = chi^lambda(1^d).
    std::int64_t dimension(const Partition& lambda);

    /// Overwrites a stored value. Only meant for negative-control tests that
    /// need a deliberately wrong table.
    void override_value(const Partition& lambda, const Partition& mu, std::int64_t value);

    Stats stats() const { return {hits_.load(), misses_.load()}; }
    std::size_t size() const;
    void clear();

private:
    std::int64_t evaluate(const Partition& lambda, const Partition& mu);

    mutable std::shared_mutex mutex_;
    std::map<std::pair<Partition, Partition>, std::int64_t> table_;
    std::atomic<std::uint64_t> hits_{0};
    std::atomic<std::uint64_t> misses_{0};
};

/// Process-wide cache used when callers do not supply their own.
CharacterCache& default_character_cache();

inline std::int64_t character(const Partition& lambda, const Partition& mu)
{
    return default_character_cache().character(lambda, mu);
}

inline std::int64_t dimension(const Partition& lambda) { return default_character_cache().dimension(lambda); }

/// d! / prod(hook lengths); independent of the character recursion.
Integer hook_length_dimension(const Partition& lambda);

/// f_C(lambda) = |C| chi^lambda(C) / dim lambda, the central character of
/// the class sum of C on the irreducible lambda.
Rational central_character(const Partition& cls, const Partition& lambda, CharacterCache& cache);

inline Rational central_character(const Partition& cls, const Partition& lambda)
{
    return central_character(cls, lambda, default_character_cache());
}

} // namespace hurwitz
