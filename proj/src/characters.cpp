#include "hurwitz/characters.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace hurwitz {

namespace {

// Beta-set (first-column hook lengths) of lambda with exactly `len` beads:
// beads at lambda_i + len - i, strictly decreasing.
std::vector<int> beta_set(const Partition& lambda)
{
    const int len = lambda.length();
    std::vector<int> beads(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
        beads[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + len - 1 - i;
    return beads;
}

Partition from_beta_set(std::vector<int> beads)
{
    std::sort(beads.begin(), beads.end(), std::greater<>());
    const int len = static_cast<int>(beads.size());
    std::vector<int> parts;
    for (int i = 0; i < len; ++i) {
        const int part = beads[static_cast<std::size_t>(i)] - (len - 1 - i);
        if (part > 0)
            parts.push_back(part);
    }
    return Partition(std::move(parts));
}

} // namespace

std::int64_t CharacterCache::character(const Partition& lambda, const Partition& mu)
{
    if (lambda.size() != mu.size())
        throw std::invalid_argument("incompatible sizes");
    return evaluate(lambda, mu);
}

std::int64_t CharacterCache::dimension(const Partition& lambda)
{
    return evaluate(lambda, Partition::ones(lambda.size()));
}

std::int64_t CharacterCache::evaluate(const Partition& lambda, const Partition& mu)
{
    if (mu.empty())
        return 1;
    auto key = std::make_pair(lambda, mu);
    {
        std::shared_lock lock(mutex_);
        if (auto it = table_.find(key); it != table_.end()) {
            ++hits_;
            return it->second;
        }
    }
    ++misses_;

    const int hook = mu.largest();
    const Partition rest = mu.without_part(hook);
    const std::vector<int> beads = beta_set(lambda);
    std::int64_t value = 0;
    for (std::size_t i = 0; i < beads.size(); ++i) {
        const int target = beads[i] - hook;
        if (target < 0 || std::find(beads.begin(), beads.end(), target) != beads.end())
            continue;
        // beads jumped over = leg length of the removed rim hook
        const auto height = std::count_if(beads.begin(), beads.end(), [&](int b) { return b > target && b < beads[i]; });
        std::vector<int> moved = beads;
        moved[i] = target;
        const std::int64_t sub = evaluate(from_beta_set(std::move(moved)), rest);
        value += (height % 2 == 0) ? sub : -sub;
    }

    std::unique_lock lock(mutex_);
    table_.emplace(std::move(key), value);
    return value;
}

void CharacterCache::override_value(const Partition& lambda, const Partition& mu, std::int64_t value)
{
    std::unique_lock lock(mutex_);
    table_[{lambda, mu}] = value;
}

std::size_t CharacterCache::size() const
{
    std::shared_lock lock(mutex_);
    return table_.size();
}

void CharacterCache::clear()
{
    std::unique_lock lock(mutex_);
    table_.clear();
    hits_ = 0;
    misses_ = 0;
}

CharacterCache& default_character_cache()
{
    static CharacterCache cache;
    return cache;
}

Integer hook_length_dimension(const Partition& lambda)
{
    const Partition conj = lambda.conjugate();
    Integer hooks = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j)
            hooks *= (lambda[static_cast<std::size_t>(i)] - j - 1) + (conj[static_cast<std::size_t>(j)] - i - 1) + 1;
    return factorial(lambda.size()) / hooks;
}

Rational central_character(const Partition& cls, const Partition& lambda, CharacterCache& cache)
{
    if (cls.size() != lambda.size())
        throw std::invalid_argument("incompatible sizes");
    return ratio(class_size(cls) * cache.character(lambda, cls), Integer(cache.dimension(lambda)));
}

} // namespace hurwitz
