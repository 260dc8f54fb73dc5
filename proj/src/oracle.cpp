#include "hurwitz/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace hurwitz::oracle {

Permutation identity_permutation(int d)
{
    Permutation p(static_cast<std::size_t>(d));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Permutation compose(const Permutation& first, const Permutation& second)
{
    Permutation out(first.size());
    for (std::size_t i = 0; i < first.size(); ++i)
        out[i] = second[static_cast<std::size_t>(first[i])];
    return out;
}

Permutation inverse(const Permutation& p)
{
    Permutation out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        out[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return out;
}

Partition cycle_type(const Permutation& p)
{
    std::vector<bool> seen(p.size(), false);
    std::vector<int> lengths;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i])
            continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition::from_unsorted(std::move(lengths));
}

Permutation class_representative(const Partition& mu)
{
    Permutation p(static_cast<std::size_t>(mu.size()));
    int start = 0;
    for (int len : mu.parts()) {
        for (int j = 0; j < len; ++j)
            p[static_cast<std::size_t>(start + j)] = start + (j + 1) % len;
        start += len;
    }
    return p;
}

std::vector<Permutation> transpositions(int d)
{
    std::vector<Permutation> out;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            Permutation t = identity_permutation(d);
            std::swap(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)]);
            out.push_back(std::move(t));
        }
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    int components;

    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)), components(n)
    {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x)
    {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    }
    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --components;
        }
    }
    void absorb(const Permutation& p)
    {
        for (std::size_t i = 0; i < p.size(); ++i)
            unite(static_cast<int>(i), p[i]);
    }
};

void check_caps(int d, int b, const OracleCaps& caps)
{
    if (d > caps.d_max || b > caps.b_max)
        throw OracleScaleLimit();
}

// Transposition index pairs; applying (i j) on the right swaps the values
// i and j in the image list.
std::vector<std::pair<int, int>> transposition_pairs(int d)
{
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            out.emplace_back(i, j);
    return out;
}

void right_multiply(Permutation& x, std::pair<int, int> t)
{
    for (auto& v : x) {
        if (v == t.first)
            v = t.second;
        else if (v == t.second)
            v = t.first;
    }
}

// Depth-first walk over tau_{depth+1}, ..., tau_b from the running product x.
void walk(Permutation& x, UnionFind uf, int remaining, const std::vector<std::pair<int, int>>& pairs,
          std::map<Partition, TupleCounts>& counts)
{
    if (remaining == 0) {
        auto& entry = counts[cycle_type(x)];
        ++entry.all;
        if (uf.components == 1)
            ++entry.transitive;
        return;
    }
    for (auto t : pairs) {
        UnionFind next = uf;
        next.unite(t.first, t.second);
        right_multiply(x, t);
        walk(x, std::move(next), remaining - 1, pairs, counts);
        right_multiply(x, t);
    }
}

std::map<Partition, TupleCounts> census_fixed(int d, const Partition& mu, int b, int jobs)
{
    const Permutation sigma0 = class_representative(mu);
    const auto pairs = transposition_pairs(d);
    UnionFind base(d);
    base.absorb(sigma0);

    std::map<Partition, TupleCounts> counts;
    if (b == 0 || jobs <= 1 || pairs.size() < 2) {
        Permutation x = sigma0;
        walk(x, base, b, pairs, counts);
    } else {
        // shard on the first transposition, reduce in shard order
        std::vector<std::map<Partition, TupleCounts>> shards(pairs.size());
        std::vector<std::jthread> workers;
        const std::size_t n_workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), pairs.size());
        for (std::size_t w = 0; w < n_workers; ++w) {
            workers.emplace_back([&, w] {
                for (std::size_t s = w; s < pairs.size(); s += n_workers) {
                    Permutation x = sigma0;
                    right_multiply(x, pairs[s]);
                    UnionFind uf = base;
                    uf.unite(pairs[s].first, pairs[s].second);
                    walk(x, std::move(uf), b - 1, pairs, shards[s]);
                }
            });
        }
        workers.clear();
        for (const auto& shard : shards)
            for (const auto& [nu, c] : shard) {
                counts[nu].all += c.all;
                counts[nu].transitive += c.transitive;
            }
    }
    const Integer weight = class_size(mu);
    for (auto& [nu, c] : counts) {
        c.all *= weight;
        c.transitive *= weight;
    }
    return counts;
}

std::vector<Permutation> class_members(int d, const Partition& mu)
{
    std::vector<Permutation> out;
    Permutation p = identity_permutation(d);
    do {
        if (cycle_type(p) == mu)
            out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::map<Partition, TupleCounts> census_naive(int d, const Partition& mu, int b)
{
    const auto taus = transpositions(d);
    std::map<Partition, TupleCounts> counts;
    for (const auto& nu : partitions_of(d)) {
        const auto infinity_class = class_members(d, nu);
        TupleCounts c;
        for (const auto& sigma0 : class_members(d, mu)) {
            std::vector<std::size_t> choice(static_cast<std::size_t>(b), 0);
            while (true) {
                MonodromyTuple tuple{d, sigma0, {}, {}};
                for (auto i : choice)
                    tuple.transpositions.push_back(taus[i]);
                for (const auto& sigma_inf : infinity_class) {
                    tuple.sigma_inf = sigma_inf;
                    if (!tuple.product_is_identity())
                        continue;
                    ++c.all;
                    if (tuple.transitive())
                        ++c.transitive;
                }
                // odometer over transposition choices
                std::size_t pos = 0;
                while (pos < choice.size() && ++choice[pos] == taus.size())
                    choice[pos++] = 0;
                if (pos == choice.size())
                    break;
            }
        }
        if (c.all != 0)
            counts[nu] = c;
    }
    return counts;
}

} // namespace

bool MonodromyTuple::product_is_identity() const
{
    Permutation x = sigma0;
    for (const auto& t : transpositions)
        x = compose(x, t);
    return compose(x, sigma_inf) == identity_permutation(d);
}

bool MonodromyTuple::transitive() const
{
    UnionFind uf(d);
    uf.absorb(sigma0);
    uf.absorb(sigma_inf);
    for (const auto& t : transpositions)
        uf.absorb(t);
    return uf.components <= 1;
}

std::map<Partition, TupleCounts> tuple_census(int d, const Partition& mu, int b, const OracleOptions& options)
{
    if (mu.size() != d)
        throw std::invalid_argument("incompatible sizes");
    check_caps(d, b, options.caps);
    if (d < 2 && b > 0)
        return {};
    if (options.mode == Enumeration::Naive)
        return census_naive(d, mu, b);
    return census_fixed(d, mu, b, options.jobs);
}

Rational count_tuples(int d, const Partition& mu, const Partition& nu, int b, bool connected_only,
                      const OracleOptions& options)
{
    if (mu.size() != d || nu.size() != d)
        throw std::invalid_argument("incompatible sizes");
    const auto census = tuple_census(d, mu, b, options);
    auto it = census.find(nu);
    if (it == census.end())
        return 0;
    return ratio(connected_only ? it->second.transitive : it->second.all, factorial(d));
}

std::vector<Discrepancy> compare_all(int d_max, int b_max, const HurwitzTables& tables, CharacterCache& cache,
                                     const OracleOptions& options)
{
    check_caps(d_max, b_max, options.caps);
    if (tables.d_max() < d_max || tables.b_max() < b_max)
        throw std::invalid_argument("tables are truncated below the comparison range");
    std::vector<Discrepancy> out;
    for (int d = 1; d <= d_max; ++d) {
        const auto classes = partitions_of(d);
        const Integer d_fact = factorial(d);
        for (int b = 0; b <= b_max; ++b) {
            for (const auto& mu : classes) {
                const auto census = tuple_census(d, mu, b, options);
                for (const auto& nu : classes) {
                    TupleCounts counts{0, 0};
                    if (auto it = census.find(nu); it != census.end())
                        counts = it->second;
                    const Rational disconnected = ratio(counts.all, d_fact);
                    const Rational connected = ratio(counts.transitive, d_fact);

                    Rational burnside = 0;
                    if (d >= 2 || b == 0) {
                        std::vector<Partition> monodromy{mu, nu};
                        if (b > 0)
                            monodromy.insert(monodromy.end(), static_cast<std::size_t>(b), Partition::transposition(d));
                        burnside = cov_burnside(d, monodromy, cache);
                    }
                    const Rational from_tau = tables.cov(d, b, mu, nu).value;
                    const Rational from_log = tables.double_hurwitz(d, b, mu, nu).value;

                    if (from_tau != disconnected)
                        out.push_back({d, b, mu, nu, "disconnected/tau", disconnected, from_tau});
                    if (burnside != disconnected)
                        out.push_back({d, b, mu, nu, "disconnected/burnside", disconnected, burnside});
                    if (from_log != connected)
                        out.push_back({d, b, mu, nu, "connected/log-tau", connected, from_log});
                }
            }
        }
    }
    return out;
}

std::vector<Discrepancy> compare_all(int d_max, int b_max, CharacterCache& cache, const OracleOptions& options)
{
    check_caps(d_max, b_max, options.caps);
    const HurwitzTables tables(d_max, b_max, cache, options.jobs);
    return compare_all(d_max, b_max, tables, cache, options);
}

std::vector<Discrepancy> compare_all(int d_max, int b_max, const OracleOptions& options)
{
    return compare_all(d_max, b_max, default_character_cache(), options);
}

} // namespace hurwitz::oracle
