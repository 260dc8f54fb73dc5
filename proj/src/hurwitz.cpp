#include "hurwitz/hurwitz.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace hurwitz {

std::optional<int> covering_genus(int b, const Partition& mu, const Partition& nu)
{
    const int twice = b + 2 - mu.length() - nu.length();
    if (twice < 0 || twice % 2 != 0)
        return std::nullopt;
    return twice / 2;
}

Rational cov_burnside(int d, std::span<const Partition> classes, CharacterCache& cache)
{
    for (const auto& c : classes)
        if (c.size() != d)
            throw std::invalid_argument("class size does not match degree");
    const Integer d_fact = factorial(d);
    Rational total = 0;
    for (const auto& lambda : partitions_of(d)) {
        Rational term = ratio(Integer(cache.dimension(lambda)), d_fact);
        term *= term;
        for (const auto& c : classes)
            term *= central_character(c, lambda, cache);
        total += term;
    }
    return total;
}

Rational cov_burnside(int d, std::span<const Partition> classes)
{
    return cov_burnside(d, classes, default_character_cache());
}

TruncatedSeries schur_in_power_sums(const Partition& lambda, CharacterCache& cache)
{
    const int d = lambda.size();
    TruncatedSeries s(Truncation::orders(d, 0));
    for (const auto& mu : partitions_of(d)) {
        s.add_term(MonomialKey{0, 0, mu, {}, {}}, ratio(Integer(cache.character(lambda, mu)), z_mu(mu)));
    }
    return s;
}

TruncatedSeries schur_in_power_sums(const Partition& lambda)
{
    return schur_in_power_sums(lambda, default_character_cache());
}

namespace {

// Contribution of one lambda: q^d e^{beta f2} s_lambda(P) s_lambda(P').
void accumulate_tau_terms(const Partition& lambda, int b_max, CharacterCache& cache, TruncatedSeries& out)
{
    const int d = lambda.size();
    const Rational f2 = f2_contents(lambda);
    std::vector<Rational> beta_powers(static_cast<std::size_t>(b_max + 1));
    beta_powers[0] = 1;
    for (int b = 1; b <= b_max; ++b)
        beta_powers[static_cast<std::size_t>(b)] = beta_powers[static_cast<std::size_t>(b - 1)] * f2 / b;

    const TruncatedSeries schur = schur_in_power_sums(lambda, cache);
    for (const auto& [kmu, cmu] : schur.terms()) {
        for (const auto& [knu, cnu] : schur.terms()) {
            const Rational base = cmu * cnu;
            for (int b = 0; b <= b_max; ++b)
                out.add_term(MonomialKey{d, b, kmu.mu, knu.mu, {}}, base * beta_powers[static_cast<std::size_t>(b)]);
        }
    }
}

} // namespace

TruncatedSeries build_tau(int d_max, int b_max, CharacterCache& cache, int jobs)
{
    if (d_max < 0 || b_max < 0)
        throw std::invalid_argument("orders must be nonnegative");
    const Truncation t = Truncation::orders(d_max, b_max);
    const auto lambdas = enumerate_partitions(d_max);
    jobs = std::clamp(jobs, 1, static_cast<int>(lambdas.size()));

    // contiguous shards, reduced in shard order
    std::vector<TruncatedSeries> partial(static_cast<std::size_t>(jobs), TruncatedSeries(t));
    auto run_shard = [&](int shard) {
        const std::size_t begin = lambdas.size() * static_cast<std::size_t>(shard) / static_cast<std::size_t>(jobs);
        const std::size_t end = lambdas.size() * static_cast<std::size_t>(shard + 1) / static_cast<std::size_t>(jobs);
        for (std::size_t i = begin; i < end; ++i)
            accumulate_tau_terms(lambdas[i], b_max, cache, partial[static_cast<std::size_t>(shard)]);
    };
    if (jobs == 1) {
        run_shard(0);
    } else {
        std::vector<std::jthread> workers;
        for (int shard = 0; shard < jobs; ++shard)
            workers.emplace_back(run_shard, shard);
    }
    TruncatedSeries tau(t);
    for (const auto& p : partial)
        tau += p;
    return tau;
}

TruncatedSeries build_tau(int d_max, int b_max, int jobs)
{
    return build_tau(d_max, b_max, default_character_cache(), jobs);
}

TruncatedSeries connected_series(const TruncatedSeries& tau) { return log(tau); }

HurwitzTables::HurwitzTables(int d_max, int b_max, CharacterCache& cache, int jobs)
    : HurwitzTables(build_tau(d_max, b_max, cache, jobs))
{
}

HurwitzTables::HurwitzTables(TruncatedSeries tau) : tau_(std::move(tau)), connected_(connected_series(tau_)) {}

void HurwitzTables::check(int d, int b, const Partition& mu, const Partition& nu) const
{
    if (mu.size() != d || nu.size() != d)
        throw std::invalid_argument("partitions must have size d");
    if (d < 0 || b < 0 || d > d_max() || b > b_max())
        throw std::out_of_range("requested (d, b) outside the table orders");
}

HurwitzRecord HurwitzTables::cov(int d, int b, const Partition& mu, const Partition& nu) const
{
    check(d, b, mu, nu);
    HurwitzRecord r{d, b, mu, nu, tau_.coefficient(MonomialKey{d, b, mu, nu, {}}) * factorial(b), std::nullopt, false,
                    Provenance::CharacterSum};
    return r;
}

HurwitzRecord HurwitzTables::double_hurwitz(int d, int b, const Partition& mu, const Partition& nu) const
{
    check(d, b, mu, nu);
    HurwitzRecord r{d, b, mu, nu, connected_.coefficient(MonomialKey{d, b, mu, nu, {}}) * factorial(b),
                    covering_genus(b, mu, nu), true, Provenance::CharacterSum};
    return r;
}

std::shared_ptr<const HurwitzTables> shared_tables(int d_max, int b_max)
{
    static std::mutex mutex;
    static std::vector<std::shared_ptr<const HurwitzTables>> built;
    std::lock_guard lock(mutex);
    for (const auto& t : built)
        if (t->d_max() >= d_max && t->b_max() >= b_max)
            return t;
    auto t = std::make_shared<const HurwitzTables>(d_max, b_max, default_character_cache());
    built.push_back(t);
    return t;
}

HurwitzRecord double_hurwitz(int d, int b, const Partition& mu, const Partition& nu)
{
    if (mu.size() != d || nu.size() != d)
        throw std::invalid_argument("partitions must have size d");
    return shared_tables(d, b)->double_hurwitz(d, b, mu, nu);
}

Rational simple_hurwitz(int g, int d)
{
    if (g < 0 || d < 1)
        throw std::invalid_argument("simple_hurwitz needs g >= 0 and d >= 1");
    const int b = 2 * g + 2 * d - 2;
    return double_hurwitz(d, b, Partition::ones(d), Partition::ones(d)).value;
}

} // namespace hurwitz
