#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "hurwitz/characters.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

enum class Provenance { CharacterSum, Oracle };

/// One covering count: Hur_{d,b}(mu, nu) when `connected`, otherwise the
/// possibly disconnected Cov_d(C_mu, C_nu, b transpositions).
struct HurwitzRecord {
    int d = 0;
    int b = 0;
    Partition mu;
    Partition nu;
    Rational value;
    /// (b + 2 - l(mu) - l(nu))/2 for connected records when that is a
    /// nonnegative integer; empty means "non-integral" (and value is 0).
    std::optional<int> genus;
    bool connected = true;
    Provenance provenance = Provenance::CharacterSum;
};

/// Riemann-Hurwitz genus of a connected covering, if integral and >= 0.
std::optional<int> covering_genus(int b, const Partition& mu, const Partition& nu);

/// sum_{|lambda|=d} (dim lambda / d!)^2 prod_i f_{C_i}(lambda): the weighted
/// number of possibly disconnected degree-d coverings with the given
/// monodromy classes.
Rational cov_burnside(int d, std::span<const Partition> classes, CharacterCache& cache);
Rational cov_burnside(int d, std::span<const Partition> classes);

/// s_lambda = sum_{|mu|=|lambda|} chi^lambda(mu) p_mu / z_mu, as a series in
/// P only (dq = 0, nu empty).
TruncatedSeries schur_in_power_sums(const Partition& lambda, CharacterCache& cache);
TruncatedSeries schur_in_power_sums(const Partition& lambda);

/// tau = sum_lambda q^{|lambda|} e^{beta f2(lambda)} s_lambda(P) s_lambda(P').
/// `jobs` > 1 splits the lambda sum across threads; the result does not
/// depend on it.
TruncatedSeries build_tau(int d_max, int b_max, CharacterCache& cache, int jobs = 1);
TruncatedSeries build_tau(int d_max, int b_max, int jobs = 1);

/// H = log tau.
TruncatedSeries connected_series(const TruncatedSeries& tau);

/// tau and H for one pair of orders, with coefficient extraction.
class HurwitzTables {
public:
    HurwitzTables(int d_max, int b_max, CharacterCache& cache, int jobs = 1);

    /// Wraps an externally supplied tau (e.g. a deliberately corrupted one).
    explicit HurwitzTables(TruncatedSeries tau);

    int d_max() const { return tau_.truncation().d_max; }
    int b_max() const { return tau_.truncation().b_max; }
    const TruncatedSeries& tau() const { return tau_; }
    const TruncatedSeries& connected() const { return connected_; }

    /// b! [q^d beta^b p_mu p'_nu] tau.
    HurwitzRecord cov(int d, int b, const Partition& mu, const Partition& nu) const;

    /// b! [q^d beta^b p_mu p'_nu] H.
    HurwitzRecord double_hurwitz(int d, int b, const Partition& mu, const Partition& nu) const;

private:
    void check(int d, int b, const Partition& mu, const Partition& nu) const;

    TruncatedSeries tau_;
    TruncatedSeries connected_;
};

/// Shared tables covering at least (d_max, b_max), built on first use with
/// the default character cache.
std::shared_ptr<const HurwitzTables> shared_tables(int d_max, int b_max);

HurwitzRecord double_hurwitz(int d, int b, const Partition& mu, const Partition& nu);

/// H_{g,d} = Hur_{d, 2g+2d-2}((1^d), (1^d)).
Rational simple_hurwitz(int g, int d);

} // namespace hurwitz
