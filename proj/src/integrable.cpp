#include "hurwitz/integrable.hpp"

#include <cstdlib>
#include <stdexcept>

#include "hurwitz/hurwitz.hpp"

namespace hurwitz {

VerificationReport make_report(std::string identity, int d_max_effective, int b_max_effective,
                               TruncatedSeries residual, std::string note)
{
    VerificationReport r{std::move(identity), d_max_effective, b_max_effective, std::move(residual), false,
                         std::nullopt, std::move(note)};
    r.pass = r.residual.is_zero();
    if (!r.pass)
        r.first_failure = r.residual.terms().begin()->first;
    return r;
}

TruncatedSeries toda_residual(const TruncatedSeries& tau)
{
    const TruncatedSeries d1 = d_dp(tau, 1, Side::P);
    const TruncatedSeries d1p = d_dp(tau, 1, Side::PPrime);
    const TruncatedSeries d11p = d_dp(d1, 1, Side::PPrime);
    TruncatedSeries shifted = multiply_by_q_power(scale_q_exp(tau, 1) * scale_q_exp(tau, -1), 1);
    return tau * d11p - d1 * d1p - shifted;
}

// The q and beta bounds are monomial ideals preserved by every operation in
// these identities (derivatives keep dq, q -> e^{n beta} q only raises the
// beta degree), so the residual is exact at the full construction orders.
VerificationReport verify_toda(const TruncatedSeries& tau)
{
    const auto& t = tau.truncation();
    return make_report("toda", t.d_max, t.b_max, toda_residual(tau));
}

VerificationReport verify_toda(int d_max, int b_max) { return verify_toda(build_tau(d_max, b_max)); }

Rational tau_n_beta_exponent(int n)
{
    return ratio(n * (4 * n * n - 1), 24);
}

int tau_n_q_exponent_twice(int n) { return n * n; }

TruncatedSeries tau_n_reduced(const TruncatedSeries& tau, int n)
{
    if (n == 0)
        return tau;
    return exp_beta(tau.truncation(), tau_n_beta_exponent(n)) * scale_q_exp(tau, n);
}

VerificationReport verify_tau_n(int n, const TruncatedSeries& tau)
{
    if (std::abs(n) > 3)
        throw std::invalid_argument("tau_n check supports |n| <= 3");
    const auto& t = tau.truncation();
    TruncatedSeries residual = tau_n_reduced(tau_n_reduced(tau, n), -n) - tau;
    residual += tau_n_reduced(tau, 0) - tau;
    return make_report("tau-n", t.d_max, t.b_max, std::move(residual),
                       "n = " + std::to_string(n) + ", q exponent " + std::to_string(tau_n_q_exponent_twice(n))
                           + "/2, beta exponent " + to_string(tau_n_beta_exponent(n)));
}

VerificationReport verify_tau_n(int n, int d_max, int b_max)
{
    return verify_tau_n(n, build_tau(d_max, b_max));
}

VerificationReport verify_toda_lattice(int n, const TruncatedSeries& tau)
{
    const auto& t = tau.truncation();
    const TruncatedSeries center = tau_n_reduced(tau, n);
    const TruncatedSeries d1 = d_dp(center, 1, Side::P);
    const TruncatedSeries d1p = d_dp(center, 1, Side::PPrime);
    const TruncatedSeries d11p = d_dp(d1, 1, Side::PPrime);
    TruncatedSeries residual = center * d11p - d1 * d1p
        - multiply_by_q_power(tau_n_reduced(tau, n + 1) * tau_n_reduced(tau, n - 1), 1);
    return make_report("toda-lattice", t.d_max, t.b_max, std::move(residual), "n = " + std::to_string(n));
}

namespace {

std::vector<PowerSumShift> hirota_shifts(int weight, Side z_side, int z_sign, const Perturbation& symbol, int s_sign)
{
    std::vector<PowerSumShift> shifts;
    for (int k = 1; k <= weight; ++k)
        shifts.push_back({k, z_side, {ShiftTerm{Rational(z_sign), k, std::nullopt}}});
    shifts.push_back({symbol.index, symbol.side, {ShiftTerm{Rational(s_sign), 0, symbol}}});
    return shifts;
}

} // namespace

TruncatedSeries hirota_residual(const HirotaQuery& query, const TruncatedSeries& tau)
{
    const int m = query.m;
    if (m < -1 || m > 1 || query.n_s < 1 || query.n_s > 3)
        throw std::invalid_argument("restricted Hirota scope");
    const Perturbation symbol{query.side, query.n_s};
    const Truncation base = tau.truncation();

    // Factors only carry z >= 0; the prefactors lower z by at most n_s, so
    // products must be kept up to the extracted power plus n_s.
    Truncation wide = base;
    wide.z_min = -query.n_s;
    wide.z_max = std::max(m + 1, -1 - m) + query.n_s;
    const TruncatedSeries t = tau.with_truncation(wide);
    const int weight = base.p_weight_max;

    const auto diamond = shift_p(scale_q_exp(t, m + 1), hirota_shifts(weight, Side::P, +1, symbol, +1));
    const auto heart = shift_p(scale_q_exp(t, -1), hirota_shifts(weight, Side::P, -1, symbol, -1));
    const auto club = shift_p(scale_q_exp(t, m), hirota_shifts(weight, Side::PPrime, -1, symbol, +1));
    const auto spade = shift_p(t, hirota_shifts(weight, Side::PPrime, +1, symbol, -1));

    // exp(-+2 s_n / (n z^n)) is exactly linear since s_n squares to zero
    MonomialKey prefactor_key;
    prefactor_key.aux = AuxMonomial{-query.n_s, {symbol}};
    TruncatedSeries left_prefactor = TruncatedSeries::one(wide);
    TruncatedSeries right_prefactor = TruncatedSeries::one(wide);
    if (query.side == Side::P)
        left_prefactor.add_term(prefactor_key, ratio(-2, query.n_s));
    else
        right_prefactor.add_term(prefactor_key, ratio(2, query.n_s));

    TruncatedSeries left = coefficient_of_z(left_prefactor * (diamond * heart), -1 - m);
    left = multiply_by_q_power(exp_beta(left.truncation(), ratio(m * (m + 1), 2)) * left, m + 1);
    TruncatedSeries right = coefficient_of_z(right_prefactor * (club * spade), m + 1);
    return left - right;
}

VerificationReport verify_hirota(const HirotaQuery& query, const TruncatedSeries& tau)
{
    const auto& t = tau.truncation();
    return make_report("hirota", t.d_max, t.b_max, hirota_residual(query, tau),
                       "m = " + std::to_string(query.m) + ", "
                           + format_perturbation(Perturbation{query.side, query.n_s}) + " to first order");
}

VerificationReport verify_hirota(const HirotaQuery& query, int d_max, int b_max)
{
    return verify_hirota(query, build_tau(d_max, b_max));
}

VerificationReport verify_hirota_reduces_to_toda(const TruncatedSeries& tau)
{
    const auto& t = tau.truncation();
    const Perturbation s1{Side::P, 1};
    TruncatedSeries first_order = coefficient_of_symbol(hirota_residual({0, 1, Side::P}, tau), s1);
    TruncatedSeries residual = first_order - toda_residual(tau) * Rational(2);
    return make_report("hirota-toda-reduction", t.d_max, t.b_max, std::move(residual),
                       "s1 coefficient at m = 0 compared with twice the toda residual");
}

XBetaSeries::XBetaSeries(int x_max, int b_max)
    : x_max_(x_max), b_max_(b_max), c_(static_cast<std::size_t>(x_max + 1) * static_cast<std::size_t>(b_max + 1))
{
}

XBetaSeries operator*(const XBetaSeries& a, const XBetaSeries& b)
{
    XBetaSeries out(a.x_max_, a.b_max_);
    for (int x1 = 0; x1 <= a.x_max_; ++x1)
        for (int b1 = 0; b1 <= a.b_max_; ++b1) {
            const Rational& ca = a.at(x1, b1);
            if (ca == 0)
                continue;
            for (int x2 = 0; x1 + x2 <= a.x_max_; ++x2)
                for (int b2 = 0; b1 + b2 <= a.b_max_; ++b2)
                    out.at(x1 + x2, b1 + b2) += ca * b.at(x2, b2);
        }
    return out;
}

XBetaSeries& XBetaSeries::operator+=(const XBetaSeries& other)
{
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] += other.c_[i];
    return *this;
}

XBetaSeries& XBetaSeries::operator-=(const XBetaSeries& other)
{
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] -= other.c_[i];
    return *this;
}

XBetaSeries XBetaSeries::derivative() const
{
    XBetaSeries out(x_max_, b_max_);
    for (int x = 0; x < x_max_; ++x)
        for (int b = 0; b <= b_max_; ++b)
            out.at(x, b) = at(x + 1, b) * (x + 1);
    return out;
}

XBetaSeries XBetaSeries::times_x() const
{
    XBetaSeries out(x_max_, b_max_);
    for (int x = 1; x <= x_max_; ++x)
        for (int b = 0; b <= b_max_; ++b)
            out.at(x, b) = at(x - 1, b);
    return out;
}

XBetaSeries XBetaSeries::scale_x_exp(int n) const
{
    XBetaSeries out(x_max_, b_max_);
    for (int x = 0; x <= x_max_; ++x)
        for (int b = 0; b <= b_max_; ++b) {
            Rational term = at(x, b);
            for (int j = 0; b + j <= b_max_ && term != 0; ++j) {
                if (j > 0)
                    term *= ratio(n * x, j);
                out.at(x, b + j) += term;
            }
        }
    return out;
}

XBetaSeries XBetaSeries::exp() const
{
    for (int b = 0; b <= b_max_; ++b)
        if (at(0, b) != 0)
            throw std::domain_error("exp requires zero constant term in x");
    // E' = E G' in x, order by order
    XBetaSeries out(x_max_, b_max_);
    out.at(0, 0) = 1;
    for (int k = 1; k <= x_max_; ++k)
        for (int j = 1; j <= k; ++j)
            for (int b1 = 0; b1 <= b_max_; ++b1) {
                const Rational& g = at(j, b1);
                if (g == 0)
                    continue;
                for (int b2 = 0; b1 + b2 <= b_max_; ++b2)
                    out.at(k, b1 + b2) += ratio(j, k) * g * out.at(k - j, b2);
            }
    return out;
}

XBetaSeries simple_hurwitz_by_recursion(int x_max, int b_max)
{
    XBetaSeries f(x_max, b_max);
    for (int d = 1; d <= x_max; ++d) {
        // exponent sum_{d' < d} F_{d'} x^{d'} (e^{d' beta} + e^{-d' beta} - 2)
        XBetaSeries exponent(x_max, b_max);
        for (int dp = 1; dp < d; ++dp)
            for (int b = 0; b <= b_max; ++b) {
                const Rational& c = f.at(dp, b);
                if (c == 0)
                    continue;
                // 2 cosh(d' beta) - 2 = sum_{j >= 1} 2 d'^{2j} beta^{2j} / (2j)!
                Rational term = 1;
                for (int j = 1; b + j <= b_max; ++j) {
                    term *= ratio(dp, j);
                    if (j % 2 == 0)
                        exponent.at(dp, b + j) += 2 * c * term;
                }
            }
        const XBetaSeries e = exponent.exp();
        for (int b = 0; b <= b_max; ++b)
            f.at(d, b) = e.at(d - 1, b) / (d * d);
    }
    return f;
}

namespace {

TruncatedSeries xseries_to_series(const XBetaSeries& x, Truncation t, int x_limit)
{
    TruncatedSeries out(t);
    for (int d = 0; d <= x_limit; ++d)
        for (int b = 0; b <= x.b_max(); ++b)
            out.add_term(MonomialKey{d, b, Partition::ones(d), Partition::ones(d), {}}, x.at(d, b));
    return out;
}

} // namespace

VerificationReport verify_toda_specialized(const TruncatedSeries& tau)
{
    const auto& t = tau.truncation();
    const int x_max = t.d_max;
    const int b_max = t.b_max;
    const TruncatedSeries restricted = restrict_to_first_power_sums(tau);

    TruncatedSeries structural(t);
    XBetaSeries x_tau(x_max, b_max);
    for (const auto& [key, c] : restricted.terms()) {
        if (key.dq != key.mu.size() || key.dq != key.nu.size() || !key.aux.trivial())
            structural.add_term(key, c);
        else
            x_tau.at(key.dq, key.b) = c;
    }
    if (!structural.is_zero())
        return make_report("toda-specialized", x_max, b_max, std::move(structural),
                           "restricted tau depends on q, p1, p'1 other than through their product");

    // tau tau' + x (tau tau'' - tau'^2) - tau(e^beta x) tau(e^-beta x); the
    // derivatives lose the top x order
    const XBetaSeries d1 = x_tau.derivative();
    const XBetaSeries d2 = d1.derivative();
    XBetaSeries inner = x_tau * d2;
    inner -= d1 * d1;
    XBetaSeries one_variable = x_tau * d1;
    one_variable += inner.times_x();
    one_variable -= x_tau.scale_x_exp(1) * x_tau.scale_x_exp(-1);
    const int x_effective = x_max - 1;
    TruncatedSeries equation = xseries_to_series(one_variable, t, x_effective);
    if (!equation.is_zero())
        return make_report("toda-specialized", x_effective, b_max, std::move(equation),
                           "one-variable toda equation in x = q p1 p'1 fails");

    const XBetaSeries recursion = simple_hurwitz_by_recursion(x_max, b_max);
    const TruncatedSeries connected = restrict_to_first_power_sums(log(tau));
    TruncatedSeries mismatch = connected - xseries_to_series(recursion, t, x_max);
    return make_report("toda-specialized", x_effective, b_max, std::move(mismatch),
                       "log tau restricted to x = q p1 p'1 compared with the one-variable recursion");
}

VerificationReport verify_toda_specialized(int x_max, int b_max)
{
    return verify_toda_specialized(build_tau(x_max, b_max));
}

} // namespace hurwitz
