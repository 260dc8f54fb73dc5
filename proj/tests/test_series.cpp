#include "catch_amalgamated.hpp"

#include "hurwitz/hurwitz.hpp"
#include "hurwitz/series.hpp"

#include "test_support.hpp"

using namespace hurwitz;

namespace {

MonomialKey key(int dq, int b, Partition mu = {}, Partition nu = {}, int z = 0)
{
    return MonomialKey{dq, b, std::move(mu), std::move(nu), AuxMonomial{z, {}}};
}

const Truncation small = {3, 2, 3, 0, 0};

} // namespace

TEST_CASE("products respect the truncation")
{
    const Truncation t = Truncation::orders(2, 2);
    const auto q = TruncatedSeries::monomial(t, key(1, 0));
    const auto beta = TruncatedSeries::monomial(t, key(0, 1));
    REQUIRE((q * q).coefficient(key(2, 0)) == 1);
    REQUIRE((q * q * q).is_zero());
    REQUIRE((beta * beta * beta).is_zero());

    const auto one = TruncatedSeries::one(t);
    REQUIRE((one + q) * (one - q) == one - q * q);
    REQUIRE(one.constant_term() == 1);
    REQUIRE(TruncatedSeries::monomial(t, key(3, 0)).is_zero());
}

TEST_CASE("ring axioms on random series")
{
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 120; ++trial) {
        const auto a = testing::random_series(rng, small, {.constant = trial % 3 == 0});
        const auto b = testing::random_series(rng, small, {.symbols = true});
        const auto c = testing::random_series(rng, small, {.constant = true, .symbols = true});
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a + b - b == a);
        REQUIRE(mul(a, b) == a * b);
        REQUIRE(add(a, b) == a + b);
        REQUIRE(scale(a, ratio(3, 2)) == a * Rational(ratio(3, 2)));
    }
}

TEST_CASE("perturbation symbols square to zero")
{
    Truncation t = small;
    MonomialKey s1;
    s1.aux.symbols = {Perturbation{Side::P, 1}};
    const auto s = TruncatedSeries::monomial(t, s1);
    REQUIRE((s * s).is_zero());

    MonomialKey s2;
    s2.aux.symbols = {Perturbation{Side::PPrime, 2}};
    const auto both = s * TruncatedSeries::monomial(t, s2);
    REQUIRE(both.size() == 1);
    REQUIRE(both.terms().begin()->first.aux.symbols.size() == 2);
    REQUIRE(format_perturbation(Perturbation{Side::PPrime, 2}) == "s'2");
}

TEST_CASE("exp and log")
{
    const Truncation t = Truncation::orders(4, 0);
    const auto x = TruncatedSeries::monomial(t, key(1, 0, {1}, {1}));
    const auto e = exp(x);
    Rational fact = 1;
    for (int k = 0; k <= 4; ++k) {
        if (k > 0)
            fact *= k;
        REQUIRE(e.coefficient(key(k, 0, Partition::ones(k), Partition::ones(k))) == 1 / fact);
    }
    REQUIRE(exp(TruncatedSeries(t)) == TruncatedSeries::one(t));
    REQUIRE(log(TruncatedSeries::one(t)).is_zero());

    // log(1 + x) = x - x^2/2 + x^3/3 - ...
    const auto l = log(TruncatedSeries::one(t) + x);
    for (int k = 1; k <= 4; ++k)
        REQUIRE(l.coefficient(key(k, 0, Partition::ones(k), Partition::ones(k))) == ratio(k % 2 ? 1 : -1, k));

    REQUIRE_THROWS_WITH(exp(TruncatedSeries::one(t)), "exp requires zero constant term");
    REQUIRE_THROWS_AS(exp(TruncatedSeries::one(t)), std::domain_error);
    REQUIRE_THROWS_WITH(log(x), "log requires constant term 1");
}

TEST_CASE("exp and log are inverse on random series")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = testing::random_series(rng, small, {.symbols = trial % 2 == 0});
        REQUIRE(log(exp(s)) == s);
        const auto u = testing::random_series(rng, small, {.constant = true});
        REQUIRE(exp(log(u)) == u);
        REQUIRE(exp(s + u - TruncatedSeries::one(small)) == exp(s) * exp(u - TruncatedSeries::one(small)));
    }
}

TEST_CASE("exp and log invert on tau")
{
    const auto tau = build_tau(4, 4);
    REQUIRE(exp(log(tau)) == tau);
}

TEST_CASE("incompatible truncations are rejected")
{
    TruncatedSeries a(Truncation::orders(2, 2));
    const TruncatedSeries b(Truncation::orders(3, 2));
    REQUIRE_THROWS_WITH(a += b, "incompatible truncation orders");
    REQUIRE_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("power-sum derivatives")
{
    const Truncation t = Truncation::orders(3, 0);
    const auto s = TruncatedSeries::monomial(t, key(3, 0, {2, 1}, {1, 1, 1}), 5);
    REQUIRE(d_dp(s, 1, Side::P) == TruncatedSeries::monomial(t, key(3, 0, {2}, {1, 1, 1}), 5));
    REQUIRE(d_dp(s, 1, Side::PPrime) == TruncatedSeries::monomial(t, key(3, 0, {2, 1}, {1, 1}), 15));
    REQUIRE(d_dp(s, 3, Side::P).is_zero());

    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = testing::random_series(rng, small, {.terms = 8});
        REQUIRE(d_dp(d_dp(a, 1, Side::P), 2, Side::PPrime) == d_dp(d_dp(a, 2, Side::PPrime), 1, Side::P));
        const auto b = testing::random_series(rng, small, {.constant = true});
        // Leibniz holds below the top weight, where truncated products lost nothing
        Truncation lower = small;
        lower.p_weight_max -= 1;
        REQUIRE(d_dp(a * b, 1, Side::P).with_truncation(lower)
                == (d_dp(a, 1, Side::P) * b + a * d_dp(b, 1, Side::P)).with_truncation(lower));
    }
}

TEST_CASE("second mixed derivative of tau read off directly")
{
    const auto tau = build_tau(4, 3);
    const auto dd = d_dp(d_dp(tau, 1, Side::P), 1, Side::PPrime);
    for (const auto& [k, c] : dd.terms()) {
        const Partition mu = merge(k.mu, Partition{1});
        const Partition nu = merge(k.nu, Partition{1});
        const MonomialKey up{k.dq, k.b, mu, nu, {}};
        REQUIRE(c == tau.coefficient(up) * mu.multiplicity(1) * nu.multiplicity(1));
    }
}

TEST_CASE("q rescaling")
{
    const Truncation t = Truncation::orders(2, 3);
    const auto q = TruncatedSeries::monomial(t, key(1, 0));
    const auto scaled = scale_q_exp(q, 2);
    // q e^{2 beta}
    REQUIRE(scaled.coefficient(key(1, 0)) == 1);
    REQUIRE(scaled.coefficient(key(1, 1)) == 2);
    REQUIRE(scaled.coefficient(key(1, 2)) == 2);
    REQUIRE(scaled.coefficient(key(1, 3)) == ratio(4, 3));
    REQUIRE(scale_q_exp(q, 0) == q);
    REQUIRE(exp_beta(t, 2) * q == scaled);
    REQUIRE(multiply_by_q_power(q, 1) == q * q);
    REQUIRE(multiply_by_q_power(q, 2).is_zero());

    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = testing::random_series(rng, small, {.constant = true});
        const auto b = testing::random_series(rng, small, {.symbols = true});
        const int n = trial % 7 - 3;
        REQUIRE(scale_q_exp(a * b, n) == scale_q_exp(a, n) * scale_q_exp(b, n));
        REQUIRE(scale_q_exp(scale_q_exp(a, n), -n) == a);
    }
}

TEST_CASE("power-sum shifts")
{
    Truncation t = Truncation::orders(2, 0);
    t.z_max = 2;
    const auto p1sq = TruncatedSeries::monomial(t, key(0, 0, {1, 1}));
    const std::vector<PowerSumShift> by_z{{1, Side::P, {ShiftTerm{1, 1, std::nullopt}}}};
    const auto shifted = shift_p(p1sq, by_z);
    REQUIRE(shifted.size() == 3);
    REQUIRE(shifted.coefficient(key(0, 0, {1, 1})) == 1);
    REQUIRE(shifted.coefficient(key(0, 0, {1}, {}, 1)) == 2);
    REQUIRE(shifted.coefficient(key(0, 0, {}, {}, 2)) == 1);

    REQUIRE(shift_p(p1sq, std::span<const PowerSumShift>{}) == p1sq);

    const std::vector<PowerSumShift> by_symbol{{1, Side::P, {ShiftTerm{3, 0, Perturbation{Side::P, 1}}}}};
    const auto linear = shift_p(p1sq, by_symbol);
    MonomialKey s_key = key(0, 0, {1});
    s_key.aux.symbols = {Perturbation{Side::P, 1}};
    REQUIRE(linear.coefficient(s_key) == 6);
    REQUIRE(linear.size() == 2);

    const std::vector<PowerSumShift> bad{{1, Side::P, {ShiftTerm{1, 1, Perturbation{Side::P, 1}}}}};
    REQUIRE_THROWS_WITH(shift_p(p1sq, bad), "unsupported shift order");
    const std::vector<PowerSumShift> constant{{1, Side::P, {ShiftTerm{1, 0, std::nullopt}}}};
    REQUIRE_THROWS_WITH(shift_p(p1sq, constant), "unsupported shift order");
}

TEST_CASE("first-order z shift of tau is minus the p1 derivative")
{
    const auto tau = build_tau(4, 3);
    Truncation wide = tau.truncation();
    wide.z_max = 1;
    std::vector<PowerSumShift> shifts;
    for (int k = 1; k <= 4; ++k)
        shifts.push_back({k, Side::P, {ShiftTerm{-1, k, std::nullopt}}});
    const auto shifted = shift_p(tau.with_truncation(wide), shifts);
    REQUIRE(coefficient_of_z(shifted, 0) == tau);
    REQUIRE(coefficient_of_z(shifted, 1) == scale(d_dp(tau, 1, Side::P), -1));
}

TEST_CASE("symbol extraction")
{
    Truncation t = small;
    MonomialKey with{1, 0, {1}, {1}, AuxMonomial{0, {Perturbation{Side::P, 2}}}};
    TruncatedSeries s = TruncatedSeries::monomial(t, key(1, 0, {1}, {1}), 4);
    s.add_term(with, 5);
    REQUIRE(symbol_free_part(s) == TruncatedSeries::monomial(t, key(1, 0, {1}, {1}), 4));
    REQUIRE(coefficient_of_symbol(s, Perturbation{Side::P, 2}) == TruncatedSeries::monomial(t, key(1, 0, {1}, {1}), 5));
    REQUIRE(coefficient_of_symbol(s, Perturbation{Side::P, 1}).is_zero());

    TruncatedSeries mixed(t);
    mixed.add_term(key(2, 0, {2}, {1, 1}), 1);
    mixed.add_term(key(2, 0, {1, 1}, {1, 1}), 2);
    const auto restricted = restrict_to_first_power_sums(mixed);
    REQUIRE(restricted.size() == 1);
    REQUIRE(restricted.coefficient(key(2, 0, {1, 1}, {1, 1})) == 2);
}

TEST_CASE("monomial text")
{
    REQUIRE(format_monomial(key(2, 1, {1, 1}, {2})) == "q^2 beta^1 p[1,1] p'[2]");
    MonomialKey k = key(0, 0, {}, {}, -1);
    k.aux.symbols = {Perturbation{Side::P, 1}};
    REQUIRE(format_monomial(k) == "q^0 beta^0 p[] p'[] z^-1 s1");
}
