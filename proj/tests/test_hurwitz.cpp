#include "catch_amalgamated.hpp"

#include "hurwitz/hurwitz.hpp"

using namespace hurwitz;

namespace {

MonomialKey key(int dq, int b, Partition mu, Partition nu)
{
    return MonomialKey{dq, b, std::move(mu), std::move(nu), {}};
}

// genus zero simple Hurwitz numbers in closed form
Rational genus_zero(int d)
{
    Rational power = 1;
    for (int i = 0; i < d - 3; ++i)
        power *= d;
    if (d < 3)
        power = Rational(1) / rational_pow(Rational(d), 3 - d);
    return power * Rational(factorial(2 * d - 2)) / Rational(factorial(d));
}

} // namespace

TEST_CASE("Schur functions in power sums")
{
    const auto s2 = schur_in_power_sums({2});
    REQUIRE(s2.size() == 2);
    REQUIRE(s2.coefficient(key(0, 0, {2}, {})) == ratio(1, 2));
    REQUIRE(s2.coefficient(key(0, 0, {1, 1}, {})) == ratio(1, 2));

    const auto s11 = schur_in_power_sums({1, 1});
    REQUIRE(s11.coefficient(key(0, 0, {2}, {})) == ratio(-1, 2));

    // s_{2,1} = p1^3/3 - p3/3
    const auto s21 = schur_in_power_sums({2, 1});
    REQUIRE(s21.coefficient(key(0, 0, {1, 1, 1}, {})) == ratio(1, 3));
    REQUIRE(s21.coefficient(key(0, 0, {3}, {})) == ratio(-1, 3));
    REQUIRE(s21.coefficient(key(0, 0, {2, 1}, {})) == 0);
}

TEST_CASE("tau coefficients")
{
    const auto tau = build_tau(3, 3);
    REQUIRE(tau.constant_term() == 1);
    REQUIRE(tau.coefficient(key(1, 0, {1}, {1})) == 1);
    REQUIRE(tau.coefficient(key(2, 0, {2}, {2})) == ratio(1, 2));
    REQUIRE(tau.coefficient(key(2, 1, {2}, {1, 1})) == ratio(1, 2));
    for (const auto& [k, c] : tau.terms()) {
        REQUIRE(k.mu.size() == k.dq);
        REQUIRE(k.nu.size() == k.dq);
        REQUIRE(k.aux.trivial());
    }
}

TEST_CASE("sharded construction matches the serial one")
{
    CharacterCache cache;
    REQUIRE(build_tau(5, 4, cache, 3) == build_tau(5, 4, 1));
}

TEST_CASE("Burnside sums")
{
    REQUIRE(cov_burnside(3, std::vector<Partition>{}) == ratio(1, 6));
    REQUIRE(cov_burnside(2, std::vector<Partition>{{2}, {2}}) == ratio(1, 2));
    REQUIRE(cov_burnside(2, std::vector<Partition>{{2}}) == 0);
    // brute-force values
    const Partition t3{2, 1};
    REQUIRE(cov_burnside(3, std::vector<Partition>{t3, t3, t3, t3}) == ratio(9, 2));
    REQUIRE(cov_burnside(3, std::vector<Partition>(6, t3)) == ratio(81, 2));
    REQUIRE(cov_burnside(4, std::vector<Partition>{{2, 2}, {2, 2}, {2, 1, 1}, {2, 1, 1}}) == ratio(5, 4));
}

TEST_CASE("disconnected counts are the tau coefficients times b!")
{
    const HurwitzTables tables(4, 4, default_character_cache());
    for (int d = 1; d <= 4; ++d)
        for (int b = 0; b <= 4; ++b)
            for (const auto& mu : partitions_of(d))
                for (const auto& nu : partitions_of(d)) {
                    std::vector<Partition> classes{mu, nu};
                    if (b > 0 && d >= 2)
                        classes.insert(classes.end(), static_cast<std::size_t>(b), Partition::transposition(d));
                    const Rational expected = d >= 2 || b == 0 ? cov_burnside(d, classes) : Rational(0);
                    const auto record = tables.cov(d, b, mu, nu);
                    REQUIRE_FALSE(record.connected);
                    REQUIRE(record.value == expected);
                }
}

TEST_CASE("double Hurwitz numbers")
{
    REQUIRE(double_hurwitz(1, 0, {1}, {1}).value == 1);
    REQUIRE(double_hurwitz(2, 2, {1, 1}, {1, 1}).value == ratio(1, 2));
    REQUIRE(double_hurwitz(2, 4, {1, 1}, {1, 1}).value == ratio(1, 2));
    REQUIRE(double_hurwitz(3, 4, {1, 1, 1}, {1, 1, 1}).value == 4);
    REQUIRE(double_hurwitz(3, 2, {3}, {3}).value == 2);
    REQUIRE(double_hurwitz(4, 3, {4}, {1, 1, 1, 1}).value == 4);
    REQUIRE(double_hurwitz(4, 2, {2, 2}, {2, 2}).value == 1);

    const auto r = double_hurwitz(3, 4, {1, 1, 1}, {1, 1, 1});
    REQUIRE(r.connected);
    REQUIRE(r.genus == 0);
    REQUIRE(double_hurwitz(2, 4, {1, 1}, {1, 1}).genus == 1);

    REQUIRE_THROWS_AS(double_hurwitz(3, 1, {2}, {3}), std::invalid_argument);
}

TEST_CASE("genus")
{
    REQUIRE(covering_genus(4, {1, 1, 1}, {1, 1, 1}) == 0);
    REQUIRE(covering_genus(2, {3}, {3}) == 1);
    REQUIRE_FALSE(covering_genus(1, {1, 1}, {1, 1}).has_value());
    REQUIRE_FALSE(covering_genus(0, {1, 1}, {1, 1}).has_value());
}

TEST_CASE("symmetry, parity and the genus constraint")
{
    const HurwitzTables tables(5, 5, default_character_cache());
    for (int d = 1; d <= 5; ++d)
        for (int b = 0; b <= 5; ++b)
            for (const auto& mu : partitions_of(d))
                for (const auto& nu : partitions_of(d)) {
                    const auto r = tables.double_hurwitz(d, b, mu, nu);
                    REQUIRE(r.value == tables.double_hurwitz(d, b, nu, mu).value);
                    REQUIRE(r.value >= 0);
                    if ((b + mu.length() + nu.length()) % 2 != 0)
                        REQUIRE(r.value == 0);
                    if (!r.genus)
                        REQUIRE(r.value == 0);
                    else
                        REQUIRE(*r.genus == covering_genus(b, mu, nu));
                }
}

TEST_CASE("simple Hurwitz numbers in genus zero")
{
    REQUIRE(simple_hurwitz(0, 1) == 1);
    REQUIRE(simple_hurwitz(0, 2) == ratio(1, 2));
    REQUIRE(simple_hurwitz(0, 3) == 4);
    REQUIRE(simple_hurwitz(0, 4) == 120);
    for (int d = 1; d <= 6; ++d)
        REQUIRE(simple_hurwitz(0, d) == genus_zero(d));
    REQUIRE(simple_hurwitz(1, 2) == ratio(1, 2));
}

TEST_CASE("one fully ramified point gives integer counts")
{
    for (int d : {3, 4}) {
        const HurwitzTables tables(d, 6, default_character_cache());
        for (int b = 0; b <= 6; ++b)
            for (const auto& mu : partitions_of(d)) {
                const Rational v = tables.double_hurwitz(d, b, mu, Partition::ones(d)).value;
                REQUIRE(v.get_den() == 1);
            }
    }
}

TEST_CASE("table bounds are enforced")
{
    const HurwitzTables tables(3, 2, default_character_cache());
    REQUIRE_THROWS_AS(tables.double_hurwitz(4, 0, {4}, {4}), std::out_of_range);
    REQUIRE_THROWS_AS(tables.double_hurwitz(3, 3, {3}, {3}), std::out_of_range);
}
