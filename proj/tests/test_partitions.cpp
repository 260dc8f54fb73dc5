#include "catch_amalgamated.hpp"

#include "hurwitz/partition.hpp"

#include "test_support.hpp"

using namespace hurwitz;

namespace {

// total content sum over boxes, straight from the Young diagram
Rational contents_by_boxes(const Partition& lambda)
{
    long total = 0;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j)
            total += j - i;
    return total;
}

} // namespace

TEST_CASE("partition invariants are enforced")
{
    const Partition p{3, 1, 1};
    REQUIRE(p.size() == 5);
    REQUIRE(p.length() == 3);
    REQUIRE(p.multiplicity(1) == 2);
    REQUIRE(p.multiplicity(3) == 1);
    REQUIRE(p.multiplicity(2) == 0);

    REQUIRE(Partition{}.size() == 0);
    REQUIRE(Partition{}.length() == 0);

    REQUIRE_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    REQUIRE_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    REQUIRE(Partition::from_unsorted({1, 3, 1}) == p);
}

TEST_CASE("enumeration order and counts")
{
    const auto zero = enumerate_partitions(0);
    REQUIRE(zero.size() == 1);
    REQUIRE(zero[0].empty());

    const auto upto4 = enumerate_partitions(4);
    std::vector<int> counts(5, 0);
    for (const auto& p : upto4)
        ++counts[static_cast<std::size_t>(p.size())];
    REQUIRE(counts == std::vector<int>{1, 1, 2, 3, 5});

    const auto four = partitions_of(4);
    REQUIRE(four == std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    REQUIRE(std::is_sorted(upto4.begin(), upto4.end()));

    REQUIRE(partitions_of(10).size() == 42);
}

TEST_CASE("partition counts match the pentagonal recurrence up to 30")
{
    const auto expected = testing::partition_numbers(30);
    for (int d = 0; d <= 30; ++d) {
        const auto ps = partitions_of(d);
        REQUIRE(static_cast<std::int64_t>(ps.size()) == expected[static_cast<std::size_t>(d)]);
        for (std::size_t i = 1; i < ps.size(); ++i)
            REQUIRE(ps[i - 1] < ps[i]);
    }
}

TEST_CASE("centralizer orders")
{
    REQUIRE(z_mu({1}) == 1);
    REQUIRE(z_mu({2, 1}) == 2);
    REQUIRE(class_size({2, 1}) == 3);
    REQUIRE(z_mu({2, 2}) == 8);
    REQUIRE(class_size({2, 2}) == 3);
    REQUIRE(z_mu({}) == 1);

    for (int d = 0; d <= 10; ++d) {
        Integer total = 0;
        for (const auto& mu : partitions_of(d))
            total += class_size(mu);
        REQUIRE(total == factorial(d));
    }
}

TEST_CASE("Maya sets")
{
    auto twice = [](const std::vector<HalfInteger>& v) {
        std::vector<int> out;
        for (auto h : v)
            out.push_back(h.twice);
        return out;
    };

    const MayaSet vacuum = maya_set({});
    REQUIRE(vacuum.plus.empty());
    REQUIRE(vacuum.minus.empty());

    const MayaSet one = maya_set({1});
    REQUIRE(twice(one.plus) == std::vector<int>{1});
    REQUIRE(twice(one.minus) == std::vector<int>{-1});

    // {3/2, -1/2, -5/2, -7/2, ...}
    const MayaSet hook = maya_set({2, 1});
    REQUIRE(twice(hook.plus) == std::vector<int>{3});
    REQUIRE(twice(hook.minus) == std::vector<int>{-3});

    for (const auto& p : enumerate_partitions(14)) {
        const MayaSet s = maya_set(p);
        REQUIRE(s.charge() == 0);
        for (auto h : s.plus)
            REQUIRE((h.twice > 0 && h.twice % 2 != 0));
        for (auto h : s.minus)
            REQUIRE((h.twice < 0 && h.twice % 2 != 0));
    }
}

TEST_CASE("f2 examples")
{
    REQUIRE(f2_contents({}) == 0);
    REQUIRE(f2_contents({2}) == 1);
    REQUIRE(f2_contents({1, 1}) == -1);
    REQUIRE(f2_contents({3, 1}) == 2);
    REQUIRE(f2_contents({2, 1}) == 0);

    REQUIRE(f2_maya({}) == 0);
    REQUIRE(f2_maya({1}) == 0);
    REQUIRE(f2_maya({3, 1}) == 2);
}

TEST_CASE("both f2 formulas agree with the box contents up to size 14")
{
    for (const auto& p : enumerate_partitions(14)) {
        const Rational expected = contents_by_boxes(p);
        REQUIRE(f2_contents(p) == expected);
        REQUIRE(f2_maya(p) == expected);
        REQUIRE(f2_contents(p.conjugate()) == -expected);
    }
}

TEST_CASE("conjugation")
{
    REQUIRE(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    REQUIRE(Partition({}).conjugate() == Partition({}));
    for (const auto& p : enumerate_partitions(10))
        REQUIRE(p.conjugate().conjugate() == p);
}

TEST_CASE("partition text format")
{
    REQUIRE(format_partition({3, 1, 1}) == "3,1,1");
    REQUIRE(format_partition({}) == "");
    REQUIRE(parse_partition("3,1,1") == Partition({3, 1, 1}));
    REQUIRE(parse_partition(" 1, 3 ,1") == Partition({3, 1, 1}));
    REQUIRE(parse_partition("") == Partition{});
    REQUIRE(parse_partition("0") == Partition{});
    REQUIRE_THROWS_AS(parse_partition("3,,1"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_partition("3,-1"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_partition("a"), std::invalid_argument);
    for (const auto& p : enumerate_partitions(8))
        REQUIRE(parse_partition(format_partition(p)) == p);
}
