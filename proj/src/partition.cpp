#include "hurwitz/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

namespace hurwitz {

std::string to_string(const Rational& value)
{
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(const std::string& text)
{
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0)
        throw std::invalid_argument("malformed rational \"" + text + "\"");
    r.canonicalize();
    return r;
}

Integer factorial(int n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    cache();
}

Partition::Partition(std::vector<int> parts, unchecked_tag) : parts_(std::move(parts)) { cache(); }

void Partition::cache()
{
    size_ = 0;
    multiplicities_.assign(parts_.empty() ? 0 : parts_.front() + 1, 0);
    for (int p : parts_) {
        size_ += p;
        ++multiplicities_[p];
    }
}

Partition Partition::from_unsorted(std::vector<int> parts)
{
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::ones(int d) { return Partition(std::vector<int>(static_cast<std::size_t>(d), 1), unchecked_tag{}); }

Partition Partition::transposition(int d)
{
    if (d < 2)
        throw std::invalid_argument("no transpositions in S(d) for d < 2");
    std::vector<int> parts(static_cast<std::size_t>(d - 1), 1);
    parts[0] = 2;
    return Partition(std::move(parts), unchecked_tag{});
}

Partition Partition::conjugate() const
{
    std::vector<int> conj(static_cast<std::size_t>(largest()), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j)
            ++conj[j];
    return Partition(std::move(conj), unchecked_tag{});
}

Partition Partition::without_part(int k) const
{
    auto it = std::find(parts_.begin(), parts_.end(), k);
    if (it == parts_.end())
        throw std::invalid_argument("part not present");
    std::vector<int> rest;
    rest.reserve(parts_.size() - 1);
    rest.insert(rest.end(), parts_.begin(), it);
    rest.insert(rest.end(), it + 1, parts_.end());
    return Partition(std::move(rest), Partition::unchecked_tag{});
}

Partition merge(const Partition& a, const Partition& b)
{
    std::vector<int> out(a.parts_.size() + b.parts_.size());
    std::merge(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end(), out.begin(), std::greater<>());
    return Partition(std::move(out), Partition::unchecked_tag{});
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b)
{
    if (auto c = a.size_ <=> b.size_; c != 0)
        return c;
    // reverse lexicographic: larger leading parts sort first
    return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(), a.parts_.begin(), a.parts_.end());
}

std::vector<Partition> partitions_of(int d)
{
    std::vector<Partition> out;
    if (d < 0)
        return out;
    std::vector<int> current;
    // parts chosen in decreasing order, largest first, yields reverse-lex order
    std::function<void(int, int)> fill = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int k = std::min(remaining, max_part); k >= 1; --k) {
            current.push_back(k);
            fill(remaining - k, k);
            current.pop_back();
        }
    };
    fill(d, d);
    return out;
}

std::vector<Partition> enumerate_partitions(int d_max)
{
    if (d_max < 0)
        throw std::invalid_argument("d_max must be nonnegative");
    std::vector<Partition> out;
    for (int d = 0; d <= d_max; ++d) {
        auto block = partitions_of(d);
        out.insert(out.end(), std::make_move_iterator(block.begin()), std::make_move_iterator(block.end()));
    }
    return out;
}

Integer z_mu(const Partition& mu)
{
    Integer z = 1;
    for (int k = 1; k <= mu.largest(); ++k) {
        const int m = mu.multiplicity(k);
        if (m == 0)
            continue;
        Integer kpow;
        mpz_ui_pow_ui(kpow.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
        z *= kpow * factorial(m);
    }
    return z;
}

Integer class_size(const Partition& mu) { return factorial(mu.size()) / z_mu(mu); }

MayaSet maya_set(const Partition& lambda)
{
    MayaSet set;
    const int len = lambda.length();
    std::vector<int> members; // doubled values 2(lambda_i - i) + 1 for i = 1..len
    members.reserve(static_cast<std::size_t>(len));
    for (int i = 1; i <= len; ++i) {
        const int twice = 2 * (lambda[static_cast<std::size_t>(i - 1)] - i) + 1;
        members.push_back(twice);
        if (twice > 0)
            set.plus.push_back({twice});
    }
    // indices i > len contribute exactly the vacuum values -i + 1/2, so only
    // -1/2 .. -len + 1/2 can be missing
    for (int j = 1; j <= len; ++j) {
        const int twice = -2 * j + 1;
        if (std::find(members.begin(), members.end(), twice) == members.end())
            set.minus.push_back({twice});
    }
    return set;
}

Rational f2_contents(const Partition& lambda)
{
    // doubled coordinates: (1/8) sum [(2 lambda_i - 2i + 1)^2 - (1 - 2i)^2]
    Integer acc = 0;
    for (int i = 1; i <= lambda.length(); ++i) {
        const long shifted = 2L * (lambda[static_cast<std::size_t>(i - 1)] - i) + 1;
        const long vacuum = 1L - 2L * i;
        acc += shifted * shifted - vacuum * vacuum;
    }
    return ratio(acc, 8);
}

Rational f2_maya(const Partition& lambda)
{
    const MayaSet set = maya_set(lambda);
    Integer acc = 0;
    for (auto h : set.plus)
        acc += static_cast<long>(h.twice) * h.twice;
    for (auto h : set.minus)
        acc -= static_cast<long>(h.twice) * h.twice;
    return ratio(acc, 8);
}

std::string format_partition(const Partition& p)
{
    std::string out;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(p[i]);
    }
    return out;
}

Partition parse_partition(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty() || text == "0")
        return {};
    std::vector<int> parts;
    while (true) {
        const auto comma = text.find(',');
        const auto token = trim(text.substr(0, comma));
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size() || value <= 0)
            throw std::invalid_argument("malformed partition \"" + std::string(text) + "\"");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        text = text.substr(comma + 1);
    }
    return Partition::from_unsorted(std::move(parts));
}

} // namespace hurwitz
