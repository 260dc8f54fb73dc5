#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Integer partition stored as a weakly decreasing list of positive parts.
///
/// The multiplicity table (index k holds the number of parts equal to k) is
/// cached alongside the parts since centralizer orders and derivatives read
/// it, while contents and Maya sets walk the parts.
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument unless the parts are positive and
    /// weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts arbitrary positive parts into canonical order.
    static Partition from_unsorted(std::vector<int> parts);

    /// The partition (1^d), cycle type of the identity in S(d).
    static Partition ones(int d);

    /// Cycle type (2,1^{d-2}) of a transposition; requires d >= 2.
    static Partition transposition(int d);

    std::span<const int> parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    /// Number of parts equal to k.
    int multiplicity(int k) const
    {
        return k >= 1 && k < static_cast<int>(multiplicities_.size()) ? multiplicities_[k] : 0;
    }

    Partition conjugate() const;

    /// Copy with one part equal to k removed; k must be present.
    Partition without_part(int k) const;

    /// Multiset union of parts.
    friend Partition merge(const Partition& a, const Partition& b);

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

    /// Orders by size, then reverse-lexicographically, so (4) < (3,1) < (2,2).
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    struct unchecked_tag {};
    Partition(std::vector<int> parts, unchecked_tag);
    void cache();

    std::vector<int> parts_;
    std::vector<int> multiplicities_;
    int size_ = 0;
};

/// All partitions of d in reverse-lexicographic order.
std::vector<Partition> partitions_of(int d);

/// All partitions of every size 0..d_max, grouped by size, each group
/// reverse-lexicographic.
std::vector<Partition> enumerate_partitions(int d_max);

/// Centralizer order prod_k k^{m_k} m_k!, so |C_mu| = d!/z_mu.
Integer z_mu(const Partition& mu);

/// |C_mu| = d!/z_mu.
Integer class_size(const Partition& mu);

/// Half-integer stored as the odd integer 2k.
struct HalfInteger {
    int twice = 1;

    friend auto operator<=>(const HalfInteger&, const HalfInteger&) = default;
    Rational value() const { return ratio(twice, 2); }
};

/// Finite encoding of the set {lambda_i - i + 1/2}: `plus` holds the
/// positive members, `minus` holds the negative half-integers missing from
/// it. Both are sorted in decreasing order.
struct MayaSet {
    std::vector<HalfInteger> plus;
    std::vector<HalfInteger> minus;

    int charge() const { return static_cast<int>(plus.size()) - static_cast<int>(minus.size()); }
};

MayaSet maya_set(const Partition& lambda);

/// (1/2) sum_i [(lambda_i - i + 1/2)^2 - (-i + 1/2)^2]; equals the total
/// content sum_{(i,j)} (j - i).
Rational f2_contents(const Partition& lambda);

/// sum_{k in S+} k^2/2 - sum_{k in S-} k^2/2 over the Maya set.
Rational f2_maya(const Partition& lambda);

/// Comma-separated parts, e.g. "3,1,1"; the empty partition is "".
std::string format_partition(const Partition& p);

/// Accepts "3,1,1" (any order, surrounding spaces allowed); "" or "0" give
/// the empty partition. Throws std::invalid_argument on bad input.
Partition parse_partition(std::string_view text);

} // namespace hurwitz
