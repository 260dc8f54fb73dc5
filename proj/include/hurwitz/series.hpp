#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Which alphabet a power sum belongs to: P = (p_1, p_2, ...) records the
/// monodromy over 0, P' = (p'_1, p'_2, ...) the monodromy over infinity.
enum class Side { P, PPrime };

/// An auxiliary perturbation symbol s_n (Side::P) or s'_n (Side::PPrime).
/// These only ever appear to first order: s * s = 0.
struct Perturbation {
    Side side = Side::P;
    int index = 1;

    friend auto operator<=>(const Perturbation&, const Perturbation&) = default;
};

std::string format_perturbation(const Perturbation& s);

/// Exponents of the auxiliary symbols: a Laurent power of z and a sorted set
/// of distinct first-order perturbation symbols.
struct AuxMonomial {
    int z = 0;
    std::vector<Perturbation> symbols;

    bool trivial() const { return z == 0 && symbols.empty(); }
    friend auto operator<=>(const AuxMonomial&, const AuxMonomial&) = default;
};

/// q^dq beta^b p_mu p'_nu times auxiliary symbols.
struct MonomialKey {
    int dq = 0;
    int b = 0;
    Partition mu;
    Partition nu;
    AuxMonomial aux;

    friend auto operator<=>(const MonomialKey&, const MonomialKey&) = default;
    friend bool operator==(const MonomialKey&, const MonomialKey&) = default;
};

std::string format_monomial(const MonomialKey& key);

/// Truncation orders. Keys with dq > d_max, b > b_max, |mu| or |nu| above
/// p_weight_max, or z outside [z_min, z_max] are dropped.
///
/// The q, beta and weight bounds describe monomial ideals, so products and
/// the substitutions below are exact modulo them. The z window is exact only
/// while every factor has z >= 0; callers that later multiply by negative z
/// powers must budget z_max accordingly.
struct Truncation {
    int d_max = 0;
    int b_max = 0;
    int p_weight_max = 0;
    int z_min = 0;
    int z_max = 0;

    static Truncation orders(int d_max, int b_max) { return {d_max, b_max, d_max, 0, 0}; }

    bool admits(const MonomialKey& key) const
    {
        return key.dq >= 0 && key.dq <= d_max && key.b >= 0 && key.b <= b_max && key.mu.size() <= p_weight_max
            && key.nu.size() <= p_weight_max && key.aux.z >= z_min && key.aux.z <= z_max;
    }

    friend bool operator==(const Truncation&, const Truncation&) = default;
};

/// Sparse truncated power series over exact rationals in q, beta, P, P' and
/// the auxiliary symbols. Zero coefficients are never stored.
class TruncatedSeries {
public:
    using Terms = std::map<MonomialKey, Rational>;

    explicit TruncatedSeries(Truncation t = {}) : truncation_(t) {}

    static TruncatedSeries one(Truncation t);
    static TruncatedSeries monomial(Truncation t, MonomialKey key, Rational coeff = 1);

    const Truncation& truncation() const { return truncation_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const MonomialKey& key) const;
    Rational constant_term() const;

    /// Adds coeff to the coefficient of key; silently ignores keys outside
    /// the truncation.
    void add_term(const MonomialKey& key, const Rational& coeff);

    /// Same series viewed under different orders; keys outside are dropped.
    TruncatedSeries with_truncation(Truncation t) const;

    TruncatedSeries& operator+=(const TruncatedSeries& other);
    TruncatedSeries& operator-=(const TruncatedSeries& other);
    TruncatedSeries& operator*=(const Rational& factor);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& f) { return a *= f; }
    friend TruncatedSeries operator*(const Rational& f, TruncatedSeries a) { return a *= f; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        return a.truncation_ == b.truncation_ && a.terms_ == b.terms_;
    }

private:
    void require_compatible(const TruncatedSeries& other) const;

    Truncation truncation_;
    Terms terms_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const TruncatedSeries& a, const Rational& factor);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// exp(s) for s with zero constant term; throws std::domain_error otherwise.
TruncatedSeries exp(const TruncatedSeries& s);

/// log(s) for s with constant term 1; throws std::domain_error otherwise.
TruncatedSeries log(const TruncatedSeries& s);

/// Partial derivative with respect to p_k (Side::P) or p'_k (Side::PPrime).
TruncatedSeries d_dp(const TruncatedSeries& s, int k, Side side);

/// The substitution q -> e^{n beta} q, expanded to the beta order of s.
TruncatedSeries scale_q_exp(const TruncatedSeries& s, int n);

/// Multiplies by q^k (k >= 0).
TruncatedSeries multiply_by_q_power(const TruncatedSeries& s, int k);

/// e^{c beta} as a series under truncation t.
TruncatedSeries exp_beta(Truncation t, const Rational& c);

/// One term of a power-sum shift: coeff * z^z_power * symbol.
struct ShiftTerm {
    Rational coeff = 1;
    int z_power = 0;
    std::optional<Perturbation> symbol;
};

/// p_k -> p_k + sum(amount) on the given side.
struct PowerSumShift {
    int k = 1;
    Side side = Side::P;
    std::vector<ShiftTerm> amount;
};

/// Substitutes every listed shift and expands. Each ShiftTerm must be either
/// a pure nonzero power of z or a single first-order perturbation symbol;
/// anything else throws std::invalid_argument("unsupported shift order").
/// The result keeps the truncation of s, so widen its z window first.
TruncatedSeries shift_p(const TruncatedSeries& s, std::span<const PowerSumShift> shifts);

/// Coefficient of z^k, returned with z removed from every key.
TruncatedSeries coefficient_of_z(const TruncatedSeries& s, int k);

/// Coefficient of a first-order symbol, returned with the symbol removed.
TruncatedSeries coefficient_of_symbol(const TruncatedSeries& s, const Perturbation& symbol);

/// Part of s carrying no perturbation symbols.
TruncatedSeries symbol_free_part(const TruncatedSeries& s);

/// Sets p_k = p'_k = 0 for all k >= 2.
TruncatedSeries restrict_to_first_power_sums(const TruncatedSeries& s);

} // namespace hurwitz
