#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hurwitz/series.hpp"

namespace hurwitz {

/// Outcome of checking one identity as an exact statement about truncated
/// series: the identity holds iff the residual is zero.
struct VerificationReport {
    std::string identity;
    /// Orders inside which the residual is guaranteed meaningful.
    int d_max_effective = 0;
    int b_max_effective = 0;
    TruncatedSeries residual;
    bool pass = false;
    std::optional<MonomialKey> first_failure;
    std::string note;
};

/// Fills pass and first_failure from the residual.
VerificationReport make_report(std::string identity, int d_max_effective, int b_max_effective,
                               TruncatedSeries residual, std::string note = {});

/// tau d2tau/dp1dp'1 - dtau/dp1 dtau/dp'1 - q tau(e^beta q) tau(e^-beta q).
TruncatedSeries toda_residual(const TruncatedSeries& tau);

VerificationReport verify_toda(const TruncatedSeries& tau);
VerificationReport verify_toda(int d_max, int b_max);

/// n(4n^2 - 1)/24, the beta exponent in tau_n = q^{n^2/2} e^{c_n beta} tau(e^{n beta} q).
Rational tau_n_beta_exponent(int n);

/// Twice the q exponent of the tau_n prefactor, i.e. n^2.
int tau_n_q_exponent_twice(int n);

/// tau -> e^{c_n beta} tau(e^{n beta} q): tau_n with its formal q^{n^2/2}
/// prefactor stripped.
TruncatedSeries tau_n_reduced(const TruncatedSeries& tau, int n);

/// Checks that n = 0 is the identity and that the n and -n maps invert each
/// other; |n| <= 3.
VerificationReport verify_tau_n(int n, const TruncatedSeries& tau);
VerificationReport verify_tau_n(int n, int d_max, int b_max);

/// The lattice equation tau_n d2tau_n - dtau_n dtau_n = tau_{n+1} tau_{n-1}
/// for the closed-form tau_n, with the q^{n^2} prefactors divided out.
VerificationReport verify_toda_lattice(int n, const TruncatedSeries& tau);

/// Bilinear identity at level m with a single first-order perturbation s_n
/// (Side::P) or s'_n (Side::PPrime). The z shift sits on the alphabet of the
/// side's own exponential prefactor:
///
///   q^{m+1} e^{m(m+1) beta/2} [z^{-1-m}] e^{-2 sum s_k/(k z^k)}
///       tau(P+S+z, P'+S', e^{(m+1)beta} q) tau(P-S-z, P'-S', e^{-beta} q)
///   = [z^{m+1}] e^{2 sum s'_k/(k z^k)}
///       tau(P+S, P'+S'-z, e^{m beta} q) tau(P-S, P'-S'+z, q)
///
/// where z stands for the shift p_k -> p_k +/- z^k.
struct HirotaQuery {
    int m = 0;
    int n_s = 1;
    Side side = Side::P;
};

/// Left minus right, first-order symbol included. Throws
/// std::invalid_argument("restricted Hirota scope") unless m in {-1,0,1}
/// and 1 <= n_s <= 3.
TruncatedSeries hirota_residual(const HirotaQuery& query, const TruncatedSeries& tau);

VerificationReport verify_hirota(const HirotaQuery& query, const TruncatedSeries& tau);
VerificationReport verify_hirota(const HirotaQuery& query, int d_max, int b_max);

/// At m = 0 the s_1 coefficient of the Hirota residual is twice the Toda
/// residual for every series tau; the report's residual is their difference.
VerificationReport verify_hirota_reduces_to_toda(const TruncatedSeries& tau);

/// Dense coefficients c[d][b] of a series in x = q p_1 p'_1 and beta.
class XBetaSeries {
public:
    XBetaSeries(int x_max, int b_max);

    int x_max() const { return x_max_; }
    int b_max() const { return b_max_; }
    Rational& at(int x, int b) { return c_[index(x, b)]; }
    const Rational& at(int x, int b) const { return c_[index(x, b)]; }

    friend XBetaSeries operator*(const XBetaSeries& a, const XBetaSeries& b);
    XBetaSeries& operator+=(const XBetaSeries& other);
    XBetaSeries& operator-=(const XBetaSeries& other);

    /// d/dx.
    XBetaSeries derivative() const;
    /// x * (this).
    XBetaSeries times_x() const;
    /// x -> e^{n beta} x.
    XBetaSeries scale_x_exp(int n) const;
    XBetaSeries exp() const;

private:
    std::size_t index(int x, int b) const
    {
        return static_cast<std::size_t>(x) * static_cast<std::size_t>(b_max_ + 1) + static_cast<std::size_t>(b);
    }

    int x_max_;
    int b_max_;
    std::vector<Rational> c_;
};

/// F_d(beta) = sum_b H_{d,b} beta^b / b! for the connected simple-Hurwitz
/// series, computed from the one-variable equation
/// d^2 F_d = [x^{d-1}] exp(sum_{d'} F_{d'} x^{d'} (e^{d' beta} + e^{-d' beta} - 2))
/// alone, without reference to tau.
XBetaSeries simple_hurwitz_by_recursion(int x_max, int b_max);

/// Checks, for p_k = p'_k = 0 (k >= 2), that tau depends on q, p_1, p'_1
/// only through x = q p_1 p'_1, that it satisfies the one-variable equation
/// tau tau' + x (tau tau'' - tau'^2) = tau(e^beta x) tau(e^-beta x), and that
/// log tau agrees with simple_hurwitz_by_recursion.
VerificationReport verify_toda_specialized(const TruncatedSeries& tau);
VerificationReport verify_toda_specialized(int x_max, int b_max);

} // namespace hurwitz
