#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/characters.hpp"
#include "hurwitz/hurwitz.hpp"
#include "hurwitz/partition.hpp"

namespace hurwitz::oracle {

/// Images of 0..d-1. Products compose left to right: (a * b)(i) = b(a(i)).
using Permutation = std::vector<int>;

Permutation identity_permutation(int d);
Permutation compose(const Permutation& first, const Permutation& second);
Permutation inverse(const Permutation& p);
Partition cycle_type(const Permutation& p);

/// A fixed element of C_mu: consecutive cycles of lengths mu_1, mu_2, ...
Permutation class_representative(const Partition& mu);

/// All d(d-1)/2 transpositions of S(d).
std::vector<Permutation> transpositions(int d);

/// Monodromy data sigma0 * tau_1 * ... * tau_b * sigma_inf = id.
struct MonodromyTuple {
    int d = 0;
    Permutation sigma0;
    Permutation sigma_inf;
    std::vector<Permutation> transpositions;

    bool product_is_identity() const;
    /// The generated subgroup acts transitively on {0..d-1}.
    bool transitive() const;
};

struct OracleScaleLimit : std::runtime_error {
    OracleScaleLimit() : std::runtime_error("oracle scale limit") {}
};

struct OracleCaps {
    int d_max = 6;
    int b_max = 5;
};

enum class Enumeration {
    /// sigma0 fixed to one representative, weighted by |C_mu|; sigma_inf is
    /// read off the product.
    FixedRepresentative,
    /// Every sigma0 in C_mu and every sigma_inf in C_nu; only for small d.
    Naive,
};

struct OracleOptions {
    OracleCaps caps;
    Enumeration mode = Enumeration::FixedRepresentative;
    int jobs = 1;
};

struct TupleCounts {
    Integer all;
    Integer transitive;
};

/// Raw tuple counts (before dividing by d!) for fixed (d, mu, b), keyed by
/// the cycle type nu of sigma_inf.
std::map<Partition, TupleCounts> tuple_census(int d, const Partition& mu, int b, const OracleOptions& options = {});

/// (number of tuples with sigma0 in C_mu, b transpositions, sigma_inf in
/// C_nu, product = id) / d!, optionally restricted to transitive tuples.
Rational count_tuples(int d, const Partition& mu, const Partition& nu, int b, bool connected_only,
                      const OracleOptions& options = {});

struct Discrepancy {
    int d = 0;
    int b = 0;
    Partition mu;
    Partition nu;
    /// "disconnected/tau", "disconnected/burnside" or "connected/log-tau".
    std::string quantity;
    Rational oracle;
    Rational formula;
};

/// Compares the oracle against the tau coefficients, the Burnside character
/// sum and the log-tau coefficients for every d <= d_max, b <= b_max and all
/// (mu, nu). Empty on full agreement.
std::vector<Discrepancy> compare_all(int d_max, int b_max, const HurwitzTables& tables, CharacterCache& cache,
                                     const OracleOptions& options = {});
std::vector<Discrepancy> compare_all(int d_max, int b_max, CharacterCache& cache, const OracleOptions& options = {});
std::vector<Discrepancy> compare_all(int d_max, int b_max, const OracleOptions& options = {});

} // namespace hurwitz::oracle
