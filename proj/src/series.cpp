#include "hurwitz/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hurwitz {

std::string format_perturbation(const Perturbation& s)
{
    return (s.side == Side::P ? "s" : "s'") + std::to_string(s.index);
}

std::string format_monomial(const MonomialKey& key)
{
    std::string out = "q^" + std::to_string(key.dq) + " beta^" + std::to_string(key.b);
    out += " p[" + format_partition(key.mu) + "] p'[" + format_partition(key.nu) + "]";
    if (key.aux.z != 0)
        out += " z^" + std::to_string(key.aux.z);
    for (const auto& s : key.aux.symbols)
        out += " " + format_perturbation(s);
    return out;
}

namespace {

// Multiplies auxiliary monomials; nullopt when a first-order symbol would
// appear squared.
std::optional<AuxMonomial> multiply_aux(const AuxMonomial& a, const AuxMonomial& b)
{
    AuxMonomial out;
    out.z = a.z + b.z;
    if (b.symbols.empty()) {
        out.symbols = a.symbols;
        return out;
    }
    if (a.symbols.empty()) {
        out.symbols = b.symbols;
        return out;
    }
    out.symbols.reserve(a.symbols.size() + b.symbols.size());
    std::merge(a.symbols.begin(), a.symbols.end(), b.symbols.begin(), b.symbols.end(), std::back_inserter(out.symbols));
    if (std::adjacent_find(out.symbols.begin(), out.symbols.end()) != out.symbols.end())
        return std::nullopt;
    return out;
}

int grade(const MonomialKey& key)
{
    return key.dq + key.b + key.mu.size() + key.nu.size() + static_cast<int>(key.aux.symbols.size());
}

bool is_constant(const MonomialKey& key)
{
    return key.dq == 0 && key.b == 0 && key.mu.empty() && key.nu.empty() && key.aux.trivial();
}

// Splits s into homogeneous components by grade. Keys of grade 0 other than
// the constant monomial would break the order-by-order recursions.
std::vector<TruncatedSeries> homogeneous_parts(const TruncatedSeries& s, int max_grade)
{
    std::vector<TruncatedSeries> parts(static_cast<std::size_t>(max_grade + 1), TruncatedSeries(s.truncation()));
    for (const auto& [key, c] : s.terms()) {
        const int g = grade(key);
        if (g == 0 && !is_constant(key))
            throw std::domain_error("exp/log need every non-constant monomial to have positive degree");
        parts[static_cast<std::size_t>(g)].add_term(key, c);
    }
    return parts;
}

int grade_bound(const TruncatedSeries& s)
{
    const auto& t = s.truncation();
    std::vector<Perturbation> symbols;
    for (const auto& [key, c] : s.terms())
        symbols.insert(symbols.end(), key.aux.symbols.begin(), key.aux.symbols.end());
    std::sort(symbols.begin(), symbols.end());
    symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
    return t.d_max + t.b_max + 2 * t.p_weight_max + static_cast<int>(symbols.size());
}

} // namespace

TruncatedSeries TruncatedSeries::one(Truncation t) { return monomial(t, MonomialKey{}); }

TruncatedSeries TruncatedSeries::monomial(Truncation t, MonomialKey key, Rational coeff)
{
    TruncatedSeries s(t);
    s.add_term(key, coeff);
    return s;
}

Rational TruncatedSeries::coefficient(const MonomialKey& key) const
{
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncatedSeries::constant_term() const { return coefficient(MonomialKey{}); }

void TruncatedSeries::add_term(const MonomialKey& key, const Rational& coeff)
{
    if (coeff == 0 || !truncation_.admits(key))
        return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

TruncatedSeries TruncatedSeries::with_truncation(Truncation t) const
{
    TruncatedSeries out(t);
    for (const auto& [key, c] : terms_)
        if (t.admits(key))
            out.terms_.emplace_hint(out.terms_.end(), key, c);
    return out;
}

void TruncatedSeries::require_compatible(const TruncatedSeries& other) const
{
    if (!(truncation_ == other.truncation_))
        throw std::invalid_argument("incompatible truncation orders");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other)
{
    require_compatible(other);
    for (const auto& [key, c] : other.terms_)
        add_term(key, c);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other)
{
    require_compatible(other);
    for (const auto& [key, c] : other.terms_)
        add_term(key, -c);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& factor)
{
    if (factor == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, c] : terms_)
        c *= factor;
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    a.require_compatible(b);
    const Truncation& t = a.truncation_;
    TruncatedSeries out(t);
    // keys are ordered by dq first, so the inner loop can stop early
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            if (ka.dq + kb.dq > t.d_max)
                break;
            if (ka.b + kb.b > t.b_max || ka.mu.size() + kb.mu.size() > t.p_weight_max
                || ka.nu.size() + kb.nu.size() > t.p_weight_max)
                continue;
            auto aux = multiply_aux(ka.aux, kb.aux);
            if (!aux || aux->z < t.z_min || aux->z > t.z_max)
                continue;
            MonomialKey key{ka.dq + kb.dq, ka.b + kb.b, merge(ka.mu, kb.mu), merge(ka.nu, kb.nu), std::move(*aux)};
            auto [it, inserted] = out.terms_.try_emplace(std::move(key), ca * cb);
            if (!inserted)
                it->second += ca * cb;
        }
    }
    std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
    return out;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }
TruncatedSeries scale(const TruncatedSeries& a, const Rational& factor) { return a * factor; }
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

// Both recursions use the Euler operator E (multiplication by the grade),
// which is a derivation: E(exp f) = exp(f) E(f) and E(s) = s E(log s).
TruncatedSeries exp(const TruncatedSeries& s)
{
    if (s.constant_term() != 0)
        throw std::domain_error("exp requires zero constant term");
    const int top = grade_bound(s);
    const auto f = homogeneous_parts(s, top);
    std::vector<TruncatedSeries> e(static_cast<std::size_t>(top + 1), TruncatedSeries(s.truncation()));
    e[0] = TruncatedSeries::one(s.truncation());
    for (int k = 1; k <= top; ++k) {
        TruncatedSeries acc(s.truncation());
        for (int j = 1; j <= k; ++j) {
            if (f[j].is_zero() || e[k - j].is_zero())
                continue;
            acc += (f[j] * e[k - j]) * Rational(j);
        }
        e[k] = acc * ratio(1, k);
    }
    TruncatedSeries out(s.truncation());
    for (const auto& part : e)
        out += part;
    return out;
}

TruncatedSeries log(const TruncatedSeries& s)
{
    if (s.constant_term() != 1)
        throw std::domain_error("log requires constant term 1");
    const int top = grade_bound(s);
    const auto u = homogeneous_parts(s, top);
    std::vector<TruncatedSeries> l(static_cast<std::size_t>(top + 1), TruncatedSeries(s.truncation()));
    for (int k = 1; k <= top; ++k) {
        TruncatedSeries acc = u[k] * Rational(k);
        for (int j = 1; j < k; ++j) {
            if (l[j].is_zero() || u[k - j].is_zero())
                continue;
            acc -= (l[j] * u[k - j]) * Rational(j);
        }
        l[k] = acc * ratio(1, k);
    }
    TruncatedSeries out(s.truncation());
    for (const auto& part : l)
        out += part;
    return out;
}

TruncatedSeries d_dp(const TruncatedSeries& s, int k, Side side)
{
    if (k < 1)
        throw std::invalid_argument("power-sum index must be positive");
    TruncatedSeries out(s.truncation());
    for (const auto& [key, c] : s.terms()) {
        const Partition& p = side == Side::P ? key.mu : key.nu;
        const int m = p.multiplicity(k);
        if (m == 0)
            continue;
        MonomialKey next = key;
        (side == Side::P ? next.mu : next.nu) = p.without_part(k);
        out.add_term(next, c * m);
    }
    return out;
}

TruncatedSeries scale_q_exp(const TruncatedSeries& s, int n)
{
    if (n == 0)
        return s;
    TruncatedSeries out(s.truncation());
    const int b_max = s.truncation().b_max;
    for (const auto& [key, c] : s.terms()) {
        // e^{n dq beta} = sum_j (n dq)^j beta^j / j!
        Rational term = c;
        const Rational rate = n * key.dq;
        MonomialKey next = key;
        for (int j = 0; key.b + j <= b_max; ++j) {
            if (j > 0)
                term *= rate / j;
            if (term == 0)
                break;
            next.b = key.b + j;
            out.add_term(next, term);
        }
    }
    return out;
}

TruncatedSeries multiply_by_q_power(const TruncatedSeries& s, int k)
{
    if (k < 0)
        throw std::invalid_argument("negative q powers are not representable");
    TruncatedSeries out(s.truncation());
    for (const auto& [key, c] : s.terms()) {
        MonomialKey next = key;
        next.dq += k;
        out.add_term(next, c);
    }
    return out;
}

TruncatedSeries exp_beta(Truncation t, const Rational& c)
{
    TruncatedSeries out(t);
    Rational term = 1;
    for (int b = 0; b <= t.b_max; ++b) {
        if (b > 0)
            term *= c / b;
        MonomialKey key;
        key.b = b;
        out.add_term(key, term);
    }
    return out;
}

namespace {

struct ExpansionTerm {
    int kept = 0; // remaining power of p_k
    AuxMonomial aux;
    Rational coeff;
};

// (p_k + sum(amount))^m as a list of (p_k power, aux monomial, coefficient).
std::vector<ExpansionTerm> expand_power(std::span<const ShiftTerm> amount, int m)
{
    std::map<std::pair<int, AuxMonomial>, Rational> current{{{0, AuxMonomial{}}, Rational(1)}};
    for (int step = 0; step < m; ++step) {
        std::map<std::pair<int, AuxMonomial>, Rational> next;
        for (const auto& [state, c] : current) {
            next[{state.first + 1, state.second}] += c;
            for (const auto& term : amount) {
                AuxMonomial factor;
                factor.z = term.z_power;
                if (term.symbol)
                    factor.symbols.push_back(*term.symbol);
                auto aux = multiply_aux(state.second, factor);
                if (!aux)
                    continue;
                next[{state.first, std::move(*aux)}] += c * term.coeff;
            }
        }
        current = std::move(next);
    }
    std::vector<ExpansionTerm> out;
    for (auto& [state, c] : current)
        if (c != 0)
            out.push_back({state.first, state.second, c});
    return out;
}

} // namespace

TruncatedSeries shift_p(const TruncatedSeries& s, std::span<const PowerSumShift> shifts)
{
    // merge amounts per (side, k)
    std::map<std::pair<Side, int>, std::vector<ShiftTerm>> table;
    for (const auto& shift : shifts) {
        if (shift.k < 1)
            throw std::invalid_argument("power-sum index must be positive");
        for (const auto& term : shift.amount) {
            const bool pure_z = !term.symbol && term.z_power != 0;
            const bool pure_symbol = term.symbol && term.z_power == 0;
            if (!pure_z && !pure_symbol)
                throw std::invalid_argument("unsupported shift order");
            if (term.coeff != 0)
                table[{shift.side, shift.k}].push_back(term);
        }
    }
    if (table.empty())
        return s;

    std::map<std::tuple<Side, int, int>, std::vector<ExpansionTerm>> expansions;
    auto expansion = [&](Side side, int k, int m) -> const std::vector<ExpansionTerm>& {
        auto key = std::make_tuple(side, k, m);
        auto it = expansions.find(key);
        if (it == expansions.end())
            it = expansions.emplace(key, expand_power(table.at({side, k}), m)).first;
        return it->second;
    };

    TruncatedSeries out(s.truncation());
    for (const auto& [key, c] : s.terms()) {
        // factors that get expanded, plus the untouched remainder of each side
        struct Factor {
            Side side;
            int k;
            const std::vector<ExpansionTerm>* terms;
        };
        std::vector<Factor> factors;
        std::vector<int> fixed_mu, fixed_nu;
        for (Side side : {Side::P, Side::PPrime}) {
            const Partition& p = side == Side::P ? key.mu : key.nu;
            auto& fixed = side == Side::P ? fixed_mu : fixed_nu;
            for (int k = p.largest(); k >= 1; --k) {
                const int m = p.multiplicity(k);
                if (m == 0)
                    continue;
                if (table.contains({side, k}))
                    factors.push_back({side, k, &expansion(side, k, m)});
                else
                    fixed.insert(fixed.end(), static_cast<std::size_t>(m), k);
            }
        }

        // depth-first walk over one expansion term per factor
        std::vector<int> mu_parts, nu_parts;
        auto walk = [&](auto&& self, std::size_t index, const AuxMonomial& aux, const Rational& coeff) -> void {
            if (index == factors.size()) {
                std::vector<int> mu = fixed_mu, nu = fixed_nu;
                mu.insert(mu.end(), mu_parts.begin(), mu_parts.end());
                nu.insert(nu.end(), nu_parts.begin(), nu_parts.end());
                MonomialKey next{key.dq, key.b, Partition::from_unsorted(std::move(mu)),
                                 Partition::from_unsorted(std::move(nu)), aux};
                out.add_term(next, coeff);
                return;
            }
            const Factor& f = factors[index];
            auto& parts = f.side == Side::P ? mu_parts : nu_parts;
            for (const auto& term : *f.terms) {
                auto combined = multiply_aux(aux, term.aux);
                if (!combined)
                    continue;
                parts.insert(parts.end(), static_cast<std::size_t>(term.kept), f.k);
                self(self, index + 1, *combined, coeff * term.coeff);
                parts.resize(parts.size() - static_cast<std::size_t>(term.kept));
            }
        };
        walk(walk, 0, key.aux, c);
    }
    return out;
}

TruncatedSeries coefficient_of_z(const TruncatedSeries& s, int k)
{
    Truncation t = s.truncation();
    t.z_min = t.z_max = 0;
    TruncatedSeries out(t);
    for (const auto& [key, c] : s.terms()) {
        if (key.aux.z != k)
            continue;
        MonomialKey next = key;
        next.aux.z = 0;
        out.add_term(next, c);
    }
    return out;
}

TruncatedSeries coefficient_of_symbol(const TruncatedSeries& s, const Perturbation& symbol)
{
    TruncatedSeries out(s.truncation());
    for (const auto& [key, c] : s.terms()) {
        auto it = std::find(key.aux.symbols.begin(), key.aux.symbols.end(), symbol);
        if (it == key.aux.symbols.end())
            continue;
        MonomialKey next = key;
        next.aux.symbols.erase(next.aux.symbols.begin() + (it - key.aux.symbols.begin()));
        out.add_term(next, c);
    }
    return out;
}

TruncatedSeries symbol_free_part(const TruncatedSeries& s)
{
    TruncatedSeries out(s.truncation());
    for (const auto& [key, c] : s.terms())
        if (key.aux.symbols.empty())
            out.add_term(key, c);
    return out;
}

TruncatedSeries restrict_to_first_power_sums(const TruncatedSeries& s)
{
    TruncatedSeries out(s.truncation());
    for (const auto& [key, c] : s.terms())
        if (key.mu.largest() <= 1 && key.nu.largest() <= 1)
            out.add_term(key, c);
    return out;
}

} // namespace hurwitz
