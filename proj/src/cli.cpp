#include "hurwitz/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "hurwitz/characters.hpp"
#include "hurwitz/hurwitz.hpp"
#include "hurwitz/integrable.hpp"
#include "hurwitz/io.hpp"
#include "hurwitz/oracle.hpp"

namespace hurwitz::cli {

namespace {

struct RunConfig {
    int d_max = 3;
    int b_max = 4;
    std::string mu;
    std::string nu;
    std::vector<std::string> classes;
    int b = 0;
    int m = 0;
    int n = 1;
    int s_index = 1;
    bool primed = false;
    bool corrupt = false;
    bool naive = false;
    std::string identity;
    std::string format;
    std::string out_path;
    int jobs = 1;
    oracle::OracleCaps caps;
};

int env_int(const char* name, int fallback)
{
    const char* value = std::getenv(name);
    if (value == nullptr || *value == '\0')
        return fallback;
    try {
        return std::stoi(value);
    } catch (const std::exception&) {
        return fallback;
    }
}

struct UsageFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Collects output in memory and writes it to --out or the given stream at
// the end, so a failing command never leaves a partial file.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : path_(path), fallback_(fallback) {}
    std::ostream& stream() { return buffer_; }
    void flush()
    {
        if (path_.empty()) {
            fallback_ << buffer_.str();
            return;
        }
        std::ofstream file(path_, std::ios::binary);
        if (!file)
            throw UsageFailure("cannot write output file " + path_);
        file << buffer_.str();
        if (!file)
            throw UsageFailure("cannot write output file " + path_);
    }

private:
    std::string path_;
    std::ostream& fallback_;
    std::ostringstream buffer_;
};

void require_format(const std::string& format, std::initializer_list<const char*> allowed)
{
    for (const char* a : allowed)
        if (format == a)
            return;
    throw UsageFailure("unsupported --format " + format);
}

int cmd_table(const RunConfig& config, std::ostream& out)
{
    const std::string format = config.format.empty() ? "csv" : config.format;
    require_format(format, {"csv", "json", "human"});
    Sink sink(config.out_path, out);
    io::Json rows = io::Json::array();
    if (format == "csv")
        sink.stream() << io::record_csv_header() << "\n";
    if (config.d_max >= 1) {
        const HurwitzTables tables(config.d_max, config.b_max, default_character_cache(), config.jobs);
        for (int d = 1; d <= config.d_max; ++d)
            for (int b = 0; b <= config.b_max; ++b)
                for (const auto& mu : partitions_of(d))
                    for (const auto& nu : partitions_of(d)) {
                        const auto r = tables.double_hurwitz(d, b, mu, nu);
                        if (format == "csv")
                            sink.stream() << io::record_to_csv(r) << "\n";
                        else if (format == "human")
                            sink.stream() << io::record_to_human(r) << "\n";
                        else
                            rows.push_back(io::record_to_json(r));
                    }
    }
    if (format == "json")
        sink.stream() << rows.dump(2) << "\n";
    sink.flush();
    return Success;
}

std::pair<Partition, Partition> query_partitions(const RunConfig& config)
{
    const Partition mu = parse_partition(config.mu);
    const Partition nu = parse_partition(config.nu);
    if (mu.size() != nu.size())
        throw UsageFailure("--mu and --nu must have the same size");
    if (config.b < 0)
        throw UsageFailure("-b must be nonnegative");
    return {mu, nu};
}

void emit_record(const HurwitzRecord& r, const RunConfig& config, std::ostream& out)
{
    const std::string format = config.format.empty() ? "json" : config.format;
    require_format(format, {"csv", "json", "human"});
    Sink sink(config.out_path, out);
    if (format == "json")
        sink.stream() << io::record_to_json(r).dump() << "\n";
    else if (format == "csv")
        sink.stream() << io::record_csv_header() << "\n" << io::record_to_csv(r) << "\n";
    else
        sink.stream() << io::record_to_human(r) << "\n";
    sink.flush();
}

int cmd_double(const RunConfig& config, std::ostream& out)
{
    const auto [mu, nu] = query_partitions(config);
    const int d = mu.size();
    const HurwitzTables tables(d, config.b, default_character_cache(), config.jobs);
    emit_record(tables.double_hurwitz(d, config.b, mu, nu), config, out);
    return Success;
}

int cmd_cov(const RunConfig& config, std::ostream& out)
{
    const auto [mu, nu] = query_partitions(config);
    const int d = mu.size();
    std::vector<Partition> classes{mu, nu};
    for (const auto& c : config.classes)
        classes.push_back(parse_partition(c));
    HurwitzRecord r{d, config.b, mu, nu, 0, std::nullopt, false, Provenance::CharacterSum};
    if (config.b > 0 && d < 2) {
        r.value = 0;
    } else {
        if (config.b > 0)
            classes.insert(classes.end(), static_cast<std::size_t>(config.b), Partition::transposition(d));
        r.value = cov_burnside(d, classes);
    }
    emit_record(r, config, out);
    return Success;
}

TruncatedSeries corrupted(TruncatedSeries tau)
{
    const auto& t = tau.truncation();
    const int d = std::min(2, t.d_max);
    MonomialKey key{d, std::min(1, t.b_max), Partition::ones(d), Partition::ones(d), {}};
    tau.add_term(key, 1);
    return tau;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const std::string format = config.format.empty() ? "human" : config.format;
    require_format(format, {"json", "human"});
    static const std::vector<std::string> known{"toda", "toda-specialized", "hirota", "tau-n"};
    if (std::find(known.begin(), known.end(), config.identity) == known.end()) {
        err << "unknown identity \"" << config.identity << "\"; expected one of toda, toda-specialized, hirota, tau-n\n";
        return UsageError;
    }
    if (config.d_max < 1)
        throw UsageFailure("--dmax must be at least 1");

    TruncatedSeries tau = build_tau(config.d_max, config.b_max, config.jobs);
    if (config.corrupt)
        tau = corrupted(std::move(tau));

    std::vector<VerificationReport> reports;
    if (config.identity == "toda") {
        reports.push_back(verify_toda(tau));
    } else if (config.identity == "toda-specialized") {
        reports.push_back(verify_toda_specialized(tau));
    } else if (config.identity == "tau-n") {
        reports.push_back(verify_tau_n(config.n, tau));
    } else {
        const HirotaQuery query{config.m, config.s_index, config.primed ? Side::PPrime : Side::P};
        try {
            reports.push_back(verify_hirota(query, tau));
        } catch (const std::invalid_argument& e) {
            throw UsageFailure(e.what());
        }
        if (query.m == 0 && query.n_s == 1 && query.side == Side::P) {
            auto reduction = verify_hirota_reduces_to_toda(tau);
            reduction.note += reduction.pass ? "; equal monomial by monomial" : "; mismatch";
            reports.push_back(std::move(reduction));
        }
    }

    Sink sink(config.out_path, out);
    bool pass = true;
    io::Json all = io::Json::array();
    for (const auto& r : reports) {
        pass = pass && r.pass;
        if (format == "json")
            all.push_back(io::report_to_json(r));
        else
            sink.stream() << io::report_to_human(r) << "\n";
    }
    if (format == "json")
        sink.stream() << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
    sink.flush();
    return pass ? Success : Failure;
}

int cmd_compare(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    oracle::OracleOptions options{config.caps, config.naive ? oracle::Enumeration::Naive
                                                            : oracle::Enumeration::FixedRepresentative,
                                  config.jobs};
    if (config.d_max > options.caps.d_max || config.b_max > options.caps.b_max) {
        err << "oracle scale limit: --dmax <= " << options.caps.d_max << " and --bmax <= " << options.caps.b_max
            << " (override with HURWITZ_ORACLE_DMAX_CAP / HURWITZ_ORACLE_BMAX_CAP)\n";
        return UsageError;
    }
    Sink sink(config.out_path, out);
    sink.stream() << "d,b,mu,nu,disconnected_count,connected_count\n";
    for (int d = 1; d <= config.d_max; ++d)
        for (int b = 0; b <= config.b_max; ++b)
            for (const auto& mu : partitions_of(d)) {
                const auto census = oracle::tuple_census(d, mu, b, options);
                for (const auto& nu : partitions_of(d)) {
                    oracle::TupleCounts c{0, 0};
                    if (auto it = census.find(nu); it != census.end())
                        c = it->second;
                    const Rational all = ratio(c.all, factorial(d));
                    const Rational transitive = ratio(c.transitive, factorial(d));
                    sink.stream() << d << "," << b << "," << io::csv_partition(mu) << "," << io::csv_partition(nu) << ","
                                  << to_string(all) << "," << to_string(transitive) << "\n";
                }
            }
    sink.flush();

    const auto discrepancies = oracle::compare_all(config.d_max, config.b_max, options);
    for (const auto& x : discrepancies)
        err << "discrepancy d=" << x.d << " b=" << x.b << " mu=(" << format_partition(x.mu) << ") nu=("
            << format_partition(x.nu) << ") " << x.quantity << ": oracle " << to_string(x.oracle) << ", formula "
            << to_string(x.formula) << "\n";
    if (!discrepancies.empty())
        return Failure;
    err << "oracle agrees with tau, Burnside and log tau for d <= " << config.d_max << ", b <= " << config.b_max << "\n";
    return Success;
}

int cmd_chartable(const RunConfig& config, std::ostream& out)
{
    Sink sink(config.out_path, out);
    sink.stream() << "d,lambda,mu,chi\n";
    for (int d = 1; d <= config.d_max; ++d)
        for (const auto& lambda : partitions_of(d))
            for (const auto& mu : partitions_of(d))
                sink.stream() << d << "," << io::csv_partition(lambda) << "," << io::csv_partition(mu) << ","
                              << character(lambda, mu) << "\n";
    sink.flush();
    return Success;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig config;
    config.jobs = std::max(1, env_int("HURWITZ_JOBS", 1));
    config.caps.d_max = env_int("HURWITZ_ORACLE_DMAX_CAP", config.caps.d_max);
    config.caps.b_max = env_int("HURWITZ_ORACLE_BMAX_CAP", config.caps.b_max);

    CLI::App app{"Double Hurwitz numbers and Toda-hierarchy checks in exact arithmetic", "hurwitz"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", config.format, "csv | json | human");
        sub->add_option("--out", config.out_path, "write results to this file");
        sub->add_option("--jobs", config.jobs, "worker threads")->check(CLI::PositiveNumber);
    };
    auto add_query = [&](CLI::App* sub) {
        sub->add_option("--mu", config.mu, "monodromy over 0, e.g. 2,1")->required();
        sub->add_option("--nu", config.nu, "monodromy over infinity")->required();
        sub->add_option("-b", config.b, "number of simple branch points");
    };

    auto* table = app.add_subcommand("table", "all double Hurwitz numbers up to the given orders");
    add_common(table);
    auto* dbl = app.add_subcommand("double", "one double Hurwitz number");
    add_common(dbl);
    add_query(dbl);
    auto* cov = app.add_subcommand("cov", "possibly disconnected covering count via the character sum");
    add_common(cov);
    add_query(cov);
    cov->add_option("--class", config.classes, "additional monodromy class (repeatable)");
    auto* verify = app.add_subcommand("verify", "check an integrable-hierarchy identity");
    add_common(verify);
    verify->add_option("identity", config.identity, "toda | toda-specialized | hirota | tau-n")->required();
    verify->add_option("-m", config.m, "Hirota level m");
    verify->add_option("-n", config.n, "tau_n index");
    verify->add_option("--sn", config.s_index, "index of the first-order perturbation s_n");
    verify->add_flag("--primed", config.primed, "perturb with s'_n instead of s_n");
    verify->add_flag("--corrupt-test", config.corrupt, "add 1 to one tau coefficient (negative control)");
    auto* compare = app.add_subcommand("compare", "compare against the brute-force permutation oracle");
    add_common(compare);
    compare->add_flag("--naive", config.naive, "enumerate every class member (slow)");
    auto* chartable = app.add_subcommand("chartable", "symmetric group character tables as CSV");
    add_common(chartable);

    // each subcommand has its own defaults for the orders
    for (auto* sub : {table, verify, compare, chartable}) {
        sub->add_option("--dmax", config.d_max, "maximal degree")->check(CLI::NonNegativeNumber);
        sub->add_option("--bmax", config.b_max, "maximal number of simple branch points")
            ->check(CLI::NonNegativeNumber);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Success : UsageError;
    }

    // per-command defaults when the flags were not given
    auto defaults = [&](CLI::App* sub, int d_default, int b_default) {
        if (sub->count("--dmax") == 0)
            config.d_max = d_default;
        if (sub->count("--bmax") == 0)
            config.b_max = b_default;
    };

    try {
        if (*table) {
            defaults(table, 3, 4);
            return cmd_table(config, out);
        }
        if (*dbl)
            return cmd_double(config, out);
        if (*cov)
            return cmd_cov(config, out);
        if (*verify) {
            defaults(verify, 4, 4);
            return cmd_verify(config, out, err);
        }
        if (*compare) {
            defaults(compare, 4, 3);
            return cmd_compare(config, out, err);
        }
        if (*chartable) {
            defaults(chartable, 4, 0);
            return cmd_chartable(config, out);
        }
    } catch (const oracle::OracleScaleLimit& e) {
        err << e.what() << "\n";
        return UsageError;
    } catch (const UsageFailure& e) {
        err << e.what() << "\n";
        return UsageError;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return UsageError;
    }
    return UsageError;
}

} // namespace hurwitz::cli
