#include "hurwitz/io.hpp"

#include <algorithm>
#include <stdexcept>

namespace hurwitz::io {

Json partition_to_json(const Partition& p)
{
    Json j = Json::array();
    for (int part : p.parts())
        j.push_back(part);
    return j;
}

Partition partition_from_json(const Json& j) { return Partition::from_unsorted(j.get<std::vector<int>>()); }

Json rational_to_json(const Rational& r) { return to_string(r); }

Json monomial_to_json(const MonomialKey& key)
{
    Json symbols = Json::array();
    for (const auto& s : key.aux.symbols)
        symbols.push_back(format_perturbation(s));
    return Json{{"dq", key.dq},
                {"b", key.b},
                {"mu", partition_to_json(key.mu)},
                {"nu", partition_to_json(key.nu)},
                {"aux", Json{{"z", key.aux.z}, {"symbols", symbols}}}};
}

namespace {

Perturbation parse_perturbation(const std::string& text)
{
    Perturbation s;
    std::size_t pos = 1;
    if (text.size() < 2 || text[0] != 's')
        throw std::invalid_argument("malformed perturbation symbol \"" + text + "\"");
    if (text[1] == '\'') {
        s.side = Side::PPrime;
        pos = 2;
    }
    s.index = std::stoi(text.substr(pos));
    return s;
}

} // namespace

MonomialKey monomial_from_json(const Json& j)
{
    MonomialKey key;
    key.dq = j.at("dq").get<int>();
    key.b = j.at("b").get<int>();
    key.mu = partition_from_json(j.at("mu"));
    key.nu = partition_from_json(j.at("nu"));
    if (j.contains("aux")) {
        key.aux.z = j.at("aux").at("z").get<int>();
        for (const auto& s : j.at("aux").at("symbols"))
            key.aux.symbols.push_back(parse_perturbation(s.get<std::string>()));
        std::sort(key.aux.symbols.begin(), key.aux.symbols.end());
    }
    return key;
}

Json series_to_json(const TruncatedSeries& s)
{
    Json out = Json::array();
    for (const auto& [key, c] : s.terms()) {
        Json rec = monomial_to_json(key);
        rec["numerator"] = c.get_num().get_str();
        rec["denominator"] = c.get_den().get_str();
        out.push_back(std::move(rec));
    }
    return out;
}

TruncatedSeries series_from_json(const Json& j, Truncation t)
{
    TruncatedSeries s(t);
    for (const auto& rec : j) {
        s.add_term(monomial_from_json(rec), ratio(Integer(rec.at("numerator").get<std::string>()),
                                                  Integer(rec.at("denominator").get<std::string>())));
    }
    return s;
}

Json record_to_json(const HurwitzRecord& r)
{
    Json genus;
    if (r.genus)
        genus = *r.genus;
    else if (r.connected)
        genus = "non-integral";
    return Json{{"d", r.d},
                {"b", r.b},
                {"mu", partition_to_json(r.mu)},
                {"nu", partition_to_json(r.nu)},
                {"value", rational_to_json(r.value)},
                {"genus", genus},
                {"connected", r.connected}};
}

Json report_to_json(const VerificationReport& r)
{
    return Json{{"identity", r.identity},
                {"orders", Json{{"d_max", r.d_max_effective}, {"b_max", r.b_max_effective}}},
                {"pass", r.pass},
                {"first_failure", r.first_failure ? monomial_to_json(*r.first_failure) : Json(nullptr)},
                {"residual_terms", r.residual.size()},
                {"note", r.note}};
}

std::string csv_partition(const Partition& p) { return "\"" + format_partition(p) + "\""; }

std::string record_csv_header() { return "d,b,mu,nu,value,genus,connected"; }

std::string record_to_csv(const HurwitzRecord& r)
{
    std::string genus = r.genus ? std::to_string(*r.genus) : (r.connected ? "non-integral" : "");
    return std::to_string(r.d) + "," + std::to_string(r.b) + "," + csv_partition(r.mu) + "," + csv_partition(r.nu) + ","
        + to_string(r.value) + "," + genus + "," + (r.connected ? "true" : "false");
}

std::string record_to_human(const HurwitzRecord& r)
{
    std::string out = std::string(r.connected ? "Hur" : "Cov") + "_{" + std::to_string(r.d) + "," + std::to_string(r.b)
        + "}((" + format_partition(r.mu) + "),(" + format_partition(r.nu) + ")) = " + to_string(r.value);
    if (r.genus)
        out += "  [genus " + std::to_string(*r.genus) + "]";
    return out;
}

std::string report_to_human(const VerificationReport& r)
{
    std::string out = r.identity + ": " + (r.pass ? "PASS" : "FAIL") + " (d_max " + std::to_string(r.d_max_effective)
        + ", b_max " + std::to_string(r.b_max_effective) + ")";
    if (!r.note.empty())
        out += " -- " + r.note;
    if (r.first_failure)
        out += "\n  first offending monomial: " + format_monomial(*r.first_failure) + " (coefficient "
            + to_string(r.residual.coefficient(*r.first_failure)) + ", " + std::to_string(r.residual.size())
            + " nonzero residual terms)";
    return out;
}

} // namespace hurwitz::io
