#include "qmds/report.hpp"

#include <sstream>

namespace qmds {

using nlohmann::json;

CodeRecord make_code_record(const ConstaCode& code)
{
    CodeRecord c;
    c.q = code.q();
    c.n = code.n();
    c.r = code.r();
    c.defining_set = code.defining_set().members();
    c.k = code.k();
    c.bch = code.bch();
    c.mds = certify_mds(code);
    c.quantum = hermitian_quantum_params(code);
    return c;
}

void to_json(json& j, const QuantumParams& p)
{
    j = json{ { "n", p.n }, { "k", p.k }, { "d", p.d }, { "mds", p.is_mds } };
    if (p.distance_is_lower_bound)
        j["d_is_lower_bound"] = true;
}

void from_json(const json& j, QuantumParams& p)
{
    j.at("n").get_to(p.n);
    j.at("k").get_to(p.k);
    j.at("d").get_to(p.d);
    j.at("mds").get_to(p.is_mds);
    p.distance_is_lower_bound = j.value("d_is_lower_bound", false);
}

void to_json(json& j, const CodeRecord& c)
{
    json quantum = c.quantum;
    j = json{ { "q", c.q }, { "n", c.n }, { "r", c.r }, { "defining_set", c.defining_set }, { "k", c.k },
              { "bch", c.bch }, { "mds", c.mds }, { "quantum", quantum } };
}

void from_json(const json& j, CodeRecord& c)
{
    j.at("q").get_to(c.q);
    j.at("n").get_to(c.n);
    j.at("r").get_to(c.r);
    j.at("defining_set").get_to(c.defining_set);
    j.at("k").get_to(c.k);
    j.at("bch").get_to(c.bch);
    j.at("mds").get_to(c.mds);
    j.at("quantum").get_to(c.quantum);
    c.quantum.q = c.q;
}

std::string csv_header() { return "q,n,r,defining_set,k,bch,mds,quantum_n,quantum_k,quantum_d,quantum_mds"; }

std::string csv_row(const CodeRecord& c)
{
    std::ostringstream os;
    os << c.q << ',' << c.n << ',' << c.r << ",\"";
    for (std::size_t i = 0; i < c.defining_set.size(); ++i)
        os << (i ? ";" : "") << c.defining_set[i];
    os << "\"," << c.k << ',' << c.bch << ',' << (c.mds ? "true" : "false") << ',' << c.quantum.n << ','
       << c.quantum.k << ',' << c.quantum.d << ',' << (c.quantum.is_mds ? "true" : "false");
    return os.str();
}

json RunReport::payload() const
{
    return json{ { "command", command }, { "instances", instances }, { "passed", passed },
                 { "failures", failures }, { "version", version } };
}

void to_json(json& j, const RunReport& r)
{
    j = r.payload();
    j["timing_seconds"] = r.timing_seconds;
}

void from_json(const json& j, RunReport& r)
{
    j.at("command").get_to(r.command);
    r.instances = j.at("instances");
    j.at("passed").get_to(r.passed);
    j.at("failures").get_to(r.failures);
    j.at("version").get_to(r.version);
    r.timing_seconds = j.value("timing_seconds", 0.0);
}

void to_json(json& j, const TableRow& row)
{
    j = json{ { "q", row.q }, { "n", row.n }, { "family_d", row.family_d } };
    j["class3_d"] = row.class3_d ? json(*row.class3_d) : json(nullptr);
}

void from_json(const json& j, TableRow& row)
{
    j.at("q").get_to(row.q);
    j.at("n").get_to(row.n);
    j.at("family_d").get_to(row.family_d);
    if (j.at("class3_d").is_null())
        row.class3_d.reset();
    else
        row.class3_d = j.at("class3_d").get<u64>();
}

json polynomial_to_json(const Polynomial& f)
{
    json out = json::array();
    for (auto c : f.coeffs())
        out.push_back(f.field()->coords(c));
    return out;
}

} // namespace qmds
