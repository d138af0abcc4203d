#include "qmds/cli.hpp"

#include "qmds/errors.hpp"
#include "qmds/existence.hpp"
#include "qmds/families.hpp"
#include "qmds/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace qmds::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct ExistsOptions {
    u64 q = 0, r = 0, n = 0;
    std::string method = "theorem";
    std::string emit = "text";
};

struct FamilyOptions {
    std::string family;
    u64 q = 0;
    u64 d = 0;
    std::string emit = "text";
};

struct SweepOptions {
    u64 q_max = 0;
    u64 rn_max = 5000;
    std::string check = "all";
    std::string emit = "text";
};

struct TablesOptions {
    std::string emit = "text";
};

struct FixturesOptions {
    std::string dir;
    bool seed = false;
};

class Timer {
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string bracket(const QuantumParams& p)
{
    std::ostringstream os;
    os << "[[" << p.n << "," << p.k << "," << (p.distance_is_lower_bound ? ">=" : "") << p.d << "]]_" << p.q;
    return os.str();
}

std::string join(const std::vector<u64>& v, const char* sep)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? sep : "") << v[i];
    return os.str();
}

void emit_report(const RunReport& report, std::ostream& out) { out << json(report).dump(2) << "\n"; }

int cmd_exists(const ExistsOptions& o, std::ostream& out, std::ostream& err)
{
    Timer timer;
    const bool all = o.method == "all";
    json inst{ { "q", o.q }, { "r", o.r }, { "n", o.n } };
    std::vector<std::pair<std::string, bool>> verdicts;

    if (all || o.method == "theorem") {
        const TheoremVerdict v = exists_by_theorem(o.q, o.r, o.n);
        inst["theorem"] = { { "exists", v.exists }, { "rule", rule_name(v.rule) }, { "oracle_decided", v.oracle_decided } };
        verdicts.emplace_back("theorem", v.exists);
    }
    if (all || o.method == "coset") {
        const bool v = exists_by_coset_oracle(o.q, o.r, o.n);
        inst["coset"] = v;
        verdicts.emplace_back("coset", v);
    }
    if (all || o.method == "factor") {
        if (!all || factor_oracle_supported(o.q, o.r, o.n)) {
            const bool v = exists_by_factor_oracle(o.q, o.r, o.n);
            inst["factor"] = v;
            verdicts.emplace_back("factor", v);
        } else {
            inst["factor"] = nullptr;
        }
    }

    bool agree = true;
    for (const auto& [name, v] : verdicts)
        agree = agree && v == verdicts.front().second;

    RunReport report;
    report.command = "exists";
    report.instances.push_back(inst);
    report.passed = agree;
    if (!agree)
        report.failures.push_back("methods disagree");
    report.timing_seconds = timer.seconds();

    if (o.emit == "json") {
        emit_report(report, out);
    } else {
        for (const auto& [name, v] : verdicts) {
            out << name << ": " << (v ? "true" : "false");
            if (name == "theorem")
                out << " (" << inst["theorem"]["rule"].get<std::string>() << ")";
            out << "\n";
        }
        if (all) {
            if (inst["factor"].is_null())
                out << "factor: unavailable (extension budget)\n";
            out << "agreement: " << (agree ? "yes" : "no") << "\n";
        }
    }
    if (!agree) {
        err << "existence methods disagree for q=" << o.q << " r=" << o.r << " n=" << o.n << "\n";
        return kExitVerification;
    }
    return kExitOk;
}

int cmd_family(const FamilyOptions& o, std::ostream& out, std::ostream&)
{
    const auto id = parse_family(o.family);
    if (!id)
        throw InvalidArgument("unknown family '" + o.family + "'");
    const FamilySpec spec = make_family(*id, o.q);
    std::vector<u64> ds = o.d ? std::vector<u64>{ o.d } : admissible_distances(spec);

    std::vector<CodeRecord> records;
    for (u64 d : ds) {
        family_quantum_code(spec, d);
        records.push_back(make_code_record(ConstaCode(family_defining_set(spec, d))));
    }

    if (o.emit == "json") {
        json j = o.d ? json(records.front()) : json(records);
        out << j.dump(2) << "\n";
    } else if (o.emit == "csv") {
        out << csv_header() << "\n";
        for (const auto& c : records)
            out << csv_row(c) << "\n";
    } else {
        for (const auto& c : records) {
            out << bracket(c.quantum);
            if (o.d) {
                out << "\n"
                    << "classical: [" << c.n << "," << c.k << "," << c.n - c.k + 1 << "]_" << c.q * c.q
                    << " r=" << c.r << " bch=" << c.bch << " mds=" << (c.mds ? "true" : "false") << "\n"
                    << "defining_set: {" << join(c.defining_set, ", ") << "}";
            }
            out << "\n";
        }
    }
    return kExitOk;
}

std::vector<u64> odd_prime_powers_up_to(u64 q_max)
{
    std::vector<u64> out;
    for (u64 q = 3; q <= q_max; q += 2) {
        if (is_odd_prime_power(q))
            out.push_back(q);
    }
    return out;
}

int cmd_sweep(const SweepOptions& o, std::ostream& out, std::ostream& err)
{
    if (o.q_max == 0)
        throw InvalidArgument("--q-max must be positive");
    if (o.rn_max == 0)
        throw InvalidArgument("--rn-max must be positive");
    Timer timer;
    RunReport report;
    report.command = "sweep";
    std::vector<std::string> text;
    const bool all = o.check == "all";

    if (all || o.check == "corollaries") {
        const CorollarySweep s = corollary_sweeps(o.q_max);
        json j{ { "check", "corollaries" }, { "instances", s.checked.size() }, { "failures", json::array() } };
        for (const auto& f : s.failures) {
            j["failures"].push_back({ { "q", f.instance.q }, { "r", f.instance.r }, { "n", f.instance.n },
                                      { "corollary", f.corollary } });
            report.failures.push_back("corollary " + f.corollary + " q=" + std::to_string(f.instance.q) +
                                      " r=" + std::to_string(f.instance.r) + " n=" + std::to_string(f.instance.n));
        }
        text.push_back("corollaries: " + std::to_string(s.checked.size()) + " instances, " +
                       std::to_string(s.failures.size()) + " failures");
        report.instances.push_back(std::move(j));
    }
    if (all || o.check == "agreement") {
        const AgreementSweep s = agreement_sweep(odd_prime_powers_up_to(o.q_max), o.rn_max);
        json j{ { "check", "agreement" },
                { "instances", s.instances },
                { "factor_checked", s.factor_checked },
                { "oracle_decided", s.oracle_decided },
                { "disagreements", json::array() } };
        for (const auto& d : s.disagreements) {
            j["disagreements"].push_back({ { "q", d.instance.q },
                                           { "r", d.instance.r },
                                           { "n", d.instance.n },
                                           { "theorem", d.theorem.exists },
                                           { "coset", d.coset },
                                           { "factor", d.factor ? json(*d.factor) : json(nullptr) } });
            report.failures.push_back("agreement q=" + std::to_string(d.instance.q) + " r=" +
                                      std::to_string(d.instance.r) + " n=" + std::to_string(d.instance.n));
        }
        text.push_back("agreement: " + std::to_string(s.instances) + " instances (" +
                       std::to_string(s.factor_checked) + " factor-checked), " +
                       std::to_string(s.disagreements.size()) + " disagreements");
        report.instances.push_back(std::move(j));
    }
    if (all || o.check == "families") {
        const FamilySweep s = families_sweep(o.q_max);
        json j{ { "check", "families" }, { "codes", s.codes_checked }, { "failures", s.failures } };
        for (const auto& f : s.failures)
            report.failures.push_back("family " + f);
        text.push_back("families: " + std::to_string(s.codes_checked) + " codes, " +
                       std::to_string(s.failures.size()) + " failures");
        report.instances.push_back(std::move(j));
    }

    report.passed = report.failures.empty();
    report.timing_seconds = timer.seconds();
    if (o.emit == "json") {
        emit_report(report, out);
    } else {
        for (const auto& line : text)
            out << line << "\n";
        out << (report.passed ? "PASS" : "FAIL") << "\n";
    }
    if (!report.passed) {
        err << "first failing instance: " << report.failures.front() << "\n";
        return kExitVerification;
    }
    return kExitOk;
}

std::string class3_text(const TableRow& row) { return row.class3_d ? std::to_string(*row.class3_d) : "-"; }

int cmd_tables(const TablesOptions& o, std::ostream& out, std::ostream& err)
{
    const auto tables = comparison_tables();
    if (o.emit == "json") {
        json j = json::array();
        for (const auto& t : tables)
            j.push_back({ { "family", family_name(t.family) }, { "rows", t.rows } });
        out << j.dump(2) << "\n";
    } else if (o.emit == "csv") {
        out << "family,q,n,family_d,class3_d\n";
        for (const auto& t : tables) {
            for (const auto& row : t.rows)
                out << family_name(t.family) << ',' << row.q << ',' << row.n << ',' << row.family_d << ','
                    << (row.class3_d ? std::to_string(*row.class3_d) : "") << "\n";
        }
    } else if (o.emit == "markdown") {
        for (const auto& t : tables) {
            out << "### " << family_name(t.family) << "\n\n| q | length | d (" << family_name(t.family)
                << ") | d (class 3) |\n|---|---|---|---|\n";
            for (const auto& row : t.rows)
                out << "| " << row.q << " | " << row.n << " | " << row.family_d << " | " << class3_text(row) << " |\n";
            out << "\n";
        }
    } else {
        for (const auto& t : tables) {
            out << family_name(t.family) << "\n";
            for (const auto& row : t.rows)
                out << "  q=" << row.q << " n=" << row.n << " d=" << row.family_d << " class3_d=" << class3_text(row)
                    << "\n";
        }
    }
    const auto mismatches = compare_tables(tables, published_tables());
    for (const auto& m : mismatches) {
        err << "table mismatch " << family_name(m.family) << " q=" << m.published.q << ": computed (n=" << m.computed.n
            << ", d=" << m.computed.family_d << ", class3_d=" << class3_text(m.computed) << ") vs published (n="
            << m.published.n << ", d=" << m.published.family_d << ", class3_d=" << class3_text(m.published) << ")\n";
    }
    return mismatches.empty() ? kExitOk : kExitVerification;
}

struct FixtureCase {
    FamilyId family;
    u64 q;
    u64 d;
};

const std::vector<FixtureCase>& fixture_cases()
{
    static const std::vector<FixtureCase> cases{
        { FamilyId::r3, 5, 3 },  { FamilyId::r3, 11, 7 }, { FamilyId::r5, 9, 5 },
        { FamilyId::r7, 13, 7 }, { FamilyId::r10, 13, 5 },
    };
    return cases;
}

json fixture_payload(const FixtureCase& c)
{
    const FamilySpec spec = make_family(c.family, c.q);
    const ConstaCode code(family_defining_set(spec, c.d));
    const RootContext& ctx = code.roots();
    json j = make_code_record(code);
    j["family"] = family_name(c.family);
    j["field"] = { { "p", ctx.base->characteristic() },
                   { "m", ctx.base->degree() },
                   { "modulus", ctx.base->modulus() } };
    j["lambda"] = ctx.base->coords(ctx.lambda);
    j["generator"] = polynomial_to_json(code.generator());
    return j;
}

std::string fixture_name(const FixtureCase& c)
{
    return std::string(family_name(c.family)) + "_q" + std::to_string(c.q) + "_d" + std::to_string(c.d) + ".json";
}

int cmd_fixtures(const FixturesOptions& o, std::ostream& out, std::ostream& err)
{
    const fs::path dir(o.dir);
    if (o.seed)
        fs::create_directories(dir);
    else if (!fs::is_directory(dir))
        throw InvalidArgument("fixture directory " + o.dir + " does not exist");
    int mismatches = 0;
    for (const auto& c : fixture_cases()) {
        const json computed = fixture_payload(c);
        const fs::path file = dir / fixture_name(c);
        if (o.seed) {
            std::ofstream(file) << computed.dump(2) << "\n";
            out << "wrote " << file.string() << "\n";
            continue;
        }
        std::ifstream in(file);
        if (!in) {
            err << "missing fixture " << file.string() << "\n";
            ++mismatches;
            continue;
        }
        const json pinned = json::parse(in);
        if (pinned != computed) {
            err << "fixture mismatch " << file.string() << "\n";
            ++mismatches;
        } else {
            out << "ok " << fixture_name(c) << "\n";
        }
    }
    return mismatches == 0 ? kExitOk : kExitVerification;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{ "Hermitian dual-containing constacyclic codes and quantum MDS families", "qmds" };
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    ExistsOptions ex;
    auto* exists = app.add_subcommand("exists", "Decide existence of nontrivial dual-containing codes");
    exists->add_option("--q", ex.q, "Prime power q")->required();
    exists->add_option("--r", ex.r, "Order of lambda, dividing q + 1")->required();
    exists->add_option("--n", ex.n, "Code length, coprime to q")->required();
    exists->add_option("--method", ex.method)->check(CLI::IsMember({ "theorem", "coset", "factor", "all" }));
    exists->add_option("--emit", ex.emit)->check(CLI::IsMember({ "text", "json" }));

    FamilyOptions fam;
    auto* family = app.add_subcommand("family", "List quantum MDS codes of one family");
    family->add_option("--family", fam.family)->required()->check(CLI::IsMember({ "r3", "r5", "r7", "r10" }));
    family->add_option("--q", fam.q, "Odd prime power q")->required();
    family->add_option("--d", fam.d, "Single distance");
    family->add_option("--emit", fam.emit)->check(CLI::IsMember({ "text", "json", "csv" }));

    SweepOptions sw;
    auto* sweep = app.add_subcommand("sweep", "Run property sweeps over a parameter grid");
    sweep->add_option("--q-max", sw.q_max, "Largest q")->required();
    sweep->add_option("--rn-max", sw.rn_max, "Largest rn for the agreement grid");
    sweep->add_option("--check", sw.check)->check(CLI::IsMember({ "corollaries", "agreement", "families", "all" }));
    sweep->add_option("--emit", sw.emit)->check(CLI::IsMember({ "text", "json" }));

    TablesOptions tb;
    auto* tables = app.add_subcommand("tables", "Regenerate the code comparison tables");
    tables->add_option("--emit", tb.emit)->check(CLI::IsMember({ "text", "json", "csv", "markdown" }));

    FixturesOptions fx;
    auto* fixtures = app.add_subcommand("fixtures", "Compare or regenerate pinned generator fixtures");
    fixtures->add_option("--dir", fx.dir, "Fixture directory")->required();
    fixtures->add_flag("--seed-fixtures", fx.seed, "Overwrite fixtures with current output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*exists)
            return cmd_exists(ex, out, err);
        if (*family)
            return cmd_family(fam, out, err);
        if (*sweep)
            return cmd_sweep(sw, out, err);
        if (*tables)
            return cmd_tables(tb, out, err);
        if (*fixtures)
            return cmd_fixtures(fx, out, err);
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "verification failed: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run(args, out, err);
}

} // namespace qmds::cli
