#include "cli.hpp"

#include "expected.hpp"
#include "lfc/census.hpp"
#include "lfc/checks.hpp"
#include "lfc/closed_forms.hpp"
#include "lfc/errors.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace lfc::cli {

namespace {

struct FieldFlags {
    unsigned long p = 0;
    unsigned e = 1;
    unsigned f = 1;
    bool mu_p = false;
    bool mu_4 = false;

    void attach(CLI::App* app)
    {
        app->add_option("--p", p, "residue characteristic (prime)")->required();
        app->add_option("--e", e, "absolute ramification index")->capture_default_str();
        app->add_option("--f", f, "residue degree")->capture_default_str();
        app->add_flag("--mu-p", mu_p, "odd p: the p-th roots of unity lie in F");
        app->add_flag("--mu-4", mu_4, "p = 2: the 4th roots of unity lie in F");
    }

    LocalField field() const { return make_field(p, e, f, mu_p, mu_4); }
};

using Table = std::vector<std::vector<std::string>>;

void emit(std::ostream& out, const Table& rows, bool pretty)
{
    if (!pretty) {
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << row[i];
            out << '\n';
        }
        return;
    }
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) line += "  ";
            line += row[i];
            if (i + 1 < row.size()) line.append(width[i] - row[i].size(), ' ');
        }
        out << line << '\n';
    }
}

unsigned env_bound(const char* name, unsigned fallback)
{
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return static_cast<unsigned>(std::stoul(v));
    } catch (const std::exception&) {
        return fallback;
    }
}

int cmd_nu(const FieldFlags& flags, const std::vector<std::string>& group_names, const std::string& mode,
           bool pretty, std::ostream& out)
{
    const LocalField F = flags.field();
    std::vector<GroupQuery> queries;
    for (const auto& g : group_names) queries.push_back(parse_group_query(g));

    Table rows;
    if (pretty) {
        if (mode == "both")
            rows.push_back({"field", "group", "mode", "paper", "oracle", "status"});
        else
            rows.push_back({"field", "group", "mode", "count"});
    }
    bool mismatch = false;
    for (const auto& G : queries) {
        if (mode == "paper") {
            rows.push_back({F.descriptor(), G.name(), mode, to_decimal(closed_forms::nu(F, G))});
        } else if (mode == "oracle") {
            rows.push_back({F.descriptor(), G.name(), mode, to_decimal(census::nu_oracle(F, G))});
        } else {
            const auto rep = census::compare(F, G);
            mismatch = mismatch || !rep.agrees;
            rows.push_back({F.descriptor(), G.name(), mode, to_decimal(rep.paper_value),
                            to_decimal(rep.oracle_value), rep.agrees ? "AGREE" : "MISMATCH"});
        }
    }
    emit(out, rows, pretty);
    return mismatch ? kMismatch : kOk;
}

int cmd_census(const FieldFlags& flags, unsigned degree, bool pretty, std::ostream& out)
{
    const LocalField F = flags.field();
    if (degree != 3 && degree != 4) throw InvalidArgument("--degree must be 3 or 4");
    Table rows{{"field", F.descriptor()}};
    for (const auto& n : census::degree_census(F, degree)) rows.push_back({n.name, to_decimal(n.value)});
    emit(out, rows, pretty);
    return kOk;
}

int cmd_table(const std::vector<unsigned long>& primes, const std::string& mode, bool pretty, std::ostream& out)
{
    using K = GroupQuery::Kind;
    const GroupQuery groups[] = {GroupQuery::of(K::S3), GroupQuery::of(K::A4), GroupQuery::of(K::S4),
                                 GroupQuery::symmetric(5), GroupQuery::alternating(5)};
    std::vector<LocalField> fields;
    for (unsigned long p : primes) fields.push_back(make_field(p, 1, 1));

    Table rows;
    std::vector<std::string> header{"group"};
    for (const auto& F : fields) header.push_back("p=" + std::to_string(F.p()));
    rows.push_back(std::move(header));
    for (const auto& G : groups) {
        std::vector<std::string> row{G.name()};
        for (const auto& F : fields)
            row.push_back(to_decimal(mode == "oracle" ? census::nu_oracle(F, G) : closed_forms::nu(F, G)));
        rows.push_back(std::move(row));
    }
    emit(out, rows, pretty);
    return kOk;
}

int cmd_check(unsigned max_e, unsigned max_f, const std::vector<unsigned long>& primes, bool corrupt_fiber,
              std::ostream& out, std::ostream& err)
{
    checks::Options opts;
    opts.max_e = max_e;
    opts.max_f = max_f;
    if (!primes.empty()) opts.primes = primes;
    for (unsigned long p : opts.primes) (void)make_field(p, 1, 1);   // validates the prime list
    if (corrupt_fiber) opts.fibers.s3 += 1;

    const checks::Result r = checks::run(opts);
    out << "checks\t" << r.checks << '\n'
        << "passed\t" << (r.checks - r.failures.size()) << '\n'
        << "documented_mismatches\t" << r.documented_mismatches << '\n'
        << "failures\t" << r.failures.size() << '\n';
    for (const auto& f : r.failures) out << "FAIL\t" << f.invariant << '\t' << f.detail << '\n';
    if (!r.ok()) {
        err << "first failing invariant: " << r.failures.front().invariant;
        if (!r.failures.front().detail.empty()) err << " (" << r.failures.front().detail << ")";
        err << '\n';
        return kCheckFailed;
    }
    return kOk;
}

int cmd_diff(const std::string& path, std::ostream& out, std::ostream& err)
{
    std::ifstream in(path);
    if (!in) {
        err << "error: cannot open " << path << '\n';
        return kUsage;
    }
    std::vector<io::ExpectedRecord> rows;
    try {
        rows = io::parse_expected_csv(in);
    } catch (const io::ParseError& e) {
        err << "error: " << path << ": " << e.what() << '\n';
        return kUsage;
    }
    std::size_t matches = 0;
    for (const auto& r : rows) {
        std::string computed;
        std::string status;
        try {
            const Int v = io::evaluate_target(r.field, r.target);
            computed = to_decimal(v);
            status = v == r.expected_count ? "MATCH" : "MISMATCH";
        } catch (const std::exception& e) {
            computed = "-";
            status = "ERROR";
            err << "line " << r.line << ": " << e.what() << '\n';
        }
        if (status == "MATCH") ++matches;
        out << "line " << r.line << '\t' << r.source_label << '\t' << r.field.descriptor() << '\t' << r.target
            << '\t' << computed << '\t' << to_decimal(r.expected_count) << '\t' << status << '\n';
    }
    out << "summary\t" << matches << '/' << rows.size() << " match\n";
    return matches == rows.size() ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact counts of extensions of p-adic fields", "lfcount"};
    app.require_subcommand(1);

    auto* nu = app.add_subcommand("nu", "number of Galois extensions with a given group");
    FieldFlags nu_field;
    nu_field.attach(nu);
    std::vector<std::string> nu_groups;
    std::string nu_mode = "both";
    bool nu_pretty = false;
    nu->add_option("--group", nu_groups, "C2 C3 C4 V4 D8 S3 A4 S4 A4xC2 Sn An (n>=5) P:<order>:<d>:<|Aut|>")
        ->required();
    nu->add_option("--mode", nu_mode, "paper (closed forms), oracle (fiber inversion) or both")
        ->check(CLI::IsMember({"paper", "oracle", "both"}))
        ->capture_default_str();
    nu->add_flag("--pretty", nu_pretty, "aligned columns with a header row");

    auto* cen = app.add_subcommand("census", "degree-3 or degree-4 extension census of one field");
    FieldFlags cen_field;
    cen_field.attach(cen);
    unsigned degree = 0;
    bool cen_pretty = false;
    cen->add_option("--degree", degree, "3 or 4")->required();
    cen->add_flag("--pretty", cen_pretty, "aligned columns");

    auto* tab = app.add_subcommand("table", "S3, A4, S4, S5, A5 counts over Q_p for a list of primes");
    std::vector<unsigned long> tab_primes{2, 3, 5, 7, 11, 13};
    std::string tab_mode = "paper";
    bool tab_pretty = false;
    tab->add_option("--primes", tab_primes, "primes to tabulate")->delimiter(',')->capture_default_str();
    tab->add_option("--mode", tab_mode, "paper or oracle")
        ->check(CLI::IsMember({"paper", "oracle"}))
        ->capture_default_str();
    tab->add_flag("--pretty", tab_pretty, "aligned columns");

    auto* chk = app.add_subcommand(
        "check", "run every invariant suite over a grid of fields; LFCOUNT_MAX_E and LFCOUNT_MAX_F override "
                 "the default bounds (3 and 2)");
    unsigned max_e = env_bound("LFCOUNT_MAX_E", 3);
    unsigned max_f = env_bound("LFCOUNT_MAX_F", 2);
    std::vector<unsigned long> chk_primes;
    bool corrupt = false;
    chk->add_option("--max-e", max_e, "largest ramification index")->capture_default_str();
    chk->add_option("--max-f", max_f, "largest residue degree")->capture_default_str();
    chk->add_option("--primes", chk_primes, "primes to cover (default 2,3,5,7)")->delimiter(',');
    chk->add_flag("--corrupt-fiber", corrupt, "fault injection: perturb the S3 fiber coefficient");

    auto* dif = app.add_subcommand("diff", "compare computed counts with an expected-values CSV");
    std::string path;
    dif->add_option("path", path, "CSV with header p,e,f,mu_p,mu_4,target,expected,label")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*nu) return cmd_nu(nu_field, nu_groups, nu_mode, nu_pretty, out);
        if (*cen) return cmd_census(cen_field, degree, cen_pretty, out);
        if (*tab) return cmd_table(tab_primes, tab_mode, tab_pretty, out);
        if (*chk) return cmd_check(max_e, max_f, chk_primes, corrupt, out, err);
        if (*dif) return cmd_diff(path, out, err);
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Unsupported& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvariantViolation& e) {
        err << "internal invariant violated: " << e.what() << '\n';
        return kCheckFailed;
    }
    return kUsage;
}

}  // namespace lfc::cli
