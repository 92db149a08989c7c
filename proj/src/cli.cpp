#include "bfc/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "bfc/bridge.hpp"
#include "bfc/expression.hpp"
#include "bfc/io.hpp"

namespace bfc {

namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path)
{
    if (path == "-")
        return json::parse(std::cin);
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open '" + path + "'");
    return json::parse(in);
}

AnyVector read_vector(const std::string& from, const std::string& expr, const std::string& json_path, int max_degree)
{
    AnyVector v;
    if (!expr.empty()) {
        if (from == "boson")
            v = evaluate_boson(*parse(expr, Space::boson, max_degree), max_degree);
        else if (from == "symm")
            v = evaluate_symm(*parse(expr, Space::symm, max_degree), max_degree);
        else
            throw UsageError("fermion input is only accepted as a JSON document (--json)");
    } else {
        v = from_json(read_json_file(json_path));
        const std::string space = space_name(v);
        const bool compatible = (from == "boson" && space == "boson") ||
                                (from == "symm" && (space == "symm-p" || space == "symm-s")) ||
                                (from == "fermion" && space == "fermion");
        if (!compatible)
            throw UsageError("document space '" + space + "' does not match --from " + from);
    }
    if (max_weight(v) > max_degree)
        throw DegreeCapExceeded("input has weight " + std::to_string(max_weight(v)) + " above the degree cap " +
                                std::to_string(max_degree));
    return v;
}

SymmElement to_power_sums(const AnyVector& v)
{
    return std::visit(
        [](const auto& f) -> SymmElement {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, BosonPolynomial>)
                return apply_I(f);
            else if constexpr (std::is_same_v<T, SymmElement>)
                return f;
            else if constexpr (std::is_same_v<T, SchurExpansion>)
                return schur_to_power(f);
            else if constexpr (std::is_same_v<T, AsymmVector>)
                return apply_J_inverse(f);
            else
                return apply_J_inverse(fermion_to_asymm(f));
        },
        v);
}

AnyVector from_power_sums(const SymmElement& f, const std::string& to)
{
    if (to == "boson")
        return apply_I_inverse(f);
    if (to == "symm-p")
        return f;
    if (to == "symm-s")
        return power_to_schur(f);
    if (to == "asymm")
        return apply_J(f);
    return asymm_to_fermion(apply_J(f));
}

void emit(std::ostream& out, const AnyVector& v, const std::string& format)
{
    if (format == "json")
        out << to_json(v).dump(2) << '\n';
    else
        out << to_string(v) << '\n';
}

void print_chartable(std::ostream& out, int n, const std::string& format)
{
    auto table = character_table(n);
    const auto& rows = table->partitions();
    // Columns run from the identity class (1^n) up to the n-cycle.
    std::vector<std::size_t> cols(rows.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        cols[c] = rows.size() - 1 - c;

    if (format == "json") {
        json doc{{"n", n}, {"rows", json::array()}, {"columns", json::array()}, {"values", json::array()}};
        for (const auto& lambda : rows)
            doc["rows"].push_back(lambda.parts());
        for (auto c : cols)
            doc["columns"].push_back(rows[c].parts());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            json row = json::array();
            for (auto c : cols)
                row.push_back((*table)(r, c));
            doc["values"].push_back(std::move(row));
        }
        out << doc.dump(2) << '\n';
        return;
    }

    std::size_t label_width = 0;
    for (const auto& p : rows)
        label_width = std::max(label_width, to_string(p).size());
    std::vector<std::size_t> widths;
    for (auto c : cols) {
        std::size_t w = to_string(rows[c]).size();
        for (std::size_t r = 0; r < rows.size(); ++r)
            w = std::max(w, std::to_string((*table)(r, c)).size());
        widths.push_back(w);
    }
    out << std::string(label_width, ' ');
    for (std::size_t i = 0; i < cols.size(); ++i)
        out << "  " << std::setw(static_cast<int>(widths[i])) << to_string(rows[cols[i]]);
    out << '\n';
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out << std::left << std::setw(static_cast<int>(label_width)) << to_string(rows[r]) << std::right;
        for (std::size_t i = 0; i < cols.size(); ++i)
            out << "  " << std::setw(static_cast<int>(widths[i])) << (*table)(r, cols[i]);
        out << '\n';
    }
}

std::string pass_fail(std::size_t failures)
{
    return failures == 0 ? "pass" : "FAIL";
}

void print_report(std::ostream& out, const IsometryReport& report, const std::string& format)
{
    if (format == "json") {
        json doc{{"degree_bound", report.degree_bound},
                 {"passed", report.passed()},
                 {"total_pairs", report.total_pairs()},
                 {"cross_degree_pairs", report.cross_degree_pairs},
                 {"cross_degree_failures", report.cross_degree_failures},
                 {"degrees", json::array()},
                 {"counterexamples", json::array()},
                 {"oracle_counterexamples", json::array()}};
        for (const auto& d : report.degrees)
            doc["degrees"].push_back({{"degree", d.degree},
                                      {"monomials", d.monomials},
                                      {"pairs", d.pairs},
                                      {"isometry", pass_fail(d.isometry_failures)},
                                      {"roundtrip", pass_fail(d.roundtrip_failures)},
                                      {"oracle", to_string(d.oracle)},
                                      {"status", d.passed() ? "pass" : "FAIL"}});
        for (const auto& c : report.counterexamples)
            doc["counterexamples"].push_back({{"f", to_string(c.f)},
                                              {"g", to_string(c.g)},
                                              {"boson", to_string(c.boson_value)},
                                              {"fermion", to_string(c.fermion_value)}});
        for (const auto& lambda : report.oracle_counterexamples)
            doc["oracle_counterexamples"].push_back(lambda.parts());
        out << doc.dump(2) << '\n';
        return;
    }

    out << "degree  monomials  pairs  isometry  round-trip  oracle  status\n";
    for (const auto& d : report.degrees) {
        out << std::setw(6) << d.degree << "  " << std::setw(9) << d.monomials << "  " << std::setw(5) << d.pairs
            << "  " << std::left << std::setw(8) << pass_fail(d.isometry_failures) << "  " << std::setw(10)
            << pass_fail(d.roundtrip_failures) << "  " << std::setw(6) << to_string(d.oracle) << "  "
            << (d.passed() ? "pass" : "FAIL") << std::right << '\n';
    }
    out << "cross-degree pairs: " << report.cross_degree_pairs << " (" << pass_fail(report.cross_degree_failures)
        << ")\n";
    for (const auto& c : report.counterexamples)
        out << "counterexample: <" << to_string(c.f) << ", " << to_string(c.g) << "> = " << to_string(c.boson_value)
            << " but fermionic side gives " << to_string(c.fermion_value) << '\n';
    for (const auto& lambda : report.oracle_counterexamples)
        out << "oracle mismatch: s" << to_string(lambda) << '\n';
    out << "result: " << (report.passed() ? "PASS" : "FAIL") << '\n';
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact boson-fermion correspondence toolkit", "bfc"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"text", "json"};
    std::string format = "text";
    int max_degree = 8;

    std::string from, to, expr, json_path;
    auto* convert = app.add_subcommand("convert", "Map a vector between the boson, symmetric, skew and fermion spaces");
    convert->add_option("--from", from, "Input space")->required()->check(CLI::IsMember({"boson", "symm", "fermion"}));
    convert->add_option("--to", to, "Output space")
        ->required()
        ->check(CLI::IsMember({"boson", "symm-p", "symm-s", "asymm", "fermion"}));

    auto* schur = app.add_subcommand("schur-expand", "Expand in the Schur basis (convert --to symm-s)");
    std::string schur_from = "symm";
    schur->add_option("--from", schur_from, "Input space")->check(CLI::IsMember({"boson", "symm", "fermion"}));

    for (auto* sub : {convert, schur}) {
        auto* e = sub->add_option("--expr", expr, "Polynomial in z<j> (boson) or p<j> (symm)");
        auto* j = sub->add_option("--json", json_path, "Machine-readable input document ('-' for stdin)");
        e->excludes(j);
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
        sub->add_option("--max-degree", max_degree, "Degree cap")->check(CLI::NonNegativeNumber);
    }

    std::string space;
    std::vector<std::string> operands;
    bool inner_json = false;
    auto* inner = app.add_subcommand("inner", "Inner product of two vectors");
    inner->add_option("--space", space, "Space of both operands")
        ->required()
        ->check(CLI::IsMember({"boson", "symm", "fermion"}));
    inner->add_option("operands", operands, "Two expressions, or two JSON files with --json (always for fermion)")
        ->required()
        ->expected(2);
    inner->add_flag("--json", inner_json, "Read operands as JSON documents");
    inner->add_option("--max-degree", max_degree, "Degree cap")->check(CLI::NonNegativeNumber);

    int n = 0;
    auto* chartable = app.add_subcommand("chartable", "Character table of the symmetric group S_n");
    chartable->add_option("n", n, "Degree")->required();
    chartable->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
    chartable->add_option("--max-degree", max_degree, "Degree cap")->check(CLI::NonNegativeNumber);

    int degree = 8;
    int oracle_degree = VerifyOptions{}.oracle_degree;
    auto* verify = app.add_subcommand("verify", "Check that the correspondence is an isometry up to a degree");
    verify->add_option("--degree", degree, "Degree bound")->capture_default_str()->check(CLI::NonNegativeNumber);
    verify->add_option("--oracle-degree", oracle_degree, "Highest degree for the determinant check")->capture_default_str();
    verify->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
    verify->add_option("--max-degree", max_degree, "Degree cap")->check(CLI::NonNegativeNumber);

    std::vector<std::string> argv_storage{"bfc"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage)
        argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::success;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_code::success;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }

    try {
        if (convert->parsed() || schur->parsed()) {
            const std::string& input_space = convert->parsed() ? from : schur_from;
            const std::string target = convert->parsed() ? to : "symm-s";
            if (expr.empty() && json_path.empty())
                throw UsageError("one of --expr or --json is required");
            auto v = read_vector(input_space, expr, json_path, max_degree);
            emit(out, from_power_sums(to_power_sums(v), target), format);
            return exit_code::success;
        }
        if (inner->parsed()) {
            Rational value;
            if (space == "fermion" || inner_json) {
                const std::string expected = space == "symm" ? "" : space;
                auto a = from_json(read_json_file(operands[0]));
                auto b = from_json(read_json_file(operands[1]));
                for (const auto* v : {&a, &b}) {
                    const std::string s = space_name(*v);
                    const bool ok = space == "symm" ? (s == "symm-p" || s == "symm-s") : s == space;
                    if (!ok)
                        throw UsageError("document space '" + s + "' does not match --space " + space);
                    if (max_weight(*v) > max_degree)
                        throw DegreeCapExceeded("operand above the degree cap");
                }
                if (space == "boson")
                    value = boson_inner(std::get<BosonPolynomial>(a), std::get<BosonPolynomial>(b));
                else if (space == "symm")
                    value = hall_inner(to_power_sums(a), to_power_sums(b));
                else
                    value = fock_inner(std::get<FockVector>(a), std::get<FockVector>(b));
            } else if (space == "boson") {
                value = boson_inner(std::get<BosonPolynomial>(read_vector("boson", operands[0], "", max_degree)),
                                    std::get<BosonPolynomial>(read_vector("boson", operands[1], "", max_degree)));
            } else {
                value = hall_inner(std::get<SymmElement>(read_vector("symm", operands[0], "", max_degree)),
                                   std::get<SymmElement>(read_vector("symm", operands[1], "", max_degree)));
            }
            out << to_string(value) << '\n';
            return exit_code::success;
        }
        if (chartable->parsed()) {
            if (n < 1)
                throw UsageError("chartable needs n >= 1");
            if (n > max_degree)
                throw UsageError("n = " + std::to_string(n) + " exceeds the degree cap " + std::to_string(max_degree));
            print_chartable(out, n, format);
            return exit_code::success;
        }
        if (verify->parsed()) {
            VerifyOptions options;
            options.max_degree = max_degree;
            options.oracle_degree = oracle_degree;
            if (degree > max_degree)
                throw UsageError("degree " + std::to_string(degree) + " exceeds the degree cap " +
                                 std::to_string(max_degree));
            auto report = verify_isometry(degree, options);
            print_report(out, report, format);
            return report.passed() ? exit_code::success : exit_code::verification_failed;
        }
    } catch (const json::exception& e) {
        err << "error: malformed JSON: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }
    return exit_code::usage;
}

} // namespace bfc
