// Command-line frontend. JSON on stdout unless --pretty; exit codes:
// 0 all checks pass, 1 a check failed, 2 usage or domain error, 3 internal
// invariant violation.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pmzv/arch_eval.hpp"
#include "pmzv/errors.hpp"
#include "pmzv/padic_eval.hpp"
#include "pmzv/relations.hpp"
#include "pmzv/serialize.hpp"
#include "pmzv/verify.hpp"

namespace {

using nlohmann::json;
using namespace pmzv;

enum Exit : int { ok = 0, check_failed = 1, usage = 2, internal = 3 };

struct Global {
    bool pretty = false;
    int jobs = 1;
};

std::string scalar_text(const json& v)
{
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_null()) {
        return "-";
    }
    return v.dump();
}

// Objects print as "key: value"; arrays of objects as aligned tables.
void print_pretty(const json& j, std::ostream& os, const std::string& indent = "")
{
    if (!j.is_object()) {
        os << indent << scalar_text(j) << '\n';
        return;
    }
    for (const auto& [key, value] : j.items()) {
        const bool nested = value.is_array() && std::any_of(value.begin(), value.end(), [](const json& row) {
            return row.is_object() && std::any_of(row.begin(), row.end(), [](const json& v) { return v.is_structured(); });
        });
        if (nested) {
            os << indent << key << ":\n";
            for (const auto& row : value) {
                print_pretty(row, os, indent + "  ");
                os << '\n';
            }
        } else if (value.is_array() && !value.empty() && value.front().is_object()) {
            os << indent << key << ":\n";
            std::vector<std::string> cols;
            for (const auto& [c, v] : value.front().items()) {
                cols.push_back(c);
            }
            std::vector<std::size_t> width;
            for (const std::string& c : cols) {
                std::size_t w = c.size();
                for (const auto& row : value) {
                    w = std::max(w, scalar_text(row.value(c, json())).size());
                }
                width.push_back(std::min<std::size_t>(w, 60));
            }
            auto line = [&](auto&& cell) {
                os << indent << "  ";
                for (std::size_t i = 0; i < cols.size(); ++i) {
                    os << std::left << std::setw(static_cast<int>(width[i]) + 2) << cell(i);
                }
                os << '\n';
            };
            line([&](std::size_t i) { return cols[i]; });
            for (const auto& row : value) {
                line([&](std::size_t i) { return scalar_text(row.value(cols[i], json())); });
            }
        } else if (value.is_array()) {
            os << indent << key << ":";
            if (value.empty()) {
                os << " -";
            }
            os << '\n';
            for (const auto& v : value) {
                os << indent << "  " << scalar_text(v) << '\n';
            }
        } else if (value.is_object()) {
            os << indent << key << ":\n";
            print_pretty(value, os, indent + "  ");
        } else {
            os << indent << key << ": " << scalar_text(value) << '\n';
        }
    }
}

void emit(const Global& g, const json& j)
{
    if (g.pretty) {
        print_pretty(j, std::cout);
    } else {
        std::cout << j.dump(2) << '\n';
    }
}

std::optional<long> optional_prime(long p)
{
    return p > 0 ? std::optional<long>(p) : std::nullopt;
}

ZetaFlavor parse_zeta_flavor(const std::string& s)
{
    if (s == "complex") {
        return ZetaFlavor::complex;
    }
    if (s == "padic") {
        return ZetaFlavor::padic;
    }
    if (s == "padic_deligne") {
        return ZetaFlavor::padic_deligne;
    }
    throw parse_error("unknown zeta flavor '" + s + "' (complex, padic, padic_deligne)");
}

std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

// Runs independent tasks with at most `jobs` in flight; results keep input order.
template <class T, class F>
std::vector<T> run_bounded(const std::vector<std::string>& items, int jobs, F&& task)
{
    std::vector<T> out;
    out.reserve(items.size());
    const std::size_t batch = static_cast<std::size_t>(std::max(1, jobs));
    for (std::size_t i = 0; i < items.size(); i += batch) {
        std::vector<std::future<T>> running;
        for (std::size_t j = i; j < std::min(items.size(), i + batch); ++j) {
            running.push_back(std::async(batch == 1 ? std::launch::deferred : std::launch::async, task, items[j]));
        }
        for (auto& f : running) {
            out.push_back(f.get());
        }
    }
    return out;
}

int cmd_mzv_eval(const Global& g, const std::string& index, double tolerance)
{
    const Index i = Index::parse(index);
    const NumericValue v = mzv_numeric(i);
    const bool pass = v.error_bound <= tolerance;
    emit(g, {{"schema_version", schema_version},
             {"command", "mzv eval"},
             {"index", i.str()},
             {"value", v.value.real()},
             {"error_bound", v.error_bound},
             {"tolerance", tolerance},
             {"pass", pass}});
    return pass ? ok : check_failed;
}

int cmd_mzv_relations(const Global& g, int weight, const std::string& flavor, const std::string& format)
{
    const ZetaFlavor zf = parse_zeta_flavor(flavor);
    const std::vector<RelationRow> rows = generate_double_shuffle(weight, zf);
    const RelationReduction red = reduce_relations(rows, weight, zf);
    if (format == "csv") {
        std::cout << relations_csv(red);
        return ok;
    }
    json basis = json::array();
    for (const Monomial& b : red.basis) {
        basis.push_back(monomial_str(b));
    }
    json jrows = json::array();
    for (const RelationRow& r : rows) {
        jrows.push_back({{"origin", r.origin}, {"relation", r.relation.str()}});
    }
    json expr = json::array();
    for (const Monomial& m : red.columns) {
        SymbolPoly e;
        for (const auto& [b, c] : red.expression.at(m)) {
            e.add_term(b, c);
        }
        expr.push_back({{"monomial", monomial_str(m)}, {"expression", e.str()}});
    }
    emit(g, {{"schema_version", schema_version},
             {"command", "mzv relations"},
             {"weight", weight},
             {"flavor", flavor},
             {"rank", red.rank},
             {"dimension_bound", red.basis.size()},
             {"basis", basis},
             {"rows", jrows},
             {"expressions", expr}});
    return ok;
}

int cmd_assoc_build(const Global& g, const std::string& flavor, int weight, long p, double tolerance)
{
    const AnySeries s = build_associator(parse_flavor(flavor), weight, optional_prime(p), tolerance);
    json j = series_to_json(s);
    j["flavor"] = flavor;
    j["prime"] = p > 0 ? json(p) : json(nullptr);
    emit(g, j);
    return ok;
}

int cmd_assoc_verify(const Global& g, const std::string& identities, int weight, long p, const std::string& flavor,
                     double tolerance, const std::string& format)
{
    std::vector<std::string> ids = split_list(identities);
    if (ids.empty()) {
        throw domain_error("assoc verify: no identity given");
    }
    for (const std::string& id : ids) {
        const auto& known = identity_names();
        if (std::find(known.begin(), known.end(), id) == known.end()) {
            throw domain_error("assoc verify: unknown identity '" + id + "'");
        }
    }
    VerifyOptions opt;
    opt.weight = weight;
    opt.p = optional_prime(p);
    opt.flavor = parse_flavor(flavor);
    opt.tolerance = tolerance;
    const std::vector<IdentityReport> reports =
        run_bounded<IdentityReport>(ids, g.jobs, [&opt](const std::string& id) { return verify_identity(id, opt); });
    const bool pass = std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.pass(); });
    if (format == "csv") {
        std::cout << "identity,flavor,truncation,constraint\n";
        for (const IdentityReport& r : reports) {
            for (const std::string& c : r.constraints) {
                std::cout << r.identity << ',' << r.flavor << ',' << r.truncation << ",\"" << c << "\"\n";
            }
        }
    } else if (reports.size() == 1) {
        emit(g, report_to_json(reports.front()));
    } else {
        json all = json::array();
        for (const IdentityReport& r : reports) {
            all.push_back(report_to_json(r));
        }
        emit(g, {{"schema_version", schema_version}, {"status", pass ? "pass" : "fail"}, {"reports", all}});
    }
    return pass ? ok : check_failed;
}

int cmd_padic_polylog(const Global& g, long p, int k, const std::string& index_text, const std::string& z_text,
                      long prec, bool dagger)
{
    if (p < 2 || !is_prime(static_cast<unsigned long>(p))) {
        throw domain_error("padic polylog: " + std::to_string(p) + " is not prime");
    }
    if (prec < 1) {
        throw domain_error("padic polylog: precision must be positive");
    }
    const Index index = index_text.empty() ? Index{k} : Index::parse(index_text);
    if (index.depth() == 0 || (dagger && index.depth() != 1)) {
        throw domain_error("padic polylog: --dagger takes a depth-1 index");
    }
    const auto up = static_cast<unsigned long>(p);
    const PadicNumber z = lift_for_series(up, parse_rational(z_text), index.weight(), prec);
    const PadicSeriesValue v = dagger ? padic_li_dagger(index[0], z, prec) : padic_mpl(index, z, prec);
    emit(g, {{"schema_version", schema_version},
             {"command", "padic polylog"},
             {"p", p},
             {"index", index.str()},
             {"dagger", dagger},
             {"z", z_text},
             {"value", v.value.str()},
             {"expansion", v.value.expansion()},
             {"precision", v.value.absolute_precision()},
             {"terms", v.terms}});
    return ok;
}

int cmd_padic_verify_dagger(const Global& g, const std::string& primes_text, int max_k, int points, long prec, long digits,
                    std::uint64_t seed)
{
    std::vector<unsigned long> primes;
    for (const std::string& s : split_list(primes_text)) {
        const unsigned long p = std::stoul(s);
        if (!is_prime(p)) {
            throw domain_error("padic verify-spain: " + s + " is not prime");
        }
        primes.push_back(p);
    }
    const DaggerReport rep = verify_dagger_numeric(primes, max_k, points, prec, digits, seed);
    json rows = json::array();
    long min_digits = prec;
    for (const DaggerSample& s : rep.samples) {
        min_digits = std::min(min_digits, s.digits);
        rows.push_back({{"p", s.p}, {"k", s.k}, {"z", to_string(s.z)}, {"digits", s.digits}, {"pass", s.pass}});
    }
    emit(g, {{"schema_version", schema_version},
             {"command", "padic verify-spain"},
             {"status", rep.pass() ? "pass" : "fail"},
             {"working_precision", rep.working_precision},
             {"required_digits", rep.required_digits},
             {"min_digits", min_digits},
             {"samples", rows}});
    return rep.pass() ? ok : check_failed;
}

int cmd_sv_polylog(const Global& g, int k, const std::string& z_text)
{
    const Complex z = ComplexField{}.parse(z_text);
    emit(g, {{"schema_version", schema_version},
             {"command", "sv polylog"},
             {"k", k},
             {"z", format_complex(z)},
             {"li_minus", format_complex(sv_polylog(k, z))},
             {"zagier_P", zagier_P(k, z)},
             {"bernoulli_sum", format_complex(bernoulli_sum(k, z))},
             {"tolerance", 1e-9}});
    return ok;
}

int cmd_series_parse(const Global& g, const std::string& file)
{
    std::string text;
    if (file.empty() || file == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(file);
        if (!in) {
            throw domain_error("series parse: cannot open " + file);
        }
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("series parse: ") + e.what());
    }
    json out = series_to_json(series_from_json(j));
    // Extra descriptive fields pass through unchanged.
    for (const char* key : {"flavor", "prime"}) {
        if (j.contains(key)) {
            out[key] = j.at(key);
        }
    }
    emit(g, out);
    return ok;
}

int run(int argc, char** argv)
{
    CLI::App app{"Associators, multiple zeta values and polylogarithms"};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_flag("--pretty", g.pretty, "Human-readable tables instead of JSON");
    app.add_option("--jobs", g.jobs, "Maximum number of checks run in parallel")
        ->envname("ASSOCIATOR_JOBS")
        ->check(CLI::PositiveNumber);

    int weight = 4;
    long prime = 0;
    double tolerance = 1e-6;
    auto weight_opt = [&](CLI::App* c, const char* help) {
        c->add_option("--weight", weight, help)->envname("ASSOCIATOR_WEIGHT")->check(CLI::Range(1, 12));
    };
    auto prime_opt = [&](CLI::App* c) {
        c->add_option("--p", prime, "Prime")->envname("ASSOCIATOR_PRIME")->check(CLI::PositiveNumber);
    };
    auto tol_opt = [&](CLI::App* c) {
        c->add_option("--tolerance", tolerance, "Absolute tolerance of numeric checks")
            ->envname("ASSOCIATOR_TOLERANCE")
            ->check(CLI::PositiveNumber);
    };

    auto* mzv = app.add_subcommand("mzv", "Multiple zeta values")->require_subcommand(1);
    std::string index_text;
    auto* mzv_eval = mzv->add_subcommand("eval", "Numeric value of an admissible index");
    mzv_eval->add_option("--index", index_text, "Index, e.g. 1,2")->required();
    tol_opt(mzv_eval);
    std::string zflavor = "complex";
    std::string format = "csv";
    auto* mzv_rel = mzv->add_subcommand("relations", "Double shuffle relations and their reduction");
    weight_opt(mzv_rel, "Weight");
    mzv_rel->add_option("--flavor", zflavor, "complex, padic or padic_deligne");
    mzv_rel->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* assoc = app.add_subcommand("assoc", "Associators")->require_subcommand(1);
    std::string aflavor = "complex_KZ";
    auto* build = assoc->add_subcommand("build", "Associator series");
    build->add_option("--flavor", aflavor, "complex_KZ, padic_KZ, padic_Deligne, minus_KZ, symbolic_lambda");
    weight_opt(build, "Truncation weight");
    prime_opt(build);
    tol_opt(build);
    std::string identities;
    auto* verify = assoc->add_subcommand("verify", "Verify identities");
    verify->add_option("--identity", identities, "Comma-separated subset of "
                                                 "dual,hexagon,pentagon,netherland,czech,moldova,kz,princeton")
        ->required();
    weight_opt(verify, "Truncation weight");
    prime_opt(verify);
    verify->add_option("--flavor", aflavor, "Associator flavor for dual, hexagon and pentagon");
    std::string verify_format = "json";
    verify->add_option("--format", verify_format, "json report, or csv of the symbolic constraints")
        ->check(CLI::IsMember({"json", "csv"}));
    tol_opt(verify);

    auto* padic = app.add_subcommand("padic", "p-adic evaluation")->require_subcommand(1);
    int k = 1;
    std::string z_text;
    long prec = 30;
    bool dagger = false;
    auto* polylog = padic->add_subcommand("polylog", "Li_k or Li_{k_1..k_m} on the open unit disk");
    prime_opt(polylog);
    polylog->add_option("--k", k, "Weight of the depth-1 polylog")->check(CLI::PositiveNumber);
    polylog->add_option("--index", index_text, "Multiple index instead of --k");
    polylog->add_option("--z", z_text, "Rational argument")->required();
    polylog->add_option("--prec", prec, "Working precision (p-adic digits)")->envname("ASSOCIATOR_PRECISION");
    polylog->add_flag("--dagger", dagger, "Prime-to-p series");
    std::string primes_text = "3,5,7";
    int max_k = 4;
    int points = 20;
    long digits = 20;
    std::uint64_t seed = 20240601;
    auto* dagger_cmd = padic->add_subcommand("verify-spain", "Numeric depth-1 overconvergent identity");
    dagger_cmd->add_option("--primes", primes_text, "Comma-separated primes");
    dagger_cmd->add_option("--max-k", max_k, "Largest k")->check(CLI::Range(1, 12));
    dagger_cmd->add_option("--points", points, "Random points per (p, k)")->check(CLI::Range(1, 10000));
    dagger_cmd->add_option("--prec", prec, "Working precision")->envname("ASSOCIATOR_PRECISION");
    dagger_cmd->add_option("--digits", digits, "Required agreement in p-adic digits");
    dagger_cmd->add_option("--seed", seed, "Random seed");

    auto* sv = app.add_subcommand("sv", "Single-valued polylogarithms")->require_subcommand(1);
    auto* svp = sv->add_subcommand("polylog", "Li^-_k(z) and P_k(z)");
    svp->add_option("--k", k, "Weight")->required()->check(CLI::Range(1, 12));
    svp->add_option("--z", z_text, "Complex point, e.g. 0.3+0.2i")->required();

    auto* series = app.add_subcommand("series", "Series serialization")->require_subcommand(1);
    auto* dump = series->add_subcommand("dump", "Write an associator series as JSON");
    dump->add_option("--flavor", aflavor, "Associator flavor");
    weight_opt(dump, "Truncation weight");
    prime_opt(dump);
    tol_opt(dump);
    std::string file;
    auto* parse = series->add_subcommand("parse", "Read series JSON and write its canonical form");
    parse->add_option("--file", file, "Input file (default stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    if (*mzv_eval) {
        return cmd_mzv_eval(g, index_text, tolerance);
    }
    if (*mzv_rel) {
        return cmd_mzv_relations(g, weight, zflavor, format);
    }
    if (*build || *dump) {
        return cmd_assoc_build(g, aflavor, weight, prime, tolerance);
    }
    if (*verify) {
        return cmd_assoc_verify(g, identities, weight, prime, aflavor, tolerance, verify_format);
    }
    if (*polylog) {
        if (prime == 0) {
            throw domain_error("padic polylog: --p is required");
        }
        return cmd_padic_polylog(g, prime, k, index_text, z_text, prec, dagger);
    }
    if (*dagger_cmd) {
        return cmd_padic_verify_dagger(g, primes_text, max_k, points, prec, digits, seed);
    }
    if (*svp) {
        return cmd_sv_polylog(g, k, z_text);
    }
    if (*parse) {
        return cmd_series_parse(g, file);
    }
    return usage;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const pmzv::inconsistent_data_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return check_failed;
    } catch (const pmzv::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const pmzv::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const pmzv::capability_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const pmzv::ring_mismatch_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return internal;
    }
}
