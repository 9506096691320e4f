// mahlerlab: command-line front end for the Mahler-function toolkit.
//
// Subcommands: seq, verify, eval, decide, relations. Output is text, JSON,
// or CSV; identical invocations produce byte-identical output. Exit codes:
// 0 success/pass, 1 check failure, 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mahler/decider.hpp"
#include "mahler/evaluate.hpp"
#include "mahler/functions.hpp"
#include "mahler/relations.hpp"
#include "mahler/sequences.hpp"

namespace {

using nlohmann::json;
using namespace mahler;

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw CLI::ValidationError("--format must be one of text, json, csv");
}

std::string csv_row(const std::string& name, const std::string& params,
                    const std::string& result, const std::string& bound) {
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += '"';
            out += c;
        }
        out += '"';
        return out;
    };
    return quote(name) + "," + quote(params) + "," + quote(result) + "," + quote(bound);
}

constexpr const char* kCsvHeader = "name,params,result,bound";

// ---------------------------------------------------------------------------
// Enclosure cache: one JSON file, atomically replaced on update. A cached
// entry is reused only when function name, alpha and precision all match.

class EnclosureCache {
public:
    explicit EnclosureCache(std::string path) : path_(std::move(path)) {
        if (path_.empty()) return;
        std::ifstream in(path_);
        if (!in) return;
        try {
            json j = json::parse(in);
            if (j.contains("entries") && j["entries"].is_object())
                entries_ = j["entries"];
        } catch (const json::exception&) {
            // Unreadable cache: start fresh rather than fail the command.
            entries_ = json::object();
        }
    }

    std::optional<BallReal> lookup(const std::string& key) const {
        if (path_.empty() || !entries_.contains(key)) return std::nullopt;
        const json& e = entries_.at(key);
        try {
            return BallReal(parse_rational(e.at("mid").get<std::string>()),
                            parse_rational(e.at("rad").get<std::string>()));
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }

    void store(const std::string& key, const BallReal& ball) {
        if (path_.empty()) return;
        entries_[key] = {{"mid", to_fraction_string(ball.mid())},
                         {"rad", to_fraction_string(ball.rad())}};
        json out = {{"version", 1}, {"entries", entries_}};
        std::string tmp = path_ + ".tmp";
        {
            std::ofstream os(tmp);
            os << out.dump(2) << "\n";
        }
        std::filesystem::rename(tmp, path_);
    }

private:
    std::string path_;
    json entries_ = json::object();
};

BallReal cached_eval(EnclosureCache& cache, const FunctionId& f, const EvalPoint& pt,
                     unsigned long prec) {
    std::string key =
        f.name() + "|alpha=" + to_fraction_string(pt.alpha) + "|prec=" + std::to_string(prec);
    if (auto hit = cache.lookup(key)) return *hit;
    BallReal ball = eval(f, pt, prec);
    cache.store(key, ball);
    return ball;
}

// ---------------------------------------------------------------------------

int run_seq(const std::string& kind_name, long count, Format format) {
    auto kind = parse_sequence_kind(kind_name);
    if (!kind) throw CLI::ValidationError("unknown sequence: " + kind_name);
    if (count < 1) throw CLI::ValidationError("N must be >= 1");
    auto bits = sequence_prefix(*kind, static_cast<std::size_t>(count));
    std::ostringstream joined;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (i) joined << ",";
        joined << bits[i];
    }
    switch (format) {
        case Format::Text:
            std::cout << joined.str() << "\n";
            break;
        case Format::Json: {
            std::cout << "{\"kind\": \"" << sequence_name(*kind) << "\", \"count\": " << count
                      << ", \"bits\": [";
            for (std::size_t i = 0; i < bits.size(); ++i)
                std::cout << (i ? ", " : "") << bits[i];
            std::cout << "]}\n";
            break;
        }
        case Format::Csv:
            std::cout << kCsvHeader << "\n"
                      << csv_row("seq", sequence_name(*kind) + ";N=" + std::to_string(count),
                                 joined.str(), "")
                      << "\n";
            break;
    }
    return 0;
}

struct Check {
    std::string name;
    bool pass;
};

int run_verify(long order, bool inject_fault, Format format) {
    if (order < 1) throw CLI::ValidationError("--order must be >= 1");
    std::vector<Check> checks;
    for (int d = 2; d <= 5; ++d) {
        FunctionId t = FunctionId::T(d), u = FunctionId::U(d);
        bool t_ok = verify_functional_equation(t, order);
        if (inject_fault && d == 2) t_ok = !t_ok;  // negative-control hook
        checks.push_back({t.name() + " functional equation", t_ok});
        checks.push_back({u.name() + " functional equation", verify_functional_equation(u, order)});
        for (int j = 0; j <= 3; ++j) {
            FunctionId g = FunctionId::G(d, j);
            checks.push_back({g.name() + " functional equation", verify_functional_equation(g, order)});
        }
    }
    for (BridgeId id : {BridgeId::TMM_bridge, BridgeId::RPF_bridge, BridgeId::Cantor_bridge,
                        BridgeId::G21_rational, BridgeId::U2_rational, BridgeId::Fcoons_bridge})
        checks.push_back({std::string("bridge ") + bridge_name(id), verify_bridge_identity(id, order)});

    bool all = true;
    for (const auto& c : checks) all = all && c.pass;

    switch (format) {
        case Format::Text:
            for (const auto& c : checks)
                std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.name << " (order "
                          << order << ")\n";
            std::cout << (all ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
            break;
        case Format::Json: {
            std::cout << "{\"order\": " << order << ", \"checks\": [";
            for (std::size_t i = 0; i < checks.size(); ++i)
                std::cout << (i ? ", " : "") << "{\"name\": \"" << checks[i].name
                          << "\", \"pass\": " << (checks[i].pass ? "true" : "false") << "}";
            std::cout << "], \"all_pass\": " << (all ? "true" : "false") << "}\n";
            break;
        }
        case Format::Csv:
            std::cout << kCsvHeader << "\n";
            for (const auto& c : checks)
                std::cout << csv_row(c.name, "order=" + std::to_string(order),
                                     c.pass ? "pass" : "fail", "")
                          << "\n";
            break;
    }
    return all ? 0 : 1;
}

FunctionId resolve_function(const std::string& fn, std::optional<int> d, std::optional<int> j) {
    if (fn == "T" || fn == "U") {
        if (!d) throw CLI::ValidationError("--fn " + fn + " requires --d");
        if (j) throw CLI::ValidationError("--fn " + fn + " does not take --j");
        return fn == "T" ? FunctionId::T(*d) : FunctionId::U(*d);
    }
    if (fn == "G") {
        if (d && j) return FunctionId::G(*d, *j);
        if (!d && !j) return FunctionId::Gcoons();  // bare G = sum z^2^n/(1-z^2^n)
        throw CLI::ValidationError("--fn G takes either both --d and --j or neither");
    }
    if (d || j) throw CLI::ValidationError("--fn " + fn + " does not take --d/--j");
    auto f = FunctionId::parse(fn);
    if (!f) throw CLI::ValidationError("unknown function: " + fn);
    return *f;
}

int run_eval(const std::string& fn, std::optional<int> d, std::optional<int> j,
             const std::string& alpha_str, unsigned long prec, bool two_routes,
             Format format, EnclosureCache& cache) {
    FunctionId f = resolve_function(fn, d, j);
    EvalPoint pt(parse_rational(alpha_str));
    std::string params =
        "alpha=" + to_fraction_string(pt.alpha) + ";prec=" + std::to_string(prec);

    if (two_routes) {
        auto [direct, bridged] = eval_two_routes(f, pt, prec);
        bool meet = direct.intersects(bridged);
        switch (format) {
            case Format::Text:
                std::cout << f.name() << "(" << to_fraction_string(pt.alpha)
                          << ") direct:  " << direct.to_json(prec) << "\n";
                std::cout << f.name() << "(" << to_fraction_string(pt.alpha)
                          << ") bridged: " << bridged.to_json(prec) << "\n";
                std::cout << (meet ? "enclosures intersect" : "ENCLOSURES DISJOINT") << "\n";
                break;
            case Format::Json:
                std::cout << "{\"direct\": " << direct.to_json(prec)
                          << ", \"bridged\": " << bridged.to_json(prec)
                          << ", \"intersect\": " << (meet ? "true" : "false") << "}\n";
                break;
            case Format::Csv:
                std::cout << kCsvHeader << "\n"
                          << csv_row(f.name() + " direct", params,
                                     decimal_string(direct.mid(), (prec * 301 + 999) / 1000),
                                     to_fraction_string(direct.rad()))
                          << "\n"
                          << csv_row(f.name() + " bridged", params,
                                     decimal_string(bridged.mid(), (prec * 301 + 999) / 1000),
                                     to_fraction_string(bridged.rad()))
                          << "\n";
                break;
        }
        return meet ? 0 : 1;
    }

    BallReal ball = cached_eval(cache, f, pt, prec);
    switch (format) {
        case Format::Text:
            std::cout << f.name() << "(" << to_fraction_string(pt.alpha)
                      << ") = " << ball.to_json(prec) << "\n";
            break;
        case Format::Json:
            std::cout << ball.to_json(prec) << "\n";
            break;
        case Format::Csv:
            std::cout << kCsvHeader << "\n"
                      << csv_row(f.name(), params,
                                 decimal_string(ball.mid(), (prec * 301 + 999) / 1000),
                                 to_fraction_string(ball.rad()))
                      << "\n";
            break;
    }
    return 0;
}

std::vector<Rational> parse_rational_list(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
        out.push_back(parse_rational(tok));
    if (out.empty()) throw CLI::ValidationError("empty coefficient list");
    return out;
}

int run_decide(const std::string& which, int d, const std::string& c_list, long n1, long n2,
               Format format) {
    DeciderVerdict verdict;
    std::string params;
    if (which == "additive") {
        auto c = parse_rational_list(c_list);
        verdict = decide_additive(AdditiveFeqInstance(d, c));
        params = "d=" + std::to_string(d) + ";c=" + c_list;
    } else if (which == "multiplicative") {
        verdict = decide_multiplicative(MultiplicativeFeqInstance(d, n1, n2));
        params = "d=" + std::to_string(d) + ";n1=" + std::to_string(n1) +
                 ";n2=" + std::to_string(n2);
    } else {
        throw CLI::ValidationError("decide expects 'additive' or 'multiplicative'");
    }
    switch (format) {
        case Format::Text:
            std::cout << (verdict.solvable ? "solvable" : "unsolvable") << "\n";
            if (verdict.witness)
                std::cout << "witness: " << verdict.witness->to_string() << "\n";
            std::cout << "certificate: " << verdict.certificate << "\n";
            break;
        case Format::Json:
            std::cout << verdict.to_json() << "\n";
            break;
        case Format::Csv:
            std::cout << kCsvHeader << "\n"
                      << csv_row("decide " + which, params,
                                 verdict.solvable ? "solvable" : "unsolvable",
                                 verdict.witness ? verdict.witness->to_string() : "")
                      << "\n";
            break;
    }
    return 0;
}

int run_relations(const std::string& values_list, const std::string& alpha_str, int degree,
                  long height, unsigned long prec, Format format, EnclosureCache& cache) {
    EvalPoint pt(parse_rational(alpha_str));
    RelationQuery q;
    q.degree = degree;
    q.height = Integer(height);
    q.prec_bits = prec;

    std::stringstream ss(values_list);
    std::string tok;
    bool has_const = false;
    while (std::getline(ss, tok, ',')) {
        if (tok == "const") {
            has_const = true;
            q.values.push_back(ValueSpec::constant("const", Rational(1)));
            continue;
        }
        auto f = FunctionId::parse(tok);
        if (!f) throw CLI::ValidationError("unknown value name: " + tok);
        q.values.push_back(
            {tok, [f = *f, pt, &cache](unsigned long p) { return cached_eval(cache, f, pt, p); }});
    }
    if (q.values.empty()) throw CLI::ValidationError("--values must be nonempty");
    if (has_const) {
        // The explicit constant takes the place of the implicit monomial 1;
        // only meaningful for linear queries.
        if (degree != 1)
            throw CLI::ValidationError("'const' in --values requires --degree 1");
        q.include_constant = false;
    }

    RelationReport report = search_algebraic_relation(q);
    std::string params = "values=" + values_list + ";alpha=" + to_fraction_string(pt.alpha) +
                         ";degree=" + std::to_string(degree);
    std::string bound = "height=" + std::to_string(height) + ";prec=" + std::to_string(prec);
    switch (format) {
        case Format::Text: {
            if (report.outcome == RelationReport::Outcome::Found) {
                std::cout << "found integer relation (verified at doubled precision):\n";
                const auto& exps = report.monomials;
                const auto& rel = *report.relation;
                for (std::size_t i = 0; i < rel.size(); ++i) {
                    if (rel[i] == 0) continue;
                    std::cout << "  " << rel[i].get_str() << " *";
                    bool constant = true;
                    for (std::size_t v = 0; v < exps[i].size(); ++v) {
                        if (exps[i][v] == 0) continue;
                        constant = false;
                        std::cout << " " << q.values[v].label;
                        if (exps[i][v] > 1) std::cout << "^" << exps[i][v];
                    }
                    if (constant) std::cout << " 1";
                    std::cout << "\n";
                }
                std::cout << "  = 0 (numerically, to the stated precision)\n";
            } else {
                std::cout << "none up to bounds: degree " << degree << ", height " << height
                          << ", precision " << prec << " bits\n";
            }
            break;
        }
        case Format::Json:
            std::cout << report.to_json() << "\n";
            break;
        case Format::Csv:
            std::cout << kCsvHeader << "\n"
                      << csv_row("relations", params,
                                 report.outcome == RelationReport::Outcome::Found
                                     ? "found"
                                     : "none_up_to_bounds",
                                 bound)
                      << "\n";
            break;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mahlerlab: exact and certified computations around Mahler-type "
                 "products, lacunary sums and automatic-sequence series"};
    app.require_subcommand(1);
    app.fallthrough(true);  // inherited: global flags may follow the subcommand

    std::string format_name = "text";
    std::string cache_path;
    long seed = 0;
    if (const char* env = std::getenv("MAHLERLAB_CACHE")) cache_path = env;
    app.add_option("--format", format_name, "Output format: text, json, csv");
    app.add_option("--cache", cache_path,
                   "Enclosure cache file (overrides MAHLERLAB_CACHE)");
    app.add_option("--seed", seed, "Seed reserved for randomized suites");

    auto* seq = app.add_subcommand("seq", "Print a prefix of an automatic sequence");
    std::string seq_kind;
    long seq_count = 0;
    seq->add_option("kind", seq_kind, "thue-morse | paperfolding | cantor")->required();
    seq->add_option("N", seq_count, "Prefix length")->required();

    auto* verify = app.add_subcommand(
        "verify", "Check all functional equations and bridge identities symbolically");
    long verify_order = 256;
    bool inject_fault = false;
    verify->add_option("--order", verify_order, "Truncation order (default 256)");
    verify->add_flag("--inject-fault", inject_fault,
                     "Deliberately flip one check (negative control for scripts)");

    auto* ev = app.add_subcommand("eval", "Certified enclosure of a function value");
    std::string ev_fn, ev_alpha;
    int ev_d_raw = -1, ev_j_raw = -1;
    unsigned long ev_prec = 64;
    bool ev_two_routes = false;
    ev->add_option("--fn", ev_fn, "T | U | G | fTMM | fRPF | fC | F | Gcoons")->required();
    ev->add_option("--d", ev_d_raw, "Base d for T/U/G families");
    ev->add_option("--j", ev_j_raw, "Index j for the G family");
    ev->add_option("--alpha", ev_alpha, "Evaluation point as exact fraction p/q")->required();
    ev->add_option("--prec", ev_prec, "Target precision in bits (default 64)");
    ev->add_flag("--two-routes", ev_two_routes,
                 "Also evaluate through the bridge identity and compare");

    auto* dec = app.add_subcommand("decide", "Rational-solution deciders");
    std::string dec_which, dec_c;
    int dec_d = 2;
    long dec_n1 = 0, dec_n2 = 0;
    dec->add_option("kind", dec_which, "additive | multiplicative")->required();
    dec->add_option("--d", dec_d, "Base d >= 2")->required();
    dec->add_option("--c", dec_c, "Additive coefficients c0,c1,...,cm");
    dec->add_option("--n1", dec_n1, "Multiplicative exponent of 1/(1-z)");
    dec->add_option("--n2", dec_n2, "Multiplicative exponent of 1/(1+z^2)");

    auto* rel = app.add_subcommand("relations", "Integer-relation search on values");
    std::string rel_values, rel_alpha;
    int rel_degree = 3;
    long rel_height = 1000000;
    unsigned long rel_prec = 2048;
    rel->add_option("--values", rel_values, "Comma-separated value names, e.g. T2,fTMM,const")
        ->required();
    rel->add_option("--alpha", rel_alpha, "Evaluation point as exact fraction p/q")->required();
    rel->add_option("--degree", rel_degree, "Total degree bound (default 3)");
    rel->add_option("--height", rel_height, "Max |coefficient| (default 10^6)");
    rel->add_option("--prec", rel_prec, "Working precision in bits (default 2048)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Format format = parse_format(format_name);
        EnclosureCache cache(cache_path);
        if (seq->parsed()) return run_seq(seq_kind, seq_count, format);
        if (verify->parsed()) return run_verify(verify_order, inject_fault, format);
        if (ev->parsed()) {
            std::optional<int> d, j;
            if (ev_d_raw >= 0) d = ev_d_raw;
            if (ev_j_raw >= 0) j = ev_j_raw;
            return run_eval(ev_fn, d, j, ev_alpha, ev_prec, ev_two_routes, format, cache);
        }
        if (dec->parsed()) {
            if (dec_which == "additive" && dec_c.empty())
                throw CLI::ValidationError("decide additive requires --c");
            return run_decide(dec_which, dec_d, dec_c, dec_n1, dec_n2, format);
        }
        if (rel->parsed())
            return run_relations(rel_values, rel_alpha, rel_degree, rel_height, rel_prec,
                                 format, cache);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
