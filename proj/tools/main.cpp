// Command-line front end: base-change matrices, operator coefficient
// blocks, classes in fix coordinates, and the identity verification
// battery. Exit codes: 0 success, 1 identity failure, 2 usage/parse
// error, 3 integrality violation, 4 truncation overflow.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hilbfock/classes.hpp"
#include "hilbfock/errors.hpp"
#include "hilbfock/identities.hpp"
#include "hilbfock/serialize.hpp"

using namespace hilbfock;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIntegrality = 3;
constexpr int kExitTruncation = 4;
constexpr int kExitInternal = 70;
constexpr int kHardCap = 10;

struct Config {
    int max_weight = 6;
    std::string format = "json";
    std::string output;
};

void write_output(const Config& cfg, const std::string& text) {
    if (cfg.output.empty() || cfg.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream os(cfg.output, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file '" + cfg.output + "'");
    os << text;
}

// Operator names: q<i> (i nonzero, negative allowed), qx<i> (i positive),
// rho, rho_dual, boundary, or a bracket "[A,B]".
Operator parse_operator_name(const std::string& raw, Truncation t) {
    std::string name;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) name += c;
    if (name.empty()) throw ParseError("empty operator name");

    if (name.front() == '[') {
        if (name.back() != ']') throw ParseError("unterminated bracket in '" + raw + "'");
        std::string inner = name.substr(1, name.size() - 2);
        int depth = 0;
        size_t comma = std::string::npos;
        for (size_t i = 0; i < inner.size(); ++i) {
            if (inner[i] == '[') ++depth;
            else if (inner[i] == ']') --depth;
            else if (inner[i] == ',' && depth == 0) {
                comma = i;
                break;
            }
        }
        if (comma == std::string::npos)
            throw ParseError("bracket expression needs two operands: '" + raw + "'");
        Operator a = parse_operator_name(inner.substr(0, comma), t);
        Operator b = parse_operator_name(inner.substr(comma + 1), t);
        return commutator(a, b, t);
    }
    if (name == "rho") return primitive_ops().rho;
    if (name == "rho_dual") return primitive_ops().rho_dual;
    if (name == "boundary") return primitive_ops().boundary;
    if (name.rfind("qx", 0) == 0) {
        int i;
        try {
            i = std::stoi(name.substr(2));
        } catch (const std::exception&) {
            throw ParseError("cannot parse operator index in '" + raw + "'");
        }
        if (i < 1) throw ParseError("q_{i,X} needs a positive index");
        return qx_general(i);
    }
    if (name.front() == 'q') {
        int i;
        try {
            i = std::stoi(name.substr(1));
        } catch (const std::exception&) {
            throw ParseError("unknown operator '" + raw + "'");
        }
        if (i == 0) throw ParseError("q_0 = 0 by convention");
        return q_general(i);
    }
    throw ParseError("unknown operator '" + raw + "'");
}

std::pair<int, int> parse_degrees(const std::string& text) {
    size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int n = std::stoi(text);
            return {n, n};
        }
        int lo = std::stoi(text.substr(0, dots));
        int hi = std::stoi(text.substr(dots + 2));
        if (lo > hi) throw ParseError("empty degree range '" + text + "'");
        return {lo, hi};
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("cannot parse degree range '" + text + "'");
    }
}

// Class grammar: [op-name ...] terminal, where terminal is vac, nak[..],
// es[..] or fix[..]; operators apply right to left.
FockClass parse_class_expr(const std::string& expr, Truncation t) {
    std::vector<std::string> tokens;
    std::istringstream is(expr);
    std::string tok;
    while (is >> tok) tokens.push_back(tok);
    if (tokens.empty()) throw ParseError("empty class expression");

    const std::string terminal = tokens.back();
    tokens.pop_back();

    FockClass x;
    if (terminal == "vac") {
        x = FockClass::vacuum();
    } else {
        size_t bracket = terminal.find('[');
        if (bracket == std::string::npos)
            throw ParseError("expected vac, nak[..], es[..] or fix[..], got '" +
                             terminal + "'");
        std::string kind = terminal.substr(0, bracket);
        Partition lambda = Partition::parse(terminal.substr(bracket));
        if (lambda.weight() > t.max_weight)
            throw TruncationError(lambda.weight(), t.max_weight);
        if (kind == "fix") x = FockClass::fix(lambda);
        else if (kind == "nak") x = nak_class(lambda, t);
        else if (kind == "es") x = es_class(lambda, t);
        else throw ParseError("unknown class literal '" + terminal + "'");
    }
    for (auto it = tokens.rbegin(); it != tokens.rend(); ++it)
        x = apply(parse_operator_name(*it, t), x, t);
    return x;
}

int cmd_matrix(const Config& cfg, int n, const std::string& from_name,
               const std::string& to_name, bool classical) {
    Basis from = parse_basis(from_name);
    Basis to = parse_basis(to_name);
    if (n < 0) throw ParseError("matrix: n must be nonnegative");
    if (n > cfg.max_weight) throw TruncationError(n, cfg.max_weight);
    Mat m = basis_matrix(n, from, to);
    OutputFormat fmt = parse_format(cfg.format);
    if (classical) {
        auto cls = classical_projection(m);
        write_output(cfg, emit_classical_matrix(n, from, to, cls, fmt));
    } else {
        write_output(cfg, emit_matrix(n, from, to, m, fmt));
    }
    return kExitOk;
}

int cmd_operator(const Config& cfg, const std::string& name, const std::string& degrees) {
    Truncation t{cfg.max_weight};
    Operator op = parse_operator_name(name, t);
    auto [lo, hi] = parse_degrees(degrees);
    if (lo < 0) throw ParseError("operator: degrees must be nonnegative");
    std::vector<int> ns;
    std::vector<Mat> blocks;
    for (int n = lo; n <= hi; ++n) {
        if (n > cfg.max_weight || n + op.degree() > cfg.max_weight)
            throw TruncationError(std::max(n, n + op.degree()), cfg.max_weight);
        ns.push_back(n);
        blocks.push_back(*op.block(n));
    }
    write_output(cfg, emit_operator_blocks(name, op.degree(), ns, blocks,
                                           parse_format(cfg.format)));
    return kExitOk;
}

int cmd_class(const Config& cfg, const std::string& expr) {
    Truncation t{cfg.max_weight};
    FockClass x = parse_class_expr(expr, t);
    write_output(cfg, emit_class(x, parse_format(cfg.format)));
    return kExitOk;
}

int cmd_verify(const Config& cfg, const std::string& suite) {
    Truncation t{cfg.max_weight};
    std::vector<IdentityReport> reports;
    if (suite == "all") {
        reports = run_all(t);
    } else {
        reports.push_back(check_identity(suite, t));
    }
    bool all_pass = true;
    for (const auto& r : reports) {
        all_pass = all_pass && r.pass;
        std::cerr << (r.pass ? "pass" : "FAIL") << "  " << r.id << "  ("
                  << r.comparisons << " comparisons)";
        if (!r.pass && r.counterexample)
            std::cerr << "  first counterexample at " << r.counterexample->lambda.to_string()
                      << " -> " << r.counterexample->mu.to_string();
        std::cerr << "\n";
    }
    write_output(cfg, emit_reports(reports, parse_format(cfg.format)));
    return all_pass ? kExitOk : kExitIdentityFailure;
}

} // namespace

int main(int argc, char** argv) {
    Config cfg;
    if (const char* env = std::getenv("HILBFOCK_MAX_WEIGHT")) {
        try {
            cfg.max_weight = std::stoi(env);
        } catch (const std::exception&) {
            std::cerr << "error: bad HILBFOCK_MAX_WEIGHT '" << env << "'\n";
            return kExitUsage;
        }
    }

    CLI::App app{"Exact operator calculus on Hilbert schemes of points in the "
                 "plane, in the torus fixed-point basis"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--max-weight", cfg.max_weight,
                   "Truncation window (hard cap " + std::to_string(kHardCap) + ")")
        ->capture_default_str();
    app.add_option("--format", cfg.format, "Output format: json, csv or latex")
        ->capture_default_str();
    app.add_option("--output", cfg.output, "Output file (default standard output)");

    int n = 0;
    std::string from_name, to_name;
    bool classical = false;
    auto* matrix = app.add_subcommand("matrix", "Base-change matrix between bases");
    matrix->add_option("--n", n, "Conformal degree (weight)")->required();
    matrix->add_option("--from", from_name, "Source basis: fix, nak or es")->required();
    matrix->add_option("--to", to_name, "Target basis: fix, nak or es")->required();
    matrix->add_flag("--classical", classical, "Project entries to U = V = 0");

    std::string op_name, degrees = "0..0";
    auto* op_cmd = app.add_subcommand("operator", "Per-degree operator blocks");
    op_cmd->add_option("--name", op_name,
                       "q<i>, qx<i>, rho, rho_dual, boundary, or \"[A,B]\"")
        ->required();
    op_cmd->add_option("--degrees", degrees, "Source degree or range a..b")
        ->capture_default_str();

    std::string expr;
    auto* class_cmd = app.add_subcommand("class", "Fix coordinates of a class");
    class_cmd->add_option("expr", expr,
                          "e.g. \"nak[2,1]\", \"fix[3]\", \"q2 q1 vac\"")
        ->required();

    std::string suite;
    auto* verify = app.add_subcommand("verify", "Run identity checks");
    verify->add_option("suite", suite, "Identity id or \"all\"")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (cfg.max_weight < 0 || cfg.max_weight > kHardCap) {
        std::cerr << "error: max weight must lie in 0.." << kHardCap << "\n";
        return kExitUsage;
    }

    try {
        if (matrix->parsed()) return cmd_matrix(cfg, n, from_name, to_name, classical);
        if (op_cmd->parsed()) return cmd_operator(cfg, op_name, degrees);
        if (class_cmd->parsed()) return cmd_class(cfg, expr);
        if (verify->parsed()) return cmd_verify(cfg, suite);
    } catch (const TruncationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTruncation;
    } catch (const IntegralityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIntegrality;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnknownIdentityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
