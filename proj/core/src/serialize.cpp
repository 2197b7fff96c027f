#include "hilbfock/serialize.hpp"

#include <functional>
#include <sstream>

#include <json.hpp>

#include "hilbfock/errors.hpp"

namespace hilbfock {

using ordered_json = nlohmann::ordered_json;

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "latex") return OutputFormat::latex;
    throw ParseError("unknown format '" + name + "' (expected json, csv or latex)");
}

namespace {

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

std::string latex_poly(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        Rational a = c.abs();
        bool constant = (m.du == 0 && m.dv == 0);
        if (!a.is_one() || constant) {
            if (a.is_integer())
                os << a.to_string();
            else
                os << "\\tfrac{" << a.num().get_str() << "}{" << a.den().get_str() << "}";
            if (!constant) os << " ";
        }
        if (m.du > 0) {
            os << "U";
            if (m.du > 1) os << "^{" << m.du << "}";
        }
        if (m.dv > 0) {
            os << "V";
            if (m.dv > 1) os << "^{" << m.dv << "}";
        }
    }
    return os.str();
}

std::string latex_ratfunc(const RatFunc& f) {
    if (f.is_polynomial()) return latex_poly(f.num());
    return "\\frac{" + latex_poly(f.num()) + "}{" + latex_poly(f.den()) + "}";
}

std::vector<std::string> order_strings(int n) {
    std::vector<std::string> out;
    for (const Partition& p : partitions_of(n)) out.push_back(p.to_string());
    return out;
}

std::string latex_table(const std::vector<std::string>& row_labels,
                        const std::vector<std::string>& col_labels,
                        const std::vector<std::vector<std::string>>& cells,
                        const std::string& caption) {
    std::ostringstream os;
    os << "% " << caption << "\n";
    os << "\\begin{array}{r|";
    for (size_t j = 0; j < col_labels.size(); ++j) os << "c";
    os << "}\n";
    for (const auto& c : col_labels) os << " & " << c;
    os << " \\\\\\hline\n";
    for (size_t i = 0; i < row_labels.size(); ++i) {
        os << row_labels[i];
        for (const auto& cell : cells[i]) os << " & " << cell;
        os << " \\\\\n";
    }
    os << "\\end{array}\n";
    return os.str();
}

std::string csv_table(const std::vector<std::string>& row_labels,
                      const std::vector<std::string>& col_labels,
                      const std::vector<std::vector<std::string>>& cells) {
    std::ostringstream os;
    os << "\"\"";
    for (const auto& c : col_labels) os << "," << csv_quote(c);
    os << "\n";
    for (size_t i = 0; i < row_labels.size(); ++i) {
        os << csv_quote(row_labels[i]);
        for (const auto& cell : cells[i]) os << "," << csv_quote(cell);
        os << "\n";
    }
    return os.str();
}

template <typename Entry>
std::string emit_matrix_generic(int n, Basis from, Basis to,
                                const std::vector<std::vector<Entry>>& entries,
                                OutputFormat fmt,
                                const std::function<std::string(const Entry&)>& text,
                                const std::function<std::string(const Entry&)>& latex) {
    const auto order = order_strings(n);
    std::vector<std::vector<std::string>> cells(entries.size());
    if (fmt == OutputFormat::json) {
        ordered_json j;
        j["n"] = n;
        j["from"] = basis_name(from);
        j["to"] = basis_name(to);
        j["order"] = order;
        auto rows = ordered_json::array();
        for (const auto& row : entries) {
            auto r = ordered_json::array();
            for (const auto& e : row) r.push_back(text(e));
            rows.push_back(r);
        }
        j["entries"] = rows;
        return j.dump(2) + "\n";
    }
    for (size_t i = 0; i < entries.size(); ++i)
        for (const auto& e : entries[i])
            cells[i].push_back(fmt == OutputFormat::latex ? latex(e) : text(e));
    std::string caption = basis_name(from) + " -> " + basis_name(to) +
                          " at n = " + std::to_string(n);
    if (fmt == OutputFormat::latex) return latex_table(order, order, cells, caption);
    return csv_table(order, order, cells);
}

} // namespace

std::string emit_matrix(int n, Basis from, Basis to, const Mat& m, OutputFormat fmt) {
    std::vector<std::vector<RatFunc>> entries(m.rows(), std::vector<RatFunc>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) entries[i][j] = m.at(i, j);
    return emit_matrix_generic<RatFunc>(
        n, from, to, entries, fmt, [](const RatFunc& f) { return f.to_string(); },
        [](const RatFunc& f) { return latex_ratfunc(f); });
}

std::string emit_classical_matrix(int n, Basis from, Basis to,
                                  const std::vector<std::vector<Rational>>& m,
                                  OutputFormat fmt) {
    return emit_matrix_generic<Rational>(
        n, from, to, m, fmt, [](const Rational& r) { return r.to_string(); },
        [](const Rational& r) { return r.to_string(); });
}

std::string emit_operator_blocks(const std::string& name, int conformal_degree,
                                 const std::vector<int>& degrees,
                                 const std::vector<Mat>& blocks, OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        auto arr = ordered_json::array();
        for (size_t k = 0; k < degrees.size(); ++k) {
            const int n = degrees[k];
            const int m = n + conformal_degree;
            const Mat& b = blocks[k];
            ordered_json j;
            j["operator"] = name;
            j["n"] = n;
            j["source_order"] = order_strings(n);
            j["target_order"] = m >= 0 ? order_strings(m) : std::vector<std::string>{};
            ordered_json rows = ordered_json::array();
            // emitted rows = targets, columns = sources
            for (int i = 0; i < b.cols(); ++i) {
                auto r = ordered_json::array();
                for (int s = 0; s < b.rows(); ++s) r.push_back(b.at(s, i).to_string());
                rows.push_back(r);
            }
            j["entries"] = rows;
            arr.push_back(j);
        }
        return arr.dump(2) + "\n";
    }
    std::ostringstream os;
    for (size_t k = 0; k < degrees.size(); ++k) {
        const int n = degrees[k];
        const int m = n + conformal_degree;
        const Mat& b = blocks[k];
        std::vector<std::string> cols = order_strings(n);
        std::vector<std::string> rows = m >= 0 ? order_strings(m)
                                               : std::vector<std::string>{};
        std::vector<std::vector<std::string>> cells(b.cols());
        for (int i = 0; i < b.cols(); ++i) {
            cells[i].resize(b.rows());
            for (int s = 0; s < b.rows(); ++s)
                cells[i][s] = (fmt == OutputFormat::latex) ? latex_ratfunc(b.at(s, i))
                                                           : b.at(s, i).to_string();
        }
        os << (fmt == OutputFormat::latex ? "% " : "# ") << name << " block n=" << n
           << "\n";
        if (fmt == OutputFormat::latex)
            os << latex_table(rows, cols, cells, name + " at n=" + std::to_string(n));
        else
            os << csv_table(rows, cols, cells);
    }
    return os.str();
}

std::string emit_class(const FockClass& x, OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        ordered_json coords = ordered_json::object();
        for (int n : x.support_weights())
            for (const Partition& lambda : partitions_of(n)) {
                RatFunc c = x.coefficient(lambda);
                if (!c.is_zero()) coords[lambda.to_string()] = c.to_string();
            }
        ordered_json j;
        j["coords"] = coords;
        return j.dump(2) + "\n";
    }
    if (fmt == OutputFormat::csv) {
        std::ostringstream os;
        os << "\"partition\",\"coefficient\"\n";
        for (int n : x.support_weights())
            for (const Partition& lambda : partitions_of(n)) {
                RatFunc c = x.coefficient(lambda);
                if (!c.is_zero())
                    os << csv_quote(lambda.to_string()) << "," << csv_quote(c.to_string())
                       << "\n";
            }
        return os.str();
    }
    std::ostringstream os;
    bool first = true;
    if (x.is_zero()) return "0\n";
    for (int n : x.support_weights())
        for (const Partition& lambda : partitions_of(n)) {
            RatFunc c = x.coefficient(lambda);
            if (c.is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << "\\left(" << latex_ratfunc(c) << "\\right)\\,\\mathrm{fix}"
               << lambda.to_string();
        }
    os << "\n";
    return os.str();
}

std::string emit_reports(const std::vector<IdentityReport>& reports, OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        auto arr = ordered_json::array();
        for (const auto& r : reports) {
            ordered_json j;
            j["id"] = r.id;
            j["status"] = r.pass ? "pass" : "fail";
            ordered_json w = ordered_json::object();
            for (const auto& [k, v] : r.window) w[k] = v;
            j["window"] = w;
            if (r.counterexample) {
                ordered_json ce;
                ce["lambda"] = r.counterexample->lambda.to_string();
                ce["mu"] = r.counterexample->mu.to_string();
                ce["expected"] = r.counterexample->expected;
                ce["got"] = r.counterexample->got;
                j["counterexample"] = ce;
            } else {
                j["counterexample"] = nullptr;
            }
            j["comparisons"] = r.comparisons;
            if (!r.note.empty()) j["note"] = r.note;
            arr.push_back(j);
        }
        return arr.dump(2) + "\n";
    }
    if (fmt == OutputFormat::csv) {
        std::ostringstream os;
        os << "\"id\",\"status\",\"comparisons\",\"counterexample\"\n";
        for (const auto& r : reports) {
            std::string ce;
            if (r.counterexample)
                ce = r.counterexample->lambda.to_string() + " -> " +
                     r.counterexample->mu.to_string() + ": expected " +
                     r.counterexample->expected + ", got " + r.counterexample->got;
            os << csv_quote(r.id) << "," << (r.pass ? "\"pass\"" : "\"fail\"") << ","
               << r.comparisons << "," << csv_quote(ce) << "\n";
        }
        return os.str();
    }
    std::ostringstream os;
    os << "\\begin{tabular}{llr}\n";
    os << "id & status & comparisons \\\\\\hline\n";
    for (const auto& r : reports)
        os << r.id << " & " << (r.pass ? "pass" : "fail") << " & " << r.comparisons
           << " \\\\\n";
    os << "\\end{tabular}\n";
    return os.str();
}

} // namespace hilbfock
