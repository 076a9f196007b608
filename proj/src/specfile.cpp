#include "pim/specfile.hpp"

#include "pim/errors.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace pim {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

int parse_index(const std::string& s, int line) {
    if (s.empty()) fail(line, "empty index");
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) fail(line, "bad index '" + s + "'");
    return std::stoi(s);
}

// "name[i]" or "name[i,j]" -> indices; empty vector when no brackets.
std::vector<int> bracket_indices(const std::string& lhs, std::string& head, int line) {
    std::size_t open = lhs.find('[');
    if (open == std::string::npos) {
        head = lhs;
        return {};
    }
    if (lhs.back() != ']') fail(line, "missing ']' in '" + lhs + "'");
    head = trim(lhs.substr(0, open));
    std::string inside = lhs.substr(open + 1, lhs.size() - open - 2);
    std::vector<int> idx;
    std::size_t pos = 0;
    while (pos <= inside.size()) {
        std::size_t comma = inside.find(',', pos);
        std::string part = trim(comma == std::string::npos ? inside.substr(pos)
                                                           : inside.substr(pos, comma - pos));
        idx.push_back(parse_index(part, line));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return idx;
}

std::vector<Rational> parse_rational_list(const std::string& s, int line) {
    std::vector<Rational> out;
    std::string tok;
    auto flush = [&] {
        if (tok.empty()) return;
        try {
            out.push_back(parse_rational(tok));
        } catch (const ParseError& e) {
            fail(line, e.what());
        }
        tok.clear();
    };
    for (char c : s) {
        if (c == ' ' || c == '\t' || c == ',')
            flush();
        else
            tok.push_back(c);
    }
    flush();
    return out;
}

// "+-c*ek" terms; c a rational literal or a declared parameter name.
std::vector<Rational> parse_combo(const std::string& s, int dim,
                                  const std::map<std::string, Rational>& params, int line) {
    std::vector<Rational> out(static_cast<std::size_t>(dim));
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    };
    skip_ws();
    if (pos == s.size()) fail(line, "empty vector expression");
    bool first = true;
    while (pos < s.size()) {
        int sign = 1;
        skip_ws();
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            fail(line, "expected '+' or '-' at column " + std::to_string(pos + 1));
        }
        skip_ws();
        std::string term;
        while (pos < s.size() && s[pos] != '+' && s[pos] != '-' && s[pos] != ' ' &&
               s[pos] != '\t')
            term.push_back(s[pos++]);
        if (term.empty()) fail(line, "dangling sign at column " + std::to_string(pos + 1));
        if (term == "0" && first && trim(s.substr(pos)).empty()) return out;  // zero vector

        std::string coeff_str, vec_str;
        std::size_t star = term.find('*');
        if (star == std::string::npos) {
            vec_str = term;
        } else {
            coeff_str = term.substr(0, star);
            vec_str = term.substr(star + 1);
        }
        if (vec_str.size() < 2 || vec_str[0] != 'e')
            fail(line, "expected basis symbol e<k>, got '" + vec_str + "'");
        int k = parse_index(vec_str.substr(1), line);
        if (k < 0 || k >= dim) fail(line, "basis index " + std::to_string(k) + " out of range");

        Rational c = 1;
        if (!coeff_str.empty()) {
            auto it = params.find(coeff_str);
            if (it != params.end()) {
                c = it->second;
            } else {
                try {
                    c = parse_rational(coeff_str);
                } catch (const ParseError&) {
                    fail(line, "unknown coefficient '" + coeff_str + "'");
                }
            }
        }
        out[static_cast<std::size_t>(k)] += sign * c;
        first = false;
        skip_ws();
    }
    return out;
}

std::string combo_string(const std::vector<Rational>& c) {
    std::string out;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        Rational v = c[k];
        if (out.empty()) {
            if (v < 0) {
                out += "-";
                v = -v;
            }
        } else {
            out += v < 0 ? " - " : " + ";
            if (v < 0) v = -v;
        }
        if (v != 1) out += to_string(v) + "*";
        out += "e" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

}  // namespace

ParsedSpec parse_spec(const std::string& text, const std::map<std::string, Rational>& overrides) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    bool saw_header = false;

    std::string name;
    std::optional<int> n;
    int dim = 0;
    std::map<std::string, Rational> params;
    LieAlgebra algebra;
    Tensor phi, xi, eta, g;
    bool saw_xi = false, saw_eta = false, saw_g = false;

    auto require_dim = [&](int line) {
        if (!n) fail(line, "'n = <int>' must precede indexed lines");
    };

    while (std::getline(in, raw)) {
        ++line_no;
        std::size_t hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;

        if (!saw_header) {
            if (line != "pim 1") fail(line_no, "expected header 'pim 1'");
            saw_header = true;
            continue;
        }

        std::size_t eq = line.find('=');
        if (eq == std::string::npos) fail(line_no, "expected '<key> = <value>'");
        std::string lhs = trim(line.substr(0, eq));
        std::string rhs = trim(line.substr(eq + 1));
        if (rhs.empty()) fail(line_no, "empty right-hand side");

        std::string head;
        std::vector<int> idx = bracket_indices(lhs, head, line_no);
        auto check_idx = [&](std::size_t count) {
            require_dim(line_no);
            if (idx.size() != count) fail(line_no, "'" + head + "' takes " +
                                                       std::to_string(count) + " index(es)");
            for (int i : idx)
                if (i < 0 || i >= dim)
                    fail(line_no, "index " + std::to_string(i) + " out of range");
        };

        if (head == "name" && idx.empty()) {
            name = rhs;
        } else if (head == "n" && idx.empty()) {
            if (n) fail(line_no, "duplicate 'n'");
            int v = parse_index(rhs, line_no);
            if (v < 1) fail(line_no, "n must be positive");
            n = v;
            dim = 2 * v + 1;
            algebra = LieAlgebra(dim);
            phi = Tensor(dim, 1, 1);
            xi = Tensor(dim, 1, 0);
            eta = Tensor(dim, 0, 1);
            g = Tensor(dim, 0, 2);
        } else if (head.rfind("param ", 0) == 0 && idx.empty()) {
            std::string pname = trim(head.substr(6));
            if (pname.empty()) fail(line_no, "missing parameter name");
            Rational v;
            try {
                v = parse_rational(rhs);
            } catch (const ParseError& e) {
                fail(line_no, e.what());
            }
            auto ov = overrides.find(pname);
            params[pname] = ov != overrides.end() ? ov->second : v;
        } else if (head == "bracket") {
            check_idx(2);
            auto c = parse_combo(rhs, dim, params, line_no);
            for (int k = 0; k < dim; ++k) {
                algebra.bracket(idx[0], idx[1], k) = c[static_cast<std::size_t>(k)];
                algebra.bracket(idx[1], idx[0], k) = -c[static_cast<std::size_t>(k)];
            }
        } else if (head == "phi") {
            check_idx(1);
            auto c = parse_combo(rhs, dim, params, line_no);
            for (int k = 0; k < dim; ++k) phi(k, idx[0]) = c[static_cast<std::size_t>(k)];
        } else if (head == "xi" && idx.empty()) {
            require_dim(line_no);
            auto c = parse_combo(rhs, dim, params, line_no);
            for (int k = 0; k < dim; ++k) xi(k) = c[static_cast<std::size_t>(k)];
            saw_xi = true;
        } else if (head == "eta") {
            require_dim(line_no);
            if (idx.empty()) {
                auto vals = parse_rational_list(rhs, line_no);
                if (static_cast<int>(vals.size()) != dim)
                    fail(line_no, "eta needs " + std::to_string(dim) + " components");
                for (int k = 0; k < dim; ++k) eta(k) = vals[static_cast<std::size_t>(k)];
            } else {
                check_idx(1);
                try {
                    eta(idx[0]) = parse_rational(rhs);
                } catch (const ParseError& e) {
                    fail(line_no, e.what());
                }
            }
            saw_eta = true;
        } else if (head == "g") {
            require_dim(line_no);
            if (idx.empty()) {
                if (rhs.rfind("diag(", 0) != 0 || rhs.back() != ')')
                    fail(line_no, "expected 'g = diag(...)'");
                auto vals = parse_rational_list(rhs.substr(5, rhs.size() - 6), line_no);
                if (static_cast<int>(vals.size()) != dim)
                    fail(line_no, "diag needs " + std::to_string(dim) + " entries");
                for (int k = 0; k < dim; ++k) g(k, k) = vals[static_cast<std::size_t>(k)];
            } else {
                check_idx(2);
                Rational v;
                try {
                    v = parse_rational(rhs);
                } catch (const ParseError& e) {
                    fail(line_no, e.what());
                }
                g(idx[0], idx[1]) = v;
                g(idx[1], idx[0]) = v;
            }
            saw_g = true;
        } else {
            fail(line_no, "unrecognized key '" + lhs + "'");
        }
    }

    if (!saw_header) fail(line_no ? line_no : 1, "empty file, expected 'pim 1'");
    if (!n) fail(line_no, "missing 'n'");
    if (!saw_xi) fail(line_no, "missing 'xi'");
    if (!saw_eta) fail(line_no, "missing 'eta'");
    if (!saw_g) fail(line_no, "missing 'g'");
    for (const auto& [k, v] : overrides)
        if (!params.count(k)) throw ParseError("override for undeclared parameter '" + k + "'");

    ParsedSpec spec;
    spec.params = params;
    spec.instance.algebra = std::move(algebra);
    spec.instance.name = name;
    spec.instance.structure.n = *n;
    spec.instance.structure.phi = std::move(phi);
    spec.instance.structure.xi = std::move(xi);
    spec.instance.structure.eta = std::move(eta);
    try {
        spec.instance.structure.metric = metric_inverse(g);
    } catch (const NotSymmetric&) {
        throw ValidationError("metric-symmetry");
    } catch (const SingularMetric&) {
        throw ValidationError("metric-invertibility");
    }

    const ValidationOutcome vo = validate(spec.instance);
    if (!vo.all_zero)
        for (const auto& nr : vo.residuals)
            if (!nr.residual.is_zero()) throw ValidationError(nr.name);
    return spec;
}

std::string emit_spec(const PiManifoldInstance& inst) {
    const int d = inst.dim();
    std::ostringstream out;
    out << "pim 1\n";
    if (!inst.name.empty()) out << "name = " << inst.name << "\n";
    out << "n = " << inst.structure.n << "\n";

    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            std::vector<Rational> c(static_cast<std::size_t>(d));
            bool nonzero = false;
            for (int k = 0; k < d; ++k) {
                c[static_cast<std::size_t>(k)] = inst.algebra.bracket(i, j, k);
                nonzero = nonzero || c[static_cast<std::size_t>(k)] != 0;
            }
            if (nonzero) out << "bracket[" << i << "," << j << "] = " << combo_string(c) << "\n";
        }

    for (int i = 0; i < d; ++i) {
        std::vector<Rational> c(static_cast<std::size_t>(d));
        bool nonzero = false;
        for (int k = 0; k < d; ++k) {
            c[static_cast<std::size_t>(k)] = inst.structure.phi(k, i);
            nonzero = nonzero || c[static_cast<std::size_t>(k)] != 0;
        }
        if (nonzero) out << "phi[" << i << "] = " << combo_string(c) << "\n";
    }

    {
        std::vector<Rational> c(static_cast<std::size_t>(d));
        for (int k = 0; k < d; ++k) c[static_cast<std::size_t>(k)] = inst.structure.xi(k);
        out << "xi = " << combo_string(c) << "\n";
    }

    out << "eta =";
    for (int k = 0; k < d; ++k) out << " " << to_string(inst.structure.eta(k));
    out << "\n";

    const auto& g = inst.structure.metric.g;
    bool diagonal = true;
    for (int i = 0; i < d && diagonal; ++i)
        for (int j = 0; j < d; ++j)
            if (i != j && g(i, j) != 0) {
                diagonal = false;
                break;
            }
    if (diagonal) {
        out << "g = diag(";
        for (int k = 0; k < d; ++k) out << (k ? " " : "") << to_string(g(k, k));
        out << ")\n";
    } else {
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j)
                if (g(i, j) != 0) out << "g[" << i << "," << j << "] = " << to_string(g(i, j))
                                      << "\n";
    }
    return out.str();
}

}  // namespace pim
