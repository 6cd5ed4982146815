#include "torex/io.hpp"

#include <cctype>
#include <fstream>

namespace torex {

namespace {

bool looks_rational(const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = t[0] == '-' ? 1 : 0;
    bool digits = false, slash = false;
    for (; i < t.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(t[i]))) {
            digits = true;
        } else if (t[i] == '/' && !slash && digits) {
            slash = true;
            digits = false;
        } else {
            return false;
        }
    }
    return digits;
}

Rat rat_from_token(const std::string& token, const std::string& field) {
    if (!looks_rational(token)) {
        throw ParseError(field + ": expected a rational string 'p/q', got '" + token + "'");
    }
    try {
        return Rat(token);
    } catch (const std::exception&) {
        throw ParseError(field + ": invalid rational '" + token + "'");
    }
}

/// Scans every leaf entry to decide exact (all strings) vs float (all
/// numbers); mixtures are rejected.
enum class EntryKind { None, String, Number };

void note_kind(const ordered_json& leaf, EntryKind& kind, const std::string& field) {
    EntryKind here;
    if (leaf.is_string()) {
        here = EntryKind::String;
    } else if (leaf.is_number()) {
        here = EntryKind::Number;
    } else {
        throw ParseError(field + ": entries must be rational strings or numbers");
    }
    if (kind == EntryKind::None) kind = here;
    if (kind != here) {
        throw MixedMode(field + ": mixes rational strings and float numbers in one file");
    }
}

ordered_json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace

std::string rat_str(const Rat& v) { return scalar_traits<Rat>::str(v); }

ordered_json scalar_json(const Rat& v) { return rat_str(v); }
ordered_json scalar_json(double v) { return v; }

ParsedLattice parse_lattice_json(const ordered_json& j, double tol) {
    if (!j.is_object()) throw ParseError("lattice file: top level must be a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer()) {
        throw ParseError("lattice file: field 'n' (complex dimension) must be an integer");
    }
    const int n = j["n"].get<int>();
    if (n < 1) throw ParseError("lattice file: 'n' must be >= 1");
    const int dim = 2 * n;

    const bool has_real = j.contains("basis");
    const bool has_complex = j.contains("complex_basis");
    if (has_real == has_complex) {
        throw ParseError("lattice file: provide exactly one of 'basis' or 'complex_basis'");
    }

    // Collect the real matrix entries as JSON leaves, column = generator.
    std::vector<std::vector<ordered_json>> cells(dim, std::vector<ordered_json>(dim));
    EntryKind kind = EntryKind::None;
    if (has_real) {
        const auto& rows = j["basis"];
        if (!rows.is_array() || static_cast<int>(rows.size()) != dim) {
            throw ParseError("lattice file: 'basis' must be a " + std::to_string(dim) + "x" +
                             std::to_string(dim) + " array");
        }
        for (int r = 0; r < dim; ++r) {
            if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != dim) {
                throw ParseError("lattice file: 'basis' row " + std::to_string(r + 1) +
                                 " must have " + std::to_string(dim) + " entries");
            }
            for (int c = 0; c < dim; ++c) {
                note_kind(rows[r][c], kind, "'basis'");
                cells[r][c] = rows[r][c];
            }
        }
    } else {
        const auto& rows = j["complex_basis"];
        if (!rows.is_array() || static_cast<int>(rows.size()) != dim) {
            throw ParseError("lattice file: 'complex_basis' must list " + std::to_string(dim) +
                             " generators");
        }
        for (int g = 0; g < dim; ++g) {
            if (!rows[g].is_array() || static_cast<int>(rows[g].size()) != n) {
                throw ParseError("lattice file: 'complex_basis' row " + std::to_string(g + 1) +
                                 " must have " + std::to_string(n) + " [re, im] pairs");
            }
            for (int p = 0; p < n; ++p) {
                const auto& pair = rows[g][p];
                if (!pair.is_array() || pair.size() != 2) {
                    throw ParseError("lattice file: 'complex_basis' entries must be [re, im]");
                }
                note_kind(pair[0], kind, "'complex_basis'");
                note_kind(pair[1], kind, "'complex_basis'");
                cells[2 * p][g] = pair[0];
                cells[2 * p + 1][g] = pair[1];
            }
        }
    }

    const bool exact = kind == EntryKind::String;
    if (j.contains("mode")) {
        const std::string mode = j["mode"].get<std::string>();
        if (mode != "exact" && mode != "float") {
            throw ParseError("lattice file: 'mode' must be \"exact\" or \"float\"");
        }
        if ((mode == "exact") != exact) {
            throw MixedMode("lattice file: 'mode' is \"" + mode +
                            "\" but the entries are of the other kind");
        }
    }

    ParsedLattice out;
    if (exact) {
        Mat<Rat> m(dim, dim);
        for (int r = 0; r < dim; ++r) {
            for (int c = 0; c < dim; ++c) {
                m(r, c) = rat_from_token(cells[r][c].get<std::string>(),
                                         "basis[" + std::to_string(r + 1) + "][" +
                                             std::to_string(c + 1) + "]");
            }
        }
        out.exact = LatticeBasis<Rat>(n, std::move(m));
    } else {
        Mat<double> m(dim, dim);
        for (int r = 0; r < dim; ++r) {
            for (int c = 0; c < dim; ++c) m(r, c) = cells[r][c].get<double>();
        }
        out.floating = LatticeBasis<double>(n, std::move(m), tol);
    }
    return out;
}

ParsedLattice parse_lattice_file(const std::string& path, double tol) {
    return parse_lattice_json(load_json(path), tol);
}

ordered_json lattice_json(const CatalogLattice& entry) {
    ordered_json j;
    j["name"] = entry.name;
    if (entry.n) {
        j["n"] = *entry.n;
    } else {
        j["n"] = nullptr;
        j["real_dim"] = entry.real_dim();
    }
    j["mode"] = entry.exact() ? "exact" : "float";
    j["basis"] = entry.exact() ? basis_json(*entry.exact_basis) : basis_json(*entry.float_basis);
    if (!entry.notes.empty()) j["notes"] = entry.notes;
    return j;
}

ordered_json derivative_json(const DerivativeReport& report, const ordered_json& alpha_echo) {
    ordered_json j;
    j["alpha"] = alpha_echo;
    j["k"] = report.k;
    j["d_left"] = report.d_left;
    j["d_right"] = report.d_right;
    j["qgram_min"] = report.qgram_min;
    j["qgram_max"] = report.qgram_max;
    j["pass"] = report.pass;
    return j;
}

ParsedAlpha parse_alpha_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("hermitian")) {
        throw ParseError("alpha file: expected { \"n\": int, \"hermitian\": [[...]] }");
    }
    if (!j["n"].is_number_integer()) throw ParseError("alpha file: 'n' must be an integer");
    ParsedAlpha out;
    out.n = j["n"].get<int>();
    if (out.n < 1) throw ParseError("alpha file: 'n' must be >= 1");
    const auto& rows = j["hermitian"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != out.n) {
        throw ParseError("alpha file: 'hermitian' must be an n x n matrix");
    }
    out.hermitian.assign(static_cast<std::size_t>(out.n) * out.n, Complex<Rat>());
    for (int p = 0; p < out.n; ++p) {
        if (!rows[p].is_array() || static_cast<int>(rows[p].size()) != out.n) {
            throw ParseError("alpha file: 'hermitian' row " + std::to_string(p + 1) +
                             " must have n entries");
        }
        for (int q = 0; q < out.n; ++q) {
            const auto& cell = rows[p][q];
            const std::string field =
                "hermitian[" + std::to_string(p + 1) + "][" + std::to_string(q + 1) + "]";
            Complex<Rat> value;
            if (cell.is_string()) {
                value = Complex<Rat>(rat_from_token(cell.get<std::string>(), field));
            } else if (cell.is_array() && cell.size() == 2 && cell[0].is_string() &&
                       cell[1].is_string()) {
                value = Complex<Rat>(rat_from_token(cell[0].get<std::string>(), field),
                                     rat_from_token(cell[1].get<std::string>(), field));
            } else {
                throw ParseError("alpha file: " + field +
                                 " must be a rational string or a pair [re, im] of them");
            }
            out.hermitian[static_cast<std::size_t>(p) * out.n + q] = value;
        }
    }
    out.echo = j["hermitian"];
    return out;
}

ParsedAlpha parse_alpha_file(const std::string& path) {
    return parse_alpha_json(load_json(path));
}

}  // namespace torex
