#include "torex/report.hpp"

namespace torex {

TorusInput torus_from_catalog(const std::string& spec, double tol) {
    const CatalogLattice entry = catalog_lookup(spec);
    TorusInput out;
    out.label = entry.name;
    out.notes = entry.notes;
    if (entry.kahler_supported()) {
        if (entry.exact()) {
            out.exact = entry.exact_lattice();
        } else {
            out.floating = entry.float_lattice(tol);
        }
    } else {
        if (!entry.exact()) {
            throw ParseError("lattices without a complex structure are only supported with "
                             "exact (rational) entries: " +
                             entry.name);
        }
        out.real_only = *entry.exact_basis;
    }
    return out;
}

TorusInput torus_from_file(const std::string& path, double tol) {
    ParsedLattice parsed = parse_lattice_file(path, tol);
    TorusInput out;
    out.label = path;
    out.exact = std::move(parsed.exact);
    out.floating = std::move(parsed.floating);
    return out;
}

namespace {

/// Merges check output under fixed leading keys, keeping key order stable.
ordered_json check_section(std::initializer_list<std::pair<std::string, ordered_json>> head,
                           const ordered_json& body) {
    ordered_json j;
    for (const auto& [key, value] : head) j[key] = value;
    for (const auto& [key, value] : body.items()) j[key] = value;
    return j;
}

std::string one_line_status(const ordered_json& section) {
    std::string line = section.at("status").get<std::string>();
    if (section.contains("verification") && !section["verification"].contains("error")) {
        line += "; certificate verified (omega scale " +
                section["verification"]["omega_scale"].get<std::string>() + ")";
    }
    if (section.contains("verification") && section["verification"].contains("error")) {
        line += "; CERTIFICATE RE-VERIFICATION FAILED";
    }
    if (section.contains("shortcut")) {
        line += "; shortcut: " + section["shortcut"].get<std::string>();
    }
    if (section.contains("oracle")) {
        line += "; oracle " + section["oracle"].get<std::string>();
    }
    return line;
}

template <class R>
void complex_body(const LatticeBasis<R>& lat, const ReportOptions& opts, ReportResult& res,
                  std::vector<std::string>& lines) {
    const auto dual = dual_basis(lat);
    const auto levels = levels_covering_index(dual, opts.k, opts.levels);
    const LevelIndexInfo info = level_for_index(levels, opts.k);
    const int shown =
        std::min<int>(static_cast<int>(levels.size()), std::max(opts.levels, info.level_index + 1));

    ordered_json larr = ordered_json::array();
    for (int i = 0; i < shown; ++i) {
        larr.push_back(level_json(levels[static_cast<std::size_t>(i)], i + 1));
        lines.push_back("level " + std::to_string(i + 1) + ": lambda = " +
                        levels[static_cast<std::size_t>(i)].lambda().str() + ", l = " +
                        std::to_string(levels[static_cast<std::size_t>(i)].l()) +
                        ", multiplicity " +
                        std::to_string(levels[static_cast<std::size_t>(i)].multiplicity()));
    }
    res.json["levels"] = std::move(larr);

    const auto& target = levels[static_cast<std::size_t>(info.level_index)];
    CheckOutput kc = kahler_check(lat, target, opts.run_oracle);
    res.ambiguous = res.ambiguous || kc.ambiguous();
    res.certificate_failure = res.certificate_failure || kc.certificate_failure;
    res.json["kahler"] = check_section(
        {{"k", opts.k}, {"level_index", info.level_index + 1}}, kc.json);
    lines.push_back("kahler (k = " + std::to_string(opts.k) + ", level " +
                    std::to_string(info.level_index + 1) + "): " +
                    one_line_status(res.json["kahler"]));

    CheckOutput ic = immersion_check(levels[0], lat.real_dim(), lat.tol, opts.run_oracle);
    res.ambiguous = res.ambiguous || ic.ambiguous();
    res.certificate_failure = res.certificate_failure || ic.certificate_failure;
    res.json["immersion"] = check_section({{"level_index", 1}}, ic.json);
    lines.push_back("immersion (level 1): " + one_line_status(res.json["immersion"]));

    if (opts.run_identities) {
        const IdentitySummary summary =
            identity_suite(lat, levels[0], opts.identity_combos, /*seed=*/20260817u);
        ordered_json checks = ordered_json::array();
        int passed = 0;
        for (const auto& c : summary.checks) {
            checks.push_back(ordered_json{{"name", c.name}, {"pass", c.pass}});
            passed += c.pass ? 1 : 0;
        }
        res.json["identities"] =
            ordered_json{{"all_pass", summary.all_pass()}, {"checks", std::move(checks)}};
        lines.push_back("identities: " + std::to_string(passed) + "/" +
                        std::to_string(summary.checks.size()) + " pass");
        res.certificate_failure = res.certificate_failure || !summary.all_pass();
    } else {
        res.json["identities"] = ordered_json{{"skipped", true}};
    }
}

void real_only_body(const Mat<Rat>& basis, const ReportOptions& opts, ReportResult& res,
                    std::vector<std::string>& lines) {
    const Mat<Rat> dual = mat_inverse<Rat>(basis.transpose());
    const auto levels = enumerate_levels_basis<Rat>(dual, 1e-9, std::max(1, opts.levels));

    ordered_json larr = ordered_json::array();
    for (std::size_t i = 0; i < levels.size(); ++i) {
        larr.push_back(level_json(levels[i], static_cast<int>(i) + 1));
        lines.push_back("level " + std::to_string(i + 1) + ": lambda = " +
                        levels[i].lambda().str() + ", l = " + std::to_string(levels[i].l()) +
                        ", multiplicity " + std::to_string(levels[i].multiplicity()));
    }
    res.json["levels"] = std::move(larr);

    res.json["kahler"] =
        ordered_json{{"status", "skipped"}, {"reason", "no Kähler check (odd dimension)"}};
    lines.push_back("kahler: skipped — no Kähler check (odd dimension)");

    CheckOutput ic = immersion_check(levels[0], static_cast<int>(basis.rows()), 1e-9,
                                     opts.run_oracle);
    res.ambiguous = res.ambiguous || ic.ambiguous();
    res.certificate_failure = res.certificate_failure || ic.certificate_failure;
    res.json["immersion"] = check_section({{"level_index", 1}}, ic.json);
    lines.push_back("immersion (level 1): " + one_line_status(res.json["immersion"]));

    res.json["identities"] =
        ordered_json{{"skipped", true}, {"reason", "requires a complex structure"}};
}

}  // namespace

ReportResult emit_report(const TorusInput& torus, const ReportOptions& opts) {
    ReportResult res;
    std::vector<std::string> lines;

    ordered_json lj;
    lj["name"] = torus.label;
    lj["mode"] = torus.exact_mode() ? "exact" : "float";
    if (torus.exact) {
        lj["n"] = torus.exact->n;
        lj["real_dim"] = torus.exact->real_dim();
        lj["volume"] = scalar_json(torus.exact->volume());
        lj["basis"] = basis_json(torus.exact->basis);
    } else if (torus.floating) {
        lj["n"] = torus.floating->n;
        lj["real_dim"] = torus.floating->real_dim();
        lj["volume"] = scalar_json(torus.floating->volume());
        lj["basis"] = basis_json(torus.floating->basis);
    } else {
        Rat det = mat_det<Rat>(*torus.real_only);
        if (det < 0) det = -det;
        lj["n"] = nullptr;
        lj["real_dim"] = static_cast<int>(torus.real_only->rows());
        lj["volume"] = scalar_json(det);
        lj["basis"] = basis_json(*torus.real_only);
    }
    res.json["lattice"] = lj;
    lines.push_back("lattice: " + torus.label + " [" +
                    std::string(torus.exact_mode() ? "exact" : "float") +
                    ", real dim " + lj["real_dim"].dump() + ", volume " +
                    (lj["volume"].is_string() ? lj["volume"].get<std::string>()
                                              : lj["volume"].dump()) +
                    "]");

    if (torus.exact) {
        complex_body(*torus.exact, opts, res, lines);
    } else if (torus.floating) {
        complex_body(*torus.floating, opts, res, lines);
    } else {
        real_only_body(*torus.real_only, opts, res, lines);
    }

    res.json["notes"] = torus.notes;
    if (!torus.notes.empty()) {
        lines.push_back("notes:");
        for (const auto& note : torus.notes) lines.push_back("  - " + note);
    }

    std::string text;
    for (const auto& line : lines) {
        text += line;
        text += '\n';
    }
    res.text = std::move(text);
    return res;
}

ordered_json dual_json(const TorusInput& torus) {
    ordered_json j;
    j["name"] = torus.label;
    j["mode"] = torus.exact_mode() ? "exact" : "float";
    if (torus.exact) {
        j["dual_basis"] = basis_json(dual_basis(*torus.exact).basis);
    } else if (torus.floating) {
        j["dual_basis"] = basis_json(dual_basis(*torus.floating).basis);
    } else {
        j["dual_basis"] = basis_json(Mat<Rat>(mat_inverse<Rat>(torus.real_only->transpose())));
    }
    return j;
}

ordered_json spectrum_json(const TorusInput& torus, int count) {
    ordered_json arr = ordered_json::array();
    const auto append = [&arr](const auto& levels) {
        for (std::size_t i = 0; i < levels.size(); ++i) {
            arr.push_back(level_json(levels[i], static_cast<int>(i) + 1));
        }
    };
    if (torus.exact) {
        append(enumerate_levels(dual_basis(*torus.exact), count));
    } else if (torus.floating) {
        append(enumerate_levels(dual_basis(*torus.floating), count));
    } else {
        append(enumerate_levels_basis<Rat>(mat_inverse<Rat>(torus.real_only->transpose()), 1e-9,
                                           count));
    }
    ordered_json j;
    j["name"] = torus.label;
    j["levels"] = std::move(arr);
    return j;
}

namespace {

template <class R>
CheckOutput kahler_check_impl(const LatticeBasis<R>& lat, int k, bool run_oracle) {
    const auto levels = levels_covering_index(dual_basis(lat), k);
    const LevelIndexInfo info = level_for_index(levels, k);
    CheckOutput out =
        kahler_check(lat, levels[static_cast<std::size_t>(info.level_index)], run_oracle);
    out.json = check_section({{"k", k}, {"level_index", info.level_index + 1}}, out.json);
    return out;
}

}  // namespace

CheckOutput kahler_check_at(const TorusInput& torus, int k, bool run_oracle) {
    if (torus.exact) return kahler_check_impl(*torus.exact, k, run_oracle);
    if (torus.floating) return kahler_check_impl(*torus.floating, k, run_oracle);
    throw DimensionMismatch("no Kähler check (odd dimension)");
}

CheckOutput immersion_check_first(const TorusInput& torus, bool run_oracle) {
    if (torus.exact) {
        const auto levels = enumerate_levels(dual_basis(*torus.exact), 1);
        return immersion_check(levels[0], torus.exact->real_dim(), torus.exact->tol, run_oracle);
    }
    if (torus.floating) {
        const auto levels = enumerate_levels(dual_basis(*torus.floating), 1);
        return immersion_check(levels[0], torus.floating->real_dim(), torus.floating->tol,
                               run_oracle);
    }
    const auto levels =
        enumerate_levels_basis<Rat>(mat_inverse<Rat>(torus.real_only->transpose()), 1e-9, 1);
    return immersion_check(levels[0], static_cast<int>(torus.real_only->rows()), 1e-9,
                           run_oracle);
}

IdentitySummary identity_suite_first(const TorusInput& torus, int combos, unsigned seed) {
    if (torus.exact) {
        const auto levels = enumerate_levels(dual_basis(*torus.exact), 1);
        return identity_suite(*torus.exact, levels[0], combos, seed);
    }
    if (torus.floating) {
        const auto levels = enumerate_levels(dual_basis(*torus.floating), 1);
        return identity_suite(*torus.floating, levels[0], combos, seed);
    }
    throw DimensionMismatch("identity suite requires a complex structure");
}

ordered_json derivative_check_json(const TorusInput& torus, const ParsedAlpha& alpha, int k,
                                   double h) {
    if (torus.exact) {
        const auto d = deformation_from_alpha<Rat>(alpha, torus.exact->volume(),
                                                   torus.exact->tol);
        return derivative_json(derivative_check(*torus.exact, d, k, h), alpha.echo);
    }
    if (torus.floating) {
        const auto d = deformation_from_alpha<double>(alpha, torus.floating->volume(),
                                                      torus.floating->tol);
        return derivative_json(derivative_check(*torus.floating, d, k, h), alpha.echo);
    }
    throw DimensionMismatch("derivative check requires a complex structure");
}

}  // namespace torex
