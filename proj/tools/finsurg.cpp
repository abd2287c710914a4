// finsurg: exact-arithmetic calculator and search driver for finite Dehn
// surgery invariants (correction terms, Dedekind sums, Casson-Walker) and
// the lens-space realizability campaigns.

#include <finsurg/campaigns.hpp>
#include <finsurg/casson_walker.hpp>
#include <finsurg/dedekind.hpp>
#include <finsurg/dinv.hpp>
#include <finsurg/realize.hpp>
#include <finsurg/tables.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

using nlohmann::json;

namespace {

struct Slope {
    long long p = 1;
    long long q = 1;
};

// "p" or "p/q"
Slope parse_slope(const std::string& s) {
    Slope out;
    auto pos = s.find('/');
    try {
        if (pos == std::string::npos) {
            out.p = std::stoll(s);
        } else {
            out.p = std::stoll(s.substr(0, pos));
            out.q = std::stoll(s.substr(pos + 1));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("slope", "expected p or p/q, got '" + s + "'");
    }
    return out;
}

std::string tables_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("FINSURG_TABLES")) return env;
    return "data";
}

json dvector_json(const finsurg::DVector& d) {
    json vals = json::array();
    for (const auto& v : d.values) vals.push_back(v.str());
    return json{{"p", d.p}, {"values", vals}};
}

void print_dvector(const finsurg::DVector& d, bool as_json) {
    if (as_json) {
        std::cout << dvector_json(d).dump(2) << "\n";
        return;
    }
    for (long long i = 0; i < d.p; ++i)
        std::cout << i << ": " << d.values[static_cast<std::size_t>(i)].str() << "\n";
}

json solution_json(const finsurg::RealizabilitySolution& s) {
    json phis = json::array();
    for (const auto& w : s.witnesses) phis.push_back(json{{"a", w.a}, {"b", w.b}});
    return json{{"poly", s.poly.str()},       {"coeffs", s.poly.coeffs()},
                {"torsion", s.t.t},           {"genus", s.genus},
                {"det", s.det},               {"ddelta", s.ddelta},
                {"underdetermined", s.underdetermined}, {"phi", phis}};
}

void print_solutions(const std::vector<finsurg::RealizabilitySolution>& sols, bool as_json) {
    if (as_json) {
        json arr = json::array();
        for (const auto& s : sols) arr.push_back(solution_json(s));
        std::cout << arr.dump(2) << "\n";
        return;
    }
    if (sols.empty()) {
        std::cout << "no solution: Condition 1 fails\n";
        return;
    }
    for (const auto& s : sols) {
        std::cout << "Delta = " << s.poly.str() << "  (g=" << s.genus << ", det=" << s.det
                  << ", ddelta=" << s.ddelta << ")";
        std::cout << "  phi: a=" << s.phi.a << " b=" << s.phi.b;
        if (s.witnesses.size() > 1) std::cout << " (+" << s.witnesses.size() - 1 << " more)";
        if (s.underdetermined) std::cout << "  [underdetermined, minimal completion]";
        std::cout << "\n";
    }
}

// torsion given as comma-separated integers, e.g. "2,1,1"
finsurg::TorsionSeq parse_torsion(const std::string& s) {
    finsurg::TorsionSeq t;
    if (s.empty()) return t;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) t.t.push_back(std::stoll(item));
    return t;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of finite Dehn surgeries"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --json etc. appear after the subcommand
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of plain text");

    // dedekind q p
    long long ded_q = 0, ded_p = 1;
    auto* cmd_ded = app.add_subcommand("dedekind", "Dedekind sum s(q,p)");
    cmd_ded->add_option("q", ded_q, "first argument of s(q,p)")->required();
    cmd_ded->add_option("p", ded_p, "modulus, coprime to q, p >= 1")->required();

    // d-lens p/q
    std::string lens_slope;
    auto* cmd_dlens = app.add_subcommand("d-lens", "correction terms of the lens space L(p,q)");
    cmd_dlens->add_option("slope", lens_slope, "lens parameters as p/q (q defaults to 1)")
        ->required();

    // d-surgery --knot|--torsion slope
    std::string surg_knot, surg_torsion, surg_slope;
    auto* cmd_dsurg =
        app.add_subcommand("d-surgery", "correction terms of p/q-surgery on an L-space knot");
    cmd_dsurg->add_option("--knot", surg_knot,
                          "knot name, e.g. 'T(3 2)', '[11 2;3 2]', 'P(-2 3 7)'");
    cmd_dsurg->add_option("--torsion", surg_torsion, "torsion coefficients, e.g. '2,1,1'");
    cmd_dsurg->add_option("slope", surg_slope, "surgery slope p/q (q defaults to 1)")->required();

    // d-filling desc
    std::string fill_desc;
    auto* cmd_dfill =
        app.add_subcommand("d-filling", "correction terms of a trefoil filling T(a/b) or -T(a/b)");
    cmd_dfill->add_option("filling", fill_desc, "filling descriptor, e.g. 'T(21/4)', '-T(17/2)'")
        ->required();

    // realize --lens p/q | --filling desc, --slope p/q
    std::string rz_lens, rz_fill, rz_slope;
    auto* cmd_rz = app.add_subcommand(
        "realize", "Condition 1 solver: which knots could yield this space by p/q-surgery");
    cmd_rz->add_option("--lens", rz_lens, "target lens space as p/q");
    cmd_rz->add_option("--filling", rz_fill, "target trefoil filling, e.g. 'T(21/4)'");
    cmd_rz->add_option("--slope", rz_slope,
                       "surgery slope p/q; p must equal the target's |H_1| (default: p/1)");

    // lambda-surgery ddelta slope
    long long ls_dd = 0;
    std::string ls_slope;
    auto* cmd_ls = app.add_subcommand("lambda-surgery",
                                      "Casson-Walker invariant of p/q-surgery on a knot");
    cmd_ls->add_option("ddelta", ls_dd, "second derivative of the Alexander polynomial at 1")
        ->required();
    cmd_ls->add_option("slope", ls_slope, "surgery slope p/q (negative p allowed)")->required();

    // lambda-prism n m
    long long lp_n = 2, lp_m = 1;
    auto* cmd_lp =
        app.add_subcommand("lambda-prism", "Casson-Walker invariant of -P(n,m)");
    cmd_lp->add_option("n", lp_n, "prism parameter n > 1")->required();
    cmd_lp->add_option("m", lp_m, "prism parameter m != 0, coprime to n")->required();

    // tables-validate
    std::string tv_dir;
    auto* cmd_tv = app.add_subcommand("tables-validate", "validate the bundled surgery census");
    cmd_tv->add_option("--tables", tv_dir,
                       "census directory (default: $FINSURG_TABLES, then ./data)");

    // campaign <name> ...
    std::string cp_name, cp_dir;
    long long cp_pmax = 222, cp_mmax = 200;
    unsigned cp_threads = 0;
    long long cp_budget = 0;
    auto* cmd_cp = app.add_subcommand("campaign", "run a search campaign");
    cmd_cp
        ->add_option("name", cp_name,
                     "one of: consecutive-lens, distance-two, dtype-neighbors, "
                     "dtype-distance3, prism-det-bound")
        ->required();
    cmd_cp->add_option("--pmax", cp_pmax, "largest p for consecutive-lens (default 222)");
    cmd_cp->add_option("--mmax", cp_mmax, "largest m for prism-det-bound (default 200)");
    cmd_cp->add_option("--threads", cp_threads, "worker threads (default: machine parallelism)");
    cmd_cp->add_option("--budget-ms", cp_budget,
                       "wall-clock budget; exceeding it yields a partial report");
    cmd_cp->add_option("--tables", cp_dir,
                       "census directory (default: $FINSURG_TABLES, then ./data)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_ded) {
            std::cout << finsurg::dedekind_sum(ded_q, ded_p).str() << "\n";
        } else if (*cmd_dlens) {
            Slope s = parse_slope(lens_slope);
            print_dvector(finsurg::d_lens(s.p, s.q), as_json);
        } else if (*cmd_dsurg) {
            Slope s = parse_slope(surg_slope);
            finsurg::TorsionSeq t;
            if (!surg_knot.empty()) {
                auto poly = finsurg::resolve_knot(surg_knot);
                if (!poly) throw std::invalid_argument("unknown knot '" + surg_knot + "'");
                t = finsurg::torsion_coefficients(*poly);
            } else {
                t = parse_torsion(surg_torsion);
            }
            if (!finsurg::genus_slope_ok(t.genus(), s.p, s.q))
                std::cerr << "warning: slope " << s.p << "/" << s.q
                          << " violates p/q >= 2g-1 for genus " << t.genus() << "\n";
            print_dvector(finsurg::d_surgery(t, s.p, s.q), as_json);
        } else if (*cmd_dfill) {
            print_dvector(finsurg::d_filling(finsurg::parse_filling(fill_desc)), as_json);
        } else if (*cmd_rz) {
            finsurg::DVector target;
            if (!rz_lens.empty()) {
                Slope s = parse_slope(rz_lens);
                target = finsurg::d_lens(s.p, s.q);
            } else if (!rz_fill.empty()) {
                target = finsurg::d_filling(finsurg::parse_filling(rz_fill));
            } else {
                throw CLI::ValidationError("realize", "need --lens or --filling");
            }
            long long q = 1;
            if (!rz_slope.empty()) {
                Slope s = parse_slope(rz_slope);
                if (s.p != target.p)
                    throw std::invalid_argument("slope numerator must equal target |H_1| = " +
                                                std::to_string(target.p));
                q = s.q;
            }
            print_solutions(finsurg::check_condition_corr(target, q), as_json);
        } else if (*cmd_ls) {
            Slope s = parse_slope(ls_slope);
            std::cout << finsurg::lambda_surgery(ls_dd, s.p, s.q).str() << "\n";
        } else if (*cmd_lp) {
            std::cout << finsurg::lambda_prism(finsurg::PrismDesc(lp_n, lp_m)).str() << "\n";
        } else if (*cmd_tv) {
            auto rows = finsurg::load_table_dir(tables_dir(tv_dir));
            json arr = json::array();
            int failures = 0;
            for (const auto& row : rows) {
                auto rep = finsurg::validate_row(row);
                if (!rep.ok()) ++failures;
                if (as_json) {
                    json j{{"table", finsurg::table_id_name(row.table_id)},
                           {"slope", std::to_string(row.slope_num) +
                                         (row.slope_den == 2 ? "/2" : "")},
                           {"knot", row.knot_name},
                           {"poly_check", finsurg::check_status_name(rep.poly_check)},
                           {"realize_check", finsurg::check_status_name(rep.realize_check)},
                           {"lspace_check", finsurg::check_status_name(rep.lspace)},
                           {"data_only", rep.data_only},
                           {"ok", rep.ok()}};
                    if (!rep.note.empty()) j["note"] = rep.note;
                    arr.push_back(std::move(j));
                } else {
                    std::cout << finsurg::table_id_name(row.table_id) << " " << row.slope_num
                              << (row.slope_den == 2 ? "/2" : "") << " " << row.knot_name << ": "
                              << (rep.ok() ? (rep.data_only ? "data-only" : "ok") : "FAIL");
                    if (!rep.note.empty()) std::cout << " (" << rep.note << ")";
                    std::cout << "\n";
                }
            }
            if (as_json)
                std::cout << json{{"rows", arr}, {"failures", failures}}.dump(2) << "\n";
            else
                std::cout << rows.size() << " rows, " << failures << " failure(s)\n";
            if (failures > 0) return 1;
        } else if (*cmd_cp) {
            finsurg::CampaignOptions opt;
            opt.threads = cp_threads;
            if (cp_budget > 0) opt.budget_ms = cp_budget;
            finsurg::SweepReport rep;
            if (cp_name == "consecutive-lens") {
                rep = finsurg::sweep_consecutive_lens(cp_pmax, opt);
            } else if (cp_name == "prism-det-bound") {
                rep = finsurg::sweep_prism_det_bound(cp_mmax, opt);
            } else {
                auto rows = finsurg::load_table_dir(tables_dir(cp_dir));
                if (cp_name == "distance-two")
                    rep = finsurg::sweep_distance_two(rows, opt);
                else if (cp_name == "dtype-neighbors")
                    rep = finsurg::sweep_dtype_neighbors(rows, opt);
                else if (cp_name == "dtype-distance3")
                    rep = finsurg::sweep_dtype_distance3(rows, opt);
                else
                    throw CLI::ValidationError("campaign", "unknown campaign '" + cp_name + "'");
            }
            if (as_json)
                std::cout << rep.to_json().dump(2) << "\n";
            else
                std::cout << rep.summary();
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
