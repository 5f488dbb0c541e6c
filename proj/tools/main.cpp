// Command-line front end: one verb per computation, exact rational output,
// JSON or CSV reports. Exit codes: 0 = pass, 1 = a check failed (witness in
// the report), 2 = usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lgenus/charclass.hpp"
#include "lgenus/hodge.hpp"
#include "lgenus/io.hpp"
#include "lgenus/scan.hpp"
#include "lgenus/singularities.hpp"

namespace {

using namespace lgenus;

struct OutputOptions {
    std::string format = "json";
    std::string out;
    bool verbose = false;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out, "Write the report to this file instead of stdout");
    cmd->add_flag("--verbose", opts.verbose, "Progress output on stderr");
}

int emit(const Report& rep, const OutputOptions& opts) {
    std::string text = (opts.format == "csv") ? rep.to_csv() : rep.to_json_string();
    if (!opts.out.empty()) {
        std::ofstream f(opts.out, std::ios::binary);
        if (!f) throw invalid_input("cannot open output file: " + opts.out);
        f << text;
    } else {
        std::cout << text;
    }
    if (rep.status == "fail") return 1;
    if (rep.status == "error") return 2;
    return 0;
}

std::vector<long> parse_long_list(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            long v = std::stol(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw invalid_input("not an integer list: '" + s + "'");
        }
    }
    if (out.empty()) throw invalid_input("empty integer list");
    return out;
}

std::pair<long, long> parse_range(const std::string& s) {
    std::size_t colon = s.find(':');
    try {
        if (colon == std::string::npos) {
            long v = std::stol(s);
            return {v, v};
        }
        return {std::stol(s.substr(0, colon)), std::stol(s.substr(colon + 1))};
    } catch (const std::exception&) {
        throw invalid_input("not a range (lo:hi or single value): '" + s + "'");
    }
}

SpectralPairSet resolve_spectrum(const std::string& exponents, const std::string& file) {
    if (!exponents.empty() && !file.empty())
        throw invalid_input("give exponents or a pair file, not both");
    if (!exponents.empty()) return bp_spectral_pairs(BPSpec{parse_long_list(exponents)});
    if (!file.empty()) return read_spectral_pairs_file(file);
    throw invalid_input("a spectrum is required (--a or --file)");
}

Json spectrum_rows(const SpectralPairSet& sp) {
    Json rows = Json::array();
    for (const auto& e : sp.entries()) {
        Json r;
        r["alpha"] = e.alpha.to_string();
        r["weight"] = e.weight;
        r["mult"] = e.mult;
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_pairs_file(const SpectralPairSet& sp, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw invalid_input("cannot open output file: " + path);
    f << to_json(sp).dump(2) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact L-class and signature computations for projective spaces, "
                 "complete intersections, and singular hypersurfaces"};
    app.require_subcommand(1);

    OutputOptions opts;
    std::function<Report()> action;

    // hseries
    {
        auto* cmd = app.add_subcommand("hseries", "Series expansion of sqrt(z)/tanh(sqrt(z))");
        auto order = std::make_shared<unsigned>(12);
        cmd->add_option("--order", *order, "Truncation order")->capture_default_str();
        add_output_options(cmd, opts);
        cmd->callback([&action, order]() {
            action = [order]() {
                Report rep;
                rep.command = "hseries";
                rep.inputs["order"] = *order;
                QSeries h = hirzebruch_series(*order);
                for (unsigned k = 0; k <= h.order(); ++k) {
                    Json row;
                    row["k"] = k;
                    row["coefficient"] = h.coeff(k).to_string();
                    rep.results.push_back(std::move(row));
                }
                return rep;
            };
        });
    }

    // lpn
    {
        auto* cmd = app.add_subcommand("lpn", "L-class of the projective space P^n");
        auto n = std::make_shared<unsigned>(0);
        cmd->add_option("--n", *n, "Dimension of the projective space")->required();
        add_output_options(cmd, opts);
        cmd->callback([&action, n]() {
            action = [n]() {
                Report rep;
                rep.command = "lpn";
                rep.inputs["n"] = *n;
                LClassVector l = lclass_pn(*n);
                for (unsigned j = 0; j < l.values.size(); ++j) {
                    Json row;
                    row["j"] = j;
                    row["coefficient"] = l.values[j].to_string();
                    rep.results.push_back(std::move(row));
                }
                return rep;
            };
        });
    }

    // lci
    {
        auto* cmd = app.add_subcommand(
            "lci", "L-class of a smooth complete intersection of dimension 2m");
        auto m = std::make_shared<unsigned>(0);
        auto degrees = std::make_shared<std::string>();
        cmd->add_option("--m", *m, "Half-dimension")->required();
        cmd->add_option("--d", *degrees, "Comma-separated multidegree d1,d2,...");
        add_output_options(cmd, opts);
        cmd->callback([&action, m, degrees]() {
            action = [m, degrees]() {
                CompleteIntersectionSpec spec{*m, degrees->empty() ? std::vector<long>{}
                                                                   : parse_long_list(*degrees)};
                Report rep;
                rep.command = "lci";
                rep.inputs["m"] = *m;
                rep.inputs["degrees"] = spec.degrees;
                LClassVector l = lclass_ci(spec);
                for (unsigned j = 0; j < l.values.size(); ++j) {
                    Json row;
                    row["j"] = j;
                    row["coefficient"] = l.values[j].to_string();
                    rep.results.push_back(std::move(row));
                }
                return rep;
            };
        });
    }

    // sig
    {
        auto* cmd = app.add_subcommand("sig", "Signature of a smooth complete intersection");
        auto m = std::make_shared<unsigned>(0);
        auto degrees = std::make_shared<std::string>();
        cmd->add_option("--m", *m, "Half-dimension")->required();
        cmd->add_option("--d", *degrees, "Comma-separated multidegree d1,d2,...");
        add_output_options(cmd, opts);
        cmd->callback([&action, m, degrees]() {
            action = [m, degrees]() {
                CompleteIntersectionSpec spec{*m, degrees->empty() ? std::vector<long>{}
                                                                   : parse_long_list(*degrees)};
                Report rep;
                rep.command = "sig";
                rep.inputs["m"] = *m;
                rep.inputs["degrees"] = spec.degrees;
                Json row;
                row["m"] = *m;
                row["degrees"] = degrees->empty() ? "" : *degrees;
                row["signature"] = signature_ci(spec).to_string();
                rep.results.push_back(std::move(row));
                return rep;
            };
        });
    }

    // sigpoly
    {
        auto* cmd = app.add_subcommand(
            "sigpoly", "Signature of a dimension-2m complete intersection as an exact "
                       "polynomial in the degrees d1..dr");
        auto m = std::make_shared<unsigned>(0);
        auto r = std::make_shared<unsigned>(1);
        cmd->add_option("--m", *m, "Half-dimension")->required();
        cmd->add_option("--r", *r, "Number of degree symbols")->capture_default_str();
        add_output_options(cmd, opts);
        cmd->callback([&action, m, r]() {
            action = [m, r]() {
                Report rep;
                rep.command = "sigpoly";
                rep.inputs["m"] = *m;
                rep.inputs["r"] = *r;
                DegreePoly p = signature_poly(*m, *r);
                Json row;
                row["m"] = *m;
                row["r"] = *r;
                row["polynomial"] = p.to_string();
                rep.results.push_back(std::move(row));
                rep.results.back()["terms"] = to_json(p)["terms"];
                return rep;
            };
        });
    }

    // hodge
    {
        auto* cmd = app.add_subcommand(
            "hodge", "Primitive Hodge numbers of a smooth hypersurface (Fermat Jacobian "
                     "ring count) and, in even dimension, the Hodge index signature");
        auto n = std::make_shared<unsigned>(0);
        auto d = std::make_shared<long>(1);
        cmd->add_option("--n", *n, "Hypersurface dimension")->required();
        cmd->add_option("--d", *d, "Degree")->required();
        add_output_options(cmd, opts);
        cmd->callback([&action, n, d]() {
            action = [n, d]() {
                Report rep;
                rep.command = "hodge";
                rep.inputs["n"] = *n;
                rep.inputs["d"] = *d;
                HodgeNumbers h = hodge_numbers_hypersurface(*n, *d);
                for (unsigned q = 0; q <= *n; ++q) {
                    Json row;
                    row["q"] = q;
                    row["h"] = h.primitive[q].get_str();
                    rep.results.push_back(std::move(row));
                }
                if (*n % 2 == 0 && *n >= 2) {
                    Json row;
                    row["q"] = "sigma";
                    row["h"] = signature_hodge_index(*n / 2, *d).get_str();
                    rep.results.push_back(std::move(row));
                }
                return rep;
            };
        });
    }

    // genfun
    {
        auto* cmd = app.add_subcommand(
            "genfun", "Signature of a smooth dimension-2m hypersurface via the "
                      "generating-function identity");
        auto m = std::make_shared<unsigned>(1);
        auto d = std::make_shared<long>(1);
        cmd->add_option("--m", *m, "Half-dimension")->required();
        cmd->add_option("--d", *d, "Degree")->required();
        add_output_options(cmd, opts);
        cmd->callback([&action, m, d]() {
            action = [m, d]() {
                Report rep;
                rep.command = "genfun";
                rep.inputs["m"] = *m;
                rep.inputs["d"] = *d;
                Json row;
                row["m"] = *m;
                row["d"] = *d;
                row["signature"] = signature_genfun(*m, *d).get_str();
                rep.results.push_back(std::move(row));
                return rep;
            };
        });
    }

    // spectrum
    {
        auto* cmd = app.add_subcommand(
            "spectrum", "Spectral pairs of a Brieskorn-Pham germ x1^a1 + ... + x_{n+1}^a_{n+1}");
        auto exps = std::make_shared<std::string>();
        auto pairs_out = std::make_shared<std::string>();
        cmd->add_option("--a", *exps, "Comma-separated exponents, all >= 2")->required();
        cmd->add_option("--pairs-out", *pairs_out,
                        "Also write the bare spectral-pair file to this path");
        add_output_options(cmd, opts);
        cmd->callback([&action, exps, pairs_out]() {
            action = [exps, pairs_out]() {
                SpectralPairSet sp = bp_spectral_pairs(BPSpec{parse_long_list(*exps)});
                Report rep;
                rep.command = "spectrum";
                rep.inputs["exponents"] = parse_long_list(*exps);
                rep.inputs["n"] = sp.n();
                rep.inputs["mu"] = sp.total_multiplicity();
                rep.results = spectrum_rows(sp);
                if (!pairs_out->empty()) write_pairs_file(sp, *pairs_out);
                return rep;
            };
        });
    }

    // join
    {
        auto* cmd = app.add_subcommand(
            "join", "Thom-Sebastiani join of two quasi-homogeneous spectra");
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        auto a_file = std::make_shared<std::string>();
        auto b_file = std::make_shared<std::string>();
        auto pairs_out = std::make_shared<std::string>();
        cmd->add_option("--a", *a, "First germ: Brieskorn-Pham exponents");
        cmd->add_option("--b", *b, "Second germ: Brieskorn-Pham exponents");
        cmd->add_option("--a-file", *a_file, "First germ: spectral-pair file");
        cmd->add_option("--b-file", *b_file, "Second germ: spectral-pair file");
        cmd->add_option("--pairs-out", *pairs_out,
                        "Also write the bare spectral-pair file to this path");
        add_output_options(cmd, opts);
        cmd->callback([&action, a, b, a_file, b_file, pairs_out]() {
            action = [a, b, a_file, b_file, pairs_out]() {
                SpectralPairSet sa = resolve_spectrum(*a, *a_file);
                SpectralPairSet sb = resolve_spectrum(*b, *b_file);
                SpectralPairSet sp = ts_join(sa, sb);
                Report rep;
                rep.command = "join";
                rep.inputs["a"] = to_json(sa);
                rep.inputs["b"] = to_json(sb);
                rep.inputs["n"] = sp.n();
                rep.results = spectrum_rows(sp);
                if (!pairs_out->empty()) write_pairs_file(sp, *pairs_out);
                return rep;
            };
        });
    }

    // sigmas
    {
        auto* cmd = app.add_subcommand(
            "sigmas", "Hodge signatures of the N-primitive weight-graded vanishing "
                      "cohomology, per weight and eigenvalue sector");
        auto exps = std::make_shared<std::string>();
        auto file = std::make_shared<std::string>();
        cmd->add_option("--a", *exps, "Brieskorn-Pham exponents");
        cmd->add_option("--file", *file, "Spectral-pair file");
        add_output_options(cmd, opts);
        cmd->callback([&action, exps, file]() {
            action = [exps, file]() {
                SpectralPairSet sp = resolve_spectrum(*exps, *file);
                SectorTable t = sector_table(sp);
                Report rep;
                rep.command = "sigmas";
                rep.inputs["spectrum"] = to_json(sp);
                for (const auto& [j, s] : sigma_table(t)) {
                    Json row;
                    row["j"] = j;
                    row["sigma_unipotent"] = s.unipotent;
                    row["sigma_nonunipotent"] = s.nonunipotent;
                    rep.results.push_back(std::move(row));
                }
                return rep;
            };
        });
    }

    // sigmatilde
    {
        auto* cmd = app.add_subcommand(
            "sigmatilde", "Reduced Hodge signature of the intersection-complex stalk at "
                          "an isolated hypersurface singularity");
        auto exps = std::make_shared<std::string>();
        auto file = std::make_shared<std::string>();
        cmd->add_option("--a", *exps, "Brieskorn-Pham exponents");
        cmd->add_option("--file", *file, "Spectral-pair file");
        add_output_options(cmd, opts);
        cmd->callback([&action, exps, file]() {
            action = [exps, file]() {
                SpectralPairSet sp = resolve_spectrum(*exps, *file);
                Report rep;
                rep.command = "sigmatilde";
                rep.inputs["spectrum"] = to_json(sp);
                Json row;
                row["n"] = sp.n();
                row["sigma_tilde"] = sigma_tilde(sector_table(sp));
                rep.results.push_back(std::move(row));
                return rep;
            };
        });
    }

    // t3
    {
        auto* cmd = app.add_subcommand(
            "t3", "Degree-0 comparison of the smooth, constant-coefficient, and "
                  "intersection-complex L-classes of a singular hypersurface in P^{n+1}. "
                  "Whether a degree-d hypersurface with the prescribed singularities "
                  "exists is not checked.");
        auto n = std::make_shared<unsigned>(0);
        auto d = std::make_shared<long>(1);
        auto sing = std::make_shared<std::vector<std::string>>();
        auto sing_files = std::make_shared<std::vector<std::string>>();
        cmd->add_option("--n", *n, "Hypersurface dimension")->required();
        cmd->add_option("--d", *d, "Degree")->required();
        cmd->add_option("--sing", *sing,
                        "Isolated singular point as Brieskorn-Pham exponents (repeatable)");
        cmd->add_option("--sing-file", *sing_files, "Spectral-pair file (repeatable)");
        add_output_options(cmd, opts);
        cmd->callback([&action, n, d, sing, sing_files]() {
            action = [n, d, sing, sing_files]() {
                std::vector<SpectralPairSet> sets;
                for (const std::string& s : *sing)
                    sets.push_back(bp_spectral_pairs(BPSpec{parse_long_list(s)}));
                for (const std::string& f : *sing_files)
                    sets.push_back(read_spectral_pairs_file(f));
                LClassComparison cmp = compare_hypersurface_lclasses(*n, *d, sets);
                Report rep;
                rep.command = "t3";
                rep.inputs["n"] = *n;
                rep.inputs["d"] = *d;
                rep.inputs["singularities"] = static_cast<long>(sets.size());
                auto row = [&rep](const std::string& q, const std::string& v) {
                    Json r;
                    r["quantity"] = q;
                    r["value"] = v;
                    rep.results.push_back(std::move(r));
                };
                row("L0_smooth", cmp.smooth_l0.to_string());
                row("L0_constant", cmp.constant_l0.to_string());
                row("L0_intersection", cmp.intersection_l0.to_string());
                row("constant_minus_intersection",
                    std::to_string(cmp.constant_minus_intersection));
                row("smooth_minus_constant", std::to_string(cmp.smooth_minus_constant));
                row("smooth_minus_intersection", std::to_string(cmp.smooth_minus_intersection));
                for (const auto& [j, v] : cmp.upper_classes)
                    row("L" + std::to_string(j), v.to_string());
                return rep;
            };
        });
    }

    // scan
    {
        auto* cmd = app.add_subcommand(
            "scan", "Evaluate a check over a parameter grid, in parallel, with optional "
                    "checkpoint/resume");
        auto mode = std::make_shared<std::string>();
        auto m_range = std::make_shared<std::string>();
        auto d_range = std::make_shared<std::string>();
        auto e_range = std::make_shared<std::string>();
        auto threads = std::make_shared<unsigned>(0);
        auto checkpoint = std::make_shared<std::string>();
        cmd->add_option("--mode", *mode, "conjecture27 | conjecture211 | oracle-agreement")
            ->required();
        cmd->add_option("--m", *m_range, "m range, lo:hi or single value")->required();
        cmd->add_option("--d", *d_range, "first degree range");
        cmd->add_option("--e", *e_range, "second degree range");
        cmd->add_option("--threads", *threads,
                        "Worker threads (default: available parallelism)");
        cmd->add_option("--checkpoint", *checkpoint, "Append-only checkpoint file");
        add_output_options(cmd, opts);
        cmd->callback([&action, &opts, mode, m_range, d_range, e_range, threads, checkpoint]() {
            action = [&opts, mode, m_range, d_range, e_range, threads, checkpoint]() {
                ScanGrid grid;
                grid.mode = scan_mode_from_string(*mode);
                auto [mlo, mhi] = parse_range(*m_range);
                if (mlo < 0) throw invalid_input("m must be nonnegative");
                grid.m_range = {static_cast<unsigned>(mlo), static_cast<unsigned>(mhi)};
                if (!d_range->empty()) grid.degree_ranges.push_back(parse_range(*d_range));
                if (!e_range->empty()) {
                    if (d_range->empty()) throw invalid_input("--e requires --d");
                    grid.degree_ranges.push_back(parse_range(*e_range));
                }
                ScanOutcome outcome =
                    run_scan(grid, *threads, *checkpoint, opts.verbose ? &std::cerr : nullptr);
                Report rep;
                rep.command = "scan";
                rep.inputs["mode"] = *mode;
                rep.inputs["m"] = *m_range;
                if (!d_range->empty()) rep.inputs["d"] = *d_range;
                if (!e_range->empty()) rep.inputs["e"] = *e_range;
                rep.results = to_json(outcome);
                for (const auto& c : outcome.cells)
                    if (!c.pass) rep.failures.push_back(c.witness);
                rep.status = outcome.all_pass ? "pass" : "fail";
                return rep;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return emit(action(), opts);
    } catch (const internal_inconsistency& e) {
        Report rep;
        rep.command = app.get_subcommands().front()->get_name();
        rep.status = "fail";
        Json f;
        f["error"] = e.what();
        rep.failures.push_back(std::move(f));
        std::cout << rep.to_json_string();
        return 1;
    } catch (const std::exception& e) {
        Report rep;
        rep.command = app.get_subcommands().front()->get_name();
        rep.status = "error";
        Json f;
        f["error"] = e.what();
        rep.failures.push_back(std::move(f));
        std::cout << rep.to_json_string();
        return 2;
    }
}
