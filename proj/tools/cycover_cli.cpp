// Command-line front end: compute and verify the Calabi-Yau double-cover
// catalog, group by Hilbert polynomial, run the l=2 exclusion, inspect
// weighted projective spaces, replay the divisor calculus, and emit plot data.
//
// Exit codes: 0 success, 1 verification mismatch, 2 input/parse error,
// 3 internal assertion failure.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cycover/catalog.hpp"
#include "cycover/degeneration.hpp"
#include "cycover/divisors.hpp"
#include "cycover/hilbert.hpp"
#include "cycover/invariants.hpp"
#include "cycover/wps.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;
constexpr int kInternalError = 3;

cycover::TableFormat parse_format(const std::string& fmt) {
    if (fmt == "csv") return cycover::TableFormat::CSV;
    if (fmt == "json") return cycover::TableFormat::JSON;
    if (fmt == "text") return cycover::TableFormat::ALIGNED_TEXT;
    throw std::invalid_argument("unknown format '" + fmt + "'");
}

std::vector<cycover::CatalogEntry> load_entries(const std::string& path,
                                                const std::string& fmt) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open input file '" + path + "'");
    auto table_fmt = parse_format(fmt);
    if (table_fmt == cycover::TableFormat::ALIGNED_TEXT)
        table_fmt = cycover::TableFormat::CSV; // text is output-only
    return cycover::load_fano_table(in, table_fmt);
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot open output file '" + out_path + "'");
    out << content;
    if (!out)
        throw std::invalid_argument("write failed for '" + out_path + "'");
}

int cmd_compute(const std::string& input, const std::string& fmt,
                const std::string& output) {
    auto entries = load_entries(input, fmt);
    write_output(output, cycover::emit_cy_table(entries, parse_format(fmt)));
    for (const auto& e : entries)
        if (e.l2_warning)
            std::cerr << "warning: CY #" << e.cy_number
                      << ": (-K^3, N) admits l=2; H3, c2H, h12 assume l=1\n";
    return kOk;
}

int cmd_verify_table(const std::string& input, const std::string& expected,
                     const std::string& fmt) {
    auto entries = load_entries(input, fmt);
    std::ifstream exp_in(expected);
    if (!exp_in)
        throw std::invalid_argument("cannot open expected file '" + expected + "'");

    // Expected file: CSV with at least cy_number,H3,c2H,e,h11,h12 columns.
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(exp_in, line))
        throw cycover::ParseError(1, "empty expected file");
    ++lineno;
    auto header = cycover::csv::split_line(line, lineno);
    std::map<std::string, std::size_t> col;
    for (std::size_t i = 0; i < header.size(); ++i)
        col[cycover::csv::trim(header[i])] = i;
    for (const char* name : {"cy_number", "H3", "c2H", "e", "h11", "h12"})
        if (!col.count(name))
            throw cycover::ParseError(1, std::string("missing column '") + name + "'");

    struct Expected {
        std::int64_t H3, c2H, e, h11, h12;
    };
    std::map<std::int64_t, Expected> expected_rows;
    while (std::getline(exp_in, line)) {
        ++lineno;
        if (cycover::csv::trim(line).empty())
            continue;
        auto f = cycover::csv::split_line(line, lineno);
        auto get = [&](const char* name) {
            return cycover::detail::parse_int(f.at(col.at(name)), lineno, name);
        };
        expected_rows[get("cy_number")] =
            {get("H3"), get("c2H"), get("e"), get("h11"), get("h12")};
    }

    int mismatches = 0;
    for (const auto& e : entries) {
        auto it = expected_rows.find(e.cy_number);
        if (it == expected_rows.end()) {
            std::cout << "CY #" << e.cy_number << ": missing from expected file\n";
            ++mismatches;
            continue;
        }
        const auto& x = it->second;
        const auto& v = e.invariants;
        auto diff = [&](const char* name, std::int64_t got, std::int64_t want) {
            if (got != want) {
                std::cout << "CY #" << e.cy_number << ": " << name << " computed "
                          << got << " expected " << want << "\n";
                ++mismatches;
            }
        };
        diff("H3", v.H3, x.H3);
        diff("c2H", v.c2H, x.c2H);
        diff("e", v.e, x.e);
        diff("h11", v.h11, x.h11);
        diff("h12", v.h12, x.h12);
    }
    if (expected_rows.size() != entries.size()) {
        std::cout << "row count: computed " << entries.size() << " expected "
                  << expected_rows.size() << "\n";
        ++mismatches;
    }
    if (mismatches) {
        std::cout << mismatches << " mismatch(es)\n";
        return kMismatch;
    }
    std::cout << "all " << entries.size() << " rows match\n";
    return kOk;
}

int cmd_group(const std::string& input, const std::string& fmt) {
    auto entries = load_entries(input, fmt);
    std::vector<std::pair<std::int64_t, cycover::CYInvariants>> records;
    for (const auto& e : entries)
        records.emplace_back(e.cy_number, e.invariants);
    auto groups = cycover::group_by_hilbert(records);
    for (const auto& g : groups) {
        std::cout << "(H3=" << g.H3 << ", c2H=" << g.c2H << "): {";
        for (std::size_t i = 0; i < g.ids.size(); ++i) {
            if (i) std::cout << ", ";
            std::cout << "#" << g.ids[i];
        }
        std::cout << "}\n";
    }
    return kOk;
}

int cmd_exclude_l2(const std::string& input, const std::string& fmt) {
    auto entries = load_entries(input, fmt);
    int ambiguous = 0;
    for (const auto& e : entries) {
        auto verdict = cycover::exclude_l2(e.record);
        bool amb = verdict.verdict == cycover::L2Verdict::Kind::Ambiguous;
        std::cout << "CY #" << e.cy_number << " (-K^3=" << e.record.minus_K3.str()
                  << ", N=" << e.record.N << "): "
                  << (amb ? "Ambiguous" : "ForcedL1") << "\n";
        if (amb)
            ++ambiguous;
    }
    if (ambiguous) {
        std::cout << ambiguous << " ambiguous record(s)\n";
        return kMismatch;
    }
    return kOk;
}

int cmd_wps(const std::string& weights_arg, std::int64_t branch_degree,
            bool have_degree) {
    std::vector<std::int64_t> weights;
    std::stringstream ss(weights_arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t pos = 0;
            weights.push_back(std::stoll(tok, &pos));
            if (pos != tok.size())
                throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad weight '" + tok + "'");
        }
    }
    cycover::WeightedProjectiveSpace P(weights);
    bool wf = cycover::well_formed(P);
    std::cout << "P(" << weights_arg << "): "
              << (wf ? "well-formed" : "not well-formed") << "\n";
    if (!wf)
        return kMismatch;

    for (const auto& pt : cycover::coordinate_singularities(P)) {
        std::cout << "  coordinate point " << pt.index << ": ";
        if (pt.singularity)
            std::cout << pt.singularity->str()
                      << (cycover::is_half_one_type(*pt.singularity)
                              ? "  [1/2(1^[n]) type]"
                              : "")
                      << "\n";
        else
            std::cout << "smooth\n";
    }

    if (have_degree) {
        cycover::HypersurfaceSpec h(P, branch_degree);
        std::cout << "adjunction degree (degree - sum of weights): "
                  << cycover::adjunction_degree(h) << "\n";
        auto rep = cycover::double_cover_check(P, branch_degree);
        std::cout << "branch degree " << branch_degree
                  << (rep.branch_degree_matches ? " = " : " != ")
                  << "2 * sum(weights) = " << 2 * P.weight_sum() << "\n";
        std::cout << "double cover verdict: " << (rep.verdict ? "true" : "false")
                  << "\n";
        if (!rep.verdict)
            return kMismatch;
    }
    return kOk;
}

int cmd_cover_calculus(std::int64_t dim) {
    using cycover::Rational;
    auto ky = cycover::blowup_canonical(dim);
    auto d = cycover::branch_bundle(dim);
    auto two_d = Rational(2) * d;
    auto kx = cycover::cover_canonical(dim);
    auto gkx = cycover::contracted_canonical(dim);
    auto ff = cycover::f_normal_class(dim);

    std::cout << "n = " << dim << " (m = " << (dim - 1) / 2 << ")\n";
    std::cout << "K_Ytilde = " << ky.str() << "\n";
    std::cout << "D = -K_Ytilde + mE = " << d.str() << "\n";
    std::cout << "2D = " << two_d.str() << "   (= f*(-2K_Y) + E)\n";
    std::cout << "K_Xtilde = pi~*(K_Ytilde + D) = " << kx.str() << "\n";
    std::cout << "g*K_X = K_Xtilde - (n-1)F = " << gkx.str() << "\n";
    std::cout << "F|_F = " << ff.str() << "\n";
    bool ok = gkx.is_zero() &&
              two_d == cycover::tilde_y_expr(Rational(-2), Rational(1)) &&
              kx.coefficient("F") == Rational(dim - 1) &&
              ff.coefficient("H") == Rational(-1);
    std::cout << (ok ? "all identities hold\n" : "IDENTITY FAILURE\n");
    return ok ? kOk : kMismatch;
}

int cmd_plot(const std::string& input, const std::string& fmt,
             const std::string& output, const std::string& background,
             bool svg) {
    auto entries = load_entries(input, fmt);
    auto points = cycover::plot_points(entries);
    std::vector<cycover::PlotPoint> bg;
    if (!background.empty()) {
        std::ifstream bg_in(background);
        if (!bg_in)
            throw std::invalid_argument("cannot open background file '" + background + "'");
        bg = cycover::load_background_points(bg_in);
    }
    bool as_svg = svg || (output.size() >= 4 &&
                          output.compare(output.size() - 4, 4, ".svg") == 0);
    write_output(output, as_svg ? cycover::render_plot_svg(points, bg)
                                : cycover::emit_plot_tsv(points));
    return kOk;
}

int cmd_degeneration(std::int64_t h2, std::int64_t k, std::int64_t m) {
    auto t = cycover::semistable_bookkeeping(h2, k, m);
    std::cout << "m = " << t.m << ", h2(Y) = " << t.h2_Y << ", k = " << t.k << "\n";
    std::cout << "central fiber components r = " << t.r_components << "\n";
    std::cout << "h2(W0') = 2h2(Y) + m + 1 - k = " << t.h2_W0_prime << "\n";
    std::cout << "h2(W0)  = " << t.h2_W0 << "\n";
    std::cout << "h2(Wt)  = h2(W0) - m - 1 = " << t.h2_Wt << "\n";
    std::cout << "h11(X)  = 2h2(Y) - k = "
              << cycover::h11_from_degeneration(h2, k) << "\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Calabi-Yau double covers of Q-Fano 3-folds with 1/2(1,1,1) "
                 "points: invariant catalog and verification tools"};
    app.require_subcommand(1);

    std::string input, output, expected, background, weights;
    std::string format = "csv";
    std::int64_t dim = 3, branch_degree = 0, h2 = 1, k = 1, m = 1;
    bool svg = false;

    auto add_io = [&](CLI::App* cmd, bool need_input = true) {
        auto* opt = cmd->add_option("--input,-i", input, "input Fano table");
        if (need_input)
            opt->required();
        cmd->add_option("--format,-f", format, "table format: csv, json, text")
            ->check(CLI::IsMember({"csv", "json", "text"}));
        cmd->add_option("--output,-o", output, "output file (default stdout)");
    };

    auto* compute = app.add_subcommand("compute", "compute the Calabi-Yau table");
    add_io(compute);

    auto* verify = app.add_subcommand("verify-table",
                                      "diff computed invariants against a golden table");
    add_io(verify);
    verify->add_option("--expected,-e", expected, "expected golden CSV")->required();

    auto* group = app.add_subcommand("group", "group records by Hilbert polynomial");
    add_io(group);

    auto* excl = app.add_subcommand("exclude-l2", "run the l=2 integrality exclusion");
    add_io(excl);

    auto* wps = app.add_subcommand("wps", "weighted projective space report");
    wps->add_option("--weights,-w", weights, "comma-separated weights")->required();
    auto* deg_opt = wps->add_option("--branch-degree,-d", branch_degree,
                                    "branch divisor degree for the double-cover check");

    auto* cover = app.add_subcommand("cover-calculus",
                                     "replay the divisor-class derivation");
    cover->add_option("--dim,-n", dim, "odd dimension >= 3")->required();

    auto* plot = app.add_subcommand("plot", "emit scatter data (e, h11+h12)");
    add_io(plot);
    plot->add_option("--background,-b", background,
                     "optional two-column background point file");
    plot->add_flag("--svg", svg, "render SVG instead of TSV");

    auto* degen = app.add_subcommand("degeneration",
                                     "semistable degeneration bookkeeping");
    degen->add_option("--h2", h2, "h2(Y)")->required();
    degen->add_option("--k", k, "dim im(H2(Y) -> H2(D))")->required();
    degen->add_option("--m", m, "#Sing(Y)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        if (compute->parsed())
            return cmd_compute(input, format, output);
        if (verify->parsed())
            return cmd_verify_table(input, expected, format);
        if (group->parsed())
            return cmd_group(input, format);
        if (excl->parsed())
            return cmd_exclude_l2(input, format);
        if (wps->parsed())
            return cmd_wps(weights, branch_degree, deg_opt->count() > 0);
        if (cover->parsed())
            return cmd_cover_calculus(dim);
        if (plot->parsed())
            return cmd_plot(input, format, output, background, svg);
        if (degen->parsed())
            return cmd_degeneration(h2, k, m);
    } catch (const cycover::ParseError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kInputError;
    } catch (const std::domain_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kInputError;
    } catch (const std::logic_error& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return kInternalError;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return kInternalError;
    }
    return kInternalError;
}
