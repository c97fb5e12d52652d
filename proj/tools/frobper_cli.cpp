#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "frobper/json_io.hpp"
#include "frobper/periodicity.hpp"

using namespace frobper;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

struct RunConfig {
    int d = 3;
    std::int64_t p = 5;
    int e_max = 1;
    int twist = 0;
    std::vector<int> gens;
    std::vector<int> window;
    std::string forms;
    std::string format = "json";
    std::string out;
    bool exploratory = false;
    bool exhaustive = false;
    bool skip_crosscheck = false;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw UsageError("cannot open output file " + cfg.out);
    f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_format(const RunConfig& cfg, bool csv_allowed) {
    if (cfg.format == "csv" && !csv_allowed) throw UsageError("csv output is only available for hk");
}

CurveRing make_ring(const RunConfig& cfg) {
    if (cfg.d < 2) throw UsageError("d must be at least 2");
    return CurveRing(Prime(cfg.p), cfg.d);
}

std::array<int, 3> exponent_triple(const RunConfig& cfg) {
    if (cfg.gens.size() != 3) throw UsageError("--gens needs three exponents a,b,c");
    for (int a : cfg.gens)
        if (a < 1) throw UsageError("exponents must be at least 1");
    return {cfg.gens[0], cfg.gens[1], cfg.gens[2]};
}

std::optional<std::pair<int, int>> window_of(const RunConfig& cfg) {
    if (cfg.window.empty()) return std::nullopt;
    if (cfg.window.size() != 2 || cfg.window[0] > cfg.window[1]) throw UsageError("--window needs lo,hi with lo <= hi");
    return std::pair{cfg.window[0], cfg.window[1]};
}

std::string window_text(const WindowResult& w) {
    std::ostringstream s;
    s << "m lhs rhs\n";
    for (const auto& r : w.rows) s << r.m << ' ' << r.lhs << ' ' << r.rhs << '\n';
    s << "window " << (w.ok ? "equal" : "MISMATCH") << '\n';
    return s.str();
}

int cmd_hk(const RunConfig& cfg) {
    require_format(cfg, true);
    if (cfg.e_max < 1 || cfg.e_max > 6) throw UsageError("--e-max must be in 1..6");
    const CurveRing ring = make_ring(cfg);
    const HKSummary s = strong_semistability_verdict(ring, cfg.e_max);

    bool star_ok = true;
    if (!cfg.skip_crosscheck)
        for (const auto& r : s.records)
            for (std::size_t m = 0; m < r.profile.size(); ++m) {
                const auto c = star_identity(ring, r.q, static_cast<int>(m));
                if (!c.holds || c.colength != r.profile[m]) {
                    std::cerr << "identity check failed at q=" << r.q << " m=" << m << '\n';
                    star_ok = false;
                }
            }

    if (cfg.format == "csv") {
        emit(cfg, hk_csv(s));
    } else if (cfg.format == "text") {
        std::ostringstream t;
        t << "d=" << s.d << " p=" << s.p << " verdict=" << to_string(s.verdict) << '\n';
        for (std::size_t i = 0; i < s.records.size(); ++i) {
            const auto& r = s.records[i];
            t << "e=" << r.e << " q=" << r.q << " phi=" << r.total << " phi/q^2=" << rational_string(s.ehk_estimates[i]);
            if (s.formula[i]) t << " formula=" << rational_string(*s.formula[i]);
            t << '\n';
        }
        emit(cfg, t.str());
    } else {
        Json j = to_json(s);
        j["identity_crosscheck"] = cfg.skip_crosscheck ? Json(nullptr) : Json(star_ok);
        emit(cfg, dump(j));
    }
    return star_ok ? exit_ok : exit_check_failed;
}

int cmd_syzygy(const RunConfig& cfg) {
    require_format(cfg, false);
    const CurveRing ring = make_ring(cfg);
    const auto [a, b, c] = exponent_triple(cfg);
    const GeneratorList gens = GeneratorList::monomial_powers(ring, a, b, c);
    const SyzygySpace s = syzygy_basis(gens, cfg.twist);
    for (const auto& t : s.basis)
        if (!is_syzygy(gens, t)) return exit_check_failed;
    if (cfg.format == "text") {
        std::ostringstream t;
        t << "dim " << s.dim() << '\n';
        emit(cfg, t.str());
    } else {
        const int degs[3] = {a, b, c};
        Json j = to_json(s);
        j["bundle_degree"] = bundle_degree(cfg.d, degs, cfg.twist);
        emit(cfg, dump(j));
    }
    return exit_ok;
}

std::vector<BinaryForm> parse_forms(const RunConfig& cfg) {
    const Prime p(cfg.p);
    std::vector<BinaryForm> out;
    std::stringstream all(cfg.forms);
    std::string one;
    while (std::getline(all, one, ';')) {
        std::vector<std::int64_t> coeffs;
        std::stringstream cs(one);
        std::string tok;
        while (std::getline(cs, tok, ',')) {
            try {
                coeffs.push_back(std::stoll(tok));
            } catch (const std::exception&) {
                throw UsageError("bad coefficient '" + tok + "'");
            }
        }
        if (coeffs.empty()) throw UsageError("empty form");
        out.emplace_back(p, coeffs);
    }
    if (out.size() != 3) throw UsageError("--forms needs three coefficient lists separated by ';'");
    return out;
}

int cmd_splitting(const RunConfig& cfg) {
    require_format(cfg, false);
    const std::vector<BinaryForm> forms = parse_forms(cfg);
    const SplittingType t = splitting_type_p1(forms);
    if (cfg.format == "text") {
        emit(cfg, "O(-" + std::to_string(t.a) + ") + O(-" + std::to_string(t.b) + ")\n");
    } else {
        Json fs = Json::array();
        for (const auto& f : forms) fs.push_back(to_json(f));
        emit(cfg, dump({{"forms", fs}, {"splitting", to_json(t)}}));
    }
    return exit_ok;
}

int cmd_witness(const RunConfig& cfg) {
    require_format(cfg, false);
    const CurveRing ring = make_ring(cfg);
    const auto [a, b, c] = exponent_triple(cfg);
    const auto w = window_of(cfg).value_or(std::pair{0, a + b + c});
    const auto found = instability_witness(GeneratorList::monomial_powers(ring, a, b, c), w.first, w.second);
    if (cfg.format == "text") {
        emit(cfg, found ? "witness at m=" + std::to_string(found->m) + " degree " + std::to_string(found->degree) + "\n"
                        : std::string("no witness found\n"));
    } else {
        Json j{{"range", {w.first, w.second}}};
        if (found) {
            j["witness"] = to_json(*found);
            j["status"] = "witness found";
        } else {
            j["witness"] = nullptr;
            j["status"] = "no witness found";
        }
        emit(cfg, dump(j));
    }
    return exit_ok;
}

int cmd_verify(const RunConfig& cfg) {
    require_format(cfg, false);
    make_ring(cfg);
    VerifyOptions opt;
    opt.window = window_of(cfg);
    opt.exploratory = cfg.exploratory;
    opt.generation = cfg.exhaustive ? GenerationMode::exhaustive : GenerationMode::paper_reduction;
    const PeriodicityReport r = verify_theorem(cfg.d, cfg.p, opt);
    if (cfg.format == "text") {
        std::ostringstream t;
        t << "d=" << r.ctx.d << " p=" << r.ctx.p << " k=" << r.ctx.k << " t=" << r.ctx.t << " shift=" << r.ctx.shift << '\n';
        t << "step1 " << (r.step1.ok ? "ok" : "FAILED") << "\nstep2 gcd " << (r.gcd_ok ? "ok" : "FAILED") << '\n';
        if (r.step3) t << "step3 " << to_string(r.step3->mode) << ' ' << to_string(r.step3->verdict) << '\n';
        t << window_text(r.window);
        t << "overall " << (r.overall ? (*r.overall ? "true" : "false") : "n/a (exploratory)") << '\n';
        emit(cfg, t.str());
    } else {
        emit(cfg, dump(to_json(r)));
    }
    if (r.exploratory) return exit_ok;
    return r.overall.value_or(false) ? exit_ok : exit_check_failed;
}

int cmd_double_cover(const RunConfig& cfg) {
    require_format(cfg, false);
    make_ring(cfg);
    const DoubleCoverResult r = double_cover_check(cfg.d, cfg.p, window_of(cfg));
    emit(cfg, cfg.format == "text" ? window_text(r.window) : dump(to_json(r)));
    return r.ok ? exit_ok : exit_check_failed;
}

int cmd_char2(const RunConfig& cfg) {
    require_format(cfg, false);
    const Char2Result r = char2_cubic_suite();
    emit(cfg, cfg.format == "text" ? window_text(r.q8_vs_q4) : dump(to_json(r)));
    return r.ok ? exit_ok : exit_check_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Syzygy bundles, Hilbert-Kunz functions and Frobenius periodicity on plane curves"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub, bool curve) {
        if (curve) {
            sub->add_option("--d", cfg.d, "curve degree")->capture_default_str();
            sub->add_option("--p", cfg.p, "characteristic")->capture_default_str();
        }
        sub->add_option("--format", cfg.format, "json, csv or text")
            ->check(CLI::IsMember({"json", "csv", "text"}))
            ->capture_default_str();
        sub->add_option("--out", cfg.out, "write output to a file");
    };

    auto* hk = app.add_subcommand("hk", "Hilbert-Kunz function of the Fermat ring");
    common(hk, true);
    hk->add_option("--e-max", cfg.e_max, "largest Frobenius exponent")->capture_default_str();
    hk->add_flag("--no-crosscheck", cfg.skip_crosscheck, "skip the colength identity cross-check");

    auto* syz = app.add_subcommand("syzygy", "sections of Syz(X^a, Y^b, Z^c)(m)");
    common(syz, true);
    syz->add_option("--gens", cfg.gens, "exponents a,b,c")->delimiter(',')->required();
    syz->add_option("--twist", cfg.twist, "twist m")->required();

    auto* split = app.add_subcommand("splitting", "splitting type of a syzygy bundle on the projective line");
    split->add_option("--p", cfg.p, "characteristic")->capture_default_str();
    split->add_option("--forms", cfg.forms, "three coefficient lists (lowest X power first), e.g. 1,0;0,1;1,1")->required();
    common(split, false);

    auto* wit = app.add_subcommand("witness", "search for a destabilizing twist with a section");
    common(wit, true);
    wit->add_option("--gens", cfg.gens, "exponents a,b,c")->delimiter(',')->required();
    wit->add_option("--window", cfg.window, "twist range lo,hi")->delimiter(',');

    auto* ver = app.add_subcommand("verify", "check the Frobenius periodicity on the Fermat curve");
    common(ver, true);
    ver->add_option("--window", cfg.window, "twist window lo,hi")->delimiter(',');
    ver->add_flag("--exploratory", cfg.exploratory, "allow p = 1 mod 2d; report without a verdict");
    ver->add_flag("--exhaustive", cfg.exhaustive, "generation check by minors instead of the coprimality reduction");

    auto* dc = app.add_subcommand("double-cover", "periodicity example on the Fermat curve of degree 2d");
    common(dc, true);
    dc->add_option("--window", cfg.window, "twist window lo,hi")->delimiter(',');

    auto* c2 = app.add_subcommand("char2-suite", "Fermat cubic in characteristic 2");
    common(c2, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*hk) return cmd_hk(cfg);
        if (*syz) return cmd_syzygy(cfg);
        if (*split) return cmd_splitting(cfg);
        if (*wit) return cmd_witness(cfg);
        if (*ver) return cmd_verify(cfg);
        if (*dc) return cmd_double_cover(cfg);
        if (*c2) return cmd_char2(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal check failed: " << e.what() << '\n';
        return exit_check_failed;
    }
    return exit_usage;
}
