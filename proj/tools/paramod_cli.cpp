// paramod: verification toolkit CLI for the paramodular Eisenstein and
// convolution identities. Exit codes: 0 all checks pass, 1 any failure,
// 2 usage or configuration error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "paramod/convolution.hpp"
#include "paramod/eisenstein.hpp"
#include "paramod/suites.hpp"

using namespace paramod;

namespace {

std::string num17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_out(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        f << text;
    }
}

std::array<real_t, 6> parse_six(const std::string& s) {
    std::istringstream in(s);
    std::array<real_t, 6> v{};
    double x;
    for (int i = 0; i < 6; ++i) {
        if (!(in >> x)) throw CLI::ValidationError("--Z expects six reals: x11 x12 x22 y11 y12 y22");
        v[static_cast<size_t>(i)] = static_cast<real_t>(x);
    }
    return v;
}

cplx parse_s(const std::string& s) {
    std::istringstream in(s);
    double re, im = 0;
    if (!(in >> re)) throw CLI::ValidationError("--s expects \"re [im]\"");
    in >> im;
    return cplx(static_cast<real_t>(re), static_cast<real_t>(im));
}

RatVec4 parse_ratvec(const std::string& s) {
    std::istringstream in(s);
    std::array<i64, 4> num{}, den{1, 1, 1, 1};
    for (int i = 0; i < 4; ++i) {
        std::string tok;
        if (!(in >> tok)) throw CLI::ValidationError("rational vector expects four a/b tokens");
        auto slash = tok.find('/');
        if (slash == std::string::npos) {
            num[static_cast<size_t>(i)] = std::stoll(tok);
        } else {
            num[static_cast<size_t>(i)] = std::stoll(tok.substr(0, slash));
            den[static_cast<size_t>(i)] = std::stoll(tok.substr(slash + 1));
        }
    }
    return RatVec4::of(num, den);
}

std::string check_json(const char* name, cplx lhs, cplx rhs, double tol, double tail = 0) {
    double abs_err = static_cast<double>(std::abs(lhs - rhs));
    double rel_err = static_cast<double>(std::abs(lhs - rhs) / (1 + std::max(std::abs(lhs), std::abs(rhs))));
    bool pass = rel_err <= tol;
    std::ostringstream os;
    os << "{\"check\":\"" << name << "\",\"lhs_re\":" << num17((double)lhs.real())
       << ",\"lhs_im\":" << num17((double)lhs.imag()) << ",\"rhs_re\":" << num17((double)rhs.real())
       << ",\"rhs_im\":" << num17((double)rhs.imag()) << ",\"abs_err\":" << num17(abs_err)
       << ",\"rel_err\":" << num17(rel_err) << ",\"tail_bound\":" << num17(tail)
       << ",\"tolerance\":" << num17(tol) << ",\"pass\":" << (pass ? "true" : "false") << "}\n";
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"paramod: paramodular Eisenstein / twisted spinor functional equation verification"};
    app.set_config("--config", "", "flat key=value configuration file; flags override");
    app.require_subcommand(0, 1);
    app.fallthrough();

    std::string format = "json", out_path;
    app.add_option("--format", format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    auto* su = app.add_subcommand("suite", "run a verification suite");
    std::string suite_name = "all";
    SuiteConfig cfg;
    su->add_option("--suite", suite_name, "suite name")->check(CLI::IsMember(suite_names()));
    su->add_option("--max-modulus", cfg.achisum_max_modulus, "achisum modulus bound (default 24)");
    su->add_option("--gauss-max", cfg.gauss_max_modulus, "gauss-sum modulus bound (default 50)");
    su->add_option("--seed", cfg.seed, "random seed for the property grids");
    su->add_option("--words", cfg.group_words, "random group words (default 1000)");
    su->add_option("--char-pairs", cfg.char_pairs, "multiplicativity pairs (default 200)");
    su->add_option("--epstein-forms", cfg.epstein_forms, "random SPD forms (default 10)");
    su->add_flag("--quick", cfg.quick, "reduced grids for smoke runs");

    auto* ep = app.add_subcommand("epstein", "evaluate one Epstein zeta value");
    std::string ep_form = "1 0 0 0 0 1 0 0 0 0 1 0 0 0 0 1", ep_u = "0 0 0 0", ep_v = "0 0 0 0";
    std::string ep_s = "3 0";
    double ep_radius = 8;
    int ep_precision = 64;
    bool ep_continued_only = false;
    ep->add_option("--form", ep_form, "16 entries of the SPD form, row major");
    ep->add_option("--u", ep_u, "shift characteristic, four a/b tokens");
    ep->add_option("--v", ep_v, "phase characteristic, four a/b tokens");
    ep->add_option("--s", ep_s, "complex s as \"re im\"");
    ep->add_option("--radius", ep_radius, "direct-sum window radius");
    ep->add_option("--precision-bits", ep_precision, "working precision (>= 53)");
    ep->add_flag("--continued-only", ep_continued_only, "skip the direct sum (needed for Re s <= 2)");

    auto* ei = app.add_subcommand("eisenstein", "evaluate one Eisenstein representation");
    i64 q_p = 7, q_N = 6, q_kappa = 1, q_chi = 0;
    std::string q_Z = "0 0 0 1 0 1", q_s = "2.6 0", q_rep = "second";
    double q_radius = 0;
    i64 q_height = 6;
    ei->add_option("--p", q_p, "polarization prime");
    ei->add_option("--N", q_N, "level");
    ei->add_option("--kappa", q_kappa, "kappa | N");
    ei->add_option("--chi-index", q_chi, "character index in canonical order");
    ei->add_option("--Z", q_Z, "six reals: x11 x12 x22 y11 y12 y22");
    ei->add_option("--s", q_s, "complex s");
    ei->add_option("--rep", q_rep, "lattice | second | third | coset")
        ->check(CLI::IsMember({"lattice", "second", "third", "coset"}));
    ei->add_option("--radius", q_radius, "lattice-route window radius (0 = auto)");
    ei->add_option("--height", q_height, "coset reference height bound");

    auto* fe = app.add_subcommand("fe", "Eisenstein functional equation check");
    std::string fe_form = "corollary";
    fe->add_option("--p", q_p, "prime, p = 1 mod N");
    fe->add_option("--N", q_N, "level");
    fe->add_option("--kappa", q_kappa, "kappa | N");
    fe->add_option("--chi-index", q_chi, "character index");
    fe->add_option("--Z", q_Z, "Siegel point");
    fe->add_option("--s", q_s, "complex s");
    fe->add_option("--form", fe_form, "proposition | corollary")
        ->check(CLI::IsMember({"proposition", "corollary"}));

    auto* sm = app.add_subcommand("smartsum", "smart-sum identity check");
    bool sm_conj = false, sm_R = false;
    sm->add_option("--p", q_p, "prime");
    sm->add_option("--N", q_N, "level");
    sm->add_option("--kappa", q_kappa, "kappa | L");
    sm->add_option("--chi-index", q_chi, "character index");
    sm->add_option("--Z", q_Z, "Siegel point");
    sm->add_option("--s", q_s, "complex s");
    sm->add_flag("--conjugate-lhs", sm_conj, "use the statement's conjugated lhs characters");
    sm->add_flag("--principal-R", sm_R, "use principal modulus R instead of R/theta");

    auto* df = app.add_subcommand("diff", "difference-series checks");
    i64 df_q = 2, df_r = 1;
    df->add_option("--p", q_p, "prime");
    df->add_option("--N", q_N, "level");
    df->add_option("--kappa", q_kappa, "kappa | N");
    df->add_option("--chi-index", q_chi, "character index");
    df->add_option("--q", df_q, "prime q");
    df->add_option("--r", df_r, "positive r with gcd(p, Nqr) = 1");
    df->add_option("--Z", q_Z, "Siegel point");
    df->add_option("--s", q_s, "complex s, Re s > 2");

    auto* gr = app.add_subcommand("group", "matrix membership / classification utilities");
    std::string gr_matrix, gr_group = "GammaStar";
    bool gr_classify = false, gr_make_hp = false;
    gr->add_option("--matrix", gr_matrix, "16 entries \"a/b+c/d*sqrt(p)\", row major");
    gr->add_option("--p", q_p, "prime");
    gr->add_option("--N", q_N, "level");
    gr->add_option("--kappa", q_kappa, "kappa | N");
    gr->add_option("--group", gr_group,
                   "Sp_t | Paramodular_t | Gamma21 | Gamma21_level | Gamma21_level_1 | GammaStar");
    gr->add_flag("--classify", gr_classify, "classify the last row");
    gr->add_flag("--make-hp", gr_make_hp, "emit H_p(N)");
    i64 gr_t = 1;
    gr->add_option("--t", gr_t, "polarization for Sp_t / Paramodular_t");

    auto* se = app.add_subcommand("series", "coefficient-series evaluations");
    std::string se_coeffs;
    int se_k = 10;
    double se_growth = 0, se_growth_c = 1;
    i64 se_cutoff = 100000, se_N = 1;
    se->add_option("--coeffs", se_coeffs, "file of lines \"m re im\"")->required();
    se->add_option("--k", se_k, "weight");
    se->add_option("--growth", se_growth, "growth exponent bound");
    se->add_option("--growth-constant", se_growth_c, "growth constant");
    se->add_option("--N", se_N, "character modulus");
    se->add_option("--chi-index", q_chi, "character index");
    se->add_option("--s", q_s, "complex s");
    se->add_option("--cutoff", se_cutoff, "partial-sum cutoff");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (su->parsed()) {
            auto rep = run_suite(suite_name, cfg);
            ReportFormat f = format == "csv" ? ReportFormat::csv
                                             : (format == "text" ? ReportFormat::text : ReportFormat::json);
            write_out(emit_report(rep, f), out_path);
            return report_exit_code(rep);
        }
        if (ep->parsed()) {
            EpsteinParams p;
            {
                std::istringstream in(ep_form);
                double x;
                for (int i = 0; i < 16; ++i) {
                    if (!(in >> x)) throw CLI::ValidationError("--form expects 16 reals");
                    p.Q[static_cast<size_t>(i)] = static_cast<real_t>(x);
                }
            }
            p.u = parse_ratvec(ep_u);
            p.v = parse_ratvec(ep_v);
            p.s = parse_s(ep_s);
            p.truncation_radius = static_cast<real_t>(ep_radius);
            p.precision_bits = ep_precision;
            cplx cont = epstein_continued(p);
            std::ostringstream os;
            if (!ep_continued_only && p.s.real() > 2) {
                auto dr = epstein_direct(p);
                os << "{\"value_re\":" << num17((double)dr.value.real())
                   << ",\"value_im\":" << num17((double)dr.value.imag())
                   << ",\"tail_bound\":" << num17((double)dr.tail_bound)
                   << ",\"terms_used\":" << dr.terms_used
                   << ",\"completed_re\":" << num17((double)cont.real())
                   << ",\"completed_im\":" << num17((double)cont.imag()) << "}\n";
            } else {
                os << "{\"completed_re\":" << num17((double)cont.real())
                   << ",\"completed_im\":" << num17((double)cont.imag()) << ",\"tail_bound\":0"
                   << ",\"terms_used\":0}\n";
            }
            write_out(os.str(), out_path);
            return 0;
        }
        if (ei->parsed() || fe->parsed() || sm->parsed() || df->parsed()) {
            EisParams P;
            P.ctx = GroupContext{q_p, 1, q_N, q_kappa, std::nullopt, std::nullopt};
            P.chi = character_by_index(q_N, q_chi);
            P.Z = SiegelPoint::from_six(parse_six(q_Z));
            P.s = parse_s(q_s);
            if (ei->parsed()) {
                std::ostringstream os;
                if (q_rep == "lattice") {
                    P.direct_radius = static_cast<real_t>(q_radius);
                    auto v = eis_lattice_rep(P);
                    os << "{\"value_re\":" << num17((double)v.value.real())
                       << ",\"value_im\":" << num17((double)v.value.imag())
                       << ",\"tail_bound\":" << num17((double)v.tail_bound) << "}\n";
                } else if (q_rep == "coset") {
                    cplx v = eis_coset_rep(P, q_height);
                    os << "{\"value_re\":" << num17((double)v.real())
                       << ",\"value_im\":" << num17((double)v.imag()) << ",\"tail_bound\":0}\n";
                } else {
                    cplx v = eis_epstein_rep(P, q_rep == "second" ? EisVariant::second : EisVariant::third);
                    os << "{\"value_re\":" << num17((double)v.real())
                       << ",\"value_im\":" << num17((double)v.imag()) << ",\"tail_bound\":0}\n";
                }
                write_out(os.str(), out_path);
                return 0;
            }
            if (fe->parsed()) {
                auto res = eis_fe_check(P, fe_form == "proposition" ? FeForm::proposition : FeForm::corollary);
                write_out(check_json("fe", res.lhs, res.rhs, 1e-5), out_path);
                return res.rel_err <= 1e-5 ? 0 : 1;
            }
            if (sm->parsed()) {
                SmartSumOptions opt;
                opt.conjugate_lhs = sm_conj;
                opt.principal_R_over_theta = !sm_R;
                auto res = smart_sum_check(P, opt);
                write_out(check_json("smartsum", res.lhs, res.rhs, 1e-5), out_path);
                return res.rel_err <= 1e-5 ? 0 : 1;
            }
            DiffParams d;
            d.base = P;
            d.q = df_q;
            d.r = df_r;
            SiegelPoint at = w_point(P.Z, q_N * df_q * df_r * q_p);
            cplx lat = diff_series_eval(d, at, P.s);
            cplx def = diff_series_defining(d, P.Z, P.s);
            write_out(check_json("diff", lat, def, 1e-6), out_path);
            return std::abs(lat - def) / (1 + std::abs(lat)) <= 1e-6 ? 0 : 1;
        }
        if (gr->parsed()) {
            std::ostringstream os;
            if (gr_make_hp) {
                SpMatrix h = make_Hp(q_p, q_N);
                os << "{\"matrix\":\"" << h.str() << "\"}\n";
                write_out(os.str(), out_path);
                return 0;
            }
            if (gr_matrix.empty()) throw CLI::ValidationError("group: --matrix or --make-hp required");
            SpMatrix m = SpMatrix::parse(gr_matrix);
            GroupContext ctx{q_p, gr_t, q_N, q_kappa, std::nullopt, std::nullopt};
            GroupKind kind;
            if (gr_group == "Sp_t") kind = GroupKind::Sp_t;
            else if (gr_group == "Paramodular_t") kind = GroupKind::Paramodular_t;
            else if (gr_group == "Gamma21") kind = GroupKind::Gamma21;
            else if (gr_group == "Gamma21_level") kind = GroupKind::Gamma21_level;
            else if (gr_group == "Gamma21_level_1") kind = GroupKind::Gamma21_level_1;
            else if (gr_group == "GammaStar") kind = GroupKind::GammaStar;
            else throw CLI::ValidationError("unknown group name");
            bool member = similitude_member(m, kind, ctx);
            os << "{\"member\":" << (member ? "true" : "false");
            if (gr_classify) {
                auto rt = classify_last_row(m, ctx);
                os << ",\"row_type\":" << (static_cast<int>(rt.variant) + 1) << ",\"lambda\":["
                   << rt.lambda[0] << "," << rt.lambda[1] << "," << rt.lambda[2] << "," << rt.lambda[3]
                   << "],\"unit_flag\":" << rt.unit_flag;
            }
            os << "}\n";
            write_out(os.str(), out_path);
            return 0;
        }
        if (se->parsed()) {
            CoeffSeries c = CoeffSeries::load(se_coeffs, se_k, static_cast<real_t>(se_growth),
                                              static_cast<real_t>(se_growth_c));
            DirichletCharacter chi = character_by_index(se_N, q_chi);
            cplx s = parse_s(q_s);
            auto d = dirichlet_D(c, chi, s, se_cutoff);
            auto cd = completed_D(c, chi, s, se_cutoff);
            std::ostringstream os;
            os << "{\"D_re\":" << num17((double)d.value.real()) << ",\"D_im\":" << num17((double)d.value.imag())
               << ",\"D_tail\":" << num17((double)d.tail_bound)
               << ",\"completed_re\":" << num17((double)cd.value.real())
               << ",\"completed_im\":" << num17((double)cd.value.imag())
               << ",\"completed_tail\":" << num17((double)cd.tail_bound) << "}\n";
            write_out(os.str(), out_path);
            return 0;
        }
        std::cerr << app.help();
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
