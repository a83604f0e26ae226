#include <CLI11.hpp>

#include <iostream>
#include <fstream>
#include <sstream>

#include "adem/json_io.hpp"

using namespace adem;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

dpow::Heights make_heights(int p, const std::string& n_spec, int m, int odd)
{
    dpow::Heights ctx;
    ctx.p = p;
    ctx.n = odd;
    std::vector<int> heights;
    std::stringstream ss{n_spec};
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "inf" || item == "oo")
            heights.push_back(dpow::kInfiniteHeight);
        else
            heights.push_back(std::stoi(item));
    }
    ctx.m = m > 0 ? m : static_cast<int>(heights.size());
    if (static_cast<int>(heights.size()) == 1 && ctx.m > 1)
        heights.assign(ctx.m, heights.front());
    if (static_cast<int>(heights.size()) != ctx.m)
        throw CLI::ValidationError("--N must list one height per even variable");
    ctx.N = heights;
    return ctx;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"adem: exact computations in the mod p Steenrod algebra and friends"};
    app.require_subcommand(1);

    int exit_code = kExitPass;

    // ---- mul ----
    auto* mul = app.add_subcommand("mul", "multiply two elements and reduce to admissible form");
    std::string mul_left, mul_right;
    int mul_p = 2;
    bool mul_json = false;
    mul->add_option("left", mul_left)->required();
    mul->add_option("right", mul_right)->required();
    mul->add_option("--p", mul_p, "prime");
    mul->add_flag("--json", mul_json);
    mul->callback([&] {
        steenrod::Algebra alg(mul_p);
        auto a = steenrod::parse_expr(mul_left, mul_p);
        auto b = steenrod::parse_expr(mul_right, mul_p);
        auto r = alg.mul(a, b);
        std::cout << (mul_json ? jsonio::element_json(r) : steenrod::render(r)) << "\n";
    });

    // ---- reduce ----
    auto* red = app.add_subcommand("reduce", "Adem-reduce an expression");
    std::string red_expr;
    int red_p = 2;
    bool red_json = false;
    red->add_option("expr", red_expr)->required();
    red->add_option("--p", red_p, "prime");
    red->add_flag("--json", red_json);
    red->callback([&] {
        steenrod::Algebra alg(red_p);
        auto e = alg.reduce(steenrod::parse_expr(red_expr, red_p));
        std::cout << (red_json ? jsonio::element_json(e) : steenrod::render(e)) << "\n";
    });

    // ---- basis ----
    auto* bas = app.add_subcommand("basis", "admissible monomials of one degree");
    int bas_p = 2, bas_deg = 0;
    bool bas_json = false;
    bas->add_option("--p", bas_p, "prime");
    bas->add_option("--deg", bas_deg, "degree")->required();
    bas->add_flag("--json", bas_json);
    bas->callback([&] {
        steenrod::Algebra alg(bas_p);
        auto b = alg.basis(bas_deg);
        if (bas_json) {
            steenrod::Element e(bas_p);
            for (const auto& m : b)
                e.add_term(m, 1);
            std::cout << jsonio::element_json(e) << "\n";
        } else {
            for (const auto& m : b)
                std::cout << steenrod::render(m, bas_p) << "\n";
        }
    });

    // ---- dim ----
    auto* dim = app.add_subcommand("dim", "graded dimension, optionally against the oracle");
    int dim_p = 2, dim_deg = -1, dim_kmax = -1;
    bool dim_oracle_flag = false, dim_verify = false, dim_json = false;
    dim->add_option("--p", dim_p, "prime");
    dim->add_option("--deg", dim_deg, "single degree");
    dim->add_option("--kmax", dim_kmax, "verify a whole range 0..kmax");
    dim->add_flag("--oracle", dim_oracle_flag, "use the linear-algebra oracle");
    dim->add_flag("--verify", dim_verify, "print and compare both routes");
    dim->add_flag("--json", dim_json);
    dim->callback([&] {
        if (dim_kmax >= 0) {
            auto rep = oracle::verify_basis(dim_p, dim_kmax, linalg::Exec::Parallel);
            if (dim_json) {
                std::cout << jsonio::verify_report_json(rep) << "\n";
            } else {
                for (int k = 0; k <= rep.k_max; ++k)
                    std::cout << k << ": " << rep.dims[k] << "\n";
                std::cout << (rep.ok() ? "OK" : "MISMATCH") << "\n";
            }
            if (!rep.ok())
                exit_code = kExitFail;
            return;
        }
        if (dim_deg < 0)
            throw CLI::ValidationError("dim", "need --deg or --kmax");
        steenrod::Algebra alg(dim_p);
        if (dim_verify) {
            long long c = alg.dim(dim_deg);
            long long o = oracle::dim_oracle(dim_p, dim_deg);
            std::cout << c << " (core) " << (c == o ? "==" : "!=") << " " << o << " (oracle)\n";
            if (c != o)
                exit_code = kExitFail;
        } else if (dim_oracle_flag) {
            std::cout << oracle::dim_oracle(dim_p, dim_deg) << "\n";
        } else {
            std::cout << alg.dim(dim_deg) << "\n";
        }
    });

    // ---- obstruct ----
    auto* obs = app.add_subcommand("obstruct", "graded-realisation obstruction report");
    int obs_p = 2;
    std::string obs_mode = "nonrestricted";
    int obs_kmax = -1;
    bool obs_json = false;
    obs->add_option("--p", obs_p, "prime");
    obs->add_option("--mode", obs_mode, "restricted|nonrestricted");
    obs->add_option("--kmax", obs_kmax, "profile depth (default per prime)");
    obs->add_flag("--json", obs_json);
    obs->callback([&] {
        auto rep = pbw::run_obstruction(obs_p, pbw::mode_from_name(obs_mode), obs_kmax);
        if (obs_json) {
            std::cout << jsonio::obstruction_report_json(rep) << "\n";
        } else {
            std::cout << "p = " << rep.p << ", mode = " << pbw::mode_name(rep.mode) << "\n";
            std::cout << "inferred dim g_k, k = 1.." << rep.k_max << ":";
            for (int k = 1; k <= rep.k_max; ++k)
                std::cout << ' ' << rep.profile[k];
            std::cout << "\n";
            for (const auto& c : rep.certificates) {
                std::cout << (c.pass ? "  [pass] " : "  [FAIL] ") << c.id << ": " << c.claim << "\n";
                for (const auto& [k, v] : c.witnesses)
                    std::cout << "         " << k << " = " << v << "\n";
                if (!c.note.empty())
                    std::cout << "         note: " << c.note << "\n";
            }
            std::cout << "verdict: " << rep.verdict << "\n";
        }
        if (!rep.no_realisation())
            exit_code = kExitFail;
    });

    // ---- liecheck ----
    auto* lie = app.add_subcommand("liecheck", "verify the axioms of a char-2 Lie superalgebra");
    std::string lie_file;
    bool lie_json = false;
    lie->add_option("file", lie_file, "JSON structure-constant file")->required();
    lie->add_flag("--json", lie_json);
    lie->callback([&] {
        std::ifstream in(lie_file);
        if (!in)
            throw CLI::ValidationError("liecheck", "cannot open " + lie_file);
        std::stringstream buf;
        buf << in.rdbuf();
        auto data = jsonio::lie_data_from_json(buf.str());
        auto rep = lie2::check_axioms(data);
        if (lie_json) {
            std::cout << jsonio::axiom_report_json(rep) << "\n";
        } else {
            for (const auto& c : rep.checks) {
                std::cout << (c.pass ? "  [pass] " : "  [FAIL] ") << c.axiom;
                if (!c.witness.empty())
                    std::cout << "  witness: " << c.witness;
                std::cout << "\n";
            }
            std::cout << (rep.pass ? "PASS" : "FAIL") << "\n";
        }
        if (!rep.pass)
            exit_code = kExitFail;
    });

    // ---- dpow-mul / dpow-bracket ----
    auto* dpm = app.add_subcommand("dpow-mul", "divided-power product");
    auto* dpb = app.add_subcommand("dpow-bracket", "bracket of distinguished derivations");
    std::string dp_left, dp_right, dp_n = "1";
    int dp_p = 2, dp_m = 0, dp_odd = 0;
    bool dp_json = false;
    for (auto* sc : {dpm, dpb}) {
        sc->add_option("left", dp_left)->required();
        sc->add_option("right", dp_right)->required();
        sc->add_option("--p", dp_p, "prime");
        sc->add_option("--N", dp_n, "comma-separated heights of the even variables (inf allowed)");
        sc->add_option("--m", dp_m, "number of even variables (defaults to |N|)");
        sc->add_option("--odd", dp_odd, "number of odd variables");
        sc->add_flag("--json", dp_json);
    }
    dpm->callback([&] {
        auto ctx = make_heights(dp_p, dp_n, dp_m, dp_odd);
        auto a = dpow::parse_dp_element(dp_left, ctx);
        auto b = dpow::parse_dp_element(dp_right, ctx);
        auto r = dpow::dp_mul(a, b);
        std::cout << (dp_json ? jsonio::dp_element_json(r) : dpow::render(r)) << "\n";
    });
    dpb->callback([&] {
        auto ctx = make_heights(dp_p, dp_n, dp_m, dp_odd);
        auto a = dpow::parse_derivation(dp_left, ctx);
        auto b = dpow::parse_derivation(dp_right, ctx);
        auto r = dpow::bracket(a, b);
        std::cout << (dp_json ? jsonio::derivation_json(r) : dpow::render(r)) << "\n";
    });

    // ---- milnor ----
    auto* mil = app.add_subcommand("milnor", "coalgebra of the additive formal group's automorphisms");
    auto* mil_coassoc = mil->add_subcommand("coassoc", "verify coassociativity and counit laws");
    auto* mil_coprod = mil->add_subcommand("coprod", "coproduct of a monomial in the b_k");
    int mil_p = 2, mil_K = 6, mil_k = 1;
    std::string mil_mono;
    bool mil_json = false;
    for (auto* sc : {mil_coassoc, mil_coprod}) {
        sc->add_option("--p", mil_p, "prime");
        sc->add_option("--K", mil_K, "truncation index");
        sc->add_flag("--json", mil_json);
    }
    mil_coprod->add_option("--k", mil_k, "generator index (used when no monomial is given)");
    mil_coprod->add_option("--monomial", mil_mono, "monomial such as \"b1^2 b2\"");
    mil_coassoc->callback([&] {
        auto rep = milnor::check_coassociativity(mil_p, mil_K);
        if (mil_json)
            std::cout << jsonio::coassoc_report_json(rep) << "\n";
        else
            std::cout << (rep.pass ? "PASS" : "FAIL: " + rep.detail) << "\n";
        if (!rep.pass)
            exit_code = kExitFail;
    });
    mil_coprod->callback([&] {
        milnor::TensorElement r(mil_p, 2);
        if (mil_mono.empty()) {
            r = milnor::coproduct_gen(mil_k, mil_p, mil_K);
        } else {
            milnor::DualMonomial m;
            std::stringstream ss{mil_mono};
            std::string tok;
            while (ss >> tok) {
                if (tok[0] != 'b')
                    throw CLI::ValidationError("milnor", "monomial factors look like b2 or b1^3");
                auto caret = tok.find('^');
                int idx = std::stoi(tok.substr(1, caret == std::string::npos ? tok.size() : caret - 1));
                long long e = caret == std::string::npos ? 1 : std::stoll(tok.substr(caret + 1));
                m = milnor::dual_mul(m, milnor::dual_gen(idx, e));
            }
            r = milnor::coproduct(m, mil_p, mil_K);
        }
        std::cout << (mil_json ? jsonio::tensor_json(r) : milnor::render(r)) << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    } catch (const steenrod::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return exit_code;
}
