// Command-line front end: every computation of the library as a batch
// command with deterministic text/JSON/CSV output.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed,
// 2 usage error, 3 cost bound refusal.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "schur/algebra.hpp"
#include "schur/idempotents.hpp"
#include "schur/io.hpp"
#include "schur/oracle.hpp"
#include "schur/padic.hpp"

namespace {

using namespace schur;

struct global_options {
    std::string format = "text";
    std::string output;
    u64 cost_bound = default_cost_bound;
};

void emit(const global_options& opts, const std::string& text) {
    if (opts.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.output);
    if (!out) throw std::runtime_error("cannot open output file: " + opts.output);
    out << text;
}

// Any two of (m, lambda2, r) determine the third via r = m + 2*lambda2.
std::pair<u64, u64> resolve_context(std::optional<u64> m, std::optional<u64> lambda2,
                                    std::optional<u64> r) {
    if (m && lambda2) {
        if (r && *r != *m + 2 * *lambda2)
            throw CLI::ValidationError("inconsistent m, lambda2, r (need r = m + 2*lambda2)");
        return {*m, *lambda2};
    }
    if (m && r) {
        if (*r < *m || (*r - *m) % 2 != 0)
            throw CLI::ValidationError("r - m must be even and nonnegative");
        return {*m, (*r - *m) / 2};
    }
    if (lambda2 && r) {
        if (*r < 2 * *lambda2) throw CLI::ValidationError("need r >= 2*lambda2");
        return {*r - 2 * *lambda2, *lambda2};
    }
    throw CLI::ValidationError("give two of --m, --lambda2, --r");
}

std::pair<u64, u64> parse_range(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw CLI::ValidationError("range must be lo:hi");
    u64 lo = std::stoull(s.substr(0, colon));
    u64 hi = std::stoull(s.substr(colon + 1));
    if (hi < lo) throw CLI::ValidationError("range must be lo:hi with lo <= hi");
    return {lo, hi};
}

int cmd_kostka(const global_options& opts, u64 m_max, u64 g_max, u64 p) {
    if (!is_prime(p)) throw CLI::ValidationError("--p must be prime");
    auto rows = kostka_window(m_max, g_max, p);
    std::ostringstream os;
    if (opts.format == "csv") {
        os << kostka_csv(rows);
    } else if (opts.format == "json") {
        os << kostka_json(rows, p).dump() << "\n";
    } else {
        for (u64 m = 0; m <= m_max; ++m) {
            for (u64 g = 0; g <= g_max; ++g) os << (g ? " " : "") << rows[m][g];
            os << "\n";
        }
        if (p == 2) {
            os << "\n";
            for (u64 m = 0; m <= m_max; ++m)
                for (u64 g = 0; g <= g_max; ++g)
                    os << "m=" << m << " g=" << g << ": " << kostka_factor_word(m, g) << "\n";
        }
    }
    emit(opts, os.str());
    return 0;
}

int cmd_idempotents(const global_options& opts, u64 m, u64 lambda2) {
    auto ctx = make_gf_context(2, m, lambda2);
    std::ostringstream os;
    ordered_json jlist = ordered_json::array();
    for (u64 g : admissible_g(m, ctx)) {
        auto desc = describe_idempotent(m, g);
        auto e = build_idempotent(m, g, ctx);
        if (opts.format == "json") {
            ordered_json j;
            j["m"] = m;
            j["g"] = g;
            j["I"] = desc.sets.I;
            j["J"] = desc.sets.J;
            j["factored"] = descriptor_factored_form(desc);
            j["element"] = element_to_json(e);
            jlist.push_back(j);
        } else {
            os << "e(" << m << "," << g << ") = " << descriptor_factored_form(desc) << " = "
               << element_to_string(e) << "\n";
        }
    }
    if (opts.format == "json") os << jlist.dump() << "\n";
    emit(opts, os.str());
    return 0;
}

int cmd_verify(const global_options& opts, std::pair<u64, u64> m_range,
               std::pair<u64, u64> lambda2_range) {
    std::ostringstream os;
    ordered_json jlist = ordered_json::array();
    bool all_pass = true;
    for (u64 m = m_range.first; m <= m_range.second; ++m) {
        for (u64 k = lambda2_range.first; k <= lambda2_range.second; ++k) {
            auto ctx = make_gf_context(2, m, k);
            auto rep = verify_complete_set(m, ctx);
            all_pass = all_pass && rep.pass;
            if (opts.format == "json")
                jlist.push_back(verification_report_to_json(rep));
            else
                os << "m=" << m << " lambda2=" << k << " r=" << rep.r
                   << " idempotents=" << rep.admissible.size()
                   << (rep.pass ? " pass" : " FAIL") << "\n";
        }
    }
    if (opts.format == "json") os << jlist.dump() << "\n";
    emit(opts, os.str());
    return all_pass ? 0 : 1;
}

int cmd_oracle(const global_options& opts, u64 r, u64 lambda2, u64 p) {
    if (!is_prime(p)) throw CLI::ValidationError("--p must be prime");
    if (2 * lambda2 > r) throw CLI::ValidationError("need lambda2 <= r/2");
    auto rep = compare_structure_constants(static_cast<unsigned>(r), lambda2, p,
                                           opts.cost_bound);
    bool pass = rep.pass;
    std::ostringstream os;
    if (opts.format == "json") {
        ordered_json j;
        j["structure_constants"] = structure_report_to_json(rep);
        if (p == 2) {
            auto ranks = idempotent_rank_report(r - 2 * lambda2, lambda2, opts.cost_bound);
            pass = pass && ranks.pass;
            j["ranks"] = rank_report_to_json(ranks);
        }
        os << j.dump() << "\n";
    } else {
        os << "structure constants r=" << r << " lambda2=" << lambda2 << " p=" << p
           << " dim=" << rep.dimension << " products=" << rep.products_checked
           << " mismatches=" << rep.mismatches
           << " independent=" << (rep.independent ? "yes" : "no")
           << (rep.pass ? " pass" : " FAIL") << "\n";
        if (p == 2) {
            auto ranks = idempotent_rank_report(r - 2 * lambda2, lambda2, opts.cost_bound);
            pass = pass && ranks.pass;
            for (const auto& e : ranks.per_g)
                os << "g=" << e.g << " rank=" << e.rank
                   << " idempotent=" << (e.idempotent ? "yes" : "no") << "\n";
            os << "rank sum " << ranks.rank_sum << " / dim " << ranks.dimension
               << (ranks.pass ? " pass" : " FAIL") << "\n";
        }
    }
    emit(opts, os.str());
    return pass ? 0 : 1;
}

int cmd_blocks(const global_options& opts, u64 m, u64 lambda2) {
    auto ctx = make_gf_context(2, m, lambda2);
    std::ostringstream os;
    ordered_json jlist = ordered_json::array();
    std::size_t dim_sum = 0;
    for (u64 g : admissible_g(m, ctx)) {
        auto b = block_description(m, g, ctx);
        dim_sum += b.dimension;
        if (opts.format == "json") {
            ordered_json j;
            j["m"] = m;
            j["g"] = g;
            j["basis_degrees"] = b.basis_degrees;
            j["generators"] = b.generator_degrees;
            j["dimension"] = b.dimension;
            jlist.push_back(j);
        } else {
            os << "block g=" << g << " dim=" << b.dimension << " basis={";
            for (std::size_t i = 0; i < b.basis_degrees.size(); ++i)
                os << (i ? "," : "") << b.basis_degrees[i];
            os << "} generators={";
            for (std::size_t i = 0; i < b.generator_degrees.size(); ++i)
                os << (i ? "," : "") << b.generator_degrees[i];
            os << "}\n";
        }
    }
    if (opts.format == "json") {
        ordered_json j;
        j["blocks"] = jlist;
        j["dimension_sum"] = dim_sum;
        j["algebra_dimension"] = ctx->dimension();
        os << j.dump() << "\n";
    } else {
        os << "dimension sum " << dim_sum << " (algebra dimension " << ctx->dimension()
           << ")\n";
    }
    emit(opts, os.str());
    return 0;
}

int cmd_char0(const global_options& opts, u64 m, u64 lambda2) {
    auto ctx = make_q_context(m, lambda2);
    std::ostringstream os;
    bool all = true;
    auto minpoly = f_polynomial(lambda2 + 1, m);
    ordered_json j;
    if (opts.format == "json") {
        std::vector<std::string> coeffs;
        for (const auto& c : minpoly) coeffs.push_back(c.str());
        j["m"] = m;
        j["lambda2"] = lambda2;
        j["minimal_polynomial"] = coeffs;
    } else {
        os << "F_" << (lambda2 + 1) << "(T) coefficients (ascending):";
        for (const auto& c : minpoly) os << " " << c.str();
        os << "\n";
    }
    ordered_json identities = ordered_json::array();
    for (u64 k = 1; k <= lambda2; ++k) {
        bool ok = char0_basis_identity(k, ctx);
        all = all && ok;
        if (opts.format == "json")
            identities.push_back({{"k", k}, {"ok", ok}});
        else
            os << "(k!)^2*b(k) = F_k(b(1)) for k=" << k << ": " << (ok ? "pass" : "FAIL")
               << "\n";
    }
    bool minpoly_ok = minimal_polynomial_check(ctx);
    all = all && minpoly_ok;
    if (opts.format == "json") {
        j["basis_identities"] = identities;
        j["minimal_polynomial_check"] = minpoly_ok;
        j["pass"] = all;
        os << j.dump() << "\n";
    } else {
        os << "minimal polynomial check: " << (minpoly_ok ? "pass" : "FAIL") << "\n";
    }
    emit(opts, os.str());
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact centraliser-algebra computations for two-part partitions"};
    app.require_subcommand(1);

    global_options opts;
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--output", opts.output, "write output to PATH instead of stdout");
    app.add_option("--cost-bound", opts.cost_bound, "tensor-space dimension bound");

    std::optional<u64> m, lambda2, r;
    u64 m_max = 0, g_max = 0, p = 2;
    std::string m_range_s, lambda2_range_s;

    auto* kostka = app.add_subcommand("kostka", "render a window of the p-Kostka matrix");
    kostka->add_option("--m-max", m_max)->required();
    kostka->add_option("--g-max", g_max)->required();
    kostka->add_option("--p", p);

    auto add_ctx_opts = [&](CLI::App* cmd) {
        cmd->add_option("--m", m);
        cmd->add_option("--lambda2", lambda2);
        cmd->add_option("--r", r);
    };

    auto* idem = app.add_subcommand("idempotents", "list the primitive idempotents e_{m,g}");
    add_ctx_opts(idem);

    auto* verify = app.add_subcommand("verify", "verify the complete-set properties");
    add_ctx_opts(verify);
    verify->add_option("--m-range", m_range_s, "lo:hi sweep over m");
    verify->add_option("--lambda2-range", lambda2_range_s, "lo:hi sweep over lambda2");

    auto* oracle = app.add_subcommand("oracle", "tensor-space structure-constant and rank checks");
    add_ctx_opts(oracle);
    oracle->add_option("--p", p);

    auto* blocks = app.add_subcommand("blocks", "block decomposition per admissible g");
    add_ctx_opts(blocks);

    auto* char0 = app.add_subcommand("char0", "characteristic-zero identities over exact rationals");
    add_ctx_opts(char0);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (kostka->parsed()) return cmd_kostka(opts, m_max, g_max, p);
        if (idem->parsed()) {
            auto [mm, k] = resolve_context(m, lambda2, r);
            return cmd_idempotents(opts, mm, k);
        }
        if (verify->parsed()) {
            std::pair<u64, u64> mr, kr;
            if (!m_range_s.empty() || !lambda2_range_s.empty()) {
                if (m_range_s.empty() || lambda2_range_s.empty())
                    throw CLI::ValidationError("give both --m-range and --lambda2-range");
                mr = parse_range(m_range_s);
                kr = parse_range(lambda2_range_s);
            } else {
                auto [mm, k] = resolve_context(m, lambda2, r);
                mr = {mm, mm};
                kr = {k, k};
            }
            return cmd_verify(opts, mr, kr);
        }
        if (oracle->parsed()) {
            auto [mm, k] = resolve_context(m, lambda2, r);
            return cmd_oracle(opts, mm + 2 * k, k, p);
        }
        if (blocks->parsed()) {
            auto [mm, k] = resolve_context(m, lambda2, r);
            return cmd_blocks(opts, mm, k);
        }
        if (char0->parsed()) {
            auto [mm, k] = resolve_context(m, lambda2, r);
            return cmd_char0(opts, mm, k);
        }
    } catch (const schur::cost_bound_error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;
}
