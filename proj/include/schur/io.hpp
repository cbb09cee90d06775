#pragma once

// Text, CSV and JSON rendering of library values. JSON objects keep a
// fixed field order so identical inputs give byte-identical output.

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "schur/algebra.hpp"
#include "schur/idempotents.hpp"
#include "schur/oracle.hpp"

namespace schur {

using ordered_json = nlohmann::ordered_json;

template <class Field>
ordered_json element_to_json(const algebra_element<Field>& e) {
    const auto& ctx = e.context();
    ordered_json j;
    j["char"] = ctx->characteristic();
    j["m"] = ctx->m();
    j["lambda2"] = ctx->lambda2();
    std::vector<std::string> coeffs;
    for (const auto& c : e.coeffs()) coeffs.push_back(ctx->field().to_string(c));
    j["coeffs"] = coeffs;
    return j;
}

// Human-readable sum, e.g. "b(0)+b(3)" or "3*b(2)+b(4)"; "0" for zero.
template <class Field>
std::string element_to_string(const algebra_element<Field>& e) {
    const auto& f = e.context()->field();
    std::string out;
    for (std::size_t a = 0; a < e.coeffs().size(); ++a) {
        if (f.is_zero(e[a])) continue;
        if (!out.empty()) out += "+";
        std::string c = f.to_string(e[a]);
        if (c != "1") out += c + "*";
        out += "b(" + std::to_string(a) + ")";
    }
    return out.empty() ? "0" : out;
}

inline std::string kostka_csv(const std::vector<std::vector<int>>& rows) {
    std::ostringstream os;
    if (rows.empty()) return "";
    for (std::size_t g = 0; g < rows.front().size(); ++g)
        os << (g ? "," : "") << "g=" << g;
    os << "\n";
    for (const auto& row : rows) {
        for (std::size_t g = 0; g < row.size(); ++g) os << (g ? "," : "") << row[g];
        os << "\n";
    }
    return os.str();
}

inline ordered_json kostka_json(const std::vector<std::vector<int>>& rows, u64 p) {
    ordered_json j;
    j["p"] = p;
    j["rows"] = rows;
    return j;
}

// The factor word of e_{m,g} read off the binary expansion of B(m,g):
// column (1/1) -> b(2^u), (1/0) -> (1-b(2^u)), (0/0) -> 1, (0/1) -> 0.
inline std::string kostka_factor_word(u64 m, u64 g) {
    auto cell = kostka_expansion(m, g, 2);
    if (!cell.nonzero) return "0";
    std::string out;
    for (std::size_t u = 0; u < cell.columns.size(); ++u) {
        auto [top, bot] = cell.columns[u];
        if (top == 0) continue;  // column (0/0): factor 1
        if (!out.empty()) out += "*";
        if (bot == 1)
            out += "b(" + std::to_string(u64{1} << u) + ")";
        else
            out += "(1-b(" + std::to_string(u64{1} << u) + "))";
    }
    return out.empty() ? "1" : out;
}

inline std::string descriptor_factored_form(const idempotent_descriptor& d) {
    std::string out;
    for (const auto& factor : d.factors) {
        if (!out.empty()) out += "*";
        std::string b = "b(" + std::to_string(u64{1} << factor.u) + ")";
        out += factor.complemented ? "(1-" + b + ")" : b;
    }
    return out.empty() ? "1" : out;
}

inline ordered_json verification_report_to_json(const verification_report& rep) {
    ordered_json j;
    j["m"] = rep.m;
    j["lambda2"] = rep.lambda2;
    j["r"] = rep.r;
    j["admissible_g"] = rep.admissible;
    j["idempotent"] = rep.idempotent;
    ordered_json pairs = ordered_json::array();
    for (const auto& o : rep.orthogonal)
        pairs.push_back({{"g", o.g}, {"d", o.d}, {"ok", o.ok}});
    j["orthogonal"] = pairs;
    j["sum_is_identity"] = rep.sum_is_identity;
    j["count_matches"] = rep.count_matches;
    j["pass"] = rep.pass;
    return j;
}

inline ordered_json rank_report_to_json(const rank_report& rep) {
    ordered_json j;
    j["r"] = rep.r;
    j["m"] = rep.m;
    j["p"] = rep.p;
    ordered_json per_g = ordered_json::array();
    for (const auto& e : rep.per_g)
        per_g.push_back({{"g", e.g}, {"rank", e.rank}, {"idempotent", e.idempotent}});
    j["per_g"] = per_g;
    j["rank_sum"] = rep.rank_sum;
    j["dim"] = rep.dimension;
    j["pass"] = rep.pass;
    return j;
}

inline ordered_json structure_report_to_json(const structure_constant_report& rep) {
    ordered_json j;
    j["r"] = rep.r;
    j["lambda2"] = rep.lambda2;
    j["p"] = rep.p;
    j["dim"] = rep.dimension;
    j["products_checked"] = rep.products_checked;
    j["mismatches"] = rep.mismatches;
    j["independent"] = rep.independent;
    j["pass"] = rep.pass;
    return j;
}

}  // namespace schur
