#include "frobper/json_io.hpp"

#include <sstream>

namespace frobper {

std::string rational_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Json to_json(const GradedElement& e) {
    Json terms = Json::array();
    const auto& basis = e.ring().monomial_basis(e.degree());
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (e.coeffs()[i] != 0) terms.push_back({basis[i].x, basis[i].y, basis[i].z, e.coeffs()[i]});
    return {{"degree", e.degree()}, {"terms", terms}};
}

Json to_json(const BinaryForm& f) {
    return {{"degree", f.degree()}, {"coeffs", f.coeffs()}, {"text", f.to_string()}};
}

Json to_json(const SyzygySpace& s) {
    Json basis = Json::array();
    for (const auto& tuple : s.basis) {
        Json t = Json::array();
        for (const auto& e : tuple) t.push_back(to_json(e));
        basis.push_back(t);
    }
    return {{"m", s.m}, {"dim", s.dim()}, {"basis", basis}};
}

Json to_json(const SplittingType& t) { return {{"a", t.a}, {"b", t.b}}; }

Json to_json(const InstabilityWitness& w) {
    Json sec = Json::array();
    for (const auto& e : w.section) sec.push_back(to_json(e));
    return {{"m", w.m}, {"degree", w.degree}, {"section", sec}};
}

Json to_json(const HKSummary& s) {
    Json recs = Json::array();
    for (std::size_t i = 0; i < s.records.size(); ++i) {
        const auto& r = s.records[i];
        Json row{{"e", r.e},
                 {"q", r.q},
                 {"phi", r.total},
                 {"profile", r.profile},
                 {"ehk_estimate", rational_string(s.ehk_estimates[i])},
                 {"balanced_value", rational_string(s.balanced_value[i])}};
        if (s.formula[i]) {
            row["closed_formula"] = rational_string(*s.formula[i]);
            row["match"] = Rational(r.total) == *s.formula[i];
        } else {
            row["closed_formula"] = nullptr;
            row["match"] = nullptr;
        }
        recs.push_back(row);
    }
    return {{"d", s.d}, {"p", s.p}, {"records", recs}, {"verdict", to_string(s.verdict)}};
}

std::string hk_csv(const HKSummary& s) {
    std::ostringstream out;
    out << "e,q,phi,closed_formula,match,ehk_estimate,verdict\n";
    for (std::size_t i = 0; i < s.records.size(); ++i) {
        const auto& r = s.records[i];
        out << r.e << ',' << r.q << ',' << r.total << ',';
        if (s.formula[i])
            out << rational_string(*s.formula[i]) << ',' << (Rational(r.total) == *s.formula[i] ? "true" : "false");
        else
            out << ',';
        out << ',' << rational_string(s.ehk_estimates[i]) << ',' << to_string(s.verdict) << '\n';
    }
    return out.str();
}

Json to_json(const WindowResult& w) {
    Json rows = Json::array();
    for (const auto& r : w.rows) rows.push_back({{"m", r.m}, {"lhs", r.lhs}, {"rhs", r.rhs}});
    return rows;
}

Json to_json(const PeriodicityReport& r) {
    const auto& c = r.ctx;
    Json j;
    j["params"] = {{"d", c.d}, {"p", c.p}, {"k", c.k}, {"t", c.t}, {"shift", c.shift}};
    j["mode"] = r.exploratory ? "exploratory" : "theorem";
    j["step1"] = {{"dims",
                   {{"s_k", {{"twist", r.step1.s_k_twist}, {"at", r.step1.s_k_at}, {"below", r.step1.s_k_below},
                             {"expected", r.step1.s_k_expected}}},
                    {"s_k_plus_1", {{"twist", r.step1.s_k1_twist}, {"at", r.step1.s_k1_at}, {"below", r.step1.s_k1_below},
                                    {"expected", r.step1.s_k1_expected}}}}},
                  {"ok", r.step1.ok}};
    Json step2{{"gcd_ok", r.gcd_ok}, {"section_invariants", r.section_invariants}};
    if (r.section) {
        Json comps = Json::array();
        for (const auto& f : r.section->components) comps.push_back(f.to_string());
        step2["section"] = comps;
        step2["p1_kernel_dim"] = r.section->p1_kernel_dim;
        step2["gcd_with_relation"] =
            r.section->components[2].is_zero()
                ? Json(nullptr)
                : Json(polynomial_gcd(r.section->components[2], BinaryForm::fermat(c.ring.prime(), c.d)).to_string());
    } else {
        step2["section"] = nullptr;
    }
    j["step2"] = step2;
    if (r.step3) {
        Json s3{{"mode", to_string(r.step3->mode)}, {"verdict", to_string(r.step3->verdict)}};
        if (r.step3->zero_piece_degree) s3["zero_piece_degree"] = *r.step3->zero_piece_degree;
        if (r.step3->common_zero) s3["common_zero"] = *r.step3->common_zero;
        j["step3"] = s3;
    } else {
        j["step3"] = nullptr;
    }
    j["window"] = to_json(r.window);
    j["window_ok"] = r.window.ok;
    j["steps45"] = {{"degree_at_balanced_twist", r.steps45.degree_at_balanced_twist},
                    {"twist_ledger", r.steps45.twist_ledger},
                    {"ok", r.steps45.ok}};
    if (r.hk) {
        j["hk"] = {{"phi", r.hk->phi},
                   {"formula", r.hk->formula ? Json(rational_string(*r.hk->formula)) : Json(nullptr)},
                   {"match", r.hk->match ? Json(*r.hk->match) : Json(nullptr)}};
    } else {
        j["hk"] = nullptr;
    }
    j["overall"] = r.overall ? Json(*r.overall) : Json(nullptr);
    return j;
}

Json to_json(const DoubleCoverResult& r) {
    return {{"curve_degree", r.curve_degree},
            {"shift", r.shift},
            {"window", to_json(r.window)},
            {"window_ok", r.window.ok},
            {"balanced_degree", r.balanced_degree},
            {"sections_at_three", r.sections_at_three},
            {"ok", r.ok}};
}

Json to_json(const Char2Result& r) {
    return {{"q2_at_3", r.q2_at_3},
            {"q2_at_2", r.q2_at_2},
            {"q4_at_6", r.q4_at_6},
            {"q8_vs_q4", to_json(r.q8_vs_q4)},
            {"window_ok", r.q8_vs_q4.ok},
            {"ok", r.ok}};
}

}  // namespace frobper
