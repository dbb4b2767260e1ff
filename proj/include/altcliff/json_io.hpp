#pragma once

// JSON serialization for CLI reports. Rationals are strings "p/q", polynomials
// are arrays of rational strings, constant coefficient first.

#include "altcliff/alt_clifford.hpp"
#include "altcliff/invariants.hpp"

#include <json.hpp>

#include <string>

namespace altcliff {

using json = nlohmann::json;

inline json rat_json(const Rat& r) { return rat_to_string(r); }

inline json poly_json(const Poly& p) {
    json a = json::array();
    for (int e = 0; e <= p.degree(); ++e) a.push_back(rat_to_string(p.coeff(e)));
    if (p.is_zero()) a.push_back("0");
    return a;
}

template <class R>
json element_json(const Vec<R>& x);

template <>
inline json element_json<Rat>(const VecR& x) {
    json a = json::array();
    for (Eigen::Index i = 0; i < x.size(); ++i) a.push_back(rat_json(x[i]));
    return a;
}

template <>
inline json element_json<Poly>(const Vec<Poly>& x) {
    json a = json::array();
    for (Eigen::Index i = 0; i < x.size(); ++i) a.push_back(poly_json(x[i]));
    return a;
}

inline json form_json(const QuadraticForm& q) {
    json j;
    j["dim"] = q.dim();
    j["spec"] = format_form(q);
    return j;
}

template <class R>
json table_json(const StructureAlgebra<R>& A) {
    json rows = json::array();
    for (int i = 0; i < A.rank; ++i)
        for (int j = 0; j < A.rank; ++j)
            for (int k = 0; k < A.rank; ++k)
                if (!scalar_is_zero_r(A.gamma(i, j, k))) {
                    json row;
                    row["i"] = i;
                    row["j"] = j;
                    row["k"] = k;
                    row["value"] = format_scalar(A.gamma(i, j, k));
                    rows.push_back(row);
                }
    return rows;
}

inline json model_json(const AltCliffordModel& m) {
    json j;
    j["alphas"] = {rat_json(m.alphas[0]), rat_json(m.alphas[1]), rat_json(m.alphas[2])};
    j["d0"] = rat_json(m.d0);
    j["gamma"] = poly_json(m.gamma);
    j["gamma_display"] = m.gamma.to_string();
    j["labels"] = m.octonion.labels;
    j["generators"]["g_u"] = element_json<Poly>(m.g_u);
    j["generators"]["g_v"] = element_json<Poly>(m.g_v);
    j["generators"]["g_w"] = element_json<Poly>(m.g_w);
    j["z"] = element_json<Poly>(m.z_elem);
    json bc = json::array();
    for (int r = 0; r < 3; ++r) {
        json row = json::array();
        for (int c = 0; c < 3; ++c) row.push_back(rat_json(m.basis_change(r, c)));
        bc.push_back(row);
    }
    j["basis_change"] = bc;
    j["table"] = table_json(m.octonion);
    return j;
}

inline json presentation_json(const PresentationReport& rep) {
    json checks = json::array();
    for (const auto& it : rep.items) {
        json c;
        c["name"] = it.name;
        c["pass"] = it.pass;
        if (!it.detail.empty()) c["witness"] = it.detail;
        checks.push_back(c);
    }
    json j;
    j["checks"] = checks;
    j["pass"] = rep.ok();
    return j;
}

inline json check_report_json(const CheckReport& rep) {
    json j;
    j["checks_run"] = rep.checks_run;
    j["seed"] = rep.seed;
    j["violations"] = rep.violations;
    j["pass"] = rep.ok();
    return j;
}

inline json quotient_json(const QuotientClassification& c) {
    json j;
    j["kind"] = c.kind == QuotientClassification::Kind::Octonion ? "octonion" : "quaternion-onto";
    j["alpha1"] = rat_json(c.alpha1);
    j["alpha2"] = rat_json(c.alpha2);
    j["gamma_theta"] = rat_json(c.gamma_theta);
    j["division"] = c.division;
    if (c.kind == QuotientClassification::Kind::QuaternionOnto) {
        j["radical_indices"] = c.radical_indices;
        j["radical_squares_zero"] = c.radical_squares_zero;
        j["quotient_matches_quaternion"] = c.quotient_matches_quaternion;
    }
    return j;
}

inline json place_set_json(const std::set<Place>& places) {
    json a = json::array();
    for (Place v : places) a.push_back(v == kInfinitePlace ? json("inf") : json(v));
    return a;
}

inline json square_class_json(const SquareClass& c) {
    json j;
    j["representative"] = rat_json(c.representative());
    j["trivial"] = c.is_trivial();
    return j;
}

inline json symbol_sum_json(const SymbolSum& s) {
    json terms = json::array();
    for (const auto& t : s.terms) {
        json term = json::array();
        for (const auto& cls : t) term.push_back(rat_json(cls.representative()));
        terms.push_back(term);
    }
    json j;
    j["degree"] = s.degree;
    j["terms"] = terms;
    return j;
}

inline json sw_json(const StiefelWhitney& sw) {
    json j;
    j["w1"] = square_class_json(sw.w1);
    j["w2"] = symbol_sum_json(sw.w2);
    j["w2_ramified"] = place_set_json(sw.w2_local.ramified);
    j["w3"] = symbol_sum_json(sw.w3);
    j["w3_real_bit"] = sw.w3_real.real_bit;
    return j;
}

inline json form_invariants_json(const FormInvariants& inv) {
    json j;
    j["dim"] = inv.dim;
    j["det"] = square_class_json(inv.det);
    j["hasse_minus"] = place_set_json(inv.hasse_minus);
    j["signature"] = {inv.signature.first, inv.signature.second};
    return j;
}

inline json residues_json(const std::vector<Residue>& res) {
    json a = json::array();
    for (const auto& r : res) {
        json j;
        j["locus"] = poly_json(r.locus);
        j["locus_display"] = r.locus.to_string();
        j["symbol"] = {rat_json(r.symbol_a), rat_json(r.symbol_b)};
        j["field"] = r.over_quadratic ? "Q(sqrt(" + rat_to_string(r.disc) + "))" : "Q";
        j["split"] = r.split;
        a.push_back(j);
    }
    return a;
}

}  // namespace altcliff
