#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "conditions.hpp"
#include "documents.hpp"
#include "geometry.hpp"
#include "search.hpp"
#include "systems.hpp"

namespace lvmb {

using ReportJson = nlohmann::ordered_json;

inline std::string to_string(BasisMode mode) {
    return mode == BasisMode::Strict ? "strict" : "general";
}

inline std::string to_string(LvmVerdictKind kind) {
    switch (kind) {
        case LvmVerdictKind::IsLvmType: return "is-lvm-type";
        case LvmVerdictKind::NotLvmType: return "not-lvm-type";
        case LvmVerdictKind::Inconclusive: return "inconclusive";
    }
    return "?";
}

inline ReportJson gaussian_json(const GaussianRational& z) {
    return ReportJson::array({to_string(z.re), to_string(z.im)});
}

inline ReportJson point_json(const std::vector<Rational>& p) {
    ReportJson out = ReportJson::array();
    for (const auto& c : p) out.push_back(to_string(c));
    return out;
}

// cmd check: combinatorial report plus the admissibility line.
inline ReportJson render_check(const SystemReport& rep, bool siegel_ok,
                               const WeakHyperbolicityResult& wh) {
    ReportJson j;
    j["good"] = rep.good;
    j["studyable"] = rep.studyable;
    j["per"] = rep.per;
    j["peur"] = rep.peur;
    j["imbrication"] = rep.imbrication;
    j["k"] = rep.k;
    j["indispensables"] = rep.indispensables;
    j["siegel"] = siegel_ok;
    j["weak_hyperbolicity"] = wh.ok;
    j["admissible"] = siegel_ok && wh.ok;
    ReportJson wit = ReportJson::object();
    if (rep.studyable_witness) wit["studyable"] = *rep.studyable_witness;
    if (rep.peur_witness) {
        wit["peur"] = {{"part", rep.peur_witness->sigma},
                       {"index", rep.peur_witness->k},
                       {"replacers", rep.peur_witness->replacers}};
    }
    if (rep.imbrication_witness)
        wit["imbrication"] = {rep.imbrication_witness->first,
                              rep.imbrication_witness->second};
    if (wh.witness) wit["weak_hyperbolicity"] = *wh.witness;
    if (!wit.empty()) j["witnesses"] = std::move(wit);
    return j;
}

inline ReportJson render_classification(const Classification& cls,
                                        const ConditionKWitness& ck) {
    ReportJson j;
    j["m"] = cls.m;
    j["n"] = cls.n;
    j["k"] = cls.k;
    j["condition_k"] = cls.condition_k;
    j["condition_k_scale"] = ck.scale.get_str();
    j["outcome"] = to_string(cls.outcome);
    j["notes"] = cls.notes;
    return j;
}

inline ReportJson render_condition_h(const ConditionHReport& rep,
                                     const std::optional<PBracket>& p) {
    ReportJson j;
    j["mode"] = to_string(rep.mode);
    j["basis"] = rep.basis.vectors;
    j["det"] = rep.basis.det.get_str();
    j["holds"] = rep.holds;
    j["contracting"] = rep.contracting_js;
    j["l"] = rep.l;
    j["cover_rank"] = rep.cover_rank;
    ReportJson table = ReportJson::array();
    for (size_t ji = 0; ji < rep.witnesses.size(); ++ji) {
        ReportJson row = ReportJson::array();
        for (const auto& wit : rep.witnesses[ji])
            row.push_back({{"r", wit.r},
                           {"w", gaussian_json(wit.w)},
                           {"gamma_modulus", gamma_modulus_float(wit.w)}});
        table.push_back(std::move(row));
    }
    j["witnesses"] = std::move(table);
    if (p) j["p"] = {{"lower", p->lower}, {"upper", p->upper}};
    return j;
}

inline ReportJson render_lvm(const LvmVerdict& v) {
    ReportJson j;
    j["verdict"] = to_string(v.verdict);
    j["detail"] = v.detail;
    j["admissible"] = v.admissible;
    j["attempts_used"] = v.attempts_used;
    if (v.witness_point) j["witness_point"] = point_json(*v.witness_point);
    if (v.mismatch) j["mismatch"] = *v.mismatch;
    ReportJson prime = ReportJson::array();
    for (const auto& p : v.eps_prime) prime.push_back(p);
    j["hull_family"] = std::move(prime);
    return j;
}

inline ReportJson render_necessary_scan(const NecessaryScanResult& res) {
    ReportJson j;
    j["passed"] = res.passed;
    if (res.witness) {
        ReportJson parts = ReportJson::array();
        for (const auto& p : *res.witness) parts.push_back(p);
        j["empty_subfamily"] = std::move(parts);
    }
    return j;
}

inline ReportJson render_mine(const MineResult& res) {
    ReportJson j;
    j["found"] = res.found.has_value();
    j["trials"] = res.trials;
    j["exhausted"] = res.exhausted;
    return j;
}

inline ReportJson render_basis_mine(const BasisMineResult& res) {
    ReportJson j;
    j["found"] = res.found.has_value();
    j["trials"] = res.trials;
    j["exhausted"] = res.exhausted;
    if (res.found) {
        j["basis"] = res.found->vectors;
        j["det"] = res.found->det.get_str();
        j["mode"] = to_string(res.found->mode);
    }
    if (res.report) j["report"] = render_condition_h(*res.report, std::nullopt);
    return j;
}

inline ReportJson render_homotopy(const HomotopyScanResult& res) {
    ReportJson j;
    j["all_good"] = res.all_good;
    ReportJson samples = ReportJson::array();
    for (const auto& s : res.samples)
        samples.push_back({{"s", to_string(s.s)},
                           {"studyable", s.studyable},
                           {"imbricated", s.imbricated},
                           {"good", s.good}});
    j["samples"] = std::move(samples);
    return j;
}

}  // namespace lvmb
