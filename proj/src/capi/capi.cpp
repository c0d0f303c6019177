#include <lvmb/lvmb.h>

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "core/documents.hpp"
#include "core/fixture_run.hpp"
#include "core/report_json.hpp"

using namespace lvmb;

struct lvmb_system {
    SystemDocument doc;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_err(char** err, const std::string& msg) {
    if (err) *err = dup_string(msg);
}

void set_report(char** report, const ReportJson& j) {
    if (report) *report = dup_string(j.dump(2) + "\n");
}

// Runs the body, translating exceptions into LVMB_INPUT_ERROR.
template <typename Fn>
int guarded(char** err, Fn&& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return LVMB_INPUT_ERROR;
    }
}

IntegerBasis basis_for(const lvmb_system* sys, const long* basis, size_t basis_len,
                       int strict_mode) {
    BasisMode mode = strict_mode ? BasisMode::Strict : BasisMode::General;
    size_t m = sys->doc.lam.m;
    if (basis) {
        if (basis_len != m * m)
            throw std::invalid_argument("basis needs " + std::to_string(m * m) +
                                        " entries, got " + std::to_string(basis_len));
        std::vector<std::vector<long>> rows(m, std::vector<long>(m));
        for (size_t r = 0; r < m; ++r)
            for (size_t c = 0; c < m; ++c) rows[r][c] = basis[r * m + c];
        return make_integer_basis(rows, mode);
    }
    if (!sys->doc.basis)
        throw std::invalid_argument("no basis given and none stored in the document");
    return make_integer_basis(*sys->doc.basis, mode);
}

}  // namespace

extern "C" {

const char* lvmb_version(void) { return "1.0.0"; }

lvmb_system* lvmb_system_load_file(const char* path, char** err) {
    if (!path) {
        set_err(err, "null path");
        return nullptr;
    }
    try {
        return new lvmb_system{load_document(path)};
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return nullptr;
    }
}

lvmb_system* lvmb_system_load_json(const char* text, char** err) {
    if (!text) {
        set_err(err, "null document text");
        return nullptr;
    }
    try {
        return new lvmb_system{document_from_json(text)};
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return nullptr;
    }
}

void lvmb_system_free(lvmb_system* sys) { delete sys; }

char* lvmb_system_json(const lvmb_system* sys) {
    if (!sys) return nullptr;
    return dup_string(document_to_json(sys->doc));
}

int lvmb_check(const lvmb_system* sys, char** report, char** err) {
    return guarded(err, [&] {
        SystemReport rep = check_system(sys->doc.eps, sys->doc.lam);
        bool sg = siegel(sys->doc.lam);
        WeakHyperbolicityResult wh = weak_hyperbolicity(sys->doc.lam);
        set_report(report, render_check(rep, sg, wh));
        return rep.good ? LVMB_OK : LVMB_NEGATIVE;
    });
}

int lvmb_classify(const lvmb_system* sys, char** report, char** err) {
    return guarded(err, [&] {
        SystemReport rep = check_system(sys->doc.eps, sys->doc.lam);
        if (!rep.good) {
            ReportJson j;
            j["error"] = "not a good system, refusing to classify";
            j["check"] = render_check(rep, siegel(sys->doc.lam),
                                      weak_hyperbolicity(sys->doc.lam));
            set_report(report, j);
            return LVMB_NEGATIVE;
        }
        Classification cls = classify(sys->doc.eps, sys->doc.lam);
        ConditionKWitness ck = condition_k(sys->doc.lam);
        set_report(report, render_classification(cls, ck));
        return LVMB_OK;
    });
}

int lvmb_cond_h(const lvmb_system* sys, const long* basis, size_t basis_len,
                int strict_mode, char** report, char** err) {
    return guarded(err, [&] {
        IntegerBasis b = basis_for(sys, basis, basis_len, strict_mode);
        ConditionHReport rep = condition_h(b, sys->doc.eps, sys->doc.lam);
        std::optional<PBracket> p;
        if (rep.holds)
            p = p_estimate(rep, classify(sys->doc.eps, sys->doc.lam));
        set_report(report, render_condition_h(rep, p));
        return rep.holds ? LVMB_OK : LVMB_NEGATIVE;
    });
}

int lvmb_lvm(const lvmb_system* sys, uint64_t seed, int max_attempts,
             int necessary_only, char** report, char** err) {
    return guarded(err, [&] {
        if (necessary_only) {
            NecessaryScanResult res = lvm_necessary_scan(sys->doc.eps, sys->doc.lam);
            set_report(report, render_necessary_scan(res));
            return res.passed ? LVMB_OK : LVMB_NEGATIVE;
        }
        LvmOptions opt;
        opt.seed = seed;
        if (max_attempts >= 0) opt.max_attempts = max_attempts;
        LvmVerdict v = lvm_recognize(sys->doc.eps, sys->doc.lam, opt);
        set_report(report, render_lvm(v));
        switch (v.verdict) {
            case LvmVerdictKind::IsLvmType: return LVMB_OK;
            case LvmVerdictKind::NotLvmType: return LVMB_NEGATIVE;
            case LvmVerdictKind::Inconclusive: return LVMB_INCONCLUSIVE;
        }
        return LVMB_INCONCLUSIVE;
    });
}

int lvmb_mine_good_system(const lvmb_system* sys, uint64_t seed,
                          uint64_t max_trials, char** found, char** report,
                          char** err) {
    return guarded(err, [&] {
        SearchParams params;
        params.seed = seed;
        if (max_trials > 0) params.max_trials = max_trials;
        MineResult res = mine_good_system(sys->doc.eps, params);
        set_report(report, render_mine(res));
        if (!res.found) return LVMB_INCONCLUSIVE;
        if (found) {
            SystemDocument out;
            out.eps = sys->doc.eps;
            out.lam = *res.found;
            out.seed = seed;
            *found = dup_string(document_to_json(out));
        }
        return LVMB_OK;
    });
}

int lvmb_mine_basis(const lvmb_system* sys, uint64_t seed, uint64_t max_trials,
                    int strict_mode, char** report, char** err) {
    return guarded(err, [&] {
        SearchParams params;
        params.seed = seed;
        if (max_trials > 0) params.max_trials = max_trials;
        params.basis_mode = strict_mode ? BasisMode::Strict : BasisMode::General;
        BasisMineResult res = mine_condition_h_basis(sys->doc.eps, sys->doc.lam, params);
        set_report(report, render_basis_mine(res));
        return res.found ? LVMB_OK : LVMB_INCONCLUSIVE;
    });
}

int lvmb_homotopy(const lvmb_system* sys_a, const lvmb_system* sys_b, long steps,
                  char** report, char** err) {
    return guarded(err, [&] {
        if (!(sys_a->doc.eps == sys_b->doc.eps))
            throw std::invalid_argument("endpoints disagree on the fundamental set");
        if (steps < 2) throw std::invalid_argument("homotopy scan needs steps >= 2");
        HomotopyScanResult res = homotopy_scan(sys_a->doc.eps, sys_a->doc.lam,
                                               sys_b->doc.lam,
                                               static_cast<size_t>(steps));
        set_report(report, render_homotopy(res));
        return res.all_good ? LVMB_OK : LVMB_NEGATIVE;
    });
}

size_t lvmb_fixture_count(void) { return fixtures().size(); }

const char* lvmb_fixture_name(size_t index) {
    const auto& fx = fixtures();
    if (index >= fx.size()) return nullptr;
    return fx[index].name.c_str();
}

char* lvmb_fixture_json(const char* name, char** err) {
    if (!name) {
        set_err(err, "null fixture name");
        return nullptr;
    }
    try {
        return dup_string(document_to_json(fixture_document(fixture(name))));
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return nullptr;
    }
}

int lvmb_fixture_run(const char* name, char** report, char** err) {
    return guarded(err, [&] {
        if (!name) throw std::invalid_argument("null fixture name");
        FixtureRunResult res = run_fixture(fixture(name));
        set_report(report, res.report);
        return res.ok ? LVMB_OK : LVMB_NEGATIVE;
    });
}

void lvmb_string_free(char* s) { std::free(s); }

}  // extern "C"
