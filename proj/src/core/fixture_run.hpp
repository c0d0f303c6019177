#pragma once

#include "fixtures.hpp"
#include "report_json.hpp"

namespace lvmb {

struct FixtureRunResult {
    bool ok = true;
    ReportJson report;
};

namespace detail {

template <typename T>
inline void expect_field(FixtureRunResult& res, const char* field, const T& expected,
                         const T& got) {
    bool ok = expected == got;
    res.report["checks"].push_back(
        {{"field", field}, {"expected", expected}, {"got", got}, {"ok", ok}});
    res.ok = res.ok && ok;
}

}  // namespace detail

// Re-runs the whole pipeline on one bundled example and diffs the results
// against its pinned expectations.
inline FixtureRunResult run_fixture(const Fixture& f) {
    FixtureRunResult res;
    res.report["name"] = f.name;
    res.report["checks"] = ReportJson::array();

    SystemReport rep = check_system(f.eps, f.lam);
    detail::expect_field(res, "good", f.expect.good, rep.good);
    detail::expect_field(res, "k", f.expect.k, rep.k);

    if (f.basis) {
        ConditionHReport h = condition_h(*f.basis, f.eps, f.lam);
        detail::expect_field(res, "contracting", f.expect.contracting, h.contracting_js);
        if (f.expect.p) {
            Classification cls = classify(f.eps, f.lam);
            PBracket p = p_estimate(h, cls);
            detail::expect_field(res, "p",
                                 std::vector<int>{f.expect.p->lower, f.expect.p->upper},
                                 std::vector<int>{p.lower, p.upper});
        }
    }
    if (f.expect.outcome) {
        Classification cls = classify(f.eps, f.lam);
        detail::expect_field(res, "outcome", to_string(*f.expect.outcome),
                             to_string(cls.outcome));
    }
    if (f.expect.lvm) {
        LvmVerdict v = lvm_recognize(f.eps, f.lam);
        detail::expect_field(res, "lvm", to_string(*f.expect.lvm),
                             to_string(v.verdict));
    }
    res.report["ok"] = res.ok;
    return res;
}

}  // namespace lvmb
