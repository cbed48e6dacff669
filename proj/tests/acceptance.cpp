// Acceptance suite: runs every cross-route identity at full depth and prints
// one pass/fail line per criterion. Exits nonzero if any criterion fails.

#include "bno/verify.hpp"

#include <cstdio>
#include <map>
#include <string>
#include <vector>

namespace {

struct Criterion {
    std::string name;
    std::vector<std::string> checks;
};

const std::vector<Criterion> kCriteria = {
    {"1-worked-example-reproduction",
     {"worked-standard-bbdbbdbb", "worked-p-da3", "worked-p-ad", "worked-omega-da2",
      "worked-omega-da3", "worked-contraction-multiset-aadd", "worked-count-adad",
      "worked-count-aadd"}},
    {"2-erratum-checks",
     {"erratum-omega-n4-k2-derived", "erratum-omega-n4-k2-printed-value-differs",
      "erratum-omega-n4-k2-unit-specialization", "erratum-omega-n4-k2-p-specialization",
      "erratum-closed-form-enumeration-v1-u2", "erratum-closed-form-inconsistent-v1-u2",
      "erratum-rc-adad-total-weight", "erratum-rc-adad-constant-term",
      "erratum-rc-adad-published-count-differs"}},
    {"3-three-route-stirling-agreement",
     {"stirling-rec-vs-docagne", "stirling-rec-vs-omega-specialized", "stirling-rec-vs-knm-sum"}},
    {"4-classical-collapses",
     {"collapse-p1-stirling2", "collapse-p0-bell", "collapse-omega-null",
      "collapse-omega-adjacent-chain"}},
    {"5-egf-verification",
     {"egf-spk-matches-recurrence", "egf-sxy-matches-recurrence", "egf-sxy-p1-classical"}},
    {"6-bijection-suite",
     {"bijection-lemma1-round-trip", "bijection-lemma2-round-trip",
      "bijection-statistic-transport", "bijection-joint-distribution",
      "bijection-cardinality-fnk"}},
    {"7-ordering-consistency",
     {"routes-omega-p-specialization", "routes-p1-standard", "routes-noncrossing-filter",
      "routes-number-power-recurrence"}},
};

} // namespace

int main() {
    bno::VerifyOptions options; // max_n = 8, order = 10: the full stated depths
    std::vector<bno::CheckResult> results = bno::run_verification(options);

    std::map<std::string, const bno::CheckResult*> by_name;
    for (const bno::CheckResult& r : results) by_name[r.name] = &r;

    bool all_ok = true;
    for (const Criterion& criterion : kCriteria) {
        bool ok = true;
        std::string failure;
        for (const std::string& check : criterion.checks) {
            auto it = by_name.find(check);
            if (it == by_name.end()) {
                ok = false;
                failure = check + " missing";
                break;
            }
            if (!it->second->pass) {
                ok = false;
                failure = check;
                if (!it->second->detail.empty()) failure += ": " + it->second->detail;
                break;
            }
        }
        std::printf("%s criterion %s%s%s\n", ok ? "PASS" : "FAIL", criterion.name.c_str(),
                    ok ? "" : " -- ", failure.c_str());
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
