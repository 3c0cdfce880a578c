#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "zetalab/claims.hpp"

namespace zetalab::claims {
namespace {

using ordered_json = nlohmann::ordered_json;

double finite_or_throw(double v, const char* what) {
    if (!std::isfinite(v))
        throw DomainError(std::string("report: non-finite value for ") + what);
    return v;
}

ordered_json complex_json(const Complex& z) {
    return {{"re", finite_or_throw(z.real(), "re")},
            {"im", finite_or_throw(z.imag(), "im")}};
}

}  // namespace

std::string render_report(const std::vector<ClaimReport>& reports,
                          const Config& cfg) {
    std::vector<const ClaimReport*> ordered;
    ordered.reserve(reports.size());
    for (const auto& r : reports) ordered.push_back(&r);
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const ClaimReport* a, const ClaimReport* b) {
                         return static_cast<int>(a->claim) <
                                static_cast<int>(b->claim);
                     });

    ordered_json doc;
    doc["version"] = "1.0.0";
    doc["config"] = {{"seed", cfg.seed},
                     {"precision_bits", cfg.precision_bits},
                     {"tol", cfg.tol}};
    doc["claims"] = ordered_json::array();
    for (const ClaimReport* r : ordered) {
        ordered_json c;
        c["claim"] = info(r->claim).name;
        c["points"] = ordered_json::array();
        for (const auto& p : r->points) {
            ordered_json pj;
            pj["s"] = complex_json(p.s);
            pj["lhs"] = complex_json(p.lhs);
            pj["rhs"] = complex_json(p.rhs);
            pj["abs_err"] = finite_or_throw(p.abs_err, "abs_err");
            pj["rel_err"] = finite_or_throw(p.rel_err, "rel_err");
            pj["err_budget"] = finite_or_throw(p.err_budget, "err_budget");
            c["points"].push_back(std::move(pj));
        }
        c["verdict"] = r->verdict;
        c["config"] = {{"seed", r->config.seed},
                       {"precision_bits", r->config.precision_bits},
                       {"tolerances", {{"tol", r->config.tol}}}};
        c["variants"] = ordered_json::array();
        for (const auto& v : r->variants) {
            c["variants"].push_back({{"label", v.label},
                                     {"verdict", v.verdict},
                                     {"max_abs_err", finite_or_throw(
                                                         v.max_abs_err,
                                                         "max_abs_err")}});
        }
        c["notes"] = r->notes;
        doc["claims"].push_back(std::move(c));
    }
    return doc.dump(2) + "\n";
}

}  // namespace zetalab::claims
