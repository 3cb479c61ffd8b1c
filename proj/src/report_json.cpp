#include "qtf/report_json.hpp"
#include "qtf/errors.hpp"

namespace qtf {

json vmo_json(int v) { return v == kInfiniteVmo ? json(nullptr) : json(v); }

json to_json(const FilterReport& r) {
    return {{"sr", r.sr},
            {"vmo_ua", vmo_json(r.vmo_ua)},
            {"vm_ceiling", vmo_json(r.vm_ceiling)},
            {"basic_sum_rule", r.basic_sum_rule},
            {"tightness_condition", r.tightness_condition},
            {"predicted_s", r.predicted_s}};
}

json to_json(const VerificationReport& r) {
    json vmos = json::array();
    for (int v : r.per_filter_vmo) vmos.push_back(vmo_json(v));
    return {{"passes", r.passes},
            {"residual", to_json(r.residual)},
            {"per_filter_vmo", vmos},
            {"min_vmo", vmo_json(r.min_vmo)},
            {"sr", r.sr},
            {"vm_ceiling", vmo_json(r.vm_ceiling)},
            {"ceiling_respected", r.ceiling_respected}};
}

json to_json(const SmoothnessEstimate& e) {
    json j = {{"m_used", e.m_used},
              {"rho_m", e.rho_m},
              {"sm2", e.sm2},
              {"method", method_name(e.method)},
              {"iterations", e.iterations},
              {"stability_gap", e.stability_gap},
              {"exact_span", e.exact_span},
              {"phi_in_L2_sufficient", e.sm2 > 0}};
    j["cross_rho_m"] = e.cross_rho_m ? json(*e.cross_rho_m) : json(nullptr);
    return j;
}

json to_json(const HermitianFactorization& f) {
    json kappa = json::array();
    for (auto& k : f.kappa) kappa.push_back(to_string(k));
    json terms = json::array();
    for (auto& t : f.terms) {
        json entries = json::array();
        for (auto& e : t.entries) entries.push_back(to_json(e));
        terms.push_back({{"scale_sq", to_string(t.scale_sq)}, {"sign", t.sign}, {"entries", entries}});
    }
    return {{"kappa", kappa}, {"terms", terms}};
}

json to_json(const ASolution& s) {
    json mus = json::array();
    for (auto& mu : s.mus) mus.push_back(mu);
    json blocks = json::array();
    for (auto& [key, A] : s.A) blocks.push_back({{"mu", key.first}, {"nu", key.second}, {"A", to_json(A)}});
    return {{"m", s.m}, {"mus", mus}, {"blocks", blocks}, {"support_box", {{"lo", s.box.lo}, {"hi", s.box.hi}}},
            {"unknowns", s.unknowns}};
}

json to_json(const TransformTree& t) {
    json levels = json::array();
    for (auto& bands : t.details) {
        json l = json::array();
        for (auto& b : bands) l.push_back({{"scale_sq", to_string(b.scale_sq)}, {"sign", b.sign}, {"coeffs", to_json(b.coeffs)}});
        levels.push_back(l);
    }
    return {{"levels", t.levels()}, {"approx", to_json(t.approx)}, {"details", levels}};
}

TransformTree tree_from_json(const json& j) {
    auto bad = [](const std::string& path, const std::string& what) {
        throw Error(Errc::SchemaError, path + ": " + what);
    };
    if (!j.is_object() || !j.contains("approx") || !j.contains("details")) bad("/", "expected {approx, details}");
    TransformTree t;
    t.approx = laurent_from_json(j["approx"], "/approx");
    const json& d = j["details"];
    if (!d.is_array()) bad("/details", "expected an array of levels");
    for (std::size_t l = 0; l < d.size(); ++l) {
        std::string lp = "/details/" + std::to_string(l);
        if (!d[l].is_array()) bad(lp, "expected an array of bands");
        std::vector<DetailBand> bands;
        for (std::size_t i = 0; i < d[l].size(); ++i) {
            std::string bp = lp + "/" + std::to_string(i);
            const json& b = d[l][i];
            if (!b.is_object() || !b.contains("coeffs")) bad(bp, "expected {scale_sq, sign, coeffs}");
            DetailBand band;
            band.scale_sq = b.contains("scale_sq") ? parse_rational(b["scale_sq"].get<std::string>()) : Rational(1);
            band.sign = b.value("sign", 1);
            band.coeffs = laurent_from_json(b["coeffs"], bp + "/coeffs");
            bands.push_back(std::move(band));
        }
        t.details.push_back(std::move(bands));
    }
    return t;
}

} // namespace qtf
