// JSON serialization of certificates, classifications and the oracle
// catalog. Kept out of the core headers so the library proper has no
// dependency on the vendored json library.
#pragma once

#include <geosaddle/certify.hpp>
#include <geosaddle/oracle.hpp>

#include <json.hpp>

namespace geosaddle {

using json = nlohmann::json;

inline json path_to_json(const ParametricPath& path,
                         const ExtremumReport& report)
{
    json j;
    j["kind"] = path.describe();
    j["u"] = {path.u().x, path.u().y};
    j["v"] = {path.v().x, path.v().y};
    j["delta"] = path.halfwidth();
    j["phi_lowest_term"] = {{"degree", report.lowest_degree},
                            {"coeff_sign", report.coeff_sign}};
    return j;
}

inline json certificate_to_json(const SaddleCertificate& cert,
                                std::optional<double> gradient_norm)
{
    json j;
    j["point"] = {cert.point.x, cert.point.y};
    j["strict"] = cert.strict;
    j["grade"] = to_string(cert.grade);
    j["path_max"] = path_to_json(cert.path_max, cert.report_max);
    j["path_min"] = path_to_json(cert.path_min, cert.report_min);
    j["cross"] = cert.cross;
    if (gradient_norm)
        j["gradient_norm"] = *gradient_norm;
    else
        j["gradient_norm"] = nullptr;
    return j;
}

inline json classification_to_json(const Field& f, Vec2 p,
                                   const Classification& result)
{
    json j;
    j["point"] = {p.x, p.y};
    j["verdict"] = to_string(result.verdict);
    if (result.discriminant_value)
        j["discriminant"] = *result.discriminant_value;
    if (result.gradient)
        j["gradient"] = {result.gradient->x, result.gradient->y};
    if (result.certificate) {
        std::optional<double> gn;
        if (auto jet = f.jet(p))
            gn = jet->gradient_norm();
        j["certificate"] = certificate_to_json(*result.certificate, gn);
    }
    if (result.refutation) {
        j["refutation"] = {{"reason", "sign semidefinite neighborhood"},
                           {"grade", to_string(*result.refutation_grade)}};
    }
    if (result.classical) {
        j["classical_evidence"] = {{"radii", result.classical->radii}};
    }
    if (result.verdict == Verdict::Unknown) {
        j["search"] = {{"lines_tried", result.search.lines_tried},
                       {"parabolas_tried", result.search.parabolas_tried},
                       {"refined_directions",
                        result.search.refined_directions},
                       {"strict_max_found", result.search.strict_max_found},
                       {"strict_min_found", result.search.strict_min_found}};
    }
    return j;
}

inline json catalog_entry_to_json(const CatalogEntry& entry)
{
    json j;
    j["name"] = entry.name;
    j["expr"] = entry.display;
    j["point"] = {entry.point.x, entry.point.y};
    j["expected"] = to_string(entry.expected);
    j["unknown_allowed"] = entry.allow_inconclusive;
    return j;
}

inline json catalog_to_json()
{
    json arr = json::array();
    for (const CatalogEntry& entry : catalog())
        arr.push_back(catalog_entry_to_json(entry));
    return arr;
}

/// Structural check of the stable certificate schema.
inline bool certificate_json_valid(const json& j)
{
    auto path_ok = [](const json& pj) {
        return pj.contains("kind") && pj["kind"].is_string()
               && pj.contains("u") && pj["u"].is_array() && pj["u"].size() == 2
               && pj.contains("v") && pj["v"].is_array() && pj["v"].size() == 2
               && pj.contains("delta") && pj["delta"].is_number()
               && pj.contains("phi_lowest_term")
               && pj["phi_lowest_term"].contains("degree")
               && pj["phi_lowest_term"].contains("coeff_sign");
    };
    return j.contains("point") && j["point"].is_array()
           && j["point"].size() == 2 && j.contains("strict")
           && j["strict"].is_boolean() && j.contains("grade")
           && (j["grade"] == "exact" || j["grade"] == "sampled")
           && j.contains("path_max") && path_ok(j["path_max"])
           && j.contains("path_min") && path_ok(j["path_min"])
           && j.contains("cross") && j["cross"].is_number()
           && j.contains("gradient_norm")
           && (j["gradient_norm"].is_number() || j["gradient_norm"].is_null());
}

} // namespace geosaddle
