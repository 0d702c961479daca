#include "qgr/report.hpp"

#include "json.hpp"

namespace qgr {

std::string report_to_json(const Report& report) {
    nlohmann::ordered_json doc;
    doc["suite"] = report.suite;
    doc["ctx"] = {{"k", report.k}, {"n", report.n}};
    doc["checked"] = report.checked;
    auto failures = nlohmann::ordered_json::array();
    for (const auto& f : report.failures) failures.push_back({{"where", f.where}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    doc["failures"] = std::move(failures);
    if (report.max_deviation) doc["max_deviation"] = *report.max_deviation;
    if (report.seed) doc["seed"] = *report.seed;
    return doc.dump();
}

}  // namespace qgr
