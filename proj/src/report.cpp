#include "permod/report.hpp"

#include <sstream>

#include <json.hpp>

#include "permod/error.hpp"

namespace permod {

using nlohmann::json;
using nlohmann::ordered_json;

bool Report::pass() const {
    for (const ReportItem& item : items)
        if (item.residual > tolerance) return false;
    return true;
}

void Report::add(const std::string& name, double residual, long long instances,
                 const std::string& note) {
    items.push_back({name, residual, instances, note});
}

std::string Report::to_text() const {
    std::ostringstream out;
    out.precision(3);
    out << std::scientific;
    out << "permod " << command << "\n";
    for (const auto& [key, value] : inputs) out << "  " << key << " = " << value << "\n";
    for (const std::string& line : lines) out << line << "\n";
    for (const ReportItem& item : items) {
        out << "  " << (item.residual <= tolerance ? "ok  " : "FAIL") << "  " << item.name
            << "  residual " << item.residual << "  instances " << item.instances;
        if (!item.note.empty()) out << "  (" << item.note << ")";
        out << "\n";
    }
    out << (pass() ? "PASS" : "FAIL") << " (tolerance " << tolerance << ")\n";
    return out.str();
}

std::string Report::to_structured() const {
    ordered_json doc;
    doc["command"] = command;
    ordered_json in;
    for (const auto& [key, value] : inputs) in[key] = value;
    doc["inputs"] = in;
    ordered_json residuals, instances;
    for (const ReportItem& item : items) {
        residuals[item.name] = item.residual;
        instances[item.name] = item.instances;
    }
    doc["residuals"] = residuals;
    doc["instances"] = instances;
    doc["pass"] = pass();
    return doc.dump(2) + "\n";
}

Report parse_structured(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(std::string("report parse error: ") + e.what());
    }
    Report rep;
    rep.command = doc.at("command").get<std::string>();
    for (auto it = doc.at("inputs").begin(); it != doc.at("inputs").end(); ++it)
        rep.inputs.emplace_back(it.key(), it.value().get<std::string>());
    const ordered_json& residuals = doc.at("residuals");
    const ordered_json& instances = doc.at("instances");
    for (auto it = residuals.begin(); it != residuals.end(); ++it)
        rep.add(it.key(), it.value().get<double>(), instances.at(it.key()).get<long long>());
    return rep;
}

} // namespace permod
