#include <json.hpp>
#include <sstream>

#include "invprob/verify.hpp"

namespace invprob {

std::string emit_report_text(const VerificationReport& r) {
    std::ostringstream out;
    out << "schema: " << r.schema << "\n";
    out << "samples: " << r.samples << "\n";
    out << "seed: " << r.seed << "\n";
    out << "passes: " << r.passes << "\n";
    out << "failures: " << r.failures << "\n";
    out << "precondition_failures: " << r.precondition_failures << "\n";
    for (const auto& [name, count] : r.branches)
        out << "branch " << name << ": " << count << "\n";
    out << "counterexamples: " << r.counterexamples.size() << "\n";
    for (const auto& ce : r.counterexamples) {
        out << "  [" << ce.sample_index << "] " << ce.reason << ":";
        for (const auto& [key, value] : ce.coordinates) out << " " << key << "=" << value;
        out << "\n";
    }
    return out.str();
}

std::string emit_report_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["schema"] = r.schema;
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    j["passes"] = r.passes;
    j["failures"] = r.failures;
    j["precondition_failures"] = r.precondition_failures;
    nlohmann::ordered_json branches = nlohmann::ordered_json::object();
    for (const auto& [name, count] : r.branches) branches[name] = count;
    j["branches"] = branches;
    nlohmann::ordered_json ces = nlohmann::ordered_json::array();
    for (const auto& ce : r.counterexamples) {
        nlohmann::ordered_json entry;
        entry["sample_index"] = ce.sample_index;
        entry["reason"] = ce.reason;
        nlohmann::ordered_json coords = nlohmann::ordered_json::object();
        for (const auto& [key, value] : ce.coordinates) coords[key] = value;
        entry["coordinates"] = coords;
        ces.push_back(entry);
    }
    j["counterexamples"] = ces;
    return j.dump(2) + "\n";
}

}  // namespace invprob
