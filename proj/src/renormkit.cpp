#include "renormlab/renormkit.hpp"

namespace renormlab {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        default: return "INCONCLUSIVE";
    }
}

nlohmann::ordered_json CheckReport::to_json() const {
    nlohmann::ordered_json j;
    j["check"] = check;
    j["instance"] = instance;
    j["seed"] = seed;
    j["trials"] = trials;
    j["verdict"] = to_string(verdict);
    j["witnesses"] = witnesses;
    j["max_radius"] = to_string(max_radius);
    j["refinements"] = refinements;
    return j;
}

}  // namespace renormlab
