#include "qsing/report.hpp"

#include <algorithm>
#include <sstream>

namespace qsing {

nlohmann::ordered_json report_to_json(const ClassificationReport& r) {
    nlohmann::ordered_json j;
    j["dimension"] = r.dimension;
    j["group_order"] = r.group_order;
    j["cyclotomic_order"] = r.cyclotomic_order;
    j["in_sl"] = r.in_sl;
    j["has_pseudo_reflections"] = r.has_pseudo_reflections;
    j["fixed_point_free"] = r.fixed_point_free;
    j["isolated"] = r.isolated;
    if (r.sing_locus_dim)
        j["sing_locus_dim"] = *r.sing_locus_dim;
    else
        j["sing_locus_dim"] = "smooth";
    j["cyclic"] = r.cyclic;
    j["abelian"] = r.abelian;
    j["gorenstein"] = to_string(r.gorenstein);
    j["theorem_witness"] = to_string(r.theorem_witness);
    return j;
}

std::string report_to_text(const ClassificationReport& r) {
    const nlohmann::ordered_json j = report_to_json(r);
    std::size_t width = 0;
    for (const auto& [key, value] : j.items()) width = std::max(width, key.size());

    std::ostringstream os;
    for (const auto& [key, value] : j.items()) {
        os << key << std::string(width - key.size() + 2, ' ');
        if (value.is_string())
            os << value.get<std::string>();
        else
            os << value.dump();
        os << '\n';
    }
    return os.str();
}

} // namespace qsing
