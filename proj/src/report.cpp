#include "syzrank/report.hpp"

#include <json.hpp>
#include <sstream>

namespace syzrank {

namespace {

const char* yn(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string render_text(const RunReport& rep) {
    std::ostringstream out;
    out << "syzrank " << kToolVersion << "\n";
    out << "ambient: " << rep.ambient << "\n";
    out << "field: " << rep.field << "\n";
    out << "poly: " << rep.poly << "\n";
    out << "vars:";
    for (const auto& v : rep.vars) out << " " << v;
    out << "\n";
    if (rep.picard_rank) out << "picard rank: " << *rep.picard_rank << "\n";
    if (rep.completeness_warning && *rep.completeness_warning)
        out << "warning: completeness of the fan was asserted, not verified\n";
    if (rep.reduced_ok) {
        out << "reduced: " << yn(*rep.reduced_ok);
        if (!*rep.reduced_ok)
            out << " (singular locus has dimension " << *rep.singular_locus_dimension
                << "; the rank criterion assumes a reduced divisor)";
        out << "\n";
    }
    if (rep.find_singular) {
        const auto& fs = *rep.find_singular;
        if (fs.positive_dimensional) {
            out << "singular points: POSITIVE_DIMENSIONAL\n";
        } else {
            out << "singular points (" << (fs.complete ? "complete" : "incomplete") << "):";
            if (fs.points.empty()) out << " none";
            for (const auto& p : fs.points) out << " " << p;
            out << "\n";
        }
    }
    for (const auto& p : rep.points) {
        out << "point " << p.point << ": status=" << p.status;
        if (p.rk_Mprime) out << " rk_Mprime=" << *p.rk_Mprime;
        if (p.rk_M) out << " rk_M=" << *p.rk_M;
        if (p.defect) out << " defect=" << *p.defect;
        if (p.seh) out << " seh=" << yn(*p.seh);
        out << "\n";
        if (p.quasi_homogeneous || p.mu || p.tau) {
            out << "  refinement:";
            if (p.quasi_homogeneous) out << " quasi_homogeneous=" << yn(*p.quasi_homogeneous);
            if (p.mu) out << " mu=" << *p.mu;
            if (p.tau) out << " tau=" << *p.tau;
            out << "\n";
        }
        if (p.refinement_note) out << "  note: " << *p.refinement_note << "\n";
        if (p.oracle)
            out << "  oracle: rk_j=" << p.oracle->rk_j << " rk_jprime=" << p.oracle->rk_jprime
                << " agrees=" << yn(p.oracle->agrees) << "\n";
    }
    if (rep.oracles_agree) out << "oracles agree: " << yn(*rep.oracles_agree) << "\n";
    if (rep.global_seh) out << "global seh: " << yn(*rep.global_seh) << "\n";
    out << "timing_ms: " << rep.timing_ms << "\n";
    return out.str();
}

std::string render_machine(const RunReport& rep) {
    using json = nlohmann::ordered_json;
    json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["tool"] = "syzrank";
    doc["version"] = kToolVersion;
    doc["input"] = {{"ambient", rep.ambient},
                    {"field", rep.field},
                    {"poly", rep.poly},
                    {"vars", rep.vars}};
    if (rep.picard_rank) doc["picard_rank"] = *rep.picard_rank;
    if (rep.completeness_warning) doc["completeness_warning"] = *rep.completeness_warning;
    if (rep.reduced_ok) {
        doc["reducedness"] = {{"ok", *rep.reduced_ok},
                              {"singular_locus_dimension", *rep.singular_locus_dimension}};
    }
    if (rep.find_singular) {
        const auto& fs = *rep.find_singular;
        doc["find_singular"] = {{"points", fs.points},
                                {"complete", fs.complete},
                                {"positive_dimensional", fs.positive_dimensional}};
    }
    doc["points"] = json::array();
    for (const auto& p : rep.points) {
        json jp;
        jp["point"] = p.point;
        jp["status"] = p.status;
        if (p.rk_Mprime) jp["rk_Mprime"] = *p.rk_Mprime;
        if (p.rk_M) jp["rk_M"] = *p.rk_M;
        if (p.defect) jp["defect"] = *p.defect;
        if (p.seh) jp["seh"] = *p.seh;
        if (p.quasi_homogeneous || p.mu || p.tau) {
            json jr;
            if (p.quasi_homogeneous) jr["quasi_homogeneous"] = *p.quasi_homogeneous;
            if (p.mu) jr["mu"] = *p.mu;
            if (p.tau) jr["tau"] = *p.tau;
            jp["refinement"] = jr;
        }
        if (p.refinement_note) jp["refinement_note"] = *p.refinement_note;
        if (p.oracle)
            jp["oracle"] = {{"rk_j", p.oracle->rk_j},
                            {"rk_jprime", p.oracle->rk_jprime},
                            {"agrees", p.oracle->agrees}};
        doc["points"].push_back(std::move(jp));
    }
    if (rep.oracles_agree) doc["oracles_agree"] = *rep.oracles_agree;
    if (rep.global_seh) doc["global_seh"] = *rep.global_seh;
    doc["timing_ms"] = rep.timing_ms;
    return doc.dump(2) + "\n";
}

}  // namespace syzrank
