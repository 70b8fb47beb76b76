#include "nsgr/report.hpp"

namespace nsgr {

using nlohmann::json;

ReportDocument make_document(const AnalysisReport& rep, const std::optional<ThreeGenReport>& three) {
    ReportDocument doc;
    doc.generators = rep.generators;
    doc.multiplicity = rep.multiplicity;
    doc.frobenius = rep.frobenius;
    doc.symmetric = rep.symmetric;
    doc.reduction_number = rep.reduction_number;
    doc.nilpotency_index = rep.nilpotency_index;
    doc.apery = rep.apery_records;
    doc.max_ap_m = rep.max_ap_M;
    doc.m_pure = rep.m_pure;
    doc.cm = rep.cm;
    doc.buchsbaum = rep.buchsbaum;
    doc.g_gorenstein = rep.g_gorenstein;
    doc.socle_basis = rep.socle_basis;
    doc.lambda = rep.lambda;
    if (three) doc.threegen = ThreeGenSummary{three->k, three->defect_unique, three->defect_is_k_g3};
    return doc;
}

void to_json(json& j, const ReportDocument& doc) {
    json apery = json::array();
    for (const auto& rec : doc.apery) {
        json e = {{"class", rec.class_index}, {"omega", rec.omega}, {"omega_prime", rec.omega_prime},
                  {"a", rec.a}, {"b", rec.b}};
        if (rec.level) e["level"] = *rec.level;
        apery.push_back(std::move(e));
    }
    json socle = json::array();
    for (const auto& e : doc.socle_basis.entries) {
        socle.push_back({{"exponent", e.exponent}, {"order", e.order}});
    }
    j = json{{"schema_version", doc.schema_version},
             {"generators", doc.generators},
             {"multiplicity", doc.multiplicity},
             {"frobenius", doc.frobenius},
             {"symmetric", doc.symmetric},
             {"reduction_number", doc.reduction_number},
             {"nilpotency_index", doc.nilpotency_index},
             {"apery", std::move(apery)},
             {"max_ap_m", doc.max_ap_m},
             {"m_pure", doc.m_pure},
             {"cm", doc.cm},
             {"buchsbaum", doc.buchsbaum},
             {"g_gorenstein", doc.g_gorenstein},
             {"socle_basis", std::move(socle)},
             {"lambda", doc.lambda}};
    if (doc.threegen) {
        j["threegen"] = {{"k", doc.threegen->k},
                         {"defect_unique", doc.threegen->defect_unique},
                         {"defect_is_k_g3", doc.threegen->defect_is_k_g3}};
    }
}

void from_json(const json& j, ReportDocument& doc) {
    j.at("schema_version").get_to(doc.schema_version);
    j.at("generators").get_to(doc.generators);
    j.at("multiplicity").get_to(doc.multiplicity);
    j.at("frobenius").get_to(doc.frobenius);
    j.at("symmetric").get_to(doc.symmetric);
    j.at("reduction_number").get_to(doc.reduction_number);
    j.at("nilpotency_index").get_to(doc.nilpotency_index);
    doc.apery.clear();
    for (const auto& e : j.at("apery")) {
        AperyRecord rec;
        e.at("class").get_to(rec.class_index);
        e.at("omega").get_to(rec.omega);
        e.at("omega_prime").get_to(rec.omega_prime);
        e.at("a").get_to(rec.a);
        e.at("b").get_to(rec.b);
        if (e.contains("level")) rec.level = e.at("level").get<int>();
        doc.apery.push_back(rec);
    }
    j.at("max_ap_m").get_to(doc.max_ap_m);
    j.at("m_pure").get_to(doc.m_pure);
    j.at("cm").get_to(doc.cm);
    j.at("buchsbaum").get_to(doc.buchsbaum);
    j.at("g_gorenstein").get_to(doc.g_gorenstein);
    doc.socle_basis.entries.clear();
    for (const auto& e : j.at("socle_basis")) {
        doc.socle_basis.entries.push_back({e.at("exponent").get<int>(), e.at("order").get<int>()});
    }
    j.at("lambda").get_to(doc.lambda);
    doc.threegen.reset();
    if (j.contains("threegen")) {
        const auto& t = j.at("threegen");
        doc.threegen = ThreeGenSummary{t.at("k").get<int>(), t.at("defect_unique").get<bool>(),
                                       t.at("defect_is_k_g3").get<bool>()};
    }
}

namespace {

template <class Range, class Fn>
void list(std::ostream& os, const Range& items, Fn fn) {
    bool first = true;
    for (const auto& x : items) {
        if (!first) os << ", ";
        first = false;
        fn(x);
    }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

void render_text(std::ostream& os, const ReportDocument& doc) {
    os << "semigroup: <";
    list(os, doc.generators, [&](int g) { os << g; });
    os << ">\n";
    os << "multiplicity: " << doc.multiplicity << '\n';
    os << "frobenius: " << doc.frobenius << '\n';
    os << "reduction number r: " << doc.reduction_number << '\n';
    os << "nilpotency index s_J: " << doc.nilpotency_index << '\n';
    os << "apery:\n";
    os << "  class  omega  omega'  a  b  level\n";
    for (const auto& rec : doc.apery) {
        os << "  " << rec.class_index << "  " << rec.omega << "  " << rec.omega_prime << "  " << rec.a
           << "  " << rec.b << "  ";
        if (rec.level) os << *rec.level; else os << '-';
        os << '\n';
    }
    os << "maxAp_M: {";
    list(os, doc.max_ap_m, [&](int w) { os << w; });
    os << "}\n";
    os << "socle basis: {";
    list(os, doc.socle_basis.entries, [&](const SocleEntry& e) { os << e.exponent << " (ord " << e.order << ')'; });
    os << "}\n";
    os << "lambda: " << doc.lambda << '\n';
    if (doc.threegen) {
        os << "threegen k: " << doc.threegen->k << '\n';
        os << "threegen defect unique: " << yes_no(doc.threegen->defect_unique) << '\n';
        os << "threegen defect is k*g3: " << yes_no(doc.threegen->defect_is_k_g3) << '\n';
    }
    os << "symmetric: " << yes_no(doc.symmetric) << '\n';
    os << "m_pure: " << yes_no(doc.m_pure) << '\n';
    os << "cm: " << yes_no(doc.cm) << '\n';
    os << "buchsbaum: " << yes_no(doc.buchsbaum) << '\n';
    os << "g_gorenstein: " << yes_no(doc.g_gorenstein) << '\n';
}

}  // namespace nsgr
