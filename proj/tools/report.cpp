#include "report.hpp"

namespace stagger::cli {

json to_json(const Character& c) { return json(c.entries()); }

json to_json(const Stratum& s) { return json(s.indices()); }

json to_json(const Perversity& p) {
    json out = json::array();
    for (const auto& [s, v] : p.values()) out.push_back({{"stratum", to_json(s)}, {"value", v}});
    return out;
}

json to_json(const OrbitRep& rep) {
    json chars = json::array();
    for (const auto& [ch, m] : rep.chars) chars.push_back({{"character", ch}, {"multiplicity", m}});
    return {{"stratum", to_json(rep.stratum)}, {"characters", chars}};
}

json to_json(const GradedMatrix& m) {
    json entries = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (sgn(m.at(r, c)) != 0)
                entries.push_back({{"row", r},
                                   {"col", c},
                                   {"coeff", to_string(m.at(r, c))},
                                   {"monomial", to_json(m.exponent(r, c))}});
    return entries;
}

json to_json(const PresentedModule& m) {
    json gens = json::array();
    for (const auto& g : m.generators().gens) gens.push_back(to_json(g));
    json rels = json::array();
    for (std::size_t c = 0; c < m.pres.cols(); ++c) {
        json column = json::array();
        for (std::size_t r = 0; r < m.pres.rows(); ++r)
            if (sgn(m.pres.at(r, c)) != 0)
                column.push_back(
                    {{"row", r}, {"coeff", to_string(m.pres.at(r, c))}, {"monomial", to_json(m.pres.exponent(r, c))}});
        rels.push_back({{"degree", to_json(m.pres.source().gens[c])}, {"entries", column}});
    }
    json out{{"ring", to_json(m.ring().stratum())}, {"generators", gens}, {"relations", rels}};
    if (auto table = finite_length(m)) {
        json chars = json::array();
        for (const auto& [ch, mult] : *table) chars.push_back({{"character", to_json(ch)}, {"multiplicity", mult}});
        out["finite_length"] = chars;
    } else {
        out["finite_length"] = nullptr;
    }
    return out;
}

json to_json(const FreeComplex& f) {
    json terms = json::array();
    json diffs = json::array();
    for (const auto& [k, t] : f.terms()) {
        json gens = json::array();
        for (const auto& g : t.gens) gens.push_back(to_json(g));
        terms.push_back({{"degree", k}, {"generators", gens}});
        if (f.terms().count(k + 1)) diffs.push_back({{"degree", k}, {"entries", to_json(f.diff(k))}});
    }
    return {{"ring", to_json(f.ring().stratum())}, {"terms", terms}, {"differentials", diffs}};
}

json to_json(const CohomologyTable& table) {
    json out = json::array();
    for (const auto& [k, m] : table) out.push_back({{"degree", k}, {"module", to_json(m)}});
    return out;
}

json to_json(const Witness& w) {
    return {{"check", w.check},   {"stratum", to_json(w.stratum)}, {"k", w.degree},
            {"bound", w.bound},   {"actual", w.actual},            {"pass", w.pass}};
}

json to_json(const IcSummand& s) {
    return {{"stratum", to_json(s.stratum)}, {"character", to_json(s.character)}, {"shift", s.shift}};
}

json to_json(const FiltrationLayer& layer) {
    json pieces = json::array();
    for (const auto& p : layer.pieces)
        pieces.push_back({{"k", p.k}, {"character", to_json(p.character)}, {"multiplicity", p.multiplicity}});
    return {{"degree", layer.degree}, {"pieces", pieces}};
}

json certificate(const std::string& family, json params, const Membership& m) {
    json w = json::array();
    for (const auto& x : m.witnesses) w.push_back(to_json(x));
    return {{"family", family}, {"params", std::move(params)}, {"verdict", m.verdict}, {"witnesses", w}};
}

json certificate(json params, const PurityCertificate& c) {
    json w = json::array();
    for (const auto& x : c.witnesses) w.push_back(to_json(x));
    return {{"family", c.notion == PurityNotion::kBaric ? "baric_pure" : "skew_pure"},
            {"params", std::move(params)},
            {"verdict", c.verdict},
            {"witnesses", w}};
}

}  // namespace stagger::cli
