#pragma once

#include <nlohmann/json.hpp>

#include "stagger/complex.hpp"
#include "stagger/perversity.hpp"
#include "stagger/purity.hpp"

namespace stagger::cli {

using nlohmann::json;

json to_json(const Character& c);
json to_json(const Stratum& s);
json to_json(const Perversity& p);
json to_json(const OrbitRep& rep);
json to_json(const GradedMatrix& m);
json to_json(const PresentedModule& m);
json to_json(const FreeComplex& f);
json to_json(const CohomologyTable& table);
json to_json(const Witness& w);
json to_json(const IcSummand& s);
json to_json(const FiltrationLayer& layer);

json certificate(const std::string& family, json params, const Membership& m);
json certificate(json params, const PurityCertificate& c);

}  // namespace stagger::cli
