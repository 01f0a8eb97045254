#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "stagger/perversity.hpp"

namespace stagger::cli {

struct Scenario {
    TorusSetup setup;
    std::map<std::string, std::string> objects;
};

/// n = 3, global linear cocharacter (1,1,1), trivial dualizing twist, and the
/// objects Ox, Oz and A.
Scenario default_scenario();
Scenario parse_scenario(const nlohmann::json& j);
Scenario load_scenario(const std::string& path);

/// "middle_staggered", "middle_baric", "middle_db", "zero", "cod", "alt",
/// "scod", or a JSON object mapping strata ("1,2", "[1,2]", "" for the open
/// stratum) to integers.
Perversity parse_perversity(const TorusSetup& setup, const std::string& literal);
Stratum parse_stratum_key(int n, const std::string& key);

/// Runs one command. The report or error object goes to `out`; the return
/// value is the process exit code (0 ok, 1 domain error, 2 usage error).
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace stagger::cli
