#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include "expression.hpp"
#include "report.hpp"
#include "stagger/errors.hpp"
#include "stagger/purity.hpp"

namespace stagger::cli {

namespace {

std::vector<Int> int_vector(const json& j, const std::string& what) {
    if (!j.is_array()) throw UsageError("scenario", what + " must be an integer array");
    std::vector<Int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw UsageError("scenario", what + " must contain integers");
        out.push_back(x.get<Int>());
    }
    return out;
}

json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError("json", what + " is not valid JSON", e.what());
    }
}

}  // namespace

Scenario default_scenario() {
    return Scenario{TorusSetup::global_linear(3, {1, 1, 1}),
                    {{"Ox", "stratum_sheaf([2,3])"}, {"Oz", "stratum_sheaf([1,2])"}, {"A", "free((0,0,0))"}}};
}

Stratum parse_stratum_key(int n, const std::string& key) {
    std::vector<int> idx;
    std::string digits;
    const auto flush = [&] {
        if (digits.empty()) return;
        const int i = std::stoi(digits);
        if (i < 1 || i > n) throw UsageError("malformed_index", "stratum index out of range", key);
        idx.push_back(i);
        digits.clear();
    };
    for (char c : key) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
        } else if (c == ',' || c == ' ' || c == '[' || c == ']' || c == '{' || c == '}') {
            flush();
        } else {
            throw UsageError("malformed_index", "unexpected character in stratum key", key);
        }
    }
    flush();
    return Stratum::from_indices(n, idx);
}

Scenario parse_scenario(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw UsageError("scenario", "scenario needs an integer field n");
    const int n = j["n"].get<int>();
    if (n < 0 || n > 12) throw UsageError("scenario", "n must lie between 0 and 12");

    Character twist = Character::zero(n);
    Int shift = 0;
    if (j.contains("dualizing")) {
        const auto& d = j["dualizing"];
        if (d.contains("twist")) twist = Character(int_vector(d["twist"], "dualizing.twist"));
        if (d.contains("shift")) shift = d["shift"].get<Int>();
    }
    if (twist.size() != n) throw UsageError("scenario", "dualizing.twist must have n entries");

    if (!j.contains("cocharacters")) throw UsageError("scenario", "scenario needs cocharacters");
    const auto& c = j["cocharacters"];
    std::optional<TorusSetup> setup;
    if (c.contains("global_linear")) {
        const auto form = int_vector(c["global_linear"], "global_linear");
        if (form.size() != static_cast<std::size_t>(n)) throw UsageError("scenario", "global_linear needs n entries");
        setup.emplace(TorusSetup::global_linear(n, form, twist, shift));
    } else if (c.contains("per_stratum")) {
        std::map<Stratum, Cocharacter> cochars;
        for (const auto& [key, value] : c["per_stratum"].items()) {
            const Stratum s = parse_stratum_key(n, key);
            cochars[s] = Cocharacter{s, int_vector(value, "cocharacter " + key)};
        }
        try {
            setup.emplace(n, std::move(cochars), twist, shift);
        } catch (const DomainError& e) {
            throw UsageError("scenario", e.what(), e.context());
        }
    } else {
        throw UsageError("scenario", "cocharacters needs global_linear or per_stratum");
    }

    std::map<std::string, std::string> objects;
    if (j.contains("objects"))
        for (const auto& [name, value] : j["objects"].items()) {
            if (!value.is_string()) throw UsageError("scenario", "object definitions must be strings", name);
            objects[name] = value.get<std::string>();
        }
    return Scenario{std::move(*setup), std::move(objects)};
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("io", "cannot open scenario file", path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_scenario(parse_json_text(text, "scenario"));
}

Perversity parse_perversity(const TorusSetup& setup, const std::string& literal) {
    const auto strata = enumerate_strata(setup);
    const auto by = [&](auto f) { return Perversity::from_function(strata, f); };
    if (literal == "middle_staggered") return middle(setup, DualKind::kStaggered);
    if (literal == "middle_baric") return middle(setup, DualKind::kBaric);
    if (literal == "middle_db") return middle(setup, DualKind::kDeligneBezrukavnikov);
    if (literal == "zero") return by([](const Stratum&) { return Int{0}; });
    if (literal == "cod") return by([&](const Stratum& s) { return codim(setup, s); });
    if (literal == "alt") return by([&](const Stratum& s) { return altitude(setup, s); });
    if (literal == "scod") return by([&](const Stratum& s) { return scod(setup, s); });
    const json j = parse_json_text(literal, "perversity literal");
    if (!j.is_object()) throw UsageError("perversity", "unknown perversity literal", literal);
    std::map<Stratum, Int> values;
    for (const auto& [key, v] : j.items()) {
        if (!v.is_number_integer()) throw UsageError("perversity", "perversity values must be integers", key);
        values[parse_stratum_key(setup.n(), key)] = v.get<Int>();
    }
    return Perversity(std::move(values));
}

namespace {

struct Options {
    std::string scenario_path;
    bool pretty = false;
    bool timing = false;
    std::string expr;
    std::string kind;
    std::string perversity = "middle_staggered";
    std::string p_literal;
    std::string dual_kind = "staggered";
    std::string middle_kind = "staggered";
    std::string family;
    std::string notion = "skew";
    std::string character;
    std::string upsilon;
    std::string phi;
    std::string psi;
    std::string input;
    Int n = 0;
    std::optional<Int> w;
    bool filtration = false;
};

DualKind dual_kind_of(const std::string& s) {
    if (s == "baric") return DualKind::kBaric;
    if (s == "db") return DualKind::kDeligneBezrukavnikov;
    if (s == "staggered") return DualKind::kStaggered;
    throw UsageError("usage", "dual kind must be baric, db or staggered", s);
}

PurityNotion notion_of(const std::string& s) {
    if (s == "baric") return PurityNotion::kBaric;
    if (s == "skew") return PurityNotion::kSkew;
    throw UsageError("usage", "notion must be baric or skew", s);
}

Scenario scenario_of(const Options& o) {
    return o.scenario_path.empty() ? default_scenario() : load_scenario(o.scenario_path);
}

Character character_literal(const TorusSetup& setup, const std::string& text) {
    const Expr e = parse_expression(text);
    if (e.kind != Expr::Kind::kCharacter || e.numbers.size() != static_cast<std::size_t>(setup.n()))
        throw UsageError("malformed_character", "expected a character with n entries", text);
    return Character(e.numbers);
}

json cmd_orbits(const Options& o) {
    const auto sc = scenario_of(o);
    const auto& setup = sc.setup;
    json rows = json::array();
    for (const auto& c : enumerate_strata(setup)) {
        json conormal = json::array();
        for (const auto& u : conormal_weights(c)) conormal.push_back(u.values);
        rows.push_back({{"stratum", to_json(c)},
                        {"cod", codim(setup, c)},
                        {"alt", altitude(setup, c)},
                        {"scod", scod(setup, c)},
                        {"cocharacter", setup.cocharacter(c).values},
                        {"conormal_weights", conormal}});
    }
    return {{"count", rows.size()}, {"strata", rows}};
}

json cmd_sstructure(const Options& o) {
    const auto sc = scenario_of(o);
    const auto& setup = sc.setup;
    std::optional<Character> lambda;
    if (!o.character.empty()) lambda = character_literal(setup, o.character);
    json rows = json::array();
    for (const auto& c : enumerate_strata(setup)) {
        json row{{"stratum", to_json(c)},
                 {"cocharacter", setup.cocharacter(c).values},
                 {"alt", altitude(setup, c)},
                 {"scod", scod(setup, c)}};
        if (lambda) row["step"] = step(setup, c, *lambda);
        rows.push_back(std::move(row));
    }
    // stabilizers of a diagonal torus action have no unipotent part
    return {{"recessed", is_recessed(setup)}, {"split", true}, {"strata", rows}};
}

json cmd_perversity(const Options& o) {
    const auto sc = scenario_of(o);
    const auto& setup = sc.setup;
    if (o.kind == "middle") return {{"perversity", to_json(middle(setup, dual_kind_of(o.middle_kind)))}};
    const auto q = parse_perversity(setup, o.perversity);
    if (o.kind == "baric-dual") return {{"perversity", to_json(baric_dual(setup, q))}};
    if (o.kind == "db-dual") return {{"perversity", to_json(db_dual(setup, q))}};
    if (o.kind == "staggered-dual") return {{"perversity", to_json(staggered_dual(setup, q))}};
    if (o.kind == "skew") return {{"perversity", to_json(skew_of(setup, q))}};
    if (o.kind == "moderate-check") return {{"moderate", is_moderate(setup, q)}};
    if (o.kind == "monotone-check")
        return {{"monotone", is_monotone(q)},
                {"comonotone", is_comonotone(setup, q, dual_kind_of(o.dual_kind))},
                {"dual_kind", o.dual_kind}};
    throw UsageError("usage", "unknown perversity kind", o.kind);
}

json classify_case(const json& c) {
    if (!c.contains("upsilon") || !c.contains("phi")) throw UsageError("usage", "classify needs upsilon and phi");
    const auto phi = int_vector(c["phi"], "phi");
    AbstractOrbitClass cls{static_cast<int>(phi.size()), {}};
    if (c.contains("rank")) cls.rank = c["rank"].get<int>();
    for (const auto& u : c["upsilon"]) cls.upsilon.push_back(int_vector(u, "upsilon weight"));
    json out{{"semifocused", is_semifocused(cls, phi)}, {"focused", is_focused(cls, phi)}};
    if (c.contains("psi")) {
        const auto idx = distinguishing_basis_character(phi, int_vector(c["psi"], "psi"));
        out["distinguishing_index"] = idx ? json(*idx) : json(nullptr);
    }
    return out;
}

json cmd_classify(const Options& o) {
    if (!o.input.empty()) {
        std::ifstream in(o.input);
        if (!in) throw UsageError("io", "cannot open classify input", o.input);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        const json j = parse_json_text(text, "classify input");
        if (j.is_array()) {
            json rows = json::array();
            for (const auto& c : j) rows.push_back(classify_case(c));
            return {{"cases", rows}};
        }
        return classify_case(j);
    }
    json c{{"upsilon", parse_json_text(o.upsilon.empty() ? "[]" : o.upsilon, "upsilon")},
           {"phi", parse_json_text(o.phi, "phi")}};
    if (!o.psi.empty()) c["psi"] = parse_json_text(o.psi, "psi");
    return classify_case(c);
}

json cmd_compute(const Options& o) {
    const auto sc = scenario_of(o);
    Evaluator ev(sc.setup, sc.objects);
    const Value v = ev.evaluate(o.expr);
    if (const auto* table = std::get_if<CohomologyTable>(&v)) return {{"cohomology", to_json(*table)}};
    const auto& f = std::get<FreeComplex>(v);
    return {{"object", to_json(f)}, {"cohomology", to_json(cohomology(f))}};
}

json cmd_membership(const Options& o, json& certs) {
    const auto sc = scenario_of(o);
    const auto& setup = sc.setup;
    Evaluator ev(sc.setup, sc.objects);
    const auto f = ev.object(o.expr);
    const auto q = parse_perversity(setup, o.perversity);
    const Int w = o.w.value_or(0);
    const json params{{"n", o.n}, {"w", w}, {"perversity", to_json(q)}};
    Membership m;
    const std::string& fam = o.family;
    if (fam == "baric_leq") m = member_baric_leq(setup, f, w, q);
    else if (fam == "baric_geq") m = member_baric_geq(setup, f, w, q);
    else if (fam == "staggered_leq") m = member_staggered_leq(setup, f, o.n, q);
    else if (fam == "staggered_geq") m = member_staggered_geq(setup, f, o.n, q);
    else if (fam == "staggered_heart") m = in_staggered_heart(setup, f, q);
    else if (fam == "skew_leq") m = member_skew_leq(setup, f, w, q);
    else if (fam == "skew_geq") m = member_skew_geq(setup, f, w, q);
    else if (fam == "purified_leq") m = member_purified_leq(setup, f, o.n, w, q);
    else if (fam == "purified_geq") m = member_purified_geq(setup, f, o.n, w, q);
    else if (fam == "pureperverse_leq" || fam == "pureperverse_geq") {
        if (o.p_literal.empty()) throw UsageError("usage", "pure-perverse families need --p");
        const auto p = parse_perversity(setup, o.p_literal);
        m = fam == "pureperverse_leq" ? member_pureperverse_leq(setup, f, o.n, w, p, q)
                                      : member_pureperverse_geq(setup, f, o.n, w, p, q);
    } else {
        throw UsageError("usage", "unknown membership family", fam);
    }
    certs.push_back(certificate(fam, params, m));
    return {{"family", fam}, {"verdict", m.verdict}};
}

json cmd_purity(const Options& o, json& certs) {
    const auto sc = scenario_of(o);
    const auto& setup = sc.setup;
    Evaluator ev(sc.setup, sc.objects);
    const auto f = ev.object(o.expr);
    const auto notion = notion_of(o.notion);
    const auto r = parse_perversity(setup, o.perversity);
    if (o.filtration) {
        json layers = json::array();
        for (const auto& l : purity_filtration(setup, f, notion, r)) layers.push_back(to_json(l));
        return {{"notion", o.notion}, {"filtration", layers}};
    }
    if (!o.w) throw UsageError("usage", "purity needs --w unless --filtration is given");
    const auto cert = notion == PurityNotion::kBaric ? is_pure(setup, f, *o.w) : is_skew_pure(setup, f, *o.w, r);
    certs.push_back(certificate({{"w", *o.w}, {"notion", o.notion}}, cert));
    return {{"notion", o.notion}, {"w", *o.w}, {"verdict", cert.verdict}};
}

json cmd_decompose(const Options& o) {
    const auto sc = scenario_of(o);
    const auto& setup = sc.setup;
    Evaluator ev(sc.setup, sc.objects);
    const auto f = ev.object(o.expr);
    if (!o.w) throw UsageError("usage", "decompose needs --w");
    json out = json::array();
    for (const auto& s : decompose_pure(setup, f, notion_of(o.notion), *o.w, parse_perversity(setup, o.perversity)))
        out.push_back(to_json(s));
    return {{"summands", out}};
}

json cmd_example_s12(bool& all_passed) {
    const auto sc = default_scenario();
    const auto& setup = sc.setup;
    const int n = 3;
    const auto r = middle(setup, DualKind::kStaggered);
    Evaluator ev(setup, sc.objects);
    const auto ox = ev.object("Ox");
    const auto oz = ev.object("Oz");
    const auto a = ev.object("A");
    const auto ch = [](std::vector<Int> v) { return Character(std::move(v)); };

    // A(0,-1,-1) -> A(0,-1,0) + A(0,0,-1) -> A, maps (z; -y) and (y z)
    const auto res = free_resolution(closure_structure_module(n, Stratum::from_indices(n, {2, 3})), n);
    bool res_ok = res.terms().size() == 3 && res.term(-2).gens == std::vector{ch({0, -1, -1})} &&
                  res.term(-1).gens == std::vector{ch({0, -1, 0}), ch({0, 0, -1})} &&
                  res.term(0).gens == std::vector{ch({0, 0, 0})};
    if (res_ok) {
        const auto d2 = res.diff(-2);
        const auto d1 = res.diff(-1);
        res_ok = d2.at(0, 0) == 1 && d2.at(1, 0) == -1 && d1.at(0, 0) == 1 && d1.at(0, 1) == 1;
    }

    const auto rh = cohomology(rhom(setup, oz, a));
    bool rhom_ok = rh.size() == 1 && rh.count(2);
    if (rhom_ok) {
        // compare with O_z(1,1,0) degreewise on a box around its generator
        const auto& m = rh.at(2);
        const auto expected = twist(closure_structure_module(n, Stratum::from_indices(n, {1, 2})), ch({1, 1, 0}));
        validation_box(n, {ch({1, 1, 0})}, box_pad(n)).for_each([&](const Character& mu) {
            if (piece_dim(m, mu) != piece_dim(expected, mu)) rhom_ok = false;
        });
    }

    const auto dual_t = minimize(dualize(setup, tensorL(ox, oz)));
    const auto sorted = [](std::vector<Character> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    const bool dual_ok = dual_t.ring() == Ring(Stratum::from_indices(n, {1, 2})) && dual_t.terms().size() == 3 &&
                         sorted(dual_t.term(2).gens) == sorted({ch({1, 1, 0})}) &&
                         sorted(dual_t.term(3).gens) == sorted({ch({1, 2, 0}), ch({1, 1, 1})}) &&
                         sorted(dual_t.term(4).gens) == sorted({ch({1, 2, 1})});

    const auto t = tensorL(ox, oz);
    const bool skew_ok = is_skew_pure(setup, t, 0, r).verdict;
    const auto summands = decompose_pure(setup, t, PurityNotion::kSkew, 0, r);
    const std::vector<IcSummand> expected{{Stratum::closed(n), ch({0, 0, 0}), 3},
                                          {Stratum::closed(n), ch({0, -1, 0}), 5}};
    const bool dec_ok = summands == expected;

    json dec = json::array();
    for (const auto& s : summands) dec.push_back(to_json(s));
    all_passed = res_ok && rhom_ok && dual_ok && skew_ok && dec_ok;
    return {{"resolution_of_Ox", {{"complex", to_json(res)}, {"pass", res_ok}}},
            {"rhom_Oz_A", {{"cohomology", to_json(rh)}, {"pass", rhom_ok}}},
            {"dual_of_tensor", {{"complex", to_json(dual_t)}, {"pass", dual_ok}}},
            {"decomposition", {{"skew_pure_degree_0", skew_ok}, {"summands", dec}, {"pass", dec_ok}}},
            {"all_passed", all_passed}};
}

json error_object(const std::string& code, const std::string& message, const std::string& context) {
    return {{"error", {{"code", code}, {"message", message}, {"context", context}}}};
}

void emit(std::ostream& out, const json& j, bool pretty) { out << (pretty ? j.dump(2) : j.dump()) << "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
    Options o;
    CLI::App app{"Staggered t-structures on toric varieties: exact computations", "stagger"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--pretty", o.pretty, "Indent the JSON report");
    app.add_flag("--json", "JSON output (the default)");
    app.add_flag("--timing", o.timing, "Include wall-clock time in the report");

    const auto with_scenario = [&](CLI::App* sub) {
        sub->add_option("scenario", o.scenario_path, "Scenario JSON file (default: built-in n=3 example)");
    };
    const auto with_expr = [&](CLI::App* sub) {
        sub->add_option("--expr,-e", o.expr, "Object expression")->required();
    };

    auto* orbits = app.add_subcommand("orbits", "List strata with cod, alt and scod");
    with_scenario(orbits);
    auto* sstr = app.add_subcommand("sstructure", "Cocharacters, altitudes and the recessed check");
    with_scenario(sstr);
    sstr->add_option("--character", o.character, "Character whose step is reported on every stratum");
    auto* perv = app.add_subcommand("perversity", "Perversity duals, middles and checks");
    with_scenario(perv);
    perv->add_option("--kind", o.kind, "baric-dual, db-dual, staggered-dual, skew, middle, moderate-check, monotone-check")
        ->required();
    perv->add_option("--perversity,-r", o.perversity, "Perversity literal");
    perv->add_option("--dual-kind", o.dual_kind, "Dual used by the comonotone check");
    perv->add_option("--middle", o.middle_kind, "Kind of middle perversity");
    auto* classify = app.add_subcommand("classify", "Semifocused and focused checks on orbit data");
    classify->add_option("--upsilon", o.upsilon, "JSON list of weight vectors");
    classify->add_option("--phi", o.phi, "JSON cocharacter");
    classify->add_option("--psi", o.psi, "Second cocharacter for the injectivity check");
    classify->add_option("--input", o.input, "JSON file with one case or a list of cases");
    auto* compute = app.add_subcommand("compute", "Evaluate an object expression");
    with_scenario(compute);
    with_expr(compute);
    auto* member = app.add_subcommand("membership", "Test membership in one of the subcategories");
    with_scenario(member);
    with_expr(member);
    member->add_option("--family", o.family, "Category family")->required();
    member->add_option("--n", o.n, "Integer bound n");
    member->add_option("--w", o.w, "Integer bound w");
    member->add_option("--perversity,-r", o.perversity, "Perversity literal (q or r)");
    member->add_option("--p", o.p_literal, "Deligne-Bezrukavnikov perversity for pure-perverse families");
    auto* purity = app.add_subcommand("purity", "Purity certificate or purity filtration");
    with_scenario(purity);
    with_expr(purity);
    purity->add_option("--notion", o.notion, "baric or skew");
    purity->add_option("--w", o.w, "Degree");
    purity->add_option("--perversity,-r", o.perversity, "Staggered perversity");
    purity->add_flag("--filtration", o.filtration, "Report the purity filtration instead");
    auto* decompose = app.add_subcommand("decompose", "Decompose a pure object into simple objects");
    with_scenario(decompose);
    with_expr(decompose);
    decompose->add_option("--notion", o.notion, "baric or skew");
    decompose->add_option("--w", o.w, "Degree")->required();
    decompose->add_option("--perversity,-r", o.perversity, "Staggered perversity");
    auto* s12 = app.add_subcommand("example-s12", "Regression run of the worked n=3 example");

    std::vector<const char*> argv{"stagger"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        emit(out, error_object("usage", e.what(), ""), o.pretty);
        return 2;
    }

    const auto start = std::chrono::steady_clock::now();
    json report;
    json certs = json::array();
    int code = 0;
    try {
        CLI::App* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        json results;
        if (sub == orbits) results = cmd_orbits(o);
        else if (sub == sstr) results = cmd_sstructure(o);
        else if (sub == perv) results = cmd_perversity(o);
        else if (sub == classify) results = cmd_classify(o);
        else if (sub == compute) results = cmd_compute(o);
        else if (sub == member) results = cmd_membership(o, certs);
        else if (sub == purity) results = cmd_purity(o, certs);
        else if (sub == decompose) results = cmd_decompose(o);
        else if (sub == s12) {
            bool ok = false;
            results = cmd_example_s12(ok);
            code = ok ? 0 : 1;
        }
        json echo = args;
        report = {{"command", name}, {"args", echo}, {"results", results}, {"certificates", certs}};
    } catch (const DomainError& e) {
        emit(out, error_object(e.code(), e.what(), e.context()), o.pretty);
        return 1;
    } catch (const UsageError& e) {
        emit(out, error_object(e.code(), e.what(), e.context()), o.pretty);
        return 2;
    }
    if (o.timing)
        report["timing_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    emit(out, report, o.pretty);
    return code;
}

}  // namespace stagger::cli
