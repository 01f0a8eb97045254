#include "stagger/purity.hpp"

#include <algorithm>

#include "stagger/errors.hpp"

namespace stagger {

void Membership::add(Witness w) {
    verdict = verdict && w.pass;
    witnesses.push_back(std::move(w));
}

void Membership::absorb(const Membership& other) {
    for (const auto& w : other.witnesses) add(w);
    verdict = verdict && other.verdict;
}

const Witness* Membership::failure() const {
    for (const auto& w : witnesses)
        if (!w.pass) return &w;
    return nullptr;
}

Int floor_half(Int a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }

namespace {

// Step bound of one module, with the bound supplied per stratum.
template <class Bound>
void check_module(const TorusSetup& setup, const PresentedModule& m, int k, const std::string& check, Bound&& bound,
                  Membership& out) {
    for (const auto& c : enumerate_strata(setup)) {
        const auto rep = restrict_to_stratum(m, c);
        if (rep.empty()) continue;
        const Int b = bound(c);
        const Int actual = *max_step(setup, rep);
        out.add(Witness{check, c, k, b, actual, actual <= b});
    }
}

}  // namespace

Membership member_qC_leq(const TorusSetup& setup, const PresentedModule& m, Int w, const Perversity& q) {
    Membership out;
    check_module(setup, m, 0, "qC_leq", [&](const Stratum& c) { return floor_half(w + q.at(c)); }, out);
    return out;
}

Membership member_baric_leq(const TorusSetup& setup, const FreeComplex& f, Int w, const Perversity& q) {
    Membership out;
    for (const auto& [k, h] : cohomology(f))
        check_module(setup, h, k, "baric_leq", [&](const Stratum& c) { return floor_half(w + q.at(c)); }, out);
    return out;
}

Membership member_baric_geq(const TorusSetup& setup, const FreeComplex& f, Int w, const Perversity& q) {
    auto out = member_baric_leq(setup, dualize(setup, f), -w, baric_dual(setup, q));
    for (auto& x : out.witnesses) x.check = "baric_geq(dual)";
    return out;
}

Membership member_staggered_leq(const TorusSetup& setup, const FreeComplex& f, Int n, const Perversity& r) {
    Membership out;
    for (const auto& [k, h] : cohomology(f))
        check_module(setup, h, k, "staggered_leq",
                     [&, k = k](const Stratum& c) { return floor_half(n - 2 * Int{k} + 2 * r.at(c)); }, out);
    return out;
}

Membership member_staggered_geq(const TorusSetup& setup, const FreeComplex& f, Int n, const Perversity& r) {
    auto out = member_staggered_leq(setup, dualize(setup, f), -n, staggered_dual(setup, r));
    for (auto& x : out.witnesses) x.check = "staggered_geq(dual)";
    return out;
}

Membership in_staggered_heart(const TorusSetup& setup, const FreeComplex& f, const Perversity& r) {
    auto out = member_staggered_leq(setup, f, 0, r);
    out.absorb(member_staggered_geq(setup, f, 0, r));
    return out;
}

namespace {

Membership skew_leq_q(const TorusSetup& setup, const FreeComplex& f, Int w, const Perversity& q,
                      const std::string& check) {
    Membership out;
    for (const auto& [k, h] : cohomology(f))
        check_module(setup, h, k, check, [&, k = k](const Stratum& c) { return w + Int{k} + q.at(c); }, out);
    return out;
}

}  // namespace

Membership member_skew_leq(const TorusSetup& setup, const FreeComplex& f, Int w, const Perversity& r) {
    return skew_leq_q(setup, f, w, skew_of(setup, r), "skew_leq");
}

Membership member_skew_geq(const TorusSetup& setup, const FreeComplex& f, Int w, const Perversity& r) {
    return skew_leq_q(setup, dualize(setup, f), -w, skew_dual(setup, skew_of(setup, r)), "skew_geq(dual)");
}

Membership member_purified_leq(const TorusSetup& setup, const FreeComplex& f, Int n, Int w, const Perversity& q) {
    Membership out;
    for (const auto& [k, h] : cohomology(f)) {
        const bool strict = k > n;
        check_module(setup, h, k, strict ? "purified_leq(strict)" : "purified_leq",
                     [&](const Stratum& c) { return floor_half((strict ? w - 1 : w) + q.at(c)); }, out);
    }
    return out;
}

Membership member_purified_geq(const TorusSetup& setup, const FreeComplex& f, Int n, Int w, const Perversity& q) {
    Membership out;
    for (const auto& [k, h] : cohomology(f))
        if (k < n) out.add(Witness{"purified_geq(vanishing)", Stratum::closed(setup.n()), k, n, k, false});
    out.absorb(member_baric_geq(setup, f, w, q));
    return out;
}

Membership member_pureperverse_leq(const TorusSetup& setup, const FreeComplex& f, Int n, Int w, const Perversity& p,
                                   const Perversity& q) {
    if (!is_monotone_comonotone_db(setup, p))
        throw DomainError(errc::kPrecondition, "perversity p must be monotone and comonotone");
    Membership out;
    for (const auto& c : enumerate_strata(setup)) {
        const auto fiber = derived_fiber(f, c);
        if (fiber.empty()) continue;
        const Int pc = p.at(c);
        const Int qc = q.at(c);
        for (const auto& [k, rep] : fiber) {
            const bool strict = k > n + pc;
            const Int bound = floor_half((strict ? w - 1 : w) + qc);
            const Int actual = *max_step(setup, rep);
            out.add(Witness{strict ? "pureperverse_leq(strict)" : "pureperverse_leq", c, k, bound, actual,
                            actual <= bound});
        }
    }
    return out;
}

Membership member_pureperverse_geq(const TorusSetup& setup, const FreeComplex& f, Int n, Int w, const Perversity& p,
                                   const Perversity& q) {
    auto out = member_pureperverse_leq(setup, dualize(setup, f), -n, -w, db_dual(setup, p), baric_dual(setup, q));
    for (auto& x : out.witnesses) x.check += "(dual)";
    return out;
}

PurityCertificate is_pure(const TorusSetup& setup, const FreeComplex& f, Int w) {
    const auto q = middle(setup, DualKind::kBaric);
    auto m = member_baric_leq(setup, f, w, q);
    m.absorb(member_baric_geq(setup, f, w, q));
    return PurityCertificate{PurityNotion::kBaric, w, m.verdict, std::move(m.witnesses)};
}

PurityCertificate is_skew_pure(const TorusSetup& setup, const FreeComplex& f, Int w, const Perversity& r) {
    auto m = member_skew_leq(setup, f, w, r);
    m.absorb(member_skew_geq(setup, f, w, r));
    return PurityCertificate{PurityNotion::kSkew, w, m.verdict, std::move(m.witnesses)};
}

namespace {

using CharacterTable = std::map<Character, Int>;

std::map<int, CharacterTable> finite_cohomology(const CohomologyTable& coh) {
    std::map<int, CharacterTable> out;
    for (const auto& [k, h] : coh) {
        auto table = finite_length(h);
        if (!table)
            throw DomainError(errc::kNotFiniteLength, "cohomology is not of finite length", std::to_string(k));
        out.emplace(k, std::move(*table));
    }
    return out;
}

}  // namespace

std::vector<FiltrationLayer> purity_filtration(const TorusSetup& setup, const FreeComplex& f, PurityNotion notion,
                                               const Perversity& r) {
    const auto tables = finite_cohomology(cohomology(f));
    if (notion == PurityNotion::kSkew && !iso_as_sum_of_cohomology(f))
        throw DomainError(errc::kNotFormal, "skew filtration needs an object split into its cohomology");
    const Stratum origin = Stratum::closed(setup.n());
    std::map<Int, FiltrationLayer> layers;
    for (const auto& [k, table] : tables)
        for (const auto& [ch, mult] : table) {
            const Int s = step(setup, origin, ch);
            const Int degree = notion == PurityNotion::kBaric
                                   ? 2 * s - altitude(setup, origin)
                                   : s - k - (r.at(origin) - codim(setup, origin));
            auto& layer = layers[degree];
            layer.degree = degree;
            layer.pieces.push_back(FiltrationPiece{k, ch, mult});
        }
    std::vector<FiltrationLayer> out;
    for (auto& [d, layer] : layers) out.push_back(std::move(layer));
    return out;
}

FreeComplex ic_closed(const TorusSetup& setup, const Character& lambda, const Perversity& r) {
    const Stratum origin = Stratum::closed(setup.n());
    const Int degree = r.at(origin) - step(setup, origin, lambda);
    return shift(skyscraper(lambda), static_cast<int>(-degree));
}

IcVerdict ic_verify(const TorusSetup& setup, const FreeComplex& f, const Stratum& c0, const Character& lambda,
                    const Perversity& r) {
    IcVerdict out;
    const auto fail = [&](std::string why) {
        out.verdict = false;
        out.failures.push_back(std::move(why));
    };

    for (const auto& c : enumerate_strata(setup))
        if (!c.in_closure_of(c0) && !derived_fiber(f, c).empty()) fail("support: nonzero on " + c.to_string());

    const Int v = step(setup, c0, lambda);
    const Int target_degree = r.at(c0) - v;
    const auto expected = restrict_character(lambda, c0).values;
    const auto coh = cohomology(f);
    bool seen = false;
    for (const auto& [k, h] : coh) {
        const auto rep = restrict_to_stratum(h, c0);
        if (rep.empty()) continue;
        if (k != target_degree) {
            fail("(i): fiber along " + c0.to_string() + " in degree " + std::to_string(k));
            continue;
        }
        seen = true;
        if (rep.chars.size() != 1 || rep.chars.begin()->first != expected || rep.chars.begin()->second != 1)
            fail("(i): fiber along " + c0.to_string() + " is not the expected line");
    }
    if (!seen) fail("(i): no fiber along " + c0.to_string() + " in degree " + std::to_string(target_degree));

    for (const auto& c : strata_in_closure(c0)) {
        if (c == c0) continue;
        auto lower = member_staggered_leq(setup, pullback_L(f, c), -1, r);
        auto upper = member_staggered_geq(setup, shriek_R(setup, f, c), 1, r);
        if (!lower.verdict) fail("(ii): pullback bound on " + c.to_string());
        if (!upper.verdict) fail("(ii): shriek bound on " + c.to_string());
        out.witnesses.insert(out.witnesses.end(), lower.witnesses.begin(), lower.witnesses.end());
        out.witnesses.insert(out.witnesses.end(), upper.witnesses.begin(), upper.witnesses.end());
    }

    const auto heart = in_staggered_heart(setup, f, r);
    if (!heart.verdict) fail("not in the staggered heart");
    out.witnesses.insert(out.witnesses.end(), heart.witnesses.begin(), heart.witnesses.end());
    return out;
}

DegreePair degree_formulas(const TorusSetup& setup, const Stratum& c, Int v, const Perversity& r) {
    DegreePair out{2 * v - 2 * r.at(c) + codim(setup, c), 2 * v - altitude(setup, c)};
    const Int rbar = scod(setup, c) - r.at(c);
    if (out.baric != out.skew + r.at(c) - rbar)
        throw DomainError(errc::kPrecondition, "baric and skew degrees are inconsistent", c.to_string());
    return out;
}

std::vector<IcSummand> decompose_pure(const TorusSetup& setup, const FreeComplex& f, PurityNotion notion, Int w,
                                      const Perversity& r) {
    const auto cert = notion == PurityNotion::kBaric ? is_pure(setup, f, w) : is_skew_pure(setup, f, w, r);
    if (!cert.verdict) throw DomainError(errc::kNotPure, "object is not pure of the given degree", std::to_string(w));

    const auto coh = cohomology(f);
    std::map<int, CharacterTable> tables;
    for (const auto& [k, h] : coh) {
        auto table = finite_length(h);
        if (!table)
            throw DomainError(errc::kNotFiniteLength,
                              "cohomology is not of finite length; general decomposition unsupported",
                              std::to_string(k));
        Int dim = 0;
        for (const auto& [ch, m] : *table) dim += m;
        if (dim != static_cast<Int>(h.generators().size()))
            throw DomainError(errc::kNotSemisimple, "cohomology module is not semisimple", std::to_string(k));
        tables.emplace(k, std::move(*table));
    }
    if (!iso_as_sum_of_cohomology(f))
        throw DomainError(errc::kNotFormal, "object is not the sum of its cohomology");

    const Stratum origin = Stratum::closed(setup.n());
    std::vector<IcSummand> out;
    for (const auto& [k, table] : tables)
        for (const auto& [ch, mult] : table) {
            const Int v = step(setup, origin, ch);
            const int s = static_cast<int>(r.at(origin) - v - k);
            const auto deg = degree_formulas(setup, origin, v, r);
            const Int summand_degree = notion == PurityNotion::kBaric ? deg.baric : deg.skew + s;
            if (summand_degree != w)
                throw DomainError(errc::kNotPure, "summand degree differs from the certified degree",
                                  ch.to_string());
            if (!ic_verify(setup, ic_closed(setup, ch, r), origin, ch, r).verdict)
                throw DomainError(errc::kPrecondition, "summand fails the simple-object characterization",
                                  ch.to_string());
            for (Int i = 0; i < mult; ++i) out.push_back(IcSummand{origin, ch, s});
        }
    std::sort(out.begin(), out.end(), [](const IcSummand& a, const IcSummand& b) {
        if (a.shift != b.shift) return a.shift < b.shift;
        return a.character > b.character;
    });
    return out;
}

}  // namespace stagger
