#include "stagger/sstructure.hpp"

#include <algorithm>

#include "stagger/errors.hpp"

namespace stagger {

namespace {

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void check_rank(const AbstractOrbitClass& cls, const std::vector<Int>& phi) {
    if (phi.size() != static_cast<std::size_t>(cls.rank))
        throw DomainError(errc::kDimensionMismatch, "cocharacter rank differs from orbit class rank");
    for (const auto& u : cls.upsilon)
        if (u.size() != static_cast<std::size_t>(cls.rank))
            throw DomainError(errc::kDimensionMismatch, "weight vector length differs from orbit class rank");
}

}  // namespace

bool is_semifocused(const AbstractOrbitClass& cls, const std::vector<Int>& phi) {
    check_rank(cls, phi);
    return std::all_of(cls.upsilon.begin(), cls.upsilon.end(),
                       [&](const auto& u) { return dot(phi, u) <= 0; });
}

bool is_focused(const AbstractOrbitClass& cls, const std::vector<Int>& phi) {
    check_rank(cls, phi);
    return std::all_of(cls.upsilon.begin(), cls.upsilon.end(),
                       [&](const auto& u) { return dot(phi, u) < 0; });
}

std::optional<int> distinguishing_basis_character(const std::vector<Int>& phi, const std::vector<Int>& psi) {
    if (phi.size() != psi.size()) throw DomainError(errc::kDimensionMismatch, "cocharacter ranks differ");
    for (std::size_t i = 0; i < phi.size(); ++i)
        if (phi[i] != psi[i]) return static_cast<int>(i + 1);
    return std::nullopt;
}

Int step(const TorusSetup& setup, const Stratum& c, const Character& lambda) {
    return pair(setup.cocharacter(c), lambda);
}

Int step(const TorusSetup& setup, const StabilizerCharacter& lambda) {
    return pair(setup.cocharacter(lambda.support), lambda);
}

bool is_recessed(const TorusSetup& setup) {
    for (const auto& c : enumerate_strata(setup))
        for (const auto& u : conormal_weights(c))
            if (step(setup, u) > -1) return false;
    return true;
}

Int altitude(const TorusSetup& setup, const Stratum& c) {
    Character twist = setup.omega_twist();
    for (int i : c.indices()) twist = twist + Character::unit(setup.n(), i);
    return step(setup, c, twist);
}

Int scod(const TorusSetup& setup, const Stratum& c) { return altitude(setup, c) + codim(setup, c); }

Int OrbitRep::dimension() const {
    Int d = 0;
    for (const auto& [ch, m] : chars) d += m;
    return d;
}

void OrbitRep::add(const std::vector<Int>& character, Int multiplicity) {
    if (multiplicity <= 0) return;
    if (character.size() != static_cast<std::size_t>(stratum.size()))
        throw DomainError(errc::kDimensionMismatch, "character does not live on the stabilizer of the stratum");
    chars[character] += multiplicity;
}

OrbitRep sigma_leq(const TorusSetup& setup, const OrbitRep& rep, Int w) {
    OrbitRep out{rep.stratum, {}};
    const auto& phi = setup.cocharacter(rep.stratum);
    for (const auto& [ch, m] : rep.chars)
        if (dot(phi.values, ch) <= w) out.chars.emplace(ch, m);
    return out;
}

OrbitRep sigma_geq(const TorusSetup& setup, const OrbitRep& rep, Int w) {
    OrbitRep out{rep.stratum, {}};
    const auto& phi = setup.cocharacter(rep.stratum);
    for (const auto& [ch, m] : rep.chars)
        if (dot(phi.values, ch) >= w) out.chars.emplace(ch, m);
    return out;
}

std::optional<Int> max_step(const TorusSetup& setup, const OrbitRep& rep) {
    std::optional<Int> best;
    const auto& phi = setup.cocharacter(rep.stratum);
    for (const auto& [ch, m] : rep.chars) {
        Int s = dot(phi.values, ch);
        if (!best || s > *best) best = s;
    }
    return best;
}

std::optional<Int> min_step(const TorusSetup& setup, const OrbitRep& rep) {
    std::optional<Int> best;
    const auto& phi = setup.cocharacter(rep.stratum);
    for (const auto& [ch, m] : rep.chars) {
        Int s = dot(phi.values, ch);
        if (!best || s < *best) best = s;
    }
    return best;
}

}  // namespace stagger
