#pragma once

#include <map>
#include <random>
#include <vector>

#include "stagger/complex.hpp"
#include "stagger/perversity.hpp"
#include "stagger/purity.hpp"

namespace stagger::testing {

inline Character ch(std::vector<Int> v) { return Character(std::move(v)); }
inline Stratum st(int n, std::vector<int> idx) { return Stratum::from_indices(n, idx); }

/// n = 3 with cocharacter (1,1,1) on every stratum and trivial dualizing twist.
inline TorusSetup worked_setup() { return TorusSetup::global_linear(3, {1, 1, 1}); }

inline FreeComplex ox() { return stratum_sheaf(3, st(3, {2, 3})); }
inline FreeComplex oz() { return stratum_sheaf(3, st(3, {1, 2})); }
inline FreeComplex structure_sheaf(int n) { return concentrated(Ring::ambient(n), GradedFree(n, {Character::zero(n)}), 0); }

/// Monomial count: A(lambda)/(monomials) is one-dimensional in degree mu iff
/// lambda - mu is a monomial not divisible by any listed monomial.
inline std::size_t brute_piece_dim(const std::vector<Character>& monomials, const Character& lambda,
                                   const Character& mu) {
    const Character e = lambda - mu;
    for (auto x : e.entries())
        if (x < 0) return 0;
    for (const auto& m : monomials) {
        bool divides = true;
        for (int i = 0; i < e.size(); ++i)
            if (m[static_cast<std::size_t>(i)] > e[static_cast<std::size_t>(i)]) divides = false;
        if (divides) return 0;
    }
    return 1;
}

/// dim H^k in degree mu, straight from the graded pieces of the differentials.
inline std::size_t rank_nullity_h(const FreeComplex& f, int k, const Character& mu) {
    const auto dk = f.diff(k);
    const auto dk1 = f.diff(k - 1);
    const std::size_t dim = piece_indices(f.ring(), f.term(k), mu).size();
    return dim - rank(piece(dk, mu)) - rank(piece(dk1, mu));
}

/// Piece dimensions of every cohomology module of the ambient pushforward,
/// indexed by (k, mu) over the given box.
inline std::map<std::pair<int, Character>, std::size_t> cohomology_dims(const FreeComplex& f, const ValidationBox& box) {
    const FreeComplex g = pushforward_closed(f);
    std::map<std::pair<int, Character>, std::size_t> out;
    if (g.is_zero()) return out;
    for (int k = *g.min_degree(); k <= *g.max_degree(); ++k)
        box.for_each([&](const Character& mu) {
            if (auto d = rank_nullity_h(g, k, mu)) out[{k, mu}] = d;
        });
    return out;
}

inline std::vector<Character> all_generators(const FreeComplex& f) {
    std::vector<Character> out;
    for (const auto& [k, t] : f.terms()) out.insert(out.end(), t.gens.begin(), t.gens.end());
    return out;
}

/// Small random monomial quotient A(lambda)/(m_1, ..., m_j) in n variables.
inline PresentedModule random_monomial_module(std::mt19937& rng, int n, std::vector<Character>* monomials = nullptr,
                                              Character* twist_out = nullptr) {
    std::uniform_int_distribution<int> count(0, 3), expo(0, 2), tw(-1, 1);
    std::vector<Character> mons;
    const int j = count(rng);
    for (int i = 0; i < j; ++i) {
        std::vector<Int> e(static_cast<std::size_t>(n));
        for (auto& x : e) x = expo(rng);
        mons.push_back(Character(e));
    }
    std::vector<Int> l(static_cast<std::size_t>(n));
    for (auto& x : l) x = tw(rng);
    const Character lambda(l);
    if (monomials) *monomials = mons;
    if (twist_out) *twist_out = lambda;
    return monomial_quotient(Ring::ambient(n), mons, lambda);
}

}  // namespace stagger::testing
