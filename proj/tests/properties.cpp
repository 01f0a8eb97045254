#include "properties.hpp"

#include <functional>
#include <limits>
#include <optional>

#include "support.hpp"

namespace stagger::testing {

namespace {

constexpr int kCases = 100;

Character random_character(std::mt19937& rng, int n, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    std::vector<Int> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = d(rng);
    return Character(v);
}

Stratum random_stratum(std::mt19937& rng, int n) {
    return Stratum(n, std::uniform_int_distribution<std::uint32_t>(0, (1u << n) - 1)(rng));
}

/// Random homogeneous matrix: entries only where a monomial exists.
GradedMatrix random_matrix(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> rows(1, 2), cols(1, 3), coeff(-2, 2);
    GradedFree target(n, {});
    GradedFree source(n, {});
    for (int i = rows(rng); i > 0; --i) target.gens.push_back(random_character(rng, n, -1, 0));
    for (int i = cols(rng); i > 0; --i) source.gens.push_back(random_character(rng, n, -2, -1));
    const Ring ring = Ring::ambient(n);
    QMatrix c(target.size(), source.size());
    for (std::size_t r = 0; r < target.size(); ++r)
        for (std::size_t j = 0; j < source.size(); ++j)
            if (ring.admits(target.gens[r], source.gens[j])) c(r, j) = coeff(rng);
    return GradedMatrix(ring, source, target, c);
}

FreeComplex random_object(std::mt19937& rng) {
    std::uniform_int_distribution<int> kind(0, 2), sh(-3, 3);
    const int k = sh(rng);
    switch (kind(rng)) {
        case 0:
            return shift(twist(stratum_sheaf(3, random_stratum(rng, 3)), random_character(rng, 3, -2, 2)), k);
        case 1:
            return shift(skyscraper(random_character(rng, 3, -2, 2)), k);
        default:
            return shift(free_resolution(random_monomial_module(rng, 3), 3), k);
    }
}

TorusSetup random_setup(std::mt19937& rng, int n) {
    std::vector<Int> form(static_cast<std::size_t>(n));
    std::uniform_int_distribution<int> d(1, 3), s(-1, 1);
    for (auto& x : form) x = d(rng);
    return TorusSetup::global_linear(n, form, random_character(rng, n, -1, 1), s(rng));
}

Perversity random_perversity(std::mt19937& rng, const TorusSetup& setup) {
    std::uniform_int_distribution<int> d(-4, 6);
    return Perversity::from_function(enumerate_strata(setup), [&](const Stratum&) { return Int{d(rng)}; });
}

/// dim Hom(F, G[k]) in the equivariant derived category: the invariant part
/// of H^k of the internal Hom.
std::size_t ext_dim(const FreeComplex& f, const FreeComplex& g, int k) {
    return cohomology_piece_dim(hom_complex(f, g), k, Character::zero(f.n()));
}

std::string at_case(int i) { return "case " + std::to_string(i); }

struct Bounds {
    FreeComplex f;
    std::optional<Int> leq;  // least w with F in the lower half
    std::optional<Int> geq;  // greatest w with F in the upper half
};

using MemberFn = std::function<bool(const FreeComplex&, Int)>;

PropertyReport orthogonality(const std::string& name, unsigned seed, const MemberFn& leq, const MemberFn& geq) {
    PropertyReport rep{name};
    std::mt19937 rng(seed);
    std::vector<Bounds> pool;
    for (int i = 0; i < 36; ++i) {
        Bounds b{random_object(rng), {}, {}};
        for (Int w = -24; w <= 24 && !b.leq; ++w)
            if (leq(b.f, w)) b.leq = w;
        for (Int w = 24; w >= -24 && !b.geq; --w)
            if (geq(b.f, w)) b.geq = w;
        pool.push_back(std::move(b));
    }
    int tight = 0;
    int nonzero_elsewhere = 0;
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = 0; j < pool.size(); ++j) {
            const auto& a = pool[i];
            const auto& b = pool[j];
            if (!a.leq || !b.geq) continue;
            const std::size_t hom = ext_dim(a.f, b.f, 0);
            if (*a.leq + 1 <= *b.geq) {
                ++rep.cases;
                if (*a.leq + 1 == *b.geq) ++tight;
                rep.check(hom == 0, "pair " + std::to_string(i) + "," + std::to_string(j) + ": Hom of dimension " +
                                        std::to_string(hom));
            } else if (hom != 0) {
                ++nonzero_elsewhere;
            }
        }
    // tight pairs exist, and Hom does not vanish across the board
    rep.informative = tight > 0 && nonzero_elsewhere > 0;
    return rep;
}

}  // namespace

PropertyReport syzygy_completeness() {
    PropertyReport rep{"syzygy completeness"};
    std::mt19937 rng(11);
    for (int i = 0; i < kCases; ++i, ++rep.cases) {
        const auto phi = random_matrix(rng, 3);
        const auto sigma = syzygies(phi);
        rep.check(sigma.target() == phi.source(), at_case(i) + ": target mismatch");
        rep.check(compose(phi, sigma).is_zero(), at_case(i) + ": composite is not zero");
        auto degrees = phi.source().gens;
        degrees.insert(degrees.end(), phi.target().gens.begin(), phi.target().gens.end());
        validation_box(3, degrees, 3).for_each([&](const Character& mu) {
            const std::size_t kernel = piece_indices(phi.ring(), phi.source(), mu).size() - rank(piece(phi, mu));
            rep.check(rank(piece(sigma, mu)) == kernel, at_case(i) + ": image misses kernel at " + mu.to_string());
        });
    }
    return rep;
}

PropertyReport resolution_euler_characteristic() {
    PropertyReport rep{"resolution exactness and Euler characteristic"};
    std::mt19937 rng(12);
    for (int i = 0; i < kCases; ++i, ++rep.cases) {
        std::vector<Character> mons;
        Character lambda;
        const auto m = random_monomial_module(rng, 3, &mons, &lambda);
        const auto res = free_resolution(m, 3);
        validation_box(3, {lambda}, 3).for_each([&](const Character& mu) {
            Int chi = 0;
            for (const auto& [k, t] : res.terms())
                chi += (k % 2 == 0 ? 1 : -1) * static_cast<Int>(piece_indices(res.ring(), t, mu).size());
            rep.check(chi == static_cast<Int>(brute_piece_dim(mons, lambda, mu)),
                      at_case(i) + ": Euler characteristic at " + mu.to_string());
            for (int k = -3; k < 0; ++k)
                rep.check(rank_nullity_h(res, k, mu) == 0, at_case(i) + ": homology in degree " + std::to_string(k));
        });
    }
    return rep;
}

PropertyReport biduality() {
    PropertyReport rep{"biduality of cohomology tables"};
    std::mt19937 rng(13);
    for (int i = 0; i < kCases; ++i, ++rep.cases) {
        const auto setup = random_setup(rng, 3);
        const auto f = random_object(rng);
        const auto box = validation_box(f, 2);
        rep.check(cohomology_dims(dualize(setup, dualize(setup, f)), box) == cohomology_dims(f, box), at_case(i));
    }
    return rep;
}

PropertyReport duality_commutes_with_pushforward() {
    PropertyReport rep{"duality commutes with closed pushforward"};
    std::mt19937 rng(14);
    for (int i = 0; i < kCases; ++i, ++rep.cases) {
        const auto setup = random_setup(rng, 3);
        const Stratum z = random_stratum(rng, 3);
        // a monomial quotient of the closure ring, resolved there
        std::vector<Character> mons;
        std::uniform_int_distribution<int> cnt(0, 2), e(0, 2);
        for (int j = cnt(rng); j > 0; --j) {
            std::vector<Int> v(3);
            for (int c = 1; c <= 3; ++c) v[static_cast<std::size_t>(c - 1)] = z.vanishes(c) ? 0 : e(rng);
            mons.push_back(Character(v));
        }
        const Ring ring(z);
        const auto f = shift(free_resolution(monomial_quotient(ring, mons, random_character(rng, 3, -1, 1)), 3),
                             std::uniform_int_distribution<int>(-2, 2)(rng));
        const auto lhs = dualize(setup, f);
        const auto rhs = dualize(setup, pushforward_closed(f));
        auto degrees = all_generators(pushforward_closed(lhs));
        const auto more = all_generators(rhs);
        degrees.insert(degrees.end(), more.begin(), more.end());
        if (degrees.empty()) continue;
        const auto box = validation_box(3, degrees, 1);
        rep.check(cohomology_dims(lhs, box) == cohomology_dims(rhs, box), at_case(i) + " on " + z.to_string());
    }
    return rep;
}

PropertyReport baric_orthogonality() {
    const auto setup = worked_setup();
    const auto q = middle(setup, DualKind::kBaric);
    return orthogonality(
        "baric orthogonality", 15, [&](const FreeComplex& f, Int w) { return member_baric_leq(setup, f, w, q).verdict; },
        [&](const FreeComplex& f, Int w) { return member_baric_geq(setup, f, w, q).verdict; });
}

PropertyReport skew_orthogonality() {
    const auto setup = worked_setup();
    const auto r = middle(setup, DualKind::kStaggered);
    return orthogonality(
        "skew orthogonality", 16, [&](const FreeComplex& f, Int w) { return member_skew_leq(setup, f, w, r).verdict; },
        [&](const FreeComplex& f, Int w) { return member_skew_geq(setup, f, w, r).verdict; });
}

PropertyReport ext_vanishing_at_closed_orbit() {
    PropertyReport rep{"Ext vanishing at the closed orbit"};
    std::mt19937 rng(17);
    const auto setup = worked_setup();
    const Stratum origin = Stratum::closed(3);
    int nonzero = 0;
    for (int i = 0; rep.cases < kCases && i < 10 * kCases; ++i) {
        Character lambda;
        const auto m = random_monomial_module(rng, 3, nullptr, &lambda);
        const auto fiber = restrict_to_stratum(m, origin);
        // finite-length quotient supported at the origin, twisted near F's generator
        std::vector<Character> mons{ch({2, 0, 0}), ch({0, 2, 0}), ch({0, 0, 1})};
        mons.push_back(random_character(rng, 3, 0, 1));
        const auto g = monomial_quotient(Ring::ambient(3), mons, lambda + random_character(rng, 3, -1, 1));
        const auto table = finite_length(g);
        if (fiber.empty() || !table || table->empty()) continue;
        ++rep.cases;
        const Int w = *max_step(setup, fiber);
        Int v = std::numeric_limits<Int>::max();
        for (const auto& [c, mult] : *table) v = std::min(v, step(setup, origin, c));
        const auto f = free_resolution(m, 3);
        const auto gr = free_resolution(g, 3);
        for (int k = static_cast<int>(w - v) + 1; k <= 4; ++k)
            rep.check(ext_dim(f, gr, k) == 0, at_case(i) + ": Ext^" + std::to_string(k) + " with w - v = " +
                                                  std::to_string(w - v));
        for (int k = 0; k <= static_cast<int>(w - v); ++k)
            if (ext_dim(f, gr, k) != 0) {
                ++nonzero;
                break;
            }
    }
    // Ext does not vanish identically below the bound
    rep.informative = nonzero > 0;
    return rep;
}

PropertyReport sigma_partition() {
    PropertyReport rep{"sigma partition identities"};
    std::mt19937 rng(18);
    for (int i = 0; i < kCases; ++i, ++rep.cases) {
        const auto setup = random_setup(rng, 3);
        const Stratum c = random_stratum(rng, 3);
        OrbitRep orbit{c, {}};
        std::uniform_int_distribution<int> cnt(0, 5), mult(1, 3);
        for (int j = cnt(rng); j > 0; --j)
            orbit.add(restrict_character(random_character(rng, 3, -3, 3), c).values, mult(rng));
        const Int w = std::uniform_int_distribution<int>(-6, 6)(rng);
        const auto lo = sigma_leq(setup, orbit, w);
        const auto hi = sigma_geq(setup, orbit, w + 1);
        OrbitRep joined = lo;
        for (const auto& [chr, m] : hi.chars) joined.add(chr, m);
        rep.check(joined == orbit, at_case(i) + ": pieces do not reassemble");
        for (const auto& [chr, m] : lo.chars) rep.check(!hi.chars.count(chr), at_case(i) + ": overlap");
        rep.check(sigma_leq(setup, lo, w) == lo, at_case(i) + ": not idempotent");
        const auto wider = sigma_leq(setup, orbit, w + 1);
        for (const auto& [chr, m] : lo.chars)
            rep.check(wider.chars.count(chr) && wider.chars.at(chr) == m, at_case(i) + ": not monotone");
    }
    return rep;
}

PropertyReport perversity_duals_are_involutions() {
    PropertyReport rep{"perversity duals are involutions"};
    std::mt19937 rng(19);
    for (int i = 0; i < kCases; ++i, ++rep.cases) {
        const int n = std::uniform_int_distribution<int>(0, 3)(rng);
        const auto setup = random_setup(rng, n);
        const auto q = random_perversity(rng, setup);
        rep.check(baric_dual(setup, baric_dual(setup, q)) == q, at_case(i) + ": baric");
        rep.check(db_dual(setup, db_dual(setup, q)) == q, at_case(i) + ": db");
        rep.check(staggered_dual(setup, staggered_dual(setup, q)) == q, at_case(i) + ": staggered");
        rep.check(skew_dual(setup, skew_dual(setup, q)) == q, at_case(i) + ": skew");
        rep.check(skew_of(setup, staggered_dual(setup, q)) == skew_dual(setup, skew_of(setup, q)),
                  at_case(i) + ": skew of staggered dual");
        rep.check(is_moderate(setup, q) == is_moderate(setup, staggered_dual(setup, q)), at_case(i) + ": moderate");
    }
    return rep;
}

PropertyReport simples_are_pure() {
    PropertyReport rep{"simple objects are pure of the predicted degree"};
    std::mt19937 rng(20);
    const auto setup = worked_setup();
    const auto r = middle(setup, DualKind::kStaggered);
    const Stratum origin = Stratum::closed(3);
    for (int i = 0; i < kCases; ++i, ++rep.cases) {
        const auto lambda = random_character(rng, 3, -3, 3);
        const auto f = ic_closed(setup, lambda, r);
        const auto d = degree_formulas(setup, origin, step(setup, origin, lambda), r);
        rep.check(is_pure(setup, f, d.baric).verdict, lambda.to_string() + ": baric");
        rep.check(is_skew_pure(setup, f, d.skew, r).verdict, lambda.to_string() + ": skew");
        rep.check(in_staggered_heart(setup, f, r).verdict, lambda.to_string() + ": heart");
    }
    return rep;
}

PropertyReport pure_ext_bound() {
    PropertyReport rep{"Ext bound between skew-pure simples"};
    std::mt19937 rng(21);
    const auto setup = worked_setup();
    const auto r = middle(setup, DualKind::kStaggered);
    const Stratum origin = Stratum::closed(3);
    for (int i = 0; i < kCases; ++i, ++rep.cases) {
        const auto a = random_character(rng, 3, -2, 2);
        const auto b = random_character(rng, 3, -2, 2);
        const auto fa = ic_closed(setup, a, r);
        const auto fb = ic_closed(setup, b, r);
        const Int wa = degree_formulas(setup, origin, step(setup, origin, a), r).skew;
        const Int wb = degree_formulas(setup, origin, step(setup, origin, b), r).skew;
        for (int k = static_cast<int>(wa - wb) + 1; k <= static_cast<int>(wa - wb) + 8; ++k)
            rep.check(ext_dim(fa, fb, k) == 0, a.to_string() + " " + b.to_string() + " k " + std::to_string(k));
    }
    return rep;
}

}  // namespace stagger::testing
