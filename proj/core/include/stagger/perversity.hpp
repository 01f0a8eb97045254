#pragma once

#include <map>
#include <set>
#include <utility>

#include "stagger/torus_geometry.hpp"

namespace stagger {

/// Integer function on strata. Usually defined on every stratum; the
/// constructions attached to a closure C0 only define it on strata of C0's
/// closure.
class Perversity {
public:
    Perversity() = default;
    explicit Perversity(std::map<Stratum, Int> values) : values_(std::move(values)) {}

    template <class F>
    static Perversity from_function(const std::vector<Stratum>& domain, F&& f) {
        std::map<Stratum, Int> v;
        for (const auto& s : domain) v.emplace(s, f(s));
        return Perversity(std::move(v));
    }

    bool defined(const Stratum& c) const { return values_.count(c) != 0; }
    /// Throws DomainError(undefined_perversity) outside the domain.
    Int at(const Stratum& c) const;
    Int operator()(const Stratum& c) const { return at(c); }
    const std::map<Stratum, Int>& values() const noexcept { return values_; }
    std::vector<Stratum> domain() const;

    bool operator==(const Perversity&) const = default;

private:
    std::map<Stratum, Int> values_;
};

enum class DualKind { kBaric, kDeligneBezrukavnikov, kStaggered };

Perversity baric_dual(const TorusSetup& setup, const Perversity& q);
Perversity db_dual(const TorusSetup& setup, const Perversity& q);
Perversity staggered_dual(const TorusSetup& setup, const Perversity& q);
Perversity dual(const TorusSetup& setup, const Perversity& q, DualKind kind);
/// Skew dual of a skew perversity: alt - cod - q.
Perversity skew_dual(const TorusSetup& setup, const Perversity& q);

/// q(C') >= q(C) whenever C' lies in the closure of C.
bool is_monotone(const Perversity& q);
bool is_comonotone(const TorusSetup& setup, const Perversity& q, DualKind kind);
/// 0 <= p(C') - p(C) <= cod C' - cod C on closure pairs.
bool is_monotone_comonotone_db(const TorusSetup& setup, const Perversity& p);

/// Self-dual perversity of the given kind. Throws DomainError(parity) naming
/// a stratum where cod (resp. scod) is odd.
Perversity middle(const TorusSetup& setup, DualKind kind);

bool is_moderate(const TorusSetup& setup, const Perversity& r);

/// Skew perversity attached to a staggered perversity: r - cod.
Perversity skew_of(const TorusSetup& setup, const Perversity& r);

/// r - 1 on strata whose closure is strictly inside the closure of c0.
Perversity flat_r(const Perversity& r, const Stratum& c0);

/// Strata of the open subscheme of the closure of c0 obtained by removing
/// closures of strata at least two codimensions deeper than c0.
std::set<Stratum> tilde_stratum_set(const TorusSetup& setup, const Stratum& c0);

/// The flat and sharp perversities of p relative to c0, defined on the closure
/// of c0. Throws DomainError(strictness) when the strict inequalities
/// 0 < p(C) - p(c0) < cod C - cod c0 fail outside the tilde set.
std::pair<Perversity, Perversity> flat_sharp_p(const TorusSetup& setup, const Perversity& p, const Stratum& c0);

struct PurePerverseData {
    Perversity p;  ///< Deligne-Bezrukavnikov perversity on the closure of c0
    Perversity q;  ///< baric perversity on the closure of c0
    Int w;         ///< baric degree
};

/// Perversities under which the intersection cohomology complex of an
/// s-pure bundle of step v on c0 is pure-perverse.
PurePerverseData ic_pp_perversities(const TorusSetup& setup, const Stratum& c0, Int v, const Perversity& r);

}  // namespace stagger
