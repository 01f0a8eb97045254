#include "stagger/perversity.hpp"

#include "stagger/errors.hpp"
#include "stagger/sstructure.hpp"

namespace stagger {

Int Perversity::at(const Stratum& c) const {
    auto it = values_.find(c);
    if (it == values_.end())
        throw DomainError(errc::kUndefinedPerversity, "perversity undefined on stratum", c.to_string());
    return it->second;
}

std::vector<Stratum> Perversity::domain() const {
    std::vector<Stratum> out;
    for (const auto& [s, v] : values_) out.push_back(s);
    return out;
}

namespace {

template <class F>
Perversity pointwise(const Perversity& q, F&& f) {
    std::map<Stratum, Int> v;
    for (const auto& [s, x] : q.values()) v.emplace(s, f(s, x));
    return Perversity(std::move(v));
}

// Pairs (C', C) in the domain with C' strictly inside the closure of C.
template <class F>
bool all_closure_pairs(const Perversity& q, F&& pred) {
    for (const auto& [c, qc] : q.values())
        for (const auto& [cp, qcp] : q.values())
            if (!(cp == c) && cp.in_closure_of(c) && !pred(cp, c)) return false;
    return true;
}

}  // namespace

Perversity baric_dual(const TorusSetup& setup, const Perversity& q) {
    return pointwise(q, [&](const Stratum& s, Int x) { return 2 * altitude(setup, s) - x; });
}

Perversity db_dual(const TorusSetup& setup, const Perversity& q) {
    return pointwise(q, [&](const Stratum& s, Int x) { return codim(setup, s) - x; });
}

Perversity staggered_dual(const TorusSetup& setup, const Perversity& q) {
    return pointwise(q, [&](const Stratum& s, Int x) { return scod(setup, s) - x; });
}

Perversity dual(const TorusSetup& setup, const Perversity& q, DualKind kind) {
    switch (kind) {
        case DualKind::kBaric: return baric_dual(setup, q);
        case DualKind::kDeligneBezrukavnikov: return db_dual(setup, q);
        case DualKind::kStaggered: return staggered_dual(setup, q);
    }
    return q;
}

Perversity skew_dual(const TorusSetup& setup, const Perversity& q) {
    return pointwise(q, [&](const Stratum& s, Int x) { return altitude(setup, s) - codim(setup, s) - x; });
}

bool is_monotone(const Perversity& q) {
    return all_closure_pairs(q, [&](const Stratum& cp, const Stratum& c) { return q.at(cp) >= q.at(c); });
}

bool is_comonotone(const TorusSetup& setup, const Perversity& q, DualKind kind) {
    return is_monotone(dual(setup, q, kind));
}

bool is_monotone_comonotone_db(const TorusSetup& setup, const Perversity& p) {
    return all_closure_pairs(p, [&](const Stratum& cp, const Stratum& c) {
        Int d = p.at(cp) - p.at(c);
        return 0 <= d && d <= codim(setup, cp) - codim(setup, c);
    });
}

Perversity middle(const TorusSetup& setup, DualKind kind) {
    const auto strata = enumerate_strata(setup);
    std::map<Stratum, Int> v;
    for (const auto& s : strata) {
        Int x = 0;
        switch (kind) {
            case DualKind::kBaric: v.emplace(s, altitude(setup, s)); continue;
            case DualKind::kDeligneBezrukavnikov: x = codim(setup, s); break;
            case DualKind::kStaggered: x = scod(setup, s); break;
        }
        if (x % 2 != 0)
            throw DomainError(errc::kParity,
                              kind == DualKind::kStaggered ? "middle staggered perversity needs even scod"
                                                           : "middle Deligne-Bezrukavnikov perversity needs even cod",
                              s.to_string());
        v.emplace(s, x / 2);
    }
    return Perversity(std::move(v));
}

bool is_moderate(const TorusSetup& setup, const Perversity& r) {
    // (f2) is compared on doubled integers
    return all_closure_pairs(r, [&](const Stratum& cp, const Stratum& c) {
        const Int dr = r.at(cp) - r.at(c);
        const Int dcod = codim(setup, cp) - codim(setup, c);
        const Int dalt = altitude(setup, cp) - altitude(setup, c);
        const bool f1 = dcod <= dr && dr <= dalt;
        const bool f2 = dalt <= 2 * dr && 2 * dr <= dalt + 2 * dcod;
        return f1 && f2;
    });
}

Perversity skew_of(const TorusSetup& setup, const Perversity& r) {
    return pointwise(r, [&](const Stratum& s, Int x) { return x - codim(setup, s); });
}

Perversity flat_r(const Perversity& r, const Stratum& c0) {
    return pointwise(r, [&](const Stratum& s, Int x) {
        return (s.in_closure_of(c0) && !(s == c0)) ? x - 1 : x;
    });
}

std::set<Stratum> tilde_stratum_set(const TorusSetup& setup, const Stratum& c0) {
    const auto closure = strata_in_closure(c0);
    std::set<Stratum> out;
    for (const auto& c : closure) {
        bool removed = false;
        for (const auto& deep : closure)
            if (codim(setup, deep) - codim(setup, c0) >= 2 && c.in_closure_of(deep)) removed = true;
        if (!removed) out.insert(c);
    }
    return out;
}

std::pair<Perversity, Perversity> flat_sharp_p(const TorusSetup& setup, const Perversity& p, const Stratum& c0) {
    const auto tilde = tilde_stratum_set(setup, c0);
    const Int p0 = p.at(c0);
    std::map<Stratum, Int> flat, sharp;
    for (const auto& c : strata_in_closure(c0)) {
        if (tilde.count(c)) {
            flat.emplace(c, p0);
            sharp.emplace(c, c == c0 ? p0 : p0 + 1);
        } else {
            const Int d = p.at(c) - p0;
            if (!(0 < d && d < codim(setup, c) - codim(setup, c0)))
                throw DomainError(errc::kStrictness,
                                  "perversity violates 0 < p(C) - p(C0) < cod C - cod C0 outside the tilde set",
                                  c.to_string());
            flat.emplace(c, p.at(c) - 1);
            sharp.emplace(c, p.at(c) + 1);
        }
    }
    return {Perversity(std::move(flat)), Perversity(std::move(sharp))};
}

PurePerverseData ic_pp_perversities(const TorusSetup& setup, const Stratum& c0, Int v, const Perversity& r) {
    const auto tilde = tilde_stratum_set(setup, c0);
    const Int r0 = r.at(c0);
    const Int cod0 = codim(setup, c0);
    const Int alt0 = altitude(setup, c0);
    std::map<Stratum, Int> p, q;
    for (const auto& c : strata_in_closure(c0)) {
        const Int dcod = codim(setup, c) - cod0;
        const Int base_q = alt0 + 2 * r.at(c) - 2 * r0 - 2 * dcod;
        if (tilde.count(c)) {
            p.emplace(c, r0 - v);
            q.emplace(c, base_q);
        } else {
            p.emplace(c, r0 - v + dcod - 1);
            q.emplace(c, base_q + 1);
        }
    }
    return {Perversity(std::move(p)), Perversity(std::move(q)), 2 * v - alt0};
}

}  // namespace stagger
