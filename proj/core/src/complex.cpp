#include "stagger/complex.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "stagger/errors.hpp"

namespace stagger {

FreeComplex::FreeComplex(Ring ring, std::map<int, GradedFree> terms, std::map<int, GradedMatrix> diffs)
    : ring_(std::move(ring)) {
    for (auto& [k, t] : terms)
        if (!t.empty()) {
            t.n = ring_.n();
            terms_.emplace(k, std::move(t));
        }
    for (auto& [k, d] : diffs) {
        if (!(d.ring() == ring_))
            throw DomainError(errc::kRingMismatch, "differential over a different ring", std::to_string(k));
        if (!(d.source().gens == term(k).gens) || !(d.target().gens == term(k + 1).gens))
            throw DomainError(errc::kDimensionMismatch, "differential does not match terms", std::to_string(k));
        if (d.rows() == 0 || d.cols() == 0) continue;
        diffs_.emplace(k, std::move(d));
    }
    for (const auto& [k, d] : diffs_) {
        auto it = diffs_.find(k + 1);
        if (it != diffs_.end() && !compose(it->second, d).is_zero())
            throw DomainError(errc::kNotChainMap, "differentials do not square to zero", std::to_string(k));
    }
}

GradedFree FreeComplex::term(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? GradedFree(n(), {}) : it->second;
}

GradedMatrix FreeComplex::diff(int k) const {
    auto it = diffs_.find(k);
    if (it != diffs_.end()) return it->second;
    return GradedMatrix::zero(ring_, term(k), term(k + 1));
}

std::optional<int> FreeComplex::min_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

std::optional<int> FreeComplex::max_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
}

GradedMatrix ChainMap::at(int k) const {
    auto it = components.find(k);
    if (it != components.end()) return it->second;
    return GradedMatrix::zero(source.ring(), source.term(k), target.term(k));
}

void check_chain_map(const ChainMap& f) {
    if (!(f.source.ring() == f.target.ring()))
        throw DomainError(errc::kRingMismatch, "chain map between complexes over different rings");
    for (const auto& [k, m] : f.components)
        if (!(m.source().gens == f.source.term(k).gens) || !(m.target().gens == f.target.term(k).gens))
            throw DomainError(errc::kNotChainMap, "component does not match terms", std::to_string(k));
    std::set<int> degrees;
    for (const auto& [k, t] : f.source.terms()) degrees.insert(k);
    for (int k : degrees) {
        const auto lhs = compose(f.target.diff(k), f.at(k));
        const auto rhs = compose(f.at(k + 1), f.source.diff(k));
        if (!add(lhs, scale(rhs, -1)).is_zero())
            throw DomainError(errc::kNotChainMap, "map does not commute with differentials", std::to_string(k));
    }
}

FreeComplex concentrated(const Ring& ring, const GradedFree& f, int degree) {
    return FreeComplex(ring, {{degree, f}}, {});
}

namespace {

// Working form used by the builders: terms plus scalar differentials.
struct Draft {
    Ring ring;
    std::map<int, GradedFree> terms;
    std::map<int, QMatrix> diffs;

    FreeComplex build() const {
        std::map<int, GradedMatrix> d;
        for (const auto& [k, m] : diffs) {
            const auto s = terms.find(k);
            const auto t = terms.find(k + 1);
            if (s == terms.end() || t == terms.end()) continue;
            d.emplace(k, GradedMatrix(ring, s->second, t->second, m));
        }
        return FreeComplex(ring, terms, std::move(d));
    }
};

void put_block(QMatrix& dst, std::size_t r0, std::size_t c0, const GradedMatrix& m, int sign) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (sgn(m.at(r, c)) != 0) dst(r0 + r, c0 + c) = sign > 0 ? m.at(r, c) : Rational(-m.at(r, c));
}

FreeComplex tensor_same_ring(const FreeComplex& a, const FreeComplex& b) {
    const Ring& ring = a.ring();
    std::map<int, std::vector<std::pair<int, int>>> blocks;
    for (const auto& [i, fa] : a.terms())
        for (const auto& [j, fb] : b.terms()) blocks[i + j].emplace_back(i, j);

    Draft out{ring, {}, {}};
    std::map<std::pair<int, int>, std::size_t> offset;
    for (const auto& [t, list] : blocks) {
        GradedFree term(ring.n(), {});
        for (const auto& [i, j] : list) {
            offset[{i, j}] = term.size();
            term = direct_sum(term, tensor(a.term(i), b.term(j)));
        }
        out.terms.emplace(t, std::move(term));
    }
    for (const auto& [t, list] : blocks) {
        auto next = out.terms.find(t + 1);
        if (next == out.terms.end()) continue;
        QMatrix d(next->second.size(), out.terms.at(t).size());
        for (const auto& [i, j] : list) {
            const std::size_t col = offset.at({i, j});
            if (auto it = offset.find({i + 1, j}); it != offset.end())
                put_block(d, it->second, col, kron(a.diff(i), GradedMatrix::identity(ring, b.term(j))), 1);
            if (auto it = offset.find({i, j + 1}); it != offset.end())
                put_block(d, it->second, col, kron(GradedMatrix::identity(ring, a.term(i)), b.diff(j)),
                          (i % 2 == 0) ? 1 : -1);
        }
        out.diffs.emplace(t, std::move(d));
    }
    return out.build();
}

FreeComplex map_terms(const FreeComplex& f, const Ring& ring) {
    std::map<int, GradedMatrix> diffs;
    for (const auto& [k, t] : f.terms())
        if (f.terms().count(k + 1)) diffs.emplace(k, change_ring(f.diff(k), ring));
    return FreeComplex(ring, f.terms(), std::move(diffs));
}

}  // namespace

FreeComplex free_resolution(const PresentedModule& m, int max_len) {
    const auto minimal = minimize_presentation(m);
    const Ring& ring = minimal.ring();
    std::map<int, GradedFree> terms{{0, minimal.generators()}};
    std::map<int, GradedMatrix> diffs;
    GradedMatrix d = minimal.pres;
    int k = -1;
    while (d.cols() > 0) {
        if (-k > max_len)
            throw DomainError(errc::kPrecondition, "free resolution longer than the requested bound",
                              std::to_string(max_len));
        terms.emplace(k, d.source());
        diffs.emplace(k, d);
        d = syzygies(d);
        --k;
    }
    return FreeComplex(ring, std::move(terms), std::move(diffs));
}

FreeComplex koszul(int n, const std::vector<int>& indices) {
    const Ring ring = Ring::ambient(n);
    FreeComplex out = concentrated(ring, GradedFree(n, {Character::zero(n)}), 0);
    for (int i : indices) {
        GradedFree src(n, {-Character::unit(n, i)});
        GradedFree tgt(n, {Character::zero(n)});
        QMatrix one(1, 1);
        one(0, 0) = 1;
        FreeComplex two(ring, {{-1, src}, {0, tgt}}, {{-1, GradedMatrix(ring, src, tgt, one)}});
        out = tensor_same_ring(out, two);
    }
    return out;
}

FreeComplex stratum_sheaf(int n, const Stratum& z) {
    return concentrated(Ring(z), GradedFree(n, {Character::zero(n)}), 0);
}

FreeComplex skyscraper(const Character& lambda) {
    const int n = lambda.size();
    return concentrated(Ring(Stratum::closed(n)), GradedFree(n, {lambda}), 0);
}

FreeComplex shift(const FreeComplex& f, int m) {
    std::map<int, GradedFree> terms;
    std::map<int, GradedMatrix> diffs;
    for (const auto& [k, t] : f.terms()) {
        terms.emplace(k - m, t);
        if (f.terms().count(k + 1)) diffs.emplace(k - m, f.diff(k));
    }
    return FreeComplex(f.ring(), std::move(terms), std::move(diffs));
}

FreeComplex twist(const FreeComplex& f, const Character& lambda) {
    std::map<int, GradedFree> terms;
    std::map<int, GradedMatrix> diffs;
    for (const auto& [k, t] : f.terms()) {
        terms.emplace(k, twist(t, lambda));
        if (f.terms().count(k + 1)) diffs.emplace(k, twist(f.diff(k), lambda));
    }
    return FreeComplex(f.ring(), std::move(terms), std::move(diffs));
}

FreeComplex direct_sum(const FreeComplex& a, const FreeComplex& b) {
    if (!(a.ring() == b.ring())) return direct_sum(pushforward_closed(a), pushforward_closed(b));
    std::set<int> degrees;
    for (const auto& [k, t] : a.terms()) degrees.insert(k);
    for (const auto& [k, t] : b.terms()) degrees.insert(k);
    std::map<int, GradedFree> terms;
    std::map<int, GradedMatrix> diffs;
    for (int k : degrees) {
        terms.emplace(k, direct_sum(a.term(k), b.term(k)));
        diffs.emplace(k, block_diag(a.diff(k), b.diff(k)));
    }
    return FreeComplex(a.ring(), std::move(terms), std::move(diffs));
}

FreeComplex cone(const ChainMap& f) {
    check_chain_map(f);
    const Ring& ring = f.source.ring();
    std::set<int> degrees;
    for (const auto& [k, t] : f.source.terms()) degrees.insert(k - 1);
    for (const auto& [k, t] : f.target.terms()) degrees.insert(k);
    Draft out{ring, {}, {}};
    for (int k : degrees) out.terms.emplace(k, direct_sum(f.source.term(k + 1), f.target.term(k)));
    for (int k : degrees) {
        auto next = out.terms.find(k + 1);
        if (next == out.terms.end()) continue;
        const std::size_t s1 = f.source.term(k + 1).size();
        const std::size_t s2 = f.source.term(k + 2).size();
        QMatrix d(next->second.size(), out.terms.at(k).size());
        put_block(d, 0, 0, f.source.diff(k + 1), -1);
        put_block(d, s2, 0, f.at(k + 1), 1);
        put_block(d, s2, s1, f.target.diff(k), 1);
        out.diffs.emplace(k, std::move(d));
    }
    return out.build();
}

ChainMap identity_map(const FreeComplex& f) {
    ChainMap out{f, f, {}};
    for (const auto& [k, t] : f.terms()) out.components.emplace(k, GradedMatrix::identity(f.ring(), t));
    return out;
}

FreeComplex pushforward_closed(const FreeComplex& f) {
    if (f.ring().is_ambient()) return f;
    const int n = f.n();
    return tensor_same_ring(map_terms(f, Ring::ambient(n)), koszul(n, f.ring().stratum().indices()));
}

FreeComplex restrict_terms(const FreeComplex& f, const Ring& ring) {
    if (!ring.stratum().in_closure_of(f.ring().stratum()))
        throw DomainError(errc::kRingMismatch, "termwise restriction needs a smaller closure",
                          f.ring().stratum().to_string() + " -> " + ring.stratum().to_string());
    return map_terms(f, ring);
}

FreeComplex pullback_L(const FreeComplex& f, const Stratum& c) {
    return restrict_terms(pushforward_closed(f), Ring(c));
}

FreeComplex shriek_R(const TorusSetup& setup, const FreeComplex& f, const Stratum& c) {
    return dualize(setup, pullback_L(dualize(setup, f), c));
}

FreeComplex tensorL(const FreeComplex& a, const FreeComplex& b) {
    const bool amb_a = a.ring().is_ambient();
    const bool amb_b = b.ring().is_ambient();
    if (a.ring() == b.ring() && amb_a) return tensor_same_ring(a, b);
    if (amb_a) return tensor_same_ring(restrict_terms(a, b.ring()), b);
    if (amb_b) return tensor_same_ring(a, restrict_terms(b, a.ring()));
    // both on closures: keep the smaller closure (the second on a tie)
    if (a.ring().stratum().size() > b.ring().stratum().size())
        return tensor_same_ring(a, restrict_terms(pushforward_closed(b), a.ring()));
    return tensor_same_ring(restrict_terms(pushforward_closed(a), b.ring()), b);
}

namespace {

FreeComplex hom_into(const FreeComplex& f, const Character& tau, int s) {
    std::map<int, GradedFree> terms;
    std::map<int, GradedMatrix> diffs;
    for (const auto& [j, t] : f.terms()) {
        GradedFree d(f.n(), {});
        for (const auto& g : t.gens) d.gens.push_back(tau - g);
        terms.emplace(-j - s, std::move(d));
        if (f.terms().count(j + 1)) diffs.emplace(-j - 1 - s, dual_transpose(f.diff(j), tau));
    }
    return FreeComplex(f.ring(), std::move(terms), std::move(diffs));
}

}  // namespace

FreeComplex dualize(const TorusSetup& setup, const FreeComplex& f) {
    if (setup.n() != f.n()) throw DomainError(errc::kDimensionMismatch, "complex and setup differ in dimension");
    Character tau = setup.omega_twist();
    const Stratum& z = f.ring().stratum();
    for (int i : z.indices()) tau = tau + Character::unit(f.n(), i);
    const int s = static_cast<int>(setup.omega_shift()) - z.size();
    return hom_into(f, tau, s);
}

FreeComplex rhom(const TorusSetup& setup, const FreeComplex& a, const FreeComplex& b) {
    return dualize(setup, tensorL(a, dualize(setup, b)));
}

FreeComplex hom_complex(const FreeComplex& a, const FreeComplex& b) {
    const auto pa = pushforward_closed(a);
    return tensorL(hom_into(pa, Character::zero(pa.n()), 0), b);
}

namespace {

struct CohomologyPiece {
    PresentedModule module;
    GradedMatrix cycles;  // module generators -> F^k
};

std::optional<CohomologyPiece> cohomology_at(const FreeComplex& f, int k) {
    if (f.term(k).empty()) return std::nullopt;
    const GradedMatrix kernel = syzygies(f.diff(k));
    if (kernel.cols() == 0) return std::nullopt;
    const auto boundary = lift(kernel, f.diff(k - 1));
    if (!boundary) throw DomainError(errc::kNotChainMap, "image not inside kernel", std::to_string(k));
    PresentedModule raw{hstack(*boundary, syzygies(kernel))};
    std::vector<std::size_t> kept;
    auto m = minimize_presentation(raw, &kept);
    if (m.generators().empty()) return std::nullopt;
    std::vector<std::size_t> rows(kernel.rows());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    return CohomologyPiece{std::move(m), submatrix(kernel, rows, kept)};
}

}  // namespace

CohomologyTable cohomology(const FreeComplex& f) {
    CohomologyTable out;
    for (const auto& [k, t] : f.terms())
        if (auto piece = cohomology_at(f, k)) out.emplace(k, std::move(piece->module));
    return out;
}

std::size_t cohomology_piece_dim(const FreeComplex& f, int k, const Character& mu) {
    const auto src = piece_indices(f.ring(), f.term(k), mu);
    if (src.empty()) return 0;
    const std::size_t rk_out = f.term(k + 1).empty() ? 0 : rank(piece(f.diff(k), mu));
    const std::size_t rk_in = f.term(k - 1).empty() ? 0 : rank(piece(f.diff(k - 1), mu));
    return src.size() - rk_out - rk_in;
}

std::map<int, OrbitRep> derived_fiber(const FreeComplex& f, const Stratum& c) {
    std::map<int, OrbitRep> out;
    if (!c.in_closure_of(f.ring().stratum())) return out;
    const FreeComplex g = pushforward_closed(f);
    using Groups = std::map<std::vector<Int>, std::vector<std::size_t>>;
    std::map<int, Groups> groups;
    for (const auto& [k, t] : g.terms())
        for (std::size_t i = 0; i < t.size(); ++i) groups[k][restrict_character(t.gens[i], c).values].push_back(i);

    // rank of d^k on the block of one restricted character
    const auto block_rank = [&](int k, const std::vector<Int>& ch) -> std::size_t {
        auto s = groups.find(k);
        auto t = groups.find(k + 1);
        if (s == groups.end() || t == groups.end()) return 0;
        auto cs = s->second.find(ch);
        auto ct = t->second.find(ch);
        if (cs == s->second.end() || ct == t->second.end()) return 0;
        const auto d = g.diff(k);
        QMatrix sub(ct->second.size(), cs->second.size());
        for (std::size_t i = 0; i < ct->second.size(); ++i)
            for (std::size_t j = 0; j < cs->second.size(); ++j) sub(i, j) = d.at(ct->second[i], cs->second[j]);
        return rank(std::move(sub));
    };

    for (const auto& [k, by_char] : groups)
        for (const auto& [ch, idx] : by_char) {
            const auto dim = idx.size() - block_rank(k, ch) - block_rank(k - 1, ch);
            if (dim == 0) continue;
            auto [it, inserted] = out.try_emplace(k, OrbitRep{c, {}});
            it->second.add(ch, static_cast<Int>(dim));
        }
    return out;
}

FreeComplex minimize(const FreeComplex& f) {
    Draft w{f.ring(), f.terms(), {}};
    for (const auto& [k, t] : f.terms())
        if (f.terms().count(k + 1)) w.diffs.emplace(k, f.diff(k).coeffs());

    const auto erase_row = [](QMatrix& m, std::size_t r) {
        QMatrix out(m.rows() - 1, m.cols());
        for (std::size_t i = 0, o = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            for (std::size_t j = 0; j < m.cols(); ++j) out(o, j) = m(i, j);
            ++o;
        }
        m = std::move(out);
    };
    const auto erase_col = [](QMatrix& m, std::size_t c) {
        QMatrix out(m.rows(), m.cols() - 1);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0, o = 0; j < m.cols(); ++j) {
                if (j == c) continue;
                out(i, o++) = m(i, j);
            }
        m = std::move(out);
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [k, d] : w.diffs) {
            auto& src = w.terms.at(k).gens;
            auto& tgt = w.terms.at(k + 1).gens;
            std::size_t ur = 0, uc = 0;
            bool found = false;
            for (std::size_t r = 0; r < d.rows() && !found; ++r)
                for (std::size_t c = 0; c < d.cols() && !found; ++c)
                    if (sgn(d(r, c)) != 0 && tgt[r] == src[c]) {
                        ur = r;
                        uc = c;
                        found = true;
                    }
            if (!found) continue;
            const Rational u = d(ur, uc);
            for (std::size_t r = 0; r < d.rows(); ++r) {
                if (r == ur || sgn(d(r, uc)) == 0) continue;
                const Rational factor = d(r, uc) / u;
                for (std::size_t c = 0; c < d.cols(); ++c)
                    if (c != uc && sgn(d(ur, c)) != 0) d(r, c) -= factor * d(ur, c);
            }
            erase_row(d, ur);
            erase_col(d, uc);
            if (auto prev = w.diffs.find(k - 1); prev != w.diffs.end()) erase_row(prev->second, uc);
            if (auto next = w.diffs.find(k + 1); next != w.diffs.end()) erase_col(next->second, ur);
            src.erase(src.begin() + static_cast<std::ptrdiff_t>(uc));
            tgt.erase(tgt.begin() + static_cast<std::ptrdiff_t>(ur));
            changed = true;
            break;
        }
    }
    return w.build();
}

bool iso_as_sum_of_cohomology(const FreeComplex& f) {
    const FreeComplex g = minimize(pushforward_closed(f));
    const Ring& ring = g.ring();
    for (const auto& [k, t] : g.terms()) {
        auto h = cohomology_at(g, k);
        if (!h) continue;
        const FreeComplex res = free_resolution(h->module, g.n() + 1);
        // the resolution keeps the minimal generators, so phi^0 = cycles
        const int len = -*res.min_degree();

        // unknowns: entries of phi^{-j}: res^{-j} -> g^{k-j}, 1 <= j <= len
        std::map<std::tuple<int, std::size_t, std::size_t>, std::size_t> var;
        for (int j = 1; j <= len; ++j) {
            const auto src = res.term(-j);
            const auto tgt = g.term(k - j);
            for (std::size_t r = 0; r < tgt.size(); ++r)
                for (std::size_t c = 0; c < src.size(); ++c)
                    if (ring.admits(tgt.gens[r], src.gens[c])) var.emplace(std::make_tuple(j, r, c), var.size());
        }
        // equations: d_g^{k-j} phi^{-j} - phi^{-j+1} d_res^{-j} = 0
        std::vector<std::map<std::size_t, Rational>> rows;
        QVector rhs;
        for (int j = 1; j <= len; ++j) {
            const auto src = res.term(-j);
            const auto tgt = g.term(k - j + 1);
            const auto dg = g.diff(k - j);
            const auto dres = res.diff(-j);
            const GradedMatrix prev = j == 1 ? h->cycles : GradedMatrix::zero(ring, res.term(-j + 1), tgt);
            for (std::size_t r = 0; r < tgt.size(); ++r)
                for (std::size_t c = 0; c < src.size(); ++c) {
                    if (!ring.admits(tgt.gens[r], src.gens[c])) continue;
                    std::map<std::size_t, Rational> eq;
                    Rational b = 0;
                    for (std::size_t m = 0; m < dg.cols(); ++m) {
                        if (sgn(dg.at(r, m)) == 0) continue;
                        auto it = var.find(std::make_tuple(j, m, c));
                        if (it != var.end()) eq[it->second] += dg.at(r, m);
                    }
                    for (std::size_t m = 0; m < dres.rows(); ++m) {
                        if (sgn(dres.at(m, c)) == 0) continue;
                        if (j == 1) {
                            b += prev.at(r, m) * dres.at(m, c);
                        } else {
                            auto it = var.find(std::make_tuple(j - 1, r, m));
                            if (it != var.end()) eq[it->second] -= dres.at(m, c);
                        }
                    }
                    rows.push_back(std::move(eq));
                    rhs.push_back(b);
                }
        }
        if (rows.empty()) continue;
        QMatrix system(rows.size(), var.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (const auto& [v, x] : rows[i]) system(i, v) = x;
        if (!solve(std::move(system), rhs)) return false;
    }
    return true;
}

ValidationBox validation_box(const FreeComplex& f, int pad) {
    std::vector<Character> degrees;
    for (const auto& [k, t] : f.terms()) degrees.insert(degrees.end(), t.gens.begin(), t.gens.end());
    return validation_box(f.n(), degrees, pad);
}

}  // namespace stagger
