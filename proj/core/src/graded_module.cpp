#include "stagger/graded_module.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <string>

#include "stagger/errors.hpp"

namespace stagger {

GradedFree::GradedFree(int ambient, std::vector<Character> g) : n(ambient), gens(std::move(g)) {
    for (const auto& c : gens)
        if (c.size() != n) throw DomainError(errc::kDimensionMismatch, "generator character has wrong length");
}

GradedFree direct_sum(const GradedFree& a, const GradedFree& b) {
    if (a.n != b.n) throw DomainError(errc::kDimensionMismatch, "free modules over different ambient spaces");
    GradedFree out = a;
    out.gens.insert(out.gens.end(), b.gens.begin(), b.gens.end());
    return out;
}

GradedFree twist(const GradedFree& f, const Character& lambda) {
    GradedFree out = f;
    for (auto& g : out.gens) g = g + lambda;
    return out;
}

GradedFree tensor(const GradedFree& a, const GradedFree& b) {
    GradedFree out(a.n, {});
    out.gens.reserve(a.size() * b.size());
    for (const auto& x : a.gens)
        for (const auto& y : b.gens) out.gens.push_back(x + y);
    return out;
}

GradedMatrix::GradedMatrix(Ring ring, GradedFree source, GradedFree target, QMatrix coeffs)
    : ring_(std::move(ring)), source_(std::move(source)), target_(std::move(target)), coeffs_(std::move(coeffs)) {
    if (coeffs_.rows() != target_.size() || coeffs_.cols() != source_.size())
        throw DomainError(errc::kDimensionMismatch, "coefficient matrix does not match source/target ranks");
    if (source_.n != ring_.n() || target_.n != ring_.n()) {
        if (!(source_.empty() && source_.n == 0) && source_.n != ring_.n())
            throw DomainError(errc::kDimensionMismatch, "source lives over a different ambient space");
        if (!(target_.empty() && target_.n == 0) && target_.n != ring_.n())
            throw DomainError(errc::kDimensionMismatch, "target lives over a different ambient space");
        source_.n = target_.n = ring_.n();
    }
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < cols(); ++c)
            if (sgn(coeffs_(r, c)) != 0 && !ring_.admits(target_.gens[r], source_.gens[c]))
                throw DomainError(errc::kHomogeneity, "entry has no monomial of the forced degree",
                                  "(" + std::to_string(r) + "," + std::to_string(c) + ") exponent " +
                                      exponent(r, c).to_string());
}

GradedMatrix GradedMatrix::zero(const Ring& ring, const GradedFree& source, const GradedFree& target) {
    return GradedMatrix(ring, source, target, QMatrix(target.size(), source.size()));
}

GradedMatrix GradedMatrix::identity(const Ring& ring, const GradedFree& f) {
    QMatrix m(f.size(), f.size());
    for (std::size_t i = 0; i < f.size(); ++i) m(i, i) = 1;
    return GradedMatrix(ring, f, f, std::move(m));
}

bool GradedMatrix::is_zero() const {
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < cols(); ++c)
            if (sgn(coeffs_(r, c)) != 0) return false;
    return true;
}

bool GradedMatrix::operator==(const GradedMatrix& o) const {
    if (!(ring_ == o.ring_) || !(source_.gens == o.source_.gens) || !(target_.gens == o.target_.gens)) return false;
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < cols(); ++c)
            if (coeffs_(r, c) != o.coeffs_(r, c)) return false;
    return true;
}

std::vector<std::size_t> piece_indices(const Ring& ring, const GradedFree& f, const Character& mu) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (ring.admits(f.gens[i], mu)) out.push_back(i);
    return out;
}

QMatrix piece(const GradedMatrix& m, const Character& mu) {
    const auto rows = piece_indices(m.ring(), m.target(), mu);
    const auto cols = piece_indices(m.ring(), m.source(), mu);
    QMatrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m.at(rows[i], cols[j]);
    return out;
}

namespace {

void require_same_ring(const GradedMatrix& a, const GradedMatrix& b) {
    if (!(a.ring() == b.ring()))
        throw DomainError(errc::kRingMismatch, "maps live over different closure rings",
                          a.ring().stratum().to_string() + " vs " + b.ring().stratum().to_string());
}

}  // namespace

GradedMatrix compose(const GradedMatrix& f, const GradedMatrix& g) {
    require_same_ring(f, g);
    if (!(f.source().gens == g.target().gens))
        throw DomainError(errc::kDimensionMismatch, "composition of maps with mismatched middle term");
    QMatrix out(f.rows(), g.cols());
    for (std::size_t k = 0; k < f.cols(); ++k)
        for (std::size_t r = 0; r < f.rows(); ++r) {
            if (sgn(f.at(r, k)) == 0) continue;
            for (std::size_t c = 0; c < g.cols(); ++c)
                if (sgn(g.at(k, c)) != 0) out(r, c) += f.at(r, k) * g.at(k, c);
        }
    return GradedMatrix(f.ring(), g.source(), f.target(), std::move(out));
}

GradedMatrix scale(const GradedMatrix& m, const Rational& s) {
    QMatrix out = m.coeffs();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) *= s;
    return GradedMatrix(m.ring(), m.source(), m.target(), std::move(out));
}

GradedMatrix add(const GradedMatrix& a, const GradedMatrix& b) {
    require_same_ring(a, b);
    if (!(a.source().gens == b.source().gens) || !(a.target().gens == b.target().gens))
        throw DomainError(errc::kDimensionMismatch, "sum of maps between different frees");
    QMatrix out = a.coeffs();
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) += b.at(r, c);
    return GradedMatrix(a.ring(), a.source(), a.target(), std::move(out));
}

GradedMatrix hstack(const GradedMatrix& a, const GradedMatrix& b) {
    require_same_ring(a, b);
    if (!(a.target().gens == b.target().gens))
        throw DomainError(errc::kDimensionMismatch, "hstack of maps with different targets");
    QMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a.at(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b.at(r, c);
    }
    return GradedMatrix(a.ring(), direct_sum(a.source(), b.source()), a.target(), std::move(out));
}

GradedMatrix block_diag(const GradedMatrix& a, const GradedMatrix& b) {
    require_same_ring(a, b);
    QMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a.at(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b.at(r, c);
    return GradedMatrix(a.ring(), direct_sum(a.source(), b.source()), direct_sum(a.target(), b.target()),
                        std::move(out));
}

GradedMatrix kron(const GradedMatrix& a, const GradedMatrix& b) {
    require_same_ring(a, b);
    QMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a.at(i, k)) == 0) continue;
            for (std::size_t j = 0; j < b.rows(); ++j)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (sgn(b.at(j, l)) != 0) out(i * b.rows() + j, k * b.cols() + l) = a.at(i, k) * b.at(j, l);
        }
    return GradedMatrix(a.ring(), tensor(a.source(), b.source()), tensor(a.target(), b.target()), std::move(out));
}

GradedMatrix twist(const GradedMatrix& m, const Character& lambda) {
    return GradedMatrix(m.ring(), twist(m.source(), lambda), twist(m.target(), lambda), m.coeffs());
}

GradedMatrix dual_transpose(const GradedMatrix& m, const Character& tau) {
    GradedFree src(m.ring().n(), {});
    GradedFree tgt(m.ring().n(), {});
    for (const auto& g : m.target().gens) src.gens.push_back(tau - g);
    for (const auto& g : m.source().gens) tgt.gens.push_back(tau - g);
    QMatrix out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m.at(r, c);
    return GradedMatrix(m.ring(), std::move(src), std::move(tgt), std::move(out));
}

GradedMatrix submatrix(const GradedMatrix& m, const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) {
    GradedFree src(m.ring().n(), {});
    GradedFree tgt(m.ring().n(), {});
    for (auto c : cols) src.gens.push_back(m.source().gens[c]);
    for (auto r : rows) tgt.gens.push_back(m.target().gens[r]);
    QMatrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m.at(rows[i], cols[j]);
    return GradedMatrix(m.ring(), std::move(src), std::move(tgt), std::move(out));
}

GradedMatrix change_ring(const GradedMatrix& m, const Ring& ring) {
    const auto from = m.ring().stratum().mask();
    const auto to = ring.stratum().mask();
    if ((from & ~to) != 0 && (to & ~from) != 0)
        throw DomainError(errc::kRingMismatch, "closure rings are not nested",
                          m.ring().stratum().to_string() + " vs " + ring.stratum().to_string());
    QMatrix out = m.coeffs();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (sgn(out(r, c)) != 0 && !ring.admits(m.target().gens[r], m.source().gens[c])) out(r, c) = 0;
    return GradedMatrix(ring, m.source(), m.target(), std::move(out));
}

namespace {

// Componentwise minima of every subset of degrees sharing the values on the
// ring's vanishing coordinates.
std::vector<Character> meet_closure(const Ring& ring, const std::vector<Character>& degrees) {
    std::set<Character> seen(degrees.begin(), degrees.end());
    std::deque<Character> work(seen.begin(), seen.end());
    const auto same_fixed = [&](const Character& a, const Character& b) {
        for (int i : ring.stratum().indices())
            if (a[static_cast<std::size_t>(i - 1)] != b[static_cast<std::size_t>(i - 1)]) return false;
        return true;
    };
    while (!work.empty()) {
        Character x = work.front();
        work.pop_front();
        std::vector<Character> fresh;
        for (const auto& y : seen) {
            if (!same_fixed(x, y)) continue;
            Character m = x;
            for (int i = 0; i < m.size(); ++i)
                m[static_cast<std::size_t>(i)] = std::min(x[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(i)]);
            if (!seen.count(m)) fresh.push_back(std::move(m));
        }
        for (auto& m : fresh)
            if (seen.insert(m).second) work.push_back(m);
    }
    std::vector<Character> out(seen.begin(), seen.end());
    std::stable_sort(out.begin(), out.end(), [](const Character& a, const Character& b) {
        if (a.sum() != b.sum()) return a.sum() > b.sum();
        return a > b;
    });
    return out;
}

}  // namespace

GradedMatrix syzygies(const GradedMatrix& m) {
    const Ring& ring = m.ring();
    const std::size_t ncols = m.cols();
    std::vector<Character> found_deg;
    std::vector<QVector> found_vec;

    for (const auto& mu : meet_closure(ring, m.source().gens)) {
        const auto cols = piece_indices(ring, m.source(), mu);
        if (cols.empty()) continue;
        const auto rows = piece_indices(ring, m.target(), mu);
        QMatrix sub(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = m.at(rows[i], cols[j]);
        auto kernel = nullspace(std::move(sub));
        if (kernel.empty()) continue;

        SpanBasis span(cols.size());
        for (std::size_t g = 0; g < found_deg.size(); ++g) {
            if (!ring.admits(found_deg[g], mu)) continue;
            QVector v(cols.size());
            for (std::size_t j = 0; j < cols.size(); ++j) v[j] = found_vec[g][cols[j]];
            span.insert(v);
        }
        for (const auto& k : kernel) {
            if (!span.insert(k)) continue;
            QVector full(ncols);
            for (std::size_t j = 0; j < cols.size(); ++j) full[cols[j]] = k[j];
            found_deg.push_back(mu);
            found_vec.push_back(std::move(full));
        }
    }

    QMatrix out(ncols, found_deg.size());
    for (std::size_t g = 0; g < found_deg.size(); ++g)
        for (std::size_t c = 0; c < ncols; ++c) out(c, g) = found_vec[g][c];
    return GradedMatrix(ring, GradedFree(ring.n(), std::move(found_deg)), m.source(), std::move(out));
}

std::optional<GradedMatrix> lift(const GradedMatrix& through, const GradedMatrix& f) {
    require_same_ring(through, f);
    if (!(through.target().gens == f.target().gens))
        throw DomainError(errc::kDimensionMismatch, "lift through a map with a different target");
    const Ring& ring = f.ring();
    QMatrix out(through.cols(), f.cols());
    for (std::size_t j = 0; j < f.cols(); ++j) {
        const Character& mu = f.source().gens[j];
        const auto rows = piece_indices(ring, through.target(), mu);
        const auto cols = piece_indices(ring, through.source(), mu);
        QMatrix sub(rows.size(), cols.size());
        QVector rhs(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            rhs[i] = f.at(rows[i], j);
            for (std::size_t k = 0; k < cols.size(); ++k) sub(i, k) = through.at(rows[i], cols[k]);
        }
        auto x = solve(std::move(sub), rhs);
        if (!x) return std::nullopt;
        for (std::size_t k = 0; k < cols.size(); ++k) out(cols[k], j) = (*x)[k];
    }
    return GradedMatrix(ring, f.source(), through.source(), std::move(out));
}

PresentedModule free_module(const Ring& ring, const GradedFree& f) {
    return PresentedModule{GradedMatrix::zero(ring, GradedFree(ring.n(), {}), f)};
}

PresentedModule monomial_quotient(const Ring& ring, const std::vector<Character>& monomials,
                                  const Character& lambda) {
    GradedFree target(ring.n(), {lambda});
    GradedFree source(ring.n(), {});
    for (const auto& a : monomials) source.gens.push_back(lambda - a);
    QMatrix coeffs(1, monomials.size());
    for (std::size_t j = 0; j < monomials.size(); ++j) coeffs(0, j) = 1;
    return PresentedModule{GradedMatrix(ring, std::move(source), std::move(target), std::move(coeffs))};
}

PresentedModule closure_structure_module(int n, const Stratum& z) {
    std::vector<Character> vars;
    for (int i : z.indices()) vars.push_back(Character::unit(n, i));
    return monomial_quotient(Ring::ambient(n), vars, Character::zero(n));
}

std::size_t piece_dim(const PresentedModule& m, const Character& mu) {
    const auto rows = piece_indices(m.ring(), m.generators(), mu);
    if (rows.empty()) return 0;
    return rows.size() - rank(piece(m.pres, mu));
}

PresentedModule minimize_presentation(const PresentedModule& m, std::vector<std::size_t>* kept) {
    const Ring& ring = m.ring();
    std::vector<Character> tgt = m.generators().gens;
    std::vector<Character> src = m.pres.source().gens;
    std::vector<std::size_t> row_ids(tgt.size());
    for (std::size_t i = 0; i < row_ids.size(); ++i) row_ids[i] = i;
    // working copy as nested vectors so rows and columns can be dropped
    std::vector<QVector> p(tgt.size(), QVector(src.size()));
    for (std::size_t r = 0; r < tgt.size(); ++r)
        for (std::size_t c = 0; c < src.size(); ++c) p[r][c] = m.pres.at(r, c);

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t r = 0; r < tgt.size() && !changed; ++r)
            for (std::size_t c = 0; c < src.size() && !changed; ++c) {
                if (sgn(p[r][c]) == 0 || !(tgt[r] == src[c])) continue;
                const Rational u = p[r][c];
                for (std::size_t r2 = 0; r2 < tgt.size(); ++r2) {
                    if (r2 == r || sgn(p[r2][c]) == 0) continue;
                    const Rational f = p[r2][c] / u;
                    for (std::size_t c2 = 0; c2 < src.size(); ++c2)
                        if (c2 != c && sgn(p[r][c2]) != 0) p[r2][c2] -= f * p[r][c2];
                }
                p.erase(p.begin() + static_cast<std::ptrdiff_t>(r));
                for (auto& row : p) row.erase(row.begin() + static_cast<std::ptrdiff_t>(c));
                tgt.erase(tgt.begin() + static_cast<std::ptrdiff_t>(r));
                row_ids.erase(row_ids.begin() + static_cast<std::ptrdiff_t>(r));
                src.erase(src.begin() + static_cast<std::ptrdiff_t>(c));
                changed = true;
            }
    }

    // drop relations generated by the others, scanning high degrees first
    std::vector<std::size_t> order(src.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return src[a].sum() > src[b].sum(); });
    std::vector<bool> keep(src.size(), false);
    std::vector<std::size_t> kept_cols;
    for (std::size_t c : order) {
        SpanBasis span(tgt.size());
        for (std::size_t k : kept_cols) {
            if (!ring.admits(src[k], src[c])) continue;
            QVector v(tgt.size());
            for (std::size_t r = 0; r < tgt.size(); ++r) v[r] = p[r][k];
            span.insert(v);
        }
        QVector v(tgt.size());
        bool nonzero = false;
        for (std::size_t r = 0; r < tgt.size(); ++r) {
            v[r] = p[r][c];
            nonzero = nonzero || sgn(v[r]) != 0;
        }
        if (nonzero && !span.contains(v)) {
            keep[c] = true;
            kept_cols.push_back(c);
        }
    }

    GradedFree source(ring.n(), {});
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < src.size(); ++c)
        if (keep[c]) {
            cols.push_back(c);
            source.gens.push_back(src[c]);
        }
    QMatrix out(tgt.size(), cols.size());
    for (std::size_t r = 0; r < tgt.size(); ++r)
        for (std::size_t j = 0; j < cols.size(); ++j) out(r, j) = p[r][cols[j]];
    if (kept) *kept = row_ids;
    return PresentedModule{GradedMatrix(ring, std::move(source), GradedFree(ring.n(), std::move(tgt)), std::move(out))};
}

PresentedModule twist(const PresentedModule& m, const Character& lambda) {
    return PresentedModule{twist(m.pres, lambda)};
}

PresentedModule direct_sum(const PresentedModule& a, const PresentedModule& b) {
    return PresentedModule{block_diag(a.pres, b.pres)};
}

PresentedModule tensor_presentations(const PresentedModule& a, const PresentedModule& b) {
    if (!(a.ring() == b.ring())) throw DomainError(errc::kRingMismatch, "tensor of modules over different rings");
    const auto ida = GradedMatrix::identity(a.ring(), a.generators());
    const auto idb = GradedMatrix::identity(b.ring(), b.generators());
    return PresentedModule{hstack(kron(a.pres, idb), kron(ida, b.pres))};
}

OrbitRep restrict_to_stratum(const PresentedModule& m, const Stratum& c) {
    OrbitRep out{c, {}};
    if (!c.in_closure_of(m.ring().stratum())) return out;
    const auto& gens = m.generators().gens;
    const auto& rels = m.pres.source().gens;
    const auto restricted = [&](const Character& ch) { return restrict_character(ch, c).values; };

    std::map<std::vector<Int>, std::vector<std::size_t>> row_groups, col_groups;
    for (std::size_t r = 0; r < gens.size(); ++r) row_groups[restricted(gens[r])].push_back(r);
    for (std::size_t j = 0; j < rels.size(); ++j) col_groups[restricted(rels[j])].push_back(j);

    for (const auto& [ch, rows] : row_groups) {
        const auto it = col_groups.find(ch);
        std::size_t rk = 0;
        if (it != col_groups.end()) {
            // surviving entries: monomial exponent vanishes on Z(c), which is
            // automatic once restricted characters agree
            QMatrix sub(rows.size(), it->second.size());
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t j = 0; j < it->second.size(); ++j) sub(i, j) = m.pres.at(rows[i], it->second[j]);
            rk = rank(std::move(sub));
        }
        out.add(ch, static_cast<Int>(rows.size() - rk));
    }
    return out;
}

std::optional<std::map<Character, Int>> finite_length(const PresentedModule& m) {
    const Stratum origin = Stratum::closed(m.n());
    for (const auto& c : strata_in_closure(m.ring().stratum()))
        if (!(c == origin) && !restrict_to_stratum(m, c).empty()) return std::nullopt;

    std::map<Character, Int> table;
    std::set<Character> seen;
    std::deque<Character> work;
    for (const auto& g : m.generators().gens)
        if (seen.insert(g).second) work.push_back(g);
    while (!work.empty()) {
        Character mu = work.front();
        work.pop_front();
        const auto d = piece_dim(m, mu);
        if (d == 0) continue;
        table[mu] = static_cast<Int>(d);
        for (int i = 1; i <= m.n(); ++i) {
            if (m.ring().stratum().vanishes(i)) continue;
            Character next = mu - Character::unit(m.n(), i);
            if (seen.insert(next).second) work.push_back(std::move(next));
        }
    }
    return table;
}

int box_pad(int n) {
    if (const char* env = std::getenv("STAGGER_BOX_PAD")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0) return static_cast<int>(v);
    }
    return n;
}

ValidationBox validation_box(int n, const std::vector<Character>& degrees, int pad) {
    if (degrees.empty()) return ValidationBox{Character::zero(n), Character::zero(n)};
    Character lo = degrees.front();
    Character hi = degrees.front();
    for (const auto& d : degrees)
        for (int i = 0; i < n; ++i) {
            const auto k = static_cast<std::size_t>(i);
            lo[k] = std::min(lo[k], d[k]);
            hi[k] = std::max(hi[k], d[k]);
        }
    for (int i = 0; i < n; ++i) {
        lo[static_cast<std::size_t>(i)] -= pad;
        hi[static_cast<std::size_t>(i)] += pad;
    }
    return ValidationBox{lo, hi};
}

}  // namespace stagger
