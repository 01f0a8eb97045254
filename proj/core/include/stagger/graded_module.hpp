#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "stagger/linalg.hpp"
#include "stagger/sstructure.hpp"
#include "stagger/torus_geometry.hpp"

namespace stagger {

/// Coordinate ring of the closure of a stratum: the polynomial ring in the
/// coordinates that do not vanish on it. The ambient ring is the closure of
/// the open stratum. Generator characters keep all n coordinates; on the
/// vanishing coordinates they only carry the torus action.
class Ring {
public:
    Ring() = default;
    explicit Ring(Stratum closure_of) : stratum_(closure_of) {}
    static Ring ambient(int n) { return Ring(Stratum::open(n)); }

    int n() const noexcept { return stratum_.ambient_dim(); }
    const Stratum& stratum() const noexcept { return stratum_; }
    bool is_ambient() const noexcept { return stratum_.mask() == 0; }

    /// Whether hi - lo is the exponent of a monomial of this ring.
    bool admits(const Character& hi, const Character& lo) const noexcept {
        for (int i = 0; i < hi.size(); ++i) {
            const Int d = hi[static_cast<std::size_t>(i)] - lo[static_cast<std::size_t>(i)];
            if (stratum_.vanishes(i + 1) ? d != 0 : d < 0) return false;
        }
        return true;
    }

    bool operator==(const Ring&) const = default;

private:
    Stratum stratum_;
};

/// Direct sum of rank-one free modules A(lambda), in a fixed order.
struct GradedFree {
    int n = 0;
    std::vector<Character> gens;

    GradedFree() = default;
    GradedFree(int ambient, std::vector<Character> g);

    std::size_t size() const noexcept { return gens.size(); }
    bool empty() const noexcept { return gens.empty(); }
    bool operator==(const GradedFree&) const = default;
};

GradedFree direct_sum(const GradedFree& a, const GradedFree& b);
GradedFree twist(const GradedFree& f, const Character& lambda);
/// Generators lambda_i + mu_j, ordered with i major.
GradedFree tensor(const GradedFree& a, const GradedFree& b);

/// Homogeneous map between graded frees. Entry (r, c) stands for
/// coeff * x^a with a = target[r] - source[c]; only the scalar is stored.
class GradedMatrix {
public:
    GradedMatrix() = default;
    /// Throws DomainError(homogeneity) when a nonzero entry has no monomial.
    GradedMatrix(Ring ring, GradedFree source, GradedFree target, QMatrix coeffs);

    static GradedMatrix zero(const Ring& ring, const GradedFree& source, const GradedFree& target);
    static GradedMatrix identity(const Ring& ring, const GradedFree& f);

    const Ring& ring() const noexcept { return ring_; }
    const GradedFree& source() const noexcept { return source_; }
    const GradedFree& target() const noexcept { return target_; }
    const QMatrix& coeffs() const noexcept { return coeffs_; }
    std::size_t rows() const noexcept { return target_.size(); }
    std::size_t cols() const noexcept { return source_.size(); }
    const Rational& at(std::size_t r, std::size_t c) const { return coeffs_(r, c); }

    Character exponent(std::size_t r, std::size_t c) const { return target_.gens[r] - source_.gens[c]; }
    /// A nonzero entry whose monomial is 1.
    bool is_unit(std::size_t r, std::size_t c) const {
        return sgn(coeffs_(r, c)) != 0 && target_.gens[r] == source_.gens[c];
    }
    bool is_zero() const;

    bool operator==(const GradedMatrix& o) const;

private:
    Ring ring_;
    GradedFree source_;
    GradedFree target_;
    QMatrix coeffs_;
};

/// Indices of generators of f contributing to degree mu.
std::vector<std::size_t> piece_indices(const Ring& ring, const GradedFree& f, const Character& mu);
/// Scalar matrix of the degree-mu piece of m in the monomial bases.
QMatrix piece(const GradedMatrix& m, const Character& mu);

/// f after g.
GradedMatrix compose(const GradedMatrix& f, const GradedMatrix& g);
GradedMatrix scale(const GradedMatrix& m, const Rational& s);
GradedMatrix add(const GradedMatrix& a, const GradedMatrix& b);
/// [a | b] for maps with a common target.
GradedMatrix hstack(const GradedMatrix& a, const GradedMatrix& b);
GradedMatrix block_diag(const GradedMatrix& a, const GradedMatrix& b);
GradedMatrix kron(const GradedMatrix& a, const GradedMatrix& b);
GradedMatrix twist(const GradedMatrix& m, const Character& lambda);
/// Hom(-, A(tau)) applied to m: the transpose between the twisted duals.
GradedMatrix dual_transpose(const GradedMatrix& m, const Character& tau);
/// Restricts to columns (sources) and rows (targets) given by index lists.
GradedMatrix submatrix(const GradedMatrix& m, const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols);
/// Reinterprets m over another ring. Moving to a larger closure keeps every
/// entry; moving to a smaller one sets the new vanishing coordinates to zero.
/// Throws DomainError(ring_mismatch) when the closures are not nested.
GradedMatrix change_ring(const GradedMatrix& m, const Ring& ring);

/// Kernel generators: a map s with m * s = 0 whose image is ker m, built
/// degree by degree from the componentwise minima of source degrees.
/// The generating set is minimal.
GradedMatrix syzygies(const GradedMatrix& m);

/// Some l with through * l = f, or nullopt when f does not factor.
std::optional<GradedMatrix> lift(const GradedMatrix& through, const GradedMatrix& f);

/// The module coker(pres). Generators are the target of pres.
struct PresentedModule {
    GradedMatrix pres;

    const Ring& ring() const noexcept { return pres.ring(); }
    const GradedFree& generators() const noexcept { return pres.target(); }
    int n() const noexcept { return pres.ring().n(); }
};

PresentedModule free_module(const Ring& ring, const GradedFree& f);
/// Quotient of A(lambda) by the given monomials, written as exponent vectors.
PresentedModule monomial_quotient(const Ring& ring, const std::vector<Character>& monomials,
                                  const Character& lambda);
/// The structure module of the closure of the stratum with vanishing set z,
/// as a module over the ambient ring.
PresentedModule closure_structure_module(int n, const Stratum& z);

std::size_t piece_dim(const PresentedModule& m, const Character& mu);

/// Strips generators killed by unit relations and drops redundant relations.
/// `kept` receives the original indices of the surviving generators.
PresentedModule minimize_presentation(const PresentedModule& m, std::vector<std::size_t>* kept = nullptr);

PresentedModule twist(const PresentedModule& m, const Character& lambda);
PresentedModule direct_sum(const PresentedModule& a, const PresentedModule& b);
PresentedModule tensor_presentations(const PresentedModule& a, const PresentedModule& b);

/// Basepoint fiber on the orbit c: x_i = 0 on Z(c), x_j = 1 elsewhere. Empty
/// when c is outside the closure carrying the module.
OrbitRep restrict_to_stratum(const PresentedModule& m, const Stratum& c);

/// Character table of a finite-length module, or nullopt if some variable
/// acts non-nilpotently.
std::optional<std::map<Character, Int>> finite_length(const PresentedModule& m);

/// Rectangle of characters used by the degreewise validation checks.
struct ValidationBox {
    Character lo;
    Character hi;

    template <class F>
    void for_each(F&& f) const {
        if (lo.size() == 0) return;
        Character mu = lo;
        const std::size_t n = static_cast<std::size_t>(lo.size());
        while (true) {
            f(static_cast<const Character&>(mu));
            std::size_t i = 0;
            for (; i < n; ++i) {
                if (mu[i] < hi[i]) {
                    ++mu[i];
                    break;
                }
                mu[i] = lo[i];
            }
            if (i == n) return;
        }
    }
};

/// Box pad: the STAGGER_BOX_PAD environment variable when set, else n.
int box_pad(int n);
/// Componentwise hull of the given characters, padded by `pad`.
ValidationBox validation_box(int n, const std::vector<Character>& degrees, int pad);

}  // namespace stagger
