#pragma once

#include <map>
#include <optional>
#include <vector>

#include "stagger/graded_module.hpp"
#include "stagger/sstructure.hpp"

namespace stagger {

/// Bounded complex of graded frees over a closure ring. A complex over the
/// ring of the closure of Z stands for its pushforward to affine space.
/// Differentials go from degree k to k + 1.
class FreeComplex {
public:
    FreeComplex() = default;
    explicit FreeComplex(Ring ring) : ring_(std::move(ring)) {}
    /// Missing differentials are zero. Throws DomainError when shapes do not
    /// match or d^{k+1} d^k != 0.
    FreeComplex(Ring ring, std::map<int, GradedFree> terms, std::map<int, GradedMatrix> diffs);

    const Ring& ring() const noexcept { return ring_; }
    int n() const noexcept { return ring_.n(); }

    /// Nonempty terms only.
    const std::map<int, GradedFree>& terms() const noexcept { return terms_; }
    GradedFree term(int k) const;
    GradedMatrix diff(int k) const;
    bool is_zero() const noexcept { return terms_.empty(); }

    std::optional<int> min_degree() const;
    std::optional<int> max_degree() const;

private:
    Ring ring_;
    std::map<int, GradedFree> terms_;
    std::map<int, GradedMatrix> diffs_;
};

struct ChainMap {
    FreeComplex source;
    FreeComplex target;
    std::map<int, GradedMatrix> components;

    /// Component in degree k, zero when absent.
    GradedMatrix at(int k) const;
};

/// Throws DomainError(not_chain_map) unless f commutes with the differentials.
void check_chain_map(const ChainMap& f);

using CohomologyTable = std::map<int, PresentedModule>;

// builders
FreeComplex concentrated(const Ring& ring, const GradedFree& f, int degree);
/// Minimal free resolution in degrees -len..0. Throws DomainError(precondition)
/// if it is longer than max_len.
FreeComplex free_resolution(const PresentedModule& m, int max_len);
/// Koszul complex of x_i, i in `indices`, over the ambient ring; it resolves
/// the structure module of the corresponding closure.
FreeComplex koszul(int n, const std::vector<int>& indices);
/// Structure sheaf of the closure of the stratum with vanishing set z.
FreeComplex stratum_sheaf(int n, const Stratum& z);
/// One-dimensional module C(lambda) at the origin, in degree 0.
FreeComplex skyscraper(const Character& lambda);

// triangulated structure
/// F[m]^k = F^{k+m}.
FreeComplex shift(const FreeComplex& f, int m);
FreeComplex twist(const FreeComplex& f, const Character& lambda);
FreeComplex direct_sum(const FreeComplex& a, const FreeComplex& b);
FreeComplex cone(const ChainMap& f);
ChainMap identity_map(const FreeComplex& f);

// change of ring
/// Pushforward to affine space: lift to the ambient ring and tensor with
/// the Koszul complex of the vanishing coordinates.
FreeComplex pushforward_closed(const FreeComplex& f);
/// Termwise base change to a smaller closure ring (x_i = 0 on its vanishing
/// coordinates). Derived pullback when f is over the ambient ring.
FreeComplex restrict_terms(const FreeComplex& f, const Ring& ring);
/// Derived pullback of the object on affine space to the closure of c.
FreeComplex pullback_L(const FreeComplex& f, const Stratum& c);
/// Derived shriek pullback to the closure of c, as dual of pullback of dual.
FreeComplex shriek_R(const TorusSetup& setup, const FreeComplex& f, const Stratum& c);

// derived functors
FreeComplex tensorL(const FreeComplex& a, const FreeComplex& b);
/// Hom into the dualizing complex of the closure carrying f.
FreeComplex dualize(const TorusSetup& setup, const FreeComplex& f);
FreeComplex rhom(const TorusSetup& setup, const FreeComplex& a, const FreeComplex& b);
/// Hom complex Hom(a, b) of the underlying objects; its degree-0 graded
/// piece in cohomological degree k is the equivariant Ext^k(a, b).
FreeComplex hom_complex(const FreeComplex& a, const FreeComplex& b);

// cohomology
CohomologyTable cohomology(const FreeComplex& f);
std::size_t cohomology_piece_dim(const FreeComplex& f, int k, const Character& mu);
/// Cohomology of the derived fiber of f along the orbit c, as stabilizer
/// representations indexed by degree.
std::map<int, OrbitRep> derived_fiber(const FreeComplex& f, const Stratum& c);

/// Cancels every unit entry by Gaussian elimination.
FreeComplex minimize(const FreeComplex& f);
/// Whether f is quasi-isomorphic to the sum of its shifted cohomology modules.
bool iso_as_sum_of_cohomology(const FreeComplex& f);

/// Degrees at which f or its cohomology has generators, padded; used by the
/// degreewise comparisons.
ValidationBox validation_box(const FreeComplex& f, int pad);

}  // namespace stagger
