#pragma once

#include <string>
#include <vector>

#include "stagger/complex.hpp"
#include "stagger/perversity.hpp"

namespace stagger {

/// One step bound that was checked: the largest step found on a stratum in
/// a cohomological degree, against the bound allowed there.
struct Witness {
    std::string check;
    Stratum stratum;
    int degree = 0;
    Int bound = 0;
    Int actual = 0;
    bool pass = true;
};

struct Membership {
    bool verdict = true;
    std::vector<Witness> witnesses;

    void add(Witness w);
    void absorb(const Membership& other);
    /// First failing witness, if any.
    const Witness* failure() const;
};

/// floor(a / 2) for any sign of a.
Int floor_half(Int a);

Membership member_qC_leq(const TorusSetup& setup, const PresentedModule& m, Int w, const Perversity& q);

Membership member_baric_leq(const TorusSetup& setup, const FreeComplex& f, Int w, const Perversity& q);
Membership member_baric_geq(const TorusSetup& setup, const FreeComplex& f, Int w, const Perversity& q);

Membership member_staggered_leq(const TorusSetup& setup, const FreeComplex& f, Int n, const Perversity& r);
Membership member_staggered_geq(const TorusSetup& setup, const FreeComplex& f, Int n, const Perversity& r);
Membership in_staggered_heart(const TorusSetup& setup, const FreeComplex& f, const Perversity& r);

/// Skew families take the staggered perversity r and use its skew
/// perversity r - cod.
Membership member_skew_leq(const TorusSetup& setup, const FreeComplex& f, Int w, const Perversity& r);
Membership member_skew_geq(const TorusSetup& setup, const FreeComplex& f, Int w, const Perversity& r);

Membership member_purified_leq(const TorusSetup& setup, const FreeComplex& f, Int n, Int w, const Perversity& q);
Membership member_purified_geq(const TorusSetup& setup, const FreeComplex& f, Int n, Int w, const Perversity& q);

/// Throws DomainError(precondition) unless p is monotone and
/// Deligne-Bezrukavnikov comonotone.
Membership member_pureperverse_leq(const TorusSetup& setup, const FreeComplex& f, Int n, Int w, const Perversity& p,
                                   const Perversity& q);
Membership member_pureperverse_geq(const TorusSetup& setup, const FreeComplex& f, Int n, Int w, const Perversity& p,
                                   const Perversity& q);

enum class PurityNotion { kBaric, kSkew };

struct PurityCertificate {
    PurityNotion notion = PurityNotion::kBaric;
    Int degree = 0;
    bool verdict = false;
    std::vector<Witness> witnesses;
};

/// Pure of baric degree w for the middle baric perversity.
PurityCertificate is_pure(const TorusSetup& setup, const FreeComplex& f, Int w);
PurityCertificate is_skew_pure(const TorusSetup& setup, const FreeComplex& f, Int w, const Perversity& r);

struct FiltrationPiece {
    int k = 0;  ///< cohomological degree
    Character character;
    Int multiplicity = 0;
};

struct FiltrationLayer {
    Int degree = 0;
    std::vector<FiltrationPiece> pieces;
};

/// Purity filtration of an object with finite-length cohomology, as layers of
/// simple constituents in increasing degree. The skew notion also requires the
/// object to split as the sum of its cohomology.
std::vector<FiltrationLayer> purity_filtration(const TorusSetup& setup, const FreeComplex& f, PurityNotion notion,
                                               const Perversity& r);

/// Simple staggered sheaf attached to C(lambda) on the closed orbit.
FreeComplex ic_closed(const TorusSetup& setup, const Character& lambda, const Perversity& r);

struct IcVerdict {
    bool verdict = true;
    std::vector<std::string> failures;
    std::vector<Witness> witnesses;
};

/// Checks the characterization of the simple object on the closure of c0
/// attached to lambda: support, fiber along c0, strict pullback and shriek
/// bounds on smaller orbits, and staggered heart membership.
IcVerdict ic_verify(const TorusSetup& setup, const FreeComplex& f, const Stratum& c0, const Character& lambda,
                    const Perversity& r);

struct DegreePair {
    Int skew = 0;
    Int baric = 0;
};

/// Skew and baric degrees of the simple object of step v on c.
DegreePair degree_formulas(const TorusSetup& setup, const Stratum& c, Int v, const Perversity& r);

struct IcSummand {
    Stratum stratum;
    Character character;
    int shift = 0;

    bool operator==(const IcSummand&) const = default;
};

/// Decomposes a pure object with finite-length cohomology into shifted
/// simple objects.
std::vector<IcSummand> decompose_pure(const TorusSetup& setup, const FreeComplex& f, PurityNotion notion, Int w,
                                      const Perversity& r);

}  // namespace stagger
