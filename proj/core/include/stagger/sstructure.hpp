#pragma once

#include <map>
#include <optional>
#include <vector>

#include "stagger/torus_geometry.hpp"

namespace stagger {

/// Orbit data for the cocharacter classification: the rank of the torus
/// T_C and the weights of T_C on the unipotent Lie algebra.
struct AbstractOrbitClass {
    int rank = 0;
    std::vector<std::vector<Int>> upsilon;
};

bool is_semifocused(const AbstractOrbitClass& cls, const std::vector<Int>& phi);
bool is_focused(const AbstractOrbitClass& cls, const std::vector<Int>& phi);

/// Index i (1-based) of a basis character e_i on which two cocharacters of
/// the same rank have different steps, or nullopt when they coincide.
std::optional<int> distinguishing_basis_character(const std::vector<Int>& phi, const std::vector<Int>& psi);

Int step(const TorusSetup& setup, const Stratum& c, const Character& lambda);
Int step(const TorusSetup& setup, const StabilizerCharacter& lambda);

/// Every conormal weight has step <= -1, i.e. phi_C(e_i) >= 1 for i in Z.
bool is_recessed(const TorusSetup& setup);

Int altitude(const TorusSetup& setup, const Stratum& c);
Int scod(const TorusSetup& setup, const Stratum& c);

/// A representation of the stabilizer of a stratum, as a multiset of
/// stabilizer characters (values indexed by Z) with positive multiplicities.
struct OrbitRep {
    Stratum stratum;
    std::map<std::vector<Int>, Int> chars;

    bool empty() const noexcept { return chars.empty(); }
    Int dimension() const;
    void add(const std::vector<Int>& character, Int multiplicity = 1);

    bool operator==(const OrbitRep&) const = default;
};

/// Largest subrepresentation with all steps <= w.
OrbitRep sigma_leq(const TorusSetup& setup, const OrbitRep& rep, Int w);
/// Largest quotient with all steps >= w.
OrbitRep sigma_geq(const TorusSetup& setup, const OrbitRep& rep, Int w);

std::optional<Int> max_step(const TorusSetup& setup, const OrbitRep& rep);
std::optional<Int> min_step(const TorusSetup& setup, const OrbitRep& rep);

}  // namespace stagger
