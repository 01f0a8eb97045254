#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace stagger {

using Int = std::int64_t;

/// Element of the character lattice Z^n of the diagonal torus.
class Character {
public:
    Character() = default;
    explicit Character(std::vector<Int> entries) : v_(std::move(entries)) {}

    static Character zero(int n) { return Character(std::vector<Int>(static_cast<std::size_t>(n), 0)); }
    /// e_i, with i 1-based.
    static Character unit(int n, int i);

    int size() const noexcept { return static_cast<int>(v_.size()); }
    Int operator[](std::size_t i) const { return v_[i]; }
    Int& operator[](std::size_t i) { return v_[i]; }
    const std::vector<Int>& entries() const noexcept { return v_; }

    Character operator+(const Character& o) const;
    Character operator-(const Character& o) const;
    Character operator-() const;
    Int sum() const;

    bool operator==(const Character&) const = default;
    auto operator<=>(const Character&) const = default;

    std::string to_string() const;

private:
    std::vector<Int> v_;
};

/// A torus orbit in affine n-space, identified by its set of vanishing
/// coordinates Z (bit i-1 set when x_i vanishes). Orbits are ordered by
/// (|Z|, lexicographic index list).
class Stratum {
public:
    Stratum() = default;
    Stratum(int n, std::uint32_t mask);

    static Stratum open(int n) { return Stratum(n, 0); }
    static Stratum closed(int n);
    /// Indices are 1-based.
    static Stratum from_indices(int n, const std::vector<int>& indices);

    int ambient_dim() const noexcept { return n_; }
    std::uint32_t mask() const noexcept { return mask_; }
    int size() const noexcept;
    bool vanishes(int i) const noexcept { return (mask_ >> (i - 1)) & 1u; }
    std::vector<int> indices() const;

    /// True when this orbit lies in the closure of `other` (Z(other) ⊆ Z(this)).
    bool in_closure_of(const Stratum& other) const noexcept {
        return (other.mask_ & ~mask_) == 0;
    }

    bool operator==(const Stratum& o) const noexcept { return n_ == o.n_ && mask_ == o.mask_; }
    std::strong_ordering operator<=>(const Stratum& o) const;

    std::string to_string() const;

private:
    int n_ = 0;
    std::uint32_t mask_ = 0;
};

/// Character of the stabilizer torus G_Z of a stratum: values indexed by Z.
struct StabilizerCharacter {
    Stratum support;
    std::vector<Int> values;

    bool operator==(const StabilizerCharacter&) const = default;
};

StabilizerCharacter restrict_character(const Character& lambda, const Stratum& z);

/// Cocharacter of the stabilizer torus of a stratum, indexed by its vanishing set.
struct Cocharacter {
    Stratum support;
    std::vector<Int> values;

    bool operator==(const Cocharacter&) const = default;
};

/// Fixed geometric context: dimension, one cocharacter per stratum, and the
/// normalization omega = A(omega_twist)[omega_shift] of the dualizing complex.
class TorusSetup {
public:
    TorusSetup(int n, std::map<Stratum, Cocharacter> cochars, Character omega_twist, Int omega_shift);

    /// Every stratum gets the restriction of one linear form `c`.
    static TorusSetup global_linear(int n, const std::vector<Int>& c, Character omega_twist = {},
                                    Int omega_shift = 0);

    int n() const noexcept { return n_; }
    const Cocharacter& cocharacter(const Stratum& c) const;
    const std::map<Stratum, Cocharacter>& cocharacters() const noexcept { return cochars_; }
    const Character& omega_twist() const noexcept { return omega_twist_; }
    Int omega_shift() const noexcept { return omega_shift_; }

private:
    int n_;
    std::map<Stratum, Cocharacter> cochars_;
    Character omega_twist_;
    Int omega_shift_;
};

/// All 2^n strata sorted by (|Z|, lexicographic).
std::vector<Stratum> enumerate_strata(int n);
std::vector<Stratum> enumerate_strata(const TorusSetup& setup);
/// Strata contained in the closure of `c`, in the same order.
std::vector<Stratum> strata_in_closure(const Stratum& c);

Int codim(const TorusSetup& setup, const Stratum& c);

/// Weights of the conormal bundle: -e_i restricted to the stabilizer, for i in Z.
std::vector<StabilizerCharacter> conormal_weights(const Stratum& c);

Int pair(const Cocharacter& phi, const StabilizerCharacter& lambda);
Int pair(const Cocharacter& phi, const Character& lambda);

}  // namespace stagger
