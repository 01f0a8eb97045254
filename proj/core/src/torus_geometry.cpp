#include "stagger/torus_geometry.hpp"

#include <algorithm>
#include <bit>

#include "stagger/errors.hpp"

namespace stagger {

Character Character::unit(int n, int i) {
    Character c = zero(n);
    c[static_cast<std::size_t>(i - 1)] = 1;
    return c;
}

Character Character::operator+(const Character& o) const {
    if (o.size() != size()) throw DomainError(errc::kDimensionMismatch, "character length mismatch");
    Character r = *this;
    for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] += o.v_[i];
    return r;
}

Character Character::operator-(const Character& o) const { return *this + (-o); }

Character Character::operator-() const {
    Character r = *this;
    for (auto& x : r.v_) x = -x;
    return r;
}

Int Character::sum() const {
    Int s = 0;
    for (auto x : v_) s += x;
    return s;
}

std::string Character::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v_[i]);
    }
    return s + ")";
}

Stratum::Stratum(int n, std::uint32_t mask) : n_(n), mask_(mask) {
    if (n < 0 || n > 24) throw DomainError(errc::kDimensionMismatch, "ambient dimension out of range");
    if (n < 32 && (mask >> n) != 0)
        throw DomainError(errc::kDimensionMismatch, "vanishing index exceeds ambient dimension");
}

Stratum Stratum::closed(int n) { return Stratum(n, n == 0 ? 0u : ((1u << n) - 1u)); }

Stratum Stratum::from_indices(int n, const std::vector<int>& indices) {
    std::uint32_t m = 0;
    for (int i : indices) {
        if (i < 1 || i > n)
            throw DomainError(errc::kDimensionMismatch, "coordinate index out of range", std::to_string(i));
        m |= 1u << (i - 1);
    }
    return Stratum(n, m);
}

int Stratum::size() const noexcept { return std::popcount(mask_); }

std::vector<int> Stratum::indices() const {
    std::vector<int> out;
    for (int i = 1; i <= n_; ++i)
        if (vanishes(i)) out.push_back(i);
    return out;
}

std::strong_ordering Stratum::operator<=>(const Stratum& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    if (auto c = size() <=> o.size(); c != 0) return c;
    if (mask_ == o.mask_) return std::strong_ordering::equal;
    // lexicographic on ascending index lists: the side owning the lowest
    // differing bit has the smaller index at the first difference
    const std::uint32_t low = (mask_ ^ o.mask_) & (~(mask_ ^ o.mask_) + 1u);
    return (mask_ & low) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string Stratum::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int i : indices()) {
        if (!first) s += ",";
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

StabilizerCharacter restrict_character(const Character& lambda, const Stratum& z) {
    if (lambda.size() != z.ambient_dim())
        throw DomainError(errc::kDimensionMismatch, "character length differs from ambient dimension");
    StabilizerCharacter out{z, {}};
    for (int i : z.indices()) out.values.push_back(lambda[static_cast<std::size_t>(i - 1)]);
    return out;
}

TorusSetup::TorusSetup(int n, std::map<Stratum, Cocharacter> cochars, Character omega_twist, Int omega_shift)
    : n_(n), cochars_(std::move(cochars)), omega_twist_(std::move(omega_twist)), omega_shift_(omega_shift) {
    if (omega_twist_.size() == 0) omega_twist_ = Character::zero(n);
    if (omega_twist_.size() != n)
        throw DomainError(errc::kDimensionMismatch, "dualizing twist has wrong length");
    for (const auto& s : enumerate_strata(n)) {
        auto it = cochars_.find(s);
        if (it == cochars_.end())
            throw DomainError(errc::kPrecondition, "stratum has no cocharacter", s.to_string());
        if (!(it->second.support == s) || it->second.values.size() != static_cast<std::size_t>(s.size()))
            throw DomainError(errc::kDimensionMismatch, "cocharacter index set differs from stratum",
                              s.to_string());
    }
}

TorusSetup TorusSetup::global_linear(int n, const std::vector<Int>& c, Character omega_twist, Int omega_shift) {
    if (c.size() != static_cast<std::size_t>(n))
        throw DomainError(errc::kDimensionMismatch, "linear form has wrong length");
    std::map<Stratum, Cocharacter> cochars;
    for (const auto& s : enumerate_strata(n)) {
        Cocharacter phi{s, {}};
        for (int i : s.indices()) phi.values.push_back(c[static_cast<std::size_t>(i - 1)]);
        cochars.emplace(s, std::move(phi));
    }
    return TorusSetup(n, std::move(cochars), std::move(omega_twist), omega_shift);
}

const Cocharacter& TorusSetup::cocharacter(const Stratum& c) const {
    auto it = cochars_.find(c);
    if (it == cochars_.end()) throw DomainError(errc::kPrecondition, "unknown stratum", c.to_string());
    return it->second;
}

std::vector<Stratum> enumerate_strata(int n) {
    std::vector<Stratum> out;
    const std::uint32_t count = 1u << n;
    out.reserve(count);
    for (std::uint32_t m = 0; m < count; ++m) out.emplace_back(n, m);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Stratum> enumerate_strata(const TorusSetup& setup) { return enumerate_strata(setup.n()); }

std::vector<Stratum> strata_in_closure(const Stratum& c) {
    std::vector<Stratum> out;
    for (const auto& s : enumerate_strata(c.ambient_dim()))
        if (s.in_closure_of(c)) out.push_back(s);
    return out;
}

Int codim(const TorusSetup& setup, const Stratum& c) { return c.size() - setup.omega_shift(); }

std::vector<StabilizerCharacter> conormal_weights(const Stratum& c) {
    std::vector<StabilizerCharacter> out;
    const int n = c.ambient_dim();
    for (int i : c.indices()) out.push_back(restrict_character(-Character::unit(n, i), c));
    return out;
}

Int pair(const Cocharacter& phi, const StabilizerCharacter& lambda) {
    if (!(phi.support == lambda.support) || phi.values.size() != lambda.values.size())
        throw DomainError(errc::kDimensionMismatch, "cocharacter and character live on different stabilizers",
                          phi.support.to_string() + " vs " + lambda.support.to_string());
    Int s = 0;
    for (std::size_t i = 0; i < phi.values.size(); ++i) s += phi.values[i] * lambda.values[i];
    return s;
}

Int pair(const Cocharacter& phi, const Character& lambda) {
    return pair(phi, restrict_character(lambda, phi.support));
}

}  // namespace stagger
