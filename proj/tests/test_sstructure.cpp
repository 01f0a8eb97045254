#include <gtest/gtest.h>

#include "stagger/errors.hpp"
#include "support.hpp"

using namespace stagger;
using namespace stagger::testing;

TEST(Semifocused, EmptyUpsilonIsVacuous) {
    EXPECT_TRUE(is_semifocused({2, {}}, {4, -7}));
    EXPECT_TRUE(is_focused({2, {}}, {4, -7}));
}

TEST(Semifocused, NegativePairing) { EXPECT_TRUE(is_semifocused({2, {{1, 0}}}, {-1, 5})); }
TEST(Semifocused, PositivePairingFails) { EXPECT_FALSE(is_semifocused({2, {{1, 0}}}, {1, 0})); }
TEST(Semifocused, AllNonPositive) { EXPECT_TRUE(is_semifocused({2, {{1, 0}, {-1, 1}}}, {-1, -2})); }

TEST(Focused, ZeroPairingIsOnlySemifocused) {
    EXPECT_TRUE(is_semifocused({2, {{1, 0}}}, {0, 3}));
    EXPECT_FALSE(is_focused({2, {{1, 0}}}, {0, 3}));
}

TEST(Focused, StrictlyNegative) {
    EXPECT_TRUE(is_focused({2, {{2, -1}}}, {-1, 1}));
    EXPECT_FALSE(is_focused({2, {{2, -1}}}, {1, 2}));
}
TEST(Focused, ZeroAfterFlip) { EXPECT_FALSE(is_focused({2, {{2, -1}}}, {1, 2})); }

TEST(Semifocused, DimensionMismatchThrows) {
    EXPECT_THROW(is_semifocused({2, {{1, 0, 0}}}, {1, 0}), DomainError);
    EXPECT_THROW(is_focused({3, {}}, {1, 0}), DomainError);
}

TEST(DistinguishingCharacter, FindsDifferingBasisVector) {
    EXPECT_EQ(distinguishing_basis_character({1, 2, 3}, {1, 5, 3}), 2);
    EXPECT_EQ(distinguishing_basis_character({1, 2}, {1, 2}), std::nullopt);
}

TEST(Step, OriginZeroCharacter) { EXPECT_EQ(step(worked_setup(), Stratum::closed(3), ch({0, 0, 0})), 0); }
TEST(Step, OriginOnes) { EXPECT_EQ(step(worked_setup(), Stratum::closed(3), ch({1, 1, 1})), 3); }
TEST(Step, ZeroEverywhere) {
    const auto setup = TorusSetup::global_linear(3, {2, -1, 5});
    for (const auto& s : enumerate_strata(setup)) EXPECT_EQ(step(setup, s, Character::zero(3)), 0);
}

TEST(Recessed, WorkedSetup) { EXPECT_TRUE(is_recessed(worked_setup())); }

TEST(Recessed, ZeroCocharacterOnASmallStratumFails) {
    std::map<Stratum, Cocharacter> c;
    for (const auto& s : enumerate_strata(2)) c[s] = Cocharacter{s, std::vector<Int>(static_cast<std::size_t>(s.size()), 1)};
    c[st(2, {1})] = Cocharacter{st(2, {1}), {0}};
    EXPECT_FALSE(is_recessed(TorusSetup(2, c, Character::zero(2), 0)));
}

TEST(Recessed, OneDimensionalStepTwo) {
    EXPECT_TRUE(is_recessed(TorusSetup::global_linear(1, {2})));
}

TEST(Altitude, EqualsCodimOnWorkedSetup) {
    const auto setup = worked_setup();
    for (const auto& s : enumerate_strata(setup)) EXPECT_EQ(altitude(setup, s), codim(setup, s));
}

TEST(Altitude, ScodAtOrigin) { EXPECT_EQ(scod(worked_setup(), Stratum::closed(3)), 6); }

TEST(Altitude, DualizingTwistEntersAltitude) {
    const auto setup = TorusSetup::global_linear(3, {1, 1, 1}, ch({1, 0, 0}), 0);
    EXPECT_EQ(altitude(setup, Stratum::closed(3)), 4);
}

TEST(Sigma, SplitByStep) {
    OrbitRep rep{Stratum::closed(3), {}};
    rep.add({0, 0, 0});
    rep.add({0, -1, 0});
    OrbitRep expected{Stratum::closed(3), {}};
    expected.add({0, -1, 0});
    EXPECT_EQ(sigma_leq(worked_setup(), rep, -1), expected);
}

TEST(Sigma, LargeBoundKeepsEverything) {
    OrbitRep rep{Stratum::closed(3), {}};
    rep.add({1, 2, 0}, 2);
    rep.add({0, -1, 0});
    EXPECT_EQ(sigma_leq(worked_setup(), rep, *max_step(worked_setup(), rep)), rep);
    EXPECT_EQ(sigma_geq(worked_setup(), rep, *min_step(worked_setup(), rep)), rep);
}

TEST(Sigma, EmptyStaysEmpty) {
    OrbitRep rep{Stratum::closed(3), {}};
    EXPECT_TRUE(sigma_leq(worked_setup(), rep, 5).empty());
    EXPECT_TRUE(sigma_geq(worked_setup(), rep, -5).empty());
    EXPECT_EQ(max_step(worked_setup(), rep), std::nullopt);
}
