#include <gtest/gtest.h>

#include "stagger/errors.hpp"
#include "support.hpp"

using namespace stagger;
using namespace stagger::testing;

TEST(EnumerateStrata, ThreeDimensionsGivesEight) { EXPECT_EQ(enumerate_strata(worked_setup()).size(), 8u); }

TEST(EnumerateStrata, PointHasOneStratum) {
    const auto s = enumerate_strata(TorusSetup::global_linear(0, {}));
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s.front(), Stratum::open(0));
}

TEST(EnumerateStrata, SizeOneStrataAreTheCoordinateHyperplanes) {
    std::vector<Stratum> ones;
    for (const auto& s : enumerate_strata(worked_setup()))
        if (s.size() == 1) ones.push_back(s);
    EXPECT_EQ(ones, (std::vector{st(3, {1}), st(3, {2}), st(3, {3})}));
}

TEST(EnumerateStrata, SortedBySizeThenLex) {
    const auto s = enumerate_strata(worked_setup());
    EXPECT_EQ(s.front(), Stratum::open(3));
    EXPECT_EQ(s.back(), Stratum::closed(3));
    EXPECT_EQ(s[4], st(3, {1, 2}));
    EXPECT_EQ(s[6], st(3, {2, 3}));
}

TEST(Codim, OriginIsThree) { EXPECT_EQ(codim(worked_setup(), Stratum::closed(3)), 3); }
TEST(Codim, OpenIsZero) { EXPECT_EQ(codim(worked_setup(), Stratum::open(3)), 0); }

TEST(Codim, DualizingShiftLowersEveryCodim) {
    const auto setup = TorusSetup::global_linear(3, {1, 1, 1}, Character::zero(3), 2);
    EXPECT_EQ(codim(setup, Stratum::closed(3)), 1);
    EXPECT_EQ(codim(setup, Stratum::open(3)), -2);
}

TEST(Codim, ShiftedDualizingMatchesShriekOfOmega) {
    // Ri^! of the dualizing complex at the origin sits in degree cod(origin)
    const auto setup = TorusSetup::global_linear(3, {1, 1, 1}, Character::zero(3), 2);
    const auto omega = shift(structure_sheaf(3), 2);
    const auto h = cohomology(shriek_R(setup, omega, Stratum::closed(3)));
    ASSERT_EQ(h.size(), 1u);
    EXPECT_EQ(h.begin()->first, codim(setup, Stratum::closed(3)));
}

TEST(Codim, StrictlyMonotoneDownClosures) {
    const auto setup = worked_setup();
    for (const auto& a : enumerate_strata(setup))
        for (const auto& b : enumerate_strata(setup))
            if (a != b && a.in_closure_of(b)) {
                EXPECT_GT(codim(setup, a), codim(setup, b));
            }
}

TEST(ClosureOrder, OriginBelowAllOpenAboveAll) {
    for (const auto& s : enumerate_strata(3)) {
        EXPECT_TRUE(Stratum::closed(3).in_closure_of(s));
        EXPECT_TRUE(s.in_closure_of(Stratum::open(3)));
    }
}

TEST(ClosureOrder, IsPartialOrder) {
    const auto all = enumerate_strata(3);
    for (const auto& a : all) {
        EXPECT_TRUE(a.in_closure_of(a));
        for (const auto& b : all) {
            if (a.in_closure_of(b) && b.in_closure_of(a)) {
                EXPECT_EQ(a, b);
            }
            for (const auto& c : all)
                if (a.in_closure_of(b) && b.in_closure_of(c)) {
                    EXPECT_TRUE(a.in_closure_of(c));
                }
        }
    }
}

TEST(ConormalWeights, XAxis) {
    const auto w = conormal_weights(st(3, {2, 3}));
    ASSERT_EQ(w.size(), 2u);
    EXPECT_EQ(w[0].values, (std::vector<Int>{-1, 0}));
    EXPECT_EQ(w[1].values, (std::vector<Int>{0, -1}));
    EXPECT_EQ(w[0], restrict_character(-Character::unit(3, 2), st(3, {2, 3})));
}

TEST(ConormalWeights, OpenIsEmpty) { EXPECT_TRUE(conormal_weights(Stratum::open(3)).empty()); }

TEST(ConormalWeights, OriginIsFull) {
    const auto w = conormal_weights(Stratum::closed(3));
    ASSERT_EQ(w.size(), 3u);
    for (int i = 1; i <= 3; ++i) EXPECT_EQ(w[static_cast<std::size_t>(i - 1)], restrict_character(-Character::unit(3, i), Stratum::closed(3)));
}

TEST(Pair, OriginAgainstYWeight) {
    const auto setup = worked_setup();
    EXPECT_EQ(pair(setup.cocharacter(Stratum::closed(3)), ch({0, -1, 0})), -1);
}

TEST(Pair, ZeroCharacter) {
    const auto setup = worked_setup();
    for (const auto& s : enumerate_strata(setup)) EXPECT_EQ(pair(setup.cocharacter(s), Character::zero(3)), 0);
}

TEST(Pair, RestrictedToYZ) {
    const auto setup = worked_setup();
    EXPECT_EQ(pair(setup.cocharacter(st(3, {2, 3})), ch({5, 1, 1})), 2);
}

TEST(Pair, MismatchedIndexSetsThrow) {
    const auto setup = worked_setup();
    EXPECT_THROW(pair(setup.cocharacter(st(3, {2, 3})), restrict_character(ch({1, 1, 1}), st(3, {1}))), DomainError);
}

TEST(Pair, Bilinear) {
    const Cocharacter phi{st(3, {1, 3}), {2, -3}};
    const Cocharacter psi{st(3, {1, 3}), {-1, 4}};
    const Cocharacter sum{st(3, {1, 3}), {1, 1}};
    const auto a = ch({1, 7, -2});
    const auto b = ch({-3, 0, 5});
    EXPECT_EQ(pair(phi, a + b), pair(phi, a) + pair(phi, b));
    EXPECT_EQ(pair(sum, a), pair(phi, a) + pair(psi, a));
}

TEST(TorusSetup, MissingCocharacterIsRejected) {
    std::map<Stratum, Cocharacter> c;
    c[Stratum::open(1)] = Cocharacter{Stratum::open(1), {}};
    EXPECT_THROW(TorusSetup(1, c, Character::zero(1), 0), DomainError);
}

TEST(TorusSetup, CocharacterLengthMustMatch) {
    std::map<Stratum, Cocharacter> c;
    c[Stratum::open(1)] = Cocharacter{Stratum::open(1), {}};
    c[Stratum::closed(1)] = Cocharacter{Stratum::closed(1), {1, 2}};
    EXPECT_THROW(TorusSetup(1, c, Character::zero(1), 0), DomainError);
}
