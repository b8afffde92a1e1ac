#include "oracles.hpp"
#include "random_instances.hpp"

#include "parahiggs/errors.hpp"
#include "parahiggs/higgs.hpp"
#include "parahiggs/reps.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

using namespace parahiggs;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::Schema;
}

WeightSystem at_x1(WeightList w) { return {{"x1", std::move(w)}}; }

OrbifoldData fixc_orbifold(int g) {
    OrbifoldData d;
    d.surface = oracle::surface(g, 1);
    d.orders = {{"x1", 10}};
    d.l["V"]["x1"] = {3};
    d.l["W"]["x1"] = {7};
    return d;
}

}  // namespace

TEST(Holonomy, Examples) {
    auto x = oracle::surface(1, 1);
    EXPECT_EQ(holonomy_from_weights(make_bundle(1, 0, at_x1({Rational(3, 10)})), "x1").phases,
              WeightList{Rational(3, 10)});
    EXPECT_EQ(holonomy_from_weights(make_bundle(1, 0, at_x1({Rational(0)})), "x1").phases,
              WeightList{Rational(0)});
    WeightList seventeenths;
    for (int k : {1, 4, 7, 8, 9, 10, 12, 13, 16}) seventeenths.push_back(Rational(k, 17));
    auto h = holonomy_from_weights(make_bundle(9, 0, at_x1(seventeenths)), "x1");
    EXPECT_EQ(h.phases.size(), 9u);
    EXPECT_TRUE(std::is_sorted(h.phases.begin(), h.phases.end()));
}

TEST(PdegZero, Examples) {
    auto x = oracle::surface(1, 1);
    EXPECT_EQ(pdeg_zero_degrees(1, 1, at_x1({Rational(3, 10)}), at_x1({Rational(7, 10)}), x), -1);
    EXPECT_EQ(kind_of([&] {
                  pdeg_zero_degrees(2, 1, at_x1({Rational(1, 4), Rational(1, 2)}), at_x1({Rational(1, 2)}), x);
              }),
              ErrorKind::WeightCollision);
    EXPECT_EQ(kind_of([&] {
                  pdeg_zero_degrees(2, 1, at_x1({Rational(1, 4), Rational(3, 5)}), at_x1({Rational(2, 5)}), x);
              }),
              ErrorKind::NoIntegralSolution);
    auto closed = oracle::surface(2, 0);
    EXPECT_EQ(pdeg_zero_degrees(2, 1, {}, {}, closed), 0);
}

TEST(ComponentCount, Examples) {
    auto v = at_x1({Rational(3, 10)}), w = at_x1({Rational(7, 10)});
    auto one = component_count(1, 1, v, w, oracle::surface(1, 1));
    EXPECT_EQ(one.count, 1);
    EXPECT_EQ(one.admissible_a, std::vector<std::int64_t>{0});
    EXPECT_EQ(one.total_degree, -1);
    auto three = component_count(1, 1, v, w, oracle::surface(2, 1));
    EXPECT_EQ(three.count, 3);
    EXPECT_EQ(three.admissible_a, (std::vector<std::int64_t>{-1, 0, 1}));
    EXPECT_EQ(kind_of([&] { component_count(1, 1, {}, {}, oracle::surface(2, 0)); }), ErrorKind::Unsupported);
}

TEST(ComponentCount, EmptyWhenTauLIsTooSmall) {
    // p=2, q=1 at g=1, s=1: tau_M = 1 and tau_L = 1 - eps/3. The weight sum of V
    // sits at distance 1/2 from the nearest integer, above tau_L/2.
    auto v = at_x1({Rational(1, 8), Rational(3, 8)});
    auto w = at_x1({Rational(1, 2)});
    auto c = component_count(2, 1, v, w, oracle::surface(1, 1));
    EXPECT_EQ(c.count, 0);
    EXPECT_TRUE(c.admissible_a.empty());
}

TEST(Orbifold, Conversion) {
    auto weights = orbifold_to_weights(fixc_orbifold(1));
    EXPECT_EQ(weights["V"]["x1"], WeightList{Rational(3, 10)});
    EXPECT_EQ(weights["W"]["x1"], WeightList{Rational(7, 10)});

    OrbifoldData two;
    two.surface = oracle::surface(1, 1);
    two.orders = {{"x1", 2}};
    two.l["V"]["x1"] = {0, 1};
    EXPECT_EQ(orbifold_to_weights(two)["V"]["x1"], (WeightList{Rational(0), Rational(1, 2)}));

    two.l["V"]["x1"] = {1, 1};
    EXPECT_EQ(kind_of([&] { orbifold_to_weights(two); }), ErrorKind::ViolatedFlag);

    OrbifoldData flat;
    flat.surface = oracle::surface(0, 1);
    flat.orders = {{"x1", 2}};
    flat.l["V"]["x1"] = {1};
    EXPECT_THROW(validate_orbifold(flat), Error);
}

TEST(Orbifold, ComponentCount) {
    EXPECT_EQ(orbifold_component_count(fixc_orbifold(1), 1, 1).count, 1);
    EXPECT_EQ(orbifold_component_count(fixc_orbifold(2), 1, 1).count, 3);
}

TEST(RepsProperties, SwapSymmetryAndClassifyConsistency) {
    std::mt19937_64 rng(601);
    int checked = 0;
    for (int n = 0; n < 150; ++n) {
        int p = gen::uniform(rng, 1, 3), q = gen::uniform(rng, 1, 3);
        MarkedSurface x = oracle::surface(gen::uniform(rng, 1, 2), gen::uniform(rng, 1, 2));
        WeightSystem v, w;
        if (!gen::integral_weights(rng, x, p, q, 101, v, w)) continue;
        ComponentCount c, d;
        try {
            c = component_count(p, q, v, w, x);
            d = component_count(q, p, w, v, x);
        } catch (const Error& e) {
            ASSERT_EQ(e.kind(), ErrorKind::NonGenericWeights);
            continue;
        }
        ++checked;
        EXPECT_EQ(c.count, d.count);
        std::vector<std::int64_t> mapped;
        for (auto a : c.admissible_a) mapped.push_back(c.total_degree - a);
        std::sort(mapped.begin(), mapped.end());
        EXPECT_EQ(mapped, d.admissible_a);

        std::int64_t lo = c.admissible_a.empty() ? 0 : c.admissible_a.front();
        std::int64_t hi = c.admissible_a.empty() ? 0 : c.admissible_a.back();
        for (std::int64_t a = lo - 3; a <= hi + 3; ++a) {
            UpqHiggsData h{make_bundle(p, a, v), make_bundle(q, c.total_degree - a, w), x};
            bool admissible = std::find(c.admissible_a.begin(), c.admissible_a.end(), a) != c.admissible_a.end();
            Verdict verdict;
            try {
                verdict = classify(h).verdict;
            } catch (const Error& e) {
                ASSERT_FALSE(admissible);
                continue;
            }
            if (admissible)
                EXPECT_TRUE(verdict == Verdict::NonEmptyConnected || verdict == Verdict::BoundaryCase);
            else
                EXPECT_EQ(verdict, Verdict::Empty) << "a = " << a;
        }
    }
    EXPECT_GT(checked, 50);
}

TEST(RepsProperties, LVectorRoundTrip) {
    std::mt19937_64 rng(602);
    for (int n = 0; n < 100; ++n) {
        OrbifoldData d;
        d.surface = oracle::surface(gen::uniform(rng, 1, 2), gen::uniform(rng, 1, 3));
        for (const auto& x : d.surface.points) {
            int m = gen::uniform(rng, 2, 12);
            d.orders[x] = m;
            for (const char* b : {"V", "W"}) {
                std::vector<int> l;
                for (int k = 0; k < m; ++k)
                    if (gen::uniform(rng, 0, 2) == 0) l.push_back(k);
                d.l[b][x] = l;
            }
        }
        auto weights = orbifold_to_weights(d);
        for (const auto& [b, per_point] : d.l)
            for (const auto& [x, l] : per_point) {
                std::vector<int> back;
                for (const auto& a : weights[b][x]) back.push_back(static_cast<int>(to_int64((a * Rational(d.orders[x])).num())));
                EXPECT_EQ(back, l);
            }
    }
}
