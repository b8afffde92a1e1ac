#include "oracles.hpp"
#include "random_instances.hpp"

#include "parahiggs/errors.hpp"
#include "parahiggs/higgs.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace parahiggs;

namespace {

UpqHiggsData make_higgs(int p, int a, WeightList wv, int q, int b, WeightList ww, int g = 1, int s = 1) {
    MarkedSurface x = oracle::surface(g, s);
    std::map<std::string, WeightList> mv, mw;
    if (s > 0) {
        mv[x.points[0]] = std::move(wv);
        mw[x.points[0]] = std::move(ww);
    }
    return UpqHiggsData{make_bundle(p, a, mv), make_bundle(q, b, mw), x};
}

UpqHiggsData fixc(int a = 0, int g = 1) {
    return make_higgs(1, a, {Rational(3, 10)}, 1, -1, {Rational(7, 10)}, g);
}

UpqHiggsData small(int a, int b) {
    return make_higgs(2, a, {Rational(1, 6), Rational(1, 2)}, 1, b, {Rational(1, 3)}, 2);
}

UpqHiggsData swapped(const UpqHiggsData& h) { return UpqHiggsData{h.w, h.v, h.surface}; }

WeightList over17(std::initializer_list<int> ks) {
    WeightList w;
    for (int k : ks) w.push_back(Rational(k, 17));
    return w;
}

}  // namespace

TEST(Toledo, Examples) {
    EXPECT_EQ(toledo(fixc()), Rational(3, 5));
    EXPECT_EQ(toledo(swapped(fixc())), Rational(-3, 5));
    auto flat = make_higgs(2, 1, {Rational(1, 5), Rational(3, 5)}, 2, 1, {Rational(1, 2), Rational(3, 10)});
    EXPECT_EQ(toledo(flat), Rational(0));
}

TEST(Bounds, Examples) {
    auto c = bounds(fixc());
    EXPECT_EQ(c.tau_M, Rational(1));
    EXPECT_EQ(c.tau_L, Rational(1));

    auto s = bounds(small(0, 1));
    EXPECT_LT(toledo(small(0, 1)), Rational(0));
    EXPECT_EQ(s.tau_M, Rational(3));
    EXPECT_EQ(s.epsilon, Rational(1, 6));
    EXPECT_EQ(s.tau_L, Rational(53, 18));

    auto a = make_higgs(9, 0, over17({1, 4, 7, 8, 9, 10, 12, 13, 16}), 7, 5, over17({2, 3, 5, 6, 11, 14, 15}));
    auto ba = bounds(a);
    EXPECT_EQ(ba.epsilon, Rational(18, 17));
    EXPECT_EQ(ba.tau_M, Rational(7));
    EXPECT_EQ(ba.tau_L, Rational(467, 68));
}

TEST(Dimension, Examples) {
    EXPECT_EQ(moduli_dimension(small(0, 1)), Rational(13));
    EXPECT_EQ(gl_dimension(3, 2, 1), Rational(26));
    auto closed = make_higgs(2, 0, {}, 1, 0, {}, 3, 0);
    EXPECT_EQ(moduli_dimension(closed), Rational(1 + 2 * 9));
}

TEST(MinimaToTriple, Examples) {
    auto m = minima_to_triple(fixc());
    EXPECT_FALSE(m.degenerate_orientation);
    EXPECT_EQ(m.triple.r1(), 1);
    EXPECT_EQ(m.triple.e1.degree, -1);
    EXPECT_EQ(m.triple.e1.at("x1"), WeightList{Rational(7, 10)});
    EXPECT_EQ(m.triple.e2.degree, 0);
    EXPECT_EQ(m.triple.e2.at("x1"), WeightList{Rational(3, 10)});

    auto n = minima_to_triple(small(0, 1));
    EXPECT_EQ(n.triple.r1(), 2);
    EXPECT_EQ(n.triple.e1.degree, 0 + 2 * 2);

    auto flat = make_higgs(2, 1, {Rational(1, 5), Rational(3, 5)}, 2, 1, {Rational(1, 2), Rational(3, 10)});
    auto f = minima_to_triple(flat);
    EXPECT_TRUE(f.degenerate_orientation);
    EXPECT_EQ(f.triple.e1.at("x1"), flat.w.at("x1"));
}

TEST(Classify, Examples) {
    auto c = classify(fixc());
    EXPECT_EQ(c.verdict, Verdict::NonEmptyConnected);
    EXPECT_EQ(c.tau, Rational(3, 5));
    EXPECT_EQ(c.placement, "inside");
    // p = q = 1, so the prefactor 2pq/(p+q) is 1: tau = 53/10 + 3/10.
    EXPECT_EQ(classify(fixc(5)).tau, Rational(28, 5));
    EXPECT_EQ(classify(fixc(5)).verdict, Verdict::Empty);
    auto g0 = make_higgs(1, 0, {Rational(3, 10)}, 1, -1, {Rational(7, 10)}, 0, 1);
    EXPECT_EQ(classify(g0).verdict, Verdict::Unsupported);
    EXPECT_EQ(classify(make_higgs(1, 0, {}, 1, 0, {}, 2, 0)).verdict, Verdict::Unsupported);
    auto s = classify(small(0, 1));
    EXPECT_EQ(s.verdict, Verdict::NonEmptyConnected);
    ASSERT_TRUE(s.sigma_L.has_value());
}

TEST(Classify, RejectsCollidingWeights) {
    auto h = make_higgs(1, 0, {Rational(1, 2)}, 1, 0, {Rational(1, 2)});
    try {
        classify(h);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::WeightCollision);
    }
}

TEST(HiggsProperties, ToledoIdentitiesAndSwap) {
    std::mt19937_64 rng(501);
    for (int n = 0; n < 300; ++n) {
        int g = gen::uniform(rng, 1, 3);
        UpqHiggsData h = gen::higgs(rng, g, gen::uniform(rng, 1, 3), gen::uniform(rng, 1, 4), gen::uniform(rng, 1, 4), 6);
        const Rational tau = toledo(h);
        auto e = direct_sum(h.v, h.w);
        EXPECT_EQ(tau, Rational(2 * h.p()) * (pmu(h.v, h.surface) - pmu(e, h.surface)));
        EXPECT_EQ(tau, Rational(2 * h.q()) * (pmu(e, h.surface) - pmu(h.w, h.surface)));
        EXPECT_EQ(toledo(swapped(h)), -tau);
        if (tau != 0) {
            auto b = bounds(h), c = bounds(swapped(h));
            EXPECT_EQ(b.tau_M, c.tau_M);
            EXPECT_EQ(b.epsilon, c.epsilon);
            EXPECT_EQ(b.tau_L, c.tau_L);
        }
        EXPECT_EQ(moduli_dimension(h), gl_dimension(h.p() + h.q(), g, h.surface.s()) / Rational(2));
    }
}

TEST(HiggsProperties, EpsilonRoutesAgree) {
    std::mt19937_64 rng(502);
    for (int n = 0; n < 300; ++n) {
        int p = gen::uniform(rng, 1, 5), q = gen::uniform(rng, 1, 5);
        if (p == q) continue;
        UpqHiggsData h = gen::higgs(rng, gen::uniform(rng, 1, 3), gen::uniform(rng, 1, 3), p, q, 6);
        EXPECT_EQ(bounds(h).epsilon, epsilon(oriented_minima_triple(h)));
        EXPECT_GT(bounds(h).epsilon, Rational(0));
    }
}

TEST(HiggsProperties, WindowMatchesToledoBoundForUnequalRanks) {
    std::mt19937_64 rng(503);
    for (int n = 0; n < 400; ++n) {
        int p = gen::uniform(rng, 1, 4), q = gen::uniform(rng, 1, 4);
        if (p == q) continue;
        int g = gen::uniform(rng, 1, 3);
        UpqHiggsData h = gen::higgs(rng, g, gen::uniform(rng, 1, 3), p, q, 12);
        TripleData t = minima_to_triple(h).triple;
        SigmaWindow w = sigma_window(t);
        const Rational k(2 * g - 2);
        const bool in_window = w.lower <= k && k <= *w.upper;
        EXPECT_EQ(in_window, toledo(h).abs() <= bounds(h).tau_M) << "instance " << n;
    }
}

TEST(HiggsProperties, TauLAgreesWithSigmaL) {
    std::mt19937_64 rng(504);
    for (int n = 0; n < 400; ++n) {
        int p = gen::uniform(rng, 1, 4), q = gen::uniform(rng, 1, 4);
        if (p == q) continue;
        int g = gen::uniform(rng, 1, 3);
        UpqHiggsData h = gen::higgs(rng, g, gen::uniform(rng, 1, 3), p, q, 12);
        if (toledo(h) == 0) continue;
        const Rational k(2 * g - 2);
        const Rational sl = sigma_L(oriented_minima_triple(h));
        EXPECT_EQ(toledo(h).abs() < bounds(h).tau_L, k < sl) << "instance " << n;
        EXPECT_EQ(toledo(h).abs() == bounds(h).tau_L, k == sl) << "instance " << n;
    }
}
