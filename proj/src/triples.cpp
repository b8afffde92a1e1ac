#include "parahiggs/triples.hpp"

#include "parahiggs/errors.hpp"
#include "parahiggs/flagalg.hpp"

#include <algorithm>
#include <map>

namespace parahiggs {

const char* to_string(TripleVerdict v) {
    return v == TripleVerdict::NonEmptyIrreducible ? "NonEmptyIrreducible" : "Empty";
}

Rational sigma_deg(const TripleData& t, const Rational& sigma) {
    return pdeg(t.e1, t.surface) + pdeg(t.e2, t.surface) + sigma * Rational(t.r2());
}

Rational sigma_slope(const TripleData& t, const Rational& sigma) {
    return sigma_deg(t, sigma) / Rational(t.r1() + t.r2());
}

namespace {

Rational window_lower(const Rational& pdeg1, int r1, const Rational& pdeg2, int r2) {
    return pdeg1 / Rational(r1) - pdeg2 / Rational(r2);
}

Rational window_upper(const Rational& lower, int r1, int r2, int s) {
    Rational ratio(r1 + r2, std::abs(r1 - r2));
    return (Rational(1) + ratio) * lower + Rational(s) * ratio;
}

}  // namespace

SigmaWindow sigma_window(const TripleData& t) {
    SigmaWindow w;
    w.lower = pmu(t.e1, t.surface) - pmu(t.e2, t.surface);
    if (t.r1() != t.r2()) w.upper = window_upper(w.lower, t.r1(), t.r2(), t.surface.s());
    return w;
}

int total_r_p(const TripleData& t) {
    int total = 0;
    for (const auto& x : t.surface.points)
        total += r_p(ParabolicPoint(t.e2.at(x)), ParabolicPoint(t.e1.at(x)));
    return total;
}

DestabilizingType destabilizing_type(const TripleData& t) {
    if (t.r1() <= t.r2())
        throw Error(ErrorKind::OrientationError, "destabilizing type needs r1 > r2; dualize first");
    DestabilizingType out;
    out.sub.surface = out.quot.surface = t.surface;
    out.sub.e2 = t.e2;
    out.sub.e1.rank = t.r2();
    out.quot.e1.rank = t.r1() - t.r2();
    std::int64_t shift = 0;
    for (const auto& x : t.surface.points) {
        const WeightList& alpha = t.e1.at(x);
        WeightSubset ij = destabilizing_weight_subset(ParabolicPoint(t.e2.at(x)), ParabolicPoint(alpha));
        std::vector<bool> in_sub(alpha.size(), false);
        for (int i : ij.I) in_sub[static_cast<size_t>(i - 1)] = true;
        for (int j : ij.J) in_sub[static_cast<size_t>(j - 1)] = true;
        WeightList sub_w, quot_w;
        for (size_t i = 0; i < alpha.size(); ++i) (in_sub[i] ? sub_w : quot_w).push_back(alpha[i]);
        out.sub.e1.weights[x] = std::move(sub_w);
        out.quot.e1.weights[x] = std::move(quot_w);
        out.quot.e2.weights[x] = {};
        out.r_p.push_back(static_cast<int>(ij.J.size()));
        shift += static_cast<std::int64_t>(ij.J.size());
    }
    out.sub.e1.degree = t.e2.degree - static_cast<std::int64_t>(t.r2()) * t.surface.s() + shift;
    out.quot.e1.degree = t.e1.degree - out.sub.e1.degree;
    return out;
}

EpsilonReport epsilon_both(const TripleData& t) {
    DestabilizingType type = destabilizing_type(t);
    EpsilonReport out;
    out.via_pdeg = pdeg(twist_integral(type.sub.e1, t.surface, 1), t.surface) - pdeg(t.e2, t.surface);
    for (const auto& x : t.surface.points)
        out.via_recipe += epsilon_recipe_point(ParabolicPoint(t.e2.at(x)), ParabolicPoint(t.e1.at(x)));
    return out;
}

Rational epsilon(const TripleData& t) { return epsilon_both(t).via_pdeg; }

Rational sigma_L(const TripleData& t) {
    Rational eps = epsilon(t);
    return *sigma_window(t).upper - eps / Rational(t.r2());
}

TripleData dualize(const TripleData& t) {
    TripleData d;
    d.surface = t.surface;
    d.e1 = parabolic_dual(t.e2, t.surface);
    d.e2 = parabolic_dual(t.e1, t.surface);
    return d;
}

TripleData oriented(const TripleData& t) { return t.r1() >= t.r2() ? t : dualize(t); }

namespace {

struct Choice {
    std::vector<int> idx;
    Rational sum;
};

void collect_subsets(const WeightList& w, int k, size_t start, Choice& cur, std::vector<Choice>& out) {
    if (static_cast<int>(cur.idx.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (size_t i = start; i < w.size(); ++i) {
        cur.idx.push_back(static_cast<int>(i) + 1);
        cur.sum += w[i];
        collect_subsets(w, k, i + 1, cur, out);
        cur.sum -= w[i];
        cur.idx.pop_back();
    }
}

std::vector<Choice> subsets_of(const WeightList& w, int k) {
    std::vector<Choice> out;
    Choice cur;
    collect_subsets(w, k, 0, cur, out);
    return out;
}

// One subtriple shape: ranks plus a weight-index choice at every point.
struct Tuple {
    int r1p = 0;
    int r2p = 0;
    Rational w1;
    Rational w2;
    const std::vector<std::vector<Choice>>* c1 = nullptr;
    const std::vector<std::vector<Choice>>* c2 = nullptr;
    const std::vector<size_t>* pick1 = nullptr;
    const std::vector<size_t>* pick2 = nullptr;

    std::vector<std::vector<int>> indices1() const { return indices(*c1, *pick1); }
    std::vector<std::vector<int>> indices2() const { return indices(*c2, *pick2); }

    static std::vector<std::vector<int>> indices(const std::vector<std::vector<Choice>>& c,
                                                 const std::vector<size_t>& pick) {
        std::vector<std::vector<int>> out;
        for (size_t x = 0; x < c.size(); ++x) out.push_back(c[x][pick[x]].idx);
        return out;
    }
};

class Engine {
public:
    explicit Engine(const TripleData& t) : t_(t) {
        r1_ = t.r1();
        r2_ = t.r2();
        s_ = t.surface.s();
        d1_ = t.e1.degree;
        d2_ = t.e2.degree;
        s1_ = weight_sum(t.e1, t.surface);
        s2_ = weight_sum(t.e2, t.surface);
        mu_ = (Rational(d1_ + d2_) + s1_ + s2_) / Rational(r1_ + r2_);
        lambda_ = Rational(r2_, r1_ + r2_);
    }

    const Rational& mu() const { return mu_; }
    const Rational& lambda() const { return lambda_; }

    // Visits every admissible shape; the visitor returns false to stop early.
    template <class Visit>
    void for_each_tuple(Visit&& visit) const {
        for (int a = 0; a <= r1_; ++a) {
            for (int b = 0; b <= r2_; ++b) {
                if ((a == 0 && b == 0) || (a == r1_ && b == r2_)) continue;
                std::vector<std::vector<Choice>> c1, c2;
                for (const auto& x : t_.surface.points) {
                    c1.push_back(subsets_of(t_.e1.at(x), a));
                    c2.push_back(subsets_of(t_.e2.at(x), b));
                }
                const size_t n = c1.size();
                std::vector<size_t> p1(n, 0), p2(n, 0);
                while (true) {
                    Tuple tu;
                    tu.r1p = a;
                    tu.r2p = b;
                    for (size_t x = 0; x < n; ++x) {
                        tu.w1 += c1[x][p1[x]].sum;
                        tu.w2 += c2[x][p2[x]].sum;
                    }
                    tu.c1 = &c1;
                    tu.c2 = &c2;
                    tu.pick1 = &p1;
                    tu.pick2 = &p2;
                    if (!visit(tu)) return;
                    if (!advance(c1, c2, p1, p2)) break;
                }
            }
        }
    }

    std::optional<std::int64_t> forced1(int r1p) const {
        if (r1p == 0) return 0;
        if (r1p == r1_) return d1_;
        return std::nullopt;
    }
    std::optional<std::int64_t> forced2(int r2p) const {
        if (r2p == 0) return 0;
        if (r2p == r2_) return d2_;
        return std::nullopt;
    }

    // Emits every degree split (d1', d2') of `total` compatible with the window conditions on the
    // subtriple and on the quotient at `sigma`. Returns false if the emitter asked to stop.
    template <class Emit>
    bool splits(const Tuple& tu, std::int64_t total, const Rational& sigma, Emit&& emit) const {
        auto f1 = forced1(tu.r1p);
        auto f2 = forced2(tu.r2p);
        auto check = [&](std::int64_t d1p, std::int64_t d2p) {
            if (!in_window(tu.r1p, tu.r2p, d1p, d2p, tu.w1, tu.w2, sigma)) return true;
            if (!in_window(r1_ - tu.r1p, r2_ - tu.r2p, d1_ - d1p, d2_ - d2p, s1_ - tu.w1, s2_ - tu.w2,
                           sigma))
                return true;
            return emit(d1p, d2p);
        };
        if (f1 && f2) return *f1 + *f2 == total ? check(*f1, *f2) : true;
        if (f1) return check(*f1, total - *f1);
        if (f2) return check(total - *f2, *f2);
        // Both components of T' and T'' are nonzero here.
        const Rational q1(r1_ - tu.r1p), q2(r2_ - tu.r2p), p1(tu.r1p), p2(tu.r2p);
        const Rational D(total);
        Rational upper = (sigma - tu.w1 / p1 + (D + tu.w2) / p2) / (Rational(1) / p1 + Rational(1) / p2);
        Rational lower = -(sigma - (Rational(d1_) + s1_ - tu.w1) / q1 +
                           (Rational(d2_) - D + s2_ - tu.w2) / q2) /
                         (Rational(1) / q1 + Rational(1) / q2);
        const std::int64_t lo = to_int64(lower.ceil());
        const std::int64_t hi = to_int64(upper.floor());
        for (std::int64_t d1p = lo; d1p <= hi; ++d1p)
            if (!check(d1p, total - d1p)) return false;
        return true;
    }

    static SubtripleInvariants make_witness(const Tuple& tu, std::int64_t d1p, std::int64_t d2p) {
        SubtripleInvariants w;
        w.r1p = tu.r1p;
        w.r2p = tu.r2p;
        w.d1p = d1p;
        w.d2p = d2p;
        w.w1 = tu.indices1();
        w.w2 = tu.indices2();
        return w;
    }

    int s() const { return s_; }

private:
    static bool advance(const std::vector<std::vector<Choice>>& c1,
                        const std::vector<std::vector<Choice>>& c2, std::vector<size_t>& p1,
                        std::vector<size_t>& p2) {
        for (size_t x = 0; x < p1.size(); ++x) {
            if (++p1[x] < c1[x].size()) return true;
            p1[x] = 0;
        }
        for (size_t x = 0; x < p2.size(); ++x) {
            if (++p2[x] < c2[x].size()) return true;
            p2[x] = 0;
        }
        return false;
    }

    // Necessary condition for a semistable triple X at sigma: sigma_m(X) <= sigma <= sigma_M(X).
    bool in_window(int ra, int rb, std::int64_t da, std::int64_t db, const Rational& wa,
                   const Rational& wb, const Rational& sigma) const {
        if (ra == 0 || rb == 0) return true;
        Rational lower = window_lower(Rational(da) + wa, ra, Rational(db) + wb, rb);
        if (sigma < lower) return false;
        if (ra == rb) return true;
        return sigma <= window_upper(lower, ra, rb, s_);
    }

    const TripleData& t_;
    int r1_ = 0, r2_ = 0, s_ = 0;
    std::int64_t d1_ = 0, d2_ = 0;
    Rational s1_, s2_, mu_, lambda_;
};

Rational lambda_of(const Tuple& tu) { return Rational(tu.r2p, tu.r1p + tu.r2p); }

std::vector<SubtripleInvariants> collect_at(const TripleData& t, const Rational& sigma, bool first_only) {
    Engine eng(t);
    std::vector<SubtripleInvariants> out;
    eng.for_each_tuple([&](const Tuple& tu) {
        Rational lp = lambda_of(tu);
        if (lp == eng.lambda()) return true;
        Rational total = (sigma * (eng.lambda() - lp) + eng.mu()) * Rational(tu.r1p + tu.r2p) - tu.w1 - tu.w2;
        if (!total.is_integer()) return true;
        return eng.splits(tu, to_int64(total.num()), sigma, [&](std::int64_t d1p, std::int64_t d2p) {
            out.push_back(Engine::make_witness(tu, d1p, d2p));
            return !first_only;
        });
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Coincidence> collect_coincidences(const TripleData& t, bool first_only) {
    Engine eng(t);
    std::vector<Coincidence> out;
    eng.for_each_tuple([&](const Tuple& tu) {
        if (lambda_of(tu) != eng.lambda()) return true;
        Rational total = eng.mu() * Rational(tu.r1p + tu.r2p) - tu.w1 - tu.w2;
        if (!total.is_integer()) return true;
        const std::int64_t d = to_int64(total.num());
        auto f1 = eng.forced1(tu.r1p);
        auto f2 = eng.forced2(tu.r2p);
        if (f1 && f2 && *f1 + *f2 != d) return true;
        out.push_back(Coincidence{tu.r1p, tu.r2p, d, tu.indices1(), tu.indices2()});
        return !first_only;
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

WallReport enumerate_walls(const TripleData& t, const Rational& lo, const std::optional<Rational>& hi,
                           bool include_dependent) {
    if (!hi) throw Error(ErrorKind::UnboundedInterval, "wall search needs a finite upper end");
    if (!(lo < *hi)) throw Error(ErrorKind::DimensionMismatch, "empty search interval");
    Engine eng(t);
    std::map<Rational, std::vector<SubtripleInvariants>> found;
    eng.for_each_tuple([&](const Tuple& tu) {
        Rational lp = lambda_of(tu);
        if (lp == eng.lambda()) return true;
        const Rational n(tu.r1p + tu.r2p);
        const Rational gap = eng.lambda() - lp;
        // sigma(D') = a D' + b for the total degree D' = d1' + d2'.
        const Rational a = Rational(1) / (n * gap);
        const Rational b = ((tu.w1 + tu.w2) / n - eng.mu()) / gap;
        Rational x = (lo - b) / a, y = (*hi - b) / a;
        if (y < x) std::swap(x, y);
        std::int64_t from = to_int64(x.floor()) + 1;
        std::int64_t to = to_int64(y.ceil()) - 1;
        auto f1 = eng.forced1(tu.r1p);
        auto f2 = eng.forced2(tu.r2p);
        if (f1 && f2) {
            from = std::max(from, *f1 + *f2);
            to = std::min(to, *f1 + *f2);
        }
        for (std::int64_t total = from; total <= to; ++total) {
            Rational sigma = a * Rational(total) + b;
            eng.splits(tu, total, sigma, [&](std::int64_t d1p, std::int64_t d2p) {
                found[sigma].push_back(Engine::make_witness(tu, d1p, d2p));
                return true;
            });
        }
        return true;
    });
    WallReport report;
    for (auto& [sigma, ws] : found) {
        std::sort(ws.begin(), ws.end());
        ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
        report.walls.push_back(Wall{sigma, std::move(ws)});
    }
    if (include_dependent) report.coincidences = collect_coincidences(t, false);
    return report;
}

std::vector<SubtripleInvariants> witnesses_at(const TripleData& t, const Rational& sigma) {
    return collect_at(t, sigma, false);
}

std::vector<Coincidence> coincidences(const TripleData& t) { return collect_coincidences(t, false); }

bool is_generic_at(const TripleData& t, const Rational& sigma) {
    return collect_at(t, sigma, true).empty() && collect_coincidences(t, true).empty();
}

Rational sigma_one(const TripleData& t) {
    return pdeg(t.e1, t.surface) - pdeg(t.e2, t.surface) + Rational((t.r1() - 1) * t.surface.s());
}

Rational sigma_two_bound(const TripleData& t) {
    if (t.r1() != t.r2()) throw Error(ErrorKind::OrientationError, "sigma_2 bound needs r1 = r2");
    const int r = t.r1();
    const Rational s(t.surface.s());
    const Rational mu1 = pmu(t.e1, t.surface), mu2 = pmu(t.e2, t.surface);
    const Rational tmax = Rational(r) * (mu1 - mu2 + Rational(2) * s);
    const Rational b2 = mu2 + tmax / Rational(2 * r) + s;
    Rational best = sigma_one(t);
    for (int a = 1; a <= r; ++a) {
        const Rational b1 = mu1 + tmax * Rational(r - a) / Rational(2 * r * a) + s;
        for (int b = 0; b < a; ++b) {
            const Rational gap(a - b);
            Rational v = Rational(2) * b1 * Rational(a) / gap + Rational(2) * b2 * Rational(b) / gap -
                         (mu1 + mu2) * Rational(a + b) / gap;
            best = max(best, v);
        }
    }
    return best;
}

TripleVerdict large_sigma_nonempty(const TripleData& t) {
    if (t.r1() != t.r2()) throw Error(ErrorKind::OrientationError, "large-sigma criterion needs r1 = r2");
    const std::int64_t lhs = t.e1.degree + static_cast<std::int64_t>(t.r1()) * t.surface.s() - t.e2.degree;
    return lhs >= total_r_p(t) ? TripleVerdict::NonEmptyIrreducible : TripleVerdict::Empty;
}

}  // namespace parahiggs
