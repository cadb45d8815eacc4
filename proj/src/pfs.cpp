#include "pfg/pfs.hpp"

#include <algorithm>
#include <set>

namespace pfg {

PictureFuzzySet PictureFuzzySet::make(std::size_t carrier_size, std::vector<PictureTriple> triples) {
    if (triples.size() != carrier_size)
        throw ValidationError("expected " + std::to_string(carrier_size) + " triples, got " +
                              std::to_string(triples.size()));
    if (carrier_size == 0)
        throw ValidationError("picture fuzzy set needs a non-empty carrier");
    for (std::size_t i = 0; i < triples.size(); ++i)
        if (!triples[i].valid())
            throw ValidationError("triple at element " + std::to_string(i) + " is invalid: (" +
                                  triples[i].positive.str() + "," + triples[i].neutral.str() + "," +
                                  triples[i].negative.str() + ") has component outside [0,1] or sum > 1");
    return PictureFuzzySet(std::move(triples));
}

PictureFuzzySet PictureFuzzySet::constant(std::size_t carrier_size, const PictureTriple& t) {
    return make(carrier_size, std::vector<PictureTriple>(carrier_size, t));
}

Rational refusal_degree(const PictureFuzzySet& q, std::size_t y) {
    return Rational(1) - q.at(y).sum();
}

CutThreshold CutThreshold::make(Rational r, Rational s, Rational t) {
    CutThreshold c{std::move(r), std::move(s), std::move(t)};
    if (!c.valid())
        throw ValidationError("cut threshold (" + c.r.str() + "," + c.s.str() + "," + c.t.str() +
                              ") has component outside [0,1] or r+s+t > 1");
    return c;
}

Subset cut_set(const PictureFuzzySet& q, const CutThreshold& c) {
    if (!c.valid())
        throw ValidationError("invalid cut threshold");
    std::vector<int> members;
    for (std::size_t y = 0; y < q.carrier_size(); ++y) {
        const PictureTriple& tr = q.at(y);
        if (tr.positive >= c.r && tr.neutral >= c.s && tr.negative <= c.t)
            members.push_back(static_cast<int>(y));
    }
    return Subset(std::move(members));
}

namespace {

// One equivalence class of lower thresholds (predicate value >= x) for a
// single component. All x in (inf, upper] select the same elements; inf is
// attainable only for the bottom class [0, v_min].
struct LowerClass {
    Rational upper;  // preferred representative (attained value, or 1 for the top class)
    Rational inf;
    bool inf_closed;
};

std::vector<Rational> sorted_values(const PictureFuzzySet& q, Rational PictureTriple::*component) {
    std::set<Rational> vals;
    for (const auto& t : q.triples())
        vals.insert(t.*component);
    return {vals.begin(), vals.end()};
}

std::vector<LowerClass> lower_classes(const std::vector<Rational>& vals) {
    std::vector<LowerClass> out;
    out.push_back({vals.front(), Rational(0), true}); // [0, v_min]
    for (std::size_t k = 1; k < vals.size(); ++k)
        out.push_back({vals[k], vals[k - 1], false}); // (v_{k-1}, v_k]
    if (vals.back() < Rational(1))
        out.push_back({Rational(1), vals.back(), false}); // (v_max, 1]
    return out;
}

// Classes for the upper-bound component (predicate value <= t). Each class
// has an attainable minimum, which is the preferred representative.
std::vector<Rational> upper_class_reps(const std::vector<Rational>& vals) {
    std::vector<Rational> out;
    if (vals.front() > Rational(0))
        out.push_back(Rational(0)); // [0, v_min): rejects everything
    for (const Rational& v : vals)
        out.push_back(v);
    return out;
}

} // namespace

std::vector<CutThreshold> representative_thresholds(const PictureFuzzySet& q) {
    const auto sig = sorted_values(q, &PictureTriple::positive);
    const auto tau = sorted_values(q, &PictureTriple::neutral);
    const auto eta = sorted_values(q, &PictureTriple::negative);

    std::set<CutThreshold> out;

    // Grid of attained values with 0/1 sentinels, filtered to valid triples.
    {
        std::set<Rational> rs(sig.begin(), sig.end());
        rs.insert(Rational(0));
        std::set<Rational> ss(tau.begin(), tau.end());
        ss.insert(Rational(0));
        std::set<Rational> ts(eta.begin(), eta.end());
        ts.insert(Rational(1));
        for (const auto& r : rs)
            for (const auto& s : ss)
                for (const auto& t : ts)
                    if (r + s + t <= Rational(1))
                        out.insert(CutThreshold{r, s, t});
    }

    // One valid representative per realizable threshold class.
    const auto rclasses = lower_classes(sig);
    const auto sclasses = lower_classes(tau);
    const auto treps = upper_class_reps(eta);
    const Rational one(1);
    for (const auto& rc : rclasses) {
        for (const auto& sc : sclasses) {
            for (const auto& t : treps) {
                if (rc.upper + sc.upper + t <= one) {
                    out.insert(CutThreshold{rc.upper, sc.upper, t});
                    continue;
                }
                Rational minsum = rc.inf + sc.inf + t;
                if (minsum < one) {
                    Rational delta = (one - minsum) / Rational(4);
                    Rational r = rc.inf_closed ? rc.inf : rat_min(rc.upper, rc.inf + delta);
                    Rational s = sc.inf_closed ? sc.inf : rat_min(sc.upper, sc.inf + delta);
                    out.insert(CutThreshold{r, s, t});
                } else if (minsum == one && rc.inf_closed && sc.inf_closed) {
                    out.insert(CutThreshold{rc.inf, sc.inf, t});
                }
                // Otherwise no valid threshold exists in this class.
            }
        }
    }
    return {out.begin(), out.end()};
}

PictureFuzzySet cartesian_product(const PictureFuzzySet& p, const PictureFuzzySet& q) {
    const std::size_t np = p.carrier_size(), nq = q.carrier_size();
    std::vector<PictureTriple> triples;
    triples.reserve(np * nq);
    for (std::size_t a = 0; a < np; ++a)
        for (std::size_t b = 0; b < nq; ++b) {
            const PictureTriple& x = p.at(a);
            const PictureTriple& y = q.at(b);
            triples.push_back({rat_min(x.positive, y.positive), rat_min(x.neutral, y.neutral),
                               rat_max(x.negative, y.negative)});
        }
    return PictureFuzzySet::make(np * nq, std::move(triples));
}

PictureFuzzySet image(const GroupMap& f, const PictureFuzzySet& p) {
    if (static_cast<std::size_t>(f.source_order) != p.carrier_size())
        throw ValidationError("map source does not match the carrier of the set");
    std::vector<PictureTriple> triples(static_cast<std::size_t>(f.target_order),
                                       PictureTriple{Rational(0), Rational(0), Rational(1)});
    std::vector<bool> hit(static_cast<std::size_t>(f.target_order), false);
    for (int y1 = 0; y1 < f.source_order; ++y1) {
        const std::size_t y2 = static_cast<std::size_t>(f(y1));
        const PictureTriple& t = p.at(static_cast<std::size_t>(y1));
        if (!hit[y2]) {
            triples[y2] = t;
            hit[y2] = true;
        } else {
            triples[y2].positive = rat_max(triples[y2].positive, t.positive);
            triples[y2].neutral = rat_max(triples[y2].neutral, t.neutral);
            triples[y2].negative = rat_min(triples[y2].negative, t.negative);
        }
    }
    return PictureFuzzySet::make(static_cast<std::size_t>(f.target_order), std::move(triples));
}

PictureFuzzySet preimage(const GroupMap& f, const PictureFuzzySet& q) {
    if (static_cast<std::size_t>(f.target_order) != q.carrier_size())
        throw ValidationError("map target does not match the carrier of the set");
    std::vector<PictureTriple> triples;
    triples.reserve(static_cast<std::size_t>(f.source_order));
    for (int y1 = 0; y1 < f.source_order; ++y1)
        triples.push_back(q.at(static_cast<std::size_t>(f(y1))));
    return PictureFuzzySet::make(static_cast<std::size_t>(f.source_order), std::move(triples));
}

bool pfs_equal(const PictureFuzzySet& p, const PictureFuzzySet& q) {
    if (p.carrier_size() != q.carrier_size())
        throw ValidationError("carrier mismatch: " + std::to_string(p.carrier_size()) + " vs " +
                              std::to_string(q.carrier_size()));
    return p.triples() == q.triples();
}

} // namespace pfg
