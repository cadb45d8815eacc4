#include "pfg/pfsg.hpp"

#include <algorithm>
#include <set>

namespace pfg {

std::string clause_name(PfsgClause c) {
    switch (c) {
    case PfsgClause::SigmaClosure: return "sigma-closure";
    case PfsgClause::TauClosure: return "tau-closure";
    case PfsgClause::EtaClosure: return "eta-closure";
    case PfsgClause::SigmaInverse: return "sigma-inverse";
    case PfsgClause::TauInverse: return "tau-inverse";
    case PfsgClause::EtaInverse: return "eta-inverse";
    case PfsgClause::SigmaEquality: return "sigma-equality";
    case PfsgClause::TauEquality: return "tau-equality";
    case PfsgClause::EtaEquality: return "eta-equality";
    }
    return "?";
}

static void check_carrier(const FiniteGroup& g, const PictureFuzzySet& q) {
    if (q.carrier_size() != static_cast<std::size_t>(g.order()))
        throw ValidationError("carrier mismatch: set over " + std::to_string(q.carrier_size()) +
                              " elements, group of order " + std::to_string(g.order()));
}

PfsgVerdict is_pfsg(const FiniteGroup& g, const PictureFuzzySet& q) {
    check_carrier(g, q);
    const int n = g.order();
    for (int a = 0; a < n; ++a) {
        const PictureTriple& ta = q.at(static_cast<std::size_t>(a));
        for (int b = 0; b < n; ++b) {
            const PictureTriple& tb = q.at(static_cast<std::size_t>(b));
            const PictureTriple& tab = q.at(static_cast<std::size_t>(g.op(a, b)));
            if (tab.positive < rat_min(ta.positive, tb.positive))
                return {false, PfsgWitness{a, b, PfsgClause::SigmaClosure}};
            if (tab.neutral < rat_min(ta.neutral, tb.neutral))
                return {false, PfsgWitness{a, b, PfsgClause::TauClosure}};
            if (tab.negative > rat_max(ta.negative, tb.negative))
                return {false, PfsgWitness{a, b, PfsgClause::EtaClosure}};
        }
        const PictureTriple& ti = q.at(static_cast<std::size_t>(g.inverse(a)));
        if (ti.positive < ta.positive)
            return {false, PfsgWitness{a, -1, PfsgClause::SigmaInverse}};
        if (ti.neutral < ta.neutral)
            return {false, PfsgWitness{a, -1, PfsgClause::TauInverse}};
        if (ti.negative > ta.negative)
            return {false, PfsgWitness{a, -1, PfsgClause::EtaInverse}};
    }
    return {true, std::nullopt};
}

PfsgVerdict is_pfsg_compact(const FiniteGroup& g, const PictureFuzzySet& q) {
    check_carrier(g, q);
    const int n = g.order();
    for (int a = 0; a < n; ++a) {
        const PictureTriple& ta = q.at(static_cast<std::size_t>(a));
        for (int b = 0; b < n; ++b) {
            const PictureTriple& tb = q.at(static_cast<std::size_t>(b));
            const PictureTriple& tc = q.at(static_cast<std::size_t>(g.op(a, g.inverse(b))));
            if (tc.positive < rat_min(ta.positive, tb.positive))
                return {false, PfsgWitness{a, b, PfsgClause::SigmaClosure}};
            if (tc.neutral < rat_min(ta.neutral, tb.neutral))
                return {false, PfsgWitness{a, b, PfsgClause::TauClosure}};
            if (tc.negative > rat_max(ta.negative, tb.negative))
                return {false, PfsgWitness{a, b, PfsgClause::EtaClosure}};
        }
    }
    return {true, std::nullopt};
}

PictureFuzzySet left_coset(const FiniteGroup& g, const PictureFuzzySet& q, int a) {
    check_carrier(g, q);
    const int ai = g.inverse(a);
    std::vector<PictureTriple> triples;
    triples.reserve(q.carrier_size());
    for (int u = 0; u < g.order(); ++u)
        triples.push_back(q.at(static_cast<std::size_t>(g.op(ai, u))));
    return PictureFuzzySet::make(q.carrier_size(), std::move(triples));
}

PictureFuzzySet right_coset(const FiniteGroup& g, const PictureFuzzySet& q, int a) {
    check_carrier(g, q);
    const int ai = g.inverse(a);
    std::vector<PictureTriple> triples;
    triples.reserve(q.carrier_size());
    for (int u = 0; u < g.order(); ++u)
        triples.push_back(q.at(static_cast<std::size_t>(g.op(u, ai))));
    return PictureFuzzySet::make(q.carrier_size(), std::move(triples));
}

namespace {

void require_pfsg(const FiniteGroup& g, const PictureFuzzySet& q) {
    PfsgVerdict v = is_pfsg(g, q);
    if (!v.holds)
        throw PreconditionError("normality is only defined for picture fuzzy subgroups; " +
                                clause_name(v.witness->clause) + " fails at a=" +
                                std::to_string(v.witness->a) +
                                (v.witness->b >= 0 ? " b=" + std::to_string(v.witness->b) : ""));
}

PfsgVerdict equality_scan(const FiniteGroup& g, const PictureFuzzySet& q,
                          int (*lhs)(const FiniteGroup&, int, int),
                          int (*rhs)(const FiniteGroup&, int, int)) {
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b) {
            const PictureTriple& tl = q.at(static_cast<std::size_t>(lhs(g, a, b)));
            const PictureTriple& tr = q.at(static_cast<std::size_t>(rhs(g, a, b)));
            if (tl.positive != tr.positive)
                return {false, PfsgWitness{a, b, PfsgClause::SigmaEquality}};
            if (tl.neutral != tr.neutral)
                return {false, PfsgWitness{a, b, PfsgClause::TauEquality}};
            if (tl.negative != tr.negative)
                return {false, PfsgWitness{a, b, PfsgClause::EtaEquality}};
        }
    return {true, std::nullopt};
}

} // namespace

PfsgVerdict is_pfnsg_cosets(const FiniteGroup& g, const PictureFuzzySet& q) {
    check_carrier(g, q);
    require_pfsg(g, q);
    // Qa(b) = Q(b * a^-1) versus aQ(b) = Q(a^-1 * b).
    return equality_scan(
        g, q, [](const FiniteGroup& gr, int a, int b) { return gr.op(b, gr.inverse(a)); },
        [](const FiniteGroup& gr, int a, int b) { return gr.op(gr.inverse(a), b); });
}

PfsgVerdict is_pfnsg_commute(const FiniteGroup& g, const PictureFuzzySet& q) {
    check_carrier(g, q);
    require_pfsg(g, q);
    return equality_scan(
        g, q, [](const FiniteGroup& gr, int a, int b) { return gr.op(a, b); },
        [](const FiniteGroup& gr, int a, int b) { return gr.op(b, a); });
}

PfsgVerdict is_pfnsg_conjugation(const FiniteGroup& g, const PictureFuzzySet& q) {
    check_carrier(g, q);
    require_pfsg(g, q);
    return equality_scan(
        g, q, [](const FiniteGroup& gr, int a, int b) { return gr.conjugate(a, b); },
        [](const FiniteGroup&, int a, int) { return a; });
}

PictureFuzzySet conjugate_pfs(const FiniteGroup& g, const PictureFuzzySet& q, int a) {
    check_carrier(g, q);
    std::vector<PictureTriple> triples;
    triples.reserve(q.carrier_size());
    for (int x = 0; x < g.order(); ++x)
        triples.push_back(q.at(static_cast<std::size_t>(g.conjugate(x, a))));
    return PictureFuzzySet::make(q.carrier_size(), std::move(triples));
}

std::optional<int> are_conjugate(const FiniteGroup& g, const PictureFuzzySet& p,
                                 const PictureFuzzySet& q) {
    check_carrier(g, p);
    check_carrier(g, q);
    for (int a = 0; a < g.order(); ++a)
        if (pfs_equal(p, conjugate_pfs(g, q, a)))
            return a;
    return std::nullopt;
}

int max_chain_length(const SubgroupLattice& lat, bool normal_only) {
    return normal_only ? lat.normal_chain_depth[static_cast<std::size_t>(lat.full)]
                       : lat.chain_depth[static_cast<std::size_t>(lat.full)];
}

SubgroupChain sample_subgroup_chain(const SubgroupLattice& lat, std::mt19937_64& rng, int length,
                                    bool normal_only) {
    if (length < 1)
        throw ValidationError("chain length must be >= 1");
    if (length > max_chain_length(lat, normal_only))
        throw PreconditionError("no subgroup chain of length " + std::to_string(length) +
                              (normal_only ? " through normal subgroups" : "") + " exists");
    const auto& depth = normal_only ? lat.normal_chain_depth : lat.chain_depth;
    std::vector<int> picked{lat.full};
    int cur = lat.full;
    for (int remaining = length - 1; remaining >= 1; --remaining) {
        std::vector<int> candidates;
        for (int j : lat.proper[static_cast<std::size_t>(cur)])
            if (depth[static_cast<std::size_t>(j)] >= remaining &&
                (!normal_only || lat.normal[static_cast<std::size_t>(j)]))
                candidates.push_back(j);
        cur = candidates[static_cast<std::size_t>(rng() % candidates.size())];
        picked.push_back(cur);
    }
    SubgroupChain chain;
    for (auto it = picked.rbegin(); it != picked.rend(); ++it)
        chain.layers.push_back(lat.subgroups[static_cast<std::size_t>(*it)]);
    return chain;
}

namespace {

// count distinct values drawn uniformly from [lo, hi], returned ascending.
std::vector<int> distinct_values(std::mt19937_64& rng, int count, int lo, int hi) {
    std::set<int> vals;
    while (static_cast<int>(vals.size()) < count)
        vals.insert(lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)));
    return {vals.begin(), vals.end()};
}

PictureFuzzySet layered_pfs(const FiniteGroup& g, const SubgroupChain& chain, std::mt19937_64& rng,
                            int denominator) {
    const int k = static_cast<int>(chain.layers.size());
    const int maxv = denominator / 3;
    if (k > maxv)
        throw ValidationError("denominator grid " + std::to_string(denominator) +
                              " is too small for a chain of length " + std::to_string(k));
    // Distinct grid numerators per component keep the layer level sets from
    // collapsing; capping each at denominator/3 keeps every triple sum <= 1.
    std::vector<int> sig = distinct_values(rng, k, 1, maxv); // ascending
    std::vector<int> tau = distinct_values(rng, k, 1, maxv);
    std::vector<int> eta = distinct_values(rng, k, 0, maxv - 1);

    std::vector<int> layer(static_cast<std::size_t>(g.order()), -1);
    for (int i = k - 1; i >= 0; --i)
        for (int y : chain.layers[static_cast<std::size_t>(i)].members())
            layer[static_cast<std::size_t>(y)] = i;

    std::vector<PictureTriple> triples;
    triples.reserve(static_cast<std::size_t>(g.order()));
    for (int y = 0; y < g.order(); ++y) {
        const int i = layer[static_cast<std::size_t>(y)];
        // positive/neutral decrease outward, negative increases.
        triples.push_back({Rational(sig[static_cast<std::size_t>(k - 1 - i)], denominator),
                           Rational(tau[static_cast<std::size_t>(k - 1 - i)], denominator),
                           Rational(eta[static_cast<std::size_t>(i)], denominator)});
    }
    return PictureFuzzySet::make(static_cast<std::size_t>(g.order()), std::move(triples));
}

} // namespace

PictureFuzzySet sample_pfsg(const FiniteGroup& g, std::uint64_t seed, int chain_length,
                            int denominator) {
    return sample_pfsg(g, build_subgroup_lattice(g), seed, chain_length, denominator);
}

PictureFuzzySet sample_pfsg(const FiniteGroup& g, const SubgroupLattice& lat, std::uint64_t seed,
                            int chain_length, int denominator) {
    std::mt19937_64 rng(seed);
    SubgroupChain chain = sample_subgroup_chain(lat, rng, chain_length, false);
    return layered_pfs(g, chain, rng, denominator);
}

PictureFuzzySet sample_pfnsg(const FiniteGroup& g, std::uint64_t seed, int chain_length,
                             int denominator) {
    return sample_pfnsg(g, build_subgroup_lattice(g), seed, chain_length, denominator);
}

PictureFuzzySet sample_pfnsg(const FiniteGroup& g, const SubgroupLattice& lat, std::uint64_t seed,
                             int chain_length, int denominator) {
    std::mt19937_64 rng(seed);
    SubgroupChain chain = sample_subgroup_chain(lat, rng, chain_length, true);
    return layered_pfs(g, chain, rng, denominator);
}

PictureFuzzySet random_pfs(std::size_t carrier_size, std::mt19937_64& rng, int denominator) {
    std::vector<PictureTriple> triples;
    triples.reserve(carrier_size);
    const auto d = static_cast<std::uint64_t>(denominator);
    for (std::size_t y = 0; y < carrier_size; ++y) {
        int a = static_cast<int>(rng() % (d + 1));
        int b = static_cast<int>(rng() % (d - static_cast<std::uint64_t>(a) + 1));
        int c = static_cast<int>(rng() % (d - static_cast<std::uint64_t>(a + b) + 1));
        triples.push_back(
            {Rational(a, denominator), Rational(b, denominator), Rational(c, denominator)});
    }
    return PictureFuzzySet::make(carrier_size, std::move(triples));
}

PictureFuzzySet perturb_pfs(const PictureFuzzySet& q, std::mt19937_64& rng, int denominator) {
    std::vector<PictureTriple> triples = q.triples();
    const std::size_t idx = static_cast<std::size_t>(rng() % triples.size());
    const int comp = static_cast<int>(rng() % 3);
    PictureTriple& t = triples[idx];
    Rational others = comp == 0 ? t.neutral + t.negative
                    : comp == 1 ? t.positive + t.negative
                                : t.positive + t.neutral;
    Rational room = Rational(1) - others; // >= 0 since the triple was valid
    // largest grid numerator not exceeding the remaining room
    std::int64_t cap = (room.num() * denominator) / room.den();
    Rational fresh(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(cap + 1)),
                   denominator);
    (comp == 0 ? t.positive : comp == 1 ? t.neutral : t.negative) = fresh;
    const std::size_t n = triples.size();
    return PictureFuzzySet::make(n, std::move(triples));
}

} // namespace pfg
