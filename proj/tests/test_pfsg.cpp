#include <doctest.h>

#include <random>

#include "pfg/pfsg.hpp"

using namespace pfg;

namespace {

PictureTriple t3(const char* p, const char* n, const char* g) {
    return {Rational::parse(p), Rational::parse(n), Rational::parse(g)};
}

} // namespace

TEST_CASE("constant sets are subgroups, and normal ones") {
    for (const FiniteGroup& g : {make_cyclic(6), make_symmetric(3), make_dihedral(4)}) {
        PictureFuzzySet q = PictureFuzzySet::constant(static_cast<std::size_t>(g.order()),
                                                      t3("1/2", "1/4", "1/8"));
        CHECK(is_pfsg(g, q).holds);
        CHECK(is_pfsg_compact(g, q).holds);
        CHECK(is_pfnsg_cosets(g, q).holds);
        CHECK(is_pfnsg_commute(g, q).holds);
        CHECK(is_pfnsg_conjugation(g, q).holds);
    }
}

TEST_CASE("the failing Z2 instance reports the first violated clause") {
    FiniteGroup z2 = make_cyclic(2);
    PictureFuzzySet q =
        PictureFuzzySet::make(2, {t3("3/5", "1/5", "1/10"), t3("2/5", "3/10", "1/5")});
    PfsgVerdict v = is_pfsg(z2, q);
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness);
    CHECK(v.witness->a == 1);
    CHECK(v.witness->b == 1);
    CHECK(v.witness->clause == PfsgClause::TauClosure);
    CHECK(clause_name(v.witness->clause) == "tau-closure");
    CHECK_FALSE(is_pfsg_compact(z2, q).holds);
}

TEST_CASE("two-clause and compact predicates agree on random instances") {
    std::mt19937_64 rng(11);
    for (const FiniteGroup& g : {make_cyclic(6), make_symmetric(3), make_dihedral(4),
                                 make_klein_four()}) {
        SubgroupLattice lat = build_subgroup_lattice(g);
        const int depth = lat.chain_depth[static_cast<std::size_t>(lat.full)];
        for (int trial = 0; trial < 60; ++trial) {
            PictureFuzzySet q = trial % 3 == 0
                                    ? sample_pfsg(g, lat, rng(), 1 + trial % depth)
                                    : trial % 3 == 1
                                          ? perturb_pfs(sample_pfsg(g, lat, rng(), depth), rng)
                                          : random_pfs(static_cast<std::size_t>(g.order()), rng);
            CHECK(is_pfsg(g, q).holds == is_pfsg_compact(g, q).holds);
        }
    }
}

TEST_CASE("the three normality forms agree on subgroup instances") {
    std::mt19937_64 rng(12);
    for (const FiniteGroup& g : {make_symmetric(3), make_dihedral(4), make_cyclic(8)}) {
        SubgroupLattice lat = build_subgroup_lattice(g);
        const int depth = lat.chain_depth[static_cast<std::size_t>(lat.full)];
        for (int trial = 0; trial < 60; ++trial) {
            PictureFuzzySet q = sample_pfsg(g, lat, rng(), 1 + trial % depth);
            const bool a = is_pfnsg_cosets(g, q).holds;
            const bool b = is_pfnsg_commute(g, q).holds;
            const bool c = is_pfnsg_conjugation(g, q).holds;
            CHECK(a == b);
            CHECK(b == c);
        }
    }
}

TEST_CASE("normality predicates refuse non-subgroup input") {
    FiniteGroup z2 = make_cyclic(2);
    PictureFuzzySet bad =
        PictureFuzzySet::make(2, {t3("3/5", "1/5", "1/10"), t3("2/5", "3/10", "1/5")});
    CHECK_THROWS_AS(is_pfnsg_cosets(z2, bad), PreconditionError);
    CHECK_THROWS_AS(is_pfnsg_commute(z2, bad), PreconditionError);
    CHECK_THROWS_AS(is_pfnsg_conjugation(z2, bad), PreconditionError);
}

TEST_CASE("cosets evaluate at translated arguments") {
    FiniteGroup s3 = make_symmetric(3);
    PictureFuzzySet q = sample_pfsg(s3, 5, 2);
    for (int a = 0; a < s3.order(); ++a) {
        PictureFuzzySet l = left_coset(s3, q, a);
        PictureFuzzySet r = right_coset(s3, q, a);
        for (int u = 0; u < s3.order(); ++u) {
            CHECK(l.at(static_cast<std::size_t>(u)) ==
                  q.at(static_cast<std::size_t>(s3.op(s3.inverse(a), u))));
            CHECK(r.at(static_cast<std::size_t>(u)) ==
                  q.at(static_cast<std::size_t>(s3.op(u, s3.inverse(a)))));
        }
    }
    // Translating by the identity changes nothing.
    CHECK(pfs_equal(left_coset(s3, q, s3.identity()), q));
    CHECK(pfs_equal(right_coset(s3, q, s3.identity()), q));
}

TEST_CASE("conjugation round-trips and is found by the search") {
    FiniteGroup d4 = make_dihedral(4);
    PictureFuzzySet q = sample_pfsg(d4, 9, 2);
    for (int a = 0; a < d4.order(); ++a) {
        PictureFuzzySet c = conjugate_pfs(d4, q, a);
        CHECK(is_pfsg(d4, c).holds);
        CHECK(pfs_equal(conjugate_pfs(d4, c, d4.inverse(a)), q));
        std::optional<int> w = are_conjugate(d4, q, c);
        REQUIRE(w);
        CHECK(pfs_equal(q, conjugate_pfs(d4, c, *w)));
    }
    CHECK(are_conjugate(d4, q, q) == 0);
}

TEST_CASE("sampled subgroup chains have the requested length and end at G") {
    FiniteGroup z12 = make_cyclic(12);
    SubgroupLattice lat = build_subgroup_lattice(z12);
    std::mt19937_64 rng(3);
    for (int len = 1; len <= 4; ++len) {
        SubgroupChain chain = sample_subgroup_chain(lat, rng, len, false);
        REQUIRE(chain.layers.size() == static_cast<std::size_t>(len));
        CHECK(chain.layers.back().size() == 12);
        for (std::size_t i = 1; i < chain.layers.size(); ++i) {
            CHECK(chain.layers[i - 1].size() < chain.layers[i].size());
            for (int y : chain.layers[i - 1].members())
                CHECK(chain.layers[i].contains(y));
        }
    }
    CHECK_THROWS_AS(sample_subgroup_chain(lat, rng, 5, false), PreconditionError);
}

TEST_CASE("sampled sets satisfy the predicate they are named after") {
    for (const FiniteGroup& g : {make_symmetric(3), make_dihedral(4), make_cyclic(12)}) {
        SubgroupLattice lat = build_subgroup_lattice(g);
        const int depth = lat.chain_depth[static_cast<std::size_t>(lat.full)];
        const int ndepth = lat.normal_chain_depth[static_cast<std::size_t>(lat.full)];
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            CHECK(is_pfsg(g, sample_pfsg(g, lat, seed, 1 + static_cast<int>(seed) % depth)).holds);
            CHECK(is_pfnsg_conjugation(
                      g, sample_pfnsg(g, lat, seed, 1 + static_cast<int>(seed) % ndepth))
                      .holds);
        }
    }
}

TEST_CASE("sampling is deterministic per seed") {
    FiniteGroup d4 = make_dihedral(4);
    CHECK(pfs_equal(sample_pfsg(d4, 21, 3), sample_pfsg(d4, 21, 3)));
    CHECK_FALSE(pfs_equal(sample_pfsg(d4, 21, 3), sample_pfsg(d4, 22, 3)));
}

TEST_CASE("random and perturbed sets stay valid") {
    std::mt19937_64 rng(77);
    FiniteGroup z6 = make_cyclic(6);
    for (int trial = 0; trial < 100; ++trial) {
        PictureFuzzySet q = random_pfs(6, rng);
        for (const PictureTriple& t : q.triples())
            CHECK(t.valid());
        PictureFuzzySet p = perturb_pfs(sample_pfsg(z6, rng(), 2), rng);
        for (const PictureTriple& t : p.triples())
            CHECK(t.valid());
    }
}
