#include <doctest.h>

#include <random>

#include "pfg/theorems.hpp"

using namespace pfg;

namespace {

PictureTriple t3(const char* p, const char* n, const char* g) {
    return {Rational::parse(p), Rational::parse(n), Rational::parse(g)};
}

PictureFuzzySet failing_z2() {
    return PictureFuzzySet::make(2, {t3("3/5", "1/5", "1/10"), t3("2/5", "3/10", "1/5")});
}

} // namespace

TEST_CASE("cut characterization holds in both polarities") {
    FiniteGroup z4 = make_cyclic(4);
    VerificationReport pos = verify_cut_subgroup_iff(z4, sample_pfsg(z4, 1, 2));
    CHECK(pos.passed);
    CHECK(pos.lhs == true);

    VerificationReport neg = verify_cut_subgroup_iff(make_cyclic(2), failing_z2());
    CHECK(neg.passed);
    CHECK(neg.lhs == false);
}

TEST_CASE("strict reading fails on any non-trivial subgroup instance") {
    // Thresholds above the identity's degrees give empty cuts, and an
    // empty set is never a subgroup, so the all-thresholds reading breaks.
    FiniteGroup z4 = make_cyclic(4);
    VerificationReport r = verify_cut_subgroup_iff(z4, sample_pfsg(z4, 1, 2), true);
    CHECK_FALSE(r.passed);
    CHECK(r.lhs == true);
    REQUIRE(r.counterexample);
    CHECK((*r.counterexample)["cut"].empty());
}

TEST_CASE("normality characterization sees both polarities") {
    FiniteGroup s3 = make_symmetric(3);
    SubgroupLattice lat = build_subgroup_lattice(s3);
    int lhs_true = 0, lhs_false = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        VerificationReport r = verify_cut_normal_iff(s3, sample_pfsg(s3, lat, seed, 2));
        CHECK(r.passed);
        (*r.lhs ? lhs_true : lhs_false) += 1;
    }
    CHECK(lhs_true > 0);
    CHECK(lhs_false > 0);
    CHECK_THROWS_AS(verify_cut_normal_iff(make_cyclic(2), failing_z2()), PreconditionError);
}

TEST_CASE("coset translation commutes with cuts") {
    for (const FiniteGroup& g : {make_cyclic(6), make_dihedral(4), make_symmetric(3)}) {
        VerificationReport r = verify_coset_translation(g, sample_pfsg(g, 4, 2));
        CHECK(r.passed);
        CHECK(r.instances_checked > 0);
    }
}

TEST_CASE("image cut laws across map kinds") {
    FiniteGroup z12 = make_cyclic(12);
    FiniteGroup z4 = make_cyclic(4);
    PictureFuzzySet p = sample_pfsg(z12, 8, 3);
    PictureFuzzySet q = sample_pfsg(z4, 8, 2);
    CHECK(verify_image_cut_laws(z12, z4, mod_map(12, 4), p, q).passed);
    CHECK(verify_image_cut_laws(z12, z12, identity_map(z12), p, sample_pfsg(z12, 9, 2)).passed);

    VerificationReport collapsed = verify_image_cut_laws(
        z12, z12, constant_map(z12, z12, z12.identity()), p, sample_pfsg(z12, 10, 2));
    CHECK(collapsed.passed);
    CHECK(collapsed.branch == "inclusion-strict-somewhere");

    CHECK_THROWS_AS(verify_image_cut_laws(z12, z4, mod_map(12, 4), q, p), ValidationError);
}

TEST_CASE("product cuts factor exactly") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        VerificationReport r = verify_product_cut(random_pfs(6, rng, 8), random_pfs(8, rng, 8));
        CHECK(r.passed);
    }
}

TEST_CASE("products of subgroups are subgroups of the product") {
    FiniteGroup s3 = make_symmetric(3);
    FiniteGroup z4 = make_cyclic(4);
    CHECK(verify_product_pfsg(s3, z4, sample_pfsg(s3, 2, 2), sample_pfsg(z4, 3, 2)).passed);
    CHECK(verify_product_pfnsg(s3, z4, sample_pfnsg(s3, 2, 2), sample_pfnsg(z4, 3, 2)).passed);
    CHECK_THROWS_AS(verify_product_pfsg(make_cyclic(2), z4, failing_z2(), sample_pfsg(z4, 3, 2)),
                    PreconditionError);
}

TEST_CASE("identity dominance: componentwise form holds, conjunctive form does not") {
    FiniteGroup z2 = make_cyclic(2);
    // Both factors are subgroups and so is their product, yet no single
    // factor's identity dominates in all three components at once.
    PictureFuzzySet p = PictureFuzzySet::make(2, {t3("1/2", "1/10", "1/5"), t3("3/10", "1/10", "1/5")});
    PictureFuzzySet q = PictureFuzzySet::make(2, {t3("3/10", "1/5", "1/10"), t3("1/5", "1/5", "1/10")});
    REQUIRE(is_pfsg(z2, p).holds);
    REQUIRE(is_pfsg(z2, q).holds);

    VerificationReport soft = verify_identity_dominance(z2, z2, p, q);
    CHECK(soft.passed);
    CHECK_FALSE(soft.vacuous);
    CHECK(soft.branch == "sigma:ii,tau:i,eta:i");

    VerificationReport hard = verify_identity_dominance(z2, z2, p, q, true);
    CHECK_FALSE(hard.passed);
    CHECK(hard.branch == "strict:none");

    // Vacuous when the product is not a subgroup. A single broken factor is
    // not enough: the min/max product can repair it, so break both.
    VerificationReport vac = verify_identity_dominance(z2, z2, failing_z2(), failing_z2());
    CHECK(vac.passed);
    CHECK(vac.vacuous);
}

TEST_CASE("factor recovery branches") {
    FiniteGroup z4 = make_cyclic(4);
    FiniteGroup z2 = make_cyclic(2);
    PictureFuzzySet p = sample_pfsg(z4, 6, 2);
    PictureFuzzySet big = PictureFuzzySet::constant(2, t3("1/3", "1/3", "0"));
    VerificationReport r = verify_factor_recovery(z4, z2, p, big);
    CHECK(r.passed);
    CHECK_FALSE(r.vacuous);
    CHECK(r.branch == "a:active,b:vacuous,c:active");

    // No hypothesis holds when the product is not a subgroup.
    VerificationReport vac = verify_factor_recovery(z2, z2, failing_z2(), failing_z2());
    CHECK(vac.passed);
    CHECK(vac.vacuous);
}

TEST_CASE("conjugate factors give conjugate products") {
    FiniteGroup s3 = make_symmetric(3);
    FiniteGroup d4 = make_dihedral(4);
    PictureFuzzySet p1 = sample_pfsg(s3, 13, 2);
    PictureFuzzySet q1 = sample_pfsg(d4, 14, 2);
    VerificationReport r = verify_conjugate_products(s3, d4, p1, conjugate_pfs(s3, p1, 3), q1,
                                                     conjugate_pfs(d4, q1, 5));
    CHECK(r.passed);
    CHECK_FALSE(r.vacuous);

    // Unrelated factors usually admit no conjugating witness.
    PictureFuzzySet p2 = sample_pfsg(s3, 15, 2);
    VerificationReport vac = verify_conjugate_products(s3, d4, p1, p2, q1, q1);
    if (!are_conjugate(s3, p1, p2))
        CHECK(vac.vacuous);
    CHECK(vac.passed);
}

TEST_CASE("campaigns are deterministic and validate their tags") {
    CampaignConfig cfg;
    cfg.groups = {"Z4", "S3"};
    cfg.trials = 12;
    cfg.seed = 99;
    std::string a = campaign_to_jsonl(run_campaign(cfg));
    std::string b = campaign_to_jsonl(run_campaign(cfg));
    CHECK(a == b);
    CHECK(a.find("\"passed\":false") == std::string::npos);

    cfg.theorems = {"no_such_theorem"};
    CHECK_THROWS_WITH_AS(run_campaign(cfg), doctest::Contains("cut_subgroup_iff"),
                         ValidationError);
}

TEST_CASE("reports serialize without timing noise") {
    FiniteGroup z4 = make_cyclic(4);
    nlohmann::ordered_json j = report_to_json(verify_cut_subgroup_iff(z4, sample_pfsg(z4, 1, 2)));
    CHECK(j.contains("theorem"));
    CHECK(j.contains("passed"));
    CHECK_FALSE(j.contains("elapsed"));
}
