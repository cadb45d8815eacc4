#include "pfg/theorems.hpp"

#include <algorithm>
#include <map>

#include "pfg/io.hpp"

namespace pfg {

using nlohmann::ordered_json;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::chrono::microseconds stop() const {
        return std::chrono::duration_cast<std::chrono::microseconds>(
            std::chrono::steady_clock::now() - start);
    }
};

ordered_json threshold_json(const CutThreshold& c) {
    return ordered_json::array({c.r.str(), c.s.str(), c.t.str()});
}

ordered_json subset_json(const Subset& s) {
    return ordered_json(s.members());
}

ordered_json triples_json(const PictureFuzzySet& q) {
    ordered_json rows = ordered_json::array();
    for (const PictureTriple& t : q.triples())
        rows.push_back(ordered_json::array({t.positive.str(), t.neutral.str(), t.negative.str()}));
    return rows;
}

void require_pfsg_input(const FiniteGroup& g, const PictureFuzzySet& q, const char* role) {
    if (!is_pfsg(g, q).holds)
        throw PreconditionError(std::string(role) + " must be a PFSG");
}

} // namespace

ordered_json report_to_json(const VerificationReport& r) {
    ordered_json j;
    j["theorem"] = r.theorem_id;
    j["passed"] = r.passed;
    j["instances_checked"] = r.instances_checked;
    j["vacuous"] = r.vacuous;
    j["lhs"] = r.lhs ? ordered_json(*r.lhs) : ordered_json(nullptr);
    j["branch"] = r.branch;
    j["counterexample"] = r.counterexample ? *r.counterexample : ordered_json(nullptr);
    return j;
}

VerificationReport verify_cut_subgroup_iff(const FiniteGroup& g, const PictureFuzzySet& q,
                                           bool strict) {
    Timer timer;
    VerificationReport rep;
    rep.theorem_id = "cut_subgroup_iff";
    const bool lhs = is_pfsg(g, q).holds;
    rep.lhs = lhs;

    bool rhs = true;
    std::optional<CutThreshold> bad;
    Subset bad_cut;
    for (const CutThreshold& c : representative_thresholds(q)) {
        ++rep.instances_checked;
        Subset cut = cut_set(q, c);
        if (cut.empty() && !strict)
            continue;
        if (!is_subgroup(g, cut)) {
            rhs = false;
            if (!bad) {
                bad = c;
                bad_cut = cut;
            }
        }
    }
    rep.passed = lhs == rhs;
    rep.branch = strict ? "strict-all-thresholds" : "non-empty-cuts";
    if (!rep.passed) {
        ordered_json ce;
        ce["group"] = g.name().empty() ? std::to_string(g.order()) : g.name();
        ce["lhs_is_pfsg"] = lhs;
        ce["rhs_all_cuts_subgroups"] = rhs;
        if (bad) {
            ce["threshold"] = threshold_json(*bad);
            ce["cut"] = subset_json(bad_cut);
        }
        ce["triples"] = triples_json(q);
        rep.counterexample = std::move(ce);
    }
    rep.instances_checked = std::max(rep.instances_checked, 1L);
    rep.elapsed = timer.stop();
    return rep;
}

VerificationReport verify_cut_normal_iff(const FiniteGroup& g, const PictureFuzzySet& q) {
    Timer timer;
    require_pfsg_input(g, q, "cut_normal_iff input");
    VerificationReport rep;
    rep.theorem_id = "cut_normal_iff";
    const bool lhs = is_pfnsg_conjugation(g, q).holds;
    rep.lhs = lhs;

    bool rhs = true;
    std::optional<CutThreshold> bad;
    Subset bad_cut;
    for (const CutThreshold& c : representative_thresholds(q)) {
        ++rep.instances_checked;
        Subset cut = cut_set(q, c);
        if (cut.empty())
            continue;
        if (!is_normal_subgroup(g, cut)) {
            rhs = false;
            if (!bad) {
                bad = c;
                bad_cut = cut;
            }
        }
    }
    rep.passed = lhs == rhs;
    rep.branch = "non-empty-cuts";
    if (!rep.passed) {
        ordered_json ce;
        ce["group"] = g.name();
        ce["lhs_is_pfnsg"] = lhs;
        ce["rhs_all_cuts_normal"] = rhs;
        if (bad) {
            ce["threshold"] = threshold_json(*bad);
            ce["cut"] = subset_json(bad_cut);
        }
        ce["triples"] = triples_json(q);
        rep.counterexample = std::move(ce);
    }
    rep.instances_checked = std::max(rep.instances_checked, 1L);
    rep.elapsed = timer.stop();
    return rep;
}

VerificationReport verify_coset_translation(const FiniteGroup& g, const PictureFuzzySet& q) {
    Timer timer;
    require_pfsg_input(g, q, "coset_translation input");
    VerificationReport rep;
    rep.theorem_id = "coset_translation";
    rep.passed = true;
    const auto thresholds = representative_thresholds(q);
    for (int a = 0; a < g.order() && rep.passed; ++a) {
        PictureFuzzySet left = left_coset(g, q, a);
        PictureFuzzySet right = right_coset(g, q, a);
        for (const CutThreshold& c : thresholds) {
            ++rep.instances_checked;
            Subset base = cut_set(q, c);
            const bool left_ok = translate_left(g, a, base) == cut_set(left, c);
            const bool right_ok = translate_right(g, base, a) == cut_set(right, c);
            if (!left_ok || !right_ok) {
                rep.passed = false;
                ordered_json ce;
                ce["group"] = g.name();
                ce["element"] = a;
                ce["threshold"] = threshold_json(c);
                ce["side"] = left_ok ? "right" : "left";
                rep.counterexample = std::move(ce);
                break;
            }
        }
    }
    rep.instances_checked = std::max(rep.instances_checked, 1L);
    rep.elapsed = timer.stop();
    return rep;
}

VerificationReport verify_image_cut_laws(const FiniteGroup& src, const FiniteGroup& tgt,
                                         const GroupMap& f, const PictureFuzzySet& p,
                                         const PictureFuzzySet& q) {
    Timer timer;
    if (f.source_order != src.order() || f.target_order != tgt.order() ||
        static_cast<int>(f.map.size()) != src.order())
        throw ValidationError("map does not match the given carriers");
    if (p.carrier_size() != static_cast<std::size_t>(src.order()) ||
        q.carrier_size() != static_cast<std::size_t>(tgt.order()))
        throw ValidationError("set carrier does not match the map");

    VerificationReport rep;
    rep.theorem_id = "image_cut_laws";
    rep.passed = true;
    bool strict_witnessed = false;

    PictureFuzzySet fp = image(f, p);
    // (i) f(C(P)) subseteq C(f(P)), inclusion possibly strict.
    for (const CutThreshold& c : representative_thresholds(p)) {
        ++rep.instances_checked;
        Subset source_cut = cut_set(p, c);
        std::vector<int> mapped;
        for (int y : source_cut.members())
            mapped.push_back(f(y));
        Subset fcut(std::move(mapped));
        Subset target_cut = cut_set(fp, c);
        bool subset = std::includes(target_cut.members().begin(), target_cut.members().end(),
                                    fcut.members().begin(), fcut.members().end());
        if (!subset) {
            rep.passed = false;
            ordered_json ce;
            ce["clause"] = "image-inclusion";
            ce["threshold"] = threshold_json(c);
            ce["image_of_cut"] = subset_json(fcut);
            ce["cut_of_image"] = subset_json(target_cut);
            rep.counterexample = std::move(ce);
            break;
        }
        if (fcut.size() < target_cut.size())
            strict_witnessed = true;
    }
    // (ii) f^-1(C(Q)) = C(f^-1(Q)), exact.
    if (rep.passed) {
        PictureFuzzySet fq = preimage(f, q);
        for (const CutThreshold& c : representative_thresholds(q)) {
            ++rep.instances_checked;
            std::vector<int> pulled;
            Subset qcut = cut_set(q, c);
            for (int y = 0; y < src.order(); ++y)
                if (qcut.contains(f(y)))
                    pulled.push_back(y);
            if (Subset(std::move(pulled)) != cut_set(fq, c)) {
                rep.passed = false;
                ordered_json ce;
                ce["clause"] = "preimage-equality";
                ce["threshold"] = threshold_json(c);
                rep.counterexample = std::move(ce);
                break;
            }
        }
    }
    // (iii) pointwise image bounds.
    if (rep.passed) {
        for (int y = 0; y < src.order(); ++y) {
            ++rep.instances_checked;
            const PictureTriple& before = p.at(static_cast<std::size_t>(y));
            const PictureTriple& after = fp.at(static_cast<std::size_t>(f(y)));
            if (after.positive < before.positive || after.neutral < before.neutral ||
                after.negative > before.negative) {
                rep.passed = false;
                ordered_json ce;
                ce["clause"] = "image-bounds";
                ce["element"] = y;
                rep.counterexample = std::move(ce);
                break;
            }
        }
    }
    rep.branch = strict_witnessed ? "inclusion-strict-somewhere" : "inclusion-tight";
    rep.instances_checked = std::max(rep.instances_checked, 1L);
    rep.elapsed = timer.stop();
    return rep;
}

VerificationReport verify_product_cut(const PictureFuzzySet& p, const PictureFuzzySet& q) {
    Timer timer;
    VerificationReport rep;
    rep.theorem_id = "product_cut";
    rep.passed = true;
    PictureFuzzySet prod = cartesian_product(p, q);
    const int nq = static_cast<int>(q.carrier_size());
    for (const CutThreshold& c : representative_thresholds(prod)) {
        ++rep.instances_checked;
        Subset pcut = cut_set(p, c);
        Subset qcut = cut_set(q, c);
        std::vector<int> expect;
        for (int a : pcut.members())
            for (int b : qcut.members())
                expect.push_back(a * nq + b);
        if (Subset(std::move(expect)) != cut_set(prod, c)) {
            rep.passed = false;
            ordered_json ce;
            ce["threshold"] = threshold_json(c);
            ce["cut_of_product"] = subset_json(cut_set(prod, c));
            ce["factor_cuts"] = ordered_json::array({subset_json(pcut), subset_json(qcut)});
            rep.counterexample = std::move(ce);
            break;
        }
    }
    rep.instances_checked = std::max(rep.instances_checked, 1L);
    rep.elapsed = timer.stop();
    return rep;
}

namespace {

VerificationReport product_predicate(const char* id, const FiniteGroup& g, const FiniteGroup& h,
                                     const PictureFuzzySet& p, const PictureFuzzySet& q,
                                     const FiniteGroup* product, bool normal) {
    Timer timer;
    if (normal) {
        if (!is_pfnsg_conjugation(g, p).holds || !is_pfnsg_conjugation(h, q).holds)
            throw PreconditionError(std::string(id) + ": both factors must be PFNSGs");
    } else {
        require_pfsg_input(g, p, id);
        require_pfsg_input(h, q, id);
    }
    FiniteGroup built = product ? FiniteGroup(*product) : make_product_group(g, h);
    PictureFuzzySet prod = cartesian_product(p, q);
    PfsgVerdict v = normal ? is_pfnsg_conjugation(built, prod) : is_pfsg(built, prod);
    VerificationReport rep;
    rep.theorem_id = id;
    rep.passed = v.holds;
    rep.instances_checked = static_cast<long>(built.order()) * built.order();
    if (!v.holds) {
        ordered_json ce;
        ce["groups"] = ordered_json::array({g.name(), h.name()});
        ce["clause"] = clause_name(v.witness->clause);
        ce["a"] = v.witness->a;
        ce["b"] = v.witness->b;
        rep.counterexample = std::move(ce);
    }
    rep.elapsed = timer.stop();
    return rep;
}

} // namespace

VerificationReport verify_product_pfsg(const FiniteGroup& g, const FiniteGroup& h,
                                       const PictureFuzzySet& p, const PictureFuzzySet& q,
                                       const FiniteGroup* product) {
    return product_predicate("product_pfsg", g, h, p, q, product, false);
}

VerificationReport verify_product_pfnsg(const FiniteGroup& g, const FiniteGroup& h,
                                        const PictureFuzzySet& p, const PictureFuzzySet& q,
                                        const FiniteGroup* product) {
    return product_predicate("product_pfnsg", g, h, p, q, product, true);
}

namespace {

// For one degree component: does `inner`'s value at the identity dominate
// `outer` everywhere? For eta the comparison flips.
bool identity_dominates(const PictureTriple& id_triple, const PictureFuzzySet& outer,
                        Rational PictureTriple::*component, bool flipped) {
    for (const PictureTriple& t : outer.triples()) {
        if (!flipped && id_triple.*component < t.*component)
            return false;
        if (flipped && id_triple.*component > t.*component)
            return false;
    }
    return true;
}

} // namespace

VerificationReport verify_identity_dominance(const FiniteGroup& g, const FiniteGroup& h,
                                             const PictureFuzzySet& p, const PictureFuzzySet& q,
                                             bool strict, const FiniteGroup* product) {
    Timer timer;
    VerificationReport rep;
    rep.theorem_id = "identity_dominance";
    FiniteGroup built = product ? FiniteGroup(*product) : make_product_group(g, h);
    PictureFuzzySet prod = cartesian_product(p, q);
    rep.instances_checked = static_cast<long>(built.order()) * built.order();
    if (!is_pfsg(built, prod).holds) {
        rep.passed = true;
        rep.vacuous = true;
        rep.branch = "hypothesis-failed";
        rep.elapsed = timer.stop();
        return rep;
    }
    const PictureTriple& pe = p.at(static_cast<std::size_t>(g.identity()));
    const PictureTriple& qe = q.at(static_cast<std::size_t>(h.identity()));

    struct CompSpec {
        const char* name;
        Rational PictureTriple::*member;
        bool flipped;
    };
    const CompSpec comps[3] = {{"sigma", &PictureTriple::positive, false},
                               {"tau", &PictureTriple::neutral, false},
                               {"eta", &PictureTriple::negative, true}};

    bool side_i[3], side_ii[3];
    for (int k = 0; k < 3; ++k) {
        side_i[k] = identity_dominates(qe, p, comps[k].member, comps[k].flipped);
        side_ii[k] = identity_dominates(pe, q, comps[k].member, comps[k].flipped);
    }

    if (strict) {
        const bool clause_i = side_i[0] && side_i[1] && side_i[2];
        const bool clause_ii = side_ii[0] && side_ii[1] && side_ii[2];
        rep.passed = clause_i || clause_ii;
        rep.branch = clause_i ? (clause_ii ? "strict:i|ii" : "strict:i")
                              : (clause_ii ? "strict:ii" : "strict:none");
    } else {
        rep.passed = true;
        std::string branch;
        for (int k = 0; k < 3; ++k) {
            const bool ok = side_i[k] || side_ii[k];
            rep.passed = rep.passed && ok;
            branch += std::string(comps[k].name) + ":" +
                      (side_i[k] ? (side_ii[k] ? "i|ii" : "i") : (side_ii[k] ? "ii" : "none"));
            if (k < 2)
                branch += ",";
        }
        rep.branch = branch;
    }
    if (!rep.passed) {
        ordered_json ce;
        ce["groups"] = ordered_json::array({g.name(), h.name()});
        ce["mode"] = strict ? "strict-conjunctive" : "componentwise";
        ce["identity_triples"] = ordered_json::array(
            {ordered_json::array({pe.positive.str(), pe.neutral.str(), pe.negative.str()}),
             ordered_json::array({qe.positive.str(), qe.neutral.str(), qe.negative.str()})});
        ce["p_triples"] = triples_json(p);
        ce["q_triples"] = triples_json(q);
        rep.counterexample = std::move(ce);
    }
    rep.elapsed = timer.stop();
    return rep;
}

VerificationReport verify_factor_recovery(const FiniteGroup& g, const FiniteGroup& h,
                                          const PictureFuzzySet& p, const PictureFuzzySet& q,
                                          const FiniteGroup* product) {
    Timer timer;
    VerificationReport rep;
    rep.theorem_id = "factor_recovery";
    FiniteGroup built = product ? FiniteGroup(*product) : make_product_group(g, h);
    PictureFuzzySet prod = cartesian_product(p, q);
    const bool prod_pfsg = is_pfsg(built, prod).holds;
    rep.instances_checked = static_cast<long>(built.order()) * built.order();

    const PictureTriple& pe = p.at(static_cast<std::size_t>(g.identity()));
    const PictureTriple& qe = q.at(static_cast<std::size_t>(h.identity()));
    auto dominated_by = [](const PictureFuzzySet& set, const PictureTriple& id_triple) {
        for (const PictureTriple& t : set.triples())
            if (t.positive > id_triple.positive || t.neutral > id_triple.neutral ||
                t.negative < id_triple.negative)
                return false;
        return true;
    };

    const bool p_is = is_pfsg(g, p).holds;
    const bool q_is = is_pfsg(h, q).holds;

    const bool hyp_a = prod_pfsg && dominated_by(p, qe);
    const bool hyp_b = prod_pfsg && dominated_by(q, pe);
    // The either-or branch keeps its standing hypothesis that both factors
    // are PFSGs; without it the statement has counterexamples (a non-PFSG
    // factor can be masked by a small constant factor on the other side).
    const bool hyp_c = prod_pfsg && p_is && q_is;

    rep.passed = true;
    std::string failed;
    if (hyp_a && !p_is) {
        rep.passed = false;
        failed = "a";
    }
    if (hyp_b && !q_is && rep.passed) {
        rep.passed = false;
        failed = "b";
    }
    if (hyp_c && !(p_is || q_is) && rep.passed) {
        rep.passed = false;
        failed = "c";
    }
    rep.vacuous = !hyp_a && !hyp_b && !hyp_c;
    rep.branch = std::string("a:") + (hyp_a ? "active" : "vacuous") +
                 ",b:" + (hyp_b ? "active" : "vacuous") + ",c:" + (hyp_c ? "active" : "vacuous");
    if (!rep.passed) {
        ordered_json ce;
        ce["groups"] = ordered_json::array({g.name(), h.name()});
        ce["failed_branch"] = failed;
        ce["p_triples"] = triples_json(p);
        ce["q_triples"] = triples_json(q);
        rep.counterexample = std::move(ce);
    }
    rep.elapsed = timer.stop();
    return rep;
}

VerificationReport verify_conjugate_products(const FiniteGroup& g, const FiniteGroup& h,
                                             const PictureFuzzySet& p1, const PictureFuzzySet& p2,
                                             const PictureFuzzySet& q1, const PictureFuzzySet& q2,
                                             const FiniteGroup* product) {
    Timer timer;
    require_pfsg_input(g, p1, "conjugate_products P1");
    require_pfsg_input(g, p2, "conjugate_products P2");
    require_pfsg_input(h, q1, "conjugate_products Q1");
    require_pfsg_input(h, q2, "conjugate_products Q2");

    VerificationReport rep;
    rep.theorem_id = "conjugate_products";
    rep.instances_checked = static_cast<long>(g.order()) + h.order();
    std::optional<int> wa = are_conjugate(g, p1, p2);
    std::optional<int> wb = are_conjugate(h, q1, q2);
    if (!wa || !wb) {
        rep.passed = true;
        rep.vacuous = true;
        rep.branch = !wa ? (!wb ? "no-witness-both" : "no-witness-left") : "no-witness-right";
        rep.elapsed = timer.stop();
        return rep;
    }
    FiniteGroup built = product ? FiniteGroup(*product) : make_product_group(g, h);
    const int pair_witness = *wa * h.order() + *wb;
    PictureFuzzySet lhs = cartesian_product(p1, q1);
    PictureFuzzySet rhs = conjugate_pfs(built, cartesian_product(p2, q2), pair_witness);
    rep.passed = pfs_equal(lhs, rhs);
    rep.branch = "witness:(" + std::to_string(*wa) + "," + std::to_string(*wb) + ")";
    if (!rep.passed) {
        ordered_json ce;
        ce["groups"] = ordered_json::array({g.name(), h.name()});
        ce["witness_pair"] = ordered_json::array({*wa, *wb});
        rep.counterexample = std::move(ce);
    }
    rep.elapsed = timer.stop();
    return rep;
}

// ---------------------------------------------------------------------------
// Campaigns
// ---------------------------------------------------------------------------

const std::vector<std::string>& all_theorem_tags() {
    static const std::vector<std::string> tags = {
        "cut_subgroup_iff", "cut_normal_iff",  "coset_translation", "image_cut_laws",
        "product_cut",      "product_pfsg",    "product_pfnsg",     "identity_dominance",
        "factor_recovery",  "conjugate_products"};
    return tags;
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, const std::string& tag) {
    std::uint64_t hash = 1469598103934665603ull;
    for (char c : tag) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 1099511628211ull;
    }
    return hash ^ (seed * 0x9e3779b97f4a7c15ull + 0x632be59bd9b4e019ull);
}

struct GroupCtx {
    FiniteGroup group;
    SubgroupLattice lattice;
    int max_chain = 1;
    int max_normal_chain = 1;
};

struct CampaignState {
    std::vector<GroupCtx> groups;
    std::vector<std::pair<int, int>> pairs;              // factor pairs for product theorems
    std::map<std::pair<int, int>, FiniteGroup> products; // cached product groups

    const FiniteGroup& product(const std::pair<int, int>& key) {
        auto it = products.find(key);
        if (it == products.end())
            it = products.emplace(key, make_product_group(groups[static_cast<std::size_t>(key.first)].group,
                                                          groups[static_cast<std::size_t>(key.second)].group))
                     .first;
        return it->second;
    }
};

struct Agg {
    CampaignReport rep;

    void add(const VerificationReport& r, ordered_json instance) {
        ++rep.instances;
        rep.checks += r.instances_checked;
        if (r.lhs) {
            if (*r.lhs)
                ++rep.lhs_true;
            else
                ++rep.lhs_false;
        }
        if (r.vacuous)
            ++rep.vacuous;
        else
            ++rep.non_vacuous;
        if (!r.passed) {
            rep.passed = false;
            if (!rep.counterexample) {
                ordered_json ce;
                ce["instance"] = std::move(instance);
                ce["detail"] = r.counterexample ? *r.counterexample : ordered_json(nullptr);
                rep.counterexample = std::move(ce);
            }
        }
    }
};

ordered_json instance_desc(const std::string& kind, const std::string& group, long trial) {
    ordered_json j;
    j["kind"] = kind;
    j["group"] = group;
    j["trial"] = trial;
    return j;
}

PictureFuzzySet sampled_pfsg(const GroupCtx& ctx, std::mt19937_64& rng) {
    const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(ctx.max_chain));
    return sample_pfsg(ctx.group, ctx.lattice, rng(), k);
}

PictureFuzzySet sampled_pfnsg(const GroupCtx& ctx, std::mt19937_64& rng) {
    const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(ctx.max_normal_chain));
    return sample_pfnsg(ctx.group, ctx.lattice, rng(), k);
}

CampaignReport run_theorem(const std::string& tag, const CampaignConfig& cfg, CampaignState& st) {
    std::mt19937_64 rng(mix_seed(cfg.seed, tag));
    Agg agg;
    agg.rep.theorem_id = tag;
    const long trials = cfg.trials;
    const int ngroups = static_cast<int>(st.groups.size());
    const int npairs = static_cast<int>(st.pairs.size());

    for (long t = 0; t < trials; ++t) {
        const GroupCtx& ctx = st.groups[static_cast<std::size_t>(t % ngroups)];
        const std::pair<int, int> pkey = st.pairs[static_cast<std::size_t>(t % std::max(npairs, 1))];
        const GroupCtx& left = st.groups[static_cast<std::size_t>(pkey.first)];
        const GroupCtx& right = st.groups[static_cast<std::size_t>(pkey.second)];

        if (tag == "cut_subgroup_iff") {
            const int kind = static_cast<int>(t % 3);
            PictureFuzzySet q = kind == 0 ? sampled_pfsg(ctx, rng)
                               : kind == 1 ? perturb_pfs(sampled_pfsg(ctx, rng), rng)
                                           : random_pfs(static_cast<std::size_t>(ctx.group.order()), rng);
            const char* kinds[] = {"sampler", "perturbed", "random"};
            agg.add(verify_cut_subgroup_iff(ctx.group, q, cfg.strict),
                    instance_desc(kinds[kind], ctx.group.name(), t));
        } else if (tag == "cut_normal_iff") {
            PictureFuzzySet q = t % 2 == 0 ? sampled_pfsg(ctx, rng) : sampled_pfnsg(ctx, rng);
            agg.add(verify_cut_normal_iff(ctx.group, q),
                    instance_desc(t % 2 == 0 ? "sampler" : "normal-sampler", ctx.group.name(), t));
        } else if (tag == "coset_translation") {
            agg.add(verify_coset_translation(ctx.group, sampled_pfsg(ctx, rng)),
                    instance_desc("sampler", ctx.group.name(), t));
        } else if (tag == "image_cut_laws") {
            const int kind = static_cast<int>(t % 4);
            if (kind == 0 || kind == 1) {
                GroupMap f = kind == 0 ? identity_map(ctx.group)
                                       : constant_map(ctx.group, ctx.group, ctx.group.identity());
                agg.add(verify_image_cut_laws(ctx.group, ctx.group, f, sampled_pfsg(ctx, rng),
                                              sampled_pfsg(ctx, rng)),
                        instance_desc(kind == 0 ? "identity-map" : "constant-map",
                                      ctx.group.name(), t));
            } else if (kind == 2) {
                static const int ms[] = {4, 6, 8, 9, 12};
                const int m = ms[t % 5];
                std::vector<int> divisors;
                for (int d = 2; d < m; ++d)
                    if (m % d == 0)
                        divisors.push_back(d);
                const int n = divisors[rng() % divisors.size()];
                FiniteGroup zm = make_cyclic(m), zn = make_cyclic(n);
                SubgroupLattice lat = build_subgroup_lattice(zm);
                SubgroupLattice latn = build_subgroup_lattice(zn);
                GroupCtx src{zm, lat, lat.chain_depth[static_cast<std::size_t>(lat.full)],
                             lat.normal_chain_depth[static_cast<std::size_t>(lat.full)]};
                GroupCtx tgt{zn, latn, latn.chain_depth[static_cast<std::size_t>(latn.full)],
                             latn.normal_chain_depth[static_cast<std::size_t>(latn.full)]};
                agg.add(verify_image_cut_laws(zm, zn, mod_map(m, n), sampled_pfsg(src, rng),
                                              sampled_pfsg(tgt, rng)),
                        instance_desc("mod-map", zm.name(), t));
            } else if (npairs > 0) {
                const FiniteGroup& prod = st.product(pkey);
                const int which = static_cast<int>(t % 2);
                GroupMap f = projection_map(left.group, right.group, which);
                PictureFuzzySet p = cartesian_product(sampled_pfsg(left, rng), sampled_pfsg(right, rng));
                const GroupCtx& tgt = which == 0 ? left : right;
                agg.add(verify_image_cut_laws(prod, tgt.group, f, p, sampled_pfsg(tgt, rng)),
                        instance_desc("projection", prod.name(), t));
            }
        } else if (tag == "product_cut") {
            if (npairs == 0)
                continue;
            agg.add(verify_product_cut(random_pfs(static_cast<std::size_t>(left.group.order()), rng, 8),
                                       random_pfs(static_cast<std::size_t>(right.group.order()), rng, 8)),
                    instance_desc("random-pair", left.group.name() + "x" + right.group.name(), t));
        } else if (tag == "product_pfsg") {
            if (npairs == 0)
                continue;
            agg.add(verify_product_pfsg(left.group, right.group, sampled_pfsg(left, rng),
                                        sampled_pfsg(right, rng), &st.product(pkey)),
                    instance_desc("sampler-pair", left.group.name() + "x" + right.group.name(), t));
        } else if (tag == "product_pfnsg") {
            if (npairs == 0)
                continue;
            agg.add(verify_product_pfnsg(left.group, right.group, sampled_pfnsg(left, rng),
                                         sampled_pfnsg(right, rng), &st.product(pkey)),
                    instance_desc("normal-sampler-pair", left.group.name() + "x" + right.group.name(), t));
        } else if (tag == "identity_dominance" || tag == "factor_recovery") {
            if (npairs == 0)
                continue;
            const int kind = static_cast<int>(t % 2);
            PictureFuzzySet p = kind == 0 ? sampled_pfsg(left, rng)
                                          : random_pfs(static_cast<std::size_t>(left.group.order()), rng);
            PictureFuzzySet q = kind == 0 ? sampled_pfsg(right, rng)
                                          : random_pfs(static_cast<std::size_t>(right.group.order()), rng);
            VerificationReport r =
                tag == "identity_dominance"
                    ? verify_identity_dominance(left.group, right.group, p, q, cfg.strict,
                                                &st.product(pkey))
                    : verify_factor_recovery(left.group, right.group, p, q, &st.product(pkey));
            agg.add(r, instance_desc(kind == 0 ? "sampler-pair" : "random-pair",
                                     left.group.name() + "x" + right.group.name(), t));
        } else if (tag == "conjugate_products") {
            if (npairs == 0)
                continue;
            PictureFuzzySet p1 = sampled_pfsg(left, rng);
            PictureFuzzySet q1 = sampled_pfsg(right, rng);
            if (t % 2 == 0) {
                const int a0 = static_cast<int>(rng() % static_cast<std::uint64_t>(left.group.order()));
                const int b0 = static_cast<int>(rng() % static_cast<std::uint64_t>(right.group.order()));
                agg.add(verify_conjugate_products(left.group, right.group, p1,
                                                  conjugate_pfs(left.group, p1, a0), q1,
                                                  conjugate_pfs(right.group, q1, b0),
                                                  &st.product(pkey)),
                        instance_desc("constructed-conjugates",
                                      left.group.name() + "x" + right.group.name(), t));
            } else {
                agg.add(verify_conjugate_products(left.group, right.group, p1, sampled_pfsg(left, rng),
                                                  q1, sampled_pfsg(right, rng), &st.product(pkey)),
                        instance_desc("independent-pair",
                                      left.group.name() + "x" + right.group.name(), t));
            }
        } else {
            throw ValidationError("unknown theorem tag '" + tag + "'");
        }
    }
    if (tag == "cut_subgroup_iff" || tag == "cut_normal_iff")
        agg.rep.low_coverage = agg.rep.lhs_true == 0 || agg.rep.lhs_false == 0;
    return agg.rep;
}

} // namespace

std::vector<CampaignReport> run_campaign(const CampaignConfig& config) {
    if (config.trials < 1)
        throw ValidationError("campaign needs at least one trial");
    std::vector<std::string> tags = config.theorems.empty() ? all_theorem_tags() : config.theorems;
    for (const std::string& tag : tags) {
        const auto& known = all_theorem_tags();
        if (std::find(known.begin(), known.end(), tag) == known.end()) {
            std::string valid;
            for (const auto& k : known)
                valid += (valid.empty() ? "" : ", ") + k;
            throw ValidationError("unknown theorem tag '" + tag + "'; valid tags: " + valid);
        }
    }

    std::vector<std::string> names = config.groups;
    if (names.empty())
        names = {"Z4", "Z6", "Z8", "Z12", "S3", "D4", "V4", "Z2xZ4"};

    CampaignState st;
    for (const std::string& name : names) {
        FiniteGroup g = resolve_group(name);
        SubgroupLattice lat = build_subgroup_lattice(g);
        GroupCtx ctx{std::move(g), std::move(lat), 1, 1};
        ctx.max_chain = ctx.lattice.chain_depth[static_cast<std::size_t>(ctx.lattice.full)];
        ctx.max_normal_chain =
            ctx.lattice.normal_chain_depth[static_cast<std::size_t>(ctx.lattice.full)];
        st.groups.push_back(std::move(ctx));
    }
    const int n = static_cast<int>(st.groups.size());
    for (int i = 0; i < n; ++i)
        for (int step = 1; step <= n; ++step) {
            const int j = (i + step) % n;
            const long prod = static_cast<long>(st.groups[static_cast<std::size_t>(i)].group.order()) *
                              st.groups[static_cast<std::size_t>(j)].group.order();
            if (prod <= config.max_product_order && prod > 1) {
                st.pairs.emplace_back(i, j);
                break;
            }
        }

    std::vector<CampaignReport> reports;
    reports.reserve(tags.size());
    for (const std::string& tag : tags)
        reports.push_back(run_theorem(tag, config, st));
    return reports;
}

ordered_json campaign_report_to_json(const CampaignReport& r) {
    ordered_json j;
    j["theorem"] = r.theorem_id;
    j["passed"] = r.passed;
    j["instances"] = r.instances;
    j["checks"] = r.checks;
    j["lhs_true"] = r.lhs_true;
    j["lhs_false"] = r.lhs_false;
    j["vacuous"] = r.vacuous;
    j["non_vacuous"] = r.non_vacuous;
    j["low_coverage"] = r.low_coverage;
    j["counterexample"] = r.counterexample ? *r.counterexample : ordered_json(nullptr);
    return j;
}

std::string campaign_to_jsonl(const std::vector<CampaignReport>& reports) {
    std::string out;
    for (const CampaignReport& r : reports) {
        out += campaign_report_to_json(r).dump();
        out += '\n';
    }
    return out;
}

} // namespace pfg
