#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pfg/pfsg.hpp"

namespace pfg {

/// Outcome of checking one theorem statement on one concrete instance.
/// `counterexample` is present exactly when `passed` is false and replays
/// through the base predicates. `elapsed` is informational and excluded
/// from serialization so reports stay byte-deterministic.
struct VerificationReport {
    std::string theorem_id;
    bool passed = false;
    long instances_checked = 0;
    bool vacuous = false;               // every hypothesis branch failed
    std::optional<bool> lhs;            // iff theorems: truth of the left side
    std::string branch;                 // which clause/branch carried the statement
    std::optional<nlohmann::ordered_json> counterexample;
    std::chrono::microseconds elapsed{0};
};

nlohmann::ordered_json report_to_json(const VerificationReport& r);

/// Cut characterization of subgroups: Q is a PFSG iff every non-empty
/// representative cut is a crisp subgroup. The literal statement
/// quantifies over all valid thresholds, but thresholds above the
/// identity's degrees give empty cuts, which are never subgroups, so the
/// literal iff fails for every non-trivial PFSG; strict=true checks that
/// literal reading and reports the failure.
VerificationReport verify_cut_subgroup_iff(const FiniteGroup& g, const PictureFuzzySet& q,
                                           bool strict = false);

/// Cut characterization of normality (precondition: Q is a PFSG).
VerificationReport verify_cut_normal_iff(const FiniteGroup& g, const PictureFuzzySet& q);

/// a * C(Q) = C(aQ) and C(Q) * a = C(Qa) for all a and all representative
/// thresholds (precondition: Q is a PFSG).
VerificationReport verify_coset_translation(const FiniteGroup& g, const PictureFuzzySet& q);

/// Image/preimage cut laws plus the pointwise image bounds. p lives on the
/// source carrier, q on the target carrier.
VerificationReport verify_image_cut_laws(const FiniteGroup& src, const FiniteGroup& tgt,
                                         const GroupMap& f, const PictureFuzzySet& p,
                                         const PictureFuzzySet& q);

/// C(P x Q) = C(P) x C(Q) across all representative thresholds of the product.
VerificationReport verify_product_cut(const PictureFuzzySet& p, const PictureFuzzySet& q);

/// Product of PFSGs (PFNSGs) is a PFSG (PFNSG) of the product group.
/// Pass `product` to reuse a prebuilt product group.
VerificationReport verify_product_pfsg(const FiniteGroup& g, const FiniteGroup& h,
                                       const PictureFuzzySet& p, const PictureFuzzySet& q,
                                       const FiniteGroup* product = nullptr);
VerificationReport verify_product_pfnsg(const FiniteGroup& g, const FiniteGroup& h,
                                        const PictureFuzzySet& p, const PictureFuzzySet& q,
                                        const FiniteGroup* product = nullptr);

/// Identity dominance across the factors of a product PFSG. The default
/// check follows the contradiction argument componentwise: for each of the
/// three degree components, one factor's identity value dominates the other
/// factor everywhere. strict=true instead demands a single factor whose
/// identity dominates in all three components at once; that stronger
/// conjunctive reading has counterexamples and the failures are reported.
VerificationReport verify_identity_dominance(const FiniteGroup& g, const FiniteGroup& h,
                                             const PictureFuzzySet& p, const PictureFuzzySet& q,
                                             bool strict = false,
                                             const FiniteGroup* product = nullptr);

/// Factor recovery: (a) product PFSG + Q's identity dominating P everywhere
/// implies P is a PFSG; (b) the mirrored statement for Q; (c) for PFSG
/// factors with a product PFSG, one factor is a PFSG. Hypotheses are tested
/// inside; vacuous branches are labeled, never counted as confirmation.
VerificationReport verify_factor_recovery(const FiniteGroup& g, const FiniteGroup& h,
                                          const PictureFuzzySet& p, const PictureFuzzySet& q,
                                          const FiniteGroup* product = nullptr);

/// Conjugate factors give conjugate products: if P1 ~ P2 (witness a) and
/// Q1 ~ Q2 (witness b), then P1 x Q1 equals the conjugate of P2 x Q2 by
/// (a,b). Vacuous when either conjugacy is absent.
VerificationReport verify_conjugate_products(const FiniteGroup& g, const FiniteGroup& h,
                                             const PictureFuzzySet& p1, const PictureFuzzySet& p2,
                                             const PictureFuzzySet& q1, const PictureFuzzySet& q2,
                                             const FiniteGroup* product = nullptr);

struct CampaignConfig {
    std::vector<std::string> groups;    // empty -> default registry mix
    int trials = 200;
    std::uint64_t seed = 7;
    std::vector<std::string> theorems;  // empty -> all
    bool strict = false;
    int max_product_order = 72;
};

/// Aggregated result of running one theorem tag over many instances.
struct CampaignReport {
    std::string theorem_id;
    bool passed = true;
    long instances = 0;       // verifier invocations
    long checks = 0;          // elementary checks across instances
    long lhs_true = 0;        // iff polarity coverage
    long lhs_false = 0;
    long vacuous = 0;
    long non_vacuous = 0;
    bool low_coverage = false;
    std::optional<nlohmann::ordered_json> counterexample;
};

const std::vector<std::string>& all_theorem_tags();

/// Deterministic per (config, seed). Instances mix chain samplers
/// (guaranteed positives), perturbed samples, and uniform-random raw sets
/// so iff theorems see both polarities.
std::vector<CampaignReport> run_campaign(const CampaignConfig& config);

nlohmann::ordered_json campaign_report_to_json(const CampaignReport& r);
std::string campaign_to_jsonl(const std::vector<CampaignReport>& reports);

} // namespace pfg
