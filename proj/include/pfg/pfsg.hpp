#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "pfg/pfs.hpp"

namespace pfg {

enum class PfsgClause {
    SigmaClosure,
    TauClosure,
    EtaClosure,
    SigmaInverse,
    TauInverse,
    EtaInverse,
    SigmaEquality,
    TauEquality,
    EtaEquality,
};

std::string clause_name(PfsgClause c);

/// First violated inequality, in deterministic scan order. b is -1 for the
/// unary inverse clauses.
struct PfsgWitness {
    int a = -1;
    int b = -1;
    PfsgClause clause = PfsgClause::SigmaClosure;

    friend bool operator==(const PfsgWitness&, const PfsgWitness&) = default;
};

struct PfsgVerdict {
    bool holds = false;
    std::optional<PfsgWitness> witness;
};

/// Subgroup predicate via the two-clause definition: min/min/max closure
/// under the operation, and monotone behavior under inversion. Scans a,
/// then b, then clauses; the reported witness is the first violation.
PfsgVerdict is_pfsg(const FiniteGroup& g, const PictureFuzzySet& q);

/// Equivalent one-clause form over a * b^-1.
PfsgVerdict is_pfsg_compact(const FiniteGroup& g, const PictureFuzzySet& q);

/// Picture fuzzy cosets: the left coset evaluates q at a^-1 * u, the right
/// coset at u * a^-1.
PictureFuzzySet left_coset(const FiniteGroup& g, const PictureFuzzySet& q, int a);
PictureFuzzySet right_coset(const FiniteGroup& g, const PictureFuzzySet& q, int a);

/// Normality in its three equivalent forms. Each throws PreconditionError
/// when q is not a PFSG (normality is only defined for subgroups).
PfsgVerdict is_pfnsg_cosets(const FiniteGroup& g, const PictureFuzzySet& q);
PfsgVerdict is_pfnsg_commute(const FiniteGroup& g, const PictureFuzzySet& q);
PfsgVerdict is_pfnsg_conjugation(const FiniteGroup& g, const PictureFuzzySet& q);

/// Pointwise conjugate: the triple at x is q's triple at a^-1 * x * a.
PictureFuzzySet conjugate_pfs(const FiniteGroup& g, const PictureFuzzySet& q, int a);

/// Smallest element a with p == conjugate_pfs(g, q, a), if any.
std::optional<int> are_conjugate(const FiniteGroup& g, const PictureFuzzySet& p,
                                 const PictureFuzzySet& q);

/// Strictly increasing subgroup chain ending at the whole group.
struct SubgroupChain {
    std::vector<Subset> layers;
};

int max_chain_length(const SubgroupLattice& lat, bool normal_only);

/// Random strict chain of the requested length ending at the full group;
/// throws PreconditionError when none exists.
SubgroupChain sample_subgroup_chain(const SubgroupLattice& lat, std::mt19937_64& rng, int length,
                                    bool normal_only);

/// Randomly generated PFSG built from a subgroup chain with strictly
/// layered constant triples (positive and neutral decreasing outward,
/// negative increasing). Values sit on a fixed denominator grid (default
/// 64) so the layer levels never collide. Deterministic per seed.
PictureFuzzySet sample_pfsg(const FiniteGroup& g, std::uint64_t seed, int chain_length,
                            int denominator = 64);
PictureFuzzySet sample_pfsg(const FiniteGroup& g, const SubgroupLattice& lat, std::uint64_t seed,
                            int chain_length, int denominator = 64);

/// Same construction over a chain of normal subgroups; the result is a PFNSG.
PictureFuzzySet sample_pfnsg(const FiniteGroup& g, std::uint64_t seed, int chain_length,
                             int denominator = 64);
PictureFuzzySet sample_pfnsg(const FiniteGroup& g, const SubgroupLattice& lat, std::uint64_t seed,
                             int chain_length, int denominator = 64);

/// Uniform-ish raw PFS with all degrees on the k/denominator grid.
PictureFuzzySet random_pfs(std::size_t carrier_size, std::mt19937_64& rng, int denominator = 64);

/// Copy with one randomly chosen component of one element replaced by a
/// fresh grid value (respecting the triple-sum bound).
PictureFuzzySet perturb_pfs(const PictureFuzzySet& q, std::mt19937_64& rng, int denominator = 64);

} // namespace pfg
