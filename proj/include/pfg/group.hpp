#pragma once

#include <compare>
#include <string>
#include <vector>

#include "pfg/error.hpp"

namespace pfg {

/// Finite group represented by an explicit Cayley table over element
/// indices 0..order-1.
///
/// The table representation is deliberate: everything downstream is an
/// exhaustive scan over elements, so O(n^2) storage buys O(1) products.
/// All four group axioms are verified eagerly in from_table, so an invalid
/// table is unrepresentable once construction succeeds.
class FiniteGroup {
public:
    /// Validates closure, associativity, identity and inverses; throws
    /// ValidationError with the first offending entry otherwise.
    static FiniteGroup from_table(const std::vector<std::vector<int>>& table,
                                  std::string name = "");

    int order() const { return order_; }
    int op(int a, int b) const {
        check_element(a);
        check_element(b);
        return table_[static_cast<std::size_t>(a) * order_ + b];
    }
    int inverse(int a) const {
        check_element(a);
        return inverse_[static_cast<std::size_t>(a)];
    }
    int identity() const { return identity_; }
    /// Conjugate of g by a: a^-1 * g * a.
    int conjugate(int g, int a) const { return op(op(inverse(a), g), a); }

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    bool is_abelian() const;
    int element_order(int a) const;
    const std::vector<int>& table() const { return table_; }

private:
    FiniteGroup() = default;
    void check_element(int a) const {
        if (a < 0 || a >= order_)
            throw ValidationError("element index " + std::to_string(a) +
                                  " out of range for group of order " + std::to_string(order_));
    }

    int order_ = 0;
    std::vector<int> table_; // row-major, order x order
    int identity_ = 0;
    std::vector<int> inverse_;
    std::string name_;
};

FiniteGroup make_cyclic(int n);
/// Dihedral group of order 2n; indices 0..n-1 are rotations, n..2n-1 reflections.
FiniteGroup make_dihedral(int n);
/// Symmetric group S_n for n in [1,5]; elements are permutations in lexicographic order.
FiniteGroup make_symmetric(int n);
FiniteGroup make_klein_four();
/// Direct product; element (g,h) is encoded as index g*|H| + h.
FiniteGroup make_product_group(const FiniteGroup& g, const FiniteGroup& h);

/// Sorted, duplicate-free set of element indices of one group.
/// The sorted member list is the canonical form, so equality is structural.
class Subset {
public:
    Subset() = default;
    explicit Subset(std::vector<int> members);

    const std::vector<int>& members() const { return members_; }
    bool contains(int a) const;
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    friend bool operator==(const Subset&, const Subset&) = default;
    friend auto operator<=>(const Subset&, const Subset&) = default;

private:
    std::vector<int> members_;
};

/// True iff s is non-empty, closed under the group operation and under
/// inverses. Throws ValidationError on out-of-range member indices.
bool is_subgroup(const FiniteGroup& g, const Subset& s);
bool is_normal_subgroup(const FiniteGroup& g, const Subset& s);

Subset translate_left(const FiniteGroup& g, int a, const Subset& s);
Subset translate_right(const FiniteGroup& g, const Subset& s, int a);

/// Default cap for subgroup enumeration (24 unless PFG_MAX_ORDER is set).
int subgroup_enumeration_cap();

/// All subgroups of g, sorted by cardinality then lexicographically by
/// member list. Throws ResourceLimitError when |g| exceeds the cap.
std::vector<Subset> enumerate_subgroups(const FiniteGroup& g);
std::vector<Subset> enumerate_subgroups(const FiniteGroup& g, int max_order);

/// Map between the index ranges of two groups. Homomorphy is optional:
/// plain set maps are permitted wherever only a mapping between carriers
/// is required; callers that need homomorphy validate explicitly.
struct GroupMap {
    int source_order = 0;
    int target_order = 0;
    std::vector<int> map;

    int operator()(int a) const {
        if (a < 0 || a >= source_order)
            throw ValidationError("map argument out of range");
        return map[static_cast<std::size_t>(a)];
    }
};

/// True iff f.map respects both group operations on every pair.
/// Throws ValidationError if the map array does not match the source order
/// or hits an out-of-range target index.
bool validate_homomorphism(const FiniteGroup& src, const FiniteGroup& tgt, const GroupMap& f);

GroupMap identity_map(const FiniteGroup& g);
GroupMap constant_map(const FiniteGroup& src, const FiniteGroup& tgt, int value);
/// Z_m -> Z_n reduction map (x mod n); a homomorphism when n divides m.
GroupMap mod_map(int m, int n);
/// Projection of make_product_group(g,h) onto factor 0 (g) or 1 (h).
GroupMap projection_map(const FiniteGroup& g, const FiniteGroup& h, int which);

/// Subgroup lattice of a group with the bookkeeping the chain samplers
/// need: proper-subgroup edges, normality, and longest-chain depths.
struct SubgroupLattice {
    std::vector<Subset> subgroups;        // sorted as in enumerate_subgroups
    std::vector<std::vector<int>> proper; // indices of proper subgroups of each entry
    std::vector<bool> normal;
    std::vector<int> chain_depth;         // longest strict chain ending at entry
    std::vector<int> normal_chain_depth;  // same, restricted to normal subgroups
    int full = 0;                         // index of the whole group
};

SubgroupLattice build_subgroup_lattice(const FiniteGroup& g);

} // namespace pfg
