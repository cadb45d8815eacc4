#pragma once

#include <cstddef>
#include <vector>

#include "pfg/group.hpp"
#include "pfg/rational.hpp"

namespace pfg {

/// One (positive, neutral, negative) membership triple. Valid when each
/// component lies in [0,1] and the components sum to at most 1.
struct PictureTriple {
    Rational positive;
    Rational neutral;
    Rational negative;

    Rational sum() const { return positive + neutral + negative; }
    bool valid() const {
        return positive.in_unit_interval() && neutral.in_unit_interval() &&
               negative.in_unit_interval() && sum() <= Rational(1);
    }

    friend bool operator==(const PictureTriple&, const PictureTriple&) = default;
    friend auto operator<=>(const PictureTriple&, const PictureTriple&) = default;
};

/// Picture fuzzy set over a finite carrier indexed 0..carrier_size-1.
/// The carrier is usually a group's element range, but any finite set
/// works; operations that need the group take it explicitly.
class PictureFuzzySet {
public:
    /// Validates every triple; the error message names the first offending
    /// element index.
    static PictureFuzzySet make(std::size_t carrier_size, std::vector<PictureTriple> triples);
    static PictureFuzzySet constant(std::size_t carrier_size, const PictureTriple& t);

    std::size_t carrier_size() const { return triples_.size(); }
    const PictureTriple& at(std::size_t y) const {
        if (y >= triples_.size())
            throw ValidationError("carrier element " + std::to_string(y) + " out of range");
        return triples_[y];
    }
    const std::vector<PictureTriple>& triples() const { return triples_; }

    friend bool operator==(const PictureFuzzySet&, const PictureFuzzySet&) = default;

private:
    explicit PictureFuzzySet(std::vector<PictureTriple> triples) : triples_(std::move(triples)) {}
    std::vector<PictureTriple> triples_;
};

/// Residual membership mass 1 - (positive + neutral + negative).
/// Note: this is the standard additive form. An alternative parenthesization
/// 1 - (p - n - g) circulates in print but can exceed 1, so it is not used.
Rational refusal_degree(const PictureFuzzySet& q, std::size_t y);

/// Cut threshold (r,s,t) with r+s+t <= 1.
struct CutThreshold {
    Rational r;
    Rational s;
    Rational t;

    static CutThreshold make(Rational r, Rational s, Rational t);
    bool valid() const {
        return r.in_unit_interval() && s.in_unit_interval() && t.in_unit_interval() &&
               r + s + t <= Rational(1);
    }

    friend bool operator==(const CutThreshold&, const CutThreshold&) = default;
    friend auto operator<=>(const CutThreshold&, const CutThreshold&) = default;
};

/// { y : positive(y) >= r, neutral(y) >= s, negative(y) <= t }. May be empty.
Subset cut_set(const PictureFuzzySet& q, const CutThreshold& c);

/// A finite set of valid thresholds such that every cut set realizable by
/// any valid threshold equals cut_set(q, c) for some listed c.
///
/// The list combines two sources: the grid of attained component values
/// (with 0/1 sentinels), and one representative per equivalence class of
/// thresholds (cuts only change when a component crosses an attained
/// value). The class representatives matter: a class whose natural corner
/// value violates r+s+t <= 1 can still contain valid thresholds, and those
/// cuts must be listed too.
std::vector<CutThreshold> representative_thresholds(const PictureFuzzySet& q);

/// Componentwise min/min/max product on the product carrier; the pair
/// (p,q) is encoded as p * |Q-carrier| + q, matching make_product_group.
PictureFuzzySet cartesian_product(const PictureFuzzySet& p, const PictureFuzzySet& q);

/// Image under f: at points with non-empty preimage, (max positive,
/// max neutral, min negative) over the fiber; (0,0,1) elsewhere.
PictureFuzzySet image(const GroupMap& f, const PictureFuzzySet& p);

/// Preimage under f: the triple at y is p's triple at f(y).
PictureFuzzySet preimage(const GroupMap& f, const PictureFuzzySet& q);

/// Exact componentwise equality; throws ValidationError on carrier mismatch.
bool pfs_equal(const PictureFuzzySet& p, const PictureFuzzySet& q);

} // namespace pfg
