#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mayachain {

/// Frobenius symbol (s_1, ..., s_r | t_q, ..., t_1): the reflected missing
/// negatives and the present non-negatives, both listed in decreasing order.
struct FrobeniusSymbol {
    std::vector<int> s;  // strictly decreasing, >= 0
    std::vector<int> t;  // strictly decreasing, >= 0

    int index() const { return static_cast<int>(t.size()) - static_cast<int>(s.size()); }
    bool operator==(const FrobeniusSymbol&) const = default;
};

/// A Maya diagram: a set of integers containing every sufficiently negative
/// integer and excluding every sufficiently positive one. Only the finite
/// deviation from (-inf, 0) is stored:
///   - filled_nonneg: the members >= 0, increasing;
///   - empty_neg: {-m-1 : m < 0, m not a member}, increasing.
/// Values are immutable; all operations return new diagrams.
class MayaDiagram {
public:
    MayaDiagram() = default;  // the trivial diagram (-inf, 0)

    static MayaDiagram trivial() { return MayaDiagram(); }
    static MayaDiagram from_sets(std::vector<int> filled_nonneg, std::vector<int> empty_neg);

    /// Diagram with the given block coordinates: complement boundaries listed
    /// in non-decreasing order, odd length. Repeated entries denote empty
    /// blocks and simply collapse.
    static MayaDiagram xi(const std::vector<int>& beta);

    const std::vector<int>& filled_nonneg() const { return filled_; }
    const std::vector<int>& empty_neg() const { return empty_; }

    bool contains(int m) const;
    int index() const { return static_cast<int>(filled_.size()) - static_cast<int>(empty_.size()); }

    FrobeniusSymbol frobenius() const;

    MayaDiagram shifted(int k) const;

    /// The unique translate with all negatives filled and 0 missing, plus the
    /// translation that was removed: returns (M - k, k).
    std::pair<MayaDiagram, int> standard_form() const;

    /// Strictly increasing block coordinates (odd length 2g+1);
    /// xi(block_coordinates()) == *this.
    std::vector<int> block_coordinates() const;
    int genus() const { return (static_cast<int>(block_coordinates().size()) - 1) / 2; }

    /// Toggles membership of m (an involution).
    MayaDiagram flip(int m) const;

    /// Applies flips at all sites of a multiset; equal pairs cancel.
    MayaDiagram multi_flip(const std::vector<int>& sites) const;

    /// Sorted symmetric difference (members of exactly one diagram). This is
    /// the unique minimal flip set carrying one diagram to the other.
    std::vector<int> symmetric_difference(const MayaDiagram& other) const;

    /// Structural equality of labelled diagrams.
    bool operator==(const MayaDiagram&) const = default;

    /// True when the two diagrams agree up to translation.
    bool equivalent(const MayaDiagram& other) const;

    /// '#'/'.' rendering of the window [lo, hi] with '|' marking the origin.
    std::string render(int lo, int hi) const;

    /// Every integer below this is a member.
    int support_lo() const { return empty_.empty() ? 0 : -(empty_.back() + 1); }
    /// Every integer above this is a non-member.
    int support_hi() const { return filled_.empty() ? -1 : filled_.back(); }

private:
    std::vector<int> filled_;
    std::vector<int> empty_;
};

MayaDiagram from_frobenius(const FrobeniusSymbol& f);

}  // namespace mayachain
