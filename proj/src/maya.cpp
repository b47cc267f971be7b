#include "mayachain/maya.hpp"

#include <algorithm>
#include <stdexcept>

namespace mayachain {

namespace {

bool strictly_increasing_nonneg(const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) return false;
        if (i > 0 && v[i] <= v[i - 1]) return false;
    }
    return true;
}

}  // namespace

MayaDiagram MayaDiagram::from_sets(std::vector<int> filled_nonneg, std::vector<int> empty_neg) {
    if (!strictly_increasing_nonneg(filled_nonneg) || !strictly_increasing_nonneg(empty_neg))
        throw std::invalid_argument("MayaDiagram: sequences must be strictly increasing and >= 0");
    MayaDiagram m;
    m.filled_ = std::move(filled_nonneg);
    m.empty_ = std::move(empty_neg);
    return m;
}

MayaDiagram MayaDiagram::xi(const std::vector<int>& beta) {
    if (beta.size() % 2 == 0) throw std::invalid_argument("xi: block coordinates must have odd length");
    for (std::size_t i = 1; i < beta.size(); ++i)
        if (beta[i] < beta[i - 1]) throw std::invalid_argument("xi: block coordinates must be non-decreasing");

    // m is a member iff an even number of boundaries lie at or below m.
    const int lo = beta.front() - 1;
    const int hi = beta.back();
    MayaDiagram m;
    for (int pos = std::min(lo, 0); pos <= std::max(hi, -1); ++pos) {
        const std::size_t count = std::upper_bound(beta.begin(), beta.end(), pos) - beta.begin();
        const bool member = count % 2 == 0;
        if (pos >= 0 && member) m.filled_.push_back(pos);
        if (pos < 0 && !member) m.empty_.push_back(-pos - 1);
    }
    std::sort(m.empty_.begin(), m.empty_.end());
    return m;
}

bool MayaDiagram::contains(int m) const {
    if (m >= 0) return std::binary_search(filled_.begin(), filled_.end(), m);
    return !std::binary_search(empty_.begin(), empty_.end(), -m - 1);
}

FrobeniusSymbol MayaDiagram::frobenius() const {
    FrobeniusSymbol f;
    f.s.assign(empty_.rbegin(), empty_.rend());
    f.t.assign(filled_.rbegin(), filled_.rend());
    return f;
}

MayaDiagram from_frobenius(const FrobeniusSymbol& f) {
    std::vector<int> filled(f.t.rbegin(), f.t.rend());
    std::vector<int> empty(f.s.rbegin(), f.s.rend());
    return MayaDiagram::from_sets(std::move(filled), std::move(empty));
}

MayaDiagram MayaDiagram::shifted(int k) const {
    if (k == 0) return *this;
    const int lo = std::min(support_lo() + k, 0);
    const int hi = std::max(support_hi() + k, -1);
    MayaDiagram out;
    for (int m = lo; m <= hi; ++m) {
        const bool member = contains(m - k);
        if (m >= 0 && member) out.filled_.push_back(m);
        if (m < 0 && !member) out.empty_.push_back(-m - 1);
    }
    std::sort(out.empty_.begin(), out.empty_.end());
    return out;
}

std::pair<MayaDiagram, int> MayaDiagram::standard_form() const {
    const int k = block_coordinates().front();
    return {shifted(-k), k};
}

std::vector<int> MayaDiagram::block_coordinates() const {
    std::vector<int> beta;
    const int lo = support_lo();
    const int hi = support_hi();
    for (int m = lo; m <= hi + 1; ++m)
        if (contains(m - 1) != contains(m)) beta.push_back(m);
    return beta;
}

MayaDiagram MayaDiagram::flip(int m) const {
    MayaDiagram out(*this);
    auto toggle = [](std::vector<int>& v, int value) {
        auto it = std::lower_bound(v.begin(), v.end(), value);
        if (it != v.end() && *it == value)
            v.erase(it);
        else
            v.insert(it, value);
    };
    if (m >= 0)
        toggle(out.filled_, m);
    else
        toggle(out.empty_, -m - 1);
    return out;
}

MayaDiagram MayaDiagram::multi_flip(const std::vector<int>& sites) const {
    MayaDiagram out(*this);
    for (int m : sites) out = out.flip(m);
    return out;
}

std::vector<int> MayaDiagram::symmetric_difference(const MayaDiagram& other) const {
    std::vector<int> diff;
    const int lo = std::min(support_lo(), other.support_lo());
    const int hi = std::max(support_hi(), other.support_hi());
    for (int m = lo; m <= hi; ++m)
        if (contains(m) != other.contains(m)) diff.push_back(m);
    return diff;
}

bool MayaDiagram::equivalent(const MayaDiagram& other) const {
    return standard_form().first == other.standard_form().first;
}

std::string MayaDiagram::render(int lo, int hi) const {
    std::string out;
    for (int m = lo; m <= hi; ++m) {
        if (m == 0) out += '|';
        out += contains(m) ? '#' : '.';
    }
    return out;
}

}  // namespace mayachain
