#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "mayachain/cyclic.hpp"
#include "mayachain/matrixdet.hpp"
#include "mayachain/mpfloat.hpp"
#include "mayachain/poly.hpp"

namespace mayachain {

/// A Hermite Wronskian family member: one of the five rank-5 signatures plus
/// the 4-tuple selecting the diagram.
struct WronskianFamilySpec {
    Signature signature;
    std::array<int, 4> n{};
};

/// The Hermite degrees entering the Wronskian (the non-negative members of
/// the diagram selected by the spec), strictly increasing.
std::vector<int> family_indices(const WronskianFamilySpec& spec);

/// Exact Wronskian over the family index list. Degree is
/// sum(indices) - m(m-1)/2 for m entries.
QPoly family_polynomial(const WronskianFamilySpec& spec, DetMethod method = DetMethod::Auto);

/// Zeros of a real-coefficient polynomial, computed by simultaneous
/// (Aberth-Ehrlich) iteration on a floating image of the exact coefficients.
/// The origin's multiplicity is read off the exact trailing coefficients
/// before iteration, so clustered zeros there never reach the iteration.
struct RootSet {
    std::vector<MpComplex> roots;      // sorted by (re, im); count == degree
    int precision_bits = 0;            // working precision actually used
    MpFloat residual_bound{64};        // max normalized residual |p(z)| / (max|coeff| * max(1,|z|)^deg)
    MpFloat inclusion_radius{64};      // max over roots of deg * |p(z)| / |p'(z)|
    std::vector<bool> converged;       // per root; origin roots are always converged
    int origin_multiplicity = 0;
};

/// Deterministic for fixed input and precision. Doubles the working precision
/// (up to 1024 bits) if some root fails to converge at the requested one.
RootSet find_roots(const QPoly& p, int precision_bits);

/// True if every root can be paired with a conjugate partner within tol.
bool conjugate_closed(const RootSet& rs, const MpFloat& tol);

/// Default pairing tolerance: 10x the residual bound and 10x the inclusion
/// radius (which absorbs root clusters), floored at the working precision's
/// granularity.
MpFloat conjugate_tolerance(const RootSet& rs);

void emit_csv(const RootSet& rs, std::ostream& out);
void emit_json(const RootSet& rs, std::ostream& out);
void emit_svg(const RootSet& rs, std::ostream& out);

/// format is one of "csv", "json", "svg"; path "-" writes to stdout.
void emit(const RootSet& rs, const std::string& format, const std::string& path);

}  // namespace mayachain
