#pragma once

#include <string>

#include "mayachain/matrixdet.hpp"
#include "mayachain/maya.hpp"
#include "mayachain/poly.hpp"

namespace mayachain {

/// The determinant attached to a Maya diagram, together with the shape of the
/// mixed matrix that produced it: r rows of successive conjugate Hermite
/// polynomials (one per missing negative) and q rows of Hermite derivatives
/// (one per present non-negative). In standard form (r = 0) this is a plain
/// Wronskian of Hermite polynomials.
struct PseudoWronskian {
    MayaDiagram maya;
    QPoly poly;
    int r = 0;
    int q = 0;
};

PseudoWronskian pseudo_wronskian(const MayaDiagram& m, DetMethod method = DetMethod::Auto);

/// Translation-invariant normalization: dividing by the index-dependent
/// Vandermonde-type constants makes the polynomial depend only on the
/// unlabelled diagram, even though the determinant sizes differ.
QPoly normalized_pseudo_wronskian(const MayaDiagram& m, DetMethod method = DetMethod::Auto);

/// Display form, e.g. "Wr(H_2,H_3,H_4,H_6)"; mixed determinants list the
/// conjugate rows first, e.g. "pW(th_1,th_0 | H_0,H_2)"; the trivial diagram
/// renders as "1".
std::string wronskian_label(const MayaDiagram& m);

}  // namespace mayachain
