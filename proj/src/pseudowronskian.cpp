#include "mayachain/pseudowronskian.hpp"

#include "mayachain/hermite.hpp"

namespace mayachain {

PseudoWronskian pseudo_wronskian(const MayaDiagram& m, DetMethod method) {
    const FrobeniusSymbol f = m.frobenius();
    const int r = static_cast<int>(f.s.size());
    const int q = static_cast<int>(f.t.size());
    const int size = r + q;

    PseudoWronskian out;
    out.maya = m;
    out.r = r;
    out.q = q;
    if (size == 0) {
        out.poly = QPoly::one();
        return out;
    }

    PolyMatrix mat(size, std::vector<QPoly>(size));
    // conjugate rows: s_1 > ... > s_r, row entries theta_{s_i}, theta_{s_i+1}, ...
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < size; ++j) mat[i][j] = conjugate_hermite(f.s[i] + j);
    // derivative rows: t_q < ... < t_1, row entries H_t, H_t', H_t'', ...
    for (int i = 0; i < q; ++i) {
        const int t = f.t[q - 1 - i];
        mat[r + i][0] = hermite(t);
        for (int j = 1; j < size; ++j) mat[r + i][j] = mat[r + i][j - 1].derivative();
    }
    out.poly = poly_matrix_det(mat, method);
    return out;
}

QPoly normalized_pseudo_wronskian(const MayaDiagram& m, DetMethod method) {
    const PseudoWronskian pw = pseudo_wronskian(m, method);
    const FrobeniusSymbol f = m.frobenius();
    Rational denom(1);
    for (std::size_t i = 0; i < f.s.size(); ++i)
        for (std::size_t j = i + 1; j < f.s.size(); ++j)
            denom *= Rational(2 * f.s[j] - 2 * f.s[i]);
    for (std::size_t i = 0; i < f.t.size(); ++i)
        for (std::size_t j = i + 1; j < f.t.size(); ++j)
            denom *= Rational(2 * f.t[i] - 2 * f.t[j]);
    Rational scale = Rational(1) / denom;
    if ((pw.r * pw.q) % 2 != 0) scale = -scale;
    return pw.poly * scale;
}

std::string wronskian_label(const MayaDiagram& m) {
    const FrobeniusSymbol f = m.frobenius();
    if (f.s.empty() && f.t.empty()) return "1";
    if (f.s.empty()) {
        std::string out = "Wr(";
        for (std::size_t i = f.t.size(); i-- > 0;) {
            out += "H_" + std::to_string(f.t[i]);
            if (i) out += ",";
        }
        return out + ")";
    }
    std::string out = "pW(";
    for (std::size_t i = 0; i < f.s.size(); ++i) {
        if (i) out += ",";
        out += "th_" + std::to_string(f.s[i]);
    }
    out += " | ";
    for (std::size_t i = f.t.size(); i-- > 0;) {
        out += "H_" + std::to_string(f.t[i]);
        if (i) out += ",";
    }
    return out + ")";
}

}  // namespace mayachain
