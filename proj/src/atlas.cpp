#include "mayachain/atlas.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mayachain/hermite.hpp"

namespace mayachain {

std::vector<int> family_indices(const WronskianFamilySpec& spec) {
    const std::vector<int> n(spec.n.begin(), spec.n.end());
    const MayaDiagram m = a4_blocks(spec.signature, n).diagram();
    std::vector<int> indices = m.filled_nonneg();
    std::set<int> unique(indices.begin(), indices.end());
    if (unique.size() != indices.size())
        throw std::invalid_argument("family_indices: duplicate Hermite indices");
    return indices;
}

QPoly family_polynomial(const WronskianFamilySpec& spec, DetMethod method) {
    const std::vector<int> indices = family_indices(spec);
    if (indices.empty()) return QPoly::one();
    std::vector<QPoly> fs;
    fs.reserve(indices.size());
    for (int i : indices) fs.push_back(hermite(i));
    return wronskian(fs, method);
}

namespace {

struct AberthState {
    std::vector<MpComplex> z;
    std::vector<bool> converged;
    bool all_converged = false;
};

MpComplex eval_poly(const std::vector<MpFloat>& coeff, const MpComplex& z, mpfr_prec_t prec) {
    MpComplex acc(prec);
    for (std::size_t i = coeff.size(); i-- > 0;) {
        acc = acc * z;
        acc.re += coeff[i];
    }
    return acc;
}

/// Majorant sum |a_0| + |a_1||z| + ... : the scale of the evaluation's
/// rounding noise. A point where |p(z)| falls below a small multiple of
/// 2^-bits times this sum is a root to working precision.
MpFloat eval_majorant(const std::vector<MpFloat>& coeff, const MpFloat& zabs, mpfr_prec_t prec) {
    MpFloat acc(prec);
    for (std::size_t i = coeff.size(); i-- > 0;) acc = acc * zabs + abs(coeff[i]);
    return acc;
}

double log2_magnitude(const Rational& x) {
    if (is_zero(x)) return -1e9;
    const double n = static_cast<double>(mpz_sizeinbase(mpq_numref(x.get_mpq_t()), 2));
    const double d = static_cast<double>(mpz_sizeinbase(mpq_denref(x.get_mpq_t()), 2));
    return n - d;
}

/// Upper bound on root magnitudes from coefficient exponents
/// (2 * max_k |a_{n-k}/a_n|^{1/k}, evaluated on base-2 magnitudes).
double root_radius(const QPoly& p) {
    const int n = p.degree();
    const double lead = log2_magnitude(p.coeffs()[n]);
    double best = -1e9;
    for (int k = 1; k <= n; ++k) {
        if (is_zero(p.coeffs()[n - k])) continue;
        best = std::max(best, (log2_magnitude(p.coeffs()[n - k]) - lead) / k);
    }
    if (best < -1e8) return 1.0;
    return 2.0 * std::pow(2.0, std::min(best, 512.0));
}

AberthState aberth(const std::vector<MpFloat>& coeff, const std::vector<MpFloat>& dcoeff,
                   double radius, int bits) {
    const int n = static_cast<int>(coeff.size()) - 1;
    AberthState st;
    st.z.reserve(n);
    const double two_pi = 6.283185307179586;
    for (int j = 0; j < n; ++j) {
        const double angle = two_pi * j / n + 0.7 / n;
        st.z.push_back(MpComplex(MpFloat::from(radius * std::cos(angle), bits),
                                 MpFloat::from(radius * std::sin(angle), bits)));
    }
    st.converged.assign(n, false);

    const MpFloat tol = MpFloat::pow2(6 - bits, bits);
    const MpFloat noise = MpFloat::pow2(4 - bits, bits);
    const MpFloat one = MpFloat::from(1L, bits);
    const MpFloat zero = MpFloat::from(0L, bits);
    const int max_sweeps = 600;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool done = true;
        for (int i = 0; i < n; ++i) {
            if (st.converged[i]) continue;
            const MpComplex pv = eval_poly(coeff, st.z[i], bits);
            // |p(z)| below the evaluation noise floor: z is a root to
            // working precision, further corrections are meaningless.
            if (pv.abs() <= eval_majorant(coeff, st.z[i].abs(), bits) * noise) {
                st.converged[i] = true;
                continue;
            }
            const MpComplex dv = eval_poly(dcoeff, st.z[i], bits);
            if (dv.abs().is_zero()) {
                st.z[i].re += tol;  // stationary point: deterministic nudge
                done = false;
                continue;
            }
            const MpComplex newton = pv / dv;
            MpComplex s(bits);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                s = s + MpComplex(one, zero) / (st.z[i] - st.z[j]);
            }
            const MpComplex ns = newton * s;
            const MpComplex denom(one - ns.re, -ns.im);
            const MpComplex corr = newton / denom;
            st.z[i] = st.z[i] - corr;
            const MpFloat scale = max(one, st.z[i].abs());
            if (corr.abs() <= scale * tol)
                st.converged[i] = true;
            else
                done = false;
        }
        if (done) break;
    }
    st.all_converged =
        std::all_of(st.converged.begin(), st.converged.end(), [](bool b) { return b; });
    return st;
}

/// Newton polish at doubled precision. Aberth stops at the evaluation noise
/// floor of the working precision; a few quadratically convergent steps with
/// more bits make every printed digit meaningful.
void refine(std::vector<MpComplex>& roots, const QPoly& p, int bits) {
    const int rbits = std::min(2 * bits, 2048);
    std::vector<MpFloat> coeff, dcoeff;
    coeff.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) coeff.push_back(MpFloat::from(c, rbits));
    const QPoly dp = p.derivative();
    for (const auto& c : dp.coeffs()) dcoeff.push_back(MpFloat::from(c, rbits));

    for (auto& z : roots) {
        MpComplex x(MpFloat(rbits) + z.re, MpFloat(rbits) + z.im);
        for (int step = 0; step < 4; ++step) {
            const MpComplex pv = eval_poly(coeff, x, rbits);
            const MpComplex dv = eval_poly(dcoeff, x, rbits);
            if (dv.abs().is_zero()) break;
            x = x - pv / dv;
        }
        z = x;
    }
}

}  // namespace

RootSet find_roots(const QPoly& p, int precision_bits) {
    if (p.is_zero()) throw std::invalid_argument("find_roots: zero polynomial");
    if (p.degree() < 1) throw std::invalid_argument("find_roots: constant polynomial");
    if (precision_bits < 16) throw std::invalid_argument("find_roots: precision too small");

    int origin = 0;
    while (is_zero(p.coeffs()[origin])) ++origin;
    std::vector<Rational> defl(p.coeffs().begin() + origin, p.coeffs().end());
    const QPoly deflated(std::move(defl));
    const int n = deflated.degree();

    RootSet rs;
    rs.origin_multiplicity = origin;

    int bits = precision_bits;
    AberthState st;
    if (n >= 1) {
        const double radius = root_radius(deflated);
        for (;;) {
            std::vector<MpFloat> coeff, dcoeff;
            coeff.reserve(n + 1);
            for (const auto& c : deflated.coeffs()) coeff.push_back(MpFloat::from(c, bits));
            const QPoly dp = deflated.derivative();
            for (const auto& c : dp.coeffs()) dcoeff.push_back(MpFloat::from(c, bits));
            st = aberth(coeff, dcoeff, radius, bits);
            if (st.all_converged || bits >= 1024) break;
            bits *= 2;
        }
    }
    rs.precision_bits = bits;

    if (n >= 1) refine(st.z, deflated, bits);

    for (int i = 0; i < origin; ++i) {
        rs.roots.push_back(MpComplex(bits));
        rs.converged.push_back(true);
    }
    for (int i = 0; i < n; ++i) {
        rs.roots.push_back(st.z[i]);
        rs.converged.push_back(st.converged[i]);
    }

    // deterministic order: lexicographic by (re, im)
    std::vector<std::size_t> order(rs.roots.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (rs.roots[a].re < rs.roots[b].re) return true;
        if (rs.roots[b].re < rs.roots[a].re) return false;
        return rs.roots[a].im < rs.roots[b].im;
    });
    std::vector<MpComplex> sorted_roots;
    std::vector<bool> sorted_conv;
    sorted_roots.reserve(order.size());
    for (std::size_t i : order) {
        sorted_roots.push_back(rs.roots[i]);
        sorted_conv.push_back(rs.converged[i]);
    }
    rs.roots = std::move(sorted_roots);
    rs.converged = std::move(sorted_conv);

    // normalized residual bound and inclusion radii on the original polynomial
    std::vector<MpFloat> full, dfull;
    full.reserve(p.coeffs().size());
    MpFloat coeff_norm(bits);
    for (const auto& c : p.coeffs()) {
        full.push_back(MpFloat::from(c, bits));
        coeff_norm = max(coeff_norm, abs(full.back()));
    }
    const QPoly dp_full = p.derivative();
    for (const auto& c : dp_full.coeffs()) dfull.push_back(MpFloat::from(c, bits));
    MpFloat bound(bits), radius(bits);
    const MpFloat one = MpFloat::from(1L, bits);
    const MpFloat degree = MpFloat::from(static_cast<long>(p.degree()), bits);
    for (const auto& z : rs.roots) {
        const MpFloat pv = eval_poly(full, z, bits).abs();
        const MpFloat denom =
            coeff_norm * pow_ui(max(one, z.abs()), static_cast<unsigned long>(p.degree()));
        bound = max(bound, pv / denom);
        const MpFloat dv = eval_poly(dfull, z, bits).abs();
        if (!dv.is_zero()) radius = max(radius, degree * (pv / dv));
    }
    rs.residual_bound = bound;
    rs.inclusion_radius = radius;
    return rs;
}

MpFloat conjugate_tolerance(const RootSet& rs) {
    const int bits = rs.precision_bits;
    MpFloat scale = MpFloat::from(1L, bits);
    for (const auto& z : rs.roots) scale = max(scale, z.abs());
    const MpFloat ten = MpFloat::from(10L, bits);
    return max(max(ten * rs.residual_bound, ten * rs.inclusion_radius),
               scale * MpFloat::pow2(8 - bits, bits));
}

bool conjugate_closed(const RootSet& rs, const MpFloat& tol) {
    const std::size_t n = rs.roots.size();
    std::vector<bool> matched(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (matched[i]) continue;
        const MpComplex target = rs.roots[i].conj();
        bool found = false;
        for (std::size_t j = i; j < n; ++j) {
            if (matched[j] && j != i) continue;
            if ((rs.roots[j] - target).abs() <= tol) {
                matched[i] = true;
                matched[j] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

namespace {

int out_digits(int bits) { return std::max(6, static_cast<int>(bits * 0.30103)); }

}  // namespace

void emit_csv(const RootSet& rs, std::ostream& out) {
    const int digits = out_digits(rs.precision_bits);
    out << "re,im\n";
    for (const auto& z : rs.roots)
        out << z.re.str(digits) << "," << z.im.str(digits) << "\n";
}

void emit_json(const RootSet& rs, std::ostream& out) {
    const int digits = out_digits(rs.precision_bits);
    out << "[";
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        if (i) out << ", ";
        out << "[\"" << rs.roots[i].re.str(digits) << "\", \"" << rs.roots[i].im.str(digits)
            << "\"]";
    }
    out << "]\n";
}

void emit_svg(const RootSet& rs, std::ostream& out) {
    double half = 1.0;
    for (const auto& z : rs.roots) {
        half = std::max(half, std::abs(z.re.to_double()));
        half = std::max(half, std::abs(z.im.to_double()));
    }
    half *= 1.05;  // 5% padding, symmetric about both axes

    std::ostringstream body;
    body << std::fixed << std::setprecision(8);
    body << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << -half << " " << -half
         << " " << 2 * half << " " << 2 * half << "\">\n";
    body << "  <rect x=\"" << -half << "\" y=\"" << -half << "\" width=\"" << 2 * half
         << "\" height=\"" << 2 * half << "\" fill=\"white\"/>\n";
    const double r = half / 120.0;
    for (const auto& z : rs.roots)
        body << "  <circle cx=\"" << z.re.to_double() << "\" cy=\"" << -z.im.to_double()
             << "\" r=\"" << r << "\" fill=\"black\"/>\n";
    body << "</svg>\n";
    out << body.str();
}

void emit(const RootSet& rs, const std::string& format, const std::string& path) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (path != "-") {
        file.open(path);
        if (!file) throw std::runtime_error("emit: cannot open " + path);
        out = &file;
    }
    if (format == "csv")
        emit_csv(rs, *out);
    else if (format == "json")
        emit_json(rs, *out);
    else if (format == "svg")
        emit_svg(rs, *out);
    else
        throw std::invalid_argument("emit: unknown format " + format);
    out->flush();
    if (out->fail()) throw std::runtime_error("emit: write failure");
}

}  // namespace mayachain
