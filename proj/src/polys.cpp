#include "confdet/polys.hpp"

#include <string>

namespace confdet {

int CPoly::degree() const {
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
        if (coeffs[k] != Complex(0.0)) return k;
    return -1;
}

CPoly linear_factor(const Spinor& s, int n) {
    CPoly p(n);
    p.coeffs[0] = -s.v;
    p.coeffs[1] = s.u;
    return p;
}

CPoly poly_multiply(const CPoly& a, const CPoly& b) {
    if (a.n != b.n) throw DimensionMismatch("polynomial ambient sizes differ");
    const int da = a.degree();
    const int db = b.degree();
    CPoly out(a.n);
    if (da < 0 || db < 0) return out;  // zero polynomial
    const int bound = 2 * a.n - 1;
    if (da + db > bound)
        throw DegreeOverflow("product degree " + std::to_string(da + db) +
                             " exceeds bound " + std::to_string(bound));
    for (int i = 0; i <= da; ++i) {
        if (a.coeffs[i] == Complex(0.0)) continue;
        for (int j = 0; j <= db; ++j)
            out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return out;
}

CPoly j_map(const CPoly& p) {
    const int len = 2 * p.n;
    CPoly out(p.n);
    for (int k = 0; k < len; ++k) {
        const double sign = (k % 2 == 0) ? -1.0 : 1.0;  // (-1)^(k+1)
        out.coeffs[k] = sign * std::conj(p.coeffs[len - 1 - k]);
    }
    return out;
}

std::size_t DirectionTable::pair_index(int r, int s) {
    // r < s; pairs enumerated (0,1),(0,2),(1,2),(0,3),...
    return static_cast<std::size_t>(s) * (s - 1) / 2 + r;
}

const Spinor& DirectionTable::lookup(int r, int s, int sign_r, int sign_s) const {
    return const_cast<DirectionTable*>(this)->lookup(r, s, sign_r, sign_s);
}

Spinor& DirectionTable::lookup(int r, int s, int sign_r, int sign_s) {
    if (r == s || r < 0 || s < 0 || r >= n || s >= n)
        throw DimensionMismatch("pair lookup needs distinct indices in range");
    if (r > s) {
        // sign_r*x_r + sign_s*x_s read with the smaller index first.
        std::swap(r, s);
        std::swap(sign_r, sign_s);
    }
    const std::size_t k = pair_index(r, s);
    if (sign_r > 0) return sign_s > 0 ? pair_pp[k] : pair_pm[k];
    return sign_s > 0 ? pair_mp[k] : pair_mm[k];
}

const Spinor& DirectionTable::single(int r, int sign) const {
    if (r < 0 || r >= n) throw DimensionMismatch("single lookup out of range");
    return sign > 0 ? single_plus[r] : single_minus[r];
}

DirectionTable build_direction_table(const Configuration& c) {
    const int n = c.n();
    DirectionTable tbl;
    tbl.n = n;
    tbl.single_minus.resize(n);
    tbl.single_plus.resize(n);
    const std::size_t npairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    tbl.pair_pp.resize(npairs);
    tbl.pair_mm.resize(npairs);
    tbl.pair_pm.resize(npairs);
    tbl.pair_mp.resize(npairs);
    for (int r = 0; r < n; ++r) {
        const Vec3 d = c.points[r].normalized();
        tbl.single_plus[r] = lift(d);
        tbl.single_minus[r] = lift(-d);
    }
    for (int s = 1; s < n; ++s) {
        for (int r = 0; r < s; ++r) {
            const std::size_t k = DirectionTable::pair_index(r, s);
            const Vec3 sum = (c.points[r] + c.points[s]).normalized();
            const Vec3 diff = (c.points[r] - c.points[s]).normalized();
            tbl.pair_pp[k] = lift(sum);
            tbl.pair_mm[k] = lift(-sum);
            tbl.pair_pm[k] = lift(diff);
            tbl.pair_mp[k] = lift(-diff);
        }
    }
    return tbl;
}

namespace {
CPoly build_product(int r, const DirectionTable& tbl, int base_sign) {
    // base_sign -1 builds p_r, +1 builds q_r. Fixed accumulation order: the
    // single factor, then the s-sign +1 block, then the s-sign -1 block, s
    // ascending in each. Flipping x_r maps the blocks of p_r onto those of q_r
    // in this same order, so that rebuild is bit-exact.
    const int n = tbl.n;
    CPoly acc = linear_factor(tbl.single(r, base_sign), n);
    for (int s = 0; s < n; ++s) {
        if (s == r) continue;
        acc = poly_multiply(acc, linear_factor(tbl.lookup(r, s, base_sign, +1), n));
    }
    for (int s = 0; s < n; ++s) {
        if (s == r) continue;
        acc = poly_multiply(acc, linear_factor(tbl.lookup(r, s, base_sign, -1), n));
    }
    return acc;
}
}  // namespace

CPoly build_p(int r, const DirectionTable& tbl) { return build_product(r, tbl, -1); }

CPoly build_q(int r, const DirectionTable& tbl) { return build_product(r, tbl, +1); }

}  // namespace confdet
