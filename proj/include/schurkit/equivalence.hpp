/*
   Copyright 2026 The SchurKit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schurkit/decompose.hpp"
#include "schurkit/rng.hpp"

namespace schurkit {

/// Verification record for one comparison isomorphism: the alpha matrices
/// per evaluation dimension, the exactness of each naturality square, and
/// the seed of the random-map generator for reproducibility.
struct ComparisonReport {
    struct DimCheck {
        long d;
        QMatrix alpha;
        bool invertible;
    };
    struct NatCheck {
        std::string what;
        bool exact;
    };

    std::string subject;
    std::vector<DimCheck> per_dim;
    std::vector<NatCheck> naturality;
    bool verdict = true;
    std::uint64_t seed = 0;
    std::string diagnostic;
};

namespace detail {

/// d x n matrix [e_{t_1} | ... | e_{t_n}] of column picks; the composite of
/// the codiagonal with the block inclusion of a basis tuple.
inline QMatrix tuple_columns(const std::vector<int>& t, long d) {
    QMatrix m(d, static_cast<long>(t.size()));
    for (std::size_t i = 0; i < t.size(); ++i)
        m(t[i], static_cast<long>(i)) = Rat(1);
    return m;
}

/// alpha_d : S_{V_F}(Q^d) -> F(Q^d) assembled orbit by orbit. The column of
/// an invariant basis vector sum_t block_t(.,j) x e_t is
/// sum_t F([e_{t_1}|...|e_{t_n}]) B block_t(.,j), which is the chain
/// "canonical multilinear map, then F(codiagonal)" restricted along the
/// averaging-idempotent image.
inline QMatrix schur_to_functor(const FunctorExpr& f, const SymmetricModule& vf,
                                const SchurBasis& basis, long d) {
    long nd = functor_dim(f, d);
    QMatrix alpha(nd, basis.dim());
    for (std::size_t oi = 0; oi < basis.orbits().size(); ++oi) {
        const SchurBasis::Orbit& o = basis.orbits()[oi];
        long k = o.vh_basis.cols();
        if (k == 0) continue;
        QMatrix block(nd, k);
        for (std::size_t ti = 0; ti < o.tuples.size(); ++ti) {
            QMatrix ct = apply_functor(f, tuple_columns(o.tuples[ti], d)) * vf.inclusion.basis;
            block += ct * o.blocks[ti];
        }
        for (long r = 0; r < nd; ++r)
            for (long j = 0; j < k; ++j) alpha(r, basis.offset(oi) + j) = block(r, j);
    }
    return alpha;
}

}  // namespace detail

/// Canonical map V_F x Q^{d_1} x ... x Q^{d_n} -> F(Q^{d_1 + ... + d_n}),
/// v x (m_1 x ... x m_n) |-> F(m_1 + ... + m_n)(v). Its image is the
/// linearization, and it is injective.
inline QMatrix multilinear_canonical(const FunctorExpr& f, const std::vector<long>& dims) {
    long n = static_cast<long>(dims.size());
    std::optional<long> deg = homogeneous_degree(f, std::max(degree_bound(f), 1L));
    if (!deg || *deg != n)
        throw std::invalid_argument("multilinear_canonical: expression is not homogeneous of the arity");
    SymmetricModule vf = symmetric_module_full(f);
    long v = vf.rep.dim();
    long total = 0;
    for (long d : dims) total += d;
    long prod = 1;
    for (long d : dims) prod *= d;
    QMatrix out(functor_dim(f, total), v * prod);
    if (prod == 0) return out;

    std::vector<long> offsets(dims.size(), 0);
    for (std::size_t i = 1; i < dims.size(); ++i) offsets[i] = offsets[i - 1] + dims[i - 1];

    std::vector<long> t(dims.size(), 0);
    long tuple_idx = 0;
    while (true) {
        QMatrix g(total, n);
        for (std::size_t i = 0; i < dims.size(); ++i) g(offsets[i] + t[i], static_cast<long>(i)) = Rat(1);
        QMatrix cols = apply_functor(f, g) * vf.inclusion.basis;  // ambient x v
        for (long a = 0; a < v; ++a) out.set_col(a * prod + tuple_idx, cols.col(a));
        // advance mixed-radix tuple, last index fastest
        long i = n - 1;
        while (i >= 0 && t[static_cast<std::size_t>(i)] == dims[static_cast<std::size_t>(i)] - 1) {
            t[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++t[static_cast<std::size_t>(i)];
        ++tuple_idx;
    }
    return out;
}

/// Explicit isomorphism S_{V_F} ~ F: for each d up to d_max, build
/// alpha_d : S_{V_F}(Q^d) -> F(Q^d) through the canonical multilinear map,
/// the averaging identification of coinvariants with invariants, and
/// F(codiagonal); check invertibility, then exact naturality against three
/// seeded random maps per dimension.
inline ComparisonReport schur_comparison(const FunctorExpr& f, long d_max,
                                         std::uint64_t seed = 20260808) {
    if (d_max < 1) throw std::invalid_argument("schur_comparison: d_max must be >= 1");
    ComparisonReport report;
    report.subject = "S_{V_F} ~ F for F = " + f.str();
    report.seed = seed;
    std::optional<long> deg = homogeneous_degree(f, std::max(degree_bound(f), 1L));
    if (!deg) throw std::invalid_argument("schur_comparison: expression is not homogeneous");
    SymmetricModule vf = symmetric_module_full(f);

    std::vector<QMatrix> alphas;
    for (long d = 1; d <= d_max; ++d) {
        auto basis = schur_basis(vf.rep, static_cast<int>(d));
        long nd = functor_dim(f, d);
        if (basis->dim() != nd) {
            report.verdict = false;
            report.diagnostic = "dimension mismatch at d = " + std::to_string(d) + ": S_V gives " +
                                std::to_string(basis->dim()) + ", F gives " + std::to_string(nd);
            report.per_dim.push_back({d, QMatrix(nd, basis->dim()), false});
            alphas.push_back(QMatrix(nd, basis->dim()));
            continue;
        }
        QMatrix alpha = detail::schur_to_functor(f, vf, *basis, d);
        bool inv = is_invertible(alpha);
        if (!inv) report.verdict = false;
        alphas.push_back(alpha);
        report.per_dim.push_back({d, std::move(alpha), inv});
    }

    Rng rng(seed);
    for (long d = 1; d <= d_max; ++d) {
        long e = d < d_max ? d + 1 : 1;
        auto src = schur_basis(vf.rep, static_cast<int>(d));
        auto tgt = schur_basis(vf.rep, static_cast<int>(e));
        for (int i = 0; i < 3; ++i) {
            QMatrix fmap = rng.int_matrix(e, d);
            QMatrix lhs = alphas[static_cast<std::size_t>(e - 1)] * src->induced_map(fmap, *tgt);
            QMatrix rhs = apply_functor(f, fmap) * alphas[static_cast<std::size_t>(d - 1)];
            bool exact = lhs == rhs;
            if (!exact) report.verdict = false;
            report.naturality.push_back(
                {"f" + std::to_string(i) + ": Q^" + std::to_string(d) + " -> Q^" + std::to_string(e),
                 exact});
        }
    }
    return report;
}

/// Explicit isomorphism V ~ V_{S_V}: alpha(v) is the class of
/// v x (e_1 x ... x e_n) in S_V(Q^n), viewed inside the linearization of
/// the Schur operation. Checks bijectivity and exact right-equivariance.
inline ComparisonReport module_comparison(const SymRep& v_rep) {
    ComparisonReport report;
    int n = v_rep.n();
    long v = v_rep.dim();
    report.subject =
        "V ~ V_{S_V} for V of Sigma_" + std::to_string(n) + ", dim " + std::to_string(v);

    FunctorExpr f = FunctorExpr::schur(v_rep);
    SymmetricModule vsv = symmetric_module_full(f);
    auto basis = schur_basis(v_rep, n);

    // Averaged image of v x (e_1 x ... x e_n), one ambient column per basis
    // vector of V.
    long dn = 1;
    for (int i = 0; i < n; ++i) dn *= n;
    QMatrix ambient(v * dn, v);
    std::vector<int> base_tuple(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) base_tuple[static_cast<std::size_t>(i)] = i;
    for (const Perm& sigma : all_perms(n)) {
        QMatrix rho = v_rep.action(sigma);
        long tidx = detail::tuple_index(detail::act_on_tuple(sigma.inverse(), base_tuple), n);
        for (long a = 0; a < v; ++a)
            for (long b = 0; b < v; ++b) {
                if (rho(b, a).is_zero()) continue;
                ambient(b * dn + tidx, a) += rho(b, a);
            }
    }
    ambient *= Rat(mpz_class(1), factorial(n));

    QMatrix coords = basis->coords_of_invariant(ambient);
    auto alpha = solve(vsv.inclusion.basis, coords);
    if (!alpha) {
        report.verdict = false;
        report.diagnostic = "alpha image is not inside the linearization";
        return report;
    }
    bool inv = is_invertible(*alpha);
    if (!inv) report.verdict = false;
    report.per_dim.push_back({n, *alpha, inv});

    // Right-equivariance alpha(v sigma) = alpha(v) sigma; exhaustive for
    // n <= 4, on the generators otherwise.
    std::vector<Perm> elems;
    if (n <= 4) elems = all_perms(n);
    else
        for (int i = 0; i + 1 < n; ++i) elems.push_back(Perm::transposition(n, i));
    for (const Perm& sigma : elems) {
        bool exact = *alpha * v_rep.action(sigma) == vsv.rep.action(sigma) * *alpha;
        if (!exact) report.verdict = false;
        report.naturality.push_back({"equivariance", exact});
    }
    return report;
}

/// Every matrix entry of F(T_1 f_1 + ... + T_m f_m) is a homogeneous
/// polynomial of total degree n (or zero), n the homogeneous degree of F.
inline bool polarization_check(const FunctorExpr& f, long d, const std::vector<QMatrix>& samples) {
    std::optional<long> n = homogeneous_degree(f, std::max(degree_bound(f), 1L));
    if (!n) throw std::invalid_argument("polarization_check: expression is not homogeneous");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < samples.size(); ++i) names.push_back("T" + std::to_string(i + 1));
    PolyVars vars = make_vars(names);
    PMatrix m(d, d, MPoly(vars));
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (samples[i].rows() != d || samples[i].cols() != d)
            throw std::invalid_argument("polarization_check: sample maps must be d x d");
        m += embed(samples[i], vars) * MPoly::variable(i, vars);
    }
    PMatrix value = apply_functor(f, m);
    for (long r = 0; r < value.rows(); ++r)
        for (long c = 0; c < value.cols(); ++c) {
            const MPoly& entry = value(r, c);
            if (!entry.is_zero() && !entry.is_homogeneous(static_cast<int>(*n))) return false;
        }
    return true;
}

/// Degree-1 operations are additive: checks exact additivity on three
/// seeded random pairs and the two-variable polynomial identity
/// F(T_1 f + T_2 g) = T_1 F(f) + T_2 F(g).
inline bool linearity_check(const FunctorExpr& fx, long d, long e, std::uint64_t seed = 20260808) {
    std::optional<long> n = homogeneous_degree(fx, std::max({degree_bound(fx), d, 1L}));
    if (!n || *n != 1)
        throw std::invalid_argument("linearity_check: expression is not homogeneous of degree 1");
    Rng rng(seed);
    PolyVars vars = make_vars({"T1", "T2"});
    for (int i = 0; i < 3; ++i) {
        QMatrix f = rng.int_matrix(e, d);
        QMatrix g = rng.int_matrix(e, d);
        if (apply_functor(fx, f + g) != apply_functor(fx, f) + apply_functor(fx, g)) return false;
        PMatrix mixed = embed(f, vars) * MPoly::variable(0, vars) +
                        embed(g, vars) * MPoly::variable(1, vars);
        PMatrix expect = embed(apply_functor(fx, f), vars) * MPoly::variable(0, vars) +
                         embed(apply_functor(fx, g), vars) * MPoly::variable(1, vars);
        if (apply_functor(fx, mixed) != expect) return false;
    }
    return true;
}

/// Explicit isomorphism of operations F ~ G at evaluation dimension d,
/// routed through the module equivalence: an intertwiner V_F ~ V_G is
/// transported along the Schur realization and composed with the two alpha
/// maps. Returns nullopt when V_F and V_G are not isomorphic.
inline std::optional<QMatrix> operation_isomorphism(const FunctorExpr& f, const FunctorExpr& g,
                                                    long d) {
    SymmetricModule vf = symmetric_module_full(f);
    SymmetricModule vg = symmetric_module_full(g);
    if (vf.rep.n() != vg.rep.n()) return std::nullopt;
    auto t = rep_isomorphism(vf.rep, vg.rep);
    if (!t) return std::nullopt;
    auto bf = schur_basis(vf.rep, static_cast<int>(d));
    auto bg = schur_basis(vg.rep, static_cast<int>(d));
    // Transport S_T : S_{V_F}(Q^d) -> S_{V_G}(Q^d): orbitwise, the invariant
    // coefficients at the representative transform by T.
    QMatrix transport(bg->dim(), bf->dim());
    for (std::size_t oi = 0; oi < bf->orbits().size(); ++oi) {
        const auto& of = bf->orbits()[oi];
        const auto& og = bg->orbits()[oi];
        if (of.vh_basis.cols() == 0) continue;
        QMatrix block = og.vh_solve * (*t * of.vh_basis);
        for (long r = 0; r < block.rows(); ++r)
            for (long c = 0; c < block.cols(); ++c)
                transport(bg->offset(oi) + r, bf->offset(oi) + c) = block(r, c);
    }
    QMatrix alpha_f = detail::schur_to_functor(f, vf, *bf, d);
    QMatrix alpha_g = detail::schur_to_functor(g, vg, *bg, d);
    auto alpha_f_inv = inverse(alpha_f);
    if (!alpha_f_inv) return std::nullopt;
    return alpha_g * transport * *alpha_f_inv;
}

}  // namespace schurkit
