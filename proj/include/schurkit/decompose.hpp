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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schurkit/eval.hpp"

namespace schurkit {

namespace detail {

inline PMatrix t_times_identity(long d) {
    PolyVars vars = make_vars({"T"});
    MPoly t = MPoly::variable(0, vars);
    PMatrix m(d, d, MPoly(vars));
    for (long i = 0; i < d; ++i) m(i, i) = t;
    return m;
}

inline PMatrix t_power_identity(long n, long dim) {
    PolyVars vars = make_vars({"T"});
    MPoly tn = MPoly::monomial(Rat(1), {static_cast<int>(n)}, vars);
    PMatrix m(dim, dim, MPoly(vars));
    for (long i = 0; i < dim; ++i) m(i, i) = tn;
    return m;
}

}  // namespace detail

/// Whether F(T I_d) = T^n I over Q[T], the scalar form of homogeneity of
/// degree n.
inline bool is_homogeneous(const FunctorExpr& f, long n, long d) {
    if (n < 0 || d < 0) throw std::invalid_argument("is_homogeneous: negative arguments");
    PMatrix a = apply_functor(f, detail::t_times_identity(d));
    return a == detail::t_power_identity(n, a.rows());
}

/// The degree n with F(T I_d) = T^n I, when one exists and the evaluation is
/// nonzero (a zero space is homogeneous of every degree and yields nullopt).
inline std::optional<long> homogeneous_degree(const FunctorExpr& f, long d) {
    PMatrix a = apply_functor(f, detail::t_times_identity(d));
    if (a.rows() == 0) return std::nullopt;
    const MPoly& first = a(0, 0);
    if (first.terms().size() != 1) return std::nullopt;
    const auto& [exps, coeff] = *first.terms().begin();
    if (coeff != Rat(1)) return std::nullopt;
    long n = exps[0];
    if (a == detail::t_power_identity(n, a.rows())) return n;
    return std::nullopt;
}

/// One homogeneous component of an operation at a fixed evaluation
/// dimension: its spectral projector and the subspace it cuts out.
struct HomogeneousPiece {
    long degree = 0;
    long ambient_dim = 0;
    QMatrix projector;
    Subspace basis;
};

/// Spectral decomposition of F(Q^d) into homogeneous components: Lagrange
/// projectors of A = F(2 I_d) for the spectrum {2^0, ..., 2^bound}. Only
/// pieces of positive rank are returned; the full projector family is
/// orthogonal and sums to the identity.
inline std::vector<HomogeneousPiece> homogeneous_pieces(const FunctorExpr& f, long d) {
    if (d < 0) throw std::invalid_argument("homogeneous_pieces: negative dimension");
    QMatrix a = apply_functor(f, QMatrix::identity(d) * Rat(2));
    long bound = degree_bound(f);
    std::vector<Rat> spectrum;
    for (long k = 0; k <= bound; ++k) spectrum.push_back(pow(Rat(2), k));
    std::vector<HomogeneousPiece> out;
    for (long nn = 0; nn <= bound; ++nn) {
        QMatrix p = lagrange_projector(a, spectrum, spectrum[static_cast<std::size_t>(nn)]);
        Subspace image = image_basis(p);
        if (image.dim() == 0) continue;
        out.push_back(HomogeneousPiece{nn, a.rows(), std::move(p), std::move(image)});
    }
    return out;
}

namespace detail {

inline QMatrix slot_doubling(const std::vector<long>& dims, std::size_t slot) {
    long total = 0;
    for (long d : dims) total += d;
    QMatrix m = QMatrix::identity(total);
    long off = 0;
    for (std::size_t j = 0; j < dims.size(); ++j) {
        if (j == slot)
            for (long r = 0; r < dims[j]; ++r) m(off + r, off + r) = Rat(2);
        off += dims[j];
    }
    return m;
}

/// Joint eigenspace projector for the commuting slot operators, without any
/// homogeneity validation; composed in slot order.
inline QMatrix multidegree_projector(const FunctorExpr& f, const std::vector<long>& dims,
                                     const std::vector<long>& multidegree, long max_degree) {
    std::vector<Rat> spectrum;
    for (long k = 0; k <= max_degree; ++k) spectrum.push_back(pow(Rat(2), k));
    long total = 0;
    for (long d : dims) total += d;
    QMatrix p = QMatrix::identity(functor_dim(f, total));
    for (std::size_t j = 0; j < dims.size(); ++j) {
        QMatrix bj = apply_functor(f, slot_doubling(dims, j));
        p = p * lagrange_projector(bj, spectrum, pow(Rat(2), multidegree[j]));
    }
    return p;
}

}  // namespace detail

/// Piece of F(Q^{d_1} + ... + Q^{d_n}) that is homogeneous of the given
/// multidegree, as a subspace. The multidegree must sum to the homogeneous
/// degree of F; pieces with a different total are provably zero and
/// rejected.
inline Subspace multidegree_piece(const FunctorExpr& f, const std::vector<long>& dims,
                                  const std::vector<long>& multidegree) {
    if (dims.size() != multidegree.size())
        throw std::invalid_argument("multidegree_piece: dims/multidegree length mismatch");
    for (long d : dims)
        if (d < 0) throw std::invalid_argument("multidegree_piece: negative dimension");
    for (long i : multidegree)
        if (i < 0) throw std::invalid_argument("multidegree_piece: negative multidegree");
    long total = 0;
    for (long d : dims) total += d;
    std::optional<long> n = homogeneous_degree(f, total);
    if (!n) {
        if (functor_dim(f, total) == 0) return Subspace{0, QMatrix(0, 0)};
        throw std::invalid_argument("multidegree_piece: expression is not homogeneous");
    }
    long sum = 0;
    for (long i : multidegree) sum += i;
    if (sum != *n) throw std::invalid_argument("multidegree outside total degree");
    QMatrix p = detail::multidegree_projector(f, dims, multidegree, *n);
    return image_basis(p);
}

/// Multilinear piece L_F(Q^{d_1}, ..., Q^{d_n}): the multidegree-(1,...,1)
/// component of F applied to the direct sum.
inline Subspace linearization(const FunctorExpr& f, const std::vector<long>& dims) {
    return multidegree_piece(f, dims, std::vector<long>(dims.size(), 1));
}

/// Permutation matrix sigma~ : Q^{d_1} + ... + Q^{d_n} ->
/// Q^{d_{sigma(1)}} + ... characterized by sigma~ . iota_{sigma(i)} = iota_i.
inline QMatrix block_permutation(const Perm& sigma, const std::vector<long>& dims) {
    if (static_cast<std::size_t>(sigma.size()) != dims.size())
        throw std::invalid_argument("block_permutation: length mismatch");
    long total = 0;
    std::vector<long> src_off(dims.size(), 0);
    for (std::size_t j = 0; j < dims.size(); ++j) {
        src_off[j] = total;
        total += dims[j];
    }
    QMatrix m(total, total);
    long tgt = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        long source_block = sigma(static_cast<int>(i));
        for (long r = 0; r < dims[static_cast<std::size_t>(source_block)]; ++r)
            m(tgt + r, src_off[static_cast<std::size_t>(source_block)] + r) = Rat(1);
        tgt += dims[static_cast<std::size_t>(source_block)];
    }
    return m;
}

/// The module V_F with its concrete inclusion into F(Q^n).
struct SymmetricModule {
    SymRep rep;
    Subspace inclusion;  // basis of L_F(Q,...,Q) inside F(Q^n)
};

namespace detail {

/// V_n of a (not necessarily homogeneous) operation: the multidegree
/// (1,...,1) subspace of F(Q^n) with the right action of block
/// permutations, restricted along its inclusion.
inline SymmetricModule symmetric_module_of_degree(const FunctorExpr& f, long n) {
    if (n < 0) throw std::invalid_argument("symmetric_module: negative degree");
    std::vector<long> ones(static_cast<std::size_t>(n), 1);
    Subspace incl;
    if (n == 0) {
        long dim0 = functor_dim(f, 0);
        incl = Subspace{dim0, QMatrix::identity(dim0)};
    } else {
        QMatrix p = multidegree_projector(f, ones, ones, degree_bound(f));
        incl = image_basis(p);
    }
    long v = incl.dim();
    std::vector<QMatrix> gens;
    for (int i = 0; i + 1 < n; ++i) {
        QMatrix moved =
            apply_functor(f, block_permutation(Perm::transposition(static_cast<int>(n), i), ones)) *
            incl.basis;
        auto rho = solve(incl.basis, moved);
        if (!rho)
            throw std::logic_error(
                "symmetric_module: block permutation does not preserve the linearization");
        gens.push_back(std::move(*rho));
    }
    return SymmetricModule{SymRep(static_cast<int>(n), v, std::move(gens)), std::move(incl)};
}

}  // namespace detail

/// V_F with its inclusion, for a homogeneous operation.
inline SymmetricModule symmetric_module_full(const FunctorExpr& f) {
    long probe = std::max(degree_bound(f), 1L);
    std::optional<long> n = homogeneous_degree(f, probe);
    if (!n)
        throw std::invalid_argument("symmetric_module: expression is not homogeneous");
    return detail::symmetric_module_of_degree(f, *n);
}

/// The right Sigma_n-module V_F of a homogeneous operation of degree n.
inline SymRep symmetric_module(const FunctorExpr& f) { return symmetric_module_full(f).rep; }

/// Full classification data of one degree.
struct ClassifiedPiece {
    long degree;
    SymRep module;
    std::map<Partition, long long> mults;  // only positive multiplicities
};

struct ClassifiedOperation {
    std::vector<ClassifiedPiece> pieces;  // ascending degree, V_n != 0 only
};

/// Decompose an operation into degrees and Specht multiplicities: find the
/// nonzero homogeneous components at d = max(degree_bound, 1) (sufficient,
/// since V_n embeds at dimension n <= d), then extract V_n and its
/// multiplicities per degree.
inline ClassifiedOperation classify(const FunctorExpr& f) {
    long d = std::max(degree_bound(f), 1L);
    ClassifiedOperation out;
    for (const HomogeneousPiece& piece : homogeneous_pieces(f, d)) {
        SymmetricModule vn = detail::symmetric_module_of_degree(f, piece.degree);
        if (vn.rep.dim() == 0) continue;
        std::map<Partition, long long> pos;
        for (const auto& [lambda, m] : multiplicities(vn.rep))
            if (m > 0) pos[lambda] = m;
        out.pieces.push_back(ClassifiedPiece{piece.degree, std::move(vn.rep), std::move(pos)});
    }
    return out;
}

/// For each evaluation dimension d up to the longest partition present:
/// which partitions of length <= d appear with positive multiplicity. For
/// the finite classifications representable here the lists are always
/// finite; the report surfaces the length profile.
inline std::map<long, std::vector<Partition>> boundedness_report(const ClassifiedOperation& c) {
    int maxlen = 0;
    std::vector<Partition> present;
    for (const ClassifiedPiece& p : c.pieces)
        for (const auto& [lambda, m] : p.mults) {
            present.push_back(lambda);
            maxlen = std::max(maxlen, lambda.length());
        }
    std::sort(present.begin(), present.end());
    std::map<long, std::vector<Partition>> out;
    for (int d = 0; d <= maxlen; ++d) {
        std::vector<Partition> fitting;
        for (const Partition& lambda : present)
            if (lambda.length() <= d) fitting.push_back(lambda);
        out[d] = std::move(fitting);
    }
    return out;
}

}  // namespace schurkit
