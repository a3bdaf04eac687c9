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
#include <memory>
#include <vector>

#include "schurkit/functor.hpp"
#include "schurkit/matrix.hpp"

namespace schurkit {

namespace detail {

/// All tuples in [0,d)^n in lexicographic order.
inline std::vector<std::vector<int>> enumerate_tuples(int d, int n) {
    std::vector<std::vector<int>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    if (d == 0) return out;
    std::vector<int> t(n, 0);
    while (true) {
        out.push_back(t);
        int i = n - 1;
        while (i >= 0 && t[i] == d - 1) { t[i] = 0; --i; }
        if (i < 0) break;
        ++t[i];
    }
    return out;
}

/// Weakly increasing tuples (multisets) in lexicographic order; the basis
/// order shared by Sym^n and Gamma^n.
inline std::vector<std::vector<int>> enumerate_multisets(int d, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> t;
    auto rec = [&](auto&& self, int lo, int rest) -> void {
        if (rest == 0) {
            out.push_back(t);
            return;
        }
        for (int v = lo; v < d; ++v) {
            t.push_back(v);
            self(self, v, rest - 1);
            t.pop_back();
        }
    };
    rec(rec, 0, n);
    return out;
}

/// Strictly increasing tuples in lexicographic order; the Wedge^n basis.
inline std::vector<std::vector<int>> enumerate_subsets(int d, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> t;
    auto rec = [&](auto&& self, int lo, int rest) -> void {
        if (rest == 0) {
            out.push_back(t);
            return;
        }
        for (int v = lo; v + rest <= d; ++v) {
            t.push_back(v);
            self(self, v + 1, rest - 1);
            t.pop_back();
        }
    };
    rec(rec, 0, n);
    return out;
}

inline long tuple_index(const std::vector<int>& t, int d) {
    long idx = 0;
    for (int v : t) idx = idx * d + v;
    return idx;
}

/// Left place-permutation action on tuples:
/// sigma . (t_1,...,t_n) has entry t_{sigma^{-1}(i)} at position i.
inline std::vector<int> act_on_tuple(const Perm& sigma, const std::vector<int>& t) {
    std::vector<int> r(t.size());
    Perm inv = sigma.inverse();
    for (std::size_t i = 0; i < t.size(); ++i) r[i] = t[static_cast<std::size_t>(inv(static_cast<int>(i)))];
    return r;
}

/// The permutation taking tuple t to its sorted representative under the
/// place action: sigma . t = sorted(t). Equal values are matched in order
/// of occurrence, which makes the choice deterministic; any two choices
/// differ by the stabilizer of the representative.
inline Perm sorting_perm(const std::vector<int>& t) {
    int n = static_cast<int>(t.size());
    std::vector<int> rep = t;
    std::sort(rep.begin(), rep.end());
    // sigma(j) = i with rep_i = t_j; the k-th occurrence of a value in t is
    // matched with its k-th occurrence in rep.
    std::size_t nvalues = rep.empty() ? 0 : static_cast<std::size_t>(rep.back()) + 1;
    std::vector<std::vector<int>> positions(nvalues);
    std::vector<std::size_t> cursor(nvalues, 0);
    for (int i = 0; i < n; ++i) positions[static_cast<std::size_t>(rep[i])].push_back(i);
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        std::size_t v = static_cast<std::size_t>(t[static_cast<std::size_t>(j)]);
        im[static_cast<std::size_t>(j)] = positions[v][cursor[v]++];
    }
    return Perm(std::move(im));
}

template <class C>
C coeff_as(const Rat& r, const C& proto) {
    if constexpr (std::is_same_v<C, Rat>) {
        (void)proto;
        return r;
    } else {
        return MPoly::constant(r, proto.vars());
    }
}

}  // namespace detail

/// Matrix of the left action of sigma on (Q^d)^{tensor n} permuting tensor
/// factors: sigma . (m_1 x ... x m_n) = m_{sigma^{-1}(1)} x ... x m_{sigma^{-1}(n)}.
inline QMatrix tensor_power_action(const Perm& sigma, int d) {
    auto tuples = detail::enumerate_tuples(d, sigma.size());
    long dim = static_cast<long>(tuples.size());
    if (sigma.size() > 0 && d == 0) dim = 0;
    QMatrix m(dim, dim);
    for (long j = 0; j < dim; ++j) {
        std::vector<int> image = detail::act_on_tuple(sigma, tuples[static_cast<std::size_t>(j)]);
        m(detail::tuple_index(image, d), j) = Rat(1);
    }
    return m;
}

/// Orbit-wise model of the Schur space S_V(Q^d), the image of the averaging
/// idempotent on V x (Q^d)^{tensor n}. Per orbit of tuples the invariants
/// are parametrized by the fixed space of the orbit stabilizer, so basis
/// vectors are sparse and coordinates are recovered from the coefficients at
/// the representative tuple alone.
class SchurBasis {
  public:
    struct Orbit {
        std::vector<int> rep;
        std::vector<std::vector<int>> tuples;  // lex order; tuples[0] == rep
        QMatrix vh_basis;                      // v x k, basis of V^H
        QMatrix vh_solve;                      // k x v, left inverse of vh_basis
        std::vector<QMatrix> blocks;           // per tuple: rho(sigma_t) * vh_basis
    };

    SchurBasis(const SymRep& V, int d) : n_(V.n()), d_(d), v_(V.dim()) {
        for (const auto& rep : detail::enumerate_multisets(d, n_)) {
            Orbit o;
            o.rep = rep;
            o.tuples.push_back(rep);
            {
                std::vector<int> t = rep;
                while (std::next_permutation(t.begin(), t.end())) o.tuples.push_back(t);
            }
            // Stabilizer generators: adjacent transpositions fixing the
            // sorted representative.
            std::vector<QMatrix> constraints;
            for (int i = 0; i + 1 < n_; ++i)
                if (rep[static_cast<std::size_t>(i)] == rep[static_cast<std::size_t>(i + 1)])
                    constraints.push_back(V.action(Perm::transposition(n_, i)) -
                                          QMatrix::identity(v_));
            if (constraints.empty()) {
                o.vh_basis = QMatrix::identity(v_);
                o.vh_solve = QMatrix::identity(v_);
            } else {
                QMatrix stacked = constraints[0];
                for (std::size_t i = 1; i < constraints.size(); ++i)
                    stacked = vstack(stacked, constraints[i]);
                o.vh_basis = kernel_basis(stacked).basis;
                RrefResult rr = rref(hstack(o.vh_basis, QMatrix::identity(v_)));
                QMatrix solve_rows(o.vh_basis.cols(), v_);
                for (long r = 0; r < o.vh_basis.cols(); ++r)
                    for (long c = 0; c < v_; ++c)
                        solve_rows(r, c) = rr.reduced(r, o.vh_basis.cols() + c);
                o.vh_solve = std::move(solve_rows);
            }
            if (o.vh_basis.cols() == 0) {
                offsets_.push_back(dim_);
                o.blocks.assign(o.tuples.size(), QMatrix(v_, 0));
                orbits_.push_back(std::move(o));
                continue;
            }
            for (const auto& t : o.tuples) {
                Perm sigma = detail::sorting_perm(t);
                o.blocks.push_back(V.action(sigma) * o.vh_basis);
            }
            offsets_.push_back(dim_);
            dim_ += o.vh_basis.cols();
            orbits_.push_back(std::move(o));
        }
    }

    int n() const { return n_; }
    int d() const { return d_; }
    long v() const { return v_; }
    long dim() const { return dim_; }
    long ambient_dim() const {
        long dn = 1;
        for (int i = 0; i < n_; ++i) dn *= d_;
        return v_ * dn;
    }
    const std::vector<Orbit>& orbits() const { return orbits_; }
    long offset(std::size_t orbit) const { return offsets_[orbit]; }

    /// Dense basis of the invariant subspace inside V x (Q^d)^{tensor n}
    /// with index (a, t) |-> a * d^n + t.
    QMatrix dense_basis() const {
        long dn = ambient_dim() / std::max<long>(v_, 1);
        if (v_ == 0) dn = 0;
        QMatrix b(ambient_dim(), dim_);
        for (std::size_t oi = 0; oi < orbits_.size(); ++oi) {
            const Orbit& o = orbits_[oi];
            long k = o.vh_basis.cols();
            for (std::size_t ti = 0; ti < o.tuples.size(); ++ti) {
                long t = detail::tuple_index(o.tuples[ti], d_);
                for (long a = 0; a < v_; ++a)
                    for (long j = 0; j < k; ++j)
                        b(a * dn + t, offsets_[oi] + j) = o.blocks[ti](a, j);
            }
        }
        return b;
    }

    /// Coordinates of invariant ambient columns in this basis, read off at
    /// the representative tuples of each orbit.
    QMatrix coords_of_invariant(const QMatrix& ambient) const {
        long dn = 1;
        for (int i = 0; i < n_; ++i) dn *= d_;
        if (ambient.rows() != v_ * dn)
            throw std::invalid_argument("SchurBasis: ambient dimension mismatch");
        QMatrix out(dim_, ambient.cols());
        for (std::size_t oi = 0; oi < orbits_.size(); ++oi) {
            const Orbit& o = orbits_[oi];
            long k = o.vh_basis.cols();
            if (k == 0) continue;
            long t = detail::tuple_index(o.rep, d_);
            QMatrix rep_rows(v_, ambient.cols());
            for (long a = 0; a < v_; ++a)
                for (long c = 0; c < ambient.cols(); ++c) rep_rows(a, c) = ambient(a * dn + t, c);
            QMatrix coords = o.vh_solve * rep_rows;
            for (long j = 0; j < k; ++j)
                for (long c = 0; c < ambient.cols(); ++c) out(offsets_[oi] + j, c) = coords(j, c);
        }
        return out;
    }

    /// Matrix of S_V(f) in the bases of *this (source) and target: conjugate
    /// 1_V x f^{tensor n} to the orbit bases. Works over Rat and MPoly.
    template <class C>
    RMatrix<C> induced_map(const RMatrix<C>& f, const SchurBasis& target) const {
        if (target.n_ != n_ || target.v_ != v_)
            throw std::invalid_argument("SchurBasis: incompatible target");
        if (f.cols() != d_ || f.rows() != target.d_)
            throw std::invalid_argument("SchurBasis: matrix shape mismatch");
        const C& proto = f.zero_proto();
        RMatrix<C> out(target.dim_, dim_, proto);
        for (std::size_t so = 0; so < orbits_.size(); ++so) {
            const Orbit& src = orbits_[so];
            long k = src.vh_basis.cols();
            if (k == 0) continue;
            for (std::size_t to = 0; to < target.orbits_.size(); ++to) {
                const Orbit& tgt = target.orbits_[to];
                long kt = tgt.vh_basis.cols();
                if (kt == 0) continue;
                // Z = sum_t (prod_i f(rep'_i, t_i)) * rho(sigma_t) W, a v x k
                // block of coefficients at the target representative.
                RMatrix<C> z(v_, k, proto);
                bool any = false;
                for (std::size_t ti = 0; ti < src.tuples.size(); ++ti) {
                    const auto& t = src.tuples[ti];
                    C factor = detail::coeff_as<C>(Rat(1), proto);
                    bool zero = false;
                    for (int i = 0; i < n_; ++i) {
                        const C& entry = f(tgt.rep[static_cast<std::size_t>(i)],
                                           t[static_cast<std::size_t>(i)]);
                        if (is_zero(entry)) { zero = true; break; }
                        factor = factor * entry;
                    }
                    if (zero) continue;
                    any = true;
                    const QMatrix& blk = src.blocks[ti];
                    for (long a = 0; a < v_; ++a)
                        for (long j = 0; j < k; ++j) {
                            if (blk(a, j).is_zero()) continue;
                            z(a, j) += factor * detail::coeff_as<C>(blk(a, j), proto);
                        }
                }
                if (!any) continue;
                // coords = vh_solve' * Z over C.
                for (long r = 0; r < kt; ++r)
                    for (long a = 0; a < v_; ++a) {
                        const Rat& s = tgt.vh_solve(r, a);
                        if (s.is_zero()) continue;
                        C sc = detail::coeff_as<C>(s, proto);
                        for (long j = 0; j < k; ++j) {
                            if (is_zero(z(a, j))) continue;
                            out(target.offsets_[to] + r, offsets_[so] + j) += z(a, j) * sc;
                        }
                    }
            }
        }
        return out;
    }

  private:
    int n_;
    int d_;
    long v_;
    long dim_ = 0;
    std::vector<Orbit> orbits_;
    std::vector<long> offsets_;
};

/// Access to the per-representation cache of Schur bases. Bases are
/// deterministic, so concurrent duplicate construction is harmless; the map
/// itself is guarded by the representation's mutex.
class SchurBasisCacheAccess {
  public:
    static std::shared_ptr<const SchurBasis> get(const SymRep& rep, int d) {
        auto data = rep.data_;
        {
            std::lock_guard<std::mutex> lock(data->mu);
            auto it = data->schur_cache.find(d);
            if (it != data->schur_cache.end())
                return std::static_pointer_cast<const SchurBasis>(it->second);
        }
        auto built = std::make_shared<const SchurBasis>(rep, d);
        std::lock_guard<std::mutex> lock(data->mu);
        auto [it, inserted] = data->schur_cache.emplace(d, built);
        return std::static_pointer_cast<const SchurBasis>(it->second);
    }
};

inline std::shared_ptr<const SchurBasis> schur_basis(const SymRep& rep, int d) {
    return SchurBasisCacheAccess::get(rep, d);
}

/// Dimension function of the evaluated operation.
inline long functor_dim(const FunctorExpr& e, long d) {
    using K = FunctorExpr::Kind;
    if (d < 0) throw std::invalid_argument("functor_dim: negative dimension");
    switch (e.kind()) {
        case K::Const: return e.param();
        case K::Id: return d;
        case K::TensorPow: {
            long r = 1;
            for (long i = 0; i < e.param(); ++i) r *= d;
            return r;
        }
        case K::SymPow:
        case K::GammaPow: return e.param() == 0 ? 1 : binomial(d + e.param() - 1, e.param());
        case K::WedgePow: return binomial(d, e.param());
        case K::Schur: return schur_basis(e.schur_rep(), static_cast<int>(d))->dim();
        case K::Sum: {
            long s = 0;
            for (const auto& c : e.children()) s += functor_dim(c, d);
            return s;
        }
        case K::TensorProd: {
            long p = 1;
            for (const auto& c : e.children()) p *= functor_dim(c, d);
            return p;
        }
        case K::Compose: return functor_dim(e.children()[0], functor_dim(e.children()[1], d));
    }
    return 0;
}

namespace detail {

template <class C>
RMatrix<C> kron_power(const RMatrix<C>& f, long n) {
    RMatrix<C> r = RMatrix<C>::identity(1, f.zero_proto());
    for (long i = 0; i < n; ++i) r = kronecker(r, f);
    return r;
}

template <class C>
RMatrix<C> apply_sym_pow(const RMatrix<C>& f, int n) {
    int d = static_cast<int>(f.cols()), e = static_cast<int>(f.rows());
    auto rows = enumerate_multisets(e, n);
    auto cols = enumerate_multisets(d, n);
    std::map<std::vector<int>, long> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = static_cast<long>(i);
    RMatrix<C> out(static_cast<long>(rows.size()), static_cast<long>(cols.size()), f.zero_proto());
    auto jtuples = enumerate_tuples(e, n);
    for (std::size_t cj = 0; cj < cols.size(); ++cj) {
        const auto& t = cols[cj];
        for (const auto& j : jtuples) {
            C coeff = coeff_as<C>(Rat(1), f.zero_proto());
            bool zero = false;
            for (int k = 0; k < n; ++k) {
                const C& entry = f(j[static_cast<std::size_t>(k)], t[static_cast<std::size_t>(k)]);
                if (is_zero(entry)) { zero = true; break; }
                coeff = coeff * entry;
            }
            if (zero) continue;
            std::vector<int> sorted = j;
            std::sort(sorted.begin(), sorted.end());
            out(row_index.at(sorted), static_cast<long>(cj)) += coeff;
        }
    }
    return out;
}

template <class C>
RMatrix<C> apply_wedge_pow(const RMatrix<C>& f, int n) {
    int d = static_cast<int>(f.cols()), e = static_cast<int>(f.rows());
    auto rows = enumerate_subsets(e, n);
    auto cols = enumerate_subsets(d, n);
    RMatrix<C> out(static_cast<long>(rows.size()), static_cast<long>(cols.size()), f.zero_proto());
    for (std::size_t ri = 0; ri < rows.size(); ++ri)
        for (std::size_t cj = 0; cj < cols.size(); ++cj) {
            RMatrix<C> sub(n, n, f.zero_proto());
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    sub(a, b) = f(rows[ri][static_cast<std::size_t>(a)],
                                  cols[cj][static_cast<std::size_t>(b)]);
            out(static_cast<long>(ri), static_cast<long>(cj)) = det(sub);
        }
    return out;
}

template <class C>
RMatrix<C> apply_gamma_pow(const RMatrix<C>& f, int n) {
    int d = static_cast<int>(f.cols()), e = static_cast<int>(f.rows());
    auto rows = enumerate_multisets(e, n);
    auto cols = enumerate_multisets(d, n);
    RMatrix<C> out(static_cast<long>(rows.size()), static_cast<long>(cols.size()), f.zero_proto());
    for (std::size_t cj = 0; cj < cols.size(); ++cj) {
        // all arrangements of the column multiset
        std::vector<int> t = cols[cj];
        std::vector<std::vector<int>> arrangements{t};
        while (std::next_permutation(t.begin(), t.end())) arrangements.push_back(t);
        for (std::size_t ri = 0; ri < rows.size(); ++ri) {
            const auto& rep = rows[ri];
            C acc = f.zero_proto();
            for (const auto& arr : arrangements) {
                C coeff = coeff_as<C>(Rat(1), f.zero_proto());
                bool zero = false;
                for (int k = 0; k < n; ++k) {
                    const C& entry = f(rep[static_cast<std::size_t>(k)],
                                       arr[static_cast<std::size_t>(k)]);
                    if (is_zero(entry)) { zero = true; break; }
                    coeff = coeff * entry;
                }
                if (!zero) acc += coeff;
            }
            out(static_cast<long>(ri), static_cast<long>(cj)) = acc;
        }
    }
    return out;
}

}  // namespace detail

/// Action of the evaluated operation on a matrix f : Q^cols -> Q^rows (or a
/// polynomial-entry matrix; all built-ins are polynomial in the entries, so
/// the same basis-level formulas run over either domain).
template <class C>
RMatrix<C> apply_functor(const FunctorExpr& e, const RMatrix<C>& f) {
    using K = FunctorExpr::Kind;
    const C& proto = f.zero_proto();
    switch (e.kind()) {
        case K::Const: return RMatrix<C>::identity(e.param(), proto);
        case K::Id: return f;
        case K::TensorPow: return detail::kron_power(f, e.param());
        case K::SymPow: return detail::apply_sym_pow(f, static_cast<int>(e.param()));
        case K::WedgePow: return detail::apply_wedge_pow(f, static_cast<int>(e.param()));
        case K::GammaPow: return detail::apply_gamma_pow(f, static_cast<int>(e.param()));
        case K::Schur: {
            auto src = schur_basis(e.schur_rep(), static_cast<int>(f.cols()));
            auto tgt = schur_basis(e.schur_rep(), static_cast<int>(f.rows()));
            return src->induced_map(f, *tgt);
        }
        case K::Sum: {
            RMatrix<C> out(0, 0, proto);
            for (const auto& c : e.children()) out = direct_sum(out, apply_functor(c, f));
            return out;
        }
        case K::TensorProd: {
            RMatrix<C> out = RMatrix<C>::identity(1, proto);
            for (const auto& c : e.children()) out = kronecker(out, apply_functor(c, f));
            return out;
        }
        case K::Compose: return apply_functor(e.children()[0], apply_functor(e.children()[1], f));
    }
    throw std::logic_error("apply_functor: unreachable");
}

/// Evaluation semantics of a functor expression: its dimension function and
/// its action on matrices, plus the structural degree bound.
class FunctorValue {
  public:
    explicit FunctorValue(FunctorExpr expr) : expr_(std::move(expr)) {}

    const FunctorExpr& expr() const { return expr_; }
    long dim(long d) const { return functor_dim(expr_, d); }
    long degree_bound() const { return schurkit::degree_bound(expr_); }

    template <class C>
    RMatrix<C> map(const RMatrix<C>& f) const {
        return apply_functor(expr_, f);
    }

  private:
    FunctorExpr expr_;
};

inline FunctorValue eval(const FunctorExpr& e) { return FunctorValue(e); }

/// Base-change coherence on a polynomial-entry matrix: evaluating and then
/// substituting must agree with substituting and then evaluating.
inline bool check_base_change(const FunctorExpr& e, const PMatrix& m,
                              const std::map<std::string, Rat>& assignment) {
    return substitute(apply_functor(e, m), assignment) ==
           apply_functor(e, substitute(m, assignment));
}

/// Concrete Schur space S_V(Q^d): a basis of the invariant subspace of
/// V x (Q^d)^{tensor n} and the averaging idempotent
/// e = (1/n!) sum_sigma rho(sigma^{-1}) x pi(sigma) whose image it is.
struct SchurSpace {
    Subspace basis;
    QMatrix projector;
};

inline SchurSpace schur_space(const SymRep& V, int d) {
    auto basis = schur_basis(V, d);
    long ambient = basis->ambient_dim();
    QMatrix proj(ambient, ambient);
    int n = V.n();
    for (const Perm& sigma : all_perms(n)) {
        proj += kronecker(V.action(sigma.inverse()), tensor_power_action(sigma, d));
    }
    proj *= Rat(mpz_class(1), factorial(n));
    return SchurSpace{Subspace{ambient, basis->dense_basis()}, std::move(proj)};
}

}  // namespace schurkit
