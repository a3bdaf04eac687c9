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

#include <optional>
#include <utility>
#include <vector>

#include "schurkit/mpoly.hpp"
#include "schurkit/rational.hpp"

namespace schurkit {

/// Dense row-major matrix over an exact coefficient domain (Rat or MPoly).
/// All matrices of a given expression share one domain; mixing Rat and MPoly
/// requires the explicit embed() below. The stored prototype supplies the
/// domain's zero (for MPoly it carries the variable ring).
template <class C>
class RMatrix {
  public:
    RMatrix() : rows_(0), cols_(0) {}
    RMatrix(long rows, long cols, C zero = C())
        : rows_(rows), cols_(cols), zero_(std::move(zero)),
          e_(static_cast<std::size_t>(rows * cols), zero_) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("RMatrix: negative shape");
    }

    static RMatrix identity(long n, C zero = C()) {
        RMatrix m(n, n, zero);
        C one = unit_like(m.zero_);
        for (long i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    static RMatrix from_rows(std::vector<std::vector<C>> rows, C zero = C()) {
        long r = static_cast<long>(rows.size());
        long c = r == 0 ? 0 : static_cast<long>(rows.front().size());
        RMatrix m(r, c, zero);
        for (long i = 0; i < r; ++i) {
            if (static_cast<long>(rows[i].size()) != c)
                throw std::invalid_argument("RMatrix: ragged rows");
            for (long j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    const C& zero_proto() const { return zero_; }

    C& operator()(long i, long j) { return e_[idx(i, j)]; }
    const C& operator()(long i, long j) const { return e_[idx(i, j)]; }

    bool is_square() const { return rows_ == cols_; }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!schurkit::is_zero(x)) return false;
        return true;
    }

    RMatrix transpose() const {
        RMatrix t(cols_, rows_, zero_);
        for (long i = 0; i < rows_; ++i)
            for (long j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    RMatrix operator-() const {
        RMatrix r = *this;
        for (auto& x : r.e_) x = -x;
        return r;
    }

    RMatrix& operator+=(const RMatrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
        return *this;
    }
    RMatrix& operator-=(const RMatrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
        return *this;
    }
    friend RMatrix operator+(RMatrix a, const RMatrix& b) { return a += b; }
    friend RMatrix operator-(RMatrix a, const RMatrix& b) { return a -= b; }

    friend RMatrix operator*(const RMatrix& a, const RMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("RMatrix: shape mismatch in product");
        RMatrix r(a.rows_, b.cols_, a.zero_);
        // i-k-j order with zero skips; inputs are frequently very sparse.
        for (long i = 0; i < a.rows_; ++i) {
            for (long k = 0; k < a.cols_; ++k) {
                const C& aik = a(i, k);
                if (schurkit::is_zero(aik)) continue;
                for (long j = 0; j < b.cols_; ++j) {
                    const C& bkj = b(k, j);
                    if (schurkit::is_zero(bkj)) continue;
                    r(i, j) += aik * bkj;
                }
            }
        }
        return r;
    }

    RMatrix& operator*=(const C& s) {
        for (auto& x : e_) x = x * s;
        return *this;
    }
    friend RMatrix operator*(RMatrix a, const C& s) { return a *= s; }
    friend RMatrix operator*(const C& s, RMatrix a) { return a *= s; }

    friend bool operator==(const RMatrix& a, const RMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const RMatrix& a, const RMatrix& b) { return !(a == b); }

    RMatrix col(long j) const {
        RMatrix c(rows_, 1, zero_);
        for (long i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
        return c;
    }

    void set_col(long j, const RMatrix& c) {
        if (c.rows_ != rows_ || c.cols_ != 1) throw std::invalid_argument("RMatrix: bad column");
        for (long i = 0; i < rows_; ++i) (*this)(i, j) = c(i, 0);
    }

    /// Kronecker product with lexicographic (row-major) index pairing.
    friend RMatrix kronecker(const RMatrix& a, const RMatrix& b) {
        RMatrix r(a.rows_ * b.rows_, a.cols_ * b.cols_, a.zero_);
        for (long ia = 0; ia < a.rows_; ++ia)
            for (long ja = 0; ja < a.cols_; ++ja) {
                const C& x = a(ia, ja);
                if (schurkit::is_zero(x)) continue;
                for (long ib = 0; ib < b.rows_; ++ib)
                    for (long jb = 0; jb < b.cols_; ++jb) {
                        const C& y = b(ib, jb);
                        if (schurkit::is_zero(y)) continue;
                        r(ia * b.rows_ + ib, ja * b.cols_ + jb) = x * y;
                    }
            }
        return r;
    }

    friend RMatrix direct_sum(const RMatrix& a, const RMatrix& b) {
        RMatrix r(a.rows_ + b.rows_, a.cols_ + b.cols_, a.zero_);
        for (long i = 0; i < a.rows_; ++i)
            for (long j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
        for (long i = 0; i < b.rows_; ++i)
            for (long j = 0; j < b.cols_; ++j) r(a.rows_ + i, a.cols_ + j) = b(i, j);
        return r;
    }

    friend RMatrix hstack(const RMatrix& a, const RMatrix& b) {
        if (a.rows_ != b.rows_) throw std::invalid_argument("RMatrix: hstack row mismatch");
        RMatrix r(a.rows_, a.cols_ + b.cols_, a.zero_);
        for (long i = 0; i < a.rows_; ++i) {
            for (long j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
            for (long j = 0; j < b.cols_; ++j) r(i, a.cols_ + j) = b(i, j);
        }
        return r;
    }

    friend RMatrix vstack(const RMatrix& a, const RMatrix& b) {
        if (a.cols_ != b.cols_) throw std::invalid_argument("RMatrix: vstack col mismatch");
        RMatrix r(a.rows_ + b.rows_, a.cols_, a.zero_);
        for (long i = 0; i < a.rows_; ++i)
            for (long j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
        for (long i = 0; i < b.rows_; ++i)
            for (long j = 0; j < b.cols_; ++j) r(a.rows_ + i, j) = b(i, j);
        return r;
    }

  private:
    static C unit_like(const C& zero) {
        if constexpr (std::is_same_v<C, Rat>) {
            (void)zero;
            return Rat(1);
        } else {
            return MPoly::constant(Rat(1), zero.vars());
        }
    }

    std::size_t idx(long i, long j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("RMatrix: index out of range");
        return static_cast<std::size_t>(i * cols_ + j);
    }

    void require_same_shape(const RMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("RMatrix: shape mismatch");
    }

    long rows_, cols_;
    C zero_;
    std::vector<C> e_;
};

using QMatrix = RMatrix<Rat>;
using PMatrix = RMatrix<MPoly>;

/// Determinant by permutation expansion; fine for the small orders used by
/// exterior-power minors.
template <class C>
C det(const RMatrix<C>& m) {
    if (!m.is_square()) throw std::invalid_argument("det: non-square matrix");
    long n = m.rows();
    C one = RMatrix<C>::identity(1, m.zero_proto())(0, 0);
    if (n == 0) return one;
    C acc = m.zero_proto();
    std::vector<long> perm(n);
    for (long i = 0; i < n; ++i) perm[i] = i;
    do {
        int sign = 1;
        for (long i = 0; i < n; ++i)
            for (long j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        C term = one;
        bool nonzero = true;
        for (long i = 0; i < n; ++i) {
            const C& x = m(i, perm[i]);
            if (is_zero(x)) { nonzero = false; break; }
            term = term * x;
        }
        if (!nonzero) continue;
        if (sign > 0) acc += term;
        else acc -= term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

/// A linear subspace of Q^ambient, described by an independent-column basis.
struct Subspace {
    long ambient_dim = 0;
    QMatrix basis;

    long dim() const { return basis.cols(); }
};

struct RrefResult {
    QMatrix reduced;
    std::vector<long> pivots;
};

/// Unique reduced row-echelon form by fraction-reduced Gaussian elimination.
inline RrefResult rref(const QMatrix& m) {
    QMatrix r = m;
    std::vector<long> pivots;
    long pr = 0;
    for (long c = 0; c < r.cols() && pr < r.rows(); ++c) {
        long sel = -1;
        for (long i = pr; i < r.rows(); ++i)
            if (!r(i, c).is_zero()) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != pr)
            for (long j = 0; j < r.cols(); ++j) std::swap(r(sel, j), r(pr, j));
        Rat inv = Rat(1) / r(pr, c);
        for (long j = c; j < r.cols(); ++j) r(pr, j) *= inv;
        for (long i = 0; i < r.rows(); ++i) {
            if (i == pr || r(i, c).is_zero()) continue;
            Rat f = r(i, c);
            for (long j = c; j < r.cols(); ++j) {
                if (r(pr, j).is_zero()) continue;
                r(i, j) -= f * r(pr, j);
            }
        }
        pivots.push_back(c);
        ++pr;
    }
    return {std::move(r), std::move(pivots)};
}

inline long rank(const QMatrix& m) { return static_cast<long>(rref(m).pivots.size()); }

/// Basis of {v : m v = 0}; one column per free column of the rref, in
/// ascending free-column order.
inline Subspace kernel_basis(const QMatrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (long p : rr.pivots) is_pivot[p] = true;
    std::vector<long> free_cols;
    for (long c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    QMatrix basis(m.cols(), static_cast<long>(free_cols.size()));
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        long f = free_cols[k];
        basis(f, static_cast<long>(k)) = Rat(1);
        for (std::size_t i = 0; i < rr.pivots.size(); ++i)
            basis(rr.pivots[i], static_cast<long>(k)) = -rr.reduced(static_cast<long>(i), f);
    }
    return {m.cols(), std::move(basis)};
}

/// Basis of the column space: the pivot columns of the input, in order.
inline Subspace image_basis(const QMatrix& m) {
    RrefResult rr = rref(m);
    QMatrix basis(m.rows(), static_cast<long>(rr.pivots.size()));
    for (std::size_t k = 0; k < rr.pivots.size(); ++k)
        for (long i = 0; i < m.rows(); ++i)
            basis(i, static_cast<long>(k)) = m(i, rr.pivots[k]);
    return {m.rows(), std::move(basis)};
}

/// Particular solution X of A X = B with free variables set to zero, or
/// nullopt when the system is inconsistent. Unique when A has full column
/// rank.
inline std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
    RrefResult rr = rref(hstack(a, b));
    for (long p : rr.pivots)
        if (p >= a.cols()) return std::nullopt;
    QMatrix x(a.cols(), b.cols());
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
        for (long j = 0; j < b.cols(); ++j)
            x(rr.pivots[i], j) = rr.reduced(static_cast<long>(i), a.cols() + j);
    return x;
}

inline std::optional<QMatrix> inverse(const QMatrix& a) {
    if (!a.is_square()) return std::nullopt;
    auto x = solve(a, QMatrix::identity(a.rows()));
    if (!x) return std::nullopt;
    if (rank(a) != a.rows()) return std::nullopt;
    return x;
}

inline bool is_invertible(const QMatrix& a) { return a.is_square() && rank(a) == a.rows(); }

/// Spectral projector P = prod_{s != target} (a - s I)/(target - s) onto the
/// target eigenspace of an operator annihilated by prod (a - s I).
inline QMatrix lagrange_projector(const QMatrix& a, const std::vector<Rat>& spectrum,
                                  const Rat& target) {
    if (!a.is_square()) throw std::invalid_argument("lagrange_projector: non-square operator");
    for (std::size_t i = 0; i < spectrum.size(); ++i)
        for (std::size_t j = i + 1; j < spectrum.size(); ++j)
            if (spectrum[i] == spectrum[j])
                throw std::invalid_argument("lagrange_projector: spectrum values not distinct");
    bool found = false;
    for (const Rat& s : spectrum)
        if (s == target) { found = true; break; }
    if (!found) throw std::invalid_argument("target outside declared spectrum");

    QMatrix p = QMatrix::identity(a.rows());
    Rat denom(1);
    for (const Rat& s : spectrum) {
        if (s == target) continue;
        QMatrix factor = a;
        for (long i = 0; i < a.rows(); ++i) factor(i, i) -= s;
        p = p * factor;
        denom *= (target - s);
    }
    return p * (Rat(1) / denom);
}

/// Entrywise embedding of a rational matrix into a polynomial ring.
inline PMatrix embed(const QMatrix& m, const PolyVars& vars) {
    PMatrix r(m.rows(), m.cols(), MPoly(vars));
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) r(i, j) = MPoly::constant(m(i, j), vars);
    return r;
}

/// Entrywise substitution; the assignment must cover all variables that
/// actually occur.
inline QMatrix substitute(const PMatrix& m, const std::map<std::string, Rat>& assignment) {
    QMatrix r(m.rows(), m.cols());
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) r(i, j) = substitute(m(i, j), assignment);
    return r;
}

}  // namespace schurkit
