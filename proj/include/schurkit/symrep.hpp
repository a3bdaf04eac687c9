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
#include <mutex>
#include <string>
#include <vector>

#include "schurkit/matrix.hpp"
#include "schurkit/partition.hpp"
#include "schurkit/perm.hpp"

namespace schurkit {

/// Character of a representation: one rational value per cycle type.
struct CharVector {
    int n = 0;
    std::map<Partition, Rat> values;
};

namespace detail {
struct SymRepData;
}

/// Finite-dimensional right representation of the symmetric group over Q.
/// Stores invertible matrices for the adjacent transpositions; arbitrary
/// elements are reached by word decomposition under the right-action law
/// action(sigma * tau) = action(tau) * action(sigma), with a synchronized
/// memo cache. Values are immutable and cheap to copy.
class SymRep {
  public:
    SymRep(int n, long dim, std::vector<QMatrix> adjacent_gens);

    int n() const;
    long dim() const;

    /// Matrix of the right action of sigma.
    QMatrix action(const Perm& sigma) const;

    const std::vector<QMatrix>& generators() const;

    CharVector character() const;

    friend SymRep direct_sum(const SymRep& a, const SymRep& b);

    /// Stable identity for caching derived data.
    const void* key() const { return data_.get(); }

  private:
    explicit SymRep(std::shared_ptr<detail::SymRepData> d) : data_(std::move(d)) {}
    std::shared_ptr<detail::SymRepData> data_;

    friend class SchurBasisCacheAccess;
};

namespace detail {

struct SymRepData {
    int n = 0;
    long dim = 0;
    std::vector<QMatrix> gens;
    mutable std::mutex mu;
    mutable std::map<std::vector<int>, QMatrix> action_cache;
    mutable std::map<long, std::shared_ptr<const void>> schur_cache;
};

}  // namespace detail

inline SymRep::SymRep(int n, long dim, std::vector<QMatrix> adjacent_gens)
    : data_(std::make_shared<detail::SymRepData>()) {
    if (n < 0 || dim < 0) throw std::invalid_argument("SymRep: negative parameters");
    int expected = n >= 2 ? n - 1 : 0;
    if (static_cast<int>(adjacent_gens.size()) != expected)
        throw std::invalid_argument("SymRep: wrong number of generator matrices");
    for (const QMatrix& g : adjacent_gens)
        if (g.rows() != dim || g.cols() != dim)
            throw std::invalid_argument("SymRep: generator dimension mismatch");
    data_->n = n;
    data_->dim = dim;
    data_->gens = std::move(adjacent_gens);
}

inline int SymRep::n() const { return data_->n; }
inline long SymRep::dim() const { return data_->dim; }
inline const std::vector<QMatrix>& SymRep::generators() const { return data_->gens; }

inline QMatrix SymRep::action(const Perm& sigma) const {
    if (sigma.size() != data_->n) throw std::invalid_argument("SymRep: permutation degree mismatch");
    if (sigma.is_identity()) return QMatrix::identity(data_->dim);
    {
        std::lock_guard<std::mutex> lock(data_->mu);
        auto it = data_->action_cache.find(sigma.images());
        if (it != data_->action_cache.end()) return it->second;
    }
    // sigma = s_{w.back()} * ... * s_{w.front()}, so under the right-action
    // law action(sigma) = action(s_{w.front()}) * ... * action(s_{w.back()}).
    QMatrix m = QMatrix::identity(data_->dim);
    for (int w : sigma.adjacent_word()) m = m * data_->gens[w];
    std::lock_guard<std::mutex> lock(data_->mu);
    return data_->action_cache.emplace(sigma.images(), std::move(m)).first->second;
}

inline CharVector SymRep::character() const {
    CharVector ch;
    ch.n = data_->n;
    for (const Partition& type : partitions_of(data_->n)) {
        QMatrix m = action(class_representative(type));
        Rat tr(0);
        for (long i = 0; i < m.rows(); ++i) tr += m(i, i);
        ch.values[type] = tr;
    }
    return ch;
}

inline SymRep direct_sum(const SymRep& a, const SymRep& b) {
    if (a.n() != b.n()) throw std::invalid_argument("direct_sum: degree mismatch");
    std::vector<QMatrix> gens;
    for (std::size_t i = 0; i < a.generators().size(); ++i)
        gens.push_back(direct_sum(a.generators()[i], b.generators()[i]));
    return SymRep(a.n(), a.dim() + b.dim(), std::move(gens));
}

/// Cycle types of Sigma_n with their class sizes n!/z_mu, in the shared
/// ascending-lex partition order.
inline std::vector<std::pair<Partition, long long>> conjugacy_classes(int n) {
    if (n < 0) throw std::invalid_argument("conjugacy_classes: negative n");
    std::vector<std::pair<Partition, long long>> out;
    for (const Partition& mu : partitions_of(n)) {
        mpz_class z = 1;
        int run = 0;
        int prev = -1;
        for (int p : mu.parts()) {
            z *= p;
            if (p == prev)
                ++run;
            else
                run = 1;
            z *= run;
            prev = p;
        }
        mpz_class size = factorial(n) / z;
        out.emplace_back(mu, static_cast<long long>(size.get_si()));
    }
    return out;
}

namespace detail {

// Murnaghan-Nakayama recursion on beta-sets. Removing a border strip of
// size r from lambda corresponds to lowering one beta-number by r; the sign
// is (-1)^{count of beta-numbers jumped over}.
inline long long mn_character(std::vector<int> beta, const std::vector<int>& mu, std::size_t k,
                              std::map<std::pair<std::vector<int>, std::size_t>, long long>& memo) {
    if (k == mu.size()) return 1;
    auto key = std::make_pair(beta, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    long long total = 0;
    int r = mu[k];
    for (std::size_t j = 0; j < beta.size(); ++j) {
        int target = beta[j] - r;
        if (target < 0) continue;
        bool occupied = false;
        int jumped = 0;
        for (std::size_t i = 0; i < beta.size(); ++i) {
            if (i == j) continue;
            if (beta[i] == target) { occupied = true; break; }
            if (beta[i] > target && beta[i] < beta[j]) ++jumped;
        }
        if (occupied) continue;
        std::vector<int> next = beta;
        next[j] = target;
        std::sort(next.rbegin(), next.rend());
        long long sub = mn_character(std::move(next), mu, k + 1, memo);
        total += (jumped % 2 == 0) ? sub : -sub;
    }
    memo[key] = total;
    return total;
}

inline std::vector<int> beta_set(const Partition& lambda) {
    int m = lambda.length();
    std::vector<int> beta(m);
    for (int i = 0; i < m; ++i) beta[i] = lambda.part(i) + (m - 1 - i);
    return beta;
}

}  // namespace detail

/// Irreducible character value chi_lambda(mu) by the Murnaghan-Nakayama rule.
inline long long character_value(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("character_value: size mismatch");
    if (lambda.size() == 0) return 1;
    std::map<std::pair<std::vector<int>, std::size_t>, long long> memo;
    return detail::mn_character(detail::beta_set(lambda), mu.parts(), 0, memo);
}

/// Full character table: row chi_lambda for every lambda of n, each row a
/// CharVector over all cycle types.
inline std::map<Partition, CharVector> character_table(int n) {
    std::map<Partition, CharVector> table;
    auto classes = partitions_of(n);
    for (const Partition& lambda : classes) {
        CharVector row;
        row.n = n;
        for (const Partition& mu : classes) row.values[mu] = Rat(character_value(lambda, mu));
        table.emplace(lambda, std::move(row));
    }
    return table;
}

/// Multiplicity of each Specht module in the given representation via the
/// class-weighted character inner product. Throws when the numbers fail to
/// be nonnegative integers consistent with the dimension.
inline std::map<Partition, long long> multiplicities(const SymRep& rep) {
    int n = rep.n();
    CharVector chi = rep.character();
    auto classes = conjugacy_classes(n);
    Rat order(factorial(n), mpz_class(1));
    std::map<Partition, long long> out;
    mpz_class dimsum = 0;
    for (const Partition& lambda : partitions_of(n)) {
        Rat acc(0);
        for (const auto& [mu, size] : classes)
            acc += Rat(static_cast<long>(size)) * chi.values.at(mu) * Rat(character_value(lambda, mu));
        acc /= order;
        if (!acc.is_integer() || acc.sign() < 0)
            throw std::runtime_error("input is not a valid QSigma_n-representation");
        long long m = acc.as_int();
        out[lambda] = m;
        dimsum += mpz_class(static_cast<long>(m)) * static_cast<long>(hook_dimension(lambda));
    }
    if (dimsum != rep.dim())
        throw std::runtime_error("input is not a valid QSigma_n-representation");
    return out;
}

/// Right regular representation: basis indexed by the lex-ordered group
/// elements, e_g . sigma = e_{g sigma}.
inline SymRep regular_representation(int n) {
    std::vector<Perm> elems = all_perms(n);
    std::map<std::vector<int>, long> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i].images()] = static_cast<long>(i);
    long dim = static_cast<long>(elems.size());
    std::vector<QMatrix> gens;
    for (int i = 0; i + 1 < n; ++i) {
        Perm s = Perm::transposition(n, i);
        QMatrix m(dim, dim);
        for (long g = 0; g < dim; ++g) m(index.at((elems[g] * s).images()), g) = Rat(1);
        gens.push_back(std::move(m));
    }
    return SymRep(n, dim, std::move(gens));
}

namespace detail {

using Tableau = std::vector<std::vector<int>>;

inline void standard_tableaux_rec(const Partition& shape, Tableau& t, std::vector<int>& rowfill,
                                  int next, std::vector<Tableau>& out) {
    int n = shape.size();
    if (next == n) {
        out.push_back(t);
        return;
    }
    for (int r = 0; r < shape.length(); ++r) {
        int c = rowfill[r];
        if (c >= shape.part(r)) continue;
        if (r > 0 && rowfill[r - 1] <= c) continue;  // column must grow downward
        t[r][c] = next;
        ++rowfill[r];
        standard_tableaux_rec(shape, t, rowfill, next + 1, out);
        --rowfill[r];
    }
}

/// All standard Young tableaux of the given shape (entries 0..n-1), in the
/// deterministic order produced by row-preference backtracking.
inline std::vector<Tableau> standard_tableaux(const Partition& shape) {
    Tableau t(shape.length());
    for (int r = 0; r < shape.length(); ++r) t[r].assign(shape.part(r), -1);
    std::vector<int> rowfill(shape.length(), 0);
    std::vector<Tableau> out;
    if (shape.length() == 0) {
        out.push_back({});
        return out;
    }
    standard_tableaux_rec(shape, t, rowfill, 0, out);
    return out;
}

/// Canonical tabloid key: rows individually sorted.
inline Tableau tabloid_of(const Tableau& t) {
    Tableau r = t;
    for (auto& row : r) std::sort(row.begin(), row.end());
    return r;
}

/// All row-sorted fillings of the shape with 0..n-1 (the tabloid basis).
inline std::vector<Tableau> all_tabloids(const Partition& shape) {
    int n = shape.size();
    std::vector<int> entries(n);
    std::iota(entries.begin(), entries.end(), 0);
    std::vector<Tableau> out;
    // Enumerate by choosing sorted subsets row by row.
    Tableau current(shape.length());
    auto rec = [&](auto&& self, std::vector<int> rest, int row) -> void {
        if (row == shape.length()) {
            out.push_back(current);
            return;
        }
        int k = shape.part(row);
        std::vector<int> mask(rest.size(), 0);
        std::fill(mask.begin(), mask.begin() + k, 1);
        std::sort(mask.rbegin(), mask.rend());
        // iterate combinations via prev_permutation of the mask
        std::vector<int> select;
        do {
            select.clear();
            std::vector<int> remaining;
            for (std::size_t i = 0; i < rest.size(); ++i)
                (mask[i] ? select : remaining).push_back(rest[i]);
            current[row] = select;
            self(self, remaining, row + 1);
        } while (std::prev_permutation(mask.begin(), mask.end()));
        std::sort(mask.rbegin(), mask.rend());
    };
    if (shape.length() == 0) {
        out.push_back({});
        return out;
    }
    rec(rec, entries, 0);
    return out;
}

/// Column stabilizer of a tableau as a list of signed entry relabelings.
inline void column_group_rec(const std::vector<std::vector<int>>& cols, std::size_t c,
                             std::vector<int>& relabel, int sign,
                             std::vector<std::pair<std::vector<int>, int>>& out) {
    if (c == cols.size()) {
        out.emplace_back(relabel, sign);
        return;
    }
    std::vector<int> idx(cols[c].size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end());
    do {
        int s = 1;
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = i + 1; j < idx.size(); ++j)
                if (idx[i] > idx[j]) s = -s;
        std::vector<int> saved;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            saved.push_back(relabel[cols[c][i]]);
        }
        for (std::size_t i = 0; i < idx.size(); ++i)
            relabel[cols[c][i]] = saved[static_cast<std::size_t>(idx[i])];
        column_group_rec(cols, c + 1, relabel, sign * s, out);
        for (std::size_t i = 0; i < idx.size(); ++i) relabel[cols[c][i]] = saved[i];
    } while (std::next_permutation(idx.begin(), idx.end()));
}

}  // namespace detail

/// Specht module of shape lambda as Young's natural (integral)
/// representation: polytabloids of the standard tableaux inside the tabloid
/// space, with the group acting by entry relabeling. The returned SymRep
/// carries the corresponding right action.
inline SymRep specht_representation(const Partition& lambda) {
    using detail::Tableau;
    int n = lambda.size();
    if (n == 0) return SymRep(0, 1, {});

    std::vector<Tableau> tabloids = detail::all_tabloids(lambda);
    std::map<Tableau, long> tabloid_index;
    for (std::size_t i = 0; i < tabloids.size(); ++i)
        tabloid_index[tabloids[i]] = static_cast<long>(i);
    long m_dim = static_cast<long>(tabloids.size());

    std::vector<Tableau> standard = detail::standard_tableaux(lambda);
    long f_dim = static_cast<long>(standard.size());

    // Polytabloid matrix B: column per standard tableau.
    QMatrix B(m_dim, f_dim);
    for (long col = 0; col < f_dim; ++col) {
        const Tableau& t = standard[static_cast<std::size_t>(col)];
        // Columns of t as entry lists.
        std::vector<std::vector<int>> cols;
        for (int c = 0; c < lambda.part(0); ++c) {
            std::vector<int> column;
            for (int r = 0; r < lambda.length(); ++r)
                if (c < lambda.part(r)) column.push_back(t[r][c]);
            cols.push_back(std::move(column));
        }
        std::vector<int> relabel(n);
        std::iota(relabel.begin(), relabel.end(), 0);
        std::vector<std::pair<std::vector<int>, int>> group;
        detail::column_group_rec(cols, 0, relabel, 1, group);
        for (const auto& [map, sign] : group) {
            Tableau image = t;
            for (auto& row : image)
                for (int& v : row) v = map[v];
            long row = tabloid_index.at(detail::tabloid_of(image));
            B(row, col) += Rat(sign);
        }
    }

    // Generator matrices: solve B X = P(s_i) B where P relabels tabloids.
    std::vector<QMatrix> gens;
    for (int i = 0; i + 1 < n; ++i) {
        QMatrix PB(m_dim, f_dim);
        for (long col = 0; col < f_dim; ++col)
            for (long row = 0; row < m_dim; ++row) {
                if (B(row, col).is_zero()) continue;
                Tableau image = tabloids[static_cast<std::size_t>(row)];
                for (auto& r : image)
                    for (int& v : r) {
                        if (v == i) v = i + 1;
                        else if (v == i + 1) v = i;
                    }
                PB(tabloid_index.at(detail::tabloid_of(image)), col) += B(row, col);
            }
        auto X = solve(B, PB);
        if (!X) throw std::logic_error("specht_representation: straightening failed");
        gens.push_back(std::move(*X));
    }
    return SymRep(n, f_dim, std::move(gens));
}

/// Specht representation labeled by its partition, with a process-wide
/// synchronized cache (construction is deterministic, so sharing is safe).
inline SymRep specht_representation_cached(const Partition& lambda) {
    static std::mutex mu;
    static std::map<Partition, SymRep> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;
    SymRep rep = specht_representation(lambda);
    return cache.emplace(lambda, std::move(rep)).first->second;
}

/// Invertible intertwiner T with T * action_A(s) = action_B(s) * T for all
/// generators, or nullopt when the representations are not isomorphic.
inline std::optional<QMatrix> rep_isomorphism(const SymRep& a, const SymRep& b) {
    if (a.n() != b.n() || a.dim() != b.dim()) return std::nullopt;
    long d = a.dim();
    if (d == 0) return QMatrix(0, 0);
    if (a.n() < 2) return QMatrix::identity(d);
    // Vectorize T (row-major): constraint per generator s:
    //   T A(s) - B(s) T = 0.
    long vars = d * d;
    long ngens = static_cast<long>(a.generators().size());
    QMatrix system(ngens * vars, vars);
    for (long g = 0; g < ngens; ++g) {
        const QMatrix& A = a.generators()[static_cast<std::size_t>(g)];
        const QMatrix& Bm = b.generators()[static_cast<std::size_t>(g)];
        // row index: (g, i, j); unknown index: (p, q) for T(p,q)
        for (long i = 0; i < d; ++i)
            for (long j = 0; j < d; ++j) {
                long row = g * vars + i * d + j;
                for (long q = 0; q < d; ++q) {
                    if (!A(q, j).is_zero()) system(row, i * d + q) += A(q, j);
                    if (!Bm(i, q).is_zero()) system(row, q * d + j) -= Bm(i, q);
                }
            }
    }
    Subspace sols = kernel_basis(system);
    // Search the solution space for an invertible element: basis vectors
    // first, then small integer combinations.
    auto unvec = [&](const QMatrix& v) {
        QMatrix t(d, d);
        for (long p = 0; p < d; ++p)
            for (long q = 0; q < d; ++q) t(p, q) = v(p * d + q, 0);
        return t;
    };
    for (long k = 0; k < sols.dim(); ++k) {
        QMatrix t = unvec(sols.basis.col(k));
        if (is_invertible(t)) return t;
    }
    if (sols.dim() >= 2) {
        for (long k = 1; k < sols.dim(); ++k)
            for (int c = 1; c <= 4; ++c) {
                QMatrix v = sols.basis.col(0) + sols.basis.col(k) * Rat(c);
                QMatrix t = unvec(v);
                if (is_invertible(t)) return t;
            }
    }
    return std::nullopt;
}

}  // namespace schurkit
