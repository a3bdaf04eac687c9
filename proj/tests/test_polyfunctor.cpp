#include <catch2/catch.hpp>

#include "schurkit/decompose.hpp"
#include "schurkit/eval.hpp"
#include "schurkit/rng.hpp"

#include <thread>

using namespace schurkit;
using FX = FunctorExpr;

namespace {

std::vector<FunctorExpr> builtins_of_degree(int n) {
    std::vector<FunctorExpr> out{FX::tensor_pow(n), FX::sym_pow(n), FX::wedge_pow(n),
                                 FX::gamma_pow(n)};
    for (const Partition& lambda : partitions_of(n)) out.push_back(FX::schur(lambda));
    return out;
}

// Independent counts for the dimension formulas: brute-force enumeration of
// index tuples, monomials and subsets.
long count_tuples(int d, int n) { return static_cast<long>(detail::enumerate_tuples(d, n).size()); }
long count_multisets(int d, int n) {
    return static_cast<long>(detail::enumerate_multisets(d, n).size());
}
long count_subsets(int d, int n) { return static_cast<long>(detail::enumerate_subsets(d, n).size()); }

}  // namespace

TEST_CASE("dimension functions match enumeration") {
    CHECK(eval(FX::wedge_pow(2)).dim(3) == 3);
    CHECK(eval(FX::sym_pow(2)).dim(3) == 6);
    CHECK(eval(FX::tensor_pow(2)).dim(3) == 9);
    CHECK(count_subsets(3, 2) == 3);
    CHECK(count_multisets(3, 2) == 6);
    CHECK(count_tuples(3, 2) == 9);

    for (int n = 0; n <= 4; ++n)
        for (int d = 0; d <= 5; ++d) {
            CHECK(eval(FX::tensor_pow(n)).dim(d) == count_tuples(d, n));
            CHECK(eval(FX::sym_pow(n)).dim(d) == count_multisets(d, n));
            CHECK(eval(FX::gamma_pow(n)).dim(d) == count_multisets(d, n));
            CHECK(eval(FX::wedge_pow(n)).dim(d) == count_subsets(d, n));
        }

    CHECK(eval(FX::constant(5)).dim(0) == 5);
    CHECK(eval(FX::sum({FX::constant(1), FX::id()})).dim(3) == 4);
    CHECK(eval(FX::tensor_prod({FX::id(), FX::id()})).dim(3) == 9);
    CHECK(eval(FX::compose(FX::sym_pow(2), FX::sym_pow(2))).dim(2) == 6);
}

TEST_CASE("Schur dimension equals the semistandard tableau count") {
    for (int n = 1; n <= 4; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (int d = 0; d <= 4; ++d)
                CHECK(eval(FX::schur(lambda)).dim(d) == ssyt_count(lambda, d));
}

TEST_CASE("identity preservation and identity functor") {
    Rng rng(11);
    QMatrix f = rng.int_matrix(3, 2);
    CHECK(eval(FX::id()).map(f) == f);
    for (int n = 0; n <= 3; ++n)
        for (const FunctorExpr& e : builtins_of_degree(n))
            for (long d = 0; d <= 3; ++d)
                CHECK(eval(e).map(QMatrix::identity(d)) ==
                      QMatrix::identity(eval(e).dim(d)));
}

TEST_CASE("functoriality: map(g f) = map(g) map(f), exactly") {
    Rng rng(20260808);
    std::vector<FunctorExpr> exprs;
    for (int n = 0; n <= 4; ++n)
        for (const FunctorExpr& e : builtins_of_degree(n)) exprs.push_back(e);
    exprs.push_back(FX::sum({FX::sym_pow(2), FX::wedge_pow(3)}));
    exprs.push_back(FX::tensor_prod({FX::constant(2), FX::id()}));
    exprs.push_back(FX::compose(FX::sym_pow(2), FX::wedge_pow(2)));
    for (const FunctorExpr& e : exprs) {
        for (int trial = 0; trial < 2; ++trial) {
            long d = rng.next_int(0, 3), m = rng.next_int(0, 3), t = rng.next_int(0, 3);
            QMatrix f = rng.int_matrix(m, d);
            QMatrix g = rng.int_matrix(t, m);
            CHECK(eval(e).map(g * f) == eval(e).map(g) * eval(e).map(f));
        }
    }
}

TEST_CASE("wedge of Schur[1,1] agrees with the exterior square on Q^2") {
    // Both sides send f to its determinant in the 1-dimensional bases.
    Rng rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        QMatrix f = rng.int_matrix(2, 2);
        CHECK(eval(FX::schur(Partition{1, 1})).map(f) == eval(FX::wedge_pow(2)).map(f));
    }
}

TEST_CASE("degree bounds") {
    CHECK(degree_bound(FX::sum({FX::sym_pow(2), FX::wedge_pow(3)})) == 3);
    CHECK(degree_bound(FX::compose(FX::sym_pow(2), FX::sym_pow(2))) == 4);
    CHECK(degree_bound(FX::constant(5)) == 0);
    CHECK(degree_bound(FX::id()) == 1);
    CHECK(degree_bound(FX::tensor_prod({FX::sym_pow(2), FX::wedge_pow(3)})) == 5);
    CHECK(degree_bound(FX::schur(Partition{2, 1})) == 3);
}

TEST_CASE("degree bound controls the scalar spectrum") {
    // F(c I) is annihilated by prod_{k<=N}(x - c^k) at c = 2: equivalently
    // the product over the declared spectrum kills F(2I).
    std::vector<FunctorExpr> exprs{FX::sum({FX::constant(2), FX::id(), FX::wedge_pow(2)}),
                                   FX::compose(FX::sym_pow(2), FX::sym_pow(2)),
                                   FX::tensor_prod({FX::id(), FX::wedge_pow(2)})};
    for (const FunctorExpr& e : exprs) {
        long bound = degree_bound(e);
        QMatrix a = eval(e).map(QMatrix::identity(3) * Rat(2));
        QMatrix prod = QMatrix::identity(a.rows());
        for (long k = 0; k <= bound; ++k) {
            QMatrix factor = a;
            for (long i = 0; i < a.rows(); ++i) factor(i, i) -= pow(Rat(2), k);
            prod = prod * factor;
        }
        CHECK(prod.is_zero());
    }
}

TEST_CASE("base change examples") {
    PolyVars tvars = make_vars({"T"});
    MPoly t = MPoly::variable(0, tvars);
    PMatrix m(2, 2, MPoly(tvars));
    m(0, 0) = t;
    m(0, 1) = MPoly::constant(Rat(1), tvars);
    m(1, 1) = t;
    CHECK(check_base_change(FX::sym_pow(2), m, {{"T", Rat(3)}}));

    PolyVars t2vars = make_vars({"T1", "T2"});
    PMatrix diag(2, 2, MPoly(t2vars));
    diag(0, 0) = MPoly::variable(0, t2vars);
    diag(1, 1) = MPoly::variable(1, t2vars);
    CHECK(check_base_change(FX::tensor_pow(2), diag, {{"T1", Rat(2)}, {"T2", Rat(5)}}));

    // Rational matrix, empty assignment: both sides are the same evaluation.
    PMatrix rational = embed(QMatrix::identity(2) * Rat(3), make_vars({}));
    CHECK(check_base_change(FX::wedge_pow(2), rational, {}));
}

TEST_CASE("base change holds for all built-ins on random polynomial matrices") {
    PolyVars vars = make_vars({"T1", "T2"});
    Rng rng(97);
    auto random_poly = [&]() {
        MPoly p(vars);
        for (int t = 0; t < 3; ++t) {
            std::vector<int> e{static_cast<int>(rng.next_int(0, 2)),
                               static_cast<int>(rng.next_int(0, 1))};
            if (e[0] + e[1] > 2) e[1] = 0;
            p += MPoly::monomial(Rat(rng.next_int(-2, 2)), e, vars);
        }
        return p;
    };
    for (int n = 0; n <= 3; ++n) {
        for (const FunctorExpr& e : builtins_of_degree(n)) {
            long d = 2;
            PMatrix m(d, d, MPoly(vars));
            for (long i = 0; i < d; ++i)
                for (long j = 0; j < d; ++j) m(i, j) = random_poly();
            std::map<std::string, Rat> asg{{"T1", Rat(rng.next_int(-2, 2))},
                                           {"T2", Rat(rng.next_int(-2, 2))}};
            CHECK(check_base_change(e, m, asg));
        }
    }
}

TEST_CASE("tensor power action") {
    // n=2, d=2 transposition: swaps the mixed tuples, fixes (0,0) and (1,1).
    QMatrix swap = tensor_power_action(Perm::transposition(2, 0), 2);
    QMatrix expected(4, 4);
    expected(0, 0) = Rat(1);   // (0,0)
    expected(2, 1) = Rat(1);   // (0,1) -> (1,0)
    expected(1, 2) = Rat(1);   // (1,0) -> (0,1)
    expected(3, 3) = Rat(1);   // (1,1)
    CHECK(swap == expected);

    CHECK(tensor_power_action(Perm::identity(3), 2) == QMatrix::identity(8));
    for (const Perm& s : all_perms(3)) CHECK(tensor_power_action(s, 1) == QMatrix::identity(1));

    // Left action law pi(s t) = pi(s) pi(t), exhaustively for n=3, d=2.
    for (const Perm& s : all_perms(3))
        for (const Perm& t : all_perms(3))
            CHECK(tensor_power_action(s * t, 2) ==
                  tensor_power_action(s, 2) * tensor_power_action(t, 2));
}

TEST_CASE("schur_space dimensions and projectors") {
    SymRep sign = specht_representation(Partition{1, 1});
    SchurSpace s = schur_space(sign, 2);
    CHECK(s.basis.dim() == 1);
    CHECK(s.projector * s.projector == s.projector);
    CHECK(rank(s.projector) == 1);
    CHECK(s.projector * s.basis.basis == s.basis.basis);

    for (int n = 1; n <= 3; ++n) {
        SymRep triv = specht_representation(Partition{std::vector<int>{n}});
        CHECK(schur_space(triv, 1).basis.dim() == 1);
    }

    // k[Sigma_2] tensor_{k[Sigma_2]} M^{x2} is M^{x2}: rank 4 over Q^2.
    SchurSpace reg = schur_space(regular_representation(2), 2);
    CHECK(reg.basis.dim() == 4);
    CHECK(rank(reg.projector) == 4);
    CHECK(reg.projector * reg.projector == reg.projector);
}

TEST_CASE("schur_space dimension is the multiplicity-weighted tableau count") {
    std::vector<SymRep> reps{specht_representation(Partition{2, 1}),
                             regular_representation(3),
                             direct_sum(specht_representation(Partition{2, 2}),
                                        specht_representation(Partition{4}))};
    for (const SymRep& v : reps) {
        auto mults = multiplicities(v);
        for (int d = 0; d <= 3; ++d) {
            long long expect = 0;
            for (const auto& [lambda, m] : mults) expect += m * ssyt_count(lambda, d);
            CHECK(schur_space(v, d).basis.dim() == expect);
        }
    }
}

TEST_CASE("evaluation caches are safe under concurrent use") {
    SymRep rep = specht_representation(Partition{2, 1});
    FunctorExpr e = FX::schur(Partition{2, 1});
    QMatrix f(3, 2);
    f(0, 0) = Rat(1); f(0, 1) = Rat(2); f(1, 0) = Rat(-1); f(2, 1) = Rat(1, 2);
    QMatrix expected = eval(e).map(f);
    QMatrix expected_action = rep.action(Perm(std::vector<int>{2, 0, 1}));

    std::vector<std::thread> threads;
    std::vector<bool> ok(8, false);
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([&, t] {
            bool good = true;
            for (int i = 0; i < 20; ++i) {
                good = good && (eval(e).map(f) == expected);
                good = good && (rep.action(Perm(std::vector<int>{2, 0, 1})) == expected_action);
            }
            ok[static_cast<std::size_t>(t)] = good;
        });
    for (auto& th : threads) th.join();
    for (bool b : ok) CHECK(b);
}

TEST_CASE("schur basis coordinates invert the dense inclusion") {
    for (const Partition& lambda : {Partition{2, 1}, Partition{3}, Partition{1, 1}}) {
        SymRep rep = specht_representation(lambda);
        for (int d = 1; d <= 3; ++d) {
            auto basis = schur_basis(rep, d);
            QMatrix dense = basis->dense_basis();
            CHECK(rank(dense) == basis->dim());
            CHECK(basis->coords_of_invariant(dense) == QMatrix::identity(basis->dim()));
        }
    }
}

TEST_CASE("schur functor values agree with the dense conjugation") {
    // The orbit-wise induced map must equal solving through the dense basis.
    Rng rng(12345);
    SymRep rep = specht_representation(Partition{2, 1});
    for (int trial = 0; trial < 3; ++trial) {
        long d = 2, e = 3;
        QMatrix f = rng.int_matrix(e, d);
        auto src = schur_basis(rep, static_cast<int>(d));
        auto tgt = schur_basis(rep, static_cast<int>(e));
        QMatrix got = src->induced_map(f, *tgt);
        QMatrix big = kronecker(QMatrix::identity(rep.dim()), detail::kron_power(f, rep.n()));
        auto expected = solve(tgt->dense_basis(), big * src->dense_basis());
        REQUIRE(expected);
        CHECK(got == *expected);
    }
}

TEST_CASE("sum and product structure of map matrices") {
    Rng rng(3);
    QMatrix f = rng.int_matrix(2, 2);
    FunctorExpr s = FX::sum({FX::wedge_pow(1), FX::constant(1)});
    QMatrix ms = eval(s).map(f);
    CHECK(ms.rows() == 3);
    CHECK(ms(2, 2) == Rat(1));
    CHECK(ms(0, 2) == Rat(0));

    FunctorExpr p = FX::tensor_prod({FX::id(), FX::id()});
    CHECK(eval(p).map(f) == kronecker(f, f));

    FunctorExpr c = FX::compose(FX::wedge_pow(2), FX::sym_pow(2));
    CHECK(eval(c).map(f) == eval(FX::wedge_pow(2)).map(eval(FX::sym_pow(2)).map(f)));
}
