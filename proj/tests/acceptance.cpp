// Acceptance suite: one check per criterion, each with a wall-clock budget.
// Every comparison is exact rational arithmetic; there are no tolerances.
// Prints one PASS/FAIL line per criterion and exits nonzero on any failure.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "schurkit/schurkit.hpp"

using namespace schurkit;
using FX = FunctorExpr;

namespace {

struct CliResult {
    int exit_code;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(SCHURKIT_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, "popen failed"};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) output.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

int g_failures = 0;

void criterion(int number, const std::string& label, long budget_ms,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    auto end = std::chrono::steady_clock::now();
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    if (ms >= budget_ms) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over budget");
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << label << " [" << ms
              << " ms, budget " << budget_ms << " ms]";
    if (!ok && !detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n" << std::flush;
    if (!ok) ++g_failures;
}

std::map<Partition, long long> piece_mults(const ClassifiedOperation& c, long degree) {
    for (const auto& p : c.pieces)
        if (p.degree == degree) return p.mults;
    return {};
}

bool single_piece(const ClassifiedOperation& c, long degree,
                  const std::map<Partition, long long>& mults, std::string& detail) {
    if (c.pieces.size() != 1 || c.pieces[0].degree != degree || c.pieces[0].mults != mults) {
        std::ostringstream os;
        os << "unexpected classification:";
        for (const auto& p : c.pieces) {
            os << " degree " << p.degree << " {";
            for (const auto& [l, m] : p.mults) os << l.str() << ":" << m << " ";
            os << "}";
        }
        detail = os.str();
        return false;
    }
    return true;
}

}  // namespace

int main() {
    criterion(1, "classification of the exterior square via the CLI", 1000, [](std::string& detail) {
        CliResult r = run_cli("classify \"Wedge^2\"");
        std::string expect =
            "{\"pieces\":[{\"degree\":2,\"dim_V\":1,\"multiplicities\":{\"[1,1]\":1}}]}\n";
        if (r.exit_code != 0 || r.output != expect) {
            detail = "exit " + std::to_string(r.exit_code) + ", output " + r.output;
            return false;
        }
        return true;
    });

    criterion(2, "round trip S_{V_F} ~ F for all built-ins up to degree 4, d = 1..4", 120000,
              [](std::string& detail) {
                  std::vector<FunctorExpr> subjects;
                  for (int n = 0; n <= 4; ++n) {
                      subjects.push_back(FX::sym_pow(n));
                      subjects.push_back(FX::wedge_pow(n));
                      subjects.push_back(FX::tensor_pow(n));
                      subjects.push_back(FX::gamma_pow(n));
                      for (const Partition& lambda : partitions_of(n))
                          if (n >= 1) subjects.push_back(FX::schur(lambda));
                  }
                  for (const FunctorExpr& f : subjects) {
                      ComparisonReport r = schur_comparison(f, 4);
                      if (!r.verdict) {
                          detail = "failed for " + f.str() + ": " + r.diagnostic;
                          return false;
                      }
                      for (const auto& pd : r.per_dim)
                          if (!pd.invertible) {
                              detail = "alpha not invertible for " + f.str();
                              return false;
                          }
                      for (const auto& nc : r.naturality)
                          if (!nc.exact) {
                              detail = "naturality failed for " + f.str();
                              return false;
                          }
                  }
                  return true;
              });

    criterion(3, "round trip V ~ V_{S_V} for Specht, regular, and random sums", 60000,
              [](std::string& detail) {
                  std::vector<SymRep> subjects;
                  for (int n = 1; n <= 4; ++n) {
                      for (const Partition& lambda : partitions_of(n))
                          subjects.push_back(specht_representation(lambda));
                      subjects.push_back(regular_representation(n));
                  }
                  Rng rng(20260808);
                  for (int i = 0; i < 5; ++i) {
                      int n = static_cast<int>(rng.next_int(2, 4));
                      auto parts = partitions_of(n);
                      SymRep acc = specht_representation(
                          parts[static_cast<std::size_t>(rng.next_int(0, static_cast<long>(parts.size()) - 1))]);
                      long extra = rng.next_int(1, 2);
                      for (long k = 0; k < extra; ++k)
                          acc = direct_sum(acc, specht_representation(parts[static_cast<std::size_t>(
                                                    rng.next_int(0, static_cast<long>(parts.size()) - 1))]));
                      subjects.push_back(std::move(acc));
                  }
                  for (const SymRep& v : subjects) {
                      ComparisonReport r = module_comparison(v);
                      if (!r.verdict) {
                          detail = r.subject + ": " + r.diagnostic;
                          return false;
                      }
                      auto direct = multiplicities(v);
                      auto through = multiplicities(symmetric_module(FX::schur(v)));
                      if (direct != through) {
                          detail = r.subject + ": multiplicities differ";
                          return false;
                      }
                  }
                  return true;
              });

    criterion(4, "Schur dimensions equal SSYT counts with the length-vanishing law", 10000,
              [](std::string& detail) {
                  for (int n = 1; n <= 5; ++n)
                      for (const Partition& lambda : partitions_of(n))
                          for (int d = 0; d <= 5; ++d) {
                              long got = eval(FX::schur(lambda)).dim(d);
                              long expect = ssyt_count(lambda, d);
                              bool vanish_ok = (got == 0) == (lambda.length() > d);
                              if (got != expect || !vanish_ok) {
                                  detail = "lambda " + lambda.str() + " d " + std::to_string(d) +
                                           ": got " + std::to_string(got) + ", ssyt " +
                                           std::to_string(expect);
                                  return false;
                              }
                          }
                  return true;
              });

    criterion(5, "Gamma^n ~ Sym^n: verify passes and both classify to the trivial shape", 30000,
              [](std::string& detail) {
                  for (int n = 1; n <= 4; ++n) {
                      CliResult r = run_cli("verify \"Gamma^" + std::to_string(n) + "\" --max-dim 3");
                      if (r.exit_code != 0) {
                          detail = "verify Gamma^" + std::to_string(n) + " exited " +
                                   std::to_string(r.exit_code);
                          return false;
                      }
                      std::map<Partition, long long> expect{
                          {Partition(std::vector<int>{n}), 1}};
                      if (!single_piece(classify(FX::gamma_pow(n)), n, expect, detail)) return false;
                      if (!single_piece(classify(FX::sym_pow(n)), n, expect, detail)) return false;
                  }
                  return true;
              });

    criterion(6, "homogeneous decomposition of Sym^2 + Wedge^3 at d = 3", 1000,
              [](std::string& detail) {
                  auto pieces = homogeneous_pieces(FX::sum({FX::sym_pow(2), FX::wedge_pow(3)}), 3);
                  if (pieces.size() != 2 || pieces[0].degree != 2 || pieces[0].basis.dim() != 6 ||
                      pieces[1].degree != 3 || pieces[1].basis.dim() != 1) {
                      detail = "wrong piece ranks";
                      return false;
                  }
                  const QMatrix& p2 = pieces[0].projector;
                  const QMatrix& p3 = pieces[1].projector;
                  if (!(p2 * p2 == p2) || !(p3 * p3 == p3)) {
                      detail = "projectors not idempotent";
                      return false;
                  }
                  if (!(p2 * p3).is_zero() || !(p3 * p2).is_zero()) {
                      detail = "projectors not orthogonal";
                      return false;
                  }
                  if (p2 + p3 != QMatrix::identity(7)) {
                      detail = "projectors do not sum to the identity";
                      return false;
                  }
                  return true;
              });

    criterion(7, "polarization expansion of the tensor square", 1000, [](std::string& detail) {
        Rng rng(20260808);
        QMatrix f1 = rng.int_matrix(3, 3), f2 = rng.int_matrix(3, 3);
        PolyVars vars = make_vars({"T1", "T2"});
        MPoly t1 = MPoly::variable(0, vars), t2 = MPoly::variable(1, vars);
        PMatrix mixed = embed(f1, vars) * t1 + embed(f2, vars) * t2;
        PMatrix got = apply_functor(FX::tensor_pow(2), mixed);
        PMatrix expect = embed(kronecker(f1, f1), vars) * (t1 * t1) +
                         embed(kronecker(f1, f2), vars) * (t1 * t2) +
                         embed(kronecker(f2, f1), vars) * (t1 * t2) +
                         embed(kronecker(f2, f2), vars) * (t2 * t2);
        if (got != expect) {
            detail = "expansion mismatch";
            return false;
        }
        return true;
    });

    criterion(8, "plethysm Sym^2 o Sym^2 classifies as (4) + (2,2)", 30000,
              [](std::string& detail) {
                  FunctorExpr pleth = FX::compose(FX::sym_pow(2), FX::sym_pow(2));
                  std::map<Partition, long long> expect{{Partition{4}, 1}, {Partition{2, 2}, 1}};
                  ClassifiedOperation c = classify(pleth);
                  if (!single_piece(c, 4, expect, detail)) return false;
                  // Dimension identity at d = 2: 6 = 5 + 1.
                  long lhs = eval(pleth).dim(2);
                  long rhs = ssyt_count(Partition{4}, 2) + ssyt_count(Partition{2, 2}, 2);
                  if (lhs != 6 || rhs != 6) {
                      detail = "dimension identity 6 = 5 + 1 failed";
                      return false;
                  }
                  // Independent character oracle: the trace of the V_4 action
                  // matches the sum of the two character-table rows.
                  CharVector traced = symmetric_module(pleth).character();
                  auto table = character_table(4);
                  for (const auto& [mu, size] : conjugacy_classes(4)) {
                      Rat expect_val = table.at(Partition{4}).values.at(mu) +
                                       table.at(Partition{2, 2}).values.at(mu);
                      if (traced.values.at(mu) != expect_val) {
                          detail = "character mismatch at class " + mu.str();
                          return false;
                      }
                  }
                  return true;
              });

    criterion(9, "base-change coherence for built-ins up to degree 3", 30000,
              [](std::string& detail) {
                  std::vector<FunctorExpr> subjects;
                  for (int n = 0; n <= 3; ++n) {
                      subjects.push_back(FX::sym_pow(n));
                      subjects.push_back(FX::wedge_pow(n));
                      subjects.push_back(FX::tensor_pow(n));
                      subjects.push_back(FX::gamma_pow(n));
                      for (const Partition& lambda : partitions_of(n))
                          if (n >= 1) subjects.push_back(FX::schur(lambda));
                  }
                  PolyVars vars = make_vars({"T1", "T2"});
                  Rng rng(20260808);
                  std::vector<PMatrix> matrices;
                  std::vector<std::map<std::string, Rat>> assignments;
                  for (int i = 0; i < 10; ++i) {
                      long d = 2 + (i % 2);
                      PMatrix m(d, d, MPoly(vars));
                      for (long r = 0; r < d; ++r)
                          for (long c = 0; c < d; ++c) {
                              MPoly entry(vars);
                              for (int t = 0; t < 2; ++t) {
                                  std::vector<int> e{static_cast<int>(rng.next_int(0, 2)),
                                                     static_cast<int>(rng.next_int(0, 2))};
                                  if (e[0] + e[1] > 2) e[1] = 2 - e[0];
                                  entry += MPoly::monomial(Rat(rng.next_int(-2, 2)), e, vars);
                              }
                              m(r, c) = entry;
                          }
                      matrices.push_back(std::move(m));
                      assignments.push_back({{"T1", Rat(rng.next_int(-3, 3))},
                                             {"T2", Rat(rng.next_int(-3, 3), rng.next_int(1, 2))}});
                  }
                  for (const FunctorExpr& f : subjects)
                      for (std::size_t i = 0; i < matrices.size(); ++i)
                          if (!check_base_change(f, matrices[i], assignments[i])) {
                              detail = "failed for " + f.str() + " on matrix " + std::to_string(i);
                              return false;
                          }
                  return true;
              });

    criterion(10, "symmetric-group kernel oracles", 30000, [](std::string& detail) {
        // Character-row orthonormality for n <= 6.
        for (int n = 0; n <= 6; ++n) {
            auto table = character_table(n);
            auto classes = conjugacy_classes(n);
            Rat order(factorial(n), mpz_class(1));
            for (const auto& [la, rowa] : table)
                for (const auto& [lb, rowb] : table) {
                    Rat acc(0);
                    for (const auto& [mu, size] : classes)
                        acc += Rat(static_cast<long>(size)) * rowa.values.at(mu) *
                               rowb.values.at(mu);
                    acc /= order;
                    if (acc != (la == lb ? Rat(1) : Rat(0))) {
                        detail = "orthonormality failed at n " + std::to_string(n);
                        return false;
                    }
                }
        }
        // Sum of squared dimensions is n! for n <= 7.
        for (int n = 0; n <= 7; ++n) {
            mpz_class sum = 0;
            for (const Partition& lambda : partitions_of(n)) {
                long long f = hook_dimension(lambda);
                sum += mpz_class(static_cast<long>(f)) * static_cast<long>(f);
            }
            if (sum != factorial(n)) {
                detail = "dimension identity failed at n " + std::to_string(n);
                return false;
            }
        }
        // Specht homomorphism law, exhaustive for n <= 4.
        for (int n = 2; n <= 4; ++n)
            for (const Partition& lambda : partitions_of(n)) {
                SymRep rep = specht_representation(lambda);
                for (const Perm& s : all_perms(n))
                    for (const Perm& t : all_perms(n))
                        if (rep.action(s * t) != rep.action(t) * rep.action(s)) {
                            detail = "homomorphism law failed for " + lambda.str();
                            return false;
                        }
            }
        return true;
    });

    criterion(11, "the three irreducible degree-3 operations", 10000, [](std::string& detail) {
        if (!single_piece(classify(FX::sym_pow(3)), 3, {{Partition{3}, 1}}, detail)) return false;
        if (!single_piece(classify(FX::wedge_pow(3)), 3, {{Partition{1, 1, 1}, 1}}, detail))
            return false;
        if (!single_piece(classify(FX::schur(Partition{2, 1})), 3, {{Partition{2, 1}, 1}}, detail))
            return false;
        return true;
    });

    if (g_failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << g_failures << " acceptance criterion(s) failed\n";
    return 1;
}
