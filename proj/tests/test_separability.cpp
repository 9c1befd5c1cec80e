#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gbs/bs1n.hpp>
#include <gbs/h_quotient.hpp>
#include <gbs/number_theory.hpp>
#include <gbs/separability.hpp>

#include "graph_testlib.hpp"

#include <random>

using namespace gbs;
using namespace gbs::testlib;

TEST_CASE("meskin residual finiteness") {
  CHECK(meskin_residually_finite(1, 5));
  CHECK_FALSE(meskin_residually_finite(2, 4));
  CHECK(meskin_residually_finite(3, -3));
  // isomorphic presentations normalize to the same answer
  CHECK_FALSE(meskin_residually_finite(4, 2));
  CHECK(meskin_residually_finite(-5, 1));
  CHECK(meskin_residually_finite(2, 2));
  CHECK_THROWS_AS(meskin_residually_finite(0, 3), std::domain_error);
}

TEST_CASE("BS(m,-m) residual criterion") {
  CHECK(bs_m_minus_m_residual(2, PrimeSet::finite({2})));
  CHECK_FALSE(bs_m_minus_m_residual(3, PrimeSet::finite({2})));
  CHECK_FALSE(bs_m_minus_m_residual(1, PrimeSet::finite({3})));
  CHECK(bs_m_minus_m_residual(6, PrimeSet::finite({2, 3})));
  CHECK(bs_m_minus_m_residual(1, PrimeSet::all()));
}

TEST_CASE("BS(1,n) residual verdicts") {
  Verdict no = bs1n_residual(2, PrimeSet::finite({7}));
  CHECK(no.answer == Answer::No);

  Verdict yes = bs1n_residual(2, PrimeSet::all());
  CHECK(yes.answer == Answer::Yes);
  CHECK(yes.witness.at("prime") == 3);  // 2 divides n, so 3 is first

  Verdict p3 = bs1n_residual(4, PrimeSet::finite({3}));
  CHECK(p3.answer == Answer::Yes);
  CHECK(p3.witness.at("prime") == 3);

  // witness primes are always admissible: p does not divide n and the order
  // of n mod p is a P-number
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    Int n = Int(rng() % 60) - 30;
    if (abs(n) < 2) continue;
    PrimeSet p = trial % 2 == 0 ? PrimeSet::all()
                                : PrimeSet::all_except({next_prime_above(Int(rng() % 20))});
    Verdict v = bs1n_residual(n, p, 500);
    if (v.answer != Answer::Yes) continue;
    Int witness = v.witness.at("prime");
    CHECK(p.contains(witness));
    CHECK(n % witness != 0);
    CHECK(is_p_number(multiplicative_order(n, witness), p));
  }

  // cofinite sets with every candidate excluded stay unknown
  Verdict unknown = bs1n_residual(3, PrimeSet::all_except({2}), 2);
  CHECK(unknown.answer == Answer::Unknown);
  CHECK(unknown.bound == Int(2));
}

TEST_CASE("residual verdicts for graphs") {
  CHECK(residually_c_gbs(loop_graph(2, 3), PrimeSet::all()).answer ==
        Answer::No);
  CHECK(residually_c_gbs(trefoil_graph(), PrimeSet::finite({2, 3})).answer ==
        Answer::Yes);
  CHECK(residually_c_gbs(loop_graph(2, -2), PrimeSet::finite({3})).answer ==
        Answer::No);
  CHECK(residually_c_gbs(loop_graph(2, -2), PrimeSet::finite({2})).answer ==
        Answer::Yes);
  // missing label prime beats the missing 2
  Verdict v = residually_c_gbs(loop_graph(3, -3), PrimeSet::finite({2}));
  CHECK(v.answer == Answer::No);
  CHECK(v.reason == "label-not-p-number");

  LabeledGraph single;
  single.vertices = {"v"};
  CHECK(residually_c_gbs(single, PrimeSet::finite({7})).answer == Answer::Yes);
  CHECK(residually_c_gbs(loop_graph(1, 1), PrimeSet::finite({5})).answer ==
        Answer::Yes);
  CHECK(residually_c_gbs(loop_graph(1, -1), PrimeSet::finite({2})).answer ==
        Answer::Yes);
  CHECK(residually_c_gbs(loop_graph(1, -1), PrimeSet::finite({3})).answer ==
        Answer::No);
  CHECK(residually_c_gbs(loop_graph(1, 5), PrimeSet::finite({2})).answer ==
        Answer::Yes);  // 2 | 5 - 1

  // the BS(m,-m) criterion agrees with the graph dispatch
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    Int m = Int(rng() % 9) + 2;
    PrimeSet p = trial % 3 == 0   ? PrimeSet::all()
                 : trial % 3 == 1 ? PrimeSet::finite({2, 3})
                                  : PrimeSet::finite({Int(3)});
    Verdict graph_verdict = residually_c_gbs(loop_graph(m, -m), p);
    CHECK((graph_verdict.answer == Answer::Yes) == bs_m_minus_m_residual(m, p));
  }
}

TEST_CASE("conjugacy separability verdicts") {
  CHECK(conjugacy_separable_gbs(loop_graph(1, 2), PrimeSet::all()).answer ==
        Answer::Yes);
  Verdict no = conjugacy_separable_gbs(loop_graph(1, 2), PrimeSet::finite({2, 3}));
  CHECK(no.answer == Answer::No);
  CHECK(no.witness.at("prime") == 5);
  CHECK(conjugacy_separable_gbs(loop_graph(1, 2), PrimeSet::all_except({7}))
            .witness.at("prime") == 7);
  CHECK(conjugacy_separable_gbs(trefoil_graph(), PrimeSet::finite({2, 3})).answer ==
        Answer::Yes);
  // elementary groups: conjugacy separability = residual property
  CHECK(conjugacy_separable_gbs(loop_graph(1, -1), PrimeSet::finite({3})).answer ==
        Answer::No);
  CHECK(conjugacy_separable_gbs(loop_graph(1, 1), PrimeSet::finite({3})).answer ==
        Answer::Yes);
}

TEST_CASE("conjugacy and residual verdicts agree off the solvable case") {
  std::mt19937_64 rng(41);
  const PrimeSet sets[] = {PrimeSet::all(), PrimeSet::finite({2}),
                           PrimeSet::finite({2, 3}), PrimeSet::finite({3}),
                           PrimeSet::all_except({2})};
  int built = 0;
  while (built < 40) {
    LabeledGraph g = rng() % 2 == 0 ? random_reduced_pm1_graph(rng)
                                    : random_any_graph(rng);
    Classification cls = classify(reduced_positive_form(g).first);
    if (cls.kind == GbsClass::SolvableBs1n) continue;
    for (const PrimeSet& p : sets)
      CHECK(conjugacy_separable_gbs(g, p).answer ==
            residually_c_gbs(g, p).answer);
    ++built;
  }
}

TEST_CASE("condition (1) bounded checker") {
  Verdict yes = condition1_check(3, PrimeSet::all(), 1, 1, 2, 10);
  CHECK(yes.answer == Answer::Yes);
  CHECK(yes.witness.at("s") == 2);

  Verdict unknown = condition1_check(3, PrimeSet::all_except({2}), 1, 1, 2, 10000);
  CHECK(unknown.answer == Answer::Unknown);
  CHECK(unknown.bound == Int(10000));

  // ascending search over Xi(3, all) separates t^4 a^80 vs t^4 a^40 at s=16:
  // gcd(80,16) = 16 divides 80*3^x but never 40*3^y
  Verdict big = condition1_check(3, PrimeSet::all(), 4, 80, 40, 200);
  CHECK(big.answer == Answer::Yes);
  CHECK(big.witness.at("s") == 16);

  // finite sets admit a definitive No once the divisor analysis is exhausted
  Verdict no = condition1_check(3, PrimeSet::finite({5}), 1, 1, 2, 100);
  CHECK(no.answer == Answer::No);

  CHECK_THROWS_AS(condition1_check(2, PrimeSet::all(), 1, 5, 9, 10),
                  std::invalid_argument);  // conjugate pair
}

TEST_CASE("condition (1) Yes matches a separating quotient at the same s") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    Int n = Int(rng() % 7) - 3;
    if (n == 0 || n == 1) continue;
    Int u = Int(rng() % 4);
    Int v = Int(rng() % 21) - 10;
    Int w = Int(rng() % 21) - 10;
    Bs1nGroup g(n);
    Bs1nElement x = from_standard(g, u, v);
    Bs1nElement y = from_standard(g, u, w);
    if (are_conjugate(g, x, y)) continue;
    Verdict verdict = condition1_check(n, PrimeSet::all(), u, v, w, 300);
    if (verdict.answer != Answer::Yes) continue;
    auto q = find_separating_quotient(g, x, y, PrimeSet::all(), 300);
    REQUIRE(q.has_value());
    CHECK(q->s() == verdict.witness.at("s"));
  }
}

TEST_CASE("fusion witnesses pinned values") {
  FusionWitness f1 = fusion_witness(3, PrimeSet::all_except({2}), 2);
  CHECK(f1.u == 4);
  CHECK(f1.v == 80);
  CHECK(f1.q == 2);
  CHECK(f1.w == 40);

  FusionWitness f2 = fusion_witness(2, PrimeSet::all_except({3}), 3);
  CHECK(f2.u == 9);
  CHECK(f2.v == 511);
  CHECK(f2.q == 7);  // ord of 2 mod 7 is 3, excluded from the set
  CHECK(f2.w == 73);

  // (-2)^4 - 1 = 15 = 3 * 5; 3 lies in Xi(-2, all-{2}) because -2 = 1 mod 3,
  // so the first admissible divisor is q = 5 with ord_5(-2) = 4 = 2^2
  FusionWitness f3 = fusion_witness(-2, PrimeSet::all_except({2}), 2);
  CHECK(f3.u == 4);
  CHECK(f3.v == 15);
  CHECK(f3.q == 5);
  CHECK(f3.w == 3);

  CHECK_THROWS_AS(fusion_witness(3, PrimeSet::all(), 2), std::invalid_argument);
  CHECK_THROWS_AS(fusion_witness(3, PrimeSet::all_except({2}), 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(fusion_witness(1, PrimeSet::all_except({2}), 2),
                  std::domain_error);
}

TEST_CASE("fusion witnesses satisfy both guarantees") {
  struct Case {
    Int n;
    PrimeSet p;
    Int missing;
  };
  const Case cases[] = {{3, PrimeSet::all_except({2}), 2},
                        {-2, PrimeSet::all_except({2}), 2},
                        {2, PrimeSet::finite({5, 31}), 3}};
  for (const Case& c : cases) {
    FusionWitness f = fusion_witness(c.n, c.p, c.missing);
    CHECK(f.v == int_pow(f.n, f.u) - 1);
    CHECK(f.v == f.q * f.w);
    CHECK(is_prime(f.q));
    CHECK_FALSE(in_xi(f.n, f.q, c.p));

    Bs1nGroup g(c.n);
    Bs1nElement x = from_standard(g, f.u, f.v);
    Bs1nElement y = from_standard(g, f.u, f.w);
    CHECK_FALSE(are_conjugate(g, x, y));

    // images fuse in every admissible quotient up to order 500
    for (const OmegaPair& pair : enumerate_omega(c.n, c.p, 500)) {
      if (pair.r * pair.s > 500) continue;
      HGroup G(c.n, pair.r, pair.s);
      CHECK(h_are_conjugate_criterion(G, natural_hom(g, G, x),
                                      natural_hom(g, G, y)));
      CHECK(h_are_conjugate_bruteforce(G, natural_hom(g, G, x),
                                       natural_hom(g, G, y)));
    }
  }
}

TEST_CASE("verdicts depend on the class only through its prime set") {
  // two equal prime sets built differently give identical verdicts
  PrimeSet a = PrimeSet::parse("{2,3}");
  PrimeSet b = PrimeSet::finite({3, 2});
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    LabeledGraph g = random_any_graph(rng);
    Verdict va = conjugacy_separable_gbs(g, a);
    Verdict vb = conjugacy_separable_gbs(g, b);
    CHECK(va.answer == vb.answer);
    CHECK(va.reason == vb.reason);
    CHECK(va.witness == vb.witness);
  }
}
