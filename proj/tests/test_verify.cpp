#include <gtest/gtest.h>

#include <sstream>

#include "contagion/generators.hpp"
#include "contagion/verify.hpp"

using namespace contagion;

TEST(Theorem2, Examples) {
  auto k5 = check_theorem2(complete_graph(5), Rational(1, 3));
  EXPECT_EQ(k5.h_value, 2u);
  EXPECT_EQ(k5.bound_value, Rational(10, 3));
  EXPECT_TRUE(k5.satisfied);

  auto tree = check_theorem2(balanced_two_level_tree(4).graph, Rational(3, 10));
  EXPECT_EQ(tree.h_value, 4u);
  EXPECT_EQ(tree.bound_value, Rational(51, 5));
  EXPECT_TRUE(tree.satisfied);

  // n <= 1/rho + 1: every vertex needs one infected neighbour.
  auto small = check_theorem2(random_connected_graph(6, 0.3, 3), Rational(1, 5));
  EXPECT_EQ(small.h_value, 1u);
  EXPECT_TRUE(small.satisfied);

  EXPECT_THROW(check_theorem2(Graph(2), Rational(1, 2)), Error);
}

TEST(Theorem3, Examples) {
  auto tree = check_theorem3(balanced_two_level_tree(4).graph, Rational(3, 10), Rational(1));
  EXPECT_TRUE(tree.satisfied);

  auto c5 = check_theorem3(cycle_graph(5), Rational(11, 20), Rational(1, 10));
  EXPECT_EQ(c5.h_value, 3u);
  EXPECT_EQ(c5.bound_value, Rational(121, 40));
  EXPECT_TRUE(c5.satisfied);

  auto tight = check_theorem3(cycle_graph(5), Rational(11, 20), Rational(1, 20));
  EXPECT_EQ(tight.bound_value, Rational(231, 80));
  EXPECT_FALSE(tight.satisfied);
  EXPECT_NE(tight.note.find("regime"), std::string::npos);

  auto t40 = check_theorem3(random_tree(40, 17), Rational(1, 10), Rational(0), 40);
  EXPECT_LE(t40.h_value, 4u);
  EXPECT_TRUE(t40.satisfied);

  EXPECT_THROW(check_theorem3(complete_graph(4), Rational(1, 3), Rational(1)), Error);
}

TEST(Observation1, Examples) {
  for (auto [rho, n] : {std::pair{Rational(1, 3), 5u}, {Rational(1, 5), 7u}, {Rational(1, 2), 4u}}) {
    auto o = check_obs1(rho);
    EXPECT_EQ(o.n, n);
    EXPECT_EQ(o.h_value, 2u);
    EXPECT_EQ(o.bound_value, Rational(2));
    EXPECT_TRUE(o.satisfied);
  }
  EXPECT_THROW(check_obs1(Rational(3, 4)), Error);
}

TEST(Observation3, Examples) {
  EXPECT_EQ(obs3_rho(3), Rational(2, 5));
  for (std::size_t d : {2u, 3u, 4u}) {
    auto o = check_obs3(d);
    EXPECT_EQ(o.h_value, d);
    EXPECT_EQ(o.n, 1 + d * d);
    EXPECT_TRUE(o.satisfied);
    EXPECT_EQ(floor(1 / obs3_rho(d)), Integer(d - 1));
  }
  EXPECT_THROW(check_obs3(5), Error);  // n = 26 > default limit
}

TEST(Proposition31, ExactAndStructural) {
  GadgetParams two(Rational(7, 25), 2);
  auto exact = check_prop31(two, CheckMethod::exact);
  EXPECT_EQ(exact.h_value, 4u);
  EXPECT_TRUE(exact.satisfied);
  auto structural = check_prop31(two, CheckMethod::structural);
  EXPECT_EQ(structural.h_value, 4u);
  EXPECT_EQ(structural.satisfied, exact.satisfied);

  auto ten = check_prop31(GadgetParams(Rational(7, 25), 10), CheckMethod::structural);
  EXPECT_EQ(ten.h_value, 20u);
  EXPECT_EQ(ten.bound_value, Rational(997, 50));
  EXPECT_TRUE(ten.satisfied);

  // rho = 3/17: 1/rho = 17/3, b = 5, gamma = 1/6, separating for k > 3.
  GadgetParams sep(Rational(3, 17), 4);
  ASSERT_TRUE(sep.separates());
  auto sep_structural = check_prop31(sep, CheckMethod::structural);
  EXPECT_TRUE(sep_structural.satisfied);
  auto sep_exact = check_prop31(GadgetParams(Rational(3, 17), 1), CheckMethod::exact);
  auto sep_exact_structural = check_prop31(GadgetParams(Rational(3, 17), 1), CheckMethod::structural);
  EXPECT_EQ(sep_exact.h_value, 2u);
  EXPECT_EQ(sep_exact.satisfied, sep_exact_structural.satisfied);
}

TEST(Csv, HeaderAndRow) {
  ExperimentRecord r;
  r.family = "random-tree";
  r.n = 5;
  r.m = 4;
  r.rho = Rational(1, 5);
  r.h_exact = 1;
  r.eq1_bound = Rational(113, 33);
  r.eq2_bound = Rational(3, 2);
  r.thm2_bound = Rational(2);
  r.heuristic_best = 1;
  r.trials = 10;
  r.rng_seed = 42;
  r.elapsed_ms = 0;
  std::ostringstream out;
  write_csv_row(out, r);
  EXPECT_EQ(out.str(), "random-tree,5,4,1,5,inf,1,113/33,3/2,2/1,1,10,42,0\n");
  EXPECT_EQ(experiment_csv_header,
            "family,n,m,rho_num,rho_den,girth,h_exact,eq1_bound,eq2_bound,thm2_bound,heuristic_best,trials,"
            "rng_seed,elapsed_ms");
}

TEST(Corpus, SmallRunAllSatisfied) {
  CorpusSpec spec;
  spec.count = 100;
  spec.n_min = 2;
  spec.n_max = 10;
  spec.trials = 20;
  spec.rng_seed = 5;
  std::ostringstream csv;
  auto summary = run_corpus(spec, CorpusChecks{}, csv);
  EXPECT_EQ(summary.rows, 300u);
  EXPECT_EQ(summary.violations, 0u);
  EXPECT_TRUE(summary.ok());

  std::istringstream lines(csv.str());
  std::string line;
  std::size_t count = 0;
  std::getline(lines, line);
  EXPECT_EQ(line, experiment_csv_header);
  while (std::getline(lines, line)) ++count;
  EXPECT_EQ(count, 300u);
}

TEST(Corpus, DeterministicApartFromTiming) {
  CorpusSpec spec;
  spec.count = 20;
  spec.trials = 5;
  auto strip = [](const std::string& csv) {
    std::istringstream in(csv);
    std::string line, out;
    while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + "\n";
    return out;
  };
  std::ostringstream a, b;
  spec.threads = 1;
  run_corpus(spec, CorpusChecks{}, a);
  spec.threads = 4;
  run_corpus(spec, CorpusChecks{}, b);
  EXPECT_EQ(strip(a.str()), strip(b.str()));
}

TEST(Corpus, EmptyAndErrors) {
  CorpusSpec spec;
  spec.count = 0;
  std::ostringstream csv;
  auto summary = run_corpus(spec, CorpusChecks{}, csv);
  EXPECT_EQ(summary.rows, 0u);
  EXPECT_EQ(csv.str(), std::string(experiment_csv_header) + "\n");

  try {
    run_corpus(spec, CorpusChecks{}, std::string("/nonexistent-dir/out.csv"));
    FAIL() << "expected I/O error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::io);
  }
  spec.n_min = 1;
  EXPECT_THROW(run_corpus(spec, CorpusChecks{}, csv), Error);
}

TEST(Corpus, TreesWithThm3Notes) {
  CorpusSpec spec;
  spec.family = CorpusFamily::random_tree;
  spec.count = 30;
  spec.n_min = 5;
  spec.n_max = 14;
  spec.rhos = {Rational(1, 5)};
  spec.trials = 0;
  CorpusChecks checks;
  checks.tree_bound = true;
  checks.thm3_eps = Rational(0);
  std::ostringstream csv;
  auto summary = run_corpus(spec, checks, csv);
  EXPECT_EQ(summary.violations, 0u);
  EXPECT_EQ(summary.rows, 30u);
}
