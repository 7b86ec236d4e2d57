#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numeric>
#include <random>

#include "nagasent/error.hpp"
#include "nagasent/labels.hpp"
#include "nagasent/svm.hpp"
#include "oracles.hpp"

using namespace nagasent;

namespace {

oracle::Kernel to_oracle(KernelType k) {
  switch (k) {
    case KernelType::linear: return oracle::Kernel::linear;
    case KernelType::poly: return oracle::Kernel::poly;
    case KernelType::rbf: return oracle::Kernel::rbf;
  }
  return oracle::Kernel::linear;
}

// Decision value recomputed from the raw dual variables.
double oracle_decision(const oracle::BinaryProblem& p, const PairFit& fit, const SvmConfig& c,
                       const std::vector<double>& row) {
  double f = fit.machine.intercept;
  const double gamma = c.resolved_gamma(row.size());
  for (std::size_t i = 0; i < p.x.size(); ++i) {
    f += fit.alpha[i] * p.y[i] * oracle::kernel(to_oracle(c.kernel), p.x[i], row, gamma, c.coef0, c.degree);
  }
  return f;
}

double training_accuracy(const oracle::BinaryProblem& p, const SvmConfig& c) {
  const PairFit fit = svm_fit_pair(Matrix::from_rows(p.x), p.y, c);
  std::size_t ok = 0;
  for (std::size_t i = 0; i < p.x.size(); ++i) {
    const double f = decision_value(fit.machine, c, p.x[i]);
    ok += (f > 0 ? 1 : -1) == p.y[i];
  }
  return static_cast<double>(ok) / static_cast<double>(p.x.size());
}

}  // namespace

TEST_CASE("kernel values") {
  SvmConfig c;
  const std::vector<double> x{1, 2}, z{3, 4};
  c.kernel = KernelType::linear;
  CHECK(kernel_eval(c, x, z) == 11.0);
  c.kernel = KernelType::poly;
  c.gamma = 1.0;
  c.coef0 = 1.0;
  c.degree = 2;
  CHECK(kernel_eval(c, std::vector<double>{1, 1}, std::vector<double>{1, 0}) == 4.0);
  c.degree = 3;
  CHECK(kernel_eval(c, std::vector<double>{1, 1}, std::vector<double>{1, 0}) == 8.0);
  c.kernel = KernelType::rbf;
  c.gamma = 0.5;
  CHECK(kernel_eval(c, x, x) == 1.0);
  CHECK(kernel_eval(c, x, z) == doctest::Approx(std::exp(-4.0)));
  c.gamma.reset();
  CHECK(c.resolved_gamma(9) == doctest::Approx(1.0 / 9));
  CHECK_THROWS_AS(kernel_eval(c, x, std::vector<double>{1}), InputError);
}

TEST_CASE("kernels are symmetric and Gram matrices are PSD") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g(0.0, 1.0);
  for (KernelType k : {KernelType::linear, KernelType::poly, KernelType::rbf}) {
    SvmConfig c;
    c.kernel = k;
    c.coef0 = 1.0;
    const std::size_t n = 30, d = 9;
    std::vector<std::vector<double>> rows(n, std::vector<double>(d));
    for (auto& r : rows) {
      for (auto& v : r) v = g(rng);
    }
    Eigen::MatrixXd gram(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        gram(i, j) = kernel_eval(c, rows[i], rows[j]);
        CHECK(gram(i, j) == kernel_eval(c, rows[j], rows[i]));
        if (k == KernelType::rbf) {
          CHECK(gram(i, j) > 0.0);
          CHECK(gram(i, j) <= 1.0);
        }
      }
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
    CHECK(es.eigenvalues().minCoeff() >= -1e-8 * std::max(1.0, es.eigenvalues().maxCoeff()));
  }
}

TEST_CASE("separable blobs and XOR") {
  oracle::BinaryProblem blobs{{{1, 0}, {1, 1}, {2, 0.5}, {-1, 0}, {-1, 1}, {-2, 0.5}},
                              {1, 1, 1, -1, -1, -1}};
  SvmConfig linear;
  linear.kernel = KernelType::linear;
  CHECK(training_accuracy(blobs, linear) == 1.0);

  oracle::BinaryProblem xr{{{0, 0}, {1, 1}, {0, 1}, {1, 0}}, {-1, -1, 1, 1}};
  SvmConfig rbf;
  rbf.kernel = KernelType::rbf;
  rbf.gamma = 1.0;
  CHECK(training_accuracy(xr, rbf) == 1.0);
  CHECK(training_accuracy(xr, linear) < 1.0);
}

TEST_CASE("SMO optimality on random problems") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 10 + rng() % 51;
    const std::size_t d = 1 + rng() % 9;
    const auto p = oracle::random_binary_problem(rng, n, d);
    SvmConfig c;
    c.kernel = static_cast<KernelType>(trial % 3);
    c.coef0 = 1.0;
    c.seed = static_cast<std::uint64_t>(trial);
    SmoTrace trace;
    const PairFit fit = svm_fit_pair(Matrix::from_rows(p.x), p.y, c, &trace);

    double sum_ay = 0.0;
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(fit.alpha[i] >= 0.0);
      CHECK(fit.alpha[i] <= c.c_penalty);
      sum_ay += fit.alpha[i] * p.y[i];
      const double yf = p.y[i] * oracle_decision(p, fit, c, p.x[i]);
      worst = std::max(worst, oracle::kkt_violation(fit.alpha[i], c.c_penalty, yf, 0.0));
    }
    CHECK(std::abs(sum_ay) <= 1e-6);
    CHECK(worst <= c.tol);
    CHECK_FALSE(fit.support_indices.empty());
    CHECK(fit.iterations == trace.objective.size());
    for (std::size_t t = 1; t < trace.objective.size(); ++t) {
      CHECK(trace.objective[t] >= trace.objective[t - 1] - 1e-12 * std::abs(trace.objective[t - 1]));
    }
    // compact machine agrees with the full dual expansion
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::abs(decision_value(fit.machine, c, p.x[i]) - oracle_decision(p, fit, c, p.x[i])) <=
            1e-6);
    }
  }
}

TEST_CASE("SMO is deterministic for a fixed seed") {
  std::mt19937_64 rng(3);
  const auto p = oracle::random_binary_problem(rng, 40, 4);
  SvmConfig c;
  c.seed = 11;
  const PairFit a = svm_fit_pair(Matrix::from_rows(p.x), p.y, c);
  const PairFit b = svm_fit_pair(Matrix::from_rows(p.x), p.y, c);
  CHECK(a.alpha == b.alpha);
  CHECK(a.machine.intercept == b.machine.intercept);
}

TEST_CASE("iteration budget and argument errors") {
  std::mt19937_64 rng(8);
  const auto p = oracle::random_binary_problem(rng, 30, 3);
  const Matrix x = Matrix::from_rows(p.x);
  SvmConfig c;
  c.max_iterations = 1;
  try {
    svm_fit_pair(x, p.y, c);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.iterations() == 1);
  }
  SvmConfig bad;
  bad.c_penalty = 0.0;
  CHECK_THROWS_AS(svm_fit_pair(x, p.y, bad), InputError);
  bad = SvmConfig{};
  bad.gamma = -1.0;
  CHECK_THROWS_AS(svm_fit_pair(x, p.y, bad), InputError);
  std::vector<int> same(p.y.size(), 1);
  CHECK_THROWS_AS(svm_fit_pair(x, same, SvmConfig{}), InputError);
  std::vector<int> bad_target(p.y);
  bad_target[0] = 0;
  CHECK_THROWS_AS(svm_fit_pair(x, bad_target, SvmConfig{}), InputError);
}

TEST_CASE("one-vs-one pair layout") {
  std::mt19937_64 rng(21);
  std::vector<std::vector<double>> rows;
  std::vector<std::string> labels;
  oracle::random_three_class(rng, 45, 4, rows, labels);
  const Matrix x = Matrix::from_rows(rows);
  const SvmModel m = svm_fit(x, labels, SvmConfig{});
  REQUIRE(m.pairs.size() == 3);
  CHECK(m.labels == std::vector<std::string>{"negative", "neutral", "positive"});
  CHECK(m.pairs[0].positive == 0);
  CHECK(m.pairs[0].negative == 1);
  CHECK(m.pairs[2].positive == 1);
  CHECK(m.pairs[2].negative == 2);
  for (const auto& pr : m.pairs) CHECK(pr.machine.dual_coef.size() > 0);

  const auto scores = svm_predict(m, x.row(0));
  CHECK(scores.size() == 3);
  double total_votes = 0;
  for (const auto& s : scores) total_votes += s.score;
  CHECK(total_votes == 3.0);

  // eight emotions: 28 pairwise machines
  std::vector<std::string> emo;
  std::vector<std::vector<double>> erows;
  std::normal_distribution<double> g(0.0, 1.0);
  for (int i = 0; i < 64; ++i) {
    const auto e = kAllEmotions[static_cast<std::size_t>(i % 8)];
    emo.emplace_back(to_string(e));
    erows.push_back({static_cast<double>(i % 8) + 0.3 * g(rng), g(rng)});
  }
  const SvmModel em = svm_fit(Matrix::from_rows(erows), emo, SvmConfig{});
  CHECK(em.pairs.size() == 28);

  // an absent label in the label set removes its pairs
  std::vector<std::string> set{"negative", "neutral", "other", "positive"};
  const SvmModel sparse = svm_fit(x, labels, SvmConfig{}, set);
  CHECK(sparse.labels.size() == 4);
  CHECK(sparse.pairs.size() == 3);

  CHECK_THROWS_AS(svm_predict(m, std::vector<double>{1, 2}), InputError);
  CHECK_THROWS_AS(svm_fit(x, std::vector<std::string>(45, "neutral"), SvmConfig{}), InputError);
}

TEST_CASE("vote ties break on summed margin then label order") {
  SvmModel m;
  m.labels = {"label0", "label1", "label2"};
  m.config.kernel = KernelType::linear;
  m.feature_count = 1;
  auto machine = [](double b) {
    BinarySvm s;
    s.support_vectors = Matrix(0, 1);
    s.intercept = b;
    return s;
  };
  m.pairs.push_back({0, 1, machine(0.5)});   // label0 wins by 0.5
  m.pairs.push_back({0, 2, machine(-2.0)});  // label2 wins by 2
  m.pairs.push_back({1, 2, machine(1.0)});   // label1 wins by 1
  const auto s = svm_predict(m, std::vector<double>{0.0});
  CHECK(s[0].label == "label2");
  CHECK(s[1].label == "label1");
  CHECK(s[2].label == "label0");
  CHECK(s[0].score == 1.0);
  CHECK(s[0].margin == 2.0);
  CHECK(svm_predict(m, std::vector<double>{0.0}) == s);

  // equal votes and equal margins: earlier label first
  m.pairs[1].machine.intercept = -0.5;
  m.pairs[2].machine.intercept = 0.5;
  const auto t = svm_predict(m, std::vector<double>{0.0});
  CHECK(t[0].label == "label0");
  CHECK(t[1].label == "label1");
  CHECK(t[2].label == "label2");
}
