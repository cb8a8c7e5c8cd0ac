#include <gtest/gtest.h>

#include <random>

#include "fakenews/bundle.hpp"
#include "fakenews/error.hpp"
#include "fakenews/eval.hpp"
#include "fakenews/random.hpp"
#include "oracles.hpp"

namespace fakenews {
namespace {

constexpr auto F = Label::Fake;
constexpr auto R = Label::Real;

TrainingOptions options_for(ClassifierKind kind) {
  TrainingOptions o;
  o.kind = kind;
  o.created_at = "2020-01-01T00:00:00Z";
  return o;
}

TEST(Confusion, Identity) {
  const std::vector<Label> all_fake(7, F);
  EXPECT_EQ(confusion(all_fake, all_fake), (ConfusionMatrix{7, 0, 0, 0}));
}

TEST(Confusion, Inverse) {
  const std::vector<Label> pred(5, R), actual(5, F);
  EXPECT_EQ(confusion(pred, actual), (ConfusionMatrix{0, 0, 5, 0}));
}

TEST(Confusion, Mixed) {
  const std::vector<Label> pred{F, F, F, F, F, F, R, R, R, R, R, R};
  const std::vector<Label> actual{F, F, F, F, F, R, F, F, R, R, R, R};
  EXPECT_EQ(confusion(pred, actual), (ConfusionMatrix{5, 1, 2, 4}));
}

TEST(Confusion, LengthMismatch) {
  const std::vector<Label> a{F}, b{F, R};
  EXPECT_THROW(confusion(a, b), ConfigError);
}

TEST(Metrics, Formulas) {
  const auto r = metrics({5, 1, 2, 4});
  EXPECT_NEAR(r.accuracy, 0.75, 1e-12);
  EXPECT_NEAR(r.precision, 5.0 / 6.0, 1e-12);
  EXPECT_NEAR(r.recall, 5.0 / 7.0, 1e-12);
  EXPECT_NEAR(r.real.precision, 4.0 / 6.0, 1e-12);
  EXPECT_NEAR(r.real.recall, 0.8, 1e-12);
  EXPECT_TRUE(r.warnings.empty());
}

TEST(Metrics, ZeroDenominatorWarns) {
  const auto r = metrics({0, 0, 3, 2});
  EXPECT_EQ(r.precision, 0.0);
  EXPECT_EQ(r.recall, 0.0);
  EXPECT_NE(std::find(r.warnings.begin(), r.warnings.end(), "precision_undefined"), r.warnings.end());
}

TEST(Metrics, Perfect) {
  const auto r = metrics({4, 0, 0, 6});
  EXPECT_EQ(r.accuracy, 1.0);
  EXPECT_EQ(r.precision, 1.0);
  EXPECT_EQ(r.recall, 1.0);
}

class MetricsProperty : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(MetricsProperty, PermutationInvariantAndComplement) {
  std::mt19937_64 rng(GetParam());
  const std::size_t n = 1 + uniform_below(rng, 50);
  std::vector<std::pair<Label, Label>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    pairs.emplace_back(uniform_below(rng, 2) ? F : R, uniform_below(rng, 2) ? F : R);
  }
  auto unzip = [](const auto& ps, std::vector<Label>& p, std::vector<Label>& a) {
    p.clear();
    a.clear();
    for (const auto& [x, y] : ps) {
      p.push_back(x);
      a.push_back(y);
    }
  };
  std::vector<Label> p, a;
  unzip(pairs, p, a);
  const auto base = metrics(confusion(p, a));
  deterministic_shuffle(pairs, rng);
  unzip(pairs, p, a);
  const auto shuffled = metrics(confusion(p, a));
  EXPECT_EQ(base.counts, shuffled.counts);
  EXPECT_EQ(base.accuracy, shuffled.accuracy);
  EXPECT_EQ(base.precision, shuffled.precision);
  EXPECT_EQ(base.recall, shuffled.recall);

  std::vector<Label> flipped;
  for (auto l : p) flipped.push_back(flip(l));
  EXPECT_NEAR(metrics(confusion(flipped, a)).accuracy + base.accuracy, 1.0, 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Seeds, MetricsProperty, ::testing::Range<std::uint64_t>(0, 100));

TEST(Evaluate, MemorizesSeparableCorpus) {
  const Corpus c({{"1", "", "scandal hoax", F},
                  {"2", "", "hoax scandal scandal", F},
                  {"3", "", "senate budget", R},
                  {"4", "", "budget senate vote", R}},
                 "tiny");
  TrainingOptions o = options_for(ClassifierKind::PassiveAggressive);
  o.features.min_df = 1;
  for (auto kind : {ClassifierKind::NaiveBayes, ClassifierKind::Svm,
                    ClassifierKind::PassiveAggressive, ClassifierKind::Logistic}) {
    o.kind = kind;
    EXPECT_EQ(evaluate(train_bundle(c, o), c).report.accuracy, 1.0) << to_string(kind);
  }
}

TEST(Evaluate, MajorityPredictorSitsOnBaseline) {
  const Corpus c({{"1", "", "alpha beta", F},
                  {"2", "", "alpha gamma", R},
                  {"3", "", "beta gamma", F},
                  {"4", "", "gamma alpha", R}},
                 "tiny");
  TrainingOptions o = options_for(ClassifierKind::PassiveAggressive);
  o.features.min_df = 1;
  auto bundle = train_bundle(c, o);
  auto& linear = std::get<LinearModel>(bundle.classifier);
  std::fill(linear.weights.begin(), linear.weights.end(), 0.0);
  linear.bias = 1.0;
  const auto e = evaluate(bundle, c);
  EXPECT_EQ(e.report.accuracy, 0.5);
  EXPECT_TRUE(e.baseline_passed);
}

TEST(Evaluate, FixturePassiveAggressive) {
  const auto parts = testing::fixture_split();
  const auto bundle = train_bundle(parts.train, options_for(ClassifierKind::PassiveAggressive));
  const auto e = evaluate(bundle, parts.test);
  EXPECT_EQ(e.report.counts, (ConfusionMatrix{75, 3, 0, 72}));
  EXPECT_NEAR(e.report.accuracy, 0.98, 1e-12);
  EXPECT_NEAR(e.report.precision, 75.0 / 78.0, 1e-12);
  EXPECT_EQ(e.report.recall, 1.0);
  EXPECT_TRUE(e.baseline_passed);

  // One code path: evaluate's numbers are metrics(confusion(...)).
  std::vector<Label> predicted;
  for (const auto& p : e.predictions) predicted.push_back(p.label);
  const auto direct = metrics(confusion(predicted, parts.test.labels()));
  EXPECT_EQ(direct.accuracy, e.report.accuracy);
  EXPECT_EQ(direct.precision, e.report.precision);
  EXPECT_EQ(direct.recall, e.report.recall);
}

TEST(Evaluate, PredictTextAgreesWithEvaluate) {
  const auto parts = testing::fixture_split();
  const auto bundle = train_bundle(parts.train, options_for(ClassifierKind::Svm));
  const auto e = evaluate(bundle, parts.train);
  for (std::size_t i = 0; i < parts.train.size(); ++i) {
    const auto p = predict_text(bundle, parts.train[i].text());
    ASSERT_EQ(p.label, e.predictions[i].label) << parts.train[i].id;
    ASSERT_EQ(p.score, e.predictions[i].score);
  }
}

TEST(Compare, FixtureGrid) {
  const auto parts = testing::fixture_split();
  std::vector<ModelBundle> bundles;
  for (auto kind : {ClassifierKind::NaiveBayes, ClassifierKind::Svm, ClassifierKind::PassiveAggressive}) {
    bundles.push_back(train_bundle(parts.train, options_for(kind)));
  }
  const auto c = compare(bundles, parts.test);
  ASSERT_EQ(c.reports.size(), 3u);
  ASSERT_EQ(c.pairs.size(), 3u);
  EXPECT_EQ(c.reports[0].counts, (ConfusionMatrix{75, 1, 0, 74}));
  EXPECT_EQ(c.reports[1].counts, (ConfusionMatrix{75, 3, 0, 72}));
  EXPECT_EQ(c.reports[2].counts, (ConfusionMatrix{75, 3, 0, 72}));
  EXPECT_EQ(c.pairs[0].first, "nb");
  EXPECT_EQ(c.pairs[0].second, "svm");
  EXPECT_EQ(c.pairs[2].delta, 0.0);
  for (const auto& p : c.pairs) EXPECT_EQ(p.delta, p.first_accuracy - p.second_accuracy);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(c.reports[i].accuracy, evaluate(bundles[i], parts.test).report.accuracy);
  }
}

TEST(Compare, IdenticalBundlesHaveZeroDelta) {
  const auto parts = testing::fixture_split();
  const auto b = train_bundle(parts.train, options_for(ClassifierKind::NaiveBayes));
  const std::vector<ModelBundle> two{b, b};
  EXPECT_EQ(compare(two, parts.test).pairs.at(0).delta, 0.0);
  const std::vector<ModelBundle> one{b};
  EXPECT_THROW(compare(one, parts.test), ConfigError);
}

TEST(Baseline, EveryClassifierOnFixture) {
  const auto parts = testing::fixture_split();
  for (auto kind : {ClassifierKind::NaiveBayes, ClassifierKind::Svm,
                    ClassifierKind::PassiveAggressive, ClassifierKind::Logistic}) {
    const auto e = evaluate(train_bundle(parts.train, options_for(kind)), parts.test);
    EXPECT_GE(e.report.accuracy, kBaselineAccuracy) << to_string(kind);
    EXPECT_TRUE(e.baseline_passed);
  }
}

}  // namespace
}  // namespace fakenews
