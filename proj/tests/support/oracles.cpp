#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "fakenews/random.hpp"

#ifndef FAKENEWS_TEST_DATA_DIR
#error "FAKENEWS_TEST_DATA_DIR must be defined"
#endif

namespace fakenews::testing {

std::string data_path(const std::string& relative) {
  return std::string(FAKENEWS_TEST_DATA_DIR) + "/" + relative;
}

Corpus fixture_corpus() {
  return load_dataset(data_path("fixture_news.csv"), {.id_column = "id"}, default_label_map());
}

CorpusSplit fixture_split() { return split(fixture_corpus(), {0.25, 42, true}); }

NbOracle brute_force_nb(const std::vector<std::vector<double>>& docs,
                        const std::vector<Label>& labels, double alpha,
                        const std::vector<double>& query) {
  const std::size_t n = query.size();
  double joint[2];
  for (int c = 0; c < 2; ++c) {
    const Label cls = c == 0 ? Label::Fake : Label::Real;
    double members = 0.0;
    std::vector<double> mass(n, 0.0);
    double total = 0.0;
    for (std::size_t d = 0; d < docs.size(); ++d) {
      if (labels[d] != cls) continue;
      members += 1.0;
      for (std::size_t t = 0; t < n; ++t) {
        mass[t] += docs[d][t];
        total += docs[d][t];
      }
    }
    double p = members / static_cast<double>(docs.size());
    for (std::size_t t = 0; t < n; ++t) {
      const double likelihood = (mass[t] + alpha) / (total + alpha * static_cast<double>(n));
      p *= std::pow(likelihood, query[t]);
    }
    joint[c] = p;
  }
  const double evidence = joint[0] + joint[1];
  NbOracle out;
  out.posterior_fake = joint[0] / evidence;
  out.posterior_real = joint[1] / evidence;
  // Products that agree to within rounding are a tie, and ties go to FAKE.
  const bool tie = std::abs(joint[0] - joint[1]) <= 1e-12 * std::max(joint[0], joint[1]);
  out.label = tie || joint[0] > joint[1] ? Label::Fake : Label::Real;
  return out;
}

bool perceptron_separates(const std::vector<SparseVector>& rows, const std::vector<Label>& labels,
                          std::size_t dimension, int max_epochs) {
  std::vector<double> w(dimension, 0.0);
  double b = 0.0;
  for (int epoch = 0; epoch < max_epochs; ++epoch) {
    std::size_t mistakes = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const double y = labels[i] == Label::Fake ? 1.0 : -1.0;
      double margin = b;
      for (const auto& e : rows[i]) margin += w[e.index] * e.value;
      if (y * margin <= 0.0) {
        ++mistakes;
        for (const auto& e : rows[i]) w[e.index] += y * e.value;
        b += y;
      }
    }
    if (mistakes == 0) return true;
  }
  return false;
}

SyntheticCorpus disjoint_corpus(std::uint64_t seed, std::size_t train_size,
                                std::size_t held_out_size) {
  std::mt19937_64 rng(seed);
  auto draw = [&](std::size_t count, const std::string& prefix) {
    std::vector<Article> articles;
    for (std::size_t i = 0; i < count; ++i) {
      const Label label = i % 2 == 0 ? Label::Fake : Label::Real;
      const char cls = label == Label::Fake ? 'f' : 'r';
      const auto length = 8 + uniform_below(rng, 17);
      std::string body;
      for (std::uint64_t k = 0; k < length; ++k) {
        char word[8];
        std::snprintf(word, sizeof word, "%c%02u", cls, static_cast<unsigned>(uniform_below(rng, 25)));
        if (!body.empty()) body += ' ';
        body += word;
      }
      articles.push_back({prefix + std::to_string(i), "", body, label});
    }
    return Corpus(std::move(articles), prefix + "synthetic");
  };
  SyntheticCorpus out;
  out.train = draw(train_size, "train-");
  out.held_out = draw(held_out_size, "held-");
  return out;
}

std::vector<double> densify(const SparseVector& v, std::size_t dimension) {
  std::vector<double> dense(dimension, 0.0);
  for (const auto& e : v) dense[e.index] = e.value;
  return dense;
}

}  // namespace fakenews::testing
