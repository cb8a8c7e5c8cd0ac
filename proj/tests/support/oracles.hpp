#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fakenews/corpus.hpp"
#include "fakenews/label.hpp"
#include "fakenews/sparse.hpp"

namespace fakenews::testing {

std::string data_path(const std::string& relative);

// tests/data/fixture_news.csv (id column "id") and its reference split:
// stratified, test fraction 0.25, seed 42.
Corpus fixture_corpus();
CorpusSplit fixture_split();

// Multinomial naive Bayes evaluated directly as P(c) * prod_t P(t|c)^x_t in
// plain probability space, then normalized over both classes.
struct NbOracle {
  Label label = Label::Fake;
  double posterior_fake = 0.0;
  double posterior_real = 0.0;
};

NbOracle brute_force_nb(const std::vector<std::vector<double>>& docs,
                        const std::vector<Label>& labels, double alpha,
                        const std::vector<double>& query);

// Classic perceptron with a bias term. True once a full pass makes no mistake.
bool perceptron_separates(const std::vector<SparseVector>& rows, const std::vector<Label>& labels,
                          std::size_t dimension, int max_epochs = 1000);

// Two classes drawn from disjoint 25-word vocabularies ("f00".."f24" for FAKE,
// "r00".."r24" for REAL), alternating labels, 8-24 words per document.
struct SyntheticCorpus {
  Corpus train;
  Corpus held_out;
};

SyntheticCorpus disjoint_corpus(std::uint64_t seed = 42, std::size_t train_size = 200,
                                std::size_t held_out_size = 50);

std::vector<double> densify(const SparseVector& v, std::size_t dimension);

}  // namespace fakenews::testing
