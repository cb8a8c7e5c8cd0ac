#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fakenews/label.hpp"

namespace fakenews {

struct Article {
  std::string id;
  std::string title;
  std::string body;
  std::optional<Label> label;

  // Text fed to the preprocessing pipeline: title + " " + body.
  std::string text() const;

  friend bool operator==(const Article&, const Article&) = default;
};

// An ordered, id-unique collection of articles. Immutable once constructed.
class Corpus {
 public:
  Corpus() = default;
  // Throws DataError on empty or duplicate ids, or an article with no text.
  Corpus(std::vector<Article> articles, std::string source_name);

  const std::vector<Article>& articles() const noexcept { return articles_; }
  const std::string& source_name() const noexcept { return source_name_; }
  std::size_t size() const noexcept { return articles_.size(); }
  bool empty() const noexcept { return articles_.empty(); }
  const Article& operator[](std::size_t i) const { return articles_[i]; }
  auto begin() const noexcept { return articles_.begin(); }
  auto end() const noexcept { return articles_.end(); }

  bool fully_labeled() const noexcept;
  // Throws DataError naming the first unlabeled article.
  void require_labeled() const;
  std::vector<Label> labels() const;

  // Number of rows dropped at load time because both title and body were empty.
  std::size_t dropped_rows() const noexcept { return dropped_rows_; }
  void set_dropped_rows(std::size_t n) noexcept { dropped_rows_ = n; }

 private:
  std::vector<Article> articles_;
  std::string source_name_;
  std::size_t dropped_rows_ = 0;
};

// Column names in the header row. An empty id column means ids are synthesized
// as "row-<n>" (1-based data row number); an empty label column reads every
// article as unlabeled.
struct DatasetSchema {
  std::string id_column;
  std::string title_column = "title";
  std::string body_column = "text";
  std::string label_column = "label";
  char delimiter = ',';
};

using LabelMap = std::map<std::string, Label, std::less<>>;

// FAKE/REAL in upper and lower case.
LabelMap default_label_map();

// Parses "raw=FAKE,raw2=REAL". Throws ConfigError on malformed input.
LabelMap parse_label_map(std::string_view spec);

// Reads a delimiter-separated file with a header row (RFC-4180 quoting).
// Rows whose title and body are both empty are dropped and counted.
// An empty label cell leaves the article unlabeled.
Corpus load_dataset(const std::filesystem::path& path, const DatasetSchema& schema,
                    const LabelMap& label_map);
Corpus read_dataset(std::istream& in, const DatasetSchema& schema, const LabelMap& label_map,
                    std::string source_name);

// Writes id,title,body,label (using the schema's column names and delimiter).
void write_dataset(std::ostream& out, const Corpus& corpus, const DatasetSchema& schema);

struct ClassHistogram {
  std::size_t fake = 0;
  std::size_t real = 0;

  std::size_t total() const noexcept { return fake + real; }
  std::size_t operator[](Label l) const noexcept { return l == Label::Fake ? fake : real; }
  ClassHistogram& operator+=(const ClassHistogram& other) noexcept {
    fake += other.fake;
    real += other.real;
    return *this;
  }
  friend bool operator==(const ClassHistogram&, const ClassHistogram&) = default;
};

ClassHistogram class_distribution(const Corpus& corpus);

struct SplitSpec {
  double test_fraction = 0.2;
  std::uint64_t seed = 42;
  bool stratified = true;
};

struct CorpusSplit {
  Corpus train;
  Corpus test;
};

// Deterministic given the seed. |test| = round(test_fraction * |corpus|);
// stratified splits keep each class within one article of its exact share.
// Both sides keep the corpus' original relative order.
CorpusSplit split(const Corpus& corpus, const SplitSpec& spec);

}  // namespace fakenews
