#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "fakenews/corpus.hpp"
#include "fakenews/error.hpp"
#include "oracles.hpp"

namespace fakenews {
namespace {

Corpus read(const std::string& csv, DatasetSchema schema = {}, LabelMap map = default_label_map()) {
  std::istringstream in(csv);
  return read_dataset(in, schema, map, "inline");
}

Corpus make_corpus(std::size_t fake, std::size_t real) {
  std::vector<Article> articles;
  for (std::size_t i = 0; i < fake + real; ++i) {
    articles.push_back({"a" + std::to_string(i), "t", "body " + std::to_string(i),
                        i < fake ? Label::Fake : Label::Real});
  }
  return Corpus(std::move(articles), "made");
}

TEST(LoadDataset, MapsRawLabels) {
  LabelMap map{{"fake", Label::Fake}, {"REAL", Label::Real}};
  const auto c = read("title,text,label\na,b,fake\nc,d,REAL\n", {}, map);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.labels(), (std::vector<Label>{Label::Fake, Label::Real}));
  EXPECT_EQ(c[0].id, "row-1");
  EXPECT_EQ(c[1].id, "row-2");
}

TEST(LoadDataset, KeepsRowWithTitleOnly) {
  const auto c = read("title,text,label\nheadline,,FAKE\n");
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].title, "headline");
  EXPECT_TRUE(c[0].body.empty());
}

TEST(LoadDataset, DropsRowWithoutText) {
  const auto c = read("title,text,label\n,,FAKE\nx,y,REAL\n");
  EXPECT_EQ(c.size(), 1u);
  EXPECT_EQ(c.dropped_rows(), 1u);
}

TEST(LoadDataset, UnmappedLabelIsNamed) {
  try {
    read("title,text,label\na,b,FAKE\nc,d,1\n");
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("unmapped label '1'"), std::string::npos) << e.what();
  }
}

TEST(LoadDataset, WrongColumnCountNamesLine) {
  try {
    read("title,text,label\na,b,FAKE\nc,REAL\n");
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(LoadDataset, QuotedFieldsAndEmbeddedNewlines) {
  const auto c = read("id,title,text,label\n7,\"a, b\",\"line1\nline \"\"two\"\"\",REAL\n",
                      {.id_column = "id"});
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].id, "7");
  EXPECT_EQ(c[0].title, "a, b");
  EXPECT_EQ(c[0].body, "line1\nline \"two\"");
}

TEST(LoadDataset, MissingColumnIsError) {
  EXPECT_THROW(read("title,body,label\na,b,FAKE\n"), DataError);
}

TEST(LoadDataset, DuplicateIdsAreError) {
  EXPECT_THROW(read("id,title,text,label\n1,a,b,FAKE\n1,c,d,REAL\n", {.id_column = "id"}),
               DataError);
}

TEST(LoadDataset, UnreadableFile) {
  EXPECT_THROW(load_dataset("/nonexistent/x.csv", {}, default_label_map()), DataError);
}

TEST(LoadDataset, TabDelimiter) {
  const auto c = read("title\ttext\tlabel\na\tb\tFAKE\n", {.delimiter = '\t'});
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].body, "b");
}

TEST(LoadDataset, WithoutLabelColumnArticlesAreUnlabeled) {
  const auto c = read("title,text\na,b\n", {.label_column = ""});
  ASSERT_EQ(c.size(), 1u);
  EXPECT_FALSE(c[0].label.has_value());
  EXPECT_THROW(c.require_labeled(), DataError);
}

TEST(LoadDataset, RoundTripPreservesArticlesAndOrder) {
  const auto original = load_dataset(testing::data_path("fixture_news.csv"), {.id_column = "id"},
                                     default_label_map());
  std::ostringstream out;
  write_dataset(out, original, {.id_column = "id"});
  const auto again = read(out.str(), {.id_column = "id"});
  EXPECT_EQ(again.articles(), original.articles());
}

TEST(LabelMap, Parse) {
  const auto map = parse_label_map("1=FAKE, 0=REAL");
  EXPECT_EQ(map.at("1"), Label::Fake);
  EXPECT_EQ(map.at("0"), Label::Real);
  EXPECT_THROW(parse_label_map("1=MAYBE"), ConfigError);
  EXPECT_THROW(parse_label_map("nonsense"), ConfigError);
}

TEST(ClassDistribution, Counts) {
  const auto h = class_distribution(make_corpus(6, 4));
  EXPECT_EQ(h.fake, 6u);
  EXPECT_EQ(h.real, 4u);
}

TEST(ClassDistribution, Empty) {
  EXPECT_EQ(class_distribution(Corpus{}), (ClassHistogram{0, 0}));
}

TEST(ClassDistribution, UnlabeledArticleIsNamed) {
  Corpus c({{"x1", "t", "b", Label::Fake}, {"x2", "t", "b", std::nullopt}}, "c");
  try {
    class_distribution(c);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("x2"), std::string::npos);
  }
}

TEST(ClassDistribution, FixtureCounts) {
  const auto c = load_dataset(testing::data_path("fixture_news.csv"), {.id_column = "id"},
                              default_label_map());
  EXPECT_EQ(class_distribution(c), (ClassHistogram{300, 300}));
  EXPECT_EQ(c.dropped_rows(), 2u);
}

TEST(Split, StratifiedCounts) {
  const auto parts = split(make_corpus(50, 50), {0.2, 42, true});
  EXPECT_EQ(parts.train.size(), 80u);
  EXPECT_EQ(parts.test.size(), 20u);
  EXPECT_EQ(class_distribution(parts.test), (ClassHistogram{10, 10}));
}

TEST(Split, SameSeedSameMembership) {
  const auto c = make_corpus(37, 23);
  const auto a = split(c, {0.3, 7, true});
  const auto b = split(c, {0.3, 7, true});
  EXPECT_EQ(a.test.articles(), b.test.articles());
  EXPECT_EQ(a.train.articles(), b.train.articles());
}

TEST(Split, DegenerateFractionIsError) {
  EXPECT_THROW(split(make_corpus(5, 5), {0.95, 42, true}), ConfigError);
  EXPECT_THROW(split(make_corpus(5, 5), {0.0, 42, true}), ConfigError);
}

class SplitProperty : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(SplitProperty, PartitionsAndPreservesHistogram) {
  const std::uint64_t seed = GetParam();
  const auto c = make_corpus(10 + seed % 41, 10 + (seed * 7) % 53);
  for (bool stratified : {true, false}) {
    const double fraction = 0.1 + static_cast<double>(seed % 7) / 10.0;
    const auto parts = split(c, {fraction, seed, stratified});
    std::multiset<std::string> ids;
    for (const auto& a : parts.train) ids.insert(a.id);
    for (const auto& a : parts.test) ids.insert(a.id);
    ASSERT_EQ(ids.size(), c.size());
    for (const auto& a : c) EXPECT_EQ(ids.count(a.id), 1u);

    auto h = class_distribution(parts.train);
    h += class_distribution(parts.test);
    EXPECT_EQ(h, class_distribution(c));
    EXPECT_EQ(parts.test.size(),
              static_cast<std::size_t>(std::llround(fraction * static_cast<double>(c.size()))));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, SplitProperty, ::testing::Range<std::uint64_t>(0, 40));

}  // namespace
}  // namespace fakenews
