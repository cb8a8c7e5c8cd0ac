#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>

#include "fakenews/porter.hpp"
#include "oracles.hpp"

namespace fakenews {
namespace {

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

TEST(Porter, ClassicExamples) {
  const std::pair<const char*, const char*> cases[] = {
      {"caresses", "caress"}, {"ponies", "poni"},     {"ties", "ti"},          {"caress", "caress"},
      {"cats", "cat"},        {"feed", "feed"},       {"agreed", "agre"},      {"plastered", "plaster"},
      {"bled", "bled"},       {"motoring", "motor"},  {"sing", "sing"},        {"conflated", "conflat"},
      {"troubled", "troubl"}, {"sized", "size"},      {"hopping", "hop"},      {"tanned", "tan"},
      {"falling", "fall"},    {"hissing", "hiss"},    {"fizzed", "fizz"},      {"failing", "fail"},
      {"filing", "file"},     {"happy", "happi"},     {"sky", "sky"},          {"relational", "relat"},
      {"conditional", "condit"}, {"rational", "ration"}, {"valenci", "valenc"}, {"digitizer", "digit"},
      {"triplicate", "triplic"}, {"formative", "form"}, {"formalize", "formal"}, {"electrical", "electr"},
      {"revival", "reviv"},   {"allowance", "allow"}, {"inference", "infer"},  {"adjustable", "adjust"},
      {"probate", "probat"},  {"rate", "rate"},       {"cease", "ceas"},       {"controll", "control"},
      {"roll", "roll"},       {"running", "run"},     {"generalizations", "gener"}};
  for (const auto& [in, out] : cases) EXPECT_EQ(porter_stem(in), out) << in;
}

TEST(Porter, ShortAndNonAlphabeticUnchanged) {
  for (const char* w : {"", "a", "is", "2016", "covid19", "élan", "Running"}) {
    EXPECT_EQ(porter_stem(w), w);
  }
}

// Reference pair bundled with the tests; FAKENEWS_PORTER_VOC / FAKENEWS_PORTER_OUTPUT
// point at another pair (e.g. the published voc.txt / output.txt).
TEST(Porter, ReferenceVocabulary) {
  const char* voc_env = std::getenv("FAKENEWS_PORTER_VOC");
  const char* out_env = std::getenv("FAKENEWS_PORTER_OUTPUT");
  const auto voc = read_lines(voc_env ? voc_env : testing::data_path("porter/voc.txt"));
  const auto expected = read_lines(out_env ? out_env : testing::data_path("porter/output.txt"));
  ASSERT_FALSE(voc.empty());
  ASSERT_EQ(voc.size(), expected.size());
  std::size_t agree = 0;
  for (std::size_t i = 0; i < voc.size(); ++i) agree += porter_stem(voc[i]) == expected[i];
  EXPECT_GE(static_cast<double>(agree) / static_cast<double>(voc.size()), 0.999)
      << agree << " of " << voc.size();
}

TEST(Porter, IdempotentOnOwnOutput) {
  const auto voc = read_lines(testing::data_path("porter/voc.txt"));
  std::vector<std::string> unstable;
  for (const auto& w : voc) {
    const auto once = porter_stem(w);
    if (porter_stem(once) != once) unstable.push_back(w);
  }
  std::string sample;
  for (std::size_t i = 0; i < unstable.size() && i < 5; ++i) {
    sample += " " + unstable[i] + "->" + porter_stem(unstable[i]) + "->" +
              porter_stem(porter_stem(unstable[i]));
  }
  EXPECT_TRUE(unstable.empty()) << unstable.size() << " of " << voc.size()
                                << " stems change when stemmed again:" << sample;
}

}  // namespace
}  // namespace fakenews
