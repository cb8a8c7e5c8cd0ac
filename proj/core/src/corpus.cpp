#include "fakenews/corpus.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <random>
#include <unordered_set>

#include "csv.hpp"
#include "fakenews/error.hpp"
#include "fakenews/random.hpp"

namespace fakenews {

std::optional<Label> parse_label(std::string_view text) noexcept {
  if (text == "FAKE") return Label::Fake;
  if (text == "REAL") return Label::Real;
  return std::nullopt;
}

std::string Article::text() const { return title + " " + body; }

Corpus::Corpus(std::vector<Article> articles, std::string source_name)
    : articles_(std::move(articles)), source_name_(std::move(source_name)) {
  std::unordered_set<std::string_view> seen;
  seen.reserve(articles_.size());
  for (const auto& a : articles_) {
    if (a.id.empty()) throw DataError("article with empty id in " + source_name_);
    if (!seen.insert(a.id).second) throw DataError("duplicate article id '" + a.id + "'");
    if (a.title.empty() && a.body.empty()) {
      throw DataError("article '" + a.id + "' has neither title nor body");
    }
  }
}

bool Corpus::fully_labeled() const noexcept {
  return std::all_of(articles_.begin(), articles_.end(),
                     [](const Article& a) { return a.label.has_value(); });
}

void Corpus::require_labeled() const {
  for (const auto& a : articles_) {
    if (!a.label) throw DataError("article '" + a.id + "' is unlabeled");
  }
}

std::vector<Label> Corpus::labels() const {
  require_labeled();
  std::vector<Label> out;
  out.reserve(articles_.size());
  for (const auto& a : articles_) out.push_back(*a.label);
  return out;
}

LabelMap default_label_map() {
  return {{"FAKE", Label::Fake}, {"REAL", Label::Real}, {"fake", Label::Fake}, {"real", Label::Real}};
}

LabelMap parse_label_map(std::string_view spec) {
  auto trim = [](std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) return std::string_view{};
    return s.substr(first, s.find_last_not_of(" \t") - first + 1);
  };
  LabelMap map;
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    const auto item = trim(spec.substr(0, comma));
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.rfind('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("label map entry '" + std::string(item) + "' is not raw=LABEL");
    }
    const auto target = parse_label(trim(item.substr(eq + 1)));
    if (!target) {
      throw ConfigError("label map target '" + std::string(item.substr(eq + 1)) +
                        "' must be FAKE or REAL");
    }
    map.insert_or_assign(std::string(trim(item.substr(0, eq))), *target);
  }
  return map;
}

namespace {

std::size_t column_index(const std::vector<std::string>& header, const std::string& name,
                         const std::string& source) {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) {
    throw DataError(source + ": header has no column '" + name + "'");
  }
  return static_cast<std::size_t>(it - header.begin());
}

bool is_blank(const detail::CsvRecord& r) {
  return r.fields.size() == 1 && r.fields.front().empty();
}

}  // namespace

Corpus read_dataset(std::istream& in, const DatasetSchema& schema, const LabelMap& label_map,
                    std::string source_name) {
  detail::CsvReader reader(in, schema.delimiter);
  detail::CsvRecord record;
  if (!reader.next(record)) throw DataError(source_name + ": missing header row");
  auto header = record.fields;
  if (!header.empty() && header.front().starts_with("\xEF\xBB\xBF")) {
    header.front().erase(0, 3);
  }

  std::optional<std::size_t> id_col;
  if (!schema.id_column.empty()) id_col = column_index(header, schema.id_column, source_name);
  const auto title_col = column_index(header, schema.title_column, source_name);
  const auto body_col = column_index(header, schema.body_column, source_name);
  std::optional<std::size_t> label_col;
  if (!schema.label_column.empty()) {
    label_col = column_index(header, schema.label_column, source_name);
  }

  std::vector<Article> articles;
  std::size_t row = 0;
  std::size_t dropped = 0;
  while (reader.next(record)) {
    if (is_blank(record)) continue;
    ++row;
    if (record.fields.size() != header.size()) {
      throw DataError(source_name + ": line " + std::to_string(record.line) + ": expected " +
                      std::to_string(header.size()) + " columns, found " +
                      std::to_string(record.fields.size()));
    }
    Article a;
    a.id = id_col ? record.fields[*id_col] : "row-" + std::to_string(row);
    a.title = record.fields[title_col];
    a.body = record.fields[body_col];
    const std::string empty;
    const auto& raw = label_col ? record.fields[*label_col] : empty;
    if (!raw.empty()) {
      const auto it = label_map.find(raw);
      if (it == label_map.end()) {
        throw DataError(source_name + ": line " + std::to_string(record.line) +
                        ": unmapped label '" + raw + "'");
      }
      a.label = it->second;
    }
    if (a.title.empty() && a.body.empty()) {
      ++dropped;
      continue;
    }
    articles.push_back(std::move(a));
  }
  Corpus corpus(std::move(articles), std::move(source_name));
  corpus.set_dropped_rows(dropped);
  return corpus;
}

Corpus load_dataset(const std::filesystem::path& path, const DatasetSchema& schema,
                    const LabelMap& label_map) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open dataset '" + path.string() + "'");
  return read_dataset(in, schema, label_map, path.filename().string());
}

void write_dataset(std::ostream& out, const Corpus& corpus, const DatasetSchema& schema) {
  const std::string id_column = schema.id_column.empty() ? "id" : schema.id_column;
  const std::string label_column = schema.label_column.empty() ? "label" : schema.label_column;
  const std::vector<std::string> header{id_column, schema.title_column, schema.body_column,
                                        label_column};
  detail::write_csv_record(out, header, schema.delimiter);
  std::vector<std::string> row(4);
  for (const auto& a : corpus) {
    row[0] = a.id;
    row[1] = a.title;
    row[2] = a.body;
    row[3] = a.label ? std::string(to_string(*a.label)) : std::string{};
    detail::write_csv_record(out, row, schema.delimiter);
  }
}

ClassHistogram class_distribution(const Corpus& corpus) {
  ClassHistogram h;
  for (const auto& a : corpus) {
    if (!a.label) throw DataError("article '" + a.id + "' is unlabeled");
    if (*a.label == Label::Fake) {
      ++h.fake;
    } else {
      ++h.real;
    }
  }
  return h;
}

namespace {

Corpus subset(const Corpus& corpus, std::vector<std::size_t> indices, const char* suffix) {
  std::sort(indices.begin(), indices.end());
  std::vector<Article> articles;
  articles.reserve(indices.size());
  for (auto i : indices) articles.push_back(corpus[i]);
  return Corpus(std::move(articles), corpus.source_name() + suffix);
}

}  // namespace

CorpusSplit split(const Corpus& corpus, const SplitSpec& spec) {
  if (!(spec.test_fraction > 0.0 && spec.test_fraction < 1.0)) {
    throw ConfigError("test fraction must lie strictly between 0 and 1");
  }
  corpus.require_labeled();
  const std::size_t n = corpus.size();
  const auto n_test = static_cast<std::size_t>(std::round(spec.test_fraction * static_cast<double>(n)));
  if (n_test == 0 || n_test >= n) {
    throw ConfigError("test fraction " + std::to_string(spec.test_fraction) + " on " +
                      std::to_string(n) + " articles leaves an empty train or test side");
  }

  std::mt19937_64 rng(spec.seed);
  std::vector<std::size_t> test_idx;
  std::vector<std::size_t> train_idx;

  if (!spec.stratified) {
    auto order = shuffled_indices(n, rng);
    test_idx.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_test));
    train_idx.assign(order.begin() + static_cast<std::ptrdiff_t>(n_test), order.end());
    return {subset(corpus, std::move(train_idx), "/train"), subset(corpus, std::move(test_idx), "/test")};
  }

  std::array<std::vector<std::size_t>, 2> by_class;
  for (std::size_t i = 0; i < n; ++i) by_class[index_of(*corpus[i].label)].push_back(i);
  for (const auto& members : by_class) {
    if (members.size() < 2) {
      throw ConfigError("stratified split needs at least 2 articles per class");
    }
  }

  // Largest-remainder allocation of n_test across classes; ties go to FAKE.
  std::array<std::size_t, 2> quota{};
  std::array<double, 2> remainder{};
  std::size_t allocated = 0;
  for (std::size_t c = 0; c < 2; ++c) {
    const double exact = static_cast<double>(by_class[c].size()) * static_cast<double>(n_test) /
                         static_cast<double>(n);
    quota[c] = static_cast<std::size_t>(std::floor(exact));
    remainder[c] = exact - static_cast<double>(quota[c]);
    allocated += quota[c];
  }
  while (allocated < n_test) {
    const std::size_t c = remainder[1] > remainder[0] ? 1 : 0;
    ++quota[c];
    remainder[c] = -1.0;
    ++allocated;
  }

  for (std::size_t c = 0; c < 2; ++c) {
    auto members = by_class[c];
    deterministic_shuffle(members, rng);
    test_idx.insert(test_idx.end(), members.begin(),
                    members.begin() + static_cast<std::ptrdiff_t>(quota[c]));
    train_idx.insert(train_idx.end(), members.begin() + static_cast<std::ptrdiff_t>(quota[c]),
                     members.end());
  }
  return {subset(corpus, std::move(train_idx), "/train"), subset(corpus, std::move(test_idx), "/test")};
}

}  // namespace fakenews
