#include "fakenews/bundle.hpp"

#include <unistd.h>
#include <zlib.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "fakenews/error.hpp"

namespace fakenews {

using nlohmann::json;

namespace {

std::string crc32_hex(std::string_view bytes) {
  uLong crc = crc32(0L, Z_NULL, 0);
  crc = crc32(crc, reinterpret_cast<const Bytef*>(bytes.data()), static_cast<uInt>(bytes.size()));
  std::ostringstream out;
  out << std::hex << std::setw(8) << std::setfill('0') << crc;
  return out.str();
}

json dense_array(const std::vector<double>& values) {
  json array = values;
  return {{"dimension", values.size()}, {"values", array}, {"crc32", crc32_hex(array.dump())}};
}

std::vector<double> read_dense_array(const json& j, const char* what) {
  const auto& values = j.at("values");
  if (j.at("crc32").get<std::string>() != crc32_hex(values.dump())) {
    throw DataError(std::string("checksum mismatch in ") + what);
  }
  auto out = values.get<std::vector<double>>();
  if (out.size() != j.at("dimension").get<std::size_t>()) {
    throw DataError(std::string(what) + " length differs from its declared dimension");
  }
  return out;
}

json pipeline_to_json(const PipelineConfig& p) {
  json j = {{"lowercase", p.lowercase},
            {"stopwords_enabled", p.stopwords_enabled},
            {"stopword_list_id", p.stopword_list_id},
            {"stemming_enabled", p.stemming_enabled},
            {"min_token_length", p.min_token_length}};
  if (!p.custom_stopwords.empty()) j["custom_stopwords"] = p.custom_stopwords;
  return j;
}

PipelineConfig pipeline_from_json(const json& j) {
  PipelineConfig p;
  p.lowercase = j.at("lowercase").get<bool>();
  p.stopwords_enabled = j.at("stopwords_enabled").get<bool>();
  p.stopword_list_id = j.at("stopword_list_id").get<std::string>();
  p.stemming_enabled = j.at("stemming_enabled").get<bool>();
  p.min_token_length = j.at("min_token_length").get<std::size_t>();
  if (j.contains("custom_stopwords")) {
    p.custom_stopwords = j.at("custom_stopwords").get<std::vector<std::string>>();
  }
  return p;
}

json features_to_json(const FeatureConfig& f) {
  return {{"min_df", f.min_df},
          {"max_features", f.max_features ? json(*f.max_features) : json(nullptr)},
          {"weighting", to_string(f.weighting)},
          {"l2_normalize", f.l2_normalize}};
}

FeatureConfig features_from_json(const json& j) {
  FeatureConfig f;
  f.min_df = j.at("min_df").get<std::size_t>();
  if (!j.at("max_features").is_null()) f.max_features = j.at("max_features").get<std::size_t>();
  const auto weighting = parse_weighting(j.at("weighting").get<std::string>());
  if (!weighting) throw DataError("unknown feature weighting in bundle");
  f.weighting = *weighting;
  f.l2_normalize = j.at("l2_normalize").get<bool>();
  return f;
}

json train_config_to_json(const TrainConfig& c) {
  return {{"epochs", c.epochs},
          {"seed", c.seed},
          {"shuffle_each_epoch", c.shuffle_each_epoch},
          {"aggressiveness", c.aggressiveness},
          {"lambda", c.lambda},
          {"eta0", c.eta0}};
}

TrainConfig train_config_from_json(const json& j) {
  TrainConfig c;
  c.epochs = j.at("epochs").get<int>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.shuffle_each_epoch = j.at("shuffle_each_epoch").get<bool>();
  c.aggressiveness = j.at("aggressiveness").get<double>();
  c.lambda = j.at("lambda").get<double>();
  c.eta0 = j.at("eta0").get<double>();
  return c;
}

json vocabulary_to_json(const Vocabulary& v) {
  return {{"num_documents", v.num_documents()},
          {"terms", v.terms()},
          {"document_frequency", v.document_frequency()}};
}

json tfidf_to_json(const std::optional<TfidfModel>& t) {
  if (!t) return nullptr;
  return {{"num_documents", t->num_documents}, {"idf", dense_array(t->idf)}};
}

json classifier_to_json(const Classifier& c) {
  json j = {{"kind", to_string(kind_of(c))}};
  if (const auto* nb = std::get_if<NaiveBayesModel>(&c)) {
    j["alpha"] = nb->alpha;
    j["num_terms"] = nb->num_terms;
    j["log_prior"] = {{"FAKE", nb->log_prior[index_of(Label::Fake)]},
                      {"REAL", nb->log_prior[index_of(Label::Real)]}};
    j["log_likelihood"] = {{"FAKE", dense_array(nb->log_likelihood[index_of(Label::Fake)])},
                           {"REAL", dense_array(nb->log_likelihood[index_of(Label::Real)])}};
  } else {
    const auto& lm = std::get<LinearModel>(c);
    j["weights"] = dense_array(lm.weights);
    j["bias"] = lm.bias;
    j["train_config"] = train_config_to_json(lm.config);
  }
  return j;
}

Classifier classifier_from_json(const json& j) {
  const auto kind = parse_classifier_kind(j.at("kind").get<std::string>());
  if (!kind) throw DataError("unknown classifier kind in bundle");
  if (*kind == ClassifierKind::NaiveBayes) {
    NaiveBayesModel nb;
    nb.alpha = j.at("alpha").get<double>();
    nb.num_terms = j.at("num_terms").get<std::size_t>();
    nb.log_prior[index_of(Label::Fake)] = j.at("log_prior").at("FAKE").get<double>();
    nb.log_prior[index_of(Label::Real)] = j.at("log_prior").at("REAL").get<double>();
    nb.log_likelihood[index_of(Label::Fake)] =
        read_dense_array(j.at("log_likelihood").at("FAKE"), "FAKE log-likelihoods");
    nb.log_likelihood[index_of(Label::Real)] =
        read_dense_array(j.at("log_likelihood").at("REAL"), "REAL log-likelihoods");
    for (const auto& row : nb.log_likelihood) {
      if (row.size() != nb.num_terms) throw DataError("naive Bayes likelihood dimension mismatch");
    }
    return nb;
  }
  LinearModel lm;
  switch (*kind) {
    case ClassifierKind::Svm: lm.kind = LinearKind::Svm; break;
    case ClassifierKind::Logistic: lm.kind = LinearKind::Logistic; break;
    default: lm.kind = LinearKind::PassiveAggressive; break;
  }
  lm.weights = read_dense_array(j.at("weights"), "weights");
  lm.bias = j.at("bias").get<double>();
  lm.config = train_config_from_json(j.at("train_config"));
  return lm;
}

json payload_to_json(const ModelBundle& b) {
  return {{"pipeline", pipeline_to_json(b.pipeline)},
          {"features", features_to_json(b.features)},
          {"vocabulary", vocabulary_to_json(b.vocabulary)},
          {"tfidf", tfidf_to_json(b.tfidf)},
          {"classifier", classifier_to_json(b.classifier)},
          {"provenance",
           {{"dataset", b.provenance.dataset},
            {"seed", b.provenance.seed},
            {"created_at", b.provenance.created_at}}}};
}

std::string slurp(const std::filesystem::path& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(std::string("cannot open ") + what + " '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_atomically(const std::filesystem::path& path, std::string_view contents) {
  const auto dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  std::string tmpl = (dir / ("." + path.filename().string() + ".tmpXXXXXX")).string();
  const int fd = ::mkstemp(tmpl.data());
  if (fd < 0) throw DataError("cannot write '" + path.string() + "': directory not writable");
  const std::filesystem::path tmp(tmpl);
  bool ok = true;
  std::size_t written = 0;
  while (ok && written < contents.size()) {
    const auto n = ::write(fd, contents.data() + written, contents.size() - written);
    if (n < 0) {
      ok = false;
    } else {
      written += static_cast<std::size_t>(n);
    }
  }
  ok = ok && ::fsync(fd) == 0;
  ok = (::close(fd) == 0) && ok;
  // mkstemp creates 0600 files; give the result ordinary permissions.
  std::error_code ec;
  if (ok) {
    std::filesystem::permissions(tmp,
                                 std::filesystem::perms::owner_read |
                                     std::filesystem::perms::owner_write |
                                     std::filesystem::perms::group_read |
                                     std::filesystem::perms::others_read,
                                 ec);
    std::filesystem::rename(tmp, path, ec);
    ok = !ec;
  }
  if (!ok) {
    std::filesystem::remove(tmp, ec);
    throw DataError("failed to write '" + path.string() + "'");
  }
}

}  // namespace

void ModelBundle::validate() const {
  const auto n = vocabulary.size();
  if (dimension(classifier) != n) {
    throw DataError("classifier dimension " + std::to_string(dimension(classifier)) +
                    " does not match vocabulary size " + std::to_string(n));
  }
  if (features.weighting == Weighting::Tfidf) {
    if (!tfidf) throw DataError("TF-IDF bundle is missing its IDF weights");
    if (tfidf->dimension() != n) throw DataError("IDF dimension does not match vocabulary size");
  } else if (tfidf) {
    throw DataError("count-weighted bundle carries unexpected IDF weights");
  }
}

std::string ModelBundle::feature_fingerprint() const {
  const json j = {{"pipeline", pipeline_to_json(pipeline)},
                  {"features", features_to_json(features)},
                  {"vocabulary", vocabulary_to_json(vocabulary)},
                  {"tfidf", tfidf_to_json(tfidf)}};
  return crc32_hex(j.dump());
}

ModelBundle train_bundle(const Corpus& corpus, const TrainingOptions& options) {
  options.pipeline.validate();
  options.features.validate();
  const auto labels = corpus.labels();

  const Preprocessor preprocessor(options.pipeline);
  std::vector<TokenSequence> docs;
  docs.reserve(corpus.size());
  for (const auto& article : corpus) docs.push_back(preprocessor(article.text()));

  ModelBundle bundle;
  bundle.pipeline = options.pipeline;
  bundle.features = options.features;
  bundle.vocabulary =
      build_vocabulary(docs, options.features.min_df, options.features.max_features);
  const auto counts = vectorize_counts(docs, bundle.vocabulary);
  if (options.features.weighting == Weighting::Tfidf) {
    bundle.tfidf = fit_idf(counts, bundle.vocabulary);
  }
  // Placeholder so the featurizer can run before the classifier exists.
  LinearModel placeholder;
  placeholder.weights.assign(bundle.vocabulary.size(), 0.0);
  bundle.classifier = std::move(placeholder);

  const Featurizer featurize(bundle);
  std::vector<SparseVector> rows;
  rows.reserve(counts.rows.size());
  for (std::size_t i = 0; i < counts.rows.size(); ++i) {
    rows.push_back(featurize.transform(counts.rows[i], counts.doc_lengths[i]));
  }

  const auto n = bundle.vocabulary.size();
  switch (options.kind) {
    case ClassifierKind::NaiveBayes:
      bundle.classifier = train_nb(rows, n, labels, options.nb_alpha);
      break;
    case ClassifierKind::Svm:
      bundle.classifier = train_linear(LinearKind::Svm, rows, n, labels, options.train);
      break;
    case ClassifierKind::PassiveAggressive:
      bundle.classifier =
          train_linear(LinearKind::PassiveAggressive, rows, n, labels, options.train);
      break;
    case ClassifierKind::Logistic:
      bundle.classifier = train_linear(LinearKind::Logistic, rows, n, labels, options.train);
      break;
  }
  bundle.provenance = {corpus.source_name(), options.train.seed, options.created_at};
  bundle.validate();
  return bundle;
}

Featurizer::Featurizer(const ModelBundle& bundle)
    : bundle_(bundle), preprocessor_(bundle.pipeline) {}

SparseVector Featurizer::transform(const SparseVector& counts, std::size_t doc_length) const {
  SparseVector v = bundle_.features.weighting == Weighting::Tfidf
                       ? tfidf_transform(counts, doc_length, *bundle_.tfidf)
                       : counts;
  if (bundle_.features.l2_normalize) v = l2_normalize(v);
  return v;
}

FeaturizedText Featurizer::operator()(std::string_view text) const {
  const auto tokens = preprocessor_(text);
  FeaturizedText out;
  for (const auto& t : tokens) {
    if (bundle_.vocabulary.index_of(t)) {
      out.retained_tokens.push_back(t);
    } else {
      ++out.oov_count;
    }
  }
  out.features = transform(count_vectorize(tokens, bundle_.vocabulary), tokens.size());
  return out;
}

Predictor::Predictor(const ModelBundle& bundle) : bundle_(bundle), featurizer_(bundle) {}

TextPrediction Predictor::operator()(std::string_view text) const {
  auto featurized = featurizer_(text);
  const auto p = predict(bundle_.classifier, featurized.features);
  TextPrediction out;
  out.label = p.label;
  out.score = p.score;
  out.probability = p.probability;
  out.fallback = featurized.features.empty();
  out.retained_tokens = std::move(featurized.retained_tokens);
  out.oov_count = featurized.oov_count;
  return out;
}

TextPrediction predict_text(const ModelBundle& bundle, std::string_view text) {
  return Predictor(bundle)(text);
}

std::string serialize_bundle(const ModelBundle& bundle) {
  bundle.validate();
  const json payload = payload_to_json(bundle);
  const json doc = {{"format", "fakenews-bundle"},
                    {"format_version", bundle.format_version},
                    {"checksum", "crc32:" + crc32_hex(payload.dump())},
                    {"payload", payload}};
  return doc.dump(1) + "\n";
}

ModelBundle parse_bundle(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("corrupt bundle: ") + e.what());
  }
  try {
    if (!doc.is_object() || doc.value("format", "") != "fakenews-bundle") {
      throw DataError("not a fakenews model bundle");
    }
    const int version = doc.at("format_version").get<int>();
    if (version != kBundleFormatVersion) {
      throw DataError("unsupported bundle format_version " + std::to_string(version));
    }
    const auto& payload = doc.at("payload");
    if (doc.at("checksum").get<std::string>() != "crc32:" + crc32_hex(payload.dump())) {
      throw DataError("bundle checksum mismatch");
    }
    ModelBundle b;
    b.format_version = version;
    b.pipeline = pipeline_from_json(payload.at("pipeline"));
    b.features = features_from_json(payload.at("features"));
    const auto& v = payload.at("vocabulary");
    b.vocabulary = Vocabulary(v.at("terms").get<std::vector<std::string>>(),
                              v.at("document_frequency").get<std::vector<std::size_t>>(),
                              v.at("num_documents").get<std::size_t>());
    if (const auto& t = payload.at("tfidf"); !t.is_null()) {
      b.tfidf = TfidfModel{read_dense_array(t.at("idf"), "idf"),
                           t.at("num_documents").get<std::size_t>()};
    }
    b.classifier = classifier_from_json(payload.at("classifier"));
    const auto& prov = payload.at("provenance");
    b.provenance = {prov.at("dataset").get<std::string>(), prov.at("seed").get<std::uint64_t>(),
                    prov.at("created_at").get<std::string>()};
    b.validate();
    return b;
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed bundle: ") + e.what());
  }
}

void save_bundle(const ModelBundle& bundle, const std::filesystem::path& path) {
  write_atomically(path, serialize_bundle(bundle));
}

ModelBundle load_bundle(const std::filesystem::path& path) {
  return parse_bundle(slurp(path, "bundle"));
}

VectorCache build_vector_cache(const ModelBundle& bundle, const Corpus& corpus) {
  const Featurizer featurize(bundle);
  VectorCache cache;
  cache.fingerprint = bundle.feature_fingerprint();
  for (const auto& article : corpus) {
    cache.ids.push_back(article.id);
    cache.rows.push_back(featurize(article.text()).features);
  }
  return cache;
}

void save_vector_cache(const VectorCache& cache, const std::filesystem::path& path) {
  json rows = json::array();
  for (std::size_t i = 0; i < cache.rows.size(); ++i) {
    json indices = json::array();
    json values = json::array();
    for (const auto& e : cache.rows[i]) {
      indices.push_back(e.index);
      values.push_back(e.value);
    }
    rows.push_back({{"id", cache.ids[i]}, {"indices", indices}, {"values", values}});
  }
  const json doc = {{"format", "fakenews-vectors"}, {"fingerprint", cache.fingerprint}, {"rows", rows}};
  write_atomically(path, doc.dump() + "\n");
}

VectorCache load_vector_cache(const std::filesystem::path& path,
                              std::string_view expected_fingerprint) {
  try {
    const json doc = json::parse(slurp(path, "vector cache"));
    if (doc.value("format", "") != "fakenews-vectors") {
      throw DataError("'" + path.string() + "' is not a vector cache");
    }
    VectorCache cache;
    cache.fingerprint = doc.at("fingerprint").get<std::string>();
    if (cache.fingerprint != expected_fingerprint) {
      throw DataError("vector cache '" + path.string() +
                      "' was built under a different pipeline (fingerprint " + cache.fingerprint +
                      ", expected " + std::string(expected_fingerprint) + ")");
    }
    for (const auto& row : doc.at("rows")) {
      const auto indices = row.at("indices").get<std::vector<std::size_t>>();
      const auto values = row.at("values").get<std::vector<double>>();
      if (indices.size() != values.size()) throw DataError("vector cache row is inconsistent");
      std::vector<SparseEntry> entries;
      for (std::size_t i = 0; i < indices.size(); ++i) entries.push_back({indices[i], values[i]});
      cache.ids.push_back(row.at("id").get<std::string>());
      cache.rows.emplace_back(std::move(entries));
    }
    return cache;
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed vector cache: ") + e.what());
  }
}

}  // namespace fakenews
