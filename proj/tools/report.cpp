#include "report.hpp"

#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace fakenews::cli {

using nlohmann::json;

std::optional<Format> parse_format(std::string_view text) {
  if (text == "table") return Format::Table;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  return std::nullopt;
}

namespace {

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string exact(double v) {
  std::ostringstream s;
  s << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
  return s.str();
}

std::string fixed(double v, int digits = 4) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

json metrics_json(const MetricsReport& r) {
  auto per_class = [](const ClassMetrics& m) {
    return json{{"precision", m.precision}, {"recall", m.recall}, {"f1", m.f1}, {"support", m.support}};
  };
  return {{"classifier", r.classifier},
          {"dataset", r.dataset},
          {"accuracy", r.accuracy},
          {"precision", r.precision},
          {"recall", r.recall},
          {"f1", r.f1},
          {"confusion", {{"tp", r.counts.tp}, {"fp", r.counts.fp}, {"fn", r.counts.fn}, {"tn", r.counts.tn}}},
          {"per_class", {{"FAKE", per_class(r.fake)}, {"REAL", per_class(r.real)}}},
          {"warnings", r.warnings}};
}

}  // namespace

void write_distribution(std::ostream& out, Format format, const Corpus& corpus,
                        const ClassHistogram& h) {
  switch (format) {
    case Format::Json:
      out << json{{"dataset", corpus.source_name()},
                  {"articles", h.total()},
                  {"dropped_rows", corpus.dropped_rows()},
                  {"counts", {{"FAKE", h.fake}, {"REAL", h.real}}}}
                 .dump()
          << '\n';
      break;
    case Format::Csv:
      out << "dataset,label,count\n";
      for (auto label : kAllLabels) {
        out << csv_field(corpus.source_name()) << ',' << to_string(label) << ',' << h[label] << '\n';
      }
      break;
    case Format::Table: {
      out << "dataset: " << corpus.source_name() << '\n';
      out << "articles: " << h.total() << " (dropped " << corpus.dropped_rows()
          << " rows without text)\n";
      out << std::left << std::setw(8) << "label" << std::right << std::setw(10) << "count"
          << std::setw(10) << "share" << '\n';
      for (auto label : kAllLabels) {
        const double share = h.total() == 0 ? 0.0 : static_cast<double>(h[label]) / static_cast<double>(h.total());
        out << std::left << std::setw(8) << to_string(label) << std::right << std::setw(10)
            << h[label] << std::setw(10) << fixed(share, 3) << '\n';
      }
      break;
    }
  }
}

void write_metrics(std::ostream& out, Format format, const Evaluation& e) {
  const auto& r = e.report;
  switch (format) {
    case Format::Json: {
      auto j = metrics_json(r);
      j["baseline"] = kBaselineAccuracy;
      j["baseline_passed"] = e.baseline_passed;
      out << j.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << "classifier,dataset,accuracy,precision,recall,f1,tp,fp,fn,tn,baseline_passed\n";
      out << csv_field(r.classifier) << ',' << csv_field(r.dataset) << ',' << exact(r.accuracy)
          << ',' << exact(r.precision) << ',' << exact(r.recall) << ',' << exact(r.f1) << ','
          << r.counts.tp << ',' << r.counts.fp << ',' << r.counts.fn << ',' << r.counts.tn << ','
          << (e.baseline_passed ? "true" : "false") << '\n';
      break;
    case Format::Table:
      out << "classifier: " << r.classifier << "\ndataset:    " << r.dataset << '\n';
      out << "accuracy  " << fixed(r.accuracy) << '\n';
      out << "precision " << fixed(r.precision) << "  (FAKE positive)\n";
      out << "recall    " << fixed(r.recall) << "  (FAKE positive)\n";
      out << "f1        " << fixed(r.f1) << '\n';
      out << "confusion tp=" << r.counts.tp << " fp=" << r.counts.fp << " fn=" << r.counts.fn
          << " tn=" << r.counts.tn << '\n';
      out << "per class:\n";
      for (const auto& [name, m] : {std::pair{"FAKE", r.fake}, std::pair{"REAL", r.real}}) {
        out << "  " << name << "  precision " << fixed(m.precision) << "  recall "
            << fixed(m.recall) << "  f1 " << fixed(m.f1) << "  support " << m.support << '\n';
      }
      for (const auto& w : r.warnings) out << "warning: " << w << '\n';
      out << "baseline " << fixed(kBaselineAccuracy, 2) << ": "
          << (e.baseline_passed ? "passed" : "FAILED") << '\n';
      break;
  }
}

void write_comparison(std::ostream& out, Format format, const Comparison& c) {
  switch (format) {
    case Format::Json: {
      json reports = json::array();
      for (const auto& r : c.reports) reports.push_back(metrics_json(r));
      json pairs = json::array();
      for (const auto& p : c.pairs) {
        pairs.push_back({{"first", p.first},
                         {"second", p.second},
                         {"first_accuracy", p.first_accuracy},
                         {"second_accuracy", p.second_accuracy},
                         {"delta", p.delta}});
      }
      out << json{{"reports", reports}, {"pairs", pairs}}.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << "first,second,first_accuracy,second_accuracy,delta\n";
      for (const auto& p : c.pairs) {
        out << csv_field(p.first) << ',' << csv_field(p.second) << ',' << exact(p.first_accuracy)
            << ',' << exact(p.second_accuracy) << ',' << exact(p.delta) << '\n';
      }
      break;
    case Format::Table:
      out << std::left << std::setw(24) << "classifier" << std::right << std::setw(10) << "accuracy"
          << std::setw(11) << "precision" << std::setw(9) << "recall" << '\n';
      for (const auto& r : c.reports) {
        out << std::left << std::setw(24) << r.classifier << std::right << std::setw(10)
            << fixed(r.accuracy) << std::setw(11) << fixed(r.precision) << std::setw(9)
            << fixed(r.recall) << '\n';
      }
      out << '\n'
          << std::left << std::setw(24) << "first" << std::setw(24) << "second" << std::right
          << std::setw(10) << "acc1" << std::setw(10) << "acc2" << std::setw(10) << "delta" << '\n';
      for (const auto& p : c.pairs) {
        out << std::left << std::setw(24) << p.first << std::setw(24) << p.second << std::right
            << std::setw(10) << fixed(p.first_accuracy) << std::setw(10)
            << fixed(p.second_accuracy) << std::setw(10) << std::showpos << fixed(p.delta)
            << std::noshowpos << '\n';
      }
      break;
  }
}

void write_top_terms(std::ostream& out, Format format, const std::vector<TermCount>& global,
                     const std::map<Label, std::vector<TermCount>>& per_class) {
  std::vector<std::pair<std::string, const std::vector<TermCount>*>> lists;
  if (per_class.empty()) {
    lists.emplace_back("ALL", &global);
  } else {
    for (const auto& [label, terms] : per_class) lists.emplace_back(std::string(to_string(label)), &terms);
  }
  switch (format) {
    case Format::Json:
      for (const auto& [cls, terms] : lists) {
        std::size_t rank = 0;
        for (const auto& t : *terms) {
          out << json{{"class", cls}, {"rank", ++rank}, {"term", t.term}, {"count", t.count}}.dump()
              << '\n';
        }
      }
      break;
    case Format::Csv:
      out << "class,rank,term,count\n";
      for (const auto& [cls, terms] : lists) {
        std::size_t rank = 0;
        for (const auto& t : *terms) {
          out << cls << ',' << ++rank << ',' << csv_field(t.term) << ',' << t.count << '\n';
        }
      }
      break;
    case Format::Table:
      for (const auto& [cls, terms] : lists) {
        out << "[" << cls << "]\n";
        std::size_t rank = 0;
        for (const auto& t : *terms) {
          out << std::right << std::setw(4) << ++rank << "  " << std::left << std::setw(20)
              << t.term << std::right << std::setw(8) << t.count << '\n';
        }
      }
      break;
  }
}

void write_predictions(std::ostream& out, Format format,
                       const std::vector<PredictionRecord>& records, bool diagnostics) {
  if (format == Format::Csv) {
    out << "id,label,score" << (diagnostics ? ",oov,fallback" : "") << '\n';
  }
  for (const auto& [id, p] : records) {
    switch (format) {
      case Format::Json: {
        json j = {{"id", id}, {"label", to_string(p.label)}, {"score", p.score}};
        if (p.probability) j["probability_fake"] = *p.probability;
        if (p.fallback) j["warning"] = "no in-vocabulary tokens; decided by prior/bias";
        if (diagnostics) {
          j["tokens"] = p.retained_tokens;
          j["oov"] = p.oov_count;
        }
        out << j.dump() << '\n';
        break;
      }
      case Format::Csv:
        out << csv_field(id) << ',' << to_string(p.label) << ',' << exact(p.score);
        if (diagnostics) out << ',' << p.oov_count << ',' << (p.fallback ? "true" : "false");
        out << '\n';
        break;
      case Format::Table:
        out << id << '\t' << to_string(p.label) << '\t' << fixed(p.score, 6);
        if (p.fallback) out << "\twarning: no in-vocabulary tokens";
        if (diagnostics) {
          out << "\toov=" << p.oov_count << "\ttokens=";
          for (std::size_t i = 0; i < p.retained_tokens.size(); ++i) {
            out << (i ? " " : "") << p.retained_tokens[i];
          }
        }
        out << '\n';
        break;
    }
  }
}

}  // namespace fakenews::cli
