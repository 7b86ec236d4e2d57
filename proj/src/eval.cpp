#include "nagasent/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "nagasent/error.hpp"

namespace nagasent {
namespace {

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

std::size_t index_of(std::span<const std::string> labels, const std::string& value) {
  const auto it = std::find(labels.begin(), labels.end(), value);
  if (it == labels.end()) throw InputError("unknown label '" + value + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace

std::size_t ConfusionMatrix::total() const noexcept {
  std::size_t t = 0;
  for (const auto& row : counts) {
    for (std::size_t c : row) t += c;
  }
  return t;
}

std::size_t ConfusionMatrix::trace() const noexcept {
  std::size_t t = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) t += counts[i][i];
  return t;
}

std::size_t ConfusionMatrix::row_sum(std::size_t i) const noexcept {
  std::size_t t = 0;
  for (std::size_t c : counts[i]) t += c;
  return t;
}

std::size_t ConfusionMatrix::column_sum(std::size_t j) const noexcept {
  std::size_t t = 0;
  for (const auto& row : counts) t += row[j];
  return t;
}

ConfusionMatrix confusion(std::span<const std::string> actual,
                          std::span<const std::string> predicted,
                          std::span<const std::string> labels) {
  if (actual.size() != predicted.size()) {
    throw InputError("confusion: " + std::to_string(actual.size()) + " actual vs " +
                     std::to_string(predicted.size()) + " predicted labels");
  }
  ConfusionMatrix m;
  m.labels.assign(labels.begin(), labels.end());
  m.counts.assign(labels.size(), std::vector<std::size_t>(labels.size(), 0));
  for (std::size_t k = 0; k < actual.size(); ++k) {
    ++m.counts[index_of(labels, actual[k])][index_of(labels, predicted[k])];
  }
  return m;
}

ConfusionMatrix confusion_from_counts(std::vector<std::string> labels,
                                      std::vector<std::vector<std::size_t>> counts) {
  if (counts.size() != labels.size()) throw InputError("confusion matrix is not square");
  for (const auto& row : counts) {
    if (row.size() != labels.size()) throw InputError("confusion matrix is not square");
  }
  return {std::move(labels), std::move(counts)};
}

EvalReport metrics(const ConfusionMatrix& matrix) {
  const std::size_t total = matrix.total();
  if (matrix.labels.empty() || total == 0) throw InputError("metrics: empty confusion matrix");
  EvalReport r;
  r.matrix = matrix;
  r.accuracy = ratio(matrix.trace(), total);
  for (std::size_t i = 0; i < matrix.labels.size(); ++i) {
    ClassMetrics c;
    const std::size_t tp = matrix.counts[i][i];
    c.support = matrix.row_sum(i);
    c.precision = ratio(tp, matrix.column_sum(i));
    c.recall = ratio(tp, c.support);
    c.f1 = c.precision + c.recall > 0.0
               ? 2.0 * c.precision * c.recall / (c.precision + c.recall)
               : 0.0;
    r.macro_precision += c.precision;
    r.macro_recall += c.recall;
    r.macro_f1 += c.f1;
    r.per_class.push_back(c);
  }
  const auto k = static_cast<double>(matrix.labels.size());
  r.macro_precision /= k;
  r.macro_recall /= k;
  r.macro_f1 /= k;
  return r;
}

std::string format_2dp(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  return buf;
}

std::string render_report(const EvalReport& report) {
  std::size_t width = 9;  // "macro avg"
  for (const auto& l : report.matrix.labels) width = std::max(width, l.size());
  char buf[256];
  std::ostringstream out;
  const auto line = [&](const std::string& label, const std::string& p, const std::string& r,
                        const std::string& f, const std::string& s) {
    std::snprintf(buf, sizeof buf, "%-*s %9s %9s %9s %9s\n", static_cast<int>(width),
                  label.c_str(), p.c_str(), r.c_str(), f.c_str(), s.c_str());
    out << buf;
  };
  out << "accuracy " << format_2dp(report.accuracy) << " (" << report.matrix.trace() << "/"
      << report.matrix.total() << ")\n\n";
  line("", "precision", "recall", "f1-score", "support");
  for (std::size_t i = 0; i < report.per_class.size(); ++i) {
    const auto& c = report.per_class[i];
    line(report.matrix.labels[i], format_2dp(c.precision), format_2dp(c.recall),
         format_2dp(c.f1), std::to_string(c.support));
  }
  line("macro avg", format_2dp(report.macro_precision), format_2dp(report.macro_recall),
       format_2dp(report.macro_f1), std::to_string(report.matrix.total()));

  out << "\nconfusion matrix (rows = actual, columns = predicted)\n";
  std::size_t cell = 5;
  for (const auto& l : report.matrix.labels) cell = std::max(cell, l.size());
  std::snprintf(buf, sizeof buf, "%-*s", static_cast<int>(width), "");
  out << buf;
  for (const auto& l : report.matrix.labels) {
    std::snprintf(buf, sizeof buf, " %*s", static_cast<int>(cell), l.c_str());
    out << buf;
  }
  out << '\n';
  for (std::size_t i = 0; i < report.matrix.labels.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%-*s", static_cast<int>(width),
                  report.matrix.labels[i].c_str());
    out << buf;
    for (std::size_t c : report.matrix.counts[i]) {
      std::snprintf(buf, sizeof buf, " %*zu", static_cast<int>(cell), c);
      out << buf;
    }
    out << '\n';
  }
  return out.str();
}

std::string report_to_json(const EvalReport& report) {
  nlohmann::json per_class = nlohmann::json::object();
  for (std::size_t i = 0; i < report.per_class.size(); ++i) {
    const auto& c = report.per_class[i];
    per_class[report.matrix.labels[i]] = {
        {"precision", c.precision}, {"recall", c.recall}, {"f1", c.f1}, {"support", c.support}};
  }
  const nlohmann::json doc = {
      {"accuracy", report.accuracy},
      {"per_class", per_class},
      {"macro_precision", report.macro_precision},
      {"macro_recall", report.macro_recall},
      {"macro_f1", report.macro_f1},
      {"matrix", {{"labels", report.matrix.labels}, {"counts", report.matrix.counts}}}};
  return doc.dump(2);
}

}  // namespace nagasent
