#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace nagasent {

/// Rows are actual labels, columns predicted labels.
struct ConfusionMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> counts;

  std::size_t total() const noexcept;
  std::size_t trace() const noexcept;
  std::size_t row_sum(std::size_t i) const noexcept;
  std::size_t column_sum(std::size_t j) const noexcept;
};

ConfusionMatrix confusion(std::span<const std::string> actual, std::span<const std::string> predicted,
                          std::span<const std::string> labels);

/// Builds a matrix from explicit counts; throws InputError if it is not square
/// over `labels`.
ConfusionMatrix confusion_from_counts(std::vector<std::string> labels,
                                      std::vector<std::vector<std::size_t>> counts);

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;  // actual count
};

struct EvalReport {
  double accuracy = 0.0;
  std::vector<ClassMetrics> per_class;  // parallel to matrix.labels
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;
  ConfusionMatrix matrix;
};

/// Zero denominators yield 0.0. Throws InputError on an empty matrix.
EvalReport metrics(const ConfusionMatrix& matrix);

/// Two-decimal fixed-width report: accuracy, per-label P/R/F1, macro line
/// and the confusion matrix. Ties round half to even on the binary value.
std::string render_report(const EvalReport& report);

std::string report_to_json(const EvalReport& report);

/// "%.2f" formatting used by the report.
std::string format_2dp(double value);

}  // namespace nagasent
