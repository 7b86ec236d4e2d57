#pragma once

#include <string>

namespace nagasent {

/// One candidate label of a prediction. For naive Bayes `score` is the
/// log joint likelihood and `margin` is unused; for the SVM `score` is the
/// pairwise vote count and `margin` the summed |decision value| of the votes
/// won by the label.
struct LabelScore {
  std::string label;
  double score = 0.0;
  double margin = 0.0;

  friend bool operator==(const LabelScore&, const LabelScore&) = default;
};

}  // namespace nagasent
