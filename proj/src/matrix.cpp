#include "nagasent/matrix.hpp"

#include <string>

#include "nagasent/error.hpp"

namespace nagasent {

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  Matrix m;
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void Matrix::append_row(std::span<const double> values) {
  if (rows_ == 0) {
    cols_ = values.size();
  } else if (values.size() != cols_) {
    throw InputError("ragged matrix: row " + std::to_string(rows_) + " has " +
                     std::to_string(values.size()) + " columns, expected " +
                     std::to_string(cols_));
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

std::vector<std::vector<double>> Matrix::to_rows() const {
  std::vector<std::vector<double>> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    auto r = row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

}  // namespace nagasent
