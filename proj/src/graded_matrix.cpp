#include "supercontact/graded_matrix.hpp"

#include <stdexcept>

namespace supercontact {

GradedMatrix GradedMatrix::identity(Dims dims) {
  GradedMatrix m(dims);
  for (int i = 1; i <= m.size(); ++i) m.set(i, i, Rat(1));
  return m;
}

GradedMatrix GradedMatrix::unit(Dims dims, int i, int j) {
  GradedMatrix m(dims);
  if (i < 1 || j < 1 || i > m.size() || j > m.size())
    throw std::out_of_range("matrix unit E_{" + std::to_string(i) + "," + std::to_string(j) + "} out of range");
  m.set(i, j, Rat(1));
  return m;
}

std::pair<GradedMatrix, GradedMatrix> GradedMatrix::parity_parts() const {
  std::pair<GradedMatrix, GradedMatrix> parts{GradedMatrix(dims_), GradedMatrix(dims_)};
  for (int i = 1; i <= size(); ++i)
    for (int j = 1; j <= size(); ++j) {
      const Rat& v = entry(i, j);
      if (v == 0) continue;
      (index_parity(i) == index_parity(j) ? parts.first : parts.second).set(i, j, v);
    }
  return parts;
}

std::optional<int> GradedMatrix::parity() const {
  const auto [even, odd] = parity_parts();
  if (odd.is_zero()) return 0;
  if (even.is_zero()) return 1;
  return std::nullopt;
}

RatMatrix GradedMatrix::block(int r0, int c0, int rows, int cols) const {
  RatMatrix b(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) b(i, j) = m_(r0 + i, c0 + j);
  return b;
}

RatMatrix GradedMatrix::block_a1() const { return block(0, 0, 2 * dims_.l + 2, 2 * dims_.l + 2); }
RatMatrix GradedMatrix::block_a2() const { return block(0, 2 * dims_.l + 2, 2 * dims_.l + 2, dims_.n); }
RatMatrix GradedMatrix::block_a3() const { return block(2 * dims_.l + 2, 0, dims_.n, 2 * dims_.l + 2); }
RatMatrix GradedMatrix::block_a4() const { return block(2 * dims_.l + 2, 2 * dims_.l + 2, dims_.n, dims_.n); }

GradedMatrix& GradedMatrix::operator+=(const GradedMatrix& b) {
  require_same_dims(dims_, b.dims_);
  m_ = m_ + b.m_;
  return *this;
}

GradedMatrix& GradedMatrix::operator-=(const GradedMatrix& b) {
  require_same_dims(dims_, b.dims_);
  m_ = m_ - b.m_;
  return *this;
}

GradedMatrix& GradedMatrix::operator*=(const Rat& c) {
  for (int i = 1; i <= size(); ++i)
    for (int j = 1; j <= size(); ++j) m_(i - 1, j - 1) *= c;
  return *this;
}

GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b) {
  require_same_dims(a.dims_, b.dims_);
  GradedMatrix c(a.dims_);
  c.m_ = a.m_ * b.m_;
  return c;
}

GradedMatrix mat_bracket(const GradedMatrix& a, const GradedMatrix& b) {
  require_same_dims(a.dims(), b.dims());
  const auto as = a.parity_parts();
  const auto bs = b.parity_parts();
  const GradedMatrix* ap[2] = {&as.first, &as.second};
  const GradedMatrix* bp[2] = {&bs.first, &bs.second};
  GradedMatrix out(a.dims());
  for (int p = 0; p < 2; ++p) {
    if (ap[p]->is_zero()) continue;
    for (int q = 0; q < 2; ++q) {
      if (bp[q]->is_zero()) continue;
      out += *ap[p] * *bp[q];
      if (p & q)
        out += *bp[q] * *ap[p];
      else
        out -= *bp[q] * *ap[p];
    }
  }
  return out;
}

nlohmann::json to_json(const GradedMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 1; i <= m.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 1; j <= m.size(); ++j) row.push_back(to_pq_string(m.entry(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"l", m.dims().l}, {"n", m.dims().n}, {"entries", std::move(rows)}};
}

GradedMatrix graded_matrix_from_json(const nlohmann::json& j) {
  GradedMatrix m(Dims::make(j.at("l").get<int>(), j.at("n").get<int>()));
  const auto& rows = j.at("entries");
  if (!rows.is_array() || static_cast<int>(rows.size()) != m.size())
    throw std::invalid_argument("entries: expected " + std::to_string(m.size()) + " rows");
  for (int i = 1; i <= m.size(); ++i) {
    const auto& row = rows[i - 1];
    if (!row.is_array() || static_cast<int>(row.size()) != m.size())
      throw std::invalid_argument("entries: row " + std::to_string(i) + " has the wrong length");
    for (int k = 1; k <= m.size(); ++k) m.set(i, k, parse_rational(row[k - 1].get<std::string>()));
  }
  return m;
}

}  // namespace supercontact
