#pragma once

#include <optional>
#include <utility>

#include "json.hpp"
#include "supercontact/dims.hpp"
#include "supercontact/linalg.hpp"

namespace supercontact {

/// Square matrix in gl(2l+2|n). Indices are 1-based to match the usual
/// E_{i,j} notation: rows/columns 1..2l+2 are even, 2l+3..2l+2+n are odd.
class GradedMatrix {
 public:
  explicit GradedMatrix(Dims dims) : dims_(dims), m_(dims.matrix_size(), dims.matrix_size()) {}

  static GradedMatrix identity(Dims dims);
  /// E_{i,j}
  static GradedMatrix unit(Dims dims, int i, int j);

  const Dims& dims() const { return dims_; }
  int size() const { return dims_.matrix_size(); }
  int index_parity(int i) const { return i > 2 * dims_.l + 2 ? 1 : 0; }

  const Rat& entry(int i, int j) const { return m_(i - 1, j - 1); }
  void set(int i, int j, const Rat& v) { m_(i - 1, j - 1) = v; }
  void add(int i, int j, const Rat& v) { m_(i - 1, j - 1) += v; }

  const RatMatrix& raw() const { return m_; }

  /// Diagonal blocks (A_1, A_4) form the even part, off-diagonal (A_2, A_3) the odd part.
  std::pair<GradedMatrix, GradedMatrix> parity_parts() const;
  std::optional<int> parity() const;
  bool is_zero() const { return m_.is_zero(); }

  RatMatrix block_a1() const;  // (2l+2) x (2l+2)
  RatMatrix block_a2() const;  // (2l+2) x n
  RatMatrix block_a3() const;  // n x (2l+2)
  RatMatrix block_a4() const;  // n x n

  GradedMatrix& operator+=(const GradedMatrix& b);
  GradedMatrix& operator-=(const GradedMatrix& b);
  GradedMatrix& operator*=(const Rat& c);
  friend GradedMatrix operator+(GradedMatrix a, const GradedMatrix& b) { return a += b; }
  friend GradedMatrix operator-(GradedMatrix a, const GradedMatrix& b) { return a -= b; }
  friend GradedMatrix operator*(const Rat& c, GradedMatrix a) { return a *= c; }
  /// Plain matrix product.
  friend GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b);

  friend bool operator==(const GradedMatrix&, const GradedMatrix&) = default;

 private:
  RatMatrix block(int r0, int c0, int rows, int cols) const;

  Dims dims_;
  RatMatrix m_;
};

/// [A, B] = AB - (-1)^{AB} BA over homogeneous parts.
GradedMatrix mat_bracket(const GradedMatrix& a, const GradedMatrix& b);

/// {"l":…, "n":…, "entries": [["p/q", …], …]} row-major.
nlohmann::json to_json(const GradedMatrix& m);
GradedMatrix graded_matrix_from_json(const nlohmann::json& j);

}  // namespace supercontact
