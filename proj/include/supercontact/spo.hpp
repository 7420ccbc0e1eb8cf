#pragma once

#include <span>
#include <string>
#include <vector>

#include "supercontact/graded_matrix.hpp"

namespace supercontact {

/// G = diag(J, id_n) with J = [[0, -id_{l+1}], [id_{l+1}, 0]]; w(U, V) = V^t G U.
struct OmegaStructure {
  Dims dims;
  GradedMatrix g;
  RatMatrix j;
};

OmegaStructure make_omega(const Dims& dims);

/// V^t G U. Throws std::invalid_argument on a length mismatch.
Rat omega_form(const OmegaStructure& s, std::span<const Rat> u, std::span<const Rat> v);

/// w(A e_a, e_b) + (-1)^{p(A) p(a)} w(e_a, A e_b) = 0 for every homogeneous
/// part of A and every pair of graded basis vectors.
bool preserves_omega(const OmegaStructure& s, const GradedMatrix& a);

/// A_1^t J + J A_1 = 0, A_4^t + A_4 = 0 and A_3 = -A_2^t J.
bool is_spo_blocks(const GradedMatrix& a);

enum class SpoFamily { Sp1, Sp2, Sp3, OddA, OddB, O };

struct SpoBasisLabel {
  SpoFamily family;
  int i;
  int j;

  friend bool operator==(const SpoBasisLabel&, const SpoBasisLabel&) = default;
};

struct SpoBasisElement {
  SpoBasisLabel label;
  GradedMatrix matrix;
};

std::string family_name(SpoFamily f);
/// Inverse of family_name; throws std::invalid_argument for unknown names.
SpoFamily parse_family(const std::string& name);
/// "Sp1(1,2)"
std::string to_string(const SpoBasisLabel& label);

/// Whether (i, j) is in the index range of the label's family.
bool label_in_range(const Dims& dims, const SpoBasisLabel& label);

/// Matrix of one basis element; throws std::out_of_range for a bad label.
GradedMatrix spo_basis_matrix(const Dims& dims, const SpoBasisLabel& label);

/// Basis of spo(2l+2|n) in family order Sp1, Sp2, Sp3, OddA, OddB, O, each
/// family in lexicographic (i, j) order.
std::vector<SpoBasisElement> spo_basis(const Dims& dims);

/// (l+1)(2l+3) + n(n-1)/2 + (2l+2)n
long long spo_dim(const Dims& dims);

/// Array of {"family", "i", "j", "matrix"}.
nlohmann::json basis_to_json(const std::vector<SpoBasisElement>& basis);

}  // namespace supercontact
