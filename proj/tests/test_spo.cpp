#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "supercontact/linalg.hpp"
#include "supercontact/random.hpp"
#include "supercontact/spo.hpp"

using namespace testing;

namespace {

// Gram matrix built directly: J on the first 2l+2 indices, identity on the odd ones.
std::vector<std::vector<Rat>> gram(const Dims& d) {
  const int h = d.l + 1, D = d.matrix_size();
  std::vector<std::vector<Rat>> g(D, std::vector<Rat>(D));
  for (int i = 0; i < h; ++i) {
    g[i][h + i] = -1;
    g[h + i][i] = 1;
  }
  for (int k = 2 * h; k < D; ++k) g[k][k] = 1;
  return g;
}

// Dimension of {A homogeneous of parity p : A preserves the form}, as the
// nullspace dimension of the linear conditions on the entries of A.
long long preserving_dimension(const Dims& d, int p) {
  const int D = d.matrix_size();
  const auto g = gram(d);
  auto par = [&](int k) { return k >= 2 * (d.l + 1) ? 1 : 0; };
  // unknowns: entries (r, c) with par(r) + par(c) == p
  std::vector<std::pair<int, int>> vars;
  for (int r = 0; r < D; ++r)
    for (int c = 0; c < D; ++c)
      if ((par(r) + par(c)) % 2 == p) vars.emplace_back(r, c);
  // condition (a, b): w(A e_a, e_b) + (-1)^{p par(a)} w(e_a, A e_b) = 0, w(U, V) = V^t G U
  RatMatrix system(static_cast<std::size_t>(D) * D, vars.size());
  for (int a = 0; a < D; ++a)
    for (int b = 0; b < D; ++b) {
      const std::size_t row = static_cast<std::size_t>(a) * D + b;
      for (std::size_t v = 0; v < vars.size(); ++v) {
        const auto [r, c] = vars[v];
        Rat coeff = 0;
        if (c == a) coeff += g[b][r];  // A e_a has entry 1 at r
        if (c == b) coeff += Rat(sign_of(p * par(a))) * g[r][a];
        system(row, v) = coeff;
      }
    }
  return static_cast<long long>(vars.size()) - static_cast<long long>(rank(system));
}

std::vector<Rat> unit_vector(int size, int k) {
  std::vector<Rat> v(size);
  v[k - 1] = 1;
  return v;
}

}  // namespace

TEST_CASE("omega form examples") {
  const Dims d = Dims::make(1, 2);
  const OmegaStructure s = make_omega(d);
  CHECK(omega_form(s, unit_vector(6, 1), unit_vector(6, 3)) == 1);
  CHECK(omega_form(s, unit_vector(6, 3), unit_vector(6, 1)) == -1);
  CHECK(omega_form(s, unit_vector(6, 5), unit_vector(6, 5)) == 1);
  CHECK(omega_form(s, unit_vector(6, 1), unit_vector(6, 1)) == 0);
  CHECK_THROWS_AS(omega_form(s, unit_vector(5, 1), unit_vector(6, 1)), std::invalid_argument);
}

TEST_CASE("membership examples") {
  const Dims d = Dims::make(1, 2);
  const OmegaStructure s = make_omega(d);
  CHECK_FALSE(preserves_omega(s, GradedMatrix::identity(d)));
  CHECK_FALSE(is_spo_blocks(GradedMatrix::identity(d)));
  CHECK(preserves_omega(s, GradedMatrix(d)));
  const GradedMatrix sp1 = GradedMatrix::unit(d, 1, 1) - GradedMatrix::unit(d, 3, 3);
  CHECK(preserves_omega(s, sp1));
  CHECK(is_spo_blocks(sp1));
  const GradedMatrix odd = GradedMatrix::unit(d, 1, 5) + GradedMatrix::unit(d, 5, 3);
  CHECK(preserves_omega(s, odd));
  CHECK(is_spo_blocks(odd));
  const GradedMatrix wrong = GradedMatrix::unit(d, 1, 5) - GradedMatrix::unit(d, 5, 3);
  CHECK_FALSE(preserves_omega(s, wrong));
  CHECK_FALSE(is_spo_blocks(wrong));
}

TEST_CASE("block conditions agree with the form on random matrices") {
  for_dims(2, 3, [](const Dims& d) {
    const OmegaStructure s = make_omega(d);
    RandomAlgebra r(d, 11);
    int members = 0;
    for (int k = 0; k < 100; ++k) {
      // mix arbitrary matrices with perturbed members so both answers occur
      GradedMatrix a = r.graded_matrix();
      if (k % 2 == 0) {
        const auto basis = spo_basis(d);
        a = GradedMatrix(d);
        for (const auto& e : basis) a += r.rational() * e.matrix;
        if (k % 4 == 0) a.add(r.uniform(1, d.matrix_size()), r.uniform(1, d.matrix_size()), 1);
      }
      const bool blocks = is_spo_blocks(a);
      CHECK(blocks == preserves_omega(s, a));
      members += blocks;
    }
    CHECK(members > 0);
  });
}

TEST_CASE("graded bracket") {
  const Dims d = Dims::make(0, 1);
  const auto e12 = GradedMatrix::unit(d, 1, 2);
  const auto e21 = GradedMatrix::unit(d, 2, 1);
  CHECK(mat_bracket(e12, e21) == GradedMatrix::unit(d, 1, 1) - GradedMatrix::unit(d, 2, 2));
  const auto e13 = GradedMatrix::unit(d, 1, 3);
  const auto e31 = GradedMatrix::unit(d, 3, 1);
  // two odd matrices: anticommutator
  CHECK(mat_bracket(e13, e31) == GradedMatrix::unit(d, 1, 1) + GradedMatrix::unit(d, 3, 3));
  CHECK(mat_bracket(e13, e13).is_zero());
  CHECK(e13.parity() == 1);
  CHECK(e12.parity() == 0);
  CHECK((e12 + e13).parity() == std::nullopt);
}

TEST_CASE("basis examples") {
  const Dims d = Dims::make(1, 2);
  const auto basis = spo_basis(d);
  CHECK(basis.size() == 19);
  CHECK(to_string(basis.front().label) == "Sp1(1,1)");
  CHECK(basis.front().matrix == GradedMatrix::unit(d, 1, 1) - GradedMatrix::unit(d, 3, 3));
  CHECK(spo_basis_matrix(d, {SpoFamily::Sp3, 1, 1}) == GradedMatrix::unit(d, 3, 1));
  CHECK(spo_basis_matrix(d, {SpoFamily::Sp2, 1, 2}) == GradedMatrix::unit(d, 1, 4) + GradedMatrix::unit(d, 2, 3));
  CHECK(spo_basis_matrix(d, {SpoFamily::OddA, 3, 2}) == GradedMatrix::unit(d, 3, 6) - GradedMatrix::unit(d, 6, 1));
  CHECK(spo_basis_matrix(d, {SpoFamily::O, 1, 2}) == GradedMatrix::unit(d, 5, 6) - GradedMatrix::unit(d, 6, 5));
  CHECK_THROWS_AS(spo_basis_matrix(d, {SpoFamily::O, 2, 1}), std::out_of_range);
  CHECK_THROWS_AS(spo_basis_matrix(d, {SpoFamily::OddA, 1, 1}), std::out_of_range);
  CHECK(parse_family("OddB") == SpoFamily::OddB);
  CHECK_THROWS_AS(parse_family("Sp4"), std::invalid_argument);
}

TEST_CASE("basis dimension matches the nullspace oracle") {
  for_dims(3, 4, [](const Dims& d) {
    const long long oracle = preserving_dimension(d, 0) + preserving_dimension(d, 1);
    CHECK(spo_dim(d) == oracle);
    const auto basis = spo_basis(d);
    CHECK(static_cast<long long>(basis.size()) == oracle);
    std::vector<std::vector<Rat>> rows;
    for (const auto& e : basis) {
      CHECK(is_spo_blocks(e.matrix));
      std::vector<Rat> flat;
      for (int i = 1; i <= d.matrix_size(); ++i)
        for (int j = 1; j <= d.matrix_size(); ++j) flat.push_back(e.matrix.entry(i, j));
      rows.push_back(flat);
    }
    CHECK(static_cast<long long>(rank(rows)) == oracle);
  });
  CHECK(spo_dim(Dims::make(1, 2)) == 19);
  CHECK(spo_dim(Dims::make(2, 3)) == 42);
  CHECK(spo_dim(Dims::make(0, 1)) == 5);
}

TEST_CASE("basis closes under the bracket") {
  const Dims d = Dims::make(1, 2);
  const auto basis = spo_basis(d);
  for (const auto& a : basis)
    for (const auto& b : basis) CHECK(is_spo_blocks(mat_bracket(a.matrix, b.matrix)));
}

TEST_CASE("matrix JSON round trip") {
  const Dims d = Dims::make(1, 2);
  RandomAlgebra r(d, 2);
  for (int k = 0; k < 10; ++k) {
    const GradedMatrix m = r.graded_matrix();
    const auto j = to_json(m);
    CHECK(j.at("l") == 1);
    CHECK(j.at("n") == 2);
    CHECK(j.at("entries").size() == 6);
    CHECK(graded_matrix_from_json(j) == m);
    CHECK(graded_matrix_from_json(nlohmann::json::parse(j.dump())) == m);
  }
  const auto j = to_json(GradedMatrix::identity(Dims::make(0, 1)));
  CHECK(j.at("entries")[0][0] == "1/1");
  CHECK(j.at("entries")[0][1] == "0/1");
  CHECK(basis_to_json(spo_basis(d)).size() == 19);
}
