#include "doctest.h"
#include "helpers.hpp"
#include "supercontact/embedding.hpp"
#include "supercontact/golden.hpp"
#include "supercontact/random.hpp"

using namespace testing;

TEST_CASE("coordinate map") {
  const CoordMap cm(Dims::make(2, 1));
  CHECK(cm.size() == 6);
  CHECK(cm.coord(1) == CoordId::x(1));
  CHECK(cm.coord(2) == CoordId::x(2));
  CHECK(cm.coord(3) == CoordId::z());
  CHECK(cm.coord(4) == CoordId::y(1));
  CHECK(cm.coord(5) == CoordId::y(2));
  CHECK(cm.coord(6) == CoordId::theta(1));
  CHECK(cm.parity(6) == 1);
}

TEST_CASE("normalizing representatives") {
  const Dims d = Dims::make(1, 2);
  CHECK(normalize_rep(GradedMatrix::identity(d)).matrix.is_zero());
  const GradedMatrix sp = GradedMatrix::unit(d, 1, 1) - GradedMatrix::unit(d, 3, 3);
  CHECK(normalize_rep(sp).matrix == sp - GradedMatrix::identity(d));
  CHECK(normalize_rep(sp).matrix.entry(1, 1) == 0);
  const GradedMatrix plain = GradedMatrix::unit(d, 2, 4);
  CHECK(normalize_rep(plain).matrix == plain);
}

TEST_CASE("projective embedding of single entries") {
  const Dims d = Dims::make(1, 1);
  const CoordMap cm(d);
  // v^1 = 1: -d/dt^1 = -d/dx1
  CHECK(projective_embed({GradedMatrix::unit(d, 2, 1)}, cm) == Rat(-1) * del(d, CoordId::x(1)));
  // B^1_2: -t^2 d/dt^1 = -z d/dx1
  CHECK(format_field(projective_embed({GradedMatrix::unit(d, 2, 3)}, cm)) == "(-z)*d/dx1");
  // xi_1 = 1: t^1 t^i d_i
  CHECK(format_field(projective_embed({GradedMatrix::unit(d, 1, 2)}, cm)) ==
        "(z*x1)*d/dz + (x1^2)*d/dx1 + (x1*y1)*d/dy1 + (x1*th1)*d/dth1");
  // odd xi: sign (-1)^{p(j)} = -1, and t^j t^i with t^j odd first
  CHECK(format_field(projective_embed({GradedMatrix::unit(d, 1, 5)}, cm)) ==
        "(-z*th1)*d/dz + (-x1*th1)*d/dx1 + (-y1*th1)*d/dy1");
  // odd-odd B entry: -(-1)^{1*(1+1)} th1 d/dth1
  CHECK(format_field(projective_embed({GradedMatrix::unit(d, 5, 5)}, cm)) == "(-th1)*d/dth1");
  // even row, odd column: -(-1)^{1*(0+1)} th1 d/dx1
  CHECK(format_field(projective_embed({GradedMatrix::unit(d, 2, 5)}, cm)) == "(th1)*d/dx1");
}

TEST_CASE("embedding basis elements") {
  const Dims d = Dims::make(1, 2);
  const ContactContext ctx = make_context(d);
  CHECK(hamiltonian_of(ctx, embed_spo(ctx, spo_basis_matrix(d, {SpoFamily::Sp2, 1, 1}))) == sf(d, "z^2"));
  CHECK(hamiltonian_of(ctx, embed_spo(ctx, spo_basis_matrix(d, {SpoFamily::Sp3, 1, 1}))) == sf(d, "-1"));
  CHECK(hamiltonian_of(ctx, embed_spo(ctx, spo_basis_matrix(d, {SpoFamily::O, 1, 2}))) == sf(d, "2*th1*th2"));
  CHECK(hamiltonian_of(ctx, embed_spo(ctx, spo_basis_matrix(d, {SpoFamily::OddB, 1, 2}))) == sf(d, "-2*z*th2"));
  CHECK_THROWS_AS(embed_spo(ctx, GradedMatrix::unit(d, 1, 2)), NotInSpoError);
  CHECK_THROWS_AS(embed_spo(make_context(Dims::make(1, 1)), GradedMatrix(d)), DimensionMismatch);
}

TEST_CASE("correspondence table at (2,3)") {
  const Dims d = Dims::make(2, 3);
  const ContactContext ctx = make_context(d);
  const auto rows = correspondence_table(ctx);
  CHECK(rows.size() == 42);
  auto find = [&](SpoFamily f, int i, int j) {
    for (const auto& r : rows)
      if (r.label == SpoBasisLabel{f, i, j}) return format_expr(r.hamiltonian);
    return std::string("missing");
  };
  CHECK(find(SpoFamily::Sp1, 1, 1) == "2*z");
  CHECK(find(SpoFamily::Sp1, 2, 1) == "2*y1");
  CHECK(find(SpoFamily::Sp1, 2, 3) == "2*x2*y1");
  CHECK(find(SpoFamily::Sp2, 2, 2) == "y1^2");
  CHECK(find(SpoFamily::Sp3, 1, 1) == "-1");
  CHECK(find(SpoFamily::OddA, 4, 2) == "2*th2");
  CHECK(find(SpoFamily::OddB, 1, 3) == "-2*z*th3");
  CHECK(find(SpoFamily::O, 1, 3) == "2*th1*th3");
  for (const auto& r : rows) CHECK(contact_field(ctx, r.hamiltonian) == r.field);

  const auto j = table_to_json(rows);
  CHECK(j.size() == 42);
  CHECK(j[0].at("family") == "Sp1");
  CHECK(j[0].at("hamiltonian") == "2*z");
  CHECK(j[0].contains("field"));
}

TEST_CASE("table agrees with the golden cases") {
  for_dims(2, 3, [](const Dims& d) {
    const ContactContext ctx = make_context(d);
    const auto rows = correspondence_table(ctx);
    const auto golden = golden_cases(d);
    REQUIRE(rows.size() == golden.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
      CHECK(rows[k].label == golden[k].label);
      CHECK(rows[k].field == golden[k].field);
      CHECK(rows[k].hamiltonian == golden[k].hamiltonian);
    }
  });
}

TEST_CASE("embedding is a homomorphism and ignores scalar shifts") {
  const Dims d = Dims::make(2, 2);
  const ContactContext ctx = make_context(d);
  const auto basis = spo_basis(d);
  RandomAlgebra r(d, 13);
  for (int k = 0; k < 40; ++k) {
    const auto& a = basis[r.uniform(0, static_cast<int>(basis.size()) - 1)].matrix;
    const auto& b = basis[r.uniform(0, static_cast<int>(basis.size()) - 1)].matrix;
    CHECK(embed_spo(ctx, mat_bracket(a, b)) == bracket(embed_spo(ctx, a), embed_spo(ctx, b)));
    const GradedMatrix shifted = a + r.rational() * GradedMatrix::identity(d);
    CHECK(projective_embed(normalize_rep(shifted), CoordMap(d)) == embed_spo(ctx, a));
  }
}
