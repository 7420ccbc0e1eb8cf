#include "supercontact/embedding.hpp"

#include "supercontact/expr.hpp"

namespace supercontact {

CoordMap::CoordMap(const Dims& dims) {
  for (int k = 1; k <= dims.l; ++k) table_.push_back(CoordId::x(k));
  table_.push_back(CoordId::z());
  for (int k = 1; k <= dims.l; ++k) table_.push_back(CoordId::y(k));
  for (int j = 1; j <= dims.n; ++j) table_.push_back(CoordId::theta(j));
}

PglRep normalize_rep(const GradedMatrix& a) {
  const Rat corner = a.entry(1, 1);
  GradedMatrix m = a;
  if (corner != 0)
    for (int i = 1; i <= m.size(); ++i) m.add(i, i, -corner);
  return {std::move(m)};
}

SuperVectorField projective_embed(const PglRep& rep, const CoordMap& cmap) {
  const GradedMatrix& a = rep.matrix;
  if (a.entry(1, 1) != 0) throw std::invalid_argument("projective_embed: representative corner must be 0");
  if (cmap.size() + 1 != a.size()) throw std::invalid_argument("projective_embed: coordinate map does not fit matrix");
  const Dims& dims = a.dims();
  const int k = cmap.size();
  const auto var = [&](int t) { return Superfunction::variable(dims, cmap.coord(t)); };

  // The xi part is the same Euler-type factor (sum_j (-1)^{p(j)} xi_j t^j) on every t^i d_i.
  Superfunction xi_t(dims);
  for (int j = 1; j <= k; ++j) {
    const Rat& xi = a.entry(1, j + 1);
    if (xi != 0) xi_t += Rat(sign_of(cmap.parity(j)) * xi) * var(j);
  }

  SuperVectorField out(dims);
  for (int i = 1; i <= k; ++i) {
    const CoordId ci = cmap.coord(i);
    const int pi = cmap.parity(i);
    Superfunction coeff(dims);
    const Rat& v = a.entry(i + 1, 1);
    if (v != 0) coeff -= Superfunction::constant(dims, v);
    for (int j = 1; j <= k; ++j) {
      const Rat& b = a.entry(i + 1, j + 1);
      if (b == 0) continue;
      const int pj = cmap.parity(j);
      coeff -= Rat(sign_of(pj * (pi + pj)) * b) * var(j);
    }
    if (!xi_t.is_zero()) coeff += xi_t * var(i);
    out.add_component(ci, coeff);
  }
  return out;
}

SuperVectorField embed_spo(const ContactContext& ctx, const GradedMatrix& a) {
  require_same_dims(ctx.dims, a.dims());
  if (!is_spo_blocks(a)) throw NotInSpoError();
  return projective_embed(normalize_rep(a), CoordMap(ctx.dims));
}

std::vector<CorrespondenceRow> correspondence_table(const ContactContext& ctx) {
  std::vector<CorrespondenceRow> rows;
  for (const auto& [label, matrix] : spo_basis(ctx.dims)) {
    SuperVectorField field = embed_spo(ctx, matrix);
    Superfunction h = hamiltonian_of(ctx, field);
    rows.push_back({label, std::move(field), std::move(h)});
  }
  return rows;
}

nlohmann::json table_to_json(const std::vector<CorrespondenceRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : rows)
    arr.push_back({{"family", family_name(row.label.family)},
                   {"i", row.label.i},
                   {"j", row.label.j},
                   {"field", format_field(row.field)},
                   {"hamiltonian", format_expr(row.hamiltonian)}});
  return arr;
}

}  // namespace supercontact
