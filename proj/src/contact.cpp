#include "supercontact/contact.hpp"

#include <algorithm>
#include <set>

#include "supercontact/expr.hpp"

namespace supercontact {

NotContactError::NotContactError(int frame_index, const std::string& detail)
    : std::invalid_argument("vector field is not contact: [X, T_" + std::to_string(frame_index) +
                            "] is not tangent (" + detail + ")"),
      frame_index_(frame_index) {}

namespace {

void check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("contact context invariant violated: ") + what);
}

}  // namespace

ContactContext make_context(const Dims& dims) {
  const int K = dims.generalized_count();
  const int l = dims.l;
  ContactContext ctx{dims,
                     SuperOneForm(dims),
                     {},
                     RatMatrix(K, K),
                     RatMatrix(K, K),
                     {},
                     SuperVectorField::partial(dims, CoordId::z())};

  for (int i = 0; i < l; ++i) {
    ctx.omega_lower(i, l + i) = 1;
    ctx.omega_lower(l + i, i) = -1;
    ctx.omega_upper(i, l + i) = -1;
    ctx.omega_upper(l + i, i) = 1;
  }
  for (int j = 2 * l; j < K; ++j) {
    ctx.omega_lower(j, j) = 1;
    ctx.omega_upper(j, j) = 1;
  }
  for (int r = 1; r <= K; ++r)
    for (int s = 1; s <= K; ++s)
      if (ctx.omega_upper(r - 1, s - 1) != 0) ctx.upper_nonzero.push_back({r, s, ctx.omega_upper(r - 1, s - 1)});

  const auto var = [&](CoordId c) { return Superfunction::variable(dims, c); };
  ctx.alpha.add_component(CoordId::z(), Superfunction::constant(dims, Rat(1)));
  for (int i = 1; i <= l; ++i) {
    ctx.alpha.add_component(CoordId::y(i), var(CoordId::x(i)));
    ctx.alpha.add_component(CoordId::x(i), -var(CoordId::y(i)));
  }
  for (int j = 1; j <= dims.n; ++j) ctx.alpha.add_component(CoordId::theta(j), var(CoordId::theta(j)));

  // T_r = d/dq^r - w_{kr} q^k d/dz
  ctx.frame.reserve(K);
  for (int r = 1; r <= K; ++r) {
    SuperVectorField t = SuperVectorField::partial(dims, generalized_coord(dims, r));
    Superfunction zc(dims);
    for (int k = 1; k <= K; ++k) {
      const Rat& w = ctx.omega_lower(k - 1, r - 1);
      if (w != 0) zc -= w * var(generalized_coord(dims, k));
    }
    t.add_component(CoordId::z(), zc);
    ctx.frame.push_back(std::move(t));
  }

  check(ctx.omega_lower * ctx.omega_upper == RatMatrix::identity(K), "w_{rs} w^{sk} = delta");
  for (int r = 1; r <= K; ++r)
    for (int s = 1; s <= K; ++s) {
      const int sign = sign_of(ctx.t_parity(r) * ctx.t_parity(s));
      check(ctx.omega_upper(r - 1, s - 1) == -sign * ctx.omega_upper(s - 1, r - 1), "w^{rs} = -(-1)^{rs} w^{sr}");
    }
  for (const auto& t : ctx.frame) check(form_eval(ctx.alpha, t).is_zero(), "alpha(T_r) = 0");
  check(form_eval(ctx.alpha, ctx.reeb) == Superfunction::constant(dims, Rat(1)), "alpha(T_0) = 1");
  return ctx;
}

bool is_tangent(const ContactContext& ctx, const SuperVectorField& x) {
  require_same_dims(ctx.dims, x.dims());
  return form_eval(ctx.alpha, x).is_zero();
}

std::optional<int> contact_violation(const ContactContext& ctx, const SuperVectorField& x) {
  require_same_dims(ctx.dims, x.dims());
  for (int r = 1; r <= ctx.dims.generalized_count(); ++r)
    if (!is_tangent(ctx, bracket(x, ctx.t(r)))) return r;
  return std::nullopt;
}

SuperVectorField contact_field(const ContactContext& ctx, const Superfunction& f) {
  require_same_dims(ctx.dims, f.dims());
  const auto [f_even, f_odd] = f.parity_parts();
  SuperVectorField out = f * ctx.reeb;
  const Superfunction* parts[2] = {&f_even, &f_odd};
  for (int p = 0; p < 2; ++p) {
    if (parts[p]->is_zero()) continue;
    std::vector<std::optional<Superfunction>> tf(ctx.dims.generalized_count());
    for (const auto& [r, s, w] : ctx.upper_nonzero) {
      auto& cached = tf[r - 1];
      if (!cached) cached = apply(ctx.t(r), *parts[p]);
      if (cached->is_zero()) continue;
      Rat c = Rat(-1, 2) * w;
      if (p && ctx.t_parity(r)) c = -c;
      out += (c * *cached) * ctx.t(s);
    }
  }
  return out;
}

Superfunction hamiltonian_of(const ContactContext& ctx, const SuperVectorField& x) {
  if (const auto r = contact_violation(ctx, x))
    throw NotContactError(*r, "alpha([X, T_r]) = " + format_expr(form_eval(ctx.alpha, bracket(x, ctx.t(*r)))));
  return form_eval(ctx.alpha, x);
}

Superfunction lagrange_bracket(const ContactContext& ctx, const Superfunction& f, const Superfunction& g) {
  require_same_dims(ctx.dims, f.dims());
  require_same_dims(ctx.dims, g.dims());
  const auto fs = f.parity_parts();
  const auto gs = g.parity_parts();
  const Superfunction* fp[2] = {&fs.first, &fs.second};
  const Superfunction* gp[2] = {&gs.first, &gs.second};
  const int K = ctx.dims.generalized_count();
  Superfunction out(ctx.dims);
  for (int a = 0; a < 2; ++a) {
    if (fp[a]->is_zero()) continue;
    std::vector<Superfunction> tf;
    tf.reserve(K);
    for (int r = 1; r <= K; ++r) tf.push_back(apply(ctx.t(r), *fp[a]));
    const Superfunction df = partial_even(*fp[a], CoordId::z());
    for (int b = 0; b < 2; ++b) {
      if (gp[b]->is_zero()) continue;
      out += *fp[a] * partial_even(*gp[b], CoordId::z());
      out -= df * *gp[b];
      for (const auto& [r, s, w] : ctx.upper_nonzero) {
        if (tf[r - 1].is_zero()) continue;
        Rat c = Rat(-1, 2) * w;
        if (a && ctx.t_parity(r)) c = -c;
        out += c * (tf[r - 1] * apply(ctx.t(s), *gp[b]));
      }
    }
  }
  return out;
}

std::vector<Monomial> quadratic_monomials(const Dims& dims) {
  const auto coords = all_coords(dims);
  std::set<Monomial, MonomialOrder> found;
  found.insert(Monomial::one(dims));
  for (std::size_t a = 0; a < coords.size(); ++a) {
    const Monomial ma = Monomial::of(dims, coords[a]);
    found.insert(ma);
    for (std::size_t b = a; b < coords.size(); ++b) {
      if (auto prod = multiply(ma, Monomial::of(dims, coords[b]))) found.insert(prod->first);
    }
  }
  return {found.begin(), found.end()};
}

long long quadratic_dimension(const Dims& dims) {
  const long long m = dims.even_count();
  const long long n = dims.n;
  return 1 + (m + n) + m * (m + 1) / 2 + m * n + n * (n - 1) / 2;
}

}  // namespace supercontact
