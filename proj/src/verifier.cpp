#include "supercontact/verifier.hpp"

#include <chrono>
#include <functional>
#include <optional>

#include "supercontact/embedding.hpp"
#include "supercontact/expr.hpp"
#include "supercontact/golden.hpp"
#include "supercontact/random.hpp"

namespace supercontact {

namespace {

using Failure = std::optional<std::string>;

struct Env {
  Dims dims;
  SuiteOptions opt;
  ContactContext ctx;
  std::vector<SpoBasisElement> basis;
  std::vector<Superfunction> quadratic;

  /// Each check draws from its own stream so checks stay independent of each other's draws.
  RandomAlgebra rng(std::uint64_t salt) const { return RandomAlgebra(dims, opt.seed * 1000003ULL + salt); }
};

std::string show(const Superfunction& f) { return format_expr(f); }

std::optional<int> random_parity(RandomAlgebra& r) { return r.uniform(0, 1); }

// ---- grassmann-core ----

Failure supercommutativity(const Env& e) {
  auto r = e.rng(1);
  for (int k = 0; k < e.opt.cases; ++k) {
    const int p = r.uniform(0, 1);
    const int q = r.uniform(0, 1);
    const Superfunction f = r.superfunction(3, 3, p);
    const Superfunction g = r.superfunction(3, 3, q);
    Superfunction rhs = g * f;
    if (p & q) rhs = -rhs;
    if (f * g != rhs) return "f = " + show(f) + ", g = " + show(g);
  }
  return std::nullopt;
}

Failure associativity(const Env& e) {
  auto r = e.rng(2);
  for (int k = 0; k < e.opt.cases; ++k) {
    const Superfunction f = r.superfunction(3, 3);
    const Superfunction g = r.superfunction(3, 3);
    const Superfunction h = r.superfunction(3, 3);
    if ((f * g) * h != f * (g * h)) return "f = " + show(f) + ", g = " + show(g) + ", h = " + show(h);
  }
  return std::nullopt;
}

Failure odd_derivatives(const Env& e) {
  auto r = e.rng(3);
  for (int k = 0; k < e.opt.cases; ++k) {
    const Superfunction f = r.superfunction(4, 6);
    for (int i = 1; i <= e.dims.n; ++i) {
      if (!partial_odd(partial_odd(f, i), i).is_zero()) return "d_th" + std::to_string(i) + "^2 f != 0 for f = " + show(f);
      for (int j = i + 1; j <= e.dims.n; ++j)
        if (partial_odd(partial_odd(f, i), j) != -partial_odd(partial_odd(f, j), i))
          return "th" + std::to_string(i) + ", th" + std::to_string(j) + " do not anticommute on f = " + show(f);
    }
  }
  return std::nullopt;
}

Failure even_derivatives(const Env& e) {
  auto r = e.rng(4);
  const auto coords = all_coords(e.dims);
  for (int k = 0; k < e.opt.cases; ++k) {
    const Superfunction f = r.superfunction(4, 6);
    for (CoordId a : coords)
      for (CoordId b : coords) {
        if (a.is_odd() && b.is_odd()) continue;
        if (partial(partial(f, a), b) != partial(partial(f, b), a))
          return to_string(a) + ", " + to_string(b) + " do not commute on f = " + show(f);
      }
  }
  return std::nullopt;
}

Failure round_trip(const Env& e) {
  auto r = e.rng(5);
  for (int k = 0; k < e.opt.cases; ++k) {
    const Superfunction f = r.superfunction(4, 6);
    if (parse_expr(format_expr(f), e.dims) != f) return "f = " + show(f);
  }
  return std::nullopt;
}

// Brute force: concatenate index lists and bubble-sort, counting swaps.
std::optional<std::pair<std::vector<int>, int>> word_product_oracle(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  int swaps = 0;
  for (std::size_t pass = 0; pass < a.size(); ++pass)
    for (std::size_t k = 0; k + 1 < a.size(); ++k) {
      if (a[k] == a[k + 1]) return std::nullopt;
      if (a[k] > a[k + 1]) {
        std::swap(a[k], a[k + 1]);
        ++swaps;
      }
    }
  for (std::size_t k = 0; k + 1 < a.size(); ++k)
    if (a[k] == a[k + 1]) return std::nullopt;
  return std::make_pair(a, (swaps & 1) ? -1 : 1);
}

Failure grassmann_oracle(const Env& e) {
  const int m = std::min(e.dims.n, 4);
  const auto word_of = [&](unsigned mask) {
    std::vector<int> w;
    for (int j = 1; j <= m; ++j)
      if (mask >> (j - 1) & 1U) w.push_back(j);
    return w;
  };
  const auto as_sf = [&](const std::vector<int>& w, int sign) {
    Monomial mono = Monomial::one(e.dims);
    for (int j : w) mono.odd |= std::uint64_t{1} << (j - 1);
    return Superfunction::term(e.dims, mono, Rat(sign));
  };
  for (unsigned a = 0; a < (1U << m); ++a)
    for (unsigned b = 0; b < (1U << m); ++b) {
      const auto wa = word_of(a);
      const auto wb = word_of(b);
      const auto expected = word_product_oracle(wa, wb);
      const Superfunction got = as_sf(wa, 1) * as_sf(wb, 1);
      const Superfunction want = expected ? as_sf(expected->first, expected->second) : Superfunction(e.dims);
      if (got != want) return show(as_sf(wa, 1)) + " * " + show(as_sf(wb, 1)) + " = " + show(got) + ", expected " + show(want);
    }
  return std::nullopt;
}

// ---- fields-forms ----

Failure leibniz(const Env& e) {
  auto r = e.rng(6);
  for (int k = 0; k < e.opt.cases; ++k) {
    const int px = r.uniform(0, 1);
    const int pf = r.uniform(0, 1);
    const SuperVectorField x = r.field(px, 2, 3);
    const Superfunction f = r.superfunction(2, 3, pf);
    const Superfunction g = r.superfunction(2, 3);
    Superfunction second = f * apply(x, g);
    if (px & pf) second = -second;
    if (apply(x, f * g) != apply(x, f) * g + second)
      return "X = " + format_field(x) + ", f = " + show(f) + ", g = " + show(g);
  }
  return std::nullopt;
}

Failure field_antisymmetry(const Env& e) {
  auto r = e.rng(7);
  for (int k = 0; k < e.opt.cases; ++k) {
    const int px = r.uniform(0, 1);
    const int py = r.uniform(0, 1);
    const SuperVectorField x = r.field(px, 2, 3);
    const SuperVectorField y = r.field(py, 2, 3);
    SuperVectorField rhs = bracket(y, x);
    if (!(px & py)) rhs = -rhs;
    if (bracket(x, y) != rhs) return "X = " + format_field(x) + ", Y = " + format_field(y);
  }
  return std::nullopt;
}

Failure field_jacobi(const Env& e) {
  auto r = e.rng(8);
  for (int k = 0; k < e.opt.cases; ++k) {
    const int px = r.uniform(0, 1);
    const int py = r.uniform(0, 1);
    const int pz = r.uniform(0, 1);
    const SuperVectorField x = r.field(px, 2, 2);
    const SuperVectorField y = r.field(py, 2, 2);
    const SuperVectorField z = r.field(pz, 2, 2);
    SuperVectorField sum = Rat(sign_of(px * pz)) * bracket(x, bracket(y, z));
    sum += Rat(sign_of(py * px)) * bracket(y, bracket(z, x));
    sum += Rat(sign_of(pz * py)) * bracket(z, bracket(x, y));
    if (!sum.is_zero())
      return "X = " + format_field(x) + ", Y = " + format_field(y) + ", Z = " + format_field(z);
  }
  return std::nullopt;
}

Failure bracket_commutator(const Env& e) {
  auto r = e.rng(9);
  for (int k = 0; k < e.opt.cases; ++k) {
    const int px = r.uniform(0, 1);
    const int py = r.uniform(0, 1);
    const SuperVectorField x = r.field(px, 2, 3);
    const SuperVectorField y = r.field(py, 2, 3);
    const Superfunction f = r.superfunction(3, 4);
    Superfunction rhs = apply(x, apply(y, f));
    if (px & py)
      rhs += apply(y, apply(x, f));
    else
      rhs -= apply(y, apply(x, f));
    if (apply(bracket(x, y), f) != rhs)
      return "X = " + format_field(x) + ", Y = " + format_field(y) + ", f = " + show(f);
  }
  return std::nullopt;
}

// ---- contact ----

Failure context_invariants(const Env& e) {
  // make_context asserts the omega and frame invariants itself.
  const ContactContext ctx = make_context(e.dims);
  if (static_cast<int>(ctx.frame.size()) != e.dims.generalized_count()) return std::string("frame has wrong length");
  if (form_eval(ctx.alpha, ctx.reeb) != Superfunction::constant(e.dims, Rat(1))) return std::string("alpha(T_0) != 1");
  for (int r = 1; r <= e.dims.generalized_count(); ++r)
    if (!is_tangent(ctx, ctx.t(r))) return "alpha(T_" + std::to_string(r) + ") != 0";
  return std::nullopt;
}

Failure frame_relations(const Env& e) {
  const ContactContext& ctx = e.ctx;
  const int K = e.dims.generalized_count();
  const Superfunction z = Superfunction::variable(e.dims, CoordId::z());
  const auto q = [&](int k) { return Superfunction::variable(e.dims, generalized_coord(e.dims, k)); };
  for (int r = 1; r <= K; ++r) {
    // -w_{kr} q^k
    Superfunction tz(e.dims);
    for (int k = 1; k <= K; ++k) tz -= ctx.omega_lower(k - 1, r - 1) * q(k);
    for (int k = 1; k <= K; ++k) {
      const Superfunction want = Superfunction::constant(e.dims, Rat(r == k ? 1 : 0));
      if (apply(ctx.t(r), q(k)) != want) return "T_" + std::to_string(r) + "(q^" + std::to_string(k) + ") != delta";
    }
    if (apply(ctx.t(r), z) != tz) return "T_" + std::to_string(r) + "(z) = " + show(apply(ctx.t(r), z));
    if (apply(ctx.t(r), z * z) != Rat(2) * (z * tz)) return "T_" + std::to_string(r) + "(z^2) = " + show(apply(ctx.t(r), z * z));
    for (int j = 1; j <= K; ++j) {
      const SuperVectorField want = Rat(-2) * ctx.omega_lower(r - 1, j - 1) * ctx.reeb;
      const SuperVectorField got = bracket(ctx.t(r), ctx.t(j));
      if (got != want) return "[T_" + std::to_string(r) + ", T_" + std::to_string(j) + "] = " + format_field(got);
    }
  }
  return std::nullopt;
}

Failure contact_field_correct(const Env& e) {
  auto r = e.rng(10);
  for (int k = 0; k < e.opt.cases; ++k) {
    const Superfunction f = r.superfunction(2, 4);
    const SuperVectorField x = contact_field(e.ctx, f);
    if (!is_contact(e.ctx, x)) return "X_f not contact for f = " + show(f);
    if (form_eval(e.ctx.alpha, x) != f) return "alpha(X_f) != f for f = " + show(f);
  }
  return std::nullopt;
}

Failure hamiltonian_round_trip(const Env& e) {
  auto r = e.rng(11);
  for (int k = 0; k < e.opt.cases; ++k) {
    const Superfunction f = r.superfunction(2, 4);
    const SuperVectorField x = contact_field(e.ctx, f);
    const Superfunction h = hamiltonian_of(e.ctx, x);
    if (h != f) return "hamiltonian_of(X_f) = " + show(h) + " for f = " + show(f);
    if (contact_field(e.ctx, h) != x) return "X_{H(X)} != X for X = " + format_field(x);
  }
  return std::nullopt;
}

Failure from_sweep(const SweepOutcome& s) {
  if (s.passed()) return std::nullopt;
  return s.detail;
}

Failure lagrange_antisymmetry(const Env& e) {
  for (const auto& f : e.quadratic)
    for (const auto& g : e.quadratic) {
      Superfunction rhs = lagrange_bracket(e.ctx, g, f);
      if (!(*f.parity() & *g.parity())) rhs = -rhs;
      if (lagrange_bracket(e.ctx, f, g) != rhs) return "f = " + show(f) + ", g = " + show(g);
    }
  return std::nullopt;
}

Failure lagrange_jacobi(const Env& e) {
  auto r = e.rng(12);
  const auto& q = e.quadratic;
  const int last = static_cast<int>(q.size()) - 1;
  for (int k = 0; k < e.opt.cases; ++k) {
    const Superfunction& f = q[r.uniform(0, last)];
    const Superfunction& g = q[r.uniform(0, last)];
    const Superfunction& h = q[r.uniform(0, last)];
    const int pf = *f.parity();
    const int pg = *g.parity();
    const int ph = *h.parity();
    const auto lb = [&](const Superfunction& a, const Superfunction& b) { return lagrange_bracket(e.ctx, a, b); };
    Superfunction sum = Rat(sign_of(pf * ph)) * lb(f, lb(g, h));
    sum += Rat(sign_of(pg * pf)) * lb(g, lb(h, f));
    sum += Rat(sign_of(ph * pg)) * lb(h, lb(f, g));
    if (!sum.is_zero()) return "f = " + show(f) + ", g = " + show(g) + ", h = " + show(h);
  }
  return std::nullopt;
}

// ---- spo-matrix ----

GradedMatrix random_member(const Env& e, RandomAlgebra& r) {
  GradedMatrix a(e.dims);
  for (const auto& b : e.basis)
    if (r.uniform(0, 2) == 0) a += r.rational() * b.matrix;
  return a;
}

Failure omega_agreement(const Env& e) {
  auto r = e.rng(13);
  const OmegaStructure s = make_omega(e.dims);
  int members = 0;
  int others = 0;
  for (int k = 0; k < e.opt.matrix_cases; ++k) {
    GradedMatrix a(e.dims);
    switch (k % 3) {
      case 0: a = random_member(e, r); break;
      case 1:
        a = random_member(e, r);
        a.add(r.uniform(1, a.size()), r.uniform(1, a.size()), r.rational());
        break;
      default: a = r.graded_matrix(r.uniform(0, 2) == 2 ? std::nullopt : random_parity(r)); break;
    }
    const bool p = preserves_omega(s, a);
    const bool b = is_spo_blocks(a);
    (b ? members : others)++;
    if (p != b) return "preserves_omega = " + std::string(p ? "true" : "false") + " but block test disagrees on " + to_json(a).dump();
  }
  if (members == 0 || others == 0) return std::string("sample did not contain both members and non-members");
  return std::nullopt;
}

Failure basis_membership(const Env& e) {
  const OmegaStructure s = make_omega(e.dims);
  if (static_cast<long long>(e.basis.size()) != spo_dim(e.dims))
    return "basis has " + std::to_string(e.basis.size()) + " elements, spo_dim = " + std::to_string(spo_dim(e.dims));
  for (const auto& b : e.basis)
    if (!preserves_omega(s, b.matrix) || !is_spo_blocks(b.matrix)) return to_string(b.label) + " is not in spo";
  return std::nullopt;
}

Failure basis_rank(const Env& e) {
  std::vector<std::vector<Rat>> rows;
  for (const auto& b : e.basis) {
    std::vector<Rat> flat;
    for (int i = 1; i <= b.matrix.size(); ++i)
      for (int j = 1; j <= b.matrix.size(); ++j) flat.push_back(b.matrix.entry(i, j));
    rows.push_back(std::move(flat));
  }
  const auto rk = static_cast<long long>(rank(rows));
  if (rk != spo_dim(e.dims)) return "rank " + std::to_string(rk) + " != spo_dim " + std::to_string(spo_dim(e.dims));
  return std::nullopt;
}

Failure matrix_jacobi(const Env& e) {
  auto r = e.rng(14);
  for (int k = 0; k < e.opt.cases; ++k) {
    const int pa = r.uniform(0, 1);
    const int pb = r.uniform(0, 1);
    const int pc = r.uniform(0, 1);
    const GradedMatrix a = r.graded_matrix(pa);
    const GradedMatrix b = r.graded_matrix(pb);
    const GradedMatrix c = r.graded_matrix(pc);
    GradedMatrix sum = Rat(sign_of(pa * pc)) * mat_bracket(a, mat_bracket(b, c));
    sum += Rat(sign_of(pb * pa)) * mat_bracket(b, mat_bracket(c, a));
    sum += Rat(sign_of(pc * pb)) * mat_bracket(c, mat_bracket(a, b));
    if (!sum.is_zero()) return "A = " + to_json(a).dump() + ", B = " + to_json(b).dump() + ", C = " + to_json(c).dump();
  }
  return std::nullopt;
}

Failure identity_excluded(const Env& e) {
  const GradedMatrix id = GradedMatrix::identity(e.dims);
  if (preserves_omega(make_omega(e.dims), id)) return std::string("identity preserves omega");
  if (is_spo_blocks(id)) return std::string("identity satisfies the block conditions");
  return std::nullopt;
}

// ---- embedding ----

Failure golden_table(const Env& e) {
  for (const auto& gc : golden_cases(e.dims)) {
    const SuperVectorField got = embed_spo(e.ctx, spo_basis_matrix(e.dims, gc.label));
    if (got != gc.field)
      return to_string(gc.label) + ": embedded field " + format_field(got) + ", expected " + format_field(gc.field);
    const Superfunction h = hamiltonian_of(e.ctx, got);
    if (h != gc.hamiltonian)
      return to_string(gc.label) + ": Hamiltonian " + show(h) + ", expected " + show(gc.hamiltonian) + " (" + gc.relation + ")";
    if (contact_field(e.ctx, gc.hamiltonian) != got) return to_string(gc.label) + ": field is not " + gc.relation;
  }
  return std::nullopt;
}

Failure isomorphism(const Env& e) {
  if (auto f = from_sweep(isomorphism_sweep(e.ctx, e.basis, e.opt.exec))) return f;
  const auto qm = quadratic_monomials(e.dims);
  std::vector<std::vector<Rat>> rows;
  for (const auto& b : e.basis) {
    const Superfunction phi = form_eval(e.ctx.alpha, embed_spo(e.ctx, b.matrix));
    if (phi.degree() > 2) return "phi(" + to_string(b.label) + ") = " + show(phi) + " has degree > 2";
    std::vector<Rat> row;
    for (const auto& m : qm) row.push_back(phi.coefficient(m));
    rows.push_back(std::move(row));
  }
  const auto rk = static_cast<long long>(rank(rows));
  if (rk != spo_dim(e.dims) || rk != quadratic_dimension(e.dims))
    return "rank of phi-image " + std::to_string(rk) + ", spo_dim " + std::to_string(spo_dim(e.dims)) +
           ", quadratic dimension " + std::to_string(quadratic_dimension(e.dims));
  return std::nullopt;
}

Failure scalar_invariance(const Env& e) {
  auto r = e.rng(15);
  const CoordMap cmap(e.dims);
  for (int k = 0; k < e.opt.cases; ++k) {
    const GradedMatrix a = random_member(e, r);
    const Rat c = r.rational();
    const GradedMatrix shifted = a + c * GradedMatrix::identity(e.dims);
    if (projective_embed(normalize_rep(shifted), cmap) != embed_spo(e.ctx, a))
      return "embedding changes under A -> A + " + to_short_string(c) + " Id for A = " + to_json(a).dump();
  }
  return std::nullopt;
}

struct NamedCheck {
  const char* name;
  std::function<Failure(const Env&)> run;
};

}  // namespace

Report run_suite(const Dims& dims, const SuiteOptions& options) {
  Env env{dims, options, make_context(dims), spo_basis(dims), {}};
  env.quadratic = as_superfunctions(dims, quadratic_monomials(dims));

  const Execution exec = options.exec;
  const std::vector<NamedCheck> checks = {
      {"grassmann.supercommutativity", supercommutativity},
      {"grassmann.associativity", associativity},
      {"grassmann.odd_derivatives_anticommute", odd_derivatives},
      {"grassmann.even_derivatives_commute", even_derivatives},
      {"grassmann.parse_format_round_trip", round_trip},
      {"grassmann.word_product_oracle", grassmann_oracle},
      {"fields.graded_leibniz", leibniz},
      {"fields.graded_antisymmetry", field_antisymmetry},
      {"fields.super_jacobi", field_jacobi},
      {"fields.bracket_is_commutator", bracket_commutator},
      {"contact.context_invariants", context_invariants},
      {"contact.frame_relations", frame_relations},
      {"contact.contact_field", contact_field_correct},
      {"contact.hamiltonian_round_trip", hamiltonian_round_trip},
      {"contact.lagrange_homomorphism",
       [exec](const Env& e) { return from_sweep(lagrange_homomorphism_sweep(e.ctx, e.quadratic, exec)); }},
      {"contact.degree_closure",
       [exec](const Env& e) { return from_sweep(degree_closure_sweep(e.ctx, e.quadratic, exec)); }},
      {"contact.lagrange_antisymmetry", lagrange_antisymmetry},
      {"contact.lagrange_jacobi", lagrange_jacobi},
      {"spo.omega_block_agreement", omega_agreement},
      {"spo.basis_membership", basis_membership},
      {"spo.basis_rank", basis_rank},
      {"spo.bracket_closure", [exec](const Env& e) { return from_sweep(spo_closure_sweep(e.basis, exec)); }},
      {"spo.super_jacobi", matrix_jacobi},
      {"spo.identity_excluded", identity_excluded},
      {"embedding.golden_table", golden_table},
      {"embedding.contactness",
       [exec](const Env& e) { return from_sweep(contactness_sweep(e.ctx, e.basis, exec)); }},
      {"embedding.homomorphism",
       [exec](const Env& e) { return from_sweep(embedding_homomorphism_sweep(e.ctx, e.basis, exec)); }},
      {"embedding.isomorphism", isomorphism},
      {"embedding.scalar_invariance", scalar_invariance},
  };

  Report report;
  report.l = dims.l;
  report.n = dims.n;
  report.dim_spo = spo_dim(dims);
  report.dim_quadratic = quadratic_dimension(dims);
  report.all_passed = true;
  for (const auto& check : checks) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult result{check.name, true, "", 0};
    try {
      if (auto failure = check.run(env)) {
        result.passed = false;
        result.details = failure->empty() ? "failed" : *failure;
      }
    } catch (const std::exception& ex) {
      result.passed = false;
      result.details = std::string("exception: ") + ex.what();
    }
    result.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    report.all_passed = report.all_passed && result.passed;
    report.checks.push_back(std::move(result));
  }
  return report;
}

nlohmann::json to_json(const CheckResult& c) {
  return {{"name", c.name}, {"passed", c.passed}, {"details", c.details}, {"elapsedMs", c.elapsed_ms}};
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"l", r.l},
          {"n", r.n},
          {"dimSpo", r.dim_spo},
          {"dimQuadratic", r.dim_quadratic},
          {"checks", std::move(checks)},
          {"allPassed", r.all_passed}};
}

Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.l = j.at("l").get<int>();
  r.n = j.at("n").get<int>();
  r.dim_spo = j.at("dimSpo").get<long long>();
  r.dim_quadratic = j.at("dimQuadratic").get<long long>();
  r.all_passed = j.at("allPassed").get<bool>();
  for (const auto& c : j.at("checks"))
    r.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(), c.at("details").get<std::string>(),
                        c.at("elapsedMs").get<std::int64_t>()});
  return r;
}

}  // namespace supercontact
