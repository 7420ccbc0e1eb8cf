#include "supercontact/sweeps.hpp"

#include <omp.h>

#include <atomic>
#include <exception>
#include <limits>

#include "supercontact/embedding.hpp"
#include "supercontact/expr.hpp"

namespace supercontact {

namespace {

// An exception thrown by a check is reported as that item's failure; it must
// not escape an OpenMP region.
std::optional<std::string> run_item(const ItemCheck& check, std::size_t k) {
  try {
    return check(k);
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

}  // namespace

SweepOutcome sweep_serial(std::size_t count, const ItemCheck& check) {
  SweepOutcome out;
  for (std::size_t k = 0; k < count; ++k) {
    ++out.checked;
    if (auto failure = run_item(check, k)) {
      out.first_failure = k;
      out.detail = std::move(*failure);
      break;
    }
  }
  return out;
}

SweepOutcome sweep_parallel(std::size_t count, const ItemCheck& check) {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best{kNone};
  std::atomic<std::size_t> checked{0};
  std::string detail;
  const auto n = static_cast<long long>(count);

#pragma omp parallel for schedule(dynamic, 4)
  for (long long i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (k > best.load(std::memory_order_relaxed)) continue;
    checked.fetch_add(1, std::memory_order_relaxed);
    auto failure = run_item(check, k);
    if (!failure) continue;
#pragma omp critical(supercontact_sweep_failure)
    {
      if (k < best.load()) {
        best.store(k);
        detail = std::move(*failure);
      }
    }
  }

  SweepOutcome out;
  const std::size_t b = best.load();
  if (b != kNone) {
    out.first_failure = b;
    out.detail = std::move(detail);
    // Match the serial count: everything up to and including the failure.
    out.checked = b + 1;
  } else {
    out.checked = checked.load();
  }
  return out;
}

SweepOutcome sweep(std::size_t count, Execution exec, const ItemCheck& check) {
  return exec == Execution::Parallel ? sweep_parallel(count, check) : sweep_serial(count, check);
}

namespace {

template <class T, class F>
std::vector<T> map_items(std::size_t count, Execution exec, F&& make) {
  std::vector<std::optional<T>> slots(count);
  const auto n = static_cast<long long>(count);
  if (exec == Execution::Parallel) {
    std::exception_ptr first;
    long long first_index = n;
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) {
      try {
        slots[i].emplace(make(static_cast<std::size_t>(i)));
      } catch (...) {
#pragma omp critical(supercontact_map_failure)
        if (i < first_index) {
          first_index = i;
          first = std::current_exception();
        }
      }
    }
    if (first) std::rethrow_exception(first);
  } else {
    for (long long i = 0; i < n; ++i) slots[i].emplace(make(static_cast<std::size_t>(i)));
  }
  std::vector<T> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace

std::vector<Superfunction> as_superfunctions(const Dims& dims, const std::vector<Monomial>& ms) {
  std::vector<Superfunction> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(Superfunction::term(dims, m, Rat(1)));
  return out;
}

SweepOutcome lagrange_homomorphism_sweep(const ContactContext& ctx, const std::vector<Superfunction>& fs,
                                         Execution exec) {
  const auto fields = map_items<SuperVectorField>(fs.size(), exec, [&](std::size_t k) { return contact_field(ctx, fs[k]); });
  const std::size_t n = fs.size();
  return sweep(n * n, exec, [&](std::size_t k) -> std::optional<std::string> {
    const std::size_t a = k / n;
    const std::size_t b = k % n;
    const Superfunction h = lagrange_bracket(ctx, fs[a], fs[b]);
    if (bracket(fields[a], fields[b]) == contact_field(ctx, h)) return std::nullopt;
    return "[X_f, X_g] != X_{f,g} for f = " + format_expr(fs[a]) + ", g = " + format_expr(fs[b]);
  });
}

SweepOutcome degree_closure_sweep(const ContactContext& ctx, const std::vector<Superfunction>& fs, Execution exec) {
  const std::size_t n = fs.size();
  return sweep(n * n, exec, [&](std::size_t k) -> std::optional<std::string> {
    const Superfunction h = lagrange_bracket(ctx, fs[k / n], fs[k % n]);
    if (h.degree() <= 2) return std::nullopt;
    return "{f, g} = " + format_expr(h) + " has degree > 2 for f = " + format_expr(fs[k / n]) +
           ", g = " + format_expr(fs[k % n]);
  });
}

SweepOutcome spo_closure_sweep(const std::vector<SpoBasisElement>& basis, Execution exec) {
  const std::size_t n = basis.size();
  return sweep(n * n, exec, [&](std::size_t k) -> std::optional<std::string> {
    const auto& a = basis[k / n];
    const auto& b = basis[k % n];
    if (is_spo_blocks(mat_bracket(a.matrix, b.matrix))) return std::nullopt;
    return "[" + to_string(a.label) + ", " + to_string(b.label) + "] leaves spo";
  });
}

SweepOutcome embedding_homomorphism_sweep(const ContactContext& ctx, const std::vector<SpoBasisElement>& basis,
                                          Execution exec) {
  const auto fields =
      map_items<SuperVectorField>(basis.size(), exec, [&](std::size_t k) { return embed_spo(ctx, basis[k].matrix); });
  const std::size_t n = basis.size();
  return sweep(n * n, exec, [&](std::size_t k) -> std::optional<std::string> {
    const auto& a = basis[k / n];
    const auto& b = basis[k % n];
    const SuperVectorField lhs = embed_spo(ctx, mat_bracket(a.matrix, b.matrix));
    const SuperVectorField rhs = bracket(fields[k / n], fields[k % n]);
    if (lhs == rhs) return std::nullopt;
    return "embed([" + to_string(a.label) + ", " + to_string(b.label) + "]) = " + format_field(lhs) +
           " but bracket of images = " + format_field(rhs);
  });
}

SweepOutcome isomorphism_sweep(const ContactContext& ctx, const std::vector<SpoBasisElement>& basis, Execution exec) {
  const auto phi = map_items<Superfunction>(basis.size(), exec, [&](std::size_t k) {
    return form_eval(ctx.alpha, embed_spo(ctx, basis[k].matrix));
  });
  const std::size_t n = basis.size();
  return sweep(n * n, exec, [&](std::size_t k) -> std::optional<std::string> {
    const auto& a = basis[k / n];
    const auto& b = basis[k % n];
    const Superfunction lhs = form_eval(ctx.alpha, embed_spo(ctx, mat_bracket(a.matrix, b.matrix)));
    const Superfunction rhs = lagrange_bracket(ctx, phi[k / n], phi[k % n]);
    if (lhs == rhs) return std::nullopt;
    return "phi([" + to_string(a.label) + ", " + to_string(b.label) + "]) = " + format_expr(lhs) +
           " but {phi A, phi B} = " + format_expr(rhs);
  });
}

SweepOutcome contactness_sweep(const ContactContext& ctx, const std::vector<SpoBasisElement>& basis, Execution exec) {
  return sweep(basis.size(), exec, [&](std::size_t k) -> std::optional<std::string> {
    const SuperVectorField x = embed_spo(ctx, basis[k].matrix);
    if (const auto r = contact_violation(ctx, x))
      return "embed(" + to_string(basis[k].label) + ") = " + format_field(x) + " fails against T_" + std::to_string(*r);
    return std::nullopt;
  });
}

}  // namespace supercontact
