#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "supercontact/contact.hpp"
#include "supercontact/spo.hpp"

namespace supercontact {

enum class Execution { Serial, Parallel };

/// Outcome of checking items 0..count-1. `first_failure` is always the
/// smallest failing index, whatever the execution mode.
struct SweepOutcome {
  std::size_t checked = 0;
  std::optional<std::size_t> first_failure;
  std::string detail;

  bool passed() const { return !first_failure.has_value(); }
};

/// Returns a failure description for item k, or nullopt if it passes.
using ItemCheck = std::function<std::optional<std::string>(std::size_t)>;

/// Serial reference: stops at the first failure.
SweepOutcome sweep_serial(std::size_t count, const ItemCheck& check);

/// OpenMP version. Items above the best failure found so far are skipped,
/// so the reported failure matches the serial one.
SweepOutcome sweep_parallel(std::size_t count, const ItemCheck& check);

SweepOutcome sweep(std::size_t count, Execution exec, const ItemCheck& check);

/// [X_f, X_g] == X_{{f,g}} for every ordered pair.
SweepOutcome lagrange_homomorphism_sweep(const ContactContext& ctx, const std::vector<Superfunction>& fs,
                                         Execution exec);

/// deg {f,g} <= 2 for every ordered pair.
SweepOutcome degree_closure_sweep(const ContactContext& ctx, const std::vector<Superfunction>& fs, Execution exec);

/// is_spo_blocks([A, B]) for every ordered pair of basis matrices.
SweepOutcome spo_closure_sweep(const std::vector<SpoBasisElement>& basis, Execution exec);

/// embed([A, B]) == [embed A, embed B] for every ordered pair.
SweepOutcome embedding_homomorphism_sweep(const ContactContext& ctx, const std::vector<SpoBasisElement>& basis,
                                          Execution exec);

/// phi([A, B]) == {phi A, phi B} with phi(A) = alpha(embed A), every ordered pair.
SweepOutcome isomorphism_sweep(const ContactContext& ctx, const std::vector<SpoBasisElement>& basis, Execution exec);

/// Every embedded basis element is contact.
SweepOutcome contactness_sweep(const ContactContext& ctx, const std::vector<SpoBasisElement>& basis, Execution exec);

/// Monomials as coefficient-1 superfunctions.
std::vector<Superfunction> as_superfunctions(const Dims& dims, const std::vector<Monomial>& ms);

}  // namespace supercontact
