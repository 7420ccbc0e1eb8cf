#pragma once

#include <string>
#include <vector>

#include "supercontact/spo.hpp"
#include "supercontact/vector_field.hpp"

namespace supercontact {

/// Expected image of one spo basis element, written out from the explicit
/// vector fields of the case analysis (not computed through the embedding).
struct GoldenCase {
  SpoBasisLabel label;
  SuperVectorField field;
  Superfunction hamiltonian;  // the f with field == X_f, including the scale factor
  std::string relation;       // e.g. "2X_{z}", "-X_{1}"
};

/// One case per spo basis element, for any (l, n).
std::vector<GoldenCase> golden_cases(const Dims& dims);

}  // namespace supercontact
