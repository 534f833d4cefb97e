#pragma once

#include <optional>
#include <string>

#include "crsym/catalog.hpp"

namespace crsym {

/// Analysis result of one model, the versioned wire format of the CLI.
struct Report {
  static constexpr int kSchemaVersion = 1;

  std::string input;  // canonical rendering of the model
  Weight lam{Rat(1, 2), Rat(1, 2)};
  int levi_rank_origin = 0;
  bool holo_nondegenerate = false;

  struct Component {
    Rat weight;
    int dim = 0;
    int rigid_dim = -1;  // -1 when not computed for this weight
    std::vector<std::string> basis;
  };
  std::vector<Component> components;

  ClassificationRow classification;
  std::optional<std::string> table_row;
  std::vector<std::string> notes;
};

/// Rank (0, 1 or 2) of the Hermitian matrix of z_i conj(z_j) coefficients.
int levi_rank_at_origin(const MixedPoly& P);

/// Full pipeline: weights, degeneracy, graded algebra, classification and
/// table match for a model polynomial.
Report analyze_model(const MixedPoly& P, unsigned threads = 0);

/// JSON rendering; all rational numbers appear as exact strings.
std::string to_json(const Report& r);

/// Human-readable rendering.
std::string to_text(const Report& r);

}  // namespace crsym
