#pragma once

#include <map>
#include <optional>
#include <string>

#include "crsym/classify.hpp"

namespace crsym {

/// Model families: T1..T9 are the table rows, GN10/GN9 the models with
/// nontrivial g_n, QUADRIC_M the squared-quadric family, EX_S5 and EX_TH2
/// the two fixed exotic examples.
enum class RowId {
  T1, T2, T3, T4, T5, T6, T7, T8, T9,
  GN10, GN9, QUADRIC_M, EX_S5, EX_TH2,
};

std::string row_name(RowId id);
std::optional<RowId> row_from_name(const std::string& name);

/// One concrete instance of a family. Integer parameters live in `params`
/// (missing keys take the family default); T5/T9 may override the
/// perturbation polynomial via Q.
struct ModelSpec {
  RowId row = RowId::T1;
  std::map<std::string, long> params;
  std::optional<MixedPoly> Q;
};

/// All families with their default parameters, in enum order.
std::vector<ModelSpec> default_specs();

/// Expand the named family instance into a model polynomial. Throws
/// InvalidParams for out-of-range parameters and DegenerateInstance if the
/// result is holomorphically degenerate.
MixedPoly build_model(const ModelSpec& spec);

/// The claimed dimension profile for the family.
ClassificationRow expected_profile(const ModelSpec& spec);

/// Candidate perturbations Q(z2, conj z2) for the perturbed rows (T5, T9):
/// real, non-pluriharmonic, non-circular, of the right weighted degree for
/// the instance, smallest first.
std::vector<MixedPoly> perturbation_candidates(RowId row, long alpha);

struct SweepLine {
  std::string row;
  std::string params;
  bool pass = false;
  ClassificationRow expected, actual;
  std::string note;  // e.g. perturbation retries
};

struct SweepReport {
  std::vector<SweepLine> lines;
  bool all_pass = true;
};

/// Run the table harness: build every instance, compute its symmetry
/// algebra, classify and compare against the expected profile. Perturbed
/// rows retry across perturbation_candidates on mismatch.
SweepReport sweep_table(const std::vector<ModelSpec>& specs);

}  // namespace crsym
