#include "crsym/report.hpp"

#include <sstream>

#include <json.hpp>

namespace crsym {

int levi_rank_at_origin(const MixedPoly& P) {
  auto h = [&](int i, int j) {
    Mono m{};
    (i == 0 ? m.a1 : m.a2) = 1;
    (j == 0 ? m.b1 : m.b2) = 1;
    return P.coeff(m);
  };
  GaussRat a = h(0, 0), b = h(0, 1), c = h(1, 0), d = h(1, 1);
  if (!(a * d - b * c).is_zero()) return 2;
  if (!a.is_zero() || !b.is_zero() || !c.is_zero() || !d.is_zero()) return 1;
  return 0;
}

Report analyze_model(const MixedPoly& P, unsigned threads) {
  Report r;
  r.input = P.str();
  r.levi_rank_origin = levi_rank_at_origin(P);
  r.holo_nondegenerate = !holomorphic_degeneracy(P).has_value();

  GradedAlgebra alg = compute_symmetry_algebra(P, threads);
  r.lam = alg.lam;
  for (const auto& [nu, comp] : alg.components) {
    Report::Component c;
    c.weight = nu;
    c.dim = comp.dim();
    if (nu >= 0 && nu < 1) c.rigid_dim = comp.rigid_dim();
    for (const HoloField& X : comp.basis) c.basis.push_back(X.str());
    r.components.push_back(std::move(c));
  }

  r.classification = split_components(P, alg);
  r.table_row = match_table_row(r.classification, alg.lam);

  if (!r.holo_nondegenerate)
    r.notes.push_back("model is holomorphically degenerate");
  if (r.levi_rank_origin == 2)
    r.notes.push_back("Levi form is nondegenerate at the origin");
  if (!r.classification.nil_check_exact)
    r.notes.push_back(
        "nilpotent-rotation check was heuristic (trace-free rotation space of "
        "dimension > 2)");
  if (auto ex = detect_exotic(alg)) {
    if (ex->monomial_diagonal) {
      std::ostringstream os;
      os << "exotic symmetry is monomial-diagonal with (p,q,alpha,beta) = ("
         << ex->p << "," << ex->q << "," << ex->alpha << "," << ex->beta << ")";
      r.notes.push_back(os.str());
    } else {
      r.notes.push_back("exotic symmetry is not of monomial-diagonal form");
    }
  }
  return r;
}

namespace {

nlohmann::json row_json(const ClassificationRow& c) {
  return {
      {"dim_g", c.dim_g},           {"dim_gt", c.dim_gt},
      {"dim_g0", c.dim_g0},         {"dim_g0_re", c.dim_g0_re},
      {"dim_g0_im", c.dim_g0_im},   {"dim_g0_nil", c.dim_g0_nil},
      {"dim_gc", c.dim_gc},         {"dim_gn", c.dim_gn},
      {"dim_g1", c.dim_g1},         {"has_euler", c.has_euler},
      {"two_jet_determined", c.two_jet_determined},
      {"nil_check_exact", c.nil_check_exact},
  };
}

}  // namespace

std::string to_json(const Report& r) {
  nlohmann::json j;
  j["schema_version"] = Report::kSchemaVersion;
  j["input"] = r.input;
  j["weights"] = {{"mu1", to_string(r.lam.mu1)}, {"mu2", to_string(r.lam.mu2)}};
  j["levi_rank_origin"] = r.levi_rank_origin;
  j["holo_nondegenerate"] = r.holo_nondegenerate;
  j["components"] = nlohmann::json::array();
  for (const auto& c : r.components) {
    nlohmann::json jc;
    jc["weight"] = to_string(c.weight);
    jc["dim"] = c.dim;
    if (c.rigid_dim >= 0) jc["rigid_dim"] = c.rigid_dim;
    jc["basis"] = c.basis;
    j["components"].push_back(std::move(jc));
  }
  j["classification"] = row_json(r.classification);
  if (r.table_row) j["table_row"] = *r.table_row;
  j["notes"] = r.notes;
  return j.dump(2);
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << "model: " << r.input << "\n";
  os << "weights: (" << to_string(r.lam.mu1) << ", " << to_string(r.lam.mu2)
     << ")\n";
  os << "levi rank at origin: " << r.levi_rank_origin << "\n";
  os << "holomorphically nondegenerate: " << (r.holo_nondegenerate ? "yes" : "no")
     << "\n";
  const auto& c = r.classification;
  os << "dim g = " << c.dim_g << "  (gt=" << c.dim_gt << " g0=" << c.dim_g0
     << " [re=" << c.dim_g0_re << " im=" << c.dim_g0_im
     << " nil=" << c.dim_g0_nil << "] gc=" << c.dim_gc << " gn=" << c.dim_gn
     << " g1=" << c.dim_g1 << ")\n";
  os << "table row: " << (r.table_row ? *r.table_row : std::string("none"))
     << "\n";
  for (const auto& comp : r.components) {
    os << "weight " << to_string(comp.weight) << ": dim " << comp.dim;
    if (comp.rigid_dim >= 0) os << " (rigid " << comp.rigid_dim << ")";
    os << "\n";
    for (const auto& b : comp.basis) os << "  " << b << "\n";
  }
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

}  // namespace crsym
