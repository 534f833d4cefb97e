#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "crsym/chains.hpp"
#include "crsym/parse.hpp"
#include "crsym/report.hpp"

using namespace crsym;

namespace {

std::map<std::string, long> parse_kv(const std::string& text) {
  std::map<std::string, long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw InputError("expected key=value in '" + item + "'");
    out[item.substr(0, eq)] = std::stol(item.substr(eq + 1));
  }
  return out;
}

int run_analyze(const std::string& poly, bool json, bool strip, long max_den) {
  MixedPoly P = parse_polynomial(poly);
  if (!P.is_real()) throw NonRealModel("model polynomial must be real-valued");
  if (strip) P = P - P.pluriharmonic_part();
  Report r = analyze_model(P);
  if (max_den > 0) {
    auto brute = infer_weights_bruteforce(P, max_den);
    if (!brute || !(*brute == r.lam))
      throw InternalInconsistency(
          "brute-force weight search disagrees with the inferred multitype");
    r.notes.push_back("weights cross-checked by brute force up to denominator " +
                      std::to_string(max_den));
  }
  std::cout << (json ? to_json(r) : to_text(r));
  if (json) std::cout << "\n";
  return 0;
}

int run_catalog(const std::string& row, const std::string& params, bool verify) {
  auto id = row_from_name(row);
  if (!id) throw InputError("unknown catalog row '" + row + "'");
  ModelSpec spec{*id, parse_kv(params), std::nullopt};
  MixedPoly P = build_model(spec);
  std::cout << P.str() << "\n";
  if (!verify) return 0;
  SweepReport rep = sweep_table({spec});
  const SweepLine& line = rep.lines.front();
  std::cout << (line.pass ? "PASS" : "FAIL") << " " << line.row << " ("
            << line.params << ")"
            << " dim g = " << line.actual.dim_g
            << " expected " << line.expected.dim_g;
  if (!line.note.empty()) std::cout << " [" << line.note << "]";
  std::cout << "\n";
  if (!line.pass)
    throw InternalInconsistency("catalog instance does not match its profile");
  return 0;
}

// Grid file: one instance set per line, "ROW key=a..b key=c ...".
std::vector<ModelSpec> parse_grid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open grid file: " + path);
  std::vector<ModelSpec> specs;
  std::string line;
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string row;
    if (!(ss >> row) || row[0] == '#') continue;
    auto id = row_from_name(row);
    if (!id) throw InputError("unknown catalog row '" + row + "'");
    std::vector<ModelSpec> expanded{ModelSpec{*id, {}, std::nullopt}};
    std::string kv;
    while (ss >> kv) {
      auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw InputError("expected key=value[..value] in '" + kv + "'");
      std::string key = kv.substr(0, eq);
      std::string val = kv.substr(eq + 1);
      long lo, hi;
      auto dots = val.find("..");
      if (dots == std::string::npos) {
        lo = hi = std::stol(val);
      } else {
        lo = std::stol(val.substr(0, dots));
        hi = std::stol(val.substr(dots + 2));
      }
      if (hi < lo) throw InputError("empty range in '" + kv + "'");
      std::vector<ModelSpec> next;
      for (const ModelSpec& s : expanded)
        for (long v = lo; v <= hi; ++v) {
          ModelSpec t = s;
          t.params[key] = v;
          next.push_back(std::move(t));
        }
      expanded = std::move(next);
    }
    for (auto& s : expanded) specs.push_back(std::move(s));
  }
  return specs;
}

int run_table_check(const std::string& grid) {
  std::vector<ModelSpec> specs =
      grid.empty() ? default_specs() : parse_grid(grid);
  SweepReport rep = sweep_table(specs);
  for (const SweepLine& line : rep.lines) {
    nlohmann::json j;
    j["row"] = line.row;
    j["params"] = line.params;
    j["pass"] = line.pass;
    j["dim_g"] = line.actual.dim_g;
    j["expected_dim_g"] = line.expected.dim_g;
    if (!line.note.empty()) j["note"] = line.note;
    std::cout << j.dump() << "\n";
  }
  if (!rep.all_pass)
    throw InternalInconsistency("table sweep found a profile mismatch");
  return 0;
}

ChainPair read_chains(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open chains file: " + path);
  nlohmann::json j;
  in >> j;
  auto polys = [](const nlohmann::json& arr) {
    std::vector<MixedPoly> out;
    for (const auto& s : arr) out.push_back(parse_polynomial(s));
    return out;
  };
  ChainPair pair;
  if (j.is_object()) {
    pair.U = polys(j.at("U"));
    pair.V = polys(j.at("V"));
  } else if (j.is_array() && j.size() == 2) {
    pair.U = polys(j[0]);
    pair.V = polys(j[1]);
  } else {
    throw InputError("chains file must be {\"U\": [...], \"V\": [...]} or "
                     "a two-element array of string arrays");
  }
  if (pair.U.size() != pair.V.size() || pair.U.empty())
    throw InputError("chains must be nonempty and of equal length");
  if ((int)pair.U.size() > kMaxChainLength)
    throw InputError("chain length exceeds the cap");
  return pair;
}

int run_chains_verify(const std::string& poly, const std::string& field,
                      const std::string& chains) {
  HoloField X = parse_field(field);
  ChainPair pair = read_chains(chains);
  XPairCheck check = verify_xpair(X, pair);
  if (!check.ok) {
    std::cout << "not an X-pair: " << check.message << "\n";
    return 1;
  }
  pair.A = check.A;
  pair.B = check.B;
  std::cout << "X-pair of length " << pair.m() + 1 << ", constants:";
  for (const auto& a : check.A) std::cout << " " << to_string(a);
  std::cout << "\n";
  MixedPoly sum = chain_sum(pair);
  std::cout << "chain sum: " << sum.str() << "\n";
  if (!poly.empty()) {
    MixedPoly P = parse_polynomial(poly);
    std::cout << "matches --poly: " << (P == sum ? "yes" : "no") << "\n";
    if (tangency_residual(X, P).is_zero())
      std::cout << "X is a symmetry of --poly\n";
  }
  return 0;
}

int run_chains_build(const std::string& params) {
  auto kv = parse_kv(params);
  PurePairParams pp;
  auto take = [&](const char* k, int& slot) {
    if (auto it = kv.find(k); it != kv.end()) {
      slot = (int)it->second;
      kv.erase(it);
    }
  };
  take("p", pp.p);
  take("q", pp.q);
  take("alpha", pp.alpha);
  take("beta", pp.beta);
  take("K", pp.K);
  take("N", pp.N);
  take("m", pp.m);
  if (auto it = kv.find("tau"); it != kv.end()) {
    pp.tau = GaussRat(Rat(it->second));
    kv.erase(it);
  }
  if (!kv.empty())
    throw InputError("unknown chain parameter '" + kv.begin()->first + "'");
  ChainPair pair = pure_pair(pp);
  nlohmann::json j;
  for (const auto& u : pair.U) j["U"].push_back(u.str());
  for (const auto& v : pair.V) j["V"].push_back(v.str());
  std::cout << j.dump(2) << "\n";
  MixedPoly sum = chain_sum(pair);
  if (sum != pure_chain_sum_closed_form(pp))
    throw InternalInconsistency("chain sum disagrees with the closed form");
  std::cout << "chain sum: " << sum.str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symmetry algebras of polynomial model hypersurfaces"};
  app.require_subcommand(1);

  std::string poly, field, chains_file, row, params, grid;
  bool json = false, strip = false, verify = false;
  long max_den = 0;

  auto* analyze = app.add_subcommand("analyze", "Analyze a model polynomial");
  analyze->add_option("--poly", poly, "Model polynomial P(z1,z2,Z1,Z2)")
      ->required();
  analyze->add_flag("--json", json, "Emit the JSON report");
  analyze->add_flag("--strip-pluriharmonic", strip,
                    "Drop pluriharmonic terms before analysis");
  analyze->add_option("--max-denominator", max_den,
                      "Cross-check weights by brute force up to this denominator");

  auto* catalog = app.add_subcommand("catalog", "Build a catalog model");
  catalog->add_option("--row", row, "Row id (T1..T9, GN10, GN9, QUADRIC_M, "
                                    "EX_S5, EX_TH2)")->required();
  catalog->add_option("--params", params, "Comma-separated key=value");
  catalog->add_flag("--verify", verify, "Compare against the expected profile");

  auto* table = app.add_subcommand("table-check", "Run the table sweep");
  table->add_option("--grid", grid, "Grid file (ROW key=a..b ... per line)");

  auto* chains = app.add_subcommand("chains", "X-pairs of chains");
  chains->require_subcommand(1);
  auto* cverify = chains->add_subcommand("verify", "Verify an X-pair");
  cverify->add_option("--poly", poly, "Optional model to compare the sum with");
  cverify->add_option("--field", field, "The field X")->required();
  cverify->add_option("--chains", chains_file, "Chains file")->required();
  auto* cbuild = chains->add_subcommand("build", "Build a pure X-pair");
  cbuild->add_option("--params", params,
                     "p=..,q=..,alpha=..,beta=..,K=..,N=..,m=..,tau=..")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(poly, json, strip, max_den);
    if (*catalog) return run_catalog(row, params, verify);
    if (*table) return run_table_check(grid);
    if (*cverify) return run_chains_verify(poly, field, chains_file);
    if (*cbuild) return run_chains_build(params);
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
