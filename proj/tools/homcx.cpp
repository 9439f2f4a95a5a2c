#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "homcx/chromatic.hpp"
#include "homcx/collapse.hpp"
#include "homcx/pi1.hpp"
#include "homcx/projectivity.hpp"

using namespace homcx;
using nlohmann::json;

namespace {

// Complexes come from JSON files or std:<name>:<param> shorthand.
SimplicialComplex load_complex(const std::string& path) {
  if (path.rfind("std:", 0) == 0) {
    const auto colon = path.find(':', 4);
    if (colon == std::string::npos)
      throw std::invalid_argument("expected std:<name>:<param>");
    const std::string name = path.substr(4, colon - 4);
    const int param = std::stoi(path.substr(colon + 1));
    if (name == "simplex") return simplex_complex(param);
    if (name == "cycle") return cycle_complex(param);
    if (name == "complete") return complete_graph(param);
    if (name == "path") return path_complex(param);
    if (name == "boundary") return boundary_simplex(param);
    throw std::invalid_argument("unknown standard complex: " + name);
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j = json::parse(in);
  return SimplicialComplex::from_json(j);
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return json::parse(in);
}

std::vector<int> parse_ints(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

std::string format_group(const HomologyGroups::Group& g) {
  std::string s;
  if (g.betti > 0) {
    s = "Z";
    if (g.betti > 1) s += "^" + std::to_string(g.betti);
  }
  for (const auto& t : g.torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + t.str();
  }
  return s.empty() ? "0" : s;
}

json homology_json(const HomologyGroups& hg) {
  json j;
  j["reduced"] = hg.reduced;
  j["empty"] = hg.empty_complex;
  j["groups"] = json::array();
  for (const auto& g : hg.dims) {
    json e;
    e["betti"] = g.betti;
    e["torsion"] = json::array();
    for (const auto& t : g.torsion) e["torsion"].push_back(t.str());
    j["groups"].push_back(e);
  }
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"Hom-complex toolbox: build, transport, collapse, bound"};
  app.require_subcommand(1);

  long long cap = kDefaultCellCap;
  long long budget = 1'000'000;
  unsigned long long seed = 0;
  bool as_json = false;
  bool pi1 = false;
  app.add_option("--cap", cap, "cell count cap for Hom construction");
  app.add_option("--budget", budget, "node budget for backtracking searches");
  app.add_option("--seed", seed, "seed for randomized choices");
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_flag("--pi1", pi1, "attempt fundamental-group simplification");

  std::string file_a, file_b, sigma_csv, inv_csv, path_arg, check_file;
  int arg_r = 2, arg_n = 4;

  auto* c_build = app.add_subcommand("build-hom", "enumerate Hom(K,L)");
  c_build->add_option("K", file_a)->required();
  c_build->add_option("L", file_b)->required();

  auto* c_hom = app.add_subcommand("homology", "homology of a complex file");
  c_hom->add_option("file", file_a)->required();

  auto* c_hol = app.add_subcommand("holonomy", "holonomy group at a simplex");
  c_hol->add_option("file", file_a)->required();
  c_hol->add_option("--sigma", sigma_csv, "base simplex, comma-separated")->required();

  auto* c_tr = app.add_subcommand("transport", "transport along a simplex path");
  c_tr->add_option("L", file_a)->required();
  c_tr->add_option("--path", path_arg, "colon-separated simplices, e.g. 0,1:1,2")->required();

  auto* c_col = app.add_subcommand("collapse", "tree-like test and collapse check");
  c_col->add_option("K", file_a)->required();
  c_col->add_option("--check", check_file, "verify Hom equivalence against this L");

  auto* c_chr = app.add_subcommand("chromatic", "exact chromatic number");
  c_chr->add_option("K", file_a)->required();

  auto* c_phi = app.add_subcommand("phi-check", "certify a Phi_d structure");
  c_phi->add_option("Gamma", file_a)->required();
  c_phi->add_option("--involution", inv_csv, "vertex permutation, comma-separated")->required();
  c_phi->add_option("--sigma", sigma_csv)->required();

  auto* c_lov = app.add_subcommand("lovasz-bound", "connectivity bound report");
  c_lov->add_option("Gamma", file_a)->required();
  c_lov->add_option("K", file_b)->required();
  c_lov->add_option("--involution", inv_csv)->required();
  c_lov->add_option("--sigma", sigma_csv)->required();

  auto* c_ti = app.add_subcommand("two-iota", "odd-cycle restriction check");
  c_ti->add_option("--r", arg_r);
  c_ti->add_option("--n", arg_n);

  for (CLI::App* sc : {c_build, c_hom, c_hol, c_tr, c_col, c_chr, c_phi,
                       c_lov, c_ti})
    sc->fallthrough();  // accept the global flags after the verb

  CLI11_PARSE(app, argc, argv);
  (void)seed;  // accepted for interface stability; nothing randomized here

  if (c_build->parsed()) {
    HomComplex h = build_hom(load_complex(file_a), load_complex(file_b), cap);
    if (as_json) {
      std::cout << h.to_json().dump() << "\n";
    } else {
      std::cout << "cells: " << h.num_cells() << " (top dim " << h.dim() << ")\n";
      for (int d = 0; d <= h.dim(); ++d)
        std::cout << "dim" << d << ": " << h.cells_in_dim(d) << "\n";
    }
    return 0;
  }

  if (c_hom->parsed()) {
    json j = file_a.rfind("std:", 0) == 0 ? load_complex(file_a).to_json()
                                          : load_json(file_a);
    HomologyGroups hg;
    if (j.contains("cells")) {
      HomComplex h = HomComplex::from_json(j);
      hg = homology(chains_of(h), false);
    } else {
      hg = homology(simplicial_chains(SimplicialComplex::from_json(j)), false);
    }
    if (as_json) {
      std::cout << homology_json(hg).dump() << "\n";
    } else {
      std::string line;
      for (std::size_t d = 0; d < hg.dims.size(); ++d) {
        if (!line.empty()) line += "; ";
        line += "dim" + std::to_string(d) + ": " + format_group(hg.dims[d]);
      }
      std::cout << (hg.empty_complex ? "(empty complex)" : line) << "\n";
    }
    return 0;
  }

  if (c_hol->parsed()) {
    SimplicialComplex k = load_complex(file_a);
    HolonomyGroup h = holonomy_group(k, parse_ints(sigma_csv));
    if (as_json) {
      json j;
      j["base"] = h.base;
      j["order"] = h.order;
      j["label"] = h.label;
      j["component_only"] = h.component_only;
      j["generators"] = json::array();
      for (const auto& g : h.generators) {
        json e;
        e["perm"] = json::object();
        for (std::size_t i = 0; i < g.source.size(); ++i)
          e["perm"][std::to_string(g.source[i])] = g.image[i];
        e["path"] = g.path;
        j["generators"].push_back(e);
      }
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "order " << h.order << ", label " << h.label
                << (h.component_only ? " (component only)" : "") << "\n";
    }
    return 0;
  }

  if (c_tr->parsed()) {
    SimplicialComplex l = load_complex(file_a);
    std::vector<Simplex> path;
    std::stringstream ss(path_arg);
    std::string tok;
    while (std::getline(ss, tok, ':')) {
      Simplex s = parse_ints(tok);
      std::sort(s.begin(), s.end());
      path.push_back(std::move(s));
    }
    if (path.empty()) throw std::invalid_argument("empty path");
    Projectivity p = projectivity_along(path);
    HomComplex fib_t = deleted_product(l, static_cast<int>(p.target.size()), cap);
    HomComplex fib_s = deleted_product(l, static_cast<int>(p.source.size()), cap);
    CellularMap m = transport_map(fib_t, p, fib_s);
    if (as_json) {
      json j;
      j["source_simplex"] = p.source;
      j["target_simplex"] = p.target;
      j["bijection"] = p.image;
      j["cells"] = json::array();
      for (int i = 0; i < fib_t.num_cells(); ++i)
        j["cells"].push_back({i, m.image[i], m.coeff[i]});
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "projectivity ";
      for (std::size_t i = 0; i < p.source.size(); ++i)
        std::cout << p.source[i] << "->" << p.image[i] << " ";
      std::cout << "on " << fib_t.num_cells() << " cells\n";
    }
    return 0;
  }

  if (c_col->parsed()) {
    SimplicialComplex k = load_complex(file_a);
    TreeLikeSearch t = is_tree_like(k, budget);
    if (t.status == SearchStatus::budget_exhausted) {
      std::cout << "budget exhausted after " << t.nodes << " nodes\n";
      return 3;
    }
    if (t.status == SearchStatus::impossible) {
      std::cout << "not tree-like (exhaustive search)\n";
      return 2;
    }
    json steps = json::array();
    for (const auto& s : t.sequence.steps) {
      json e;
      e["removed"] = s.removed;
      e["retained"] = s.retained;
      e["witness"] = s.witness;
      e["free_vertex"] = s.free_vertex;
      e["apex"] = s.apex;
      steps.push_back(e);
    }
    if (!check_file.empty()) {
      SimplicialComplex l = load_complex(check_file);
      if (t.sequence.steps.empty())
        throw HypothesisError("nothing to collapse: single facet");
      CollapseReport rep =
          verify_collapse_equivalence(k, t.sequence.steps[0], l, cap);
      if (as_json) {
        json j;
        j["steps"] = steps;
        j["step_valid"] = rep.step_valid;
        j["round_trip_identity"] = rep.gamma_rho_identity;
        j["homology_inverse"] = rep.homology_inverse;
        j["h_before"] = homology_json(rep.h_before);
        j["h_after"] = homology_json(rep.h_after);
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "tree-like, " << t.sequence.steps.size() << " steps\n";
        const std::size_t nd =
            std::max(rep.h_before.dims.size(), rep.h_after.dims.size());
        for (std::size_t d = 0; d < nd; ++d)
          std::cout << "dim" << d << ": "
                    << format_group(rep.h_before.at(static_cast<int>(d)))
                    << " vs "
                    << format_group(rep.h_after.at(static_cast<int>(d))) << "\n";
        std::cout << (rep.gamma_rho_identity && rep.homology_inverse ? "PASS"
                                                                     : "FAIL")
                  << "\n";
      }
      if (!(rep.step_valid && rep.gamma_rho_identity && rep.homology_inverse))
        return 4;
    } else if (as_json) {
      json j;
      j["tree_like"] = true;
      j["steps"] = steps;
      j["final_facet"] = t.sequence.final_facet;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "tree-like, " << t.sequence.steps.size() << " steps\n";
    }
    return 0;
  }

  if (c_chr->parsed()) {
    SimplicialComplex k = load_complex(file_a);
    auto [m, col] = chromatic_number(k);
    if (as_json) {
      json j;
      j["chi"] = m;
      j["colors"] = col.colors;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "chi = " << m << "\n";
    }
    return 0;
  }

  if (c_phi->parsed() || c_lov->parsed()) {
    SimplicialComplex gamma = load_complex(file_a);
    VertexMap omega{gamma, gamma, parse_ints(inv_csv)};
    Simplex sigma = parse_ints(sigma_csv);
    std::sort(sigma.begin(), sigma.end());
    PhiResult res = phi_d_certify(gamma, omega, sigma);
    if (res.failure != PhiFailure::none) {
      std::cout << "FAIL: " << to_string(res.failure) << "\n";
      return 2;
    }
    if (c_phi->parsed()) {
      if (as_json) {
        json j;
        j["d"] = res.certificate->d;
        j["sigma"] = res.certificate->sigma;
        j["tau"] = res.certificate->tau_image;
        j["path"] = res.certificate->membership_path.path;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "certified Phi_" << res.certificate->d << " structure\n";
      }
      return 0;
    }
    SimplicialComplex k = load_complex(file_b);
    BoundReport rep = lovasz_bound_report(*res.certificate, k, cap, pi1);
    json j;
    j["hom_empty"] = rep.hom_empty;
    j["connectivity_k"] = rep.connectivity_k;
    j["certificate_level"] = rep.certificate_level;
    j["parity_note"] = rep.parity_note;
    j["bound_claimed"] = rep.bound_claimed;
    j["claimed_bound"] = rep.claimed_bound;
    j["chromatic"] = rep.chromatic;
    j["free_involution"] = rep.free_involution;
    if (as_json) {
      std::cout << j.dump() << "\n";
    } else if (rep.bound_claimed) {
      std::cout << "chi >= " << rep.claimed_bound << " (" << rep.parity_note
                << ", " << rep.certificate_level << "); chi = " << rep.chromatic
                << "\n";
    } else {
      std::cout << "no bound: " << rep.parity_note << "; chi = " << rep.chromatic
                << "\n";
    }
    return 0;
  }

  if (c_ti->parsed()) {
    TwoIotaReport rep = two_iota_star_check(arg_r, arg_n, cap);
    if (as_json) {
      json j;
      j["hom_empty"] = rep.hom_empty;
      j["parity_applies"] = rep.parity_applies;
      j["beta_commutes"] = rep.beta_commutes;
      j["iota_zero_on_top"] = rep.iota_zero_on_top;
      j["beta_degree"] = rep.beta_degree_on_sphere.str();
      std::cout << j.dump() << "\n";
      return rep.beta_commutes && (!rep.parity_applies || rep.iota_zero_on_top)
                 ? 0
                 : 4;
    }
    if (rep.hom_empty) {
      std::cout << "Hom empty: vacuous pass\n";
      return 0;
    }
    std::cout << "beta absorbs into iota on homology: "
              << (rep.beta_commutes ? "PASS" : "FAIL") << "\n";
    if (rep.parity_applies)
      std::cout << "iota_* = 0 on H" << arg_n - 2 << ": "
                << (rep.iota_zero_on_top ? "PASS" : "FAIL") << "\n";
    else
      std::cout << "n odd: no vanishing claimed\n";
    std::cout << "flip degree on H" << arg_n - 2 << ": "
              << rep.beta_degree_on_sphere.str() << "\n";
    return rep.beta_commutes && (!rep.parity_applies || rep.iota_zero_on_top)
               ? 0
               : 4;
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CapExceeded& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis failure: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 4;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
