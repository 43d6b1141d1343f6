#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mgx/elementary.hpp"
#include "mgx/error.hpp"
#include "mgx/generate.hpp"
#include "mgx/hermitian.hpp"
#include "mgx/io.hpp"
#include "mgx/matching.hpp"
#include "mgx/structure.hpp"
#include "mgx/suites.hpp"

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

json big_json(const mgx::BigInt& x) {
  if (x.fits_slong_p()) {
    return x.get_si();
  }
  return x.get_str();
}

json poly_json(const mgx::IntPolynomial& p) {
  json arr = json::array();
  for (const auto& c : p.coefficients()) {
    arr.push_back(big_json(c));
  }
  return arr;
}

json inertia_json(const mgx::Inertia& in) {
  return {{"p_plus", in.p_plus}, {"n_minus", in.n_minus}, {"nullity", in.nullity}};
}

int cmd_charpoly(const std::string& file, const std::string& oracle, bool as_json) {
  const mgx::MixedGraph g = mgx::read_graph_file(file);
  const mgx::IntPolynomial p = mgx::charpoly(g);
  json out{{"n", g.vertex_count()}, {"coefficients", poly_json(p)}};
  int code = kExitPass;
  if (oracle == "enumeration") {
    const mgx::IntPolynomial e = mgx::charpoly_by_enumeration(g);
    out["oracle"] = poly_json(e);
    out["agree"] = p == e;
    code = p == e ? kExitPass : kExitFail;
  }
  if (as_json) {
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "charpoly: " << p.to_string() << '\n';
    if (out.contains("oracle")) {
      std::cout << "enumeration: " << out["oracle"].dump() << (code == kExitPass ? " (agree)" : " (DISAGREE)") << '\n';
    }
  }
  return code;
}

int cmd_inertia(const std::string& file, const std::string& method, bool as_json) {
  const mgx::MixedGraph g = mgx::read_graph_file(file);
  json out{{"n", g.vertex_count()}};
  int code = kExitPass;
  if (method == "descartes" || method == "both") {
    out["descartes"] = inertia_json(mgx::inertia(g, mgx::InertiaMethod::Descartes));
  }
  if (method == "congruence" || method == "both") {
    out["congruence"] = inertia_json(mgx::inertia(g, mgx::InertiaMethod::Congruence));
  }
  if (method == "both") {
    out["agree"] = out["descartes"] == out["congruence"];
    code = out["agree"].get<bool>() ? kExitPass : kExitFail;
  }
  if (as_json) {
    std::cout << out.dump() << '\n';
    return code;
  }
  for (const char* key : {"descartes", "congruence"}) {
    if (out.contains(key)) {
      const auto& in = out[key];
      std::cout << key << ": p+=" << in["p_plus"] << " n-=" << in["n_minus"] << " nullity=" << in["nullity"] << '\n';
    }
  }
  return code;
}

json classify_json(const mgx::MixedGraph& g) {
  const mgx::Inertia in = mgx::inertia(g);
  const std::size_t m = mgx::matching_number(g);
  const std::size_t c = mgx::cycle_space_dim(g);
  const mgx::InertiaBounds b = mgx::inertia_bounds(g);
  json out{{"n", g.vertex_count()},
           {"edges", g.edge_count()},
           {"connected", mgx::is_connected(g)},
           {"m", m},
           {"c", c},
           {"inertia", inertia_json(in)},
           {"bounds", {{"lower", b.lower}, {"upper", b.upper}}}};
  const auto p = static_cast<std::int64_t>(in.p_plus);
  const auto q = static_cast<std::int64_t>(in.n_minus);
  out["attains"] = {{"p_plus_max", p == b.upper}, {"n_minus_max", q == b.upper},
                    {"p_plus_min", p == b.lower}, {"n_minus_min", q == b.lower}};

  if (g.vertex_count() >= 3 && g.edge_count() == g.vertex_count() && mgx::is_connected(g)) {
    const mgx::UnicyclicStructure s = mgx::analyze_unicyclic(g);
    const std::size_t sigma = mgx::canonical_sigma(g, s.cycle);
    const mgx::UnicyclicClass cls = mgx::classify_unicyclic(s, sigma);
    const mgx::SignPrediction sp = mgx::predict_coefficient_signs(s, sigma);
    out["unicyclic"] = {{"case", std::string(mgx::to_string(cls.tag))},
                        {"predicted", inertia_json(cls.predicted)},
                        {"q", cls.q},
                        {"sigma", sigma},
                        {"m_without_cycle", cls.m_without_cycle},
                        {"no_max_matching_uses_incident_edge", cls.no_max_uses_incident},
                        {"k", sp.k},
                        {"even_signs", sp.even_signs},
                        {"odd_leading_sign", sp.odd_leading_sign}};
  }
  if (mgx::is_connected(g)) {
    json ch = json::object();
    for (const auto kind :
         {mgx::Characterization::PositiveMax, mgx::Characterization::NegativeMax, mgx::Characterization::Min}) {
      const mgx::CharacterizationReport r = mgx::characterize(g, kind);
      json entry{{"predicate", r.predicate}, {"disjoint_cycles", r.disjoint_cycles}, {"cycle_condition", r.cycle_condition}};
      if (r.tree_matching_equal) {
        entry["tree_matching_equal"] = *r.tree_matching_equal;
        entry["max_matching_avoids_f"] = *r.max_avoids_f;
        entry["no_max_matching_uses_f"] = *r.no_max_uses_f;
      }
      ch[std::string(mgx::to_string(kind))] = entry;
    }
    out["characterizations"] = ch;
    try {
      const mgx::CactusDecomposition d = mgx::cactus_decomposition(g);
      json f = json::array();
      for (const auto& [a, bb] : d.f_edges) {
        f.push_back({a, bb});
      }
      out["cactus"] = {{"cycles", d.cycles},
                       {"m_t_g", mgx::matching_number(d.t_g)},
                       {"m_bracket_t_g", mgx::matching_number(d.bracket_t_g.graph)},
                       {"f_edges", f}};
    } catch (const mgx::PreconditionError& e) {
      out["cactus"] = {{"error", e.what()}};
    }
  }
  return out;
}

int cmd_classify(const std::string& file, bool as_json) {
  const mgx::MixedGraph g = mgx::read_graph_file(file);
  const json out = classify_json(g);
  if (as_json) {
    std::cout << out.dump() << '\n';
    return kExitPass;
  }
  const auto& in = out["inertia"];
  std::cout << "n=" << out["n"] << " m=" << out["m"] << " c=" << out["c"] << '\n';
  std::cout << "inertia: p+=" << in["p_plus"] << " n-=" << in["n_minus"] << " nullity=" << in["nullity"] << '\n';
  std::cout << "bounds: [" << out["bounds"]["lower"] << ", " << out["bounds"]["upper"] << "]\n";
  for (const auto& [k, v] : out["attains"].items()) {
    if (v.get<bool>()) {
      std::cout << "attains " << k << '\n';
    }
  }
  if (out.contains("unicyclic")) {
    const auto& u = out["unicyclic"];
    std::cout << "unicyclic: " << u["case"].get<std::string>() << " q=" << u["q"] << " sigma=" << u["sigma"]
              << " predicted=(" << u["predicted"]["p_plus"] << "," << u["predicted"]["n_minus"] << ")\n";
  }
  if (out.contains("characterizations")) {
    for (const auto& [k, v] : out["characterizations"].items()) {
      std::cout << k << ": " << (v["predicate"].get<bool>() ? "true" : "false") << '\n';
    }
  }
  if (out.contains("cactus") && out["cactus"].contains("error")) {
    std::cout << "cactus: " << out["cactus"]["error"].get<std::string>() << '\n';
  } else if (out.contains("cactus")) {
    std::cout << "cactus: m(T_G)=" << out["cactus"]["m_t_g"] << " m([T_G])=" << out["cactus"]["m_bracket_t_g"]
              << " F=" << out["cactus"]["f_edges"].dump() << '\n';
  }
  return kExitPass;
}

int cmd_gen(const std::string& family, const std::vector<std::size_t>& args, std::uint64_t seed, bool oriented,
            const std::string& output) {
  mgx::GeneratorSpec spec{family, args, seed};
  std::vector<mgx::MixedGraph> graphs = mgx::generate(spec);
  if (oriented) {
    mgx::Rng rng(mgx::derive_seed(seed, 0));
    for (auto& g : graphs) {
      g = mgx::random_orientation(g, rng);
    }
  }
  std::string text;
  for (const auto& g : graphs) {
    text += mgx::format_mg(g);
  }
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(output);
    if (!f) {
      throw std::runtime_error("cannot write " + output);
    }
    f << text;
  }
  return kExitPass;
}

int cmd_verify(const std::string& suite, const mgx::SuiteCaps& caps, bool as_json) {
  const mgx::SuiteResult r = mgx::run_suite(suite, caps);
  if (as_json) {
    std::cout << r.to_json().dump(2) << '\n';
  } else {
    std::cout << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " checked=" << r.checked
              << " failures=" << r.failures.size() + r.failures_dropped << " millis=" << r.millis << '\n';
    for (const auto& note : r.notes) {
      std::cout << "  note: " << note << '\n';
    }
    for (const auto& f : r.failures) {
      std::cout << "  graph " << f.graph.dump() << "\n    expected: " << f.expected << "\n    actual:   " << f.actual
                << '\n';
    }
  }
  return r.passed() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inertia indices of mixed graphs via Hermitian adjacency matrices"};
  app.require_subcommand(1);

  std::string file;
  bool as_json = false;

  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial coefficients a_0..a_n");
  std::string oracle;
  charpoly->add_option("FILE", file, "graph file (.mg or JSON)")->required();
  charpoly->add_option("--oracle", oracle, "cross-check with another method")->check(CLI::IsMember({"enumeration"}));
  charpoly->add_flag("--json", as_json);

  auto* inertia = app.add_subcommand("inertia", "Positive, negative and zero eigenvalue counts");
  std::string method = "descartes";
  inertia->add_option("FILE", file, "graph file (.mg or JSON)")->required();
  inertia->add_option("--method", method)->check(CLI::IsMember({"descartes", "congruence", "both"}));
  inertia->add_flag("--json", as_json);

  auto* classify = app.add_subcommand("classify", "Unicyclic class, bounds and extremal predicates");
  classify->add_option("FILE", file, "graph file (.mg or JSON)")->required();
  classify->add_flag("--json", as_json);

  auto* gen = app.add_subcommand("gen", "Generate graphs in .mg format");
  std::string family;
  std::vector<std::size_t> gen_args;
  std::uint64_t seed = 1;
  std::string output;
  bool oriented = false;
  gen->add_option("FAMILY", family)
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "star", "random_tree", "unicyclic_all", "random_connected"}));
  gen->add_option("ARGS", gen_args, "size parameters");
  gen->add_option("--seed", seed);
  gen->add_option("-o,--output", output);
  gen->add_flag("--oriented", oriented, "orient every edge at random");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  mgx::SuiteCaps caps;
  std::size_t max_n = 0;
  std::size_t samples = 0;
  verify->add_option("SUITE", suite)->required()->check(CLI::IsMember(mgx::suite_names()));
  auto* max_n_opt = verify->add_option("--max-n", max_n);
  auto* samples_opt = verify->add_option("--samples", samples);
  verify->add_option("--seed", caps.seed);
  verify->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*charpoly) {
      return cmd_charpoly(file, oracle, as_json);
    }
    if (*inertia) {
      return cmd_inertia(file, method, as_json);
    }
    if (*classify) {
      return cmd_classify(file, as_json);
    }
    if (*gen) {
      return cmd_gen(family, gen_args, seed, oriented, output);
    }
    if (*verify) {
      if (max_n_opt->count() > 0) {
        caps.max_n = max_n;
      }
      if (samples_opt->count() > 0) {
        caps.samples = samples;
      }
      return cmd_verify(suite, caps, as_json);
    }
  } catch (const mgx::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const mgx::GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const mgx::CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
