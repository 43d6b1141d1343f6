#include "mgx/suites.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "mgx/elementary.hpp"
#include "mgx/error.hpp"
#include "mgx/generate.hpp"
#include "mgx/hermitian.hpp"
#include "mgx/io.hpp"
#include "mgx/matching.hpp"
#include "mgx/structure.hpp"

namespace mgx {

nlohmann::json SuiteResult::to_json(bool with_timing) const {
  nlohmann::json j;
  j["suite"] = suite;
  j["checked"] = checked;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : failures) {
    j["failures"].push_back({{"graph", f.graph}, {"expected", f.expected}, {"actual", f.actual}});
  }
  if (with_timing) {
    j["millis"] = millis;
  }
  std::vector<std::string> all_notes = notes;
  if (failures_dropped > 0) {
    all_notes.push_back(std::to_string(failures_dropped) + " further failures not stored");
  }
  if (!all_notes.empty()) {
    j["notes"] = all_notes;
  }
  return j;
}

namespace {

class Recorder {
 public:
  explicit Recorder(SuiteResult& r) : r_(r) {}

  void checked(std::size_t k = 1) { r_.checked += k; }

  void fail(const MixedGraph& g, std::string expected, std::string actual) {
    if (r_.failures.size() >= kStoredFailureLimit) {
      ++r_.failures_dropped;
      return;
    }
    r_.failures.push_back({mgx::to_json(g), std::move(expected), std::move(actual)});
  }

  void note(std::string text) { r_.notes.push_back(std::move(text)); }

 private:
  SuiteResult& r_;
};

std::string pair_str(std::int64_t a, std::int64_t b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::string inertia_pair(const Inertia& in) { return pair_str(static_cast<std::int64_t>(in.p_plus), static_cast<std::int64_t>(in.n_minus)); }

void check_bounds(Recorder& rec, const MixedGraph& g, const Inertia& in, std::size_t m, std::size_t c) {
  const auto lo = static_cast<std::int64_t>(m) - static_cast<std::int64_t>(c);
  const auto hi = static_cast<std::int64_t>(m + c);
  const auto p = static_cast<std::int64_t>(in.p_plus);
  const auto q = static_cast<std::int64_t>(in.n_minus);
  if (p < lo || p > hi || q < lo || q > hi) {
    rec.fail(g, "p+ and n- within [m-c, m+c] = " + pair_str(lo, hi), inertia_pair(in));
  }
}

void check_bounds(Recorder& rec, const MixedGraph& g, const Inertia& in) {
  check_bounds(rec, g, in, matching_number(g), cycle_space_dim(g));
}

// Cycle edges in traversal order with the traversal's direction, so sigma can
// be read off any orientation of the same underlying graph.
struct CycleWalk {
  std::vector<std::size_t> edges;
  std::vector<VertexId> from;

  CycleWalk(const MixedGraph& g, const std::vector<VertexId>& cycle) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      edges.push_back(*g.find_edge(cycle[i], cycle[(i + 1) % cycle.size()]));
      from.push_back(cycle[i]);
    }
  }

  [[nodiscard]] std::size_t sigma(const MixedGraph& g) const {
    std::size_t f = 0;
    std::size_t b = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Edge& e = g.edge(edges[i]);
      if (e.is_arc()) {
        (e.tail() == from[i] ? f : b) += 1;
      }
    }
    return f > b ? f - b : b - f;
  }
};

std::size_t cap(const std::optional<std::size_t>& v, std::size_t fallback) { return v.value_or(fallback); }

// ---- suites ---------------------------------------------------------------

void suite_cycles(const SuiteCaps& caps, Recorder& rec) {
  const std::size_t max_n = cap(caps.max_n, 10);
  for (std::size_t n = 3; n <= max_n; ++n) {
    const MixedGraph base = cycle_graph(n);
    const std::vector<VertexId> cycle = *cycle_traversal(base);
    for_each_orientation(base, [&](const MixedGraph& g) {
      rec.checked();
      const std::size_t sigma = canonical_sigma(g, cycle);
      const Inertia formula = cycle_inertia_formula(n, sigma);
      const Inertia descartes = inertia(g, InertiaMethod::Descartes);
      const Inertia congruence = inertia(g, InertiaMethod::Congruence);
      if (!(formula == descartes) || !(formula == congruence)) {
        rec.fail(g, "formula " + formula.to_string(),
                 "descartes " + descartes.to_string() + ", congruence " + congruence.to_string());
      }
      check_bounds(rec, g, descartes, n / 2, 1);
    });
  }
}

void suite_rank_formula(const SuiteCaps& caps, Recorder& rec) {
  const std::size_t max_n = cap(caps.max_n, 10);
  for (std::size_t n = 3; n <= max_n; ++n) {
    const MixedGraph base = cycle_graph(n);
    const std::vector<VertexId> cycle = *cycle_traversal(base);
    for_each_orientation(base, [&](const MixedGraph& g) {
      rec.checked();
      const std::size_t sigma = canonical_sigma(g, cycle);
      const std::size_t predicted = cycle_rank_formula(n, sigma);
      const std::size_t actual = rank(hermitian_adjacency(g));
      if (predicted != actual) {
        rec.fail(g, "rank " + std::to_string(predicted), "rank " + std::to_string(actual));
      }
    });
  }
  constexpr std::size_t kTableN = 50;
  for (std::size_t n = 3; n <= kTableN; ++n) {
    for (std::size_t sigma = 0; sigma <= n; ++sigma) {
      rec.checked();
      try {
        const std::size_t r = cycle_rank_formula(n, sigma);
        const std::size_t table = cycle_inertia_formula(n, sigma).rank();
        if (r != table) {
          rec.fail(cycle_graph(n), "rank table " + std::to_string(table) + " at sigma=" + std::to_string(sigma),
                   std::to_string(r));
        }
      } catch (const InternalError& e) {
        rec.fail(cycle_graph(n), "rank table agrees with inertia table at sigma=" + std::to_string(sigma), e.what());
      }
    }
  }
}

// Per-sigma predictions for one underlying unicyclic graph.
struct UnicyclicTables {
  UnicyclicStructure s;
  CycleWalk walk;
  std::vector<UnicyclicClass> cls;
  std::vector<SignPrediction> signs;

  explicit UnicyclicTables(const MixedGraph& base) : s(analyze_unicyclic(base)), walk(base, s.cycle) {
    for (std::size_t sigma = 0; sigma <= s.q(); ++sigma) {
      cls.push_back(classify_unicyclic(s, sigma));
      signs.push_back(predict_coefficient_signs(s, sigma));
    }
  }
};

void suite_unicyclic(const SuiteCaps& caps, Recorder& rec) {
  const std::size_t max_n = cap(caps.max_n, 7);
  std::size_t by_case[4] = {0, 0, 0, 0};
  for (std::size_t n = 3; n <= max_n; ++n) {
    for_each_unicyclic(n, [&](const MixedGraph& base) {
      const UnicyclicTables t(base);
      for_each_orientation(base, [&](const MixedGraph& g) {
        rec.checked();
        const UnicyclicClass& cls = t.cls[t.walk.sigma(g)];
        const Inertia actual = inertia(g);
        if (!(cls.predicted == actual)) {
          rec.fail(g, std::string(to_string(cls.tag)) + " " + cls.predicted.to_string(), actual.to_string());
        }
        check_bounds(rec, g, actual, t.s.m, 1);
        ++by_case[static_cast<int>(cls.tag)];
      });
    });
  }
  for (const auto tag : {UnicyclicCase::MinusOneBoth, UnicyclicCase::PlusOnePositive, UnicyclicCase::PlusOneNegative,
                         UnicyclicCase::Balanced}) {
    rec.note(std::string(to_string(tag)) + ": " + std::to_string(by_case[static_cast<int>(tag)]));
  }
}

void suite_coefficient_signs(const SuiteCaps& caps, Recorder& rec) {
  const std::size_t max_n = cap(caps.max_n, 7);
  std::size_t literal_graphs = 0;
  std::size_t literal_bare_cycles = 0;
  std::string first_literal;
  std::vector<std::int64_t> small;
  std::vector<int> signs;
  for (std::size_t n = 3; n <= max_n; ++n) {
    for_each_unicyclic(n, [&](const MixedGraph& base) {
      const UnicyclicTables t(base);
      for_each_orientation(base, [&](const MixedGraph& g) {
        rec.checked();
        const std::size_t sigma = t.walk.sigma(g);
        if (detail::charpoly_int64(g, small)) {
          signs.resize(small.size());
          for (std::size_t j = 0; j < small.size(); ++j) {
            signs[j] = small[j] > 0 ? 1 : (small[j] < 0 ? -1 : 0);
          }
        } else {
          signs = coefficient_signs(charpoly(g));
        }
        const SignPrediction& p = t.signs[sigma];
        if (auto bad = sign_mismatch(p, t.s.m, signs)) {
          rec.fail(g, "k=" + std::to_string(p.k) + " odd_leading=" + std::to_string(p.odd_leading_sign),
                   *bad + " in [" + charpoly(g).to_string() + "]");
        }
        const auto literal = literal_even_sign_disagreements(t.s, sigma, signs);
        if (!literal.empty()) {
          ++literal_graphs;
          if (t.s.q() == t.s.n) {
            ++literal_bare_cycles;
          }
          if (first_literal.empty()) {
            first_literal = format_mg(g) + "i=" + std::to_string(literal.front()) + " charpoly [" + charpoly(g).to_string() + "]";
          }
        }
      });
    });
  }
  rec.note("four-case rule with the q/2 range disagrees on " + std::to_string(literal_graphs) + " graphs (" +
           std::to_string(literal_bare_cycles) + " bare cycles); logged, not failed");
  if (!first_literal.empty()) {
    std::string flat = first_literal;
    for (char& ch : flat) {
      if (ch == '\n') {
        ch = ';';
      }
    }
    rec.note("first: " + flat);
  }
}

void suite_bounds(const SuiteCaps& caps, Recorder& rec) {
  const std::size_t samples = cap(caps.samples, 2000);
  const std::size_t max_n = cap(caps.max_n, 12);
  auto check = [&](const MixedGraph& g) {
    rec.checked();
    check_bounds(rec, g, inertia(g));
  };
  for (std::size_t n = 3; n <= 8; ++n) {
    for_each_orientation(cycle_graph(n), check);
  }
  for (std::size_t n = 3; n <= 5; ++n) {
    for_each_unicyclic(n, [&](const MixedGraph& base) { for_each_orientation(base, check); });
  }
  const auto census = cactus_census(6);
  for (std::size_t i = 0; i < census.size(); ++i) {
    for (const MixedGraph& g : cycle_signature_variants(census[i], derive_seed(caps.seed, i))) {
      check(g);
    }
  }
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng(derive_seed(caps.seed, 1'000'000 + i));
    const std::size_t n = rng.between(1, max_n);
    check(random_orientation(random_graph(n, static_cast<unsigned>(rng.between(10, 70)), rng), rng));
  }
}

void suite_trees(const SuiteCaps& caps, Recorder& rec) {
  const std::size_t samples = cap(caps.samples, 1000);
  const std::size_t max_n = cap(caps.max_n, 14);
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng(derive_seed(caps.seed, i));
    const std::size_t n = rng.between(1, max_n);
    const MixedGraph g = random_orientation(random_tree(n, rng), rng);
    rec.checked();
    const Inertia in = inertia(g);
    const std::size_t m = matching_number(g);
    if (in.p_plus != m || in.n_minus != m) {
      rec.fail(g, "p+ = n- = m = " + std::to_string(m), inertia_pair(in));
    }
    check_bounds(rec, g, in, m, 0);
  }
}

void suite_components(const SuiteCaps& caps, Recorder& rec) {
  const std::size_t samples = cap(caps.samples, 500);
  const std::size_t max_n = cap(caps.max_n, 12);
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng(derive_seed(caps.seed, i));
    const MixedGraph g = random_disconnected(std::max<std::size_t>(max_n, 2), rng);
    rec.checked();
    const IntPolynomial whole = charpoly(g);
    IntPolynomial product;
    Inertia summed;
    std::size_t c_sum = 0;
    for (const InducedSubgraph& part : components(g)) {
      product = product * charpoly(part.graph);
      const Inertia pin = inertia(part.graph);
      summed.p_plus += pin.p_plus;
      summed.n_minus += pin.n_minus;
      summed.nullity += pin.nullity;
      c_sum += cycle_space_dim(part.graph);
    }
    if (!(whole == product)) {
      rec.fail(g, "product of component charpolys [" + product.to_string() + "]", "[" + whole.to_string() + "]");
    }
    const Inertia in = inertia(g);
    if (!(in == summed)) {
      rec.fail(g, "summed component inertia " + summed.to_string(), in.to_string());
    }
    if (c_sum != cycle_space_dim(g)) {
      rec.fail(g, "c additive: " + std::to_string(c_sum), std::to_string(cycle_space_dim(g)));
    }
    check_bounds(rec, g, in);
  }
}

void suite_vertex_deletion(const SuiteCaps& caps, Recorder& rec) {
  const std::size_t samples = cap(caps.samples, 2000);
  const std::size_t max_n = cap(caps.max_n, 10);
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng(derive_seed(caps.seed, i));
    const std::size_t n = rng.between(1, max_n);
    const MixedGraph g = random_orientation(random_graph(n, static_cast<unsigned>(rng.between(15, 75)), rng), rng);
    const Inertia in = inertia(g);
    check_bounds(rec, g, in);
    for (VertexId v = 0; v < n; ++v) {
      rec.checked();
      const VertexId del[] = {v};
      const Inertia h = inertia(delete_vertices(g, del).graph);
      const bool ok = h.p_plus <= in.p_plus && h.p_plus + 1 >= in.p_plus && h.n_minus <= in.n_minus &&
                      h.n_minus + 1 >= in.n_minus && h.rank() <= in.rank() && h.rank() + 2 >= in.rank();
      if (!ok) {
        rec.fail(g, "deleting " + std::to_string(v) + " stays within the windows of " + in.to_string(), h.to_string());
      }
    }
  }
}

void suite_pendant_deletion(const SuiteCaps& caps, Recorder& rec) {
  const std::size_t samples = cap(caps.samples, 2000);
  const std::size_t max_n = cap(caps.max_n, 12);
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng(derive_seed(caps.seed, i));
    const std::size_t n = rng.between(2, std::max<std::size_t>(max_n, 2));
    const MixedGraph g = random_orientation(random_connected(n, rng.between(0, n / 2), rng), rng);
    const Inertia in = inertia(g);
    const std::size_t m = matching_number(g);
    check_bounds(rec, g, in, m, cycle_space_dim(g));
    for (const PendantPair& pq : pendant_and_quasi_pendant(g)) {
      rec.checked();
      const VertexId del[] = {pq.pendant, pq.quasi};
      const MixedGraph h = delete_vertices(g, del).graph;
      const Inertia hin = inertia(h);
      if (hin.p_plus + 1 != in.p_plus || hin.n_minus + 1 != in.n_minus) {
        rec.fail(g,
                 "deleting pendant " + std::to_string(pq.pendant) + " and " + std::to_string(pq.quasi) +
                     " gives " + pair_str(static_cast<std::int64_t>(in.p_plus) - 1, static_cast<std::int64_t>(in.n_minus) - 1),
                 inertia_pair(hin));
      }
      if (matching_number(h) + 1 != m) {
        rec.fail(g, "m drops by one to " + std::to_string(m - 1), std::to_string(matching_number(h)));
      }
    }
  }
}

MixedGraph from_pairs(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> pairs) {
  MixedGraph g(n);
  for (const auto& [a, b] : pairs) {
    g.add_edge(a, b);
  }
  return g;
}

std::vector<std::pair<std::string, MixedGraph>> oracle_family(std::size_t max_n) {
  std::vector<std::pair<std::string, MixedGraph>> out;
  for (std::size_t n = 2; n <= max_n; ++n) {
    out.emplace_back("P" + std::to_string(n), path_graph(n));
  }
  for (std::size_t n = 3; n <= max_n; ++n) {
    out.emplace_back("C" + std::to_string(n), cycle_graph(n));
  }
  if (max_n >= 4) {
    out.emplace_back("K4", complete_graph(4));
    out.emplace_back("diamond", from_pairs(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}));
    out.emplace_back("C3+pendant", from_pairs(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}));
  }
  if (max_n >= 5) {
    out.emplace_back("bowtie", from_pairs(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}));
    out.emplace_back("C4+pendant", from_pairs(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}}));
    out.emplace_back("C3+P2", from_pairs(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}}));
  }
  if (max_n >= 6) {
    out.emplace_back("C3+two pendants", from_pairs(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}));
    out.emplace_back("C5+pendant", from_pairs(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {4, 5}}));
    out.emplace_back("C4+P2", from_pairs(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}, {4, 5}}));
  }
  return out;
}

void suite_charpoly_oracle(const SuiteCaps& caps, Recorder& rec) {
  const std::size_t max_n = cap(caps.max_n, 6);
  for (const auto& [name, base] : oracle_family(max_n)) {
    std::size_t count = 0;
    for_each_orientation(base, [&](const MixedGraph& g) {
      rec.checked();
      ++count;
      const IntPolynomial fl = charpoly(g);
      const IntPolynomial en = charpoly_by_enumeration(g);
      if (!(fl == en)) {
        rec.fail(g, "enumeration [" + en.to_string() + "]", "Faddeev-LeVerrier [" + fl.to_string() + "]");
      }
      const HermitianMatrix h = hermitian_adjacency(g);
      const IntPolynomial big = detail::charpoly_bigint(h);
      if (!(big == fl)) {
        rec.fail(g, "bigint path [" + big.to_string() + "]", "[" + fl.to_string() + "]");
      }
    });
    rec.note(name + ": " + std::to_string(count));
  }
}

void suite_inertia_agreement(const SuiteCaps& caps, Recorder& rec) {
  const std::size_t samples = cap(caps.samples, 10000);
  const std::size_t max_n = cap(caps.max_n, 12);
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng(derive_seed(caps.seed, i));
    const std::size_t n = rng.between(1, max_n);
    const MixedGraph g = random_orientation(random_graph(n, static_cast<unsigned>(rng.between(10, 80)), rng), rng);
    rec.checked();
    const Inertia d = inertia(g, InertiaMethod::Descartes);
    const Inertia c = inertia(g, InertiaMethod::Congruence);
    if (!(d == c)) {
      rec.fail(g, "congruence " + c.to_string(), "descartes " + d.to_string());
    }
    check_bounds(rec, g, d);
  }
}

// Cactus census variants followed by random connected graphs, all on at most
// max_n vertices.
void for_each_characterization_graph(const SuiteCaps& caps, const std::function<void(const MixedGraph&)>& visit,
                                     Recorder& rec) {
  const std::size_t max_n = cap(caps.max_n, 8);
  const std::size_t samples = cap(caps.samples, 5000);
  const auto census = cactus_census(max_n);
  std::size_t variants = 0;
  for (std::size_t i = 0; i < census.size(); ++i) {
    for (const MixedGraph& g : cycle_signature_variants(census[i], derive_seed(caps.seed, i))) {
      ++variants;
      visit(g);
    }
  }
  std::size_t intersecting = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng(derive_seed(caps.seed, 1'000'000 + i));
    const std::size_t n = rng.between(1, max_n);
    const MixedGraph g = random_orientation(random_connected(n, rng.between(0, n), rng), rng);
    if (!all_cycles_if_disjoint(g)) {
      ++intersecting;
    }
    visit(g);
  }
  rec.note("census: " + std::to_string(census.size()) + " underlying graphs, " + std::to_string(variants) +
           " oriented variants; random: " + std::to_string(samples) + " (" + std::to_string(intersecting) +
           " with intersecting cycles)");
}

std::string report_str(const CharacterizationReport& r) {
  auto opt = [](const std::optional<bool>& b) { return b ? (*b ? "1" : "0") : "-"; };
  std::ostringstream out;
  out << to_string(r.kind) << " predicate=" << r.predicate << " disjoint=" << r.disjoint_cycles
      << " cycles=" << r.cycle_condition << " T=" << opt(r.tree_matching_equal) << " avoid=" << opt(r.max_avoids_f)
      << " none_use=" << opt(r.no_max_uses_f);
  return out.str();
}

void suite_characterize_max(const SuiteCaps& caps, Recorder& rec) {
  std::size_t attain_p = 0;
  std::size_t attain_n = 0;
  for_each_characterization_graph(
      caps,
      [&](const MixedGraph& g) {
        rec.checked();
        const Inertia in = inertia(g);
        const std::size_t mc = matching_number(g) + cycle_space_dim(g);
        check_bounds(rec, g, in);
        const bool p_max = in.p_plus == mc;
        const bool n_max = in.n_minus == mc;
        attain_p += p_max;
        attain_n += n_max;
        const auto rp = characterize(g, Characterization::PositiveMax);
        const auto rn = characterize(g, Characterization::NegativeMax);
        if (rp.predicate != p_max) {
          rec.fail(g, report_str(rp), "p+=" + std::to_string(in.p_plus) + " m+c=" + std::to_string(mc));
        }
        if (rn.predicate != n_max) {
          rec.fail(g, report_str(rn), "n-=" + std::to_string(in.n_minus) + " m+c=" + std::to_string(mc));
        }
        if (rp.forms_disagree || rn.forms_disagree) {
          rec.fail(g, "matching forms agree", report_str(rp.forms_disagree ? rp : rn));
        }
      },
      rec);
  rec.note("p+ = m+c attained by " + std::to_string(attain_p) + ", n- = m+c by " + std::to_string(attain_n));
}

void suite_characterize_min(const SuiteCaps& caps, Recorder& rec) {
  std::size_t attain = 0;
  std::size_t incidence_form_differs = 0;
  for_each_characterization_graph(
      caps,
      [&](const MixedGraph& g) {
        rec.checked();
        const Inertia in = inertia(g);
        const auto low = static_cast<std::int64_t>(matching_number(g)) - static_cast<std::int64_t>(cycle_space_dim(g));
        check_bounds(rec, g, in);
        const bool p_min = static_cast<std::int64_t>(in.p_plus) == low;
        const bool n_min = static_cast<std::int64_t>(in.n_minus) == low;
        attain += p_min;
        const auto r = characterize(g, Characterization::Min);
        if (r.predicate != p_min || r.predicate != n_min) {
          rec.fail(g, report_str(r), inertia_pair(in) + " m-c=" + std::to_string(low));
        }
        incidence_form_differs += r.cycle_condition && r.in_class && *r.no_max_uses_f != *r.tree_matching_equal;
      },
      rec);
  rec.note("p+ = m-c attained by " + std::to_string(attain));
  rec.note("no-maximum-matching-uses-F differs from m(T_G)=m([T_G]) on " + std::to_string(incidence_form_differs) +
           " graphs meeting the cycle condition");
}

void suite_extremal_consequences(const SuiteCaps& caps, Recorder& rec) {
  std::size_t reports = 0;
  std::size_t min_vertices = 0;
  std::size_t min_sum_form = 0;
  for_each_characterization_graph(
      caps,
      [&](const MixedGraph& g) {
        const std::size_t c = cycle_space_dim(g);
        if (c == 0) {
          return;
        }
        const Inertia in = inertia(g);
        const auto m = static_cast<std::int64_t>(matching_number(g));
        const auto ci = static_cast<std::int64_t>(c);
        for (const Extremum which : {Extremum::Max, Extremum::Min}) {
          for (const InertiaIndex idx : {InertiaIndex::Positive, InertiaIndex::Negative}) {
            const auto x = static_cast<std::int64_t>(idx == InertiaIndex::Positive ? in.p_plus : in.n_minus);
            if (x != (which == Extremum::Max ? m + ci : m - ci)) {
              continue;
            }
            rec.checked();
            ++reports;
            const ConsequenceReport rep = check_extremal_consequences(g, which, idx);
            for (const ConsequenceItem& item : rep.items) {
              if (!item.ok) {
                rec.fail(g,
                         std::string(which == Extremum::Max ? "max" : "min") +
                             (idx == InertiaIndex::Positive ? " p+" : " n-") + " item " + std::to_string(item.item) +
                             " at v=" + std::to_string(item.vertex),
                         item.detail);
              }
            }
            if (which == Extremum::Min) {
              min_vertices += rep.items.size() / 7;
              min_sum_form += rep.min_sum_form_holds;
            }
          }
        }
      },
      rec);
  rec.note("attaining (graph, bound) pairs: " + std::to_string(reports));
  rec.note("min case item (ii) with m(G-v)+c(G-v) holds at " + std::to_string(min_sum_form) + " of " +
           std::to_string(min_vertices) + " cycle vertices; the m(G-v)-c(G-v) form is checked");
}

using SuiteFn = void (*)(const SuiteCaps&, Recorder&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"cycles", suite_cycles},
      {"unicyclic", suite_unicyclic},
      {"coefficient-signs", suite_coefficient_signs},
      {"bounds", suite_bounds},
      {"trees", suite_trees},
      {"components", suite_components},
      {"vertex-deletion", suite_vertex_deletion},
      {"pendant-deletion", suite_pendant_deletion},
      {"charpoly-oracle", suite_charpoly_oracle},
      {"inertia-agreement", suite_inertia_agreement},
      {"characterize-max", suite_characterize_max},
      {"characterize-min", suite_characterize_min},
      {"extremal-consequences", suite_extremal_consequences},
      {"rank-formula", suite_rank_formula},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) {
      out.push_back(name);
    }
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteCaps& caps) {
  for (const auto& [suite, fn] : registry()) {
    if (suite != name) {
      continue;
    }
    SuiteResult result;
    result.suite = name;
    Recorder rec(result);
    const auto start = std::chrono::steady_clock::now();
    fn(caps, rec);
    result.millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return result;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace mgx
