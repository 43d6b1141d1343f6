// Runs every acceptance criterion at full size and prints one PASS/FAIL line
// per criterion. Exit status is nonzero if any criterion fails.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "mgx/suites.hpp"

namespace {

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> suites;
};

const std::vector<Criterion> kCriteria = {
    {1, "cycle table: formula == Descartes == congruence, n 3..10, all orientations", {"cycles"}},
    {2, "cycle rank formula: corpus and table to n = 50", {"rank-formula"}},
    {3, "unicyclic classification, n <= 7, all orientations", {"unicyclic"}},
    {4, "characteristic polynomial coefficient signs on the unicyclic corpus", {"coefficient-signs"}},
    {5, "Faddeev-LeVerrier == elementary subgraph expansion, n <= 6", {"charpoly-oracle"}},
    {6, "Descartes == congruence on 10000 random graphs", {"inertia-agreement"}},
    {7, "trees p+ = n- = m; component charpoly products", {"trees", "components"}},
    {8, "inertia bounds, vertex deletion windows, pendant pair deletion", {"bounds", "vertex-deletion", "pendant-deletion"}},
    {9, "extremal characterizations and their consequences",
     {"characterize-max", "characterize-min", "extremal-consequences"}},
};

}  // namespace

int main() {
  bool all = true;
  for (const Criterion& c : kCriteria) {
    bool ok = true;
    std::string detail;
    for (const std::string& name : c.suites) {
      const mgx::SuiteResult r = mgx::run_suite(name);
      ok = ok && r.passed();
      detail += " " + name + ":checked=" + std::to_string(r.checked) +
                ",failures=" + std::to_string(r.failures.size() + r.failures_dropped) +
                ",ms=" + std::to_string(r.millis);
      for (const auto& note : r.notes) {
        std::cerr << "  [" << name << "] " << note << '\n';
      }
      for (std::size_t i = 0; i < r.failures.size() && i < 5; ++i) {
        std::cerr << "  [" << name << "] graph " << r.failures[i].graph.dump()
                  << " expected " << r.failures[i].expected << " actual " << r.failures[i].actual << '\n';
      }
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " |" << detail << std::endl;
    all = all && ok;
  }
  std::cout << (all ? "ALL PASS" : "SOME CRITERIA FAILED") << std::endl;
  return all ? 0 : 1;
}
