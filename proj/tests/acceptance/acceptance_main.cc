// Copyright 2026 The SCCG Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the thirteen acceptance criteria and prints one PASS/FAIL line for
// each. Expected values are computed here from first principles or from the
// oracles in tests/oracles.h; exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.h"
#include "sccg/baseline.h"
#include "sccg/corona.h"
#include "sccg/io.h"
#include "sccg/metrics.h"
#include "sccg/sccg.h"
#include "sccg/seed.h"

namespace sccg {
namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void Check(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what;
      pass = false;
    }
  }
};

struct Criterion {
  int id;
  const char* title;
  double time_limit_s;  // 0 = none
  std::function<void(Outcome&)> body;
};

std::uint64_t Pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

SccgResult Sccg(const std::string& seed, int m) { return GenerateSccg({NamedSeed(seed), m}); }

const std::vector<std::string> kCountSeeds = {"k2", "k3", "k4", "s3", "s4", "c4", "c5", "p4"};

void ClosedFormCounts(Outcome& o) {
  int points = 0;
  for (const std::string& name : kCountSeeds) {
    const SeedGraph seed = NamedSeed(name);
    const std::uint64_t n = seed.n(), e0 = seed.e0();
    for (int m = 0; m <= 4; ++m) {
      const Graph g = GenerateCoronaGraph(seed, m).graph;
      const std::uint64_t nodes = n * Pow(n + 1, m);
      const std::uint64_t edges = e0 + (e0 + n) * (Pow(n + 1, m) - 1);
      o.Check(g.node_count() == nodes, name + " m=" + std::to_string(m) + " nodes");
      o.Check(g.edge_count() == edges, name + " m=" + std::to_string(m) + " edges");
      ++points;
    }
  }
  o.detail << (o.pass ? "" : "; ") << points << " sweep points";
}

void CoronaDiameterSweep(Outcome& o) {
  int points = 0;
  for (const std::string& name : kCountSeeds) {
    const SeedGraph seed = NamedSeed(name);
    const auto d0 = oracle::FloydWarshallDiameter(seed.graph());
    for (int m = 0; m <= 4; ++m) {
      const auto d = metrics::ExactDiameter(GenerateCoronaGraph(seed, m).graph).value;
      o.Check(d0 && d && *d == *d0 + 2 * m, name + " m=" + std::to_string(m));
      ++points;
    }
  }
  o.detail << (o.pass ? "" : "; ") << points << " sweep points";
}

void NodeConservation(Outcome& o) {
  for (const std::string& name : kCountSeeds) {
    const std::uint64_t n = NamedSeed(name).n();
    for (int m = 1; m <= 4; ++m) {
      o.Check(Sccg(name, m).graph.node_count() == n * Pow(n + 1, m),
              name + " m=" + std::to_string(m));
    }
  }
  o.detail << (o.pass ? "" : "; ") << "m=0 is rejected by the generator; swept m=1..4";
}

void HubCensus(Outcome& o) {
  for (const std::string& name : {"k3", "s3", "c5"}) {
    const std::uint64_t n = NamedSeed(name).n();
    const SccgResult r = Sccg(name, 4);
    for (int i = 1; i <= 4; ++i) {
      std::uint64_t skeletal = 0;
      for (const NodeMeta& meta : r.meta) {
        skeletal += meta.birth_step == i && meta.node_class == NodeClass::kSkeletal;
      }
      const auto& rec = r.trace.steps[static_cast<std::size_t>(i - 1)];
      o.Check(rec.hubs.size() == Pow(n, i - 1), name + " hubs i=" + std::to_string(i));
      o.Check(skeletal == Pow(n, i + 1), name + " skeletal i=" + std::to_string(i));
    }
  }
}

void TopHubDegree(Outcome& o) {
  for (const std::string& name : {"k3", "s3"}) {
    const SeedGraph seed = NamedSeed(name);
    for (int m = 1; m <= 4; ++m) {
      const SccgResult r = Sccg(name, m);
      const std::uint64_t expected = seed.k0_max() + seed.n() * (Pow(seed.n() + 1, m) - 1);
      const std::uint64_t measured = r.graph.degree(r.trace.steps[0].hubs[0]);
      o.Check(measured == expected, name + " m=" + std::to_string(m) + " measured " +
                                        std::to_string(measured) + " expected " +
                                        std::to_string(expected));
      if (name == "k3" && m == 2) o.detail << "K3 m=2 top hub degree " << measured;
    }
  }
}

void LaterHubDegrees(Outcome& o) {
  long max_delta = 0;
  int hubs = 0;
  std::ostringstream deltas;
  for (const std::string& name : {"k3", "s3", "c5"}) {
    const SeedGraph seed = NamedSeed(name);
    for (int m = 2; m <= 4; ++m) {
      const SccgResult r = Sccg(name, m);
      for (const HubRecord& h : HubRecords(r)) {
        if (h.birth_step == 0) continue;
        const int j = m - h.birth_step;
        const long formula = static_cast<long>(seed.k0_max()) + (m - j + 1) +
                             static_cast<long>(seed.n() * (Pow(seed.n() + 1, j) - 1));
        const long delta = static_cast<long>(h.final_degree) - formula;
        o.Check(std::labs(delta) <= m, name + " m=" + std::to_string(m) + " hub " +
                                           std::to_string(h.node) + " delta " +
                                           std::to_string(delta));
        max_delta = std::max(max_delta, std::labs(delta));
        ++hubs;
      }
    }
  }
  o.detail << (o.pass ? "" : "; ") << hubs << " later hubs, max |delta| = " << max_delta;
}

void PowerLaw(Outcome& o) {
  const SccgResult r = Sccg("k3", 6);
  o.Check(r.graph.node_count() == 12288, "node count");
  const auto hubs = TraceHubs(r.trace);
  const auto fit =
      metrics::FitPowerLawExponent(metrics::DegreeCcdf(r.graph, std::span<const NodeId>(hubs)));
  const double analytic = AnalyticGamma(3, 6);
  o.Check(fit.has_value() && *fit >= 1.7 && *fit <= 2.3, "fitted gamma out of band");
  o.Check(analytic >= 1.7 && analytic <= 2.3, "analytic gamma out of band");
  o.detail << (o.pass ? "" : "; ") << "fitted " << (fit ? *fit : NAN) << ", analytic "
           << analytic;
}

void DiameterSuite(Outcome& o) {
  struct Case {
    std::string seed;
    std::vector<int> expected;  // m = 1, 2, 3
  };
  const std::vector<Case> cases = {
      {"k3", {2, 2, 2}},  {"k4", {2, 2, 2}},  {"k5", {2, 2, 2}},  {"s3", {2, 2, 2}},
      {"s4", {2, 2, 2}},  {"s5", {2, 2, 2}},  {"c4", {2, 3, 3}},  {"c5", {3, 3, 3}},
      {"c6", {3, 3, 3}},  {"c7", {3, 3, 3}},  {"c8", {4, 4, 4}},  {"c9", {4, 4, 4}},
      {"g10", {3, 3, 3}}, {"g12", {3, 3, 3}}, {"g13", {3, 3, 3}}, {"g14", {2, 2, 2}},
      {"g16", {3, 3, 3}}};
  int checked = 0;
  for (const Case& c : cases) {
    for (int m = 1; m <= 3; ++m) {
      const auto d = metrics::ExactDiameter(Sccg(c.seed, m).graph).value;
      const int want = c.expected[static_cast<std::size_t>(m - 1)];
      o.Check(d && *d == want, c.seed + " m=" + std::to_string(m) + " got " +
                                   (d ? std::to_string(*d) : "unreachable") + " want " +
                                   std::to_string(want));
      ++checked;
    }
  }
  o.detail << (o.pass ? "" : "; ") << checked
           << " graphs";
}

void DensityBand(Outcome& o) {
  const auto d = metrics::Density(Sccg("k3", 6).graph);
  o.Check(d && *d >= 1e-4 && *d <= 1e-2, "density out of band");
  o.detail << (o.pass ? "" : "; ") << "density " << (d ? *d : NAN);
}

void Disassortativity(Outcome& o) {
  for (int m = 2; m <= 4; ++m) {
    const auto r = metrics::Assortativity(Sccg("k3", m).graph);
    o.Check(r && *r < 0.0, "K3 m=" + std::to_string(m));
    if (r) o.detail << "r(m=" << m << ")=" << *r << " ";
  }
  for (const std::string& star : {"s3", "s4", "s8"}) {
    const auto r = metrics::Assortativity(NamedSeed(star).graph());
    o.Check(r && std::fabs(*r + 1.0) <= 1e-12, star);
  }
  for (const std::string& k : {"k3", "k4", "k6"}) {
    o.Check(!metrics::Assortativity(NamedSeed(k).graph()).has_value(), k + " defined");
  }
}

void Triangles(Outcome& o) {
  for (int m = 2; m <= 4; ++m) {
    const Graph g = Sccg("k3", m).graph;
    const std::uint64_t t = metrics::TriangleCount(g);
    std::uint64_t best_ba = 0;
    for (std::uint64_t seed : {1, 2, 3}) {
      const Graph ba = GenerateBarabasiAlbert({3, 2, g.node_count(), seed});
      best_ba = std::max(best_ba, metrics::TriangleCount(ba));
    }
    o.Check(t > best_ba, "m=" + std::to_string(m));
    o.detail << "m=" << m << ": " << t << " vs BA max " << best_ba << " ";
  }
  o.Check(metrics::AverageClustering(NamedSeed("k4").graph()) == 1.0, "K4 clustering");
}

void OracleEquivalence(Outcome& o) {
  std::mt19937_64 rng(20261015);
  for (int i = 0; i < 50; ++i) {
    const NodeId n = 2 + static_cast<NodeId>(rng() % 199);
    const double p = 1.5 / n + 0.25 * static_cast<double>(rng() % 100) / 100.0;
    const Graph g = oracle::RandomGraph(rng, n, p, i % 5 != 0);
    o.Check(metrics::ExactDiameter(g).value == oracle::FloydWarshallDiameter(g),
            "diameter graph " + std::to_string(i));
    o.Check(metrics::TriangleCount(g) == oracle::BruteForceTriangles(g),
            "triangles graph " + std::to_string(i));
  }
  o.detail << (o.pass ? "" : "; ") << "50 graphs";
}

void Determinism(Outcome& o) {
  const std::vector<std::pair<std::string, std::function<Graph()>>> generators = {
      {"sccg", [] { return Sccg("g13", 3).graph; }},
      {"sccg-nearest",
       [] {
         HubPolicy p;
         p.deep_offshoot = DeepOffshootLinking::kNearestHubOnly;
         return GenerateSccg({NamedSeed("k3"), 4, p}).graph;
       }},
      {"corona", [] { return GenerateCoronaGraph(NamedSeed("c5"), 3).graph; }},
      {"ba", [] { return GenerateBarabasiAlbert({3, 2, 5000, 42}); }},
      {"pfsf", [] { return GeneratePseudofractal(6); }},
      {"kronecker",
       [] { return GenerateKronecker(KroneckerSeed::WithSelfLoops(NamedSeed("s4").graph()), 4); }},
  };
  for (const auto& [name, make] : generators) {
    o.Check(Sha256Hex(EdgeListText(make())) == Sha256Hex(EdgeListText(make())), name);
  }
  const SccgResult a = Sccg("k4", 3), b = Sccg("k4", 3);
  o.Check(TraceToJson(a.trace) == TraceToJson(b.trace), "sccg trace");
  o.detail << (o.pass ? "" : "; ") << generators.size() << " generators";
}

}  // namespace
}  // namespace sccg

int main() {
  using namespace sccg;
  const std::vector<Criterion> criteria = {
      {1, "closed-form corona counts", 5, ClosedFormCounts},
      {2, "corona diameter D0+2m", 30, CoronaDiameterSweep},
      {3, "SCCG node conservation", 0, NodeConservation},
      {4, "hub and skeletal census", 0, HubCensus},
      {5, "top-hub degree", 0, TopHubDegree},
      {6, "later-hub degrees within m", 0, LaterHubDegrees},
      {7, "power-law exponent band", 60, PowerLaw},
      {8, "SCCG diameter suite", 120, DiameterSuite},
      {9, "density band", 0, DensityBand},
      {10, "disassortativity", 0, Disassortativity},
      {11, "triangles above BA, K4 clustering", 0, Triangles},
      {12, "oracle equivalence", 0, OracleEquivalence},
      {13, "generator determinism", 0, Determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(outcome);
    } catch (const std::exception& e) {
      outcome.Check(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && seconds >= c.time_limit_s) {
      outcome.Check(false, "over time limit");
    }
    failures += !outcome.pass;
    std::printf("%s AC%02d %-36s %8.3fs%s  %s\n", outcome.pass ? "PASS" : "FAIL", c.id,
                c.title, seconds,
                c.time_limit_s > 0 ? (" (<" + std::to_string(static_cast<int>(c.time_limit_s)) +
                                      "s)").c_str()
                                   : "",
                outcome.detail.str().c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
