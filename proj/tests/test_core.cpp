#include <doctest.h>

#include <random>

#include "bkn/graph.hpp"
#include "bkn/graph_json.hpp"
#include "oracles.hpp"

using namespace bkn;

namespace {

LabeledGraph path_graph(std::vector<Rat> charges, std::vector<long long> bs) {
  LabeledGraph g;
  g.charge = std::move(charges);
  for (std::size_t e = 0; e < bs.size(); ++e)
    g.edges.push_back({static_cast<int>(e), static_cast<int>(e) + 1, bs[e]});
  return g;
}

LabeledGraph loop_graph(Rat charge, long long b) {
  LabeledGraph g;
  g.charge = {std::move(charge)};
  g.edges = {{0, 0, b}};
  return g;
}

}  // namespace

TEST_SUITE_BEGIN("core");

TEST_CASE("parse round-trips a loop document") {
  auto g = parse_labeled_graph(R"({
    "vertices": [{"id": 0, "charge": "2/3"}],
    "edges": [{"id": 0, "tail": 0, "head": 0, "b": 3}]
  })");
  CHECK(g.vertex_count() == 1);
  CHECK(g.edge_count() == 1);
  CHECK(g.charge[0] == Rat(2, 3));
  CHECK(g.edges[0].tail == 0);
  CHECK(g.edges[0].head == 0);
  CHECK(g.edges[0].b == 3);
  CHECK_FALSE(g.rho.has_value());

  auto again = parse_labeled_graph(graph_to_json(g).dump());
  CHECK(again.charge == g.charge);
}

TEST_CASE("parse rejects bad documents") {
  CHECK_THROWS_AS(parse_labeled_graph("not json"), ParseError);
  // dangling endpoint
  CHECK_THROWS_AS(parse_labeled_graph(R"({
    "vertices": [{"id":0,"charge":1},{"id":1,"charge":1},{"id":2,"charge":1}],
    "edges": [{"id":0,"tail":0,"head":5,"b":1}]
  })"),
                  ParseError);
  // zero intersection index
  CHECK_THROWS_AS(parse_labeled_graph(R"({
    "vertices": [{"id":0,"charge":1}],
    "edges": [{"id":0,"tail":0,"head":0,"b":0}]
  })"),
                  ParseError);
  // malformed rational
  CHECK_THROWS_AS(parse_labeled_graph(R"({
    "vertices": [{"id":0,"charge":"1/0"}], "edges": []
  })"),
                  ParseError);
  CHECK_THROWS_AS(parse_labeled_graph(R"({
    "vertices": [{"id":0,"charge":"1.5"}], "edges": []
  })"),
                  ParseError);
  // non-integer b
  CHECK_THROWS_AS(parse_labeled_graph(R"({
    "vertices": [{"id":0,"charge":1}],
    "edges": [{"id":0,"tail":0,"head":0,"b":1.5}]
  })"),
                  ParseError);
  // contradictory rho vs signed b
  CHECK_THROWS_AS(parse_labeled_graph(R"({
    "vertices": [{"id":0,"charge":1},{"id":1,"charge":1}],
    "edges": [{"id":0,"tail":0,"head":1,"b":-2,"rho":1}]
  })"),
                  ParseError);
}

TEST_CASE("rho comes from signed b or explicit entries") {
  auto g = parse_labeled_graph(R"({
    "vertices": [{"id":0,"charge":1},{"id":1,"charge":1},{"id":2,"charge":1}],
    "edges": [{"id":0,"tail":0,"head":1,"b":-1},{"id":1,"tail":1,"head":2,"b":2}]
  })");
  REQUIRE(g.rho.has_value());
  CHECK(g.rho->value == std::vector<int>{-1, 1});
  CHECK(g.edges[0].b == 1);  // magnitude stored

  auto h = parse_labeled_graph(R"({
    "vertices": [{"id":0,"charge":1},{"id":1,"charge":1}],
    "edges": [{"id":0,"tail":0,"head":1,"b":2,"rho":-1}]
  })");
  REQUIRE(h.rho.has_value());
  CHECK(h.rho->value == std::vector<int>{-1});
}

TEST_CASE("validate reports the named violations") {
  auto ok = path_graph({Rat(1), Rat(2), Rat(3)}, {1, 1});
  CHECK(validate(ok).empty());

  LabeledGraph two_loops;  // disconnected
  two_loops.charge = {Rat(1), Rat(1)};
  two_loops.edges = {{0, 0, 1}, {1, 1, 1}};
  auto diags = validate(two_loops);
  REQUIRE(diags.size() == 1);
  CHECK(diags[0] == "graph not connected");

  LabeledGraph zero_b = path_graph({Rat(1), Rat(1)}, {1});
  zero_b.edges[0].b = 0;
  auto d2 = validate(zero_b);
  REQUIRE(d2.size() == 1);
  CHECK(d2[0].find("intersection index must be nonzero") != std::string::npos);
}

TEST_CASE("cohomology class counts") {
  // tree: only the trivial class
  auto tree = path_graph({Rat(1), Rat(1), Rat(1)}, {1, 1});
  CHECK(cohomology_classes(tree).class_count() == 1);

  // single loop: two classes, and the -1 cocycle is not a coboundary
  auto loop = loop_graph(Rat(1), 1);
  auto basis = cohomology_classes(loop);
  CHECK(basis.class_count() == 2);
  CHECK_FALSE(is_coboundary(loop, basis.representative(1)).has_value());

  // theta graph: brute-force quotient gives 4
  LabeledGraph theta;
  theta.charge = {Rat(1), Rat(1)};
  theta.edges = {{0, 1, 1}, {0, 1, 1}, {0, 1, 1}};
  CHECK(cohomology_classes(theta).class_count() == 4);
  CHECK(oracle::brute_class_count(theta) == 4);

  LabeledGraph disconnected;
  disconnected.charge = {Rat(1), Rat(1)};
  CHECK_THROWS_AS(cohomology_classes(disconnected), std::invalid_argument);
}

TEST_CASE("class count matches brute force on random graphs") {
  std::mt19937_64 rng(7001);
  for (int it = 0; it < 40; ++it) {
    auto g = oracle::random_connected_graph(rng, 4);
    if (g.edge_count() > 6 || !g.is_connected()) continue;
    CHECK(cohomology_classes(g).class_count() == oracle::brute_class_count(g));
  }
}

TEST_CASE("representatives are invariant under coboundary twists") {
  std::mt19937_64 rng(7002);
  for (int it = 0; it < 60; ++it) {
    auto g = oracle::random_connected_graph(rng, 5);
    auto basis = cohomology_classes(g);
    Cocycle lambda;
    for (int e = 0; e < g.edge_count(); ++e)
      lambda.value.push_back(rng() % 2 == 0 ? 1 : -1);
    auto sigma = oracle::random_coboundary(rng, g);
    Cocycle twisted;
    for (int e = 0; e < g.edge_count(); ++e)
      twisted.value.push_back(lambda.value[e] * sigma.value[e]);
    CHECK(class_index(g, basis, lambda) == class_index(g, basis, twisted));
    // representatives exhaust distinct classes
    CHECK(class_index(g, basis, basis.representative(
                                    class_index(g, basis, lambda))) ==
          class_index(g, basis, lambda));
  }
}

TEST_CASE("is_coboundary") {
  auto path = path_graph({Rat(1), Rat(1), Rat(1)}, {1, 1});
  SUBCASE("trivial cocycle has the constant potential") {
    auto eps = is_coboundary(path, Cocycle{{1, 1}});
    REQUIRE(eps.has_value());
    CHECK(*eps == std::vector<int>{1, 1, 1});
  }
  SUBCASE("a -1 loop is never a coboundary") {
    auto loop = loop_graph(Rat(1), 1);
    CHECK_FALSE(is_coboundary(loop, Cocycle{{-1}}).has_value());
  }
  SUBCASE("splitting a tree at one edge") {
    auto eps = is_coboundary(path, Cocycle{{-1, 1}});
    REQUIRE(eps.has_value());
    CHECK(*eps == std::vector<int>{1, -1, -1});
  }
  SUBCASE("returned potentials verify on every edge") {
    std::mt19937_64 rng(7003);
    for (int it = 0; it < 60; ++it) {
      auto g = oracle::random_connected_graph(rng, 5);
      auto sigma = oracle::random_coboundary(rng, g);
      auto eps = is_coboundary(g, sigma);
      REQUIRE(eps.has_value());
      for (int e = 0; e < g.edge_count(); ++e)
        CHECK(sigma.value[e] == (*eps)[g.edges[e].tail] * (*eps)[g.edges[e].head]);
    }
  }
}

TEST_CASE("form_rho_from_signs") {
  CHECK(form_rho_from_signs({1, 2, 3}).value == std::vector<int>{1, 1, 1});
  CHECK_THROWS_AS(form_rho_from_signs({1, 0}), std::invalid_argument);

  // (-1, 2) on a path is a coboundary
  auto path = path_graph({Rat(1), Rat(1), Rat(1)}, {1, 1});
  auto rho = form_rho_from_signs({-1, 2});
  CHECK(rho.value == std::vector<int>{-1, 1});
  CHECK(is_coboundary(path, rho).has_value());

  // -3 on a loop is a nontrivial class
  auto loop = loop_graph(Rat(1), 3);
  CHECK_FALSE(is_coboundary(loop, form_rho_from_signs({-3})).has_value());
}

TEST_CASE("normalize_orientation") {
  auto g = path_graph({Rat(-1), Rat(-2), Rat(0)}, {1, 1});
  bool flipped = false;
  auto n = normalize_orientation(g, &flipped);
  CHECK(flipped);
  CHECK(n.charge == std::vector<Rat>{Rat(1), Rat(2), Rat(0)});

  // the intersection indices change sign with the orientation, so a flip
  // negates rho edgewise
  g.rho = Cocycle{{1, -1}};
  auto nr = normalize_orientation(g, &flipped);
  CHECK(flipped);
  REQUIRE(nr.rho.has_value());
  CHECK(nr.rho->value == std::vector<int>{-1, 1});

  auto mixed = path_graph({Rat(1), Rat(-2)}, {1});
  auto nm = normalize_orientation(mixed, &flipped);
  CHECK_FALSE(flipped);
  CHECK(nm.charge == mixed.charge);

  auto zero = path_graph({Rat(0), Rat(0)}, {1});
  auto nz = normalize_orientation(zero, &flipped);
  CHECK_FALSE(flipped);

  // idempotent
  std::mt19937_64 rng(7004);
  for (int it = 0; it < 40; ++it) {
    auto r = oracle::random_connected_graph(rng, 5);
    auto once = normalize_orientation(r);
    auto twice = normalize_orientation(once);
    CHECK(once.charge == twice.charge);
    CHECK((once.rho.has_value() == twice.rho.has_value()));
    if (once.rho) CHECK(once.rho->value == twice.rho->value);
  }
}

TEST_SUITE_END();
