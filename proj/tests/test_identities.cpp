#include <doctest.h>

#include "c2lab/error.hpp"
#include "c2lab/families.hpp"
#include "c2lab/identities.hpp"

using namespace c2lab;

TEST_CASE("identity names round-trip") {
  for (Identity id : all_identities()) CHECK(identity_from_name(identity_name(id)) == id);
  CHECK_FALSE(identity_from_name("nope").has_value());
}

TEST_CASE("all identities on connected graphs with <= 5 edges") {
  const auto graphs = connected_multigraphs(5, true);
  for (Identity id : all_identities()) {
    INFO(identity_name(id));
    for (const Graph& g : graphs) {
      const IdentityResult r = check_identity_all(id, g);
      CHECK(r.holds);
    }
  }
}

TEST_CASE("dodgson coefficient sign on K4") {
  const Graph k4 = family("complete", 4);
  const IdentityResult r = check_identity(Identity::DodgsonCoefficient, k4, {.e1 = 1, .e2 = 6});
  CHECK(r.holds);
  CHECK(r.witnesses.count("sign=-1") == 1);
}

TEST_CASE("first type identity needs the flipped sign for some label orders") {
  const Graph g(3, {{1, 2}, {1, 3}, {1, 3}, {2, 3}, {2, 3}});
  const IdentityResult r = check_identity(Identity::DualDodgsonFirst, g, {.a = 1, .b = 4, .x = 2});
  CHECK(r.holds);
  CHECK(r.witnesses.count("flipped,sign=+1") == 1);
  const IdentityResult r2 = check_identity(Identity::DualDodgsonFirst, g, {.a = 1, .b = 4, .x = 5});
  CHECK(r2.holds);
  CHECK(r2.witnesses.count("flipped,sign=+1") == 0);
}

TEST_CASE("resultant lemma variant") {
  const std::string corrected = "+phi^{ij,ik}phi^{j,k}-phi^{ij,jk}phi^{i,k}";
  const std::string printed = "+phi^{ij,jk}phi^{j,k}-phi^{ij,jk}phi^{i,k}";
  const IdentityResult r = check_identity_all(Identity::ResultantLemma, family("complete", 4));
  CHECK(r.holds);
  CHECK(r.instances == 120);
  CHECK(r.witnesses.at(corrected) == r.instances);
  const auto it = r.witnesses.find(printed);
  CHECK((it == r.witnesses.end() || it->second < r.instances));
}

TEST_CASE("corolla and cycle sign assignments") {
  const Graph w = family("wheel", 4);
  const IdentityResult c = check_identity_all(Identity::Corolla, w);
  CHECK(c.holds);
  CHECK(c.instances == 2 * w.edge_count());
  const IdentityResult y = check_identity_all(Identity::CycleSum, w);
  CHECK(y.holds);
  CHECK(y.instances > 0);
}

TEST_CASE("bad indices") {
  const Graph k4 = family("complete", 4);
  CHECK_THROWS_AS(check_identity(Identity::DodgsonCoefficient, k4, {.e1 = 2, .e2 = 2}), Error);
  CHECK_THROWS_AS(check_identity(Identity::Tadpole, k4, {.e1 = 1}), Error);
  CHECK_THROWS_AS(check_identity(Identity::CycleSum, k4, {.e1 = 1, .edges = EdgeSet{1, 2}}), Error);
  CHECK_THROWS_AS(check_identity(Identity::DualDodgsonFirst, k4, {.i = {1}, .j = {2}, .a = 1, .b = 3, .x = 4}),
                  Error);
  CHECK_THROWS_AS(check_identity(Identity::ResultantLemma, k4, {.e1 = 1, .e2 = 2, .e3 = 9}), Error);
}
