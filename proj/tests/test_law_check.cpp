#include <doctest.h>

#include "fcmt/law_check.hpp"
#include "fcmt/multicat.hpp"
#include "fcmt/restrict.hpp"
#include "support/fixtures.hpp"

using namespace fcmt;
using namespace fcmt::testing;

TEST_CASE("a lone object with no horizontals passes, counting only vertical laws") {
  SpanUniverse u;
  u.sets.push_back({"X", {"x1"}});
  auto V = span_fc(u);
  LawReport rep = check_fc_laws(*V, {3, 2, 10000, false});
  CHECK(rep.pass);
  CHECK(rep.checked.at("vert-unit-left") > 0);
  CHECK(rep.checked.at("vert-assoc") > 0);
  CHECK(rep.checked.count("cell-unit-left") == 0);
  CHECK(rep.checked.count("cell-assoc") == 0);
}

TEST_CASE("an entirely empty oracle passes without crashing") {
  SpanUniverse u;
  auto V = span_fc(u);
  LawReport rep = check_fc_laws(*V);
  CHECK(rep.pass);
  CHECK(rep.total_checked() == 0);
}

TEST_CASE("the Span oracle over U1 with functions passes at (3,2)") {
  auto V = span_fc(u1_with_functions());
  LawReport rep = check_fc_laws(*V, {3, 2, 10000, false});
  CHECK(rep.pass);
  CHECK(rep.checked.at("cell-unit-left") > 0);
  CHECK(rep.checked.at("cell-unit-right") > 0);
  CHECK(rep.checked.at("cell-assoc") > 0);
}

TEST_CASE("a remapped composite is caught with a witness") {
  // D: X <- {d1,d2} -> X with both legs constant, so (D) => D has 4 cells.
  SpanUniverse u;
  u.sets.push_back({"X", {"x"}});
  SpanData d;
  d.name = "D";
  d.src = d.dst = 0;
  d.apex = {"d1", "d2"};
  d.leg_l = {0, 0};
  d.leg_r = {0, 0};
  u.spans.push_back(d);
  auto base = span_fc(u);
  HorId D = *base->horizontal_named("D");
  Frame f;
  f.source = Path::of({D});
  f.left = base->id_vert(D.src);
  f.right = base->id_vert(D.dst);
  f.target = D;
  auto cs = base->cells(f);
  REQUIRE(cs.size() == 4);
  MutatedComposeOracle V(base, cs[0], cs[1]);
  LawReport rep = check_fc_laws(V, {2, 2, 10000, false});
  CHECK_FALSE(rep.pass);
  REQUIRE(!rep.violations.empty());
  CHECK(!rep.violations.front().witness.empty());
}

TEST_CASE("a corrupted vertical composition is caught") {
  auto base = span_fc(u1_with_functions());
  VertId idx = base->id_vert(base->object(0));
  VertId swap = *base->vertical_named("swapX");
  MutatedVertOracle V(base, idx, idx, swap);  // id o id = swap
  LawReport rep = check_fc_laws(V, {1, 1, 10000, false});
  CHECK_FALSE(rep.pass);
}

TEST_CASE("reports are deterministic and stable under the parallel flag") {
  auto V = span_fc(u1_with_functions());
  CheckBounds serial{2, 2, 10000, false};
  CheckBounds parallel{2, 2, 10000, true};
  LawReport a = check_fc_laws(*V, serial);
  LawReport b = check_fc_laws(*V, serial);
  LawReport c = check_fc_laws(*V, parallel);
  CHECK(a.pass == b.pass);
  CHECK(a.violations == b.violations);
  CHECK(a.checked == b.checked);
  CHECK(a.violations == c.violations);
  CHECK(a.checked == c.checked);
}

TEST_CASE("oversized frames raise BudgetExceeded naming the frame") {
  auto V = endo_multicat(FinSet{"S", {"0", "1", "2"}});
  try {
    check_fc_laws(*V, {2, 2, 100, false});
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(!e.frame.empty());
  }
}

TEST_CASE("restricting verticals to identities preserves cells and laws") {
  auto base = span_fc(u1_with_functions());
  auto R = restrict_verticals_to_identities(base);

  for (ObjectId x : R->objects())
    for (ObjectId y : R->objects()) {
      auto vs = R->verticals(x, y);
      if (x == y) {
        REQUIRE(vs.size() == 1);
        CHECK(vs[0] == base->id_vert(x));
      } else {
        CHECK(vs.empty());
      }
    }

  // Identity-vertical frames keep exactly their original cells.
  HorId A = *base->horizontal_named("A");
  Frame f;
  f.source = Path::of({A});
  f.left = base->id_vert(A.src);
  f.right = base->id_vert(A.dst);
  f.target = A;
  CHECK(R->cells(f) == base->cells(f));

  LawReport rep = check_fc_laws(*R, {3, 2, 10000, false});
  CHECK(rep.pass);

  // Restricting an already-restricted oracle changes nothing frame-by-frame.
  auto RR = restrict_verticals_to_identities(R);
  CHECK(RR->cells(f) == R->cells(f));
  CHECK(RR->verticals(A.src, A.src) == R->verticals(A.src, A.src));
}
