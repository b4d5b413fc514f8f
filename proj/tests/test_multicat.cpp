#include <doctest.h>

#include "fcmt/compose.hpp"
#include "fcmt/law_check.hpp"
#include "fcmt/multicat.hpp"

using namespace fcmt;

namespace {

std::vector<std::vector<std::uint32_t>> z3_table() {
  return {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
}

}  // namespace

TEST_CASE("the terminal multicategory has one cell per frame and passes the laws") {
  auto V = multicat_fc(terminal_multicat(3));
  HorId x = V->color(0);
  VertId one = V->id_vert(ObjectId{0});
  for (std::size_t n = 0; n <= 3; ++n) {
    Frame f;
    f.source = n ? Path::of(std::vector<HorId>(n, x)) : Path::empty_at(ObjectId{0});
    f.left = f.right = one;
    f.target = x;
    CHECK(V->cells(f).size() == 1);
  }
  CHECK(check_fc_laws(*V, {3, 2, 10000, false}).pass);
}

TEST_CASE("the Z/3 multicategory multiplies operations out left to right") {
  auto V = multicat_fc(monoid_multicat({"0", "1", "2"}, z3_table(), 0, 3));
  HorId m = V->color(0);
  VertId one = V->id_vert(ObjectId{0});

  Frame unary;
  unary.source = Path::of({m});
  unary.left = unary.right = one;
  unary.target = m;
  auto us = V->cells(unary);
  CHECK(us.size() == 3);

  // theta = 1/2 composed over children (1/1, 2/1) is (1+1+2)/2 = 1/2... the
  // element is 1+1+2 = 1 mod 3 and the arity is 2.
  TwoCell theta = V->cell_of_op("1/2");
  TwoCell c1 = V->cell_of_op("1/1");
  TwoCell c2 = V->cell_of_op("2/1");
  TwoCell got = compose_cells(*V, theta, std::vector<TwoCell>{c1, c2},
                              std::vector<VertId>{one, one, one});
  CHECK(V->presentation().ops[V->op_of_cell(got)].name == "1/2");

  CHECK(check_fc_laws(*V, {3, 2, 10000, false}).pass);
}

TEST_CASE("frames above the arity bound are refused") {
  auto V = multicat_fc(terminal_multicat(2));
  HorId x = V->color(0);
  VertId one = V->id_vert(ObjectId{0});
  Frame f;
  f.source = Path::of(std::vector<HorId>(3, x));
  f.left = f.right = one;
  f.target = x;
  CHECK_THROWS_AS(V->cells(f), ArityBoundExceeded);
}

TEST_CASE("presentations violating the multicategory laws are rejected") {
  auto p = monoid_multicat({"0", "1", "2"}, z3_table(), 0, 2);
  // Remap one composition entry: (1/1) o (1/1) is 2/1; claim 0/1 instead.
  auto idx = [&](const std::string& name) { return *p.op_index(name); };
  p.compose[{idx("1/1"), idx("1/1")}] = idx("0/1");
  CHECK_THROWS_AS(multicat_fc(p), MalformedPresentation);
}

TEST_CASE("the endomorphism multicategory composes by substitution") {
  auto V = endo_multicat(FinSet{"S", {"0", "1"}});
  // xor as a binary table over lexicographic (x1, x2), last fastest.
  TwoCell x = V->make_op(2, {0, 1, 1, 0});
  TwoCell neg = V->make_op(1, {1, 0});
  VertId one = V->id_vert(ObjectId{0});
  // xor(neg(a), b): table over (a,b): (0,0)->1,(0,1)->0,(1,0)->0,(1,1)->1
  TwoCell got = compose_cells(*V, x, std::vector<TwoCell>{neg, V->id_cell(V->hom())},
                              std::vector<VertId>{one, one, one});
  CHECK(V->op_table(got) == std::vector<std::uint32_t>{1, 0, 0, 1});

  CHECK(check_fc_laws(*V, {2, 2, 10000, false}).pass);
}

TEST_CASE("nullary endo operations act as constants") {
  auto V = endo_multicat(FinSet{"S", {"0", "1"}});
  TwoCell k1 = V->make_op(0, {1});
  TwoCell neg = V->make_op(1, {1, 0});
  VertId one = V->id_vert(ObjectId{0});
  TwoCell got =
      compose_cells(*V, neg, std::vector<TwoCell>{k1}, std::vector<VertId>{one, one});
  CHECK(got.frame.arity() == 0);
  CHECK(V->op_table(got) == std::vector<std::uint32_t>{0});
}
