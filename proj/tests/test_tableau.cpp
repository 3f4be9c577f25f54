#include "support.hpp"
#include "webfold/tableau.hpp"

using namespace webfold;
using webfold::test::code_of;

TEST_CASE("shapes") {
  Shape s({5, 5, 4, 4}, {3, 1});
  CHECK(s.size() == 14);
  CHECK_FALSE(s.is_straight());
  CHECK(s.inner_corners() == std::vector<Cell>{{1, 3}, {2, 1}});
  CHECK(Shape::rectangle(3, 4).is_rectangle());
  CHECK_FALSE(Shape({3, 2}).is_rectangle());
  CHECK(code_of([] { Shape({2, 3}); }) == ErrorCode::InvalidTableau);
}

TEST_CASE("row words") {
  Tableau t = Tableau::from_rows({{1, 3, 4, 7}, {2, 5, 6, 8}});
  CHECK(t.word() == "12112212");
  CHECK(Tableau::from_word("12112212") == t);
  CHECK(t.to_string() == "1,3,4,7/2,5,6,8");
  CHECK(is_lattice_word("112212"));
  CHECK_FALSE(is_lattice_word("1221"));
  CHECK(code_of([] { Tableau::from_word("1221"); }) == ErrorCode::NonLatticeWord);
  CHECK(code_of([] { Tableau::from_rows({{1, 2}, {4, 3}}); }) == ErrorCode::InvalidTableau);
  CHECK(code_of([] { Tableau::from_rows({{2, 1}}); }) == ErrorCode::InvalidTableau);
  CHECK(code_of([] { Tableau::from_rows({{1, 2}, {3, 5}}); }) == ErrorCode::InvalidTableau);
}

TEST_CASE("skew words") {
  Tableau c = Tableau::from_word(Shape({2, 2, 2}, {1, 1}), "1323");
  CHECK(c.to_string() == ".,1/.,3/2,4");
  CHECK(c.word() == "1323");
}

TEST_CASE("a single slide moves toward the smaller entry") {
  Shape shape({5, 5, 4, 4}, {3, 1});
  Tableau t(shape, {{0, 0, 0, 1, 9}, {0, 2, 3, 11, 12}, {4, 6, 7, 13}, {5, 8, 10, 14}});
  Tableau s = slide(t, {2, 1});
  CHECK(s.shape() == Shape({5, 5, 4, 3}, {3}));
  CHECK(s.to_string() == ".,.,.,1,9/2,3,7,11,12/4,6,10,13/5,8,14");
  CHECK(code_of([&] { slide(t, {1, 2}); }) == ErrorCode::NotACorner);
}

TEST_CASE("rectification reaches a straight shape") {
  Shape shape({5, 5, 4, 4}, {3, 1});
  Tableau t(shape, {{0, 0, 0, 1, 9}, {0, 2, 3, 11, 12}, {4, 6, 7, 13}, {5, 8, 10, 14}});
  Tableau r = rectify(t);
  CHECK(r.shape().is_straight());
  CHECK(r.size() == 14);
}

TEST_CASE("promotion of a 3x3 tableau") {
  Tableau t = Tableau::from_rows({{1, 2, 5}, {3, 4, 8}, {6, 7, 9}});
  CHECK(promote(t) == Tableau::from_rows({{1, 3, 4}, {2, 6, 7}, {5, 8, 9}}));
  CHECK(promote_inverse(promote(t)) == t);
  CHECK(promote_bounded(t, 1) == t);
  CHECK(promote_bounded(t, 9) == promote(t));
}

TEST_CASE("folding passes through the bounded promotions") {
  Tableau t = Tableau::from_rows({{1, 3, 4, 7}, {2, 5, 6, 8}});
  Tableau a = promote_bounded(t, 8);
  CHECK(a == Tableau::from_rows({{1, 2, 3, 6}, {4, 5, 7, 8}}));
  Tableau b = promote_bounded(a, 6);
  CHECK(b == Tableau::from_rows({{1, 2, 5, 6}, {3, 4, 7, 8}}));
  Tableau c = promote_bounded(b, 4);
  CHECK(c == Tableau::from_rows({{1, 3, 5, 6}, {2, 4, 7, 8}}));
  Tableau d = promote_bounded(c, 2);
  CHECK(d == c);
  CHECK(fold(t) == d);
  CHECK(fold(t).word() == "12121122");
  CHECK(partial_fold(t, 1) == a);
  CHECK(partial_fold(t, 2) == b);
  CHECK(unfold(fold(t)) == t);
  CHECK(is_domino(fold(t)));
  CHECK(is_domino(t));
  CHECK_FALSE(is_domino(Tableau::from_rows({{1, 2, 4, 7}, {3, 5, 6, 8}})));
}

TEST_CASE("evacuation on rectangles") {
  Tableau t = Tableau::from_word("111122213132223333");
  CHECK(is_rotationally_symmetric(t));
  CHECK(evacuate(t) == t);
  CHECK(rotate180_complement(t) == t);
  Tableau u = Tableau::from_word("112233");
  CHECK(evacuate(u) == rotate180_complement(u));
  CHECK(evacuate(evacuate(u)) == u);
}

TEST_CASE("fold of the running 3-row example") {
  Tableau t = Tableau::from_word("111122213132223333");
  CHECK(t == Tableau::from_rows({{1, 2, 3, 4, 8, 10}, {5, 6, 7, 12, 13, 14}, {9, 11, 15, 16, 17, 18}}));
  CHECK(fold(t).word() == "112212121133332323");
  CHECK(is_domino(fold(t)));
}

TEST_CASE("domino detection") {
  CHECK(is_domino(Tableau::from_word("111232323")));
  CHECK(is_domino(Tableau::from_word("123")));
  CHECK(is_domino(Tableau::from_word("112323")));
  CHECK_FALSE(is_domino(Tableau::from_word("121323")));
}

TEST_CASE("sub-tableaux") {
  Tableau t = Tableau::from_rows({{1, 2, 5}, {3, 4, 8}, {6, 7, 9}});
  CHECK(lower_part(t, 4).to_string() == "1,2/3,4");
  Tableau up = upper_part(t, 4);
  CHECK(up.to_string() == ".,.,1/.,.,4/2,3,5");
  CHECK(code_of([&] { lower_part(t, 10); }) == ErrorCode::OutOfRange);
}
