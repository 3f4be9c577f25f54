#include "support.hpp"
#include "webfold/web3.hpp"

using namespace webfold;
using webfold::test::code_of;

namespace {

const char* kFig1 = "111122213132223333";
const char* kFig1Fold = "112212121133332323";
const char* kOdd = "111232323";

}  // namespace

TEST_CASE("phi and lambda") {
  CHECK(phi(-1) == 1);
  CHECK(phi(0) == 2);
  CHECK(phi(1) == 3);
  CHECK(code_of([] { phi(2); }) == ErrorCode::NotAWeb);
  CHECK(lambda_pair(-2) == std::pair{1, 1});
  CHECK(lambda_pair(-1) == std::pair{1, 2});
  CHECK(lambda_pair(0) == std::pair{2, 2});
  CHECK(lambda_pair(1) == std::pair{2, 3});
  CHECK(lambda_pair(2) == std::pair{3, 3});
  for (int z = -2; z <= 2; ++z) {
    auto [a, b] = lambda_pair(z);
    CHECK((a - 2) + (b - 2) == z);
  }
}

TEST_CASE("distance word of the running example") {
  PlanarWeb w = web_of_tableau(Tableau::from_word(kFig1));
  CHECK(tableau_of_web(w).word() == kFig1);
  CHECK(canonical(w).digest == "290bfc691117e5265ede69a792bec8b88bae6b075595a7ee9cba2ac89cb07ca9");
}

TEST_CASE("mirror distances of the running example") {
  PlanarWeb w = web_of_tableau(Tableau::from_word(kFig1));
  std::vector<int> h;
  for (int j = 0; j <= 9; ++j) h.push_back(w.web_distance(w.boundary_face(j), w.boundary_face(18 - j)));
  CHECK(h == std::vector<int>{0, 1, 2, 4, 6, 4, 3, 2, 2, 0});
  CHECK(domino_of_symmetric_web(w).word() == kFig1Fold);
}

TEST_CASE("blocks of the folded running example") {
  DominoDecomposition dd = decompose_blocks(Tableau::from_word(kFig1Fold));
  CHECK_FALSE(dd.odd);
  CHECK(dd.n_labels == 9);
  CHECK(dd.blocks == std::vector<DominoBlock>{{3, 1, 2}, {1, 3, 4}, {2, 5, 6}});
  CHECK(dd.vertical_pairs == std::vector<std::pair<int, int>>{{3, 4}, {9, 8}});
  CHECK(dd.compression == Tableau::from_rows({{1, 3, 5}, {2, 4, 8}, {6, 7, 9}}));
  CHECK(dd.compression.word() == "121213323");
  CHECK_FALSE(dd.compression0.has_value());
}

TEST_CASE("the running example is recovered from its fold") {
  Tableau d = Tableau::from_word(kFig1Fold);
  PlanarWeb crossed = crossed_web(d);
  CHECK(validate_3web(crossed).ok());
  CHECK(canonical(crossed) == canonical(web_of_tableau(Tableau::from_word(kFig1))));
}

TEST_CASE("odd example") {
  Tableau d = Tableau::from_word(kOdd);
  DominoDecomposition dd = decompose_blocks(d);
  CHECK(dd.odd);
  CHECK(dd.n_labels == 4);
  CHECK(dd.vertical_pairs == std::vector<std::pair<int, int>>{{2, 0}, {4, 3}});
  CHECK(dd.blocks == std::vector<DominoBlock>{{0, 1, 1}, {2, 2, 3}});
  CHECK(dd.compression.to_string() == ".,1/.,3/2,4");
  REQUIRE(dd.compression0.has_value());
  // C_0 holds label i as i + 1.
  CHECK(dd.compression0->to_string() == ".,2/1,4/3,5");
  GeneralizedMDiagram m = crossed_diagram(dd);
  CHECK(m.n_boundary() == 9);
  CHECK(m.boundary()[4].label() == "0");
  PlanarWeb w = crossed_web(d);
  CHECK(canonical(w) == canonical(web_of_tableau(unfold(d))));
  CHECK(domino_of_symmetric_web(w) == d);
}

TEST_CASE("folding the web of 1..9 in three rows") {
  Tableau t = Tableau::from_word("111222333");
  CHECK(fold(t).word() == kOdd);
}

TEST_CASE("single column") {
  Tableau t = Tableau::from_word("123");
  PlanarWeb w = web_of_tableau(t);
  CHECK(w.n_internal() == 1);
  CHECK(domino_of_symmetric_web(w) == t);
  CHECK(canonical(crossed_web(t)) == canonical(w));
}

TEST_CASE("web3 errors") {
  CHECK(code_of([] { web_of_tableau(Tableau::from_word("1122")); }) == ErrorCode::WrongShape);
  CHECK(code_of([] { domino_of_symmetric_web(web_of_tableau(Tableau::from_word("112323"))); }) ==
        ErrorCode::NotSymmetrical);
  CHECK(code_of([] { decompose_blocks(Tableau::from_word("121323")); }) == ErrorCode::NotDomino);
}

TEST_CASE("tilings outside the block patterns") {
  // The lone cell at the bottom of the first column.
  CHECK(code_of([] { decompose_tiling({{1}, {1}, {0}}, true); }) == ErrorCode::UnrecognizedBlock);
  // A lone vertical domino opening the tiling, with the lone cell further right.
  CHECK(code_of([] { decompose_tiling({{1, 1, 0}, {2, 3, 3}, {2, 4, 4}}, true); }) == ErrorCode::UnrecognizedBlock);
  CHECK(code_of([] { decompose_tiling({{1, 2}, {1, 3}, {4, 3}}, false); }) == ErrorCode::NotDomino);
  CHECK(code_of([] { decompose_tiling({{1}, {1}, {0}}, false); }) == ErrorCode::NotDomino);

  BlockSplit wide = decompose_tiling({{1, 3, 3, 6}, {1, 4, 4, 6}, {2, 2, 5, 5}}, false);
  CHECK(wide.blocks == std::vector<DominoBlock>{{1, 1, 4}});
  CHECK(wide.vertical_pairs == std::vector<std::pair<int, int>>{{1, 6}});
  CHECK(wide.rows == std::vector<int>{1, 3, 1, 2, 3, 2});
}

TEST_CASE("vertical pairs must be arcs") {
  // Block types 1 and 2 ask for (k1,k2) to be an arc of the compression's
  // m-diagram. A hand-built decomposition whose pair is no arc is refused.
  DominoDecomposition dd = decompose_blocks(Tableau::from_word(kFig1Fold));
  dd.vertical_pairs = {{3, 5}, {9, 8}};
  CHECK(code_of([&] { crossed_diagram(dd); }) == ErrorCode::VerticalPairNotAnArc);
  dd.vertical_pairs = {{3, 4}, {4, 3}};
  CHECK(code_of([&] { crossed_diagram(dd); }) == ErrorCode::VerticalPairNotAnArc);
}
