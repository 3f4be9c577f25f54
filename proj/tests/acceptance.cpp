// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "webfold/error.hpp"
#include "webfold/mdiagram.hpp"
#include "webfold/oracle.hpp"
#include "webfold/web2.hpp"
#include "webfold/web3.hpp"

using namespace webfold;

namespace {

// Pinned scales and time budgets.
constexpr int kTwoRowMaxN = 8;
constexpr int kThreeRowMaxN = 5;
constexpr int kThreeRowSymmetryMaxN = 4;
constexpr int kLemmaMaxN = 4;
constexpr double kTwoRowBudget = 5.0;
constexpr double kThreeRowBudget = 60.0;

std::vector<VerificationReport> g_reports;

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note << " [" << what << "]";
    }
  }
};

void require_report(Outcome& out, const std::string& id, int max_n, int rows, double budget = 0) {
  VerificationReport r = verify(id, max_n, rows);
  g_reports.push_back(r);
  out.note << ' ' << id << (rows ? "/" + std::to_string(rows) + "r" : "") << " n<=" << max_n << ": "
           << r.instances << " instances, " << r.failures.size() << " failures";
  out.expect(r.instances > 0, id + " ran no instances");
  out.expect(r.passed(), id + " first failure: " + (r.failures.empty() ? "" : r.failures[0].word + " " + r.failures[0].detail));
  if (budget > 0) out.expect(r.elapsed_seconds < budget, id + " over its time budget");
}

ErrorCode raised(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::UnknownTheorem;
}

Outcome criterion1() {
  Outcome o;
  require_report(o, "thm-2byn", kTwoRowMaxN, 2, kTwoRowBudget);
  return o;
}

Outcome criterion2() {
  Outcome o;
  require_report(o, "thm-fw1", kThreeRowMaxN, 3, kThreeRowBudget);
  return o;
}

Outcome criterion3() {
  Outcome o;
  require_report(o, "thm-fw2", kThreeRowMaxN, 3, kThreeRowBudget);
  return o;
}

Outcome criterion4() {
  Outcome o;
  require_report(o, "roundtrip-3web", kThreeRowMaxN, 3);
  o.expect(g_reports.back().instances == 1 + 5 + 42 + 462 + 6006, "instance count");
  return o;
}

Outcome criterion5() {
  Outcome o;
  Tableau t = Tableau::from_word("111122213132223333");
  o.expect(t == Tableau::from_rows({{1, 2, 3, 4, 8, 10}, {5, 6, 7, 12, 13, 14}, {9, 11, 15, 16, 17, 18}}),
           "running example rows");
  PlanarWeb w = web_of_tableau(t);
  o.expect(tableau_of_web(w).word() == "111122213132223333", "distance word");
  o.expect(fold(t).word() == "112212121133332323", "fold word");
  o.expect(domino_of_symmetric_web(w).word() == "112212121133332323", "domino of the web");
  std::vector<int> h;
  for (int j = 0; j <= 9; ++j) h.push_back(w.web_distance(w.boundary_face(j), w.boundary_face(18 - j)));
  o.expect(h == std::vector<int>{0, 1, 2, 4, 6, 4, 3, 2, 2, 0}, "h sequence");

  DominoDecomposition dd = decompose_blocks(fold(t));
  o.expect(dd.vertical_pairs == std::vector<std::pair<int, int>>{{3, 4}, {9, 8}}, "V even");
  o.expect(dd.compression == Tableau::from_rows({{1, 3, 5}, {2, 4, 8}, {6, 7, 9}}), "C even");
  o.expect(canonical(crossed_web(fold(t))) == canonical(w), "crossed web of the fold");

  DominoDecomposition odd = decompose_blocks(Tableau::from_word("111232323"));
  o.expect(odd.vertical_pairs == std::vector<std::pair<int, int>>{{2, 0}, {4, 3}}, "V odd");
  o.expect(odd.compression.to_string() == ".,1/.,3/2,4", "C odd");

  Tableau f = Tableau::from_rows({{1, 3, 4, 7}, {2, 5, 6, 8}});
  Tableau p8 = promote_bounded(f, 8);
  Tableau p6 = promote_bounded(p8, 6);
  Tableau p4 = promote_bounded(p6, 4);
  Tableau p2 = promote_bounded(p4, 2);
  o.expect(p8 == Tableau::from_rows({{1, 2, 3, 6}, {4, 5, 7, 8}}), "P_8");
  o.expect(p6 == Tableau::from_rows({{1, 2, 5, 6}, {3, 4, 7, 8}}), "P_6");
  o.expect(p4 == Tableau::from_rows({{1, 3, 5, 6}, {2, 4, 7, 8}}), "P_4");
  o.expect(p2 == Tableau::from_rows({{1, 3, 5, 6}, {2, 4, 7, 8}}), "P_2");
  o.expect(fold(f) == p2, "fold of the 2x4 example");
  o.expect(fold2(web2_of_tableau(f)) == Matching2(4, {{1, 2}, {3, 4}, {5, 8}, {6, 7}}), "2-web fold");
  o.note << " fixtures checked";
  return o;
}

Outcome criterion6() {
  Outcome o;
  require_report(o, "promotion-rotation", kTwoRowMaxN, 2);
  require_report(o, "promotion-rotation", kThreeRowSymmetryMaxN, 3);
  require_report(o, "evacuation-reflection", kTwoRowMaxN, 2);
  require_report(o, "evacuation-reflection", kThreeRowSymmetryMaxN, 3);
  return o;
}

Outcome criterion7() {
  Outcome o;
  require_report(o, "distance-lemmas", kLemmaMaxN, 3);
  require_report(o, "block-patterns", kLemmaMaxN, 3);
  return o;
}

Outcome criterion8() {
  Outcome o;
  require_report(o, "promotion-order", kTwoRowMaxN, 2);
  require_report(o, "promotion-order", kThreeRowMaxN, 3);
  require_report(o, "fold-domino", kTwoRowMaxN, 2);
  require_report(o, "fold-domino", kThreeRowMaxN, 3);
  return o;
}

Outcome criterion9() {
  Outcome o;
  const std::vector<long long> two{1, 2, 5, 14, 42, 132, 429, 1430};
  const std::vector<long long> three{1, 5, 42, 462, 6006};
  for (int n = 1; n <= kTwoRowMaxN; ++n) {
    Shape s = Shape::rectangle(2, n);
    long long count = static_cast<long long>(enumerate(s).size());
    o.expect(count == two[n - 1] && hook_length_count(s) == two[n - 1], "SYT(" + std::to_string(n) + "," + std::to_string(n) + ")");
  }
  for (int n = 1; n <= kThreeRowMaxN; ++n) {
    Shape s = Shape::rectangle(3, n);
    long long count = static_cast<long long>(enumerate(s).size());
    o.expect(count == three[n - 1] && hook_length_count(s) == three[n - 1], "SYT(n,n,n) n=" + std::to_string(n));
  }
  o.note << " counts 1..1430 and 1..6006 checked";
  return o;
}

Outcome criterion10() {
  Outcome o;
  int scanned = 0;
  for (const auto& r : g_reports) {
    for (const auto& f : r.failures) {
      for (const char* name : {"ConcurrentArcs", "UnrecognizedBlock", "VerticalPairNotAnArc"}) {
        o.expect(f.detail.find(name) == std::string::npos, std::string(name) + " fired in " + r.theorem);
      }
    }
    ++scanned;
  }
  o.expect(scanned > 0, "no suite reports to scan");

  std::vector<BoundaryCoord> b;
  int xs[] = {-6, -4, -2, 8, 9, 12, 13, 24, 25};
  for (int i = 0; i < 9; ++i) b.push_back({i + 1, false, Rational(xs[i])});
  std::vector<Arc> arcs{{0, 3, ArcKind::first, false}, {1, 5, ArcKind::first, false}, {2, 7, ArcKind::first, false},
                        {4, 3, ArcKind::second, false}, {6, 5, ArcKind::second, false}, {8, 7, ArcKind::second, false}};
  GeneralizedMDiagram concurrent(b, arcs);
  o.expect(raised([&] { resolve(concurrent); }) == ErrorCode::ConcurrentArcs, "ConcurrentArcs not raised");
  o.expect(raised([] { decompose_tiling({{1}, {1}, {0}}, true); }) == ErrorCode::UnrecognizedBlock,
           "UnrecognizedBlock not raised");
  DominoDecomposition dd = decompose_blocks(Tableau::from_word("112212121133332323"));
  dd.vertical_pairs = {{3, 5}, {9, 8}};
  o.expect(raised([&] { crossed_diagram(dd); }) == ErrorCode::VerticalPairNotAnArc, "VerticalPairNotAnArc not raised");
  o.note << ' ' << scanned << " suite reports scanned, 3 hand-built triggers";
  return o;
}

}  // namespace

int main() {
  std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                 criterion6, criterion7, criterion8, criterion9, criterion10};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << " exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.ok;
    std::printf("%s criterion %zu:%s (%.2f s)\n", o.ok ? "PASS" : "FAIL", i + 1, o.note.str().c_str(), secs);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
