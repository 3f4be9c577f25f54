#include "webfold/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <thread>
#include <tuple>

#include "json.hpp"
#include "webfold/error.hpp"
#include "webfold/mdiagram.hpp"
#include "webfold/web2.hpp"
#include "webfold/web3.hpp"

namespace webfold {

Filter parse_filter(const std::string& name) {
  if (name == "all") return Filter::all;
  if (name == "rotationally-symmetric" || name == "symmetric") return Filter::rotationally_symmetric;
  if (name == "domino") return Filter::domino;
  throw Error(ErrorCode::ParseError, "unknown filter '" + name + "'");
}

std::string to_string(Filter f) {
  switch (f) {
    case Filter::all: return "all";
    case Filter::rotationally_symmetric: return "rotationally-symmetric";
    case Filter::domino: return "domino";
  }
  return "all";
}

// ---------------------------------------------------------------- enumeration

void enumerate(const EnumerationFilter& filter, const std::function<void(const Tableau&)>& visit) {
  const Shape& s = filter.shape;
  const int rows = s.rows();
  const int total = s.size();
  std::vector<int> len(rows);
  std::vector<std::vector<int>> grid(rows);
  for (int r = 0; r < rows; ++r) {
    len[r] = s.inner_length(r + 1);
    grid[r].assign(s.outer_length(r + 1), 0);
  }
  auto accept = [&filter](const Tableau& t) {
    switch (filter.predicate) {
      case Filter::all: return true;
      case Filter::rotationally_symmetric: return is_rotationally_symmetric(t);
      case Filter::domino: return is_domino(t);
    }
    return true;
  };
  std::function<void(int)> place = [&](int value) {
    if (value > total) {
      Tableau t(s, grid);
      if (accept(t)) visit(t);
      return;
    }
    for (int r = 0; r < rows; ++r) {
      if (len[r] >= s.outer_length(r + 1)) continue;
      if (r > 0 && len[r - 1] <= len[r]) continue;
      grid[r][len[r]++] = value;
      place(value + 1);
      grid[r][--len[r]] = 0;
    }
  };
  place(1);
}

std::vector<Tableau> enumerate(const Shape& shape, Filter predicate) {
  std::vector<Tableau> out;
  enumerate({shape, predicate}, [&out](const Tableau& t) { out.push_back(t); });
  return out;
}

boost::multiprecision::cpp_int hook_length_count(const Shape& shape) {
  if (!shape.is_straight()) throw Error(ErrorCode::WrongShape, "hook lengths need a straight shape");
  using boost::multiprecision::cpp_int;
  cpp_int numerator = 1;
  for (int k = 2; k <= shape.size(); ++k) numerator *= k;
  cpp_int hooks = 1;
  for (int r = 1; r <= shape.rows(); ++r) {
    for (int c = 1; c <= shape.outer_length(r); ++c) {
      int below = 0;
      while (r + below + 1 <= shape.rows() && shape.outer_length(r + below + 1) >= c) ++below;
      hooks *= (shape.outer_length(r) - c) + below + 1;
    }
  }
  return numerator / hooks;
}

Tableau rectify_random_order(const Tableau& t, std::mt19937_64& rng) {
  Tableau cur = t;
  while (!cur.shape().is_straight()) {
    std::vector<Cell> corners = cur.shape().inner_corners();
    std::uniform_int_distribution<std::size_t> pick(0, corners.size() - 1);
    cur = slide(cur, corners[pick(rng)]);
  }
  return cur;
}

// ---------------------------------------------------------------- reports

std::string VerificationReport::to_json(bool with_timing) const {
  nlohmann::ordered_json j;
  j["theorem"] = theorem;
  j["max_n"] = max_n;
  j["rows"] = rows;
  j["instances"] = instances;
  j["passed"] = passed();
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : failures) {
    j["failures"].push_back({{"word", f.word}, {"detail", f.detail}, {"expected", f.expected}, {"actual", f.actual}});
  }
  if (with_timing) j["elapsed_seconds"] = elapsed_seconds;
  return j.dump(2);
}

std::string VerificationReport::to_text(bool with_timing) const {
  std::ostringstream os;
  os << theorem << " (n <= " << max_n;
  if (rows) os << ", " << rows << " rows";
  os << "): " << instances << " instances, " << failures.size() << " failures, " << (passed() ? "PASS" : "FAIL");
  if (with_timing) os << " in " << elapsed_seconds << " s";
  os << '\n';
  for (const auto& f : failures) {
    os << "  " << f.word << ": " << f.detail;
    if (!f.expected.empty() || !f.actual.empty()) os << " (expected " << f.expected << ", got " << f.actual << ")";
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------- drivers

namespace {

using Outcome = std::optional<VerificationFailure>;
using Check = std::function<Outcome(const Tableau&)>;

Outcome failure(const Tableau& t, std::string detail, std::string expected = {}, std::string actual = {}) {
  return VerificationFailure{t.word(), std::move(detail), std::move(expected), std::move(actual)};
}

Tableau promote_times(Tableau t, int k) {
  for (int i = 0; i < k; ++i) t = promote(t);
  return t;
}

// A stable per-tableau seed so randomized checks replay identically.
std::uint64_t seed_of(const std::string& word) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : word) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

Outcome check_two_by_n(const Tableau& t) {
  Matching2 lhs = web2_of_tableau(fold(t));
  Matching2 rhs = fold2(web2_of_tableau(t));
  if (lhs != rhs) return failure(t, "folding the 2-web disagrees with the 2-web of the fold", lhs.to_string(), rhs.to_string());
  return std::nullopt;
}

Outcome check_fw1(const Tableau& t) {
  Tableau expected = fold(t);
  Tableau got = domino_of_symmetric_web(web_of_tableau(t));
  if (got != expected) return failure(t, "domino tableau of the web differs from the fold", expected.word(), got.word());
  return std::nullopt;
}

Outcome check_fw2(const Tableau& t) {
  CanonicalWebForm expected = canonical(web_of_tableau(t));
  CanonicalWebForm got = canonical(crossed_web(fold(t)));
  if (!(got == expected)) return failure(t, "crossed web of the fold differs from the web", expected.digest, got.digest);
  return std::nullopt;
}

Outcome check_roundtrip(const Tableau& t) {
  PlanarWeb w = web_of_tableau(t);
  WebValidation report = validate_3web(w);
  if (!report.ok()) return failure(t, "invalid 3-web: " + report.violations.front());
  Tableau back = tableau_of_web(w);
  if (back != t) return failure(t, "distance word does not recover the tableau", t.word(), back.word());
  return std::nullopt;
}

Outcome check_promotion_rotation(const Tableau& t) {
  Tableau p = promote(t);
  if (t.shape().rows() == 2) {
    Matching2 lhs = rotate2(web2_of_tableau(t));
    Matching2 rhs = web2_of_tableau(p);
    if (lhs != rhs) return failure(t, "rotating the 2-web disagrees with promotion", rhs.to_string(), lhs.to_string());
    return std::nullopt;
  }
  CanonicalWebForm lhs = canonical(rotate(web_of_tableau(t)));
  CanonicalWebForm rhs = canonical(web_of_tableau(p));
  if (!(lhs == rhs)) return failure(t, "rotating the web disagrees with promotion", rhs.digest, lhs.digest);
  return std::nullopt;
}

Outcome check_evacuation_reflection(const Tableau& t) {
  Tableau e = evacuate(t);
  bool symmetric = is_rotationally_symmetric(t);
  if (t.shape().rows() == 2) {
    Matching2 w = web2_of_tableau(t);
    Matching2 lhs = reflect2(w);
    Matching2 rhs = web2_of_tableau(e);
    if (lhs != rhs) return failure(t, "reflecting the 2-web disagrees with evacuation", rhs.to_string(), lhs.to_string());
    if (symmetric != is_symmetrical2(w)) return failure(t, "symmetry of tableau and 2-web disagree");
    return std::nullopt;
  }
  PlanarWeb w = web_of_tableau(t);
  CanonicalWebForm lhs = canonical(reflect(w));
  CanonicalWebForm rhs = canonical(web_of_tableau(e));
  if (!(lhs == rhs)) return failure(t, "reflecting the web disagrees with evacuation", rhs.digest, lhs.digest);
  if (symmetric != is_symmetrical(w)) return failure(t, "symmetry of tableau and web disagree");
  return std::nullopt;
}

Outcome check_promotion_order(const Tableau& t) {
  const int n = t.size();
  if (promote_times(t, n) != t) return failure(t, "P^N is not the identity");
  Tableau e = evacuate(t);
  if (evacuate(e) != t) return failure(t, "evacuation is not an involution");
  Tableau rc = rotate180_complement(t);
  if (e != rc) return failure(t, "evacuation differs from the rotated complement", rc.word(), e.word());
  if (promote_inverse(promote(t)) != t) return failure(t, "inverse promotion does not undo promotion");
  std::mt19937_64 rng(seed_of(t.word()));
  Tableau pk = t;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) pk = promote(pk);
    if (k < n) {
      Tableau lhs = lower_part(pk, n - k);
      Tableau rhs = rectify(upper_part(t, k));
      if (lhs != rhs) return failure(t, "P^k(T) below N-k is not Rect(T above k) at k=" + std::to_string(k), rhs.word(), lhs.word());
      Tableau random = rectify_random_order(upper_part(t, k), rng);
      if (random != rhs) return failure(t, "rectification depends on slide order at k=" + std::to_string(k), rhs.word(), random.word());
    }
    if (k > 0) {
      Tableau lhs = lower_part(t, k);
      Tableau rhs = rectify(upper_part(pk, n - k));
      if (lhs != rhs) return failure(t, "T below k is not Rect(P^k(T) above N-k) at k=" + std::to_string(k), rhs.word(), lhs.word());
    }
  }
  return std::nullopt;
}

Outcome check_fold_domino(const Tableau& t) {
  const int n = t.size();
  Tableau f = fold(t);
  if (is_rotationally_symmetric(t) != is_domino(f)) return failure(t, "symmetry does not match the domino property of the fold", "", f.word());
  if (unfold(f) != t) return failure(t, "unfold does not undo fold", t.word(), unfold(f).word());
  Tableau pj = t;
  for (int j = 1; j <= n / 2; ++j) {
    pj = promote(pj);
    int k = complement(2 * j, n);
    Tableau lhs = lower_part(partial_fold(t, j), k);
    Tableau rhs = lower_part(pj, k);
    if (lhs != rhs) return failure(t, "f^j and P^j differ below N+1-2j at j=" + std::to_string(j), rhs.word(), lhs.word());
  }
  if (is_rotationally_symmetric(t)) {
    Tableau prev = t;
    for (int j = 1; j <= (n + 1) / 2; ++j) {
      int entry = complement(2 * j, n) + 1;
      if (entry <= n && f.position(entry) != prev.position(entry)) {
        return failure(t, "entry " + std::to_string(entry) + " of F(T) is not where P^" + std::to_string(j - 1) + "(T) has it");
      }
      prev = promote(prev);
    }
  }
  return std::nullopt;
}

bool directed_toward(const GeneralizedMDiagram& m, int arc, int other, bool by_tail) {
  Rational lo = std::min(m.left_x(arc), m.left_x(other));
  Rational hi = std::max(m.right_x(arc), m.right_x(other));
  Rational end = by_tail ? m.tail_x(arc) : m.head_x(arc);
  return end == lo || end == hi;
}

Outcome check_distance_lemmas(const Tableau& t) {
  Tableau d = fold(t);
  DominoDecomposition dd = decompose_blocks(d);
  GeneralizedMDiagram m = crossed_diagram(dd);
  PlanarWeb w = resolve(m);
  WebValidation report = validate_3web(w);
  if (!report.ok()) return failure(t, "crossed web is not a 3-web: " + report.violations.front());
  ArcFaceIndex index(m, w);

  const int n_arcs = static_cast<int>(m.arcs().size());
  for (int a = 0; a < n_arcs; ++a) {
    for (int b = a + 1; b < n_arcs; ++b) {
      const Arc& x = m.arcs()[a];
      const Arc& y = m.arcs()[b];
      if (!arcs_cross(m, a, b) && x.head != y.head) continue;
      bool ok = false;
      if (!x.crossed && !y.crossed) ok = x.kind != y.kind;
      if (x.crossed && y.crossed) ok = index.mirror_arcs()[a] == b;
      for (auto [c, u] : {std::pair{a, b}, std::pair{b, a}}) {
        const Arc& cr = m.arcs()[c];
        const Arc& un = m.arcs()[u];
        if (!cr.crossed || un.crossed) continue;
        if (cr.kind == ArcKind::first && un.kind == ArcKind::second) ok = ok || directed_toward(m, u, c, true);
        if (cr.kind == ArcKind::second && un.kind == ArcKind::first) ok = ok || directed_toward(m, u, c, false);
      }
      if (!ok) return failure(t, "arcs " + m.arc_label(a) + " and " + m.arc_label(b) + " meet outside cases (a)-(d)");
    }
  }

  std::vector<int> faces;
  for (int f = 0; f < w.n_faces(); ++f) {
    if (f != w.exterior_face()) faces.push_back(f);
  }
  for (int x : faces) {
    std::vector<int> dist = w.distances_from(x);
    for (int y : faces) {
      int bound = index.arc_distance(x, y) - static_cast<int>(index.coherent_separators(x, y).size());
      if (dist[y] < bound) {
        return failure(t, "webdist below arcdist - |CS| for faces " + std::to_string(x) + "," + std::to_string(y),
                       std::to_string(bound), std::to_string(dist[y]));
      }
    }
    int xm = index.mirror_face(x);
    int expected = index.arc_distance(x, xm) - index.epsilon(x);
    if (dist[xm] != expected) {
      return failure(t, "webdist(X,X') differs from arcdist - epsilon at face " + std::to_string(x), std::to_string(expected),
                     std::to_string(dist[xm]));
    }
    if (index.epsilon(x)) {
      auto cs = index.coherent_separators(x, xm);
      if (cs.size() != 1 || !m.arcs()[cs[0].first].crossed || index.mirror_arcs()[cs[0].first] != cs[0].second) {
        return failure(t, "CS(X,X') is not the crossed vertical pair at face " + std::to_string(x), "1",
                       std::to_string(cs.size()));
      }
    }
  }

  if (!dd.odd) {
    const int half = dd.n_labels;
    PlanarWeb wc = web_of_tableau(dd.compression);
    std::vector<int> dc = wc.distances_from(wc.boundary_face(0));
    for (int k = 0; k <= half; ++k) {
      int lhs = index.arc_distance(w.boundary_face(half + k), w.boundary_face(half - k));
      int rhs = 2 * dc[wc.boundary_face(k)];
      if (lhs != rhs) return failure(t, "arcdist(A_k,A_k') is not 2 webdist(B_k,B_0) at k=" + std::to_string(k), std::to_string(rhs), std::to_string(lhs));
    }
  }
  return std::nullopt;
}

Outcome check_block_patterns(const Tableau& d) {
  for (int step = -2; step <= 2; ++step) {
    auto [a, b] = lambda_pair(step);
    if ((a - 2) + (b - 2) != step) return failure(d, "Lambda is not the sum of two Phi steps at " + std::to_string(step));
  }
  DominoDecomposition dd = decompose_blocks(d);
  int col = 1;
  for (const DominoBlock& b : dd.blocks) {
    if (b.first_col != col || b.last_col < b.first_col) return failure(d, "blocks do not tile the columns");
    col = b.last_col + 1;
  }
  if (col != d.shape().outer_length(1) + 1) return failure(d, "blocks do not cover every column");
  std::vector<int> seen(dd.n_labels + 1, 0);
  for (auto [k1, k2] : dd.vertical_pairs) {
    if (seen[k1]++ || (k2 != 0 && seen[k2]++)) return failure(d, "vertical pairs share a domino");
  }
  std::vector<int> delta(dd.n_labels + 1, 0);
  for (auto [k1, k2] : dd.vertical_pairs) {
    if (k2 == 0) {
      delta[k1] = -1;
    } else {
      delta[std::min(k1, k2)] = 1;
      delta[std::max(k1, k2)] = -1;
    }
  }
  const std::string u = d.word();
  const int n = d.size();
  for (int k = 1; k <= dd.n_labels; ++k) {
    int j = dd.n_labels + 1 - k;
    int pos = complement(2 * j, n);
    auto [a, b] = lambda_pair(2 * (dd.rows[k - 1] - 2) + delta[k]);
    if (u[pos - 1] - '0' != a || u[pos] - '0' != b) {
      return failure(d, "domino " + std::to_string(k) + " does not match its compression row", std::to_string(a) + std::to_string(b),
                     u.substr(pos - 1, 2));
    }
  }
  crossed_diagram(dd);
  return std::nullopt;
}

struct TheoremEntry {
  std::vector<int> rows;
  Filter filter;
  Check check;
};

const std::map<std::string, TheoremEntry>& registry() {
  static const std::map<std::string, TheoremEntry> entries = {
      {"thm-2byn", {{2}, Filter::rotationally_symmetric, check_two_by_n}},
      {"thm-fw1", {{3}, Filter::rotationally_symmetric, check_fw1}},
      {"thm-fw2", {{3}, Filter::rotationally_symmetric, check_fw2}},
      {"roundtrip-3web", {{3}, Filter::all, check_roundtrip}},
      {"promotion-rotation", {{2, 3}, Filter::all, check_promotion_rotation}},
      {"evacuation-reflection", {{2, 3}, Filter::all, check_evacuation_reflection}},
      {"promotion-order", {{2, 3}, Filter::all, check_promotion_order}},
      {"fold-domino", {{2, 3}, Filter::all, check_fold_domino}},
      {"distance-lemmas", {{3}, Filter::rotationally_symmetric, check_distance_lemmas}},
      {"block-patterns", {{3}, Filter::domino, check_block_patterns}},
  };
  return entries;
}

std::vector<VerificationFailure> run_pool(const std::vector<Tableau>& items, const Check& check) {
  const int workers = std::max(1, std::min<int>(worker_count(), static_cast<int>(items.size())));
  std::vector<std::vector<VerificationFailure>> found(workers);
  std::atomic<std::size_t> next{0};
  auto work = [&](int id) {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      Outcome out;
      try {
        out = check(items[i]);
      } catch (const std::exception& e) {
        out = failure(items[i], e.what());
      }
      if (out) found[id].push_back(std::move(*out));
    }
  };
  std::vector<std::thread> threads;
  for (int id = 1; id < workers; ++id) threads.emplace_back(work, id);
  work(0);
  for (auto& th : threads) th.join();
  std::vector<VerificationFailure> all;
  for (auto& f : found) all.insert(all.end(), f.begin(), f.end());
  return all;
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {"thm-2byn",      "thm-fw1",         "thm-fw2",
                                               "roundtrip-3web", "promotion-rotation", "evacuation-reflection",
                                               "promotion-order", "fold-domino",     "distance-lemmas",
                                               "block-patterns"};
  return ids;
}

int worker_count() {
  if (const char* env = std::getenv("WEBFOLD_WORKERS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

VerificationReport verify(const std::string& theorem_id, int max_n, int rows) {
  auto it = registry().find(theorem_id);
  if (it == registry().end()) throw Error(ErrorCode::UnknownTheorem, "'" + theorem_id + "'");
  const TheoremEntry& entry = it->second;
  if (rows != 0 && std::find(entry.rows.begin(), entry.rows.end(), rows) == entry.rows.end()) {
    throw Error(ErrorCode::OutOfRange, theorem_id + " has no " + std::to_string(rows) + "-row family");
  }
  auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.theorem = theorem_id;
  report.max_n = max_n;
  report.rows = rows;
  for (int r : entry.rows) {
    if (rows != 0 && r != rows) continue;
    for (int n = 1; n <= max_n; ++n) {
      std::vector<Tableau> items = enumerate(Shape::rectangle(r, n), entry.filter);
      report.instances += static_cast<long long>(items.size());
      auto failures = run_pool(items, entry.check);
      report.failures.insert(report.failures.end(), failures.begin(), failures.end());
    }
  }
  std::sort(report.failures.begin(), report.failures.end(), [](const auto& a, const auto& b) {
    return std::make_tuple(a.word.size(), a.word, a.detail) < std::make_tuple(b.word.size(), b.word, b.detail);
  });
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace webfold
