#include "webfold/web2.hpp"

#include <algorithm>
#include <sstream>

#include "webfold/error.hpp"

namespace webfold {

Matching2::Matching2(int n_pairs, std::vector<Arc> arcs) : n_pairs_(n_pairs), arcs_(std::move(arcs)) {
  if (n_pairs_ < 0 || static_cast<int>(arcs_.size()) != n_pairs_) {
    throw Error(ErrorCode::InvalidDiagram, "a matching on 2n points needs exactly n arcs");
  }
  partner_.assign(n_points(), 0);
  for (auto& [a, b] : arcs_) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > n_points() || a == b || partner_[a - 1] || partner_[b - 1]) {
      throw Error(ErrorCode::InvalidDiagram, "arcs are not a perfect matching of 1.." + std::to_string(n_points()));
    }
    partner_[a - 1] = b;
    partner_[b - 1] = a;
  }
  std::sort(arcs_.begin(), arcs_.end());
  for (const auto& [a, b] : arcs_) {
    for (const auto& [c, d] : arcs_) {
      if (a < c && c < b && b < d) {
        throw Error(ErrorCode::InvalidDiagram, "arcs {" + std::to_string(a) + "," + std::to_string(b) + "} and {" +
                                                   std::to_string(c) + "," + std::to_string(d) + "} cross");
      }
    }
  }
}

std::string Matching2::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    os << (i ? " " : "") << '{' << arcs_[i].first << ',' << arcs_[i].second << '}';
  }
  return os.str();
}

std::vector<std::pair<int, int>> nearest_unmatched_pairs(const std::vector<int>& row_of, int open, int close) {
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> stack;
  for (std::size_t i = 0; i < row_of.size(); ++i) {
    int label = static_cast<int>(i) + 1;
    if (row_of[i] == open) {
      stack.push_back(label);
    } else if (row_of[i] == close) {
      if (stack.empty()) throw Error(ErrorCode::NonLatticeWord, "unmatched right end at " + std::to_string(label));
      pairs.emplace_back(stack.back(), label);
      stack.pop_back();
    }
  }
  if (!stack.empty()) throw Error(ErrorCode::NonLatticeWord, "unmatched left end at " + std::to_string(stack.back()));
  return pairs;
}

Matching2 web2_of_tableau(const Tableau& t) {
  const Shape& s = t.shape();
  if (!s.is_straight() || (s.rows() != 0 && (s.rows() != 2 || !s.is_rectangle()))) {
    throw Error(ErrorCode::WrongShape, "2-webs need a 2 x n rectangle, got " + s.to_string());
  }
  std::vector<int> rows;
  for (int v = 1; v <= t.size(); ++v) rows.push_back(t.row_of(v));
  return Matching2(t.size() / 2, nearest_unmatched_pairs(rows, 1, 2));
}

Tableau tableau_of_web2(const Matching2& m) {
  std::string word;
  for (int p = 1; p <= m.n_points(); ++p) word.push_back(m.partner(p) > p ? '1' : '2');
  return Tableau::from_word(word);
}

namespace {

template <typename Relabel>
Matching2 relabel(const Matching2& m, Relabel f) {
  std::vector<Matching2::Arc> arcs;
  for (const auto& [a, b] : m.arcs()) arcs.emplace_back(f(a), f(b));
  return Matching2(m.n_pairs(), std::move(arcs));
}

}  // namespace

Matching2 rotate2(const Matching2& m) {
  const int n = m.n_points();
  return relabel(m, [n](int k) { return k == 1 ? n : k - 1; });
}

Matching2 reflect2(const Matching2& m) {
  const int n = m.n_points();
  return relabel(m, [n](int k) { return complement(k, n); });
}

bool is_symmetrical2(const Matching2& m) { return reflect2(m) == m; }

Matching2 fold2(const Matching2& m) {
  if (!is_symmetrical2(m)) throw Error(ErrorCode::NotSymmetrical, "matching " + m.to_string() + " is not symmetrical");
  const int n = m.n_points();
  const int half = m.n_pairs();
  auto bar = [n](int k) { return complement(k, n); };
  std::vector<Matching2::Arc> arcs;
  for (const auto& [a, b] : m.arcs()) {
    if (b == bar(a)) {
      arcs.emplace_back(bar(2 * a), bar(2 * a) + 1);
    } else if (b <= half) {
      arcs.emplace_back(bar(2 * a), bar(2 * b) + 1);
      arcs.emplace_back(bar(2 * a) + 1, bar(2 * b));
    }
  }
  return Matching2(m.n_pairs(), std::move(arcs));
}

}  // namespace webfold
