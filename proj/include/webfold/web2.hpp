#pragma once

// 2-webs: noncrossing perfect matchings on 1..2n, in bijection with SYT(n,n).

#include <string>
#include <utility>
#include <vector>

#include "webfold/tableau.hpp"

namespace webfold {

/// Arcs are stored as (left, right) pairs sorted by left endpoint.
class Matching2 {
 public:
  using Arc = std::pair<int, int>;

  Matching2() = default;
  Matching2(int n_pairs, std::vector<Arc> arcs);

  int n_pairs() const { return n_pairs_; }
  int n_points() const { return 2 * n_pairs_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  int partner(int point) const { return partner_[point - 1]; }

  std::string to_string() const;

  bool operator==(const Matching2&) const = default;

 private:
  int n_pairs_ = 0;
  std::vector<Arc> arcs_;
  std::vector<int> partner_;
};

/// Pairs each occurrence of `close` with the nearest unmatched `open` to its
/// left, scanning positions 1..word.size(). Letters other than open/close are
/// skipped. Returns (left, right) pairs in the order the right ends appear.
std::vector<std::pair<int, int>> nearest_unmatched_pairs(const std::vector<int>& row_of, int open, int close);

Matching2 web2_of_tableau(const Tableau& t);
Tableau tableau_of_web2(const Matching2& m);

Matching2 rotate2(const Matching2& m);
Matching2 reflect2(const Matching2& m);
bool is_symmetrical2(const Matching2& m);

/// Folds a symmetrical matching to the right across its axis.
Matching2 fold2(const Matching2& m);

}  // namespace webfold
