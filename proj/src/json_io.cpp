#include "webfold/json_io.hpp"

#include "webfold/error.hpp"

namespace webfold {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("field \"") + key + "\": " + e.what());
  }
}

EdgeTag parse_tag(const std::string& s) {
  if (s == "arc") return EdgeTag::arc;
  if (s == "intersection") return EdgeTag::intersection;
  if (s == "boundary") return EdgeTag::boundary;
  bad("unknown edge tag \"" + s + "\"");
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(e.what());
  }
}

Rational parse_rational(const std::string& text) {
  try {
    std::size_t slash = text.find('/');
    std::size_t used = 0;
    long long num = std::stoll(text.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? text.size() : slash)) bad("bad rational \"" + text + "\"");
    if (slash == std::string::npos) return Rational(num);
    long long den = std::stoll(text.substr(slash + 1), &used);
    if (used != text.size() - slash - 1 || den == 0) bad("bad rational \"" + text + "\"");
    return Rational(num, den);
  } catch (const std::logic_error&) {
    bad("bad rational \"" + text + "\"");
  }
}

std::string rational_to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// ---------------------------------------------------------------- tableaux

Json tableau_to_json(const Tableau& t) {
  Json j;
  j["outer"] = t.shape().outer();
  if (!t.shape().is_straight()) j["inner"] = t.shape().inner();
  j["word"] = t.word();
  return j;
}

Tableau tableau_from_json(const Json& j) {
  if (j.is_string()) return Tableau::from_word(j.get<std::string>());
  if (j.is_object() && j.contains("rows")) return Tableau::from_rows(field<std::vector<std::vector<int>>>(j, "rows"));
  std::string word = field<std::string>(j, "word");
  if (!j.contains("outer")) return Tableau::from_word(word);
  std::vector<int> inner;
  if (j.contains("inner")) inner = field<std::vector<int>>(j, "inner");
  return Tableau::from_word(Shape(field<std::vector<int>>(j, "outer"), inner), word);
}

// ---------------------------------------------------------------- matchings

Json matching_to_json(const Matching2& m) {
  Json j;
  j["n"] = m.n_pairs();
  j["arcs"] = Json::array();
  for (const auto& [a, b] : m.arcs()) j["arcs"].push_back({a, b});
  return j;
}

Matching2 matching_from_json(const Json& j) {
  std::vector<Matching2::Arc> arcs;
  for (const auto& pair : field<std::vector<std::vector<int>>>(j, "arcs")) {
    if (pair.size() != 2) bad("an arc needs two endpoints");
    arcs.emplace_back(pair[0], pair[1]);
  }
  return Matching2(field<int>(j, "n"), std::move(arcs));
}

// ---------------------------------------------------------------- diagrams

Json diagram_to_json(const GeneralizedMDiagram& m) {
  Json j;
  j["boundary"] = Json::array();
  for (const auto& b : m.boundary()) j["boundary"].push_back({{"label", b.label()}, {"x", rational_to_string(b.x)}});
  j["arcs"] = Json::array();
  for (const Arc& a : m.arcs()) {
    j["arcs"].push_back({{"tail", m.boundary()[a.tail].label()},
                         {"head", m.boundary()[a.head].label()},
                         {"kind", a.kind == ArcKind::first ? "first" : "second"},
                         {"crossed", a.crossed}});
  }
  return j;
}

GeneralizedMDiagram diagram_from_json(const Json& j) {
  std::vector<BoundaryCoord> boundary;
  for (const auto& b : field<Json>(j, "boundary")) {
    std::string label = field<std::string>(b, "label");
    BoundaryCoord c;
    c.primed = !label.empty() && label.back() == '\'';
    if (c.primed) label.pop_back();
    try {
      std::size_t used = 0;
      c.index = std::stoi(label, &used);
      if (used != label.size()) bad("bad boundary label \"" + label + "\"");
    } catch (const std::logic_error&) {
      bad("bad boundary label \"" + label + "\"");
    }
    c.x = b.contains("x") ? parse_rational(field<std::string>(b, "x")) : Rational(c.primed ? -c.index : c.index);
    boundary.push_back(c);
  }
  std::vector<Arc> arcs;
  for (const auto& a : field<Json>(j, "arcs")) {
    Arc arc;
    arc.tail = -1;
    arc.head = -1;
    std::string tail = field<std::string>(a, "tail");
    std::string head = field<std::string>(a, "head");
    for (int i = 0; i < static_cast<int>(boundary.size()); ++i) {
      if (boundary[i].label() == tail) arc.tail = i;
      if (boundary[i].label() == head) arc.head = i;
    }
    if (arc.tail < 0 || arc.head < 0) bad("arc (" + tail + "," + head + ") names an unknown vertex");
    std::string kind = a.contains("kind") ? field<std::string>(a, "kind") : "first";
    if (kind != "first" && kind != "second") bad("unknown arc kind \"" + kind + "\"");
    arc.kind = kind == "first" ? ArcKind::first : ArcKind::second;
    arc.crossed = a.contains("crossed") && field<bool>(a, "crossed");
    arcs.push_back(arc);
  }
  return GeneralizedMDiagram(std::move(boundary), std::move(arcs));
}

// ---------------------------------------------------------------- webs

Json web_to_json(const PlanarWeb& w, bool with_canonical) {
  Json j;
  j["n"] = w.n_boundary();
  j["internal"] = w.n_internal();
  j["edges"] = Json::array();
  for (const WebEdge& e : w.edges()) {
    j["edges"].push_back({{"from", e.from + 1}, {"to", e.to + 1}, {"tag", std::string(to_string(e.tag))}});
  }
  Json rot = Json::object();
  for (int v = 0; v < w.n_vertices(); ++v) rot[std::to_string(v + 1)] = w.rotation(v);
  j["rotation"] = rot;
  if (!w.coords().empty()) {
    Json coords = Json::array();
    for (const Point& p : w.coords()) coords.push_back({p.x, p.y});
    j["coords"] = coords;
  }
  if (with_canonical) {
    CanonicalWebForm form = canonical(w);
    j["canonical"] = {{"digest", form.digest}, {"serialization", form.serialization}};
  }
  return j;
}

PlanarWeb web_from_json(const Json& j) {
  const int n = field<int>(j, "n");
  const int internal = field<int>(j, "internal");
  const int nv = n + internal;
  std::vector<WebEdge> edges;
  for (const auto& e : field<Json>(j, "edges")) {
    int from = field<int>(e, "from");
    int to = field<int>(e, "to");
    if (from < 1 || from > nv || to < 1 || to > nv) bad("edge endpoint out of range");
    edges.push_back({from - 1, to - 1, parse_tag(field<std::string>(e, "tag")), {}});
  }
  std::vector<std::vector<int>> rotation(nv);
  const Json rot = field<Json>(j, "rotation");
  if (!rot.is_object()) bad("\"rotation\" must map vertices to dart lists");
  for (const auto& [key, darts] : rot.items()) {
    int v = 0;
    try {
      v = std::stoi(key);
    } catch (const std::logic_error&) {
      bad("bad vertex key \"" + key + "\"");
    }
    if (v < 1 || v > nv) bad("rotation names unknown vertex " + key);
    try {
      rotation[v - 1] = darts.get<std::vector<int>>();
    } catch (const nlohmann::json::exception& e) {
      bad(std::string("rotation of vertex ") + key + ": " + e.what());
    }
  }
  std::vector<Point> coords;
  if (j.contains("coords")) {
    for (const auto& p : j.at("coords")) {
      if (!p.is_array() || p.size() != 2) bad("coordinates must be [x, y] pairs");
      coords.push_back({p[0].get<double>(), p[1].get<double>()});
    }
  }
  return PlanarWeb(n, nv, std::move(edges), std::move(rotation), std::move(coords));
}

Json decomposition_to_json(const DominoDecomposition& dd) {
  Json j;
  j["source"] = tableau_to_json(dd.source);
  j["relabeled"] = dd.relabeled;
  j["labels"] = dd.n_labels;
  j["blocks"] = Json::array();
  for (const DominoBlock& b : dd.blocks) {
    j["blocks"].push_back({{"type", b.type}, {"first_col", b.first_col}, {"last_col", b.last_col}});
  }
  j["vertical_pairs"] = Json::array();
  for (auto [a, b] : dd.vertical_pairs) j["vertical_pairs"].push_back({a, b});
  j["compression"] = tableau_to_json(dd.compression);
  if (dd.compression0) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : dd.compression0->grid()) {
      std::vector<std::string> cells;
      for (int v : row) cells.push_back(v == 0 ? "." : std::to_string(v - 1));
      rows.push_back(cells);
    }
    // The zero-based labels of C_0 do not fit the 1..N tableau form.
    j["compression0_rows"] = rows;
  }
  return j;
}

}  // namespace webfold
