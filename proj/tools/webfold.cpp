#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "webfold/error.hpp"
#include "webfold/json_io.hpp"
#include "webfold/oracle.hpp"
#include "webfold/svg.hpp"
#include "webfold/web2.hpp"
#include "webfold/web3.hpp"

using namespace webfold;

namespace {

// Raised for unreadable files and flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Io {
  std::string word;
  std::string in;
  std::string out = "-";
  std::string format;

  void add_input(CLI::App* app, bool allow_word) {
    CLI::Option* w = nullptr;
    if (allow_word) w = app->add_option("--word", word, "Row word of a straight 2- or 3-row tableau");
    CLI::Option* i = app->add_option("--in", in, "JSON input file, or - for standard input");
    if (w) w->excludes(i);
    app->add_option("--out", out, "Output file, or - for standard output");
  }

  void add_format(CLI::App* app, std::vector<std::string> allowed) {
    format = allowed.front();
    app->add_option("--format", format, "Output format")->check(CLI::IsMember(allowed));
  }

  bool has_word() const { return !word.empty(); }

  std::string read_input() const {
    if (in.empty()) throw UsageError("an input is required (--word or --in)");
    if (in == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream f(in);
    if (!f) throw UsageError("cannot read " + in);
    return std::string(std::istreambuf_iterator<char>(f), {});
  }

  Json read_json() const { return parse_json(read_input()); }

  Tableau read_tableau() const {
    if (has_word()) return Tableau::from_word(word);
    return tableau_from_json(read_json());
  }

  void write(const std::string& text) const {
    if (out == "-") {
      std::cout << text;
      return;
    }
    std::ofstream f(out);
    if (!f) throw UsageError("cannot write " + out);
    f << text;
  }

  void write_json(const Json& j) const { write(j.dump(2) + "\n"); }
};

std::string tableau_text(const Tableau& t) {
  return (t.shape().is_straight() ? t.word() : t.to_string()) + "\n";
}

void emit_tableau(const Io& io, const Tableau& t) {
  if (io.format == "json") io.write_json(tableau_to_json(t));
  else if (io.format == "svg") io.write(svg_of_tableau(t));
  else io.write(tableau_text(t));
}

void emit_web(const Io& io, const PlanarWeb& w) {
  if (io.format == "svg") io.write(svg_of_web(w));
  else if (io.format == "text") io.write(canonical(w).digest + "\n");
  else io.write_json(web_to_json(w));
}

void emit_matching(const Io& io, const Matching2& m) {
  if (io.format == "svg") io.write(svg_of_matching(m));
  else if (io.format == "text") io.write(m.to_string() + "\n");
  else io.write_json(matching_to_json(m));
}

void emit_diagram(const Io& io, const GeneralizedMDiagram& m) {
  if (io.format == "svg") io.write(svg_of_diagram(m));
  else io.write_json(diagram_to_json(m));
}

Tableau apply_operator(const std::string& op, const Tableau& t) {
  if (op == "promote") return promote(t);
  if (op == "promote-inverse") return promote_inverse(t);
  if (op == "evacuate") return evacuate(t);
  if (op == "fold") return fold(t);
  if (op == "unfold") return unfold(t);
  if (op == "rectify") return rectify(t);
  return rotate180_complement(t);
}

std::string render(const Json& j) {
  if (j.is_object() && j.contains("edges") && j.contains("rotation")) return svg_of_web(web_from_json(j));
  if (j.is_object() && j.contains("boundary")) return svg_of_diagram(diagram_from_json(j));
  if (j.is_object() && j.contains("arcs") && j.contains("n")) return svg_of_matching(matching_from_json(j));
  return svg_of_tableau(tableau_from_json(j));
}

Shape parse_shape(const std::string& text) {
  std::size_t x = text.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    int rows = std::stoi(text.substr(0, x), &used);
    if (used != x) throw std::invalid_argument(text);
    int cols = std::stoi(text.substr(x + 1), &used);
    if (used != text.size() - x - 1 || rows < 1 || cols < 0) throw std::invalid_argument(text);
    return Shape::rectangle(rows, cols);
  } catch (const std::logic_error&) {
    throw UsageError("--shape expects RxC, got \"" + text + "\"");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Promotion, evacuation and folding of rectangular tableaux and their webs"};
  app.require_subcommand(1);

  // op
  Io op_io;
  std::string op_name;
  auto* op = app.add_subcommand("op", "Apply a tableau operator");
  op->add_option("--apply", op_name, "Operator")
      ->required()
      ->check(CLI::IsMember({"promote", "promote-inverse", "evacuate", "fold", "unfold", "rotate-complement", "rectify"}));
  op_io.add_input(op, true);
  op_io.add_format(op, {"text", "json", "svg"});

  // web2
  Io w2_from_io, w2_to_io, w2_fold_io;
  auto* web2 = app.add_subcommand("web2", "Two-row tableaux and noncrossing matchings");
  web2->require_subcommand(1);
  auto* w2_from = web2->add_subcommand("from-tableau", "Matching of a 2-row tableau");
  auto* w2_to = web2->add_subcommand("to-tableau", "Tableau of a matching");
  auto* w2_fold = web2->add_subcommand("fold", "Fold a symmetrical matching");
  w2_from_io.add_input(w2_from, true);
  w2_from_io.add_format(w2_from, {"json", "text", "svg"});
  w2_to_io.add_input(w2_to, false);
  w2_to_io.add_format(w2_to, {"text", "json", "svg"});
  w2_fold_io.add_input(w2_fold, false);
  w2_fold_io.add_format(w2_fold, {"json", "text", "svg"});

  // web3
  Io w3_from_io, w3_to_io, w3_dom_io, w3_crossed_io, w3_mdiag_io, w3_dec_io;
  auto* web3 = app.add_subcommand("web3", "Three-row tableaux and 3-webs");
  web3->require_subcommand(1);
  auto* w3_from = web3->add_subcommand("from-tableau", "Web of a 3-row tableau");
  auto* w3_to = web3->add_subcommand("to-tableau", "Tableau of a web");
  auto* w3_dom = web3->add_subcommand("to-domino", "Domino tableau of a symmetrical web");
  auto* w3_crossed = web3->add_subcommand("crossed", "Crossed web of a domino tableau");
  auto* w3_mdiag = web3->add_subcommand("mdiagram", "m-diagram of a 3-row tableau");
  auto* w3_dec = web3->add_subcommand("decompose", "Block decomposition of a domino tableau");
  bool crossed_diagram_only = false;
  w3_from_io.add_input(w3_from, true);
  w3_from_io.add_format(w3_from, {"json", "text", "svg"});
  w3_to_io.add_input(w3_to, false);
  w3_to_io.add_format(w3_to, {"text", "json", "svg"});
  w3_dom_io.add_input(w3_dom, false);
  w3_dom_io.add_format(w3_dom, {"text", "json", "svg"});
  w3_crossed_io.add_input(w3_crossed, true);
  w3_crossed_io.add_format(w3_crossed, {"json", "text", "svg"});
  w3_crossed->add_flag("--diagram", crossed_diagram_only, "Emit the crossed m-diagram instead of its resolution");
  w3_mdiag_io.add_input(w3_mdiag, true);
  w3_mdiag_io.add_format(w3_mdiag, {"json", "svg"});
  w3_dec_io.add_input(w3_dec, true);
  w3_dec_io.add_format(w3_dec, {"json"});

  // verify
  std::string theorem;
  int max_n = 0;
  int rows = 0;
  bool no_timing = false;
  std::string verify_format = "text";
  std::string verify_out = "-";
  auto* ver = app.add_subcommand("verify", "Exhaustive check of a theorem or lemma");
  ver->add_option("--theorem", theorem, "Property id")->required();
  ver->add_option("--max-n", max_n, "Largest n to check")->required()->check(CLI::NonNegativeNumber);
  ver->add_option("--rows", rows, "Restrict to the 2-row or 3-row family")->check(CLI::IsMember({0, 2, 3}));
  ver->add_option("--format", verify_format, "Report format")->check(CLI::IsMember({"text", "json"}));
  ver->add_option("--out", verify_out, "Report file, or - for standard output");
  ver->add_flag("--no-timing", no_timing, "Leave elapsed time out of the report");

  // render
  Io render_io;
  auto* ren = app.add_subcommand("render", "SVG of a tableau, matching, diagram or web given as JSON");
  render_io.add_input(ren, false);

  // enumerate
  std::string shape_text;
  std::string filter_name = "all";
  Io enum_io;
  auto* en = app.add_subcommand("enumerate", "List the standard tableaux of a rectangle");
  en->add_option("--shape", shape_text, "Rectangle as RxC")->required();
  en->add_option("--filter", filter_name, "all, rotationally-symmetric or domino");
  en->add_option("--out", enum_io.out, "Output file, or - for standard output");
  enum_io.add_format(en, {"text", "json", "count"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int status = app.exit(e);
    return status == 0 ? 0 : 2;
  }

  try {
    if (*op) {
      emit_tableau(op_io, apply_operator(op_name, op_io.read_tableau()));
    } else if (*w2_from) {
      emit_matching(w2_from_io, web2_of_tableau(w2_from_io.read_tableau()));
    } else if (*w2_to) {
      emit_tableau(w2_to_io, tableau_of_web2(matching_from_json(w2_to_io.read_json())));
    } else if (*w2_fold) {
      emit_matching(w2_fold_io, fold2(matching_from_json(w2_fold_io.read_json())));
    } else if (*w3_from) {
      emit_web(w3_from_io, web_of_tableau(w3_from_io.read_tableau()));
    } else if (*w3_to) {
      emit_tableau(w3_to_io, tableau_of_web(web_from_json(w3_to_io.read_json())));
    } else if (*w3_dom) {
      emit_tableau(w3_dom_io, domino_of_symmetric_web(web_from_json(w3_dom_io.read_json())));
    } else if (*w3_crossed) {
      Tableau d = w3_crossed_io.read_tableau();
      if (crossed_diagram_only) emit_diagram(w3_crossed_io, crossed_diagram(d));
      else emit_web(w3_crossed_io, crossed_web(d));
    } else if (*w3_mdiag) {
      emit_diagram(w3_mdiag_io, mdiagram_of_tableau(w3_mdiag_io.read_tableau()));
    } else if (*w3_dec) {
      w3_dec_io.write_json(decomposition_to_json(decompose_blocks(w3_dec_io.read_tableau())));
    } else if (*ver) {
      VerificationReport report = verify(theorem, max_n, rows);
      Io io;
      io.out = verify_out;
      io.write(verify_format == "json" ? report.to_json(!no_timing) + "\n" : report.to_text(!no_timing));
      return report.passed() ? 0 : 1;
    } else if (*ren) {
      render_io.write(render(render_io.read_json()));
    } else if (*en) {
      Shape shape = parse_shape(shape_text);
      Filter filter = parse_filter(filter_name);
      std::vector<std::string> words;
      enumerate({shape, filter}, [&words](const Tableau& t) { words.push_back(t.word()); });
      if (enum_io.format == "count") {
        enum_io.write(std::to_string(words.size()) + "\n");
      } else if (enum_io.format == "json") {
        enum_io.write_json(Json{{"shape", shape.outer()}, {"filter", to_string(filter)}, {"count", words.size()}, {"words", words}});
      } else {
        std::string text;
        for (const auto& w : words) text += w + "\n";
        enum_io.write(text);
      }
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
