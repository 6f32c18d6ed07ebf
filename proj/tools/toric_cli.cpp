// Command-line front end. Every subcommand reads matrices from files, calls
// one library operation and prints a deterministic plain-text report.
//
// Exit status: 0 on success, 1 when a precondition of the operation fails,
// 2 for malformed input or command lines.

#include "toric/analysis.hpp"
#include "toric/fibers.hpp"
#include "toric/geometry.hpp"
#include "toric/graver.hpp"
#include "toric/lawrence.hpp"
#include "toric/matrix_file.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace toric;

std::string classification_line(const LatticeClassification& c) {
  switch (c.universal_markov_kind) {
    case UniversalMarkovKind::PositiveFinite: return "POSITIVE";
    case UniversalMarkovKind::PureRankOne: return "PURE_RANK_ONE w=[" + to_string(*c.generator) + "]";
    case UniversalMarkovKind::Infinite: return "INFINITE_UNIVERSAL_MARKOV";
  }
  return "";
}

std::string fiber_report(const IntegerMatrix& a, const LatticeVector& u) {
  const GraverBasis graver = graver_basis(a);
  const FiberGraph f = fiber(graver, u);
  const auto vertices = markov_polytope_vertices(f);
  std::ostringstream out;
  out << "degree " << to_string(f.degree) << '\n';
  out << "members " << f.members.size() << " components " << f.components.size() << '\n';
  for (std::size_t c = 0; c < f.components.size(); ++c) {
    out << "component " << c + 1 << " size " << f.components[c].size() << " vertices " << vertices[c].size() << '\n';
    for (std::size_t i : f.components[c]) {
      const bool vertex = std::find(vertices[c].begin(), vertices[c].end(), f.members[i]) != vertices[c].end();
      out << to_string(f.members[i]) << (vertex ? " vertex" : " non-vertex") << '\n';
    }
  }
  return out.str();
}

std::string ugb_verdict_line(const IntegerMatrix& a, const LatticeVector& u) {
  if (u.size() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "vector length differs from the number of columns");
  switch (universal_gb_verdict(graver_basis(a), u)) {
    case UgbCriterion::Member: return "YES";
    case UgbCriterion::GcdNotOne: return "NO: gcd of the coordinates is not 1";
    case UgbCriterion::NotAnEdge: return "NO: segment [u+,u-] is not an edge of P[u]";
  }
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Markov, Graver and universal Gröbner bases of integer configurations"};
  app.require_subcommand(1);

  std::string a_path;
  std::string b_path;

  auto* kernel_cmd = app.add_subcommand("kernel", "saturated basis of ker_Z(A)");
  kernel_cmd->add_option("A", a_path, "matrix file")->required();

  bool bruteforce = false;
  Int box = 0;
  auto* graver_cmd = app.add_subcommand("graver", "Graver basis of A");
  graver_cmd->add_option("A", a_path, "matrix file")->required();
  auto* bruteforce_flag = graver_cmd->add_flag("--bruteforce", bruteforce, "exhaustive search in a box instead of completion");
  graver_cmd->add_option("--box", box, "box bound for --bruteforce")->needs(bruteforce_flag)->check(CLI::PositiveNumber);

  auto* positivity_cmd = app.add_subcommand("positivity", "is L(A) ∩ N^n = {0}");
  positivity_cmd->add_option("A", a_path, "matrix file")->required();

  auto* classify_cmd = app.add_subcommand("classify", "where the universal Markov basis lives");
  classify_cmd->add_option("A", a_path, "matrix file")->required();

  std::string vector_text;
  auto* fiber_cmd = app.add_subcommand("fiber", "fiber of a lattice vector with its components");
  fiber_cmd->add_option("A", a_path, "matrix file")->required();
  fiber_cmd->add_option("--vector", vector_text, "lattice vector, quoted integers")->required();

  bool universal = false;
  bool minimal = false;
  bool count = false;
  auto* markov_cmd = app.add_subcommand("markov", "universal or minimal Markov basis (positive lattices)");
  markov_cmd->add_option("A", a_path, "matrix file")->required();
  auto* universal_flag = markov_cmd->add_flag("--universal", universal, "universal Markov basis (default)");
  auto* minimal_flag = markov_cmd->add_flag("--minimal", minimal, "one minimal Markov basis");
  auto* count_flag = markov_cmd->add_flag("--count", count, "number of minimal Markov bases");
  universal_flag->excludes(minimal_flag)->excludes(count_flag);
  minimal_flag->excludes(count_flag);

  std::string test_text;
  auto* ugb_cmd = app.add_subcommand("ugb", "universal Gröbner basis (positive lattices)");
  ugb_cmd->add_option("A", a_path, "matrix file")->required();
  ugb_cmd->add_option("--test", test_text, "decide membership of one vector");

  std::size_t r = 0;
  bool markov_complexity = false;
  auto* lawrence_cmd = app.add_subcommand("lawrence", "generalized Lawrence lifting of (A, B)");
  lawrence_cmd->add_option("A", a_path, "matrix file")->required();
  lawrence_cmd->add_option("B", b_path, "matrix file")->required();
  lawrence_cmd->add_option("--r", r, "number of copies (>= 2)")->required();
  lawrence_cmd->add_flag("--markov-complexity", markov_complexity, "complexity of a minimal Markov basis of the lift");

  auto* graver_complexity_cmd = app.add_subcommand("graver-complexity", "Graver complexity g(A, B)");
  graver_complexity_cmd->add_option("A", a_path, "matrix file")->required();
  graver_complexity_cmd->add_option("B", b_path, "matrix file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : 2;
  }
  if (bruteforce && box == 0) {
    std::cerr << "error: --bruteforce requires --box K\n";
    return 2;
  }

  try {
    const IntegerMatrix a = read_matrix_file(a_path);
    std::ostringstream out;

    if (kernel_cmd->parsed()) {
      const LatticeBasis kernel = integer_kernel(a);
      out << render_matrix(IntegerMatrix::from_columns(a.cols(), kernel.generators()).transposed());
    } else if (graver_cmd->parsed()) {
      const VectorSet g = bruteforce ? graver_bruteforce(a, box) : graver_basis(a).elements;
      out << render_vectors(g, a.cols());
    } else if (positivity_cmd->parsed()) {
      const auto c = classify_universal_markov(a);
      out << (c.positive ? "POSITIVE" : "NON_POSITIVE") << '\n' << "pure_rank " << c.pure_rank << '\n';
    } else if (classify_cmd->parsed()) {
      const auto c = classify_universal_markov(a);
      out << classification_line(c) << '\n' << "pure_rank " << c.pure_rank << '\n';
    } else if (fiber_cmd->parsed()) {
      out << fiber_report(a, parse_vector(vector_text));
    } else if (markov_cmd->parsed()) {
      const MarkovReport report = universal_markov_basis(a);
      if (count) out << report.minimal_basis_count << '\n';
      else if (minimal) out << render_vectors(report.minimal, a.cols());
      else out << render_vectors(report.universal, a.cols());
    } else if (ugb_cmd->parsed()) {
      if (!test_text.empty()) out << ugb_verdict_line(a, parse_vector(test_text)) << '\n';
      else out << render_vectors(universal_gb(a), a.cols());
    } else if (lawrence_cmd->parsed()) {
      const IntegerMatrix b = read_matrix_file(b_path);
      if (markov_complexity) out << markov_complexity_at(a, b, r) << '\n';
      else out << render_matrix(lift(a, b, r).matrix);
    } else if (graver_complexity_cmd->parsed()) {
      out << graver_complexity(a, read_matrix_file(b_path)) << '\n';
    }

    std::cout << out.str();
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << error_code(e.kind()) << ": " << e.what() << '\n';
    return e.kind() == ErrorKind::Parse ? 2 : 1;
  }
}
