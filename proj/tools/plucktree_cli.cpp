#include "plucktree/enumerate.hpp"
#include "plucktree/moves.hpp"
#include "plucktree/plucking.hpp"
#include "plucktree/realize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace plucktree;

constexpr int kOk = 0;
constexpr int kNegative = 1;   // negative mathematical decision
constexpr int kUsage = 2;      // usage or parse error
constexpr int kInternal = 3;   // broken invariant

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Tree arguments may be inline text or @file indirection.
PlaneTree tree_arg(const std::string& text) {
  std::string payload = !text.empty() && text.front() == '@' ? read_file(text.substr(1)) : text;
  try {
    return parse_tree(payload);
  } catch (const ParseError& e) {
    throw UsageError(std::string("tree parse error: ") + e.what());
  }
}

int cmd_poly(const std::string& tree_text, const std::string& method, const std::string& format) {
  PlaneTree t = tree_arg(tree_text);
  QPoly poly;
  if (method == "recursive")
    poly = q_recursive(t);
  else if (method == "product")
    poly = q_state_product(t);
  else if (method == "quotient")
    poly = q_quotient(t).poly;
  else
    poly = plucking_polynomial_checked(t);
  if (format == "coeffs" || format == "both") std::cout << "coeffs: " << poly.to_string() << '\n';
  if (format == "factored" || format == "both")
    std::cout << "factored: " << q_quotient(t).fraction.to_string() << '\n';
  return kOk;
}

int cmd_equal(const std::string& a_text, const std::string& b_text) {
  Reduction a = reduce(tree_arg(a_text));
  Reduction b = reduce(tree_arg(b_text));
  auto da = descendant_multiset(a.tree);
  auto db = descendant_multiset(b.tree);
  std::cout << "d-a: " << multiset_to_string(da) << '\n';
  std::cout << "d-b: " << multiset_to_string(db) << '\n';
  if (da == db) {
    std::cout << "equal\n";
    return kOk;
  }
  std::cout << "not-equal\n";
  return kNegative;
}

int cmd_orbit(const std::string& tree_text, std::size_t cap) {
  OrbitResult orbit = exchange_orbit(tree_arg(tree_text), cap);
  if (orbit.truncated) {
    std::cout << "reason: cap-exceeded\n";
    return kNegative;
  }
  std::cout << "orbit-size: " << orbit.codes.size() << '\n';
  for (const auto& code : orbit.codes) std::cout << "member: " << code << '\n';
  return kOk;
}

int cmd_find_move(const std::string& a_text, const std::string& b_text, const std::string& out) {
  auto cert = find_permutation_move(tree_arg(a_text), tree_arg(b_text));
  if (!cert) {
    std::cout << "not-equivalent\n";
    return kNegative;
  }
  if (!out.empty()) {
    std::ofstream os(out);
    if (!os) throw UsageError("cannot write file: " + out);
    os << serialize_certificate(*cert);
  } else {
    std::cout << serialize_certificate(*cert);
  }
  if (!cert->move) {
    std::cout << "move: identical\n";
    return kOk;
  }
  const auto& m = *cert->move;
  std::cout << "move-vertices: " << m.vertices.size() << '\n';
  auto alpha = m.alpha();
  std::cout << "alpha:";
  for (int v : alpha) std::cout << ' ' << v;
  std::cout << "\nbeta:";
  for (int v : m.beta) std::cout << ' ' << v;
  std::cout << "\nperm:";
  for (int v : m.perm) std::cout << ' ' << v;
  std::cout << '\n';
  return kOk;
}

int cmd_apply_move(const std::string& tree_text, const std::string& cert_path) {
  MoveCertificate cert;
  try {
    cert = parse_certificate(read_file(cert_path));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("certificate parse error: ") + e.what());
  }
  Reduction r = reduce(tree_arg(tree_text));
  PlaneTree result = r.tree;
  if (cert.move) {
    auto violations = validate_permutation_move(result, *cert.move);
    if (!violations.empty()) {
      for (const auto& v : violations) std::cout << "violation: " << v << '\n';
      return kNegative;
    }
    result = apply_permutation_move(result, *cert.move);
  }
  for (int i = 0; i < cert.destabilizations_b; ++i) result = stabilize(result);
  std::cout << "result: " << canonical_code(result) << '\n';
  return kOk;
}

int cmd_realize(const std::string& multiset_text, const std::string& binomials) {
  if (!binomials.empty()) {
    BinomialFactorList factors;
    std::istringstream is(binomials);
    std::string item;
    while (std::getline(is, item, ';')) {
      int m = 0, n = 0;
      char comma = 0;
      std::istringstream pair(item);
      if (!(pair >> m >> comma >> n) || comma != ',' || m < 0 || n < 0)
        throw UsageError("bad binomial factor: " + item);
      factors.push_back({m, n});
    }
    RealizationResult result = realize_binomial_product(factors);
    if (!result.tree) {
      std::cout << "unrealizable\n" << "reason: " << result.reason << '\n';
      return kNegative;
    }
    std::cout << "tree: " << canonical_code(*result.tree) << '\n';
    std::cout << "coeffs: " << q_state_product(*result.tree).to_string() << '\n';
    return kOk;
  }
  CandidateMultiset c;
  try {
    c = multiset_from_string(multiset_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  auto tree = realize_multiset(c);
  if (!tree) {
    std::cout << "unrealizable\n";
    auto conditions = necessary_conditions(c);
    if (conditions.empty())
      std::cout << "reason: search exhausted\n";
    else
      for (const auto& v : conditions) std::cout << "reason: " << v << '\n';
    return kNegative;
  }
  std::cout << "tree: " << canonical_code(*tree) << '\n';
  return kOk;
}

int cmd_enumerate(int edges, bool classify, bool verify) {
  if (classify) {
    std::cout << report_to_string(classify_by_polynomial(edges));
  } else {
    std::cout << "tree-count: " << generate_trees(edges).size() << '\n';
  }
  if (verify) {
    bool p25 = verify_prop25(edges);
    bool t12 = verify_theorem12(edges);
    std::cout << "prop25: " << (p25 ? "ok" : "failed") << '\n';
    std::cout << "theorem12: " << (t12 ? "ok" : "failed") << '\n';
    if (!p25 || !t12) return kInternal;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plucking polynomial toolkit for rooted trees"};
  app.require_subcommand(1);

  std::string tree_text, tree_b, method = "checked", format = "both", out_file, cert_file;
  std::string multiset_text, binomials;
  std::size_t cap = 1000000;
  int edges = 0;
  bool classify = false, verify = false;

  auto* poly = app.add_subcommand("poly", "plucking polynomial of a tree");
  poly->add_option("tree", tree_text)->required();
  poly->add_option("--method", method)->check(CLI::IsMember({"recursive", "product", "quotient", "checked"}));
  poly->add_option("--format", format)->check(CLI::IsMember({"coeffs", "factored", "both"}));

  auto* equal = app.add_subcommand("equal", "compare two trees up to the polynomial");
  equal->add_option("tree-a", tree_text)->required();
  equal->add_option("tree-b", tree_b)->required();

  auto* orbit = app.add_subcommand("orbit", "closure under exchange moves");
  orbit->add_option("tree", tree_text)->required();
  orbit->add_option("--cap", cap);

  auto* find = app.add_subcommand("find-move", "permutation move connecting two trees");
  find->add_option("tree-a", tree_text)->required();
  find->add_option("tree-b", tree_b)->required();
  find->add_option("--out", out_file);

  auto* apply = app.add_subcommand("apply-move", "apply a move certificate");
  apply->add_option("tree", tree_text)->required();
  apply->add_option("certificate", cert_file)->required();

  auto* realize = app.add_subcommand("realize", "realize a descendant multiset or binomial product");
  realize->add_option("multiset", multiset_text);
  realize->add_option("--binomials", binomials);

  auto* enumerate = app.add_subcommand("enumerate", "generate and verify trees by edge count");
  enumerate->add_option("--edges", edges)->required();
  enumerate->add_flag("--classify", classify);
  enumerate->add_flag("--verify", verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (poly->parsed()) return cmd_poly(tree_text, method, format);
    if (equal->parsed()) return cmd_equal(tree_text, tree_b);
    if (orbit->parsed()) return cmd_orbit(tree_text, cap);
    if (find->parsed()) return cmd_find_move(tree_text, tree_b, out_file);
    if (apply->parsed()) return cmd_apply_move(tree_text, cert_file);
    if (realize->parsed()) {
      if (multiset_text.empty() && binomials.empty())
        throw UsageError("realize needs a multiset or --binomials");
      return cmd_realize(multiset_text, binomials);
    }
    if (enumerate->parsed()) return cmd_enumerate(edges, classify, verify);
    throw UsageError("no command");
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const MoveError& e) {
    for (const auto& v : e.violations) std::cout << "violation: " << v << '\n';
    return kNegative;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
