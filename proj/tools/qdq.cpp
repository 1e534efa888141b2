#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qdq/errors.hpp"
#include "qdq/frt.hpp"
#include "qdq/json_io.hpp"

using namespace qdq;

namespace {

enum Exit { kPass = 0, kFail = 1, kInvalid = 2, kSingular = 3 };

struct Options {
  std::size_t n = 0;
  std::uint32_t root_order = 1;
  std::string g1, g2, tau;
  std::string theta_file, beta_file;
  std::size_t k1 = 1, k2 = 1;
  std::string sigma = "all";
  std::string json_out;
  std::string format = "json";
  bool timing = false;
  std::string file;
  std::size_t i = 0, j = 0;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

// accepts either a bare grid or an object holding the grid under `key`
QMatrix read_grid(const std::string& path, const char* key, std::size_t n) {
  json j = read_json_file(path);
  QMatrix g = grid_from_json(j.is_object() ? j.at(key) : j);
  if (g.rows() != n || g.cols() != n) throw InvalidArgument(std::string(key) + " grid must be n x n");
  return g;
}

BDTriple triple_of(const Options& o) {
  if (o.n < 1) throw InvalidArgument("--n must be positive");
  return BDTriple::parse(o.n, o.g1, o.g2, o.tau);
}

Twist twist_of(const Options& o) {
  BDTriple t = triple_of(o);
  ThetaSolution th = o.theta_file.empty() ? (t.is_trivial() ? theta_from_grid(t, QMatrix(t.n, t.n)) : solve_theta(t))
                                          : theta_from_grid(t, read_grid(o.theta_file, "theta", t.n));
  QMatrix beta = o.beta_file.empty() ? QMatrix(t.n, t.n) : read_grid(o.beta_file, "beta", t.n);
  return build_twist(t, th, beta);
}

std::vector<SigmaOrder> sigmas_of(const Options& o) {
  if (o.sigma == "all") return SigmaOrder::all(o.n);
  std::vector<SigmaOrder> out;
  std::stringstream ss(o.sigma);
  std::string item;
  while (std::getline(ss, item, ',')) {
    SigmaOrder s = SigmaOrder::parse(item);
    if (s.size() != o.n) throw InvalidArgument("sigma " + item + " is not a permutation of 1.." + std::to_string(o.n));
    out.push_back(std::move(s));
  }
  if (out.empty()) throw InvalidArgument("empty --sigma");
  return out;
}

void print_text(const Report& r, std::ostream& os, bool timing, int depth = 0) {
  os << std::string(depth * 2, ' ') << r.check << "  " << (r.pass ? "pass" : "FAIL");
  if (timing) os << "  " << r.ms << " ms";
  if (r.witness) {
    os << "  witness";
    for (auto c : r.witness->coords) os << " " << c;
    if (!r.witness->detail.empty()) os << "  " << r.witness->detail;
    if (r.witness->lhs && r.witness->rhs) os << "  [" << r.witness->lhs->str() << " vs " << r.witness->rhs->str() << "]";
  }
  os << "\n";
  for (const auto& c : r.children) print_text(c, os, timing, depth + 1);
}

void emit(const json& j, const Options& o) {
  if (!o.json_out.empty()) {
    std::ofstream out(o.json_out);
    if (!out) throw InvalidArgument("cannot write " + o.json_out);
    out << j.dump(2) << "\n";
  }
  if (o.format == "json") std::cout << j.dump(2) << "\n";
}

int emit_report(const Report& r, const Options& o, json extra = json::object()) {
  json j = report_json(r, o.timing);
  for (auto& [k, v] : extra.items()) j[k] = v;
  emit(j, o);
  if (o.format == "text") print_text(r, std::cout, o.timing);
  if (r.pass) return kPass;
  return r.info.value("singular", false) ? kSingular : kFail;
}

int run_check(const std::string& which, const Options& o) {
  Twist tw = twist_of(o);
  json extra = {{"root_order", tw.field.root_order}};
  if (which == "ybe") return emit_report(ybe_check(tw.r_j), o, extra);
  if (which == "hecke") return emit_report(hecke_check(r_hat(tw.r_j), tw.field), o, extra);
  if (which == "cocycle") return emit_report(cocycle_check(tw.triple, tw.theta, tw.beta), o, extra);
  if (which == "frt") return emit_report(frt_check(build_T(tw, o.k1, o.k2)), o, extra);
  Report r = main_theorem_report(tw, o.k1, o.k2, sigmas_of(o));
  return emit_report(r, o, extra);
}

int run_quasidet(const Options& o) {
  NCSquareFile f = ncsquare_from_json(read_json_file(o.file));
  json out = {{"root_order", f.field.root_order}, {"i", o.i}, {"j", o.j}};
  const std::size_t m = f.blocks ? f.block.size() : f.scalar.size();
  if (o.i < 1 || o.i > m || o.j < 1 || o.j > m) throw InvalidArgument("index out of range");
  if (f.blocks) {
    out["value"] = matrix_json(quasideterminant(f.block, o.i, o.j));
  } else {
    out["value"] = ratfunc_json(quasideterminant(f.scalar, o.i, o.j));
  }
  emit(out, o);
  if (o.format == "text") std::cout << out["value"].dump() << "\n";
  return kPass;
}

void add_triple_options(CLI::App* app, Options& o) {
  app->add_option("--n", o.n, "rank n of gl_n")->required();
  app->add_option("--g1", o.g1, "Gamma_1, e.g. \"1,2\"");
  app->add_option("--g2", o.g2, "Gamma_2, e.g. \"3,4\"");
  app->add_option("--tau", o.tau, "tau, e.g. \"1>3,2>4\"");
}

void add_output_options(CLI::App* app, Options& o) {
  app->add_option("--json", o.json_out, "also write the JSON result to this path");
  app->add_option("--format", o.format, "stdout format")->check(CLI::IsMember({"json", "text"}));
  app->add_flag("--timing", o.timing, "record wall-clock ms in reports");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for twisted quantum groups of gl_n"};
  app.require_subcommand(1);
  Options o;

  auto* std_r = app.add_subcommand("std-r", "print the standard R-matrix on V (x) V");
  std_r->add_option("--n", o.n, "rank n of gl_n")->required();
  std_r->add_option("--root-order", o.root_order, "q = s^M")->check(CLI::PositiveNumber);
  add_output_options(std_r, o);

  auto* solve = app.add_subcommand("solve-theta", "solve for an admissible Theta");
  add_triple_options(solve, o);
  add_output_options(solve, o);

  auto* qd = app.add_subcommand("quasidet", "quasideterminant |X|_ij of a square matrix from a file");
  qd->add_option("--file", o.file, "NCSquare JSON")->required();
  qd->add_option("--i", o.i, "row (1-based)")->required();
  qd->add_option("--j", o.j, "column (1-based)")->required();
  add_output_options(qd, o);

  auto* check = app.add_subcommand("check", "run an identity check");
  check->require_subcommand(1);
  std::string which;
  for (const char* name : {"ybe", "hecke", "cocycle", "frt", "main"}) {
    auto* sub = check->add_subcommand(name);
    add_triple_options(sub, o);
    add_output_options(sub, o);
    sub->add_option("--theta", o.theta_file, "Theta grid JSON (default: solve)");
    sub->add_option("--beta", o.beta_file, "beta grid JSON (default: 0)");
    sub->add_option("--k1", o.k1, "tensor power of W1")->check(CLI::PositiveNumber);
    sub->add_option("--k2", o.k2, "tensor power of W2")->check(CLI::PositiveNumber);
    sub->add_option("--sigma", o.sigma, "\"all\" or a comma-separated list like \"231,312\"");
    sub->callback([&which, name] { which = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInvalid;
  }

  try {
    if (std_r->parsed()) {
      if (o.n < 1) throw InvalidArgument("--n must be positive");
      emit(rmatrix_json(standard_r(o.n, ScalarField{o.root_order})), o);
      return kPass;
    }
    if (solve->parsed()) {
      BDTriple t = triple_of(o);
      Report v = validate_triple(t);
      if (!v.pass) throw InvalidTriple(v.witness ? v.witness->detail : t.str());
      json j = theta_json(t, solve_theta(t));
      emit(j, o);
      if (o.format == "text") std::cout << j["theta"].dump() << "\n";
      return j["admissible"].get<bool>() ? kPass : kFail;
    }
    if (qd->parsed()) return run_quasidet(o);
    return run_check(which, o);
  } catch (const SubmatrixSingular& e) {
    std::cerr << "singular: " << e.what() << "\n";
    return kSingular;
  } catch (const Singular& e) {
    std::cerr << "singular: " << e.what() << "\n";
    return kSingular;
  } catch (const NoSolution& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  } catch (const Error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  }
}
