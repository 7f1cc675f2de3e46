// Command-line frontend: builds family braces, analyzes structure, verifies
// axioms, derives Yang-Baxter solutions, and forms quotients.
//
// Exit codes: 0 success, 1 property failure, 2 precondition or structural
// error, 3 resource guard.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "braces/analysis.hpp"
#include "braces/core.hpp"
#include "braces/families.hpp"
#include "braces/io.hpp"
#include "braces/products.hpp"
#include "braces/ybe.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitProperty = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitGuard = 3;

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

braces::Limits limits_from_env() {
  braces::Limits limits;
  if (const char* env = std::getenv("BRACE_MAX_ORDER")) {
    limits.max_order = std::stoi(env);
    limits.validate();
  }
  return limits;
}

braces::ModMatrix matrix_from_json(const braces::json& j, int n, long long mod) {
  std::vector<long long> entries;
  for (const auto& e : j) entries.push_back(e.get<long long>());
  if (entries.size() != static_cast<std::size_t>(n) * n)
    throw braces::StructuralError("matrix entry count does not match rank");
  return braces::ModMatrix(n, mod, std::move(entries));
}

braces::FiniteBrace build_from_params(const braces::json& params,
                                      const braces::Limits& limits) {
  const std::string family = params.at("family").get<std::string>();
  if (family == "trivial") {
    std::vector<int> orders;
    for (const auto& e : params.at("orders")) orders.push_back(e.get<int>());
    return braces::trivial_brace(braces::AbelianGroupSpec(orders), limits);
  }
  if (family == "b3") return braces::build_b3(limits);
  if (family == "wreath_simple")
    return braces::build_wreath_simple(params.at("p1").get<int>(),
                                       params.at("p2").get<int>(), limits);
  if (family == "concrete") {
    std::vector<int> l;
    for (const auto& e : params.at("l")) l.push_back(e.get<int>());
    return braces::build_concrete(params.at("p").get<int>(), l, limits).brace;
  }
  if (family == "generalized") {
    braces::GeneralizedData data;
    data.p = params.at("p").get<int>();
    for (const auto& bj : params.at("blocks")) {
      braces::GeneralizedBlock blk;
      blk.l = bj.at("l").get<int>();
      blk.n = bj.at("n").get<int>();
      blk.b = matrix_from_json(bj.at("b"), blk.n, data.p);
      blk.c = matrix_from_json(bj.at("c"), blk.n, data.p);
      blk.f = matrix_from_json(bj.at("f"), blk.n, data.p);
      blk.gamma = bj.at("gamma").get<long long>();
      data.blocks.push_back(std::move(blk));
    }
    auto result = braces::build_generalized(data, limits);
    result.brace.merge_meta(
        {{"predicted_simple", result.predicted_simple ? "true" : "false"}});
    return std::move(result.brace);
  }
  if (family == "h_brace" || family == "h_prime") {
    const int p = params.at("p").get<int>();
    const int r = params.at("r").get<int>();
    const int n = params.at("n").get<int>();
    std::vector<long long> qc;
    for (const auto& e : params.at("Q")) qc.push_back(e.get<long long>());
    braces::QuadraticFormSpec Q(p, r, n, std::move(qc));
    braces::ModMatrix f = matrix_from_json(params.at("f"), n, Q.modulus());
    if (family == "h_brace") return braces::build_H(Q, f, limits);
    return braces::build_H_prime_and_phi(Q, f, limits).h_prime;
  }
  if (family == "matched") {
    braces::MatchedData data{{}, {}};
    for (const auto& fj : params.at("factors")) {
      const int p = fj.at("p").get<int>();
      const int r = fj.at("r").get<int>();
      const int n = fj.at("n").get<int>();
      std::vector<long long> qc;
      for (const auto& e : fj.at("Q")) qc.push_back(e.get<long long>());
      braces::QuadraticFormSpec Q(p, r, n, std::move(qc));
      long long m = Q.modulus();
      data.factors.push_back({std::move(Q), matrix_from_json(fj.at("f"), n, m),
                              matrix_from_json(fj.at("c"), n, m)});
    }
    for (const auto& e : params.at("v_s")) data.v_s.push_back(e.get<long long>());
    auto result = braces::build_matched_and_phi_prime(data, limits);
    result.matched.merge_meta(
        {{"predicted_simple", result.predicted_simple ? "true" : "false"}});
    return std::move(result.matched);
  }
  throw braces::PreconditionError("unknown family: " + family);
}

braces::json verify_report_json(const braces::VerifyReport& report) {
  braces::json j;
  j["valid"] = report.valid;
  j["exhaustive"] = report.exhaustive;
  if (!report.exhaustive) j["checked_triples"] = report.checked_triples;
  j["violations"] = braces::json::array();
  for (const auto& v : report.violations)
    j["violations"].push_back(
        {{"axiom", v.axiom}, {"witness", {v.a, v.b, v.c}}});
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bracetool: finite left braces and their Yang-Baxter solutions"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "construct a family brace");
  std::string family, orders_csv, l_csv, params_path, out_path;
  int p1 = 0, p2 = 0, p = 0;
  build->add_option("--family", family,
                    "trivial|b3|wreath_simple|concrete|generalized|h_brace|matched");
  build->add_option("--orders", orders_csv, "cyclic orders for --family trivial");
  build->add_option("--p1", p1, "first prime for wreath_simple");
  build->add_option("--p2", p2, "second prime for wreath_simple");
  build->add_option("--p", p, "prime for concrete");
  build->add_option("--l", l_csv, "moduli list for concrete, e.g. 3,3");
  build->add_option("--params", params_path, "family parameter JSON file");
  build->add_option("--out", out_path, "output brace file")->required();

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "structural analysis report");
  std::string analyze_in, analyze_out;
  bool with_ideals = false;
  analyze_cmd->add_option("file", analyze_in, "brace JSON file")->required();
  analyze_cmd->add_option("--out", analyze_out, "write report here instead of stdout");
  analyze_cmd->add_flag("--ideals", with_ideals, "include the ideal count");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check the brace axioms");
  std::string verify_in;
  verify_cmd->add_option("file", verify_in, "brace JSON file")->required();

  // ybe
  auto* ybe_cmd = app.add_subcommand("ybe", "derive the Yang-Baxter solution");
  std::string ybe_in, ybe_out;
  bool ybe_verify = false;
  ybe_cmd->add_option("file", ybe_in, "brace JSON file")->required();
  ybe_cmd->add_option("--out", ybe_out, "output solution file")->required();
  ybe_cmd->add_flag("--verify", ybe_verify,
                    "check braid, involutivity and non-degeneracy");

  // quotient
  auto* quot_cmd = app.add_subcommand("quotient", "quotient by a generated ideal");
  std::string quot_in, quot_out, ideal_csv;
  bool proper = false;
  quot_cmd->add_option("file", quot_in, "brace JSON file")->required();
  quot_cmd->add_option("--ideal", ideal_csv, "elements generating the ideal")
      ->required();
  quot_cmd->add_option("--out", quot_out, "output brace file")->required();
  quot_cmd->add_flag("--proper", proper,
                     "fail when the generated ideal is the whole brace");

  CLI11_PARSE(app, argc, argv);

  try {
    braces::Limits limits = limits_from_env();

    if (build->parsed()) {
      braces::json params;
      if (!params_path.empty()) {
        params = braces::read_json_file(params_path);
        if (!family.empty() && params.value("family", family) != family)
          throw braces::PreconditionError("--family conflicts with --params");
      } else {
        if (family.empty())
          throw braces::PreconditionError("build needs --family or --params");
        params["family"] = family;
        if (family == "trivial") params["orders"] = parse_int_list(orders_csv);
        if (family == "wreath_simple") {
          params["p1"] = p1;
          params["p2"] = p2;
        }
        if (family == "concrete") {
          params["p"] = p;
          params["l"] = parse_int_list(l_csv);
        }
      }
      braces::FiniteBrace B = build_from_params(params, limits);
      braces::write_brace_file(B, out_path);
      std::cerr << "wrote order-" << B.order() << " brace to " << out_path
                << "\n";
      return kExitOk;
    }

    if (analyze_cmd->parsed()) {
      braces::FiniteBrace B = braces::read_brace_file(analyze_in);
      braces::VerifyReport vr = braces::verify_brace_axioms(B, limits);
      if (!vr.valid) {
        std::cout << verify_report_json(vr).dump(2) << "\n";
        std::cerr << "invalid brace\n";
        return kExitPrecondition;
      }
      braces::AnalysisReport report = braces::analyze(B, with_ideals, limits);
      braces::json j = braces::analysis_report_to_json(report);
      if (analyze_out.empty())
        std::cout << j.dump(2) << "\n";
      else
        braces::write_json_file(j, analyze_out);
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      braces::FiniteBrace B = braces::read_brace_file(verify_in);
      braces::VerifyReport vr = braces::verify_brace_axioms(B, limits);
      std::cout << verify_report_json(vr).dump(2) << "\n";
      return vr.valid ? kExitOk : kExitProperty;
    }

    if (ybe_cmd->parsed()) {
      braces::FiniteBrace B = braces::read_brace_file(ybe_in);
      braces::VerifyReport vr = braces::verify_brace_axioms(B, limits);
      if (!vr.valid) {
        std::cerr << "invalid brace\n";
        return kExitPrecondition;
      }
      braces::YBESolution sol = braces::solution_from_brace(B);
      braces::write_json_file(braces::solution_to_json(sol), ybe_out);
      if (ybe_verify) {
        auto braid = braces::verify_braid(sol, limits);
        auto invol = braces::verify_involutive(sol);
        auto nondeg = braces::verify_nondegenerate(sol);
        std::cerr << "braid " << (braid.ok ? "ok" : "FAIL") << ", involutive "
                  << (invol.ok ? "ok" : "FAIL") << ", non-degenerate "
                  << (nondeg.ok ? "ok" : "FAIL") << "\n";
        if (!braid.ok || !invol.ok || !nondeg.ok) return kExitProperty;
      }
      return kExitOk;
    }

    if (quot_cmd->parsed()) {
      braces::FiniteBrace B = braces::read_brace_file(quot_in);
      std::vector<braces::Elem> seed;
      for (int e : parse_int_list(ideal_csv)) {
        if (e < 0 || e >= B.order())
          throw braces::StructuralError("ideal element out of range");
        seed.push_back(static_cast<braces::Elem>(e));
      }
      braces::Subset closure =
          braces::ideal_closure(B, braces::Subset(std::move(seed)));
      std::cerr << "ideal closure has " << closure.size() << " elements\n";
      if (proper && closure.size() == static_cast<std::size_t>(B.order()))
        throw braces::PreconditionError(
            "generated ideal is the whole brace (--proper was given)");
      braces::QuotientResult q = braces::quotient(B, closure, limits);
      std::string proj;
      for (std::size_t i = 0; i < q.projection.image.size(); ++i)
        proj += (i ? "," : "") + std::to_string(q.projection.image[i]);
      q.quotient.merge_meta({{"projection", proj}});
      braces::write_brace_file(q.quotient, quot_out);
      std::cerr << "wrote order-" << q.quotient.order() << " quotient to "
                << quot_out << "\n";
      return kExitOk;
    }
  } catch (const braces::SizeGuardError& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const braces::BraceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitOk;
}
