#include <CLI11.hpp>

#include <iostream>

#include "qsmzv/qsmzv.hpp"

namespace {

struct CommonOpts {
  std::string q = "1/2";
  long M = 10;
  double tol = 1e-12;
};

bool is_float_literal(const std::string& s) { return s.find('.') != std::string::npos; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"word-algebra toolkit for q-analogues of symmetric multiple zeta values"};
  app.require_subcommand(1);

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression");
  CommonOpts eo;
  std::string eval_expr;
  eval_cmd->add_option("--q", eo.q, "q as a rational p/q (exact) or decimal (float mode)");
  eval_cmd->add_option("--M", eo.M, "truncation bound for ZqM");
  eval_cmd->add_option("--tol", eo.tol, "tail tolerance for Zq");
  eval_cmd->add_option("--expr", eval_expr, "expression to evaluate")->required();

  // identity
  auto* id_cmd = app.add_subcommand("identity", "check one catalog identity");
  std::string id_name, id_w, id_w2, id_k;
  int id_order = 5;
  std::string id_format = "json";
  id_cmd->add_option("--id", id_name, "identity id (B1..B16, SG1..SG3, L58)")->required();
  id_cmd->add_option("--order", id_order, "truncation order");
  id_cmd->add_option("--k", id_k, "index parameter, comma separated");
  id_cmd->add_option("--w", id_w, "first word parameter");
  id_cmd->add_option("--w2", id_w2, "second word parameter");
  id_cmd->add_option("--format", id_format, "json or csv");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string suite_name, verify_format = "json", v_id;
  long v_wt_max = -1, v_M = -1, v_order = -1, v_seed = -1, v_pair_wt = -1;
  std::string v_q;
  verify_cmd->add_option("--suite", suite_name, "suite name")->required();
  verify_cmd->add_option("--id", v_id, "restrict the identities suite to one id");
  verify_cmd->add_option("--wt-max", v_wt_max, "weight bound");
  verify_cmd->add_option("--pair-wt-max", v_pair_wt, "combined weight bound");
  verify_cmd->add_option("--M", v_M, "truncation bound");
  verify_cmd->add_option("--q", v_q, "rational q");
  verify_cmd->add_option("--order", v_order, "series order");
  verify_cmd->add_option("--seed", v_seed, "random seed");
  verify_cmd->add_option("--format", verify_format, "json or csv");

  // limit
  auto* limit_cmd = app.add_subcommand("limit", "probe q -> 1 limits on a grid");
  std::string limit_expr, limit_grid = "0.5,0.9,0.99,0.999";
  double limit_tol = 1e-12;
  limit_cmd->add_option("--expr", limit_expr, "expression for the word to probe")->required();
  limit_cmd->add_option("--grid", limit_grid, "comma separated q values");
  limit_cmd->add_option("--tol", limit_tol, "tail tolerance");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*eval_cmd) {
      qsmzv::EvalOptions opts;
      opts.M = eo.M;
      opts.tol = eo.tol;
      if (is_float_literal(eo.q)) {
        opts.float_mode = true;
        opts.q_float = std::stod(eo.q);
      } else {
        opts.q = qsmzv::Rational::parse(eo.q);
      }
      qsmzv::Value v = qsmzv::cli_eval(eval_expr, opts);
      std::cout << qsmzv::value_to_string(v) << "\n";
      return 0;
    }
    if (*id_cmd) {
      qsmzv::IdentityParams p;
      if (!id_w.empty()) p.w = qsmzv::parse_ncpoly(id_w);
      if (!id_w2.empty()) p.w2 = qsmzv::parse_ncpoly(id_w2);
      if (!id_k.empty()) {
        qsmzv::Index k;
        size_t i = 0;
        while (i < id_k.size()) {
          size_t j = id_k.find(',', i);
          if (j == std::string::npos) j = id_k.size();
          k.push_back(std::stoi(id_k.substr(i, j - i)));
          i = j + 1;
        }
        p.k = k;
      }
      qsmzv::Report rep = qsmzv::check_identity(id_name, id_order, p);
      if (id_format == "csv") std::cout << rep.to_csv();
      else std::cout << rep.to_json().dump(2) << "\n";
      return rep.exit_code();
    }
    if (*verify_cmd) {
      qsmzv::SuiteParams params;
      if (v_wt_max >= 0) params["wt_max"] = std::to_string(v_wt_max);
      if (v_pair_wt >= 0) params["pair_wt_max"] = std::to_string(v_pair_wt);
      if (v_M >= 0) params["M"] = std::to_string(v_M);
      if (v_order >= 0) params["order"] = std::to_string(v_order);
      if (v_seed >= 0) params["seed"] = std::to_string(v_seed);
      if (!v_q.empty()) params["q"] = v_q;
      if (!v_id.empty()) params["id"] = v_id;
      qsmzv::Report rep = qsmzv::run_suite(suite_name, params);
      if (verify_format == "csv") std::cout << rep.to_csv();
      else std::cout << rep.to_json().dump(2) << "\n";
      return rep.exit_code();
    }
    if (*limit_cmd) {
      qsmzv::NCPoly w = qsmzv::parse_ncpoly(limit_expr);
      std::vector<double> grid;
      size_t i = 0;
      while (i < limit_grid.size()) {
        size_t j = limit_grid.find(',', i);
        if (j == std::string::npos) j = limit_grid.size();
        grid.push_back(std::stod(limit_grid.substr(i, j - i)));
        i = j + 1;
      }
      auto rows = qsmzv::limit_probe(w, grid);
      nlohmann::json out = nlohmann::json::array();
      for (auto& r : rows) {
        nlohmann::json row = {{"q", r.q}, {"value", r.value}};
        if (r.normalized) row["normalized"] = *r.normalized;
        out.push_back(row);
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }
  } catch (const qsmzv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 126;
  }
  return 0;
}
