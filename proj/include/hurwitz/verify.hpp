#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/json_io.hpp"
#include "hurwitz/recursion.hpp"
#include "hurwitz/zalgebra.hpp"

namespace hurwitz {

struct SuiteReport {
  std::string suite;
  std::vector<IdentityCheck> checks;
  bool passed() const;
};

/// Shared state across suites: one recursion table, one generator cache.
struct VerifyContext {
  RecursionEngine engine;
  ZEvaluator eval{ZSeriesOptions{10, std::nullopt, false}};
};

struct KnownExample {
  Partition lambda;
  std::string polynomial;  // parse_zpoly syntax
};

/// The seven published h_lambda polynomials.
const std::vector<KnownExample>& known_examples();

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(std::string_view name, VerifyContext& ctx);

SuiteReport suite_paper_examples(VerifyContext& ctx);
SuiteReport suite_triple_agreement(int max_degree = 4, int max_m = 4);
SuiteReport suite_two_formula(int q_weight_bound = 6, int beta_bound = 6);
SuiteReport suite_eigenbasis(int max_degree = 6);
SuiteReport suite_string_dilaton(VerifyContext& ctx);
SuiteReport suite_psi_string_dilaton(int max_a = 3, int max_ell = 4, int t_weight_bound = 10);
SuiteReport suite_eqzred(int max_d = 3, int max_r = 3, int q_weight_bound = 8);
SuiteReport suite_kp(int residual_bound = 6, int polynomial_bound = 8);
SuiteReport suite_pivot_independence(VerifyContext& ctx, int max_lambda_weight = 5, int max_r = 3,
                                     int max_nu_weight = 2);
SuiteReport suite_reduced_agreement(VerifyContext& ctx, int max_lambda_weight = 5, int max_r = 3,
                                    int max_nu_weight = 2);
SuiteReport suite_bridge(VerifyContext& ctx, int max_degree = 6, int max_length = 3, int q_weight_bound = 8);
SuiteReport suite_special_degree(VerifyContext& ctx, int max_k = 6);

io::Json to_json(const SuiteReport& r);

}  // namespace hurwitz
