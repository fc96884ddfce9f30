#pragma once

#include "cebar/brane.hpp"
#include "cebar/koszul.hpp"

#include <json.hpp>

namespace cebar {

inline constexpr const char* kToolVersion = "cebar 1.0.0";

struct Failure {
    std::string input;
    std::string residual;
};

struct CheckRecord {
    std::string id;
    std::string algebra;
    std::string variant;  // empty when the check does not depend on it
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    long checked = 0;
    std::vector<Failure> failures;
    nlohmann::ordered_json data = nlohmann::ordered_json::object();
    double seconds = 0;
    bool pass() const { return failures.empty(); }
};

// Lie algebra structure
CheckRecord check_jacobi(const LieAlgebra& g);
CheckRecord check_cochain_square(const LieAlgebra& g);
CheckRecord check_ce_square(const LieAlgebra& g, int N);
CheckRecord check_leibniz(const LieAlgebra& g, int maxsize);
CheckRecord check_dk_hat(const LieAlgebra& g, int N);
CheckRecord check_cohomology(const LieAlgebra& g, int N);

// Koszul complex of quadratic data
CheckRecord check_koszul(const QuadraticData& q, int max_arity);
CheckRecord check_koszul_ce(int dimV, int max_arity);

// Duflo element and star product
CheckRecord check_duflo_series(int N);
CheckRecord check_duflo_operator(const LieAlgebra& g, Variant v, int order);
CheckRecord check_star(const LieAlgebra& g, Variant v, int maxdeg);
CheckRecord check_c1_lemma(const LieAlgebra& g, Variant v, int maxdeg);
CheckRecord check_variant_conjugation(const LieAlgebra& g, int maxdeg);

// Bar complex and skew map
CheckRecord check_bar_square(const Brane& br, int maxq, int maxdeg);
CheckRecord check_bar_tensor(const Brane& br, int maxq);
CheckRecord check_phi_chain(const Brane& br, int N);
CheckRecord check_phi_left(const Brane& br, int N);
CheckRecord check_mu_phi(const Brane& br, int N);
CheckRecord check_literal_differential(const Brane& br, int N);  // informational: never fails

// Bimodule identities
CheckRecord check_calibration(int pmax, std::vector<int>& weights);
CheckRecord check_ainf1(const Brane& br, int N);
CheckRecord check_ainf2(const Brane& br, int pmax, int N);
CheckRecord check_degree_certificates(int nmax, int pmax);
CheckRecord check_graph_filter(int n, int k, int l);

nlohmann::ordered_json record_json(const CheckRecord& r, bool timestamps);
nlohmann::ordered_json report_json(const std::vector<CheckRecord>& rs, const std::string& descriptor, bool timestamps);
std::string report_markdown(const std::vector<CheckRecord>& rs, const std::string& descriptor, bool timestamps);
// One line per check plus one line per failure.
std::string summary_lines(const CheckRecord& r);

// Everything the report command runs.
std::vector<CheckRecord> full_report();

}  // namespace cebar
