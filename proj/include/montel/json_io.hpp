#pragma once

#include <json.hpp>

#include "montel/closure.hpp"
#include "montel/difference.hpp"
#include "montel/int_matrix.hpp"
#include "montel/montel_solve.hpp"
#include "montel/reconstruct.hpp"

namespace montel::io {

using json = nlohmann::json;

// Scalars render as exact strings ("3", "-1/2", "2+3/4i"); parsing also
// accepts plain JSON integers. No floating point anywhere.
json scalar_to_json(const GaussianRational& v);
GaussianRational scalar_from_json(const json& j);

json scalar_vector_to_json(const std::vector<GaussianRational>& v);
std::vector<GaussianRational> scalar_vector_from_json(const json& j);

json lattice_to_json(const LatticeVector& v);
LatticeVector lattice_from_json(const json& j);
json multi_index_to_json(const MultiIndex& v);
MultiIndex multi_index_from_json(const json& j);

json box_to_json(const Box& b);

json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const json& j);
json int_matrix_to_json(const IntMatrix& m);

json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);
json exp_polynomial_to_json(const ExpPolynomial& f);
ExpPolynomial exp_polynomial_from_json(const json& j);
json table_to_json(const SampleTable& t);
SampleTable table_from_json(const json& j);

// A function payload is recognized by shape: a table has lower/upper/values;
// otherwise dim/terms, exponential when any term carries "lambda".
json function_to_json(const FunctionValue& f);
FunctionValue function_from_json(const json& j);

AmbientSpec ambient_from_json(int dim, const json& j);
json ambient_to_json(const AmbientSpec& a);

json subspace_to_json(const SubspaceBasis& s);
std::vector<std::vector<GaussianRational>> vector_list_from_json(const json& j);

json frechet_report_to_json(const FrechetReport& r);
json djokovic_to_json(const DjokovicResult& r);
json montel_solution_to_json(const MontelSolution& s);
json degree_bound_to_json(const DegreeBoundReport& r);
json chain_report_to_json(const ChainReport& r);
json counterexample_to_json(const CounterexampleReport& r);
json smith_to_json(const SmithResult& r);
json newton_to_json(const NewtonCoefficients& c);

// Validation helpers shared by the CLI.
const json& require_member(const json& j, const char* key);
int int_from_json(const json& j, const char* what);

} // namespace montel::io
