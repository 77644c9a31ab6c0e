#include "montel/json_io.hpp"

#include <map>

namespace montel::io {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw input_error(msg);
}

} // namespace

const json& require_member(const json& j, const char* key) {
    require(j.is_object(), std::string("expected an object with '") + key + "'");
    auto it = j.find(key);
    require(it != j.end(), std::string("missing field '") + key + "'");
    return *it;
}

int int_from_json(const json& j, const char* what) {
    require(j.is_number_integer(), std::string(what) + " must be an integer");
    return j.get<int>();
}

json scalar_to_json(const GaussianRational& v) { return v.str(); }

GaussianRational scalar_from_json(const json& j) {
    if (j.is_number_integer()) return {mpz_class(static_cast<long>(j.get<long long>()))};
    require(j.is_string(), "scalar must be a string or an integer");
    return GaussianRational::parse(j.get<std::string>());
}

json scalar_vector_to_json(const std::vector<GaussianRational>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(scalar_to_json(x));
    return out;
}

std::vector<GaussianRational> scalar_vector_from_json(const json& j) {
    require(j.is_array() && !j.empty(), "expected a non-empty array of scalars");
    std::vector<GaussianRational> out;
    for (const auto& x : j) out.push_back(scalar_from_json(x));
    return out;
}

json lattice_to_json(const LatticeVector& v) {
    json out = json::array();
    for (long long x : v.entries) out.push_back(x);
    return out;
}

LatticeVector lattice_from_json(const json& j) {
    require(j.is_array() && !j.empty(), "expected a non-empty array of integers");
    std::vector<long long> e;
    for (const auto& x : j) {
        require(x.is_number_integer(), "lattice vector entries must be integers");
        e.push_back(x.get<long long>());
    }
    return LatticeVector(std::move(e));
}

json multi_index_to_json(const MultiIndex& v) {
    json out = json::array();
    for (int x : v.entries) out.push_back(x);
    return out;
}

MultiIndex multi_index_from_json(const json& j) {
    require(j.is_array() && !j.empty(), "expected a non-empty array of exponents");
    std::vector<int> e;
    for (const auto& x : j) {
        require(x.is_number_integer(), "multi-index entries must be integers");
        e.push_back(x.get<int>());
    }
    return MultiIndex(std::move(e));
}

json box_to_json(const Box& b) {
    return json{{"lower", lattice_to_json(b.lower)}, {"upper", lattice_to_json(b.upper)}};
}

json matrix_to_json(const ExactMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ExactMatrix matrix_from_json(const json& j) {
    require(j.is_array() && !j.empty(), "matrix must be a non-empty array of rows");
    const int rows = static_cast<int>(j.size());
    require(j[0].is_array() && !j[0].empty(), "matrix rows must be non-empty arrays");
    const int cols = static_cast<int>(j[0].size());
    ExactMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        require(j[i].is_array() && static_cast<int>(j[i].size()) == cols,
                "matrix rows must all have the same length");
        for (int c = 0; c < cols; ++c) m.at(i, c) = scalar_from_json(j[i][c]);
    }
    return m;
}

json int_matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json polynomial_to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [alpha, c] : p.terms()) {
        terms.push_back(json{{"alpha", multi_index_to_json(alpha)}, {"coeff", scalar_to_json(c)}});
    }
    return json{{"dim", p.dim()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const json& j) {
    const int dim = int_from_json(require_member(j, "dim"), "dim");
    require(dim >= 1, "dim must be positive");
    const json& terms = require_member(j, "terms");
    require(terms.is_array(), "terms must be an array");
    Polynomial p(dim);
    for (const auto& t : terms) {
        MultiIndex alpha = multi_index_from_json(require_member(t, "alpha"));
        require(alpha.dim() == dim, "term alpha has wrong dimension");
        p.add_term(alpha, scalar_from_json(require_member(t, "coeff")));
    }
    return p;
}

json exp_polynomial_to_json(const ExpPolynomial& f) {
    json terms = json::array();
    for (const auto& t : f.terms()) {
        for (const auto& [alpha, c] : t.poly.terms()) {
            terms.push_back(json{{"alpha", multi_index_to_json(alpha)},
                                 {"coeff", scalar_to_json(c)},
                                 {"lambda", scalar_vector_to_json(t.lambda)}});
        }
    }
    return json{{"dim", f.dim()}, {"terms", std::move(terms)}};
}

ExpPolynomial exp_polynomial_from_json(const json& j) {
    const int dim = int_from_json(require_member(j, "dim"), "dim");
    require(dim >= 1, "dim must be positive");
    const json& terms = require_member(j, "terms");
    require(terms.is_array(), "terms must be an array");
    std::vector<ExpMonomialTerm> raw;
    for (const auto& t : terms) {
        MultiIndex alpha = multi_index_from_json(require_member(t, "alpha"));
        require(alpha.dim() == dim, "term alpha has wrong dimension");
        GaussianRational c = scalar_from_json(require_member(t, "coeff"));
        std::vector<GaussianRational> lambda(dim, GaussianRational(1));
        if (t.is_object() && t.contains("lambda")) {
            lambda = scalar_vector_from_json(t["lambda"]);
            require(static_cast<int>(lambda.size()) == dim, "term lambda has wrong dimension");
        }
        raw.emplace_back(std::move(lambda), Polynomial::monomial(alpha, c));
    }
    return {dim, std::move(raw)};
}

json table_to_json(const SampleTable& t) {
    json values = json::array();
    t.for_each_point([&](const LatticeVector& n, const GaussianRational& v) {
        values.push_back(json::array({lattice_to_json(n), scalar_to_json(v)}));
    });
    return json{{"lower", lattice_to_json(t.lower())},
                {"upper", lattice_to_json(t.upper())},
                {"values", std::move(values)}};
}

SampleTable table_from_json(const json& j) {
    LatticeVector lower = lattice_from_json(require_member(j, "lower"));
    LatticeVector upper = lattice_from_json(require_member(j, "upper"));
    require(lower.dim() == upper.dim(), "table corners have mismatched dimensions");
    Box box{lower, upper};
    require(!box.empty(), "table box is empty");
    const json& values = require_member(j, "values");
    require(values.is_array(), "values must be an array of [point, value] pairs");

    std::map<std::vector<long long>, GaussianRational> byPoint;
    for (const auto& entry : values) {
        require(entry.is_array() && entry.size() == 2, "each value entry must be [point, value]");
        LatticeVector n = lattice_from_json(entry[0]);
        require(box.contains(n), "table value lies outside the box");
        auto [it, inserted] = byPoint.emplace(n.entries, scalar_from_json(entry[1]));
        (void)it;
        require(inserted, "duplicate table point");
    }
    require(static_cast<long long>(byPoint.size()) == box.point_count(),
            "table must assign exactly one value to every point of the box");

    std::vector<GaussianRational> ordered;
    ordered.reserve(byPoint.size());
    for_each_lattice_point(box, [&](const LatticeVector& n) {
        ordered.push_back(byPoint.at(n.entries));
    });
    return {lower, upper, std::move(ordered)};
}

json function_to_json(const FunctionValue& f) {
    if (const auto* p = std::get_if<Polynomial>(&f)) return polynomial_to_json(*p);
    if (const auto* e = std::get_if<ExpPolynomial>(&f)) return exp_polynomial_to_json(*e);
    return table_to_json(std::get<SampleTable>(f));
}

FunctionValue function_from_json(const json& j) {
    require(j.is_object(), "function payload must be an object");
    if (j.contains("values") || j.contains("lower") || j.contains("upper")) {
        return table_from_json(j);
    }
    const json& terms = require_member(j, "terms");
    require(terms.is_array(), "terms must be an array");
    bool exponential = false;
    for (const auto& t : terms) {
        if (t.is_object() && t.contains("lambda")) exponential = true;
    }
    if (exponential) return exp_polynomial_from_json(j);
    return polynomial_from_json(j);
}

AmbientSpec ambient_from_json(int dim, const json& j) {
    require(j.is_object(), "ambient must be an object");
    AmbientSpec a;
    a.dim = dim;
    if (j.contains("polyDegree") && !j["polyDegree"].is_null()) {
        a.polyDegree = int_from_json(j["polyDegree"], "polyDegree");
    }
    if (j.contains("expModules")) {
        require(j["expModules"].is_array(), "expModules must be an array");
        for (const auto& m : j["expModules"]) {
            ExpModuleSpec spec;
            spec.lambda = scalar_vector_from_json(require_member(m, "lambda"));
            spec.maxDegree = int_from_json(require_member(m, "maxDegree"), "maxDegree");
            a.expModules.push_back(std::move(spec));
        }
    }
    a.validate();
    return a;
}

json ambient_to_json(const AmbientSpec& a) {
    json mods = json::array();
    for (const auto& m : a.expModules) {
        mods.push_back(json{{"lambda", scalar_vector_to_json(m.lambda)},
                            {"maxDegree", m.maxDegree}});
    }
    json out{{"dim", a.dim}, {"expModules", std::move(mods)}};
    out["polyDegree"] = a.polyDegree ? json(*a.polyDegree) : json(nullptr);
    return out;
}

json subspace_to_json(const SubspaceBasis& s) {
    json rows = json::array();
    for (const auto& v : s.rows()) rows.push_back(scalar_vector_to_json(v));
    return json{{"ambient_dim", s.ambientDim()}, {"dimension", s.dimension()},
                {"basis", std::move(rows)}};
}

std::vector<std::vector<GaussianRational>> vector_list_from_json(const json& j) {
    require(j.is_array(), "expected an array of vectors");
    std::vector<std::vector<GaussianRational>> out;
    for (const auto& v : j) out.push_back(scalar_vector_from_json(v));
    return out;
}

namespace {

json step_status_to_json(StepStatus s) {
    switch (s) {
        case StepStatus::holds: return "holds";
        case StepStatus::fails: return "fails";
        default: return "window_too_small";
    }
}

json witness_to_json(const StepVerdict& v) {
    json w{{"step", lattice_to_json(v.step)}};
    if (v.residual) w["residual"] = function_to_json(*v.residual);
    if (v.counterpoint) {
        w["point"] = lattice_to_json(v.counterpoint->first);
        w["value"] = scalar_to_json(v.counterpoint->second);
    }
    return w;
}

} // namespace

json frechet_report_to_json(const FrechetReport& r) {
    json steps = json::array();
    json witness = nullptr;
    for (const auto& v : r.perStep) {
        json entry{{"step", lattice_to_json(v.step)},
                   {"status", step_status_to_json(v.status)}};
        if (v.window) entry["window"] = box_to_json(*v.window);
        if (v.status == StepStatus::fails) {
            entry["witness"] = witness_to_json(v);
            if (witness.is_null()) witness = entry["witness"];
        }
        steps.push_back(std::move(entry));
    }
    return json{{"ok", r.overall ? json(*r.overall) : json(nullptr)},
                {"per_step", std::move(steps)},
                {"witness", std::move(witness)}};
}

json djokovic_to_json(const DjokovicResult& r) {
    return json{{"ok", r.equal},
                {"lhs", polynomial_to_json(r.lhs)},
                {"rhs", polynomial_to_json(r.rhs)}};
}

json montel_solution_to_json(const MontelSolution& s) {
    json sols = json::array();
    for (const auto& f : s.basis) sols.push_back(exp_polynomial_to_json(f));
    json out{{"dimension", static_cast<int>(s.basis.size())},
             {"solutions", std::move(sols)},
             {"generates_lattice", s.generatesLattice},
             {"all_polynomial", s.allPolynomial},
             {"warnings", s.warnings}};
    out["d1_degree_ok"] = s.d1DegreeOk ? json(*s.d1DegreeOk) : json(nullptr);
    out["max_total_degree"] = s.maxTotalDegree ? json(*s.maxTotalDegree) : json(nullptr);
    return out;
}

json degree_bound_to_json(const DegreeBoundReport& r) {
    json per = json::array();
    for (const auto& d : r.perVariable) per.push_back(d ? json(*d) : json(nullptr));
    json out{{"m", r.m},
             {"dim", r.dim},
             {"bound", r.bound},
             {"vacuous", r.vacuous},
             {"applicable", r.applicable}};
    out["pass"] = r.pass ? json(*r.pass) : json(nullptr);
    out["total_degree"] = r.totalDegree ? json(*r.totalDegree) : json(nullptr);
    out["per_variable"] = std::move(per);
    return out;
}

json chain_report_to_json(const ChainReport& r) {
    json out{{"size", r.size},
             {"m", r.m},
             {"lambda", scalar_to_json(r.lambda)},
             {"lambda_nonzero", r.lambdaNonzero},
             {"chain_invariant_under_a", r.chainInvariantUnderA},
             {"chain_invariant_under_power", r.chainInvariantUnderPower},
             {"degenerate", r.degenerate},
             {"ok", r.ok()}};
    out["power_shape_ok"] = r.powerShapeOk ? json(*r.powerShapeOk) : json(nullptr);
    out["superdiagonal_matches_formula"] =
        r.superdiagMatchesFormula ? json(*r.superdiagMatchesFormula) : json(nullptr);
    out["power_is_zero"] = r.powerIsZero ? json(*r.powerIsZero) : json(nullptr);
    json sd = json::array();
    for (const auto& v : r.superdiagonal) sd.push_back(scalar_to_json(v));
    out["superdiagonal"] = std::move(sd);
    return out;
}

json counterexample_to_json(const CounterexampleReport& r) {
    json pure = json::array();
    for (const auto& c : r.pure) {
        pure.push_back(json{{"axis", c.axis},
                            {"order", c.order},
                            {"zero", c.zero},
                            {"window", box_to_json(c.window)}});
    }
    return json{{"radius", r.radius},
                {"max_order", r.maxOrder},
                {"pure", std::move(pure)},
                {"mixed",
                 json{{"window", box_to_json(r.mixedWindow)},
                      {"constant_one", r.mixedConstantOne},
                      {"value_at_origin", scalar_to_json(r.mixedValueAtOrigin)}}},
                {"all_pure_vanish", r.allPureVanish},
                {"certified", r.certified()}};
}

json smith_to_json(const SmithResult& r) {
    json factors = json::array();
    for (const auto& f : r.invariantFactors) factors.push_back(f.get_str());
    return json{{"U", int_matrix_to_json(r.u)},
                {"S", int_matrix_to_json(r.s)},
                {"V", int_matrix_to_json(r.v)},
                {"invariant_factors", std::move(factors)}};
}

json newton_to_json(const NewtonCoefficients& c) {
    json out = json::array();
    for (const auto& [alpha, v] : c) {
        out.push_back(json{{"alpha", multi_index_to_json(alpha)}, {"coeff", scalar_to_json(v)}});
    }
    return json{{"coefficients", std::move(out)}};
}

} // namespace montel::io
