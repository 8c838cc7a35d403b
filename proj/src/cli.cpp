#include "rci/cli.hpp"

#include "rci/algebra.hpp"
#include "rci/error.hpp"
#include "rci/flag.hpp"
#include "rci/json_io.hpp"
#include "rci/laurent.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace rci::cli {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
    require(j.is_object() && j.contains(key), std::string("input is missing key '") + key + "'");
    return j[key];
}

std::vector<VPolytope> polytope_list(const json& j, const char* key) {
    const json& list = field(j, key);
    require(list.is_array() && !list.empty(), std::string(key) + " must be a nonempty array");
    std::vector<VPolytope> out;
    for (const auto& p : list) out.push_back(io::polytope_from_json(p));
    return out;
}

SupportSystem system_from_json(const json& j) {
    const json& list = field(j, "system");
    require(list.is_array() && !list.empty(), "system must be a nonempty array");
    std::vector<std::vector<Exponent>> supports;
    std::size_t dim = 0;
    for (const auto& entry : list) {
        std::size_t d = 0;
        supports.push_back(io::support_from_json(entry, d));
        require(dim == 0 || d == dim, "system members have different dimensions");
        dim = d;
    }
    return SupportSystem(dim, std::move(supports));
}

json result_volume(const JobRequest& req) {
    const VPolytope p = io::polytope_from_json(req.input);
    return {{"volume", io::to_json(volume(p))},
            {"affine_dim", p.affine_dim()},
            {"vertex_count", p.vertices().size()}};
}

json result_mixed_volume(const JobRequest& req) {
    const auto bodies = polytope_list(req.input, "polytopes");
    const Rational v = mixed_volume(bodies);
    return {{"mixed_volume", io::to_json(v)},
            {"n_factorial_mixed_volume", io::to_json(v * Rational(factorial(static_cast<unsigned>(bodies.size()))))}};
}

json result_minkowski(const JobRequest& req) {
    const auto bodies = polytope_list(req.input, "polytopes");
    VPolytope sum = bodies.front();
    for (std::size_t i = 1; i < bodies.size(); ++i) sum = minkowski_sum(sum, bodies[i]);
    return {{"polytope", io::to_json(sum)}, {"volume", io::to_json(volume(sum))}};
}

json result_hull(const JobRequest& req) {
    const VPolytope p = io::vpolytope_from_json(req.input);
    return {{"polytope", io::to_json(p)}, {"affine_dim", p.affine_dim()}};
}

json result_convert(const JobRequest& req) {
    require(req.input.is_object(), "input must be a polytope object");
    if (req.input.contains("inequalities")) {
        const VPolytope v = hrep_to_vrep(io::hpolytope_from_json(req.input));
        return {{"vrep", io::to_json(v)}, {"affine_dim", v.affine_dim()}};
    }
    return {{"hrep", io::to_json(vrep_to_hrep(io::vpolytope_from_json(req.input)))}};
}

json result_newton(const JobRequest& req) {
    const LaurentPolynomial f = io::laurent_from_json(req.input);
    return {{"polytope", io::to_json(newton_polytope(f))}};
}

json result_bkk(const JobRequest& req) {
    return {{"bkk_number", io::integer_to_json(bkk_number(system_from_json(req.input)))}};
}

json result_verify_bkk(const JobRequest& req) {
    const SupportSystem sys = system_from_json(req.input);
    OracleOptions opt;
    opt.seed = req.seed;
    opt.trials = req.trials;
    opt.coeff_bound = req.coeff_bound;
    opt.retries = req.retries;
    std::int64_t oracle = 0;
    if (sys.dim() == 1) {
        std::vector<std::int64_t> s;
        for (const auto& e : sys.supports()[0]) s.push_back(e[0]);
        oracle = oracle_roots_univariate(s, opt);
    } else if (sys.dim() == 2) {
        oracle = oracle_roots_bivariate(sys.supports()[0], sys.supports()[1], opt);
    } else {
        fail(ErrorKind::InvalidInput, "root-count oracles exist for dimensions 1 and 2 only");
    }
    const Integer bkk = bkk_number(sys);
    return {{"bkk_number", io::integer_to_json(bkk)},
            {"oracle_count", oracle},
            {"match", bkk == oracle},
            {"seed", req.seed},
            {"trials", req.trials},
            {"coeff_bound", req.coeff_bound},
            {"retries", req.retries}};
}

json result_volpoly(const JobRequest& req) {
    const SymmetricForm f = mixed_volume_tensor(polytope_list(req.input, "generators"));
    return {{"form", io::to_json(f)}, {"polynomial", io::to_json(volume_polynomial(f))}};
}

json algebra_report(const GradedPDAlgebra& alg) {
    json out = io::to_json(alg);
    out["duality"] = io::to_json(verify_poincare_duality(alg));
    return out;
}

json result_algebra(const JobRequest& req) {
    const json& in = req.input;
    require(in.is_object(), "input must be an object");
    if (in.contains("polynomial")) {
        return {{"construction", "polynomial"},
                {"algebra", algebra_report(build_algebra_from_polynomial(io::homogeneous_from_json(in["polynomial"])))}};
    }
    if (in.contains("form")) {
        return {{"construction", "form"},
                {"algebra", algebra_report(build_algebra_from_form(io::symmetric_from_json(in["form"])))}};
    }
    const auto gens = polytope_list(in, "generators");
    const SymmetricForm f = mixed_volume_tensor(gens);
    const GradedPDAlgebra alg = build_algebra_from_polynomial(volume_polynomial(f));
    json self = json::array();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        Vector e(gens.size());
        e[i] = 1;
        self.push_back(io::to_json(self_intersection(alg, alg.linear_class(e))));
    }
    json out = algebra_report(alg);
    out["generator_self_intersections"] = self;
    return {{"construction", "generators"}, {"form", io::to_json(f)}, {"algebra", out}};
}

json result_equiv(const JobRequest& req) {
    const json& in = req.input;
    require(in.is_object(), "input must be an object");
    const HomogeneousForm p = in.contains("generators")
                                  ? volume_polynomial(mixed_volume_tensor(polytope_list(in, "generators")))
                                  : io::homogeneous_from_json(field(in, "polynomial"));
    const SymmetricForm f = in.contains("generators") ? mixed_volume_tensor(polytope_list(in, "generators"))
                                                      : io::symmetric_from_json(field(in, "form"));
    const GradedPDAlgebra ap = build_algebra_from_polynomial(p);
    const GradedPDAlgebra af = build_algebra_from_form(f);
    json hp = json::array(), hf = json::array();
    for (auto h : ap.hilbert()) hp.push_back(h);
    for (auto h : af.hilbert()) hf.push_back(h);
    return {{"equivalent", check_equivalence(ap, af)}, {"hilbert_polynomial", hp}, {"hilbert_form", hf}};
}

json result_gt(const JobRequest& req) {
    const DominantWeight w = io::weight_from_json(req.input);
    const HPolytope h = gt_hrep(w);
    const VPolytope v = hrep_to_vrep(h);
    return {{"dimension", w.flag_dimension()},
            {"affine_dim", v.affine_dim()},
            {"full_dimensional", v.full_dimensional()},
            {"volume", io::to_json(volume(v))},
            {"hrep", io::to_json(h)},
            {"vrep", io::to_json(v)}};
}

json result_flag_degree(const JobRequest& req) {
    const DominantWeight w = io::weight_from_json(req.input);
    const Integer gt = flag_degree_via_gt(w);
    const Integer weyl = flag_degree_via_weyl(w);
    return {{"via_gt", io::integer_to_json(gt)}, {"via_weyl", io::integer_to_json(weyl)}, {"match", gt == weyl}};
}

json result_weyl_dim(const JobRequest& req) {
    const DominantWeight w = io::weight_from_json(req.input);
    const Integer d = weyl_dim(w);
    const Integer c = count_lattice_points(w);
    return {{"weyl_dim", io::integer_to_json(d)}, {"lattice_points", io::integer_to_json(c)}, {"match", d == c}};
}

using Handler = std::function<json(const JobRequest&)>;

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table = {
        {"volume", result_volume},       {"mixed-volume", result_mixed_volume},
        {"minkowski", result_minkowski}, {"hull", result_hull},
        {"convert", result_convert},     {"newton", result_newton},
        {"bkk", result_bkk},             {"verify-bkk", result_verify_bkk},
        {"volpoly", result_volpoly},     {"algebra", result_algebra},
        {"equiv", result_equiv},         {"gt", result_gt},
        {"flag-degree", result_flag_degree}, {"weyl-dim", result_weyl_dim},
    };
    return table;
}

int exit_code(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidInput:
    case ErrorKind::NotDominant:
    case ErrorKind::ShapeMismatch: return 2;
    case ErrorKind::UnboundedPolytope:
    case ErrorKind::ZeroForm:
    case ErrorKind::NotAmple: return 3;
    case ErrorKind::RetriesExhausted: return 4;
    case ErrorKind::NonIntegerDegree: return 1;
    }
    return 1;
}

JobResult failure(int code, const std::string& kind, const std::string& message) {
    return {code, {{"error", {{"kind", kind}, {"message", message}}}}};
}

}  // namespace

const std::vector<std::string>& subcommands() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, h] : handlers()) v.push_back(name);
        return v;
    }();
    return names;
}

JobResult run(const JobRequest& req) {
    auto it = handlers().find(req.subcommand);
    if (it == handlers().end()) return failure(2, "InvalidInput", "unknown subcommand '" + req.subcommand + "'");
    try {
        json result = it->second(req);
        json report = {{"tool", kToolName},
                       {"version", kVersion},
                       {"subcommand", req.subcommand},
                       {"input", req.input},
                       {"result", std::move(result)}};
        return {0, std::move(report)};
    } catch (const Error& e) {
        return failure(exit_code(e.kind()), to_string(e.kind()), e.what());
    } catch (const json::exception& e) {
        return failure(2, "InvalidInput", e.what());
    }
}

std::string render(const json& report, bool pretty) { return report.dump(pretty ? 2 : -1) + "\n"; }

std::string render_table(const json& report) {
    std::ostringstream out;
    const json& body = report.contains("result") ? report["result"] : report;
    std::size_t width = 0;
    for (auto it = body.begin(); it != body.end(); ++it) width = std::max(width, it.key().size());
    for (auto it = body.begin(); it != body.end(); ++it) {
        if (it->is_structured()) continue;
        std::string value = it->is_string() ? it->get<std::string>() : it->dump();
        out << it.key() << std::string(width - it.key().size() + 2, ' ') << value << "\n";
    }
    return out.str();
}

}  // namespace rci::cli
