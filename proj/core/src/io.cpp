#include "juntalab/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "juntalab/version.hpp"

namespace juntalab {

namespace {

using nlohmann::json;

json parse(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument(std::string(what) + ": invalid JSON");
    return j;
}

std::string lower_ext(const std::string& path) {
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos) return "";
    std::string ext = path.substr(dot + 1);
    for (char& c : ext) c = static_cast<char>(std::tolower(c));
    return ext;
}

}  // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), "cannot open " + path + " for writing");
    out << text;
    require(out.good(), "write failed for " + path);
}

TrigPoly trigpoly_from_json(const std::string& text) {
    json j = parse(text, "trigpoly");
    require(j.contains("dim") && j.contains("coeffs"), "trigpoly: needs dim and coeffs");
    const int dim = j["dim"].get<int>();
    std::vector<std::pair<Freq, std::complex<double>>> terms;
    for (const auto& rec : j["coeffs"]) {
        Freq k = rec.at("k").get<Freq>();
        const double re = rec.value("re", 0.0);
        const double im = rec.value("im", 0.0);
        terms.emplace_back(std::move(k), std::complex<double>(re, im));
    }
    return TrigPoly::from_terms(dim, terms);
}

std::string trigpoly_to_json(const TrigPoly& f) {
    json coeffs = json::array();
    for (const auto& [k, c] : f.terms())
        coeffs.push_back({{"k", k}, {"re", c.real()}, {"im", c.imag()}});
    json j{{"dim", f.dim()}, {"coeffs", coeffs}};
    return j.dump();
}

ProductFn load_function(const std::string& path) {
    const std::string ext = lower_ext(path);
    if (ext == "json") return ProductFn(trigpoly_from_json(read_text_file(path)));
    if (ext == "csv") return ProductFn(read_grid_csv(path));
    return ProductFn(load_trigpoly(path));
}

BoxSet boxset_from_json(const std::string& text) {
    json j = parse(text, "boxset");
    require(j.contains("dim") && j.contains("boxes"), "boxset: needs dim and boxes");
    const int dim = j["dim"].get<int>();
    std::vector<std::vector<Interval>> boxes;
    for (const auto& box : j["boxes"]) {
        std::vector<Interval> ivs;
        for (const auto& iv : box) {
            require(iv.is_array() && iv.size() == 2, "boxset: interval must be [lo, hi]");
            ivs.push_back({iv[0].get<double>(), iv[1].get<double>()});
        }
        boxes.push_back(std::move(ivs));
    }
    return BoxSet(dim, std::move(boxes));
}

std::string boxset_to_json(const BoxSet& a) {
    json boxes = json::array();
    for (const auto& box : a.boxes()) {
        json ivs = json::array();
        for (const auto& iv : box) ivs.push_back({iv.lo, iv.hi});
        boxes.push_back(ivs);
    }
    json j{{"dim", a.dim()}, {"boxes", boxes}};
    return j.dump();
}

BoxSet load_boxset(const std::string& path) {
    return boxset_from_json(read_text_file(path));
}

FiniteMetricSpace metric_space_from_json(const std::string& text) {
    json j = parse(text, "metric space");
    if (j.contains("dist"))
        return FiniteMetricSpace(j["dist"].get<std::vector<std::vector<double>>>());
    if (j.contains("points"))
        return FiniteMetricSpace::from_points(j["points"].get<std::vector<std::vector<double>>>());
    throw std::invalid_argument("metric space: needs dist matrix or points");
}

std::string metric_space_to_json(const FiniteMetricSpace& space) {
    json j{{"dist", space.matrix()}};
    return j.dump();
}

ModulusSpec modulus_from_json(const std::string& text) {
    json j = parse(text, "modulus");
    require(j.contains("knots"), "modulus: needs knots");
    std::vector<std::pair<double, double>> knots;
    for (const auto& k : j["knots"]) {
        require(k.is_array() && k.size() == 2, "modulus: knot must be [r, omega]");
        knots.emplace_back(k[0].get<double>(), k[1].get<double>());
    }
    return ModulusSpec::from_knots(std::move(knots));
}

std::string modulus_to_json(const ModulusSpec& omega) {
    json knots = json::array();
    for (const auto& [r, w] : omega.knots()) knots.push_back({r, w});
    json j{{"knots", knots}};
    return j.dump();
}

VectorMap load_vector_map(const std::string& path) {
    json j = parse(read_text_file(path), "vector map");
    const std::string family = j.value("family", "");
    if (family == "identity") return identity_map(j.at("n").get<int>());
    if (family == "sine") return sine_family(j.at("n").get<int>());
    if (family == "grid") {
        VectorMap F;
        F.note = "grid dumps";
        require(j.contains("components") && j["components"].is_array() &&
                    !j["components"].empty(),
                "vector map: grid family needs component paths");
        for (const auto& p : j["components"])
            F.components.push_back(read_grid_csv(p.get<std::string>()));
        F.input_dim = F.components.front().dim();
        F.output_dim = static_cast<int>(F.components.size());
        for (const auto& c : F.components)
            require(c.dim() == F.input_dim, "vector map: component dimensions differ");
        F.lipschitz = j.value("lipschitz", 1.0);
        return F;
    }
    throw std::invalid_argument("vector map: unknown family '" + family + "'");
}

SuiteSpec suite_from_json(const std::string& text) {
    json j = parse(text, "suite");
    SuiteSpec s;
    s.count = j.value("count", s.count);
    s.dim_max = j.value("dim_max", s.dim_max);
    s.degree = j.value("degree", s.degree);
    s.scale = j.value("scale", s.scale);
    s.max_modes = j.value("max_modes", s.max_modes);
    s.seed = j.value("seed", s.seed);
    require(j.contains("checks") && j["checks"].is_array(), "suite: needs a checks array");
    for (const auto& c : j["checks"]) {
        SuiteCheck check;
        check.name = c.at("name").get<std::string>();
        if (c.contains("t")) check.t_values = c["t"].get<std::vector<double>>();
        if (c.contains("eta")) check.eta_values = c["eta"].get<std::vector<double>>();
        s.checks.push_back(std::move(check));
    }
    return s;
}

SuiteSpec load_suite(const std::string& path) {
    return suite_from_json(read_text_file(path));
}

std::vector<std::int64_t> coords_one_based(const CoordSet& s) {
    std::vector<std::int64_t> out;
    out.reserve(s.coords().size());
    for (int c : s.coords()) out.push_back(c + 1);
    return out;
}

Record to_record(const InequalityReport& r) {
    Record rec;
    rec.set("name", r.name);
    rec.set("t", r.t > 0.0 ? Record::Value(r.t) : Record::Value(nullptr));
    rec.set("eta", r.eta > 0.0 ? Record::Value(r.eta) : Record::Value(nullptr));
    rec.set("p", r.p > 0.0 ? Record::Value(r.p) : Record::Value(nullptr));
    rec.set("dim", static_cast<std::int64_t>(r.dim));
    rec.set("degree", static_cast<std::int64_t>(r.degree));
    rec.set("seed", static_cast<std::int64_t>(r.seed));
    rec.set("lhs", r.lhs);
    rec.set("rhs", r.rhs);
    rec.set("slack", r.slack);
    rec.set("lhs_half_width", r.lhs_half_width);
    rec.set("rhs_half_width", r.rhs_half_width);
    rec.set("tolerance", r.tolerance);
    rec.set("pass", r.pass);
    rec.set("convention", r.convention);
    rec.set("version", std::string(kVersion));
    return rec;
}

Record junta_record(const JuntaApproximation& ja, std::uint64_t seed) {
    Record rec;
    rec.set("S", coords_one_based(ja.S));
    rec.set("eta", ja.schedule.eta);
    rec.set("t", ja.schedule.t);
    rec.set("epsilon", ja.schedule.epsilon);
    rec.set("mode", to_string(ja.schedule.mode));
    rec.set("l1_error", ja.l1_error.value);
    rec.set("half_width", ja.l1_error.half_width);
    if (std::isfinite(ja.size_bound))
        rec.set("size_bound", ja.size_bound);
    else
        rec.set("size_bound", std::string("inf"));
    rec.set("rescaling", ja.rescale);
    rec.set("log_eta", ja.schedule.log_eta);
    rec.set("size_certificate_ok", ja.size_certificate_ok);
    rec.set("theoretical_bound", ja.theoretical_bound);
    rec.set("note", ja.note);
    rec.set("seed", static_cast<std::int64_t>(seed));
    rec.set("version", std::string(kVersion));
    return rec;
}

Record influence_record(const InfluenceProfile& prof, const QuadratureSpec& quad,
                        std::uint64_t seed) {
    Record rec;
    rec.set("dim", static_cast<std::int64_t>(prof.dim()));
    if (quad.scheme == QuadratureSpec::Scheme::TensorGrid) {
        rec.set("quad", std::string("tensor-grid"));
        rec.set("points_per_axis", static_cast<std::int64_t>(quad.points_per_axis));
    } else {
        rec.set("quad", std::string("monte-carlo"));
        rec.set("samples", static_cast<std::int64_t>(quad.samples));
    }
    for (int n = 0; n < prof.dim(); ++n) {
        rec.set("l1_" + std::to_string(n + 1), prof.l1[n].value);
        rec.set("hw_" + std::to_string(n + 1), prof.l1[n].half_width);
    }
    rec.set("total_l1", prof.total_l1());
    rec.set("total_half_width", prof.total_l1_half_width());
    rec.set("seed", static_cast<std::int64_t>(seed));
    rec.set("version", std::string(kVersion));
    return rec;
}

Record oracle_record(const OracleResult& res, std::uint64_t seed) {
    Record rec;
    rec.set("S", coords_one_based(res.S));
    rec.set("l1_error", res.error.value);
    rec.set("half_width", res.error.half_width);
    rec.set("seed", static_cast<std::int64_t>(seed));
    rec.set("version", std::string(kVersion));
    return rec;
}

Record hamming_record(const HammingJuntaResult& res, double epsilon, std::uint64_t seed) {
    Record rec;
    rec.set("M", static_cast<std::int64_t>(res.components.size()));
    rec.set("epsilon", epsilon);
    std::vector<std::int64_t> selected;
    for (int m : res.selected) selected.push_back(m + 1);
    rec.set("I", selected);
    rec.set("selected_count", static_cast<std::int64_t>(res.selected.size()));
    rec.set("total_error", res.total_error.value);
    rec.set("half_width", res.total_error.half_width);
    rec.set("average_mass", res.average_mass);
    rec.set("mass_budget", res.mass_budget);
    rec.set("selection_threshold", res.selection_threshold);
    rec.set("max_junta_size", static_cast<std::int64_t>(res.max_junta_size));
    rec.set("seed", static_cast<std::int64_t>(seed));
    rec.set("version", std::string(kVersion));
    return rec;
}

Record separated_sets_record(const SeparatedSetsResult& res, std::uint64_t seed) {
    Record rec;
    rec.set("S", coords_one_based(res.S));
    rec.set("delta", res.delta);
    rec.set("epsilon", res.epsilon);
    rec.set("theta_lo", res.theta_lo);
    rec.set("theta_hi", res.theta_hi);
    rec.set("extraction_error", res.extraction_error.value);
    rec.set("extraction_half_width", res.extraction_error.half_width);
    rec.set("loss_a", res.loss_a.value);
    rec.set("loss_a_half_width", res.loss_a.half_width);
    rec.set("loss_b", res.loss_b.value);
    rec.set("loss_b_half_width", res.loss_b.half_width);
    rec.set("measured_separation", res.measured_separation);
    rec.set("pairs_a", static_cast<std::int64_t>(res.pairs_a));
    rec.set("pairs_b", static_cast<std::int64_t>(res.pairs_b));
    rec.set("seed", static_cast<std::int64_t>(seed));
    rec.set("version", std::string(kVersion));
    return rec;
}

}  // namespace juntalab
