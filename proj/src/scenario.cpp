#include "armfatigue/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "armfatigue/errors.hpp"
#include "armfatigue/version.hpp"

namespace armfatigue {

namespace {

using nlohmann::json;

constexpr double kRadToDeg = 57.29577951308232;

const char* gender_name(Gender g) { return g == Gender::male ? "male" : "female"; }
const char* profile_name(PathProfile p) {
    return p == PathProfile::cosine_smooth ? "cosine_smooth" : "constant_velocity";
}
const char* branch_name(Branch b) { return b == Branch::elbow_down ? "elbow_down" : "elbow_up"; }
const char* mapping_name(AngleMapping m) {
    return m == AngleMapping::standard ? "standard" : "anatomical";
}
const char* phase_name(Phase p) { return p == Phase::push ? "push" : "pull"; }

template <typename E>
E parse_enum(const std::string& value,
             std::initializer_list<std::pair<const char*, E>> names, const std::string& where) {
    for (const auto& [name, e] : names) {
        if (value == name) return e;
    }
    std::string allowed;
    for (const auto& [name, e] : names) {
        if (!allowed.empty()) allowed += ", ";
        allowed += name;
    }
    throw ValidationError("scenario: '" + where + "' must be one of {" + allowed + "}, got '" +
                          value + "'");
}

/// Strict JSON object view: required/optional typed access, unknown keys rejected.
class Section {
public:
    Section(const json& j, std::string name) : j_(&j), name_(std::move(name)) {
        if (!j_->is_object()) {
            throw ValidationError("scenario: '" + name_ + "' must be a JSON object");
        }
    }

    bool has(const char* key) const { return j_->contains(key); }

    const json& raw(const char* key) {
        if (!j_->contains(key)) {
            throw ValidationError("scenario: missing required section '" + qualify(key) + "'");
        }
        seen_.insert(key);
        return (*j_)[key];
    }

    template <typename T>
    T req(const char* key) {
        if (!j_->contains(key)) {
            throw ValidationError("scenario: missing required key '" + qualify(key) + "'");
        }
        return fetch<T>(key);
    }

    template <typename T>
    T opt(const char* key, T fallback) {
        if (!j_->contains(key)) return fallback;
        return fetch<T>(key);
    }

    void done() const {
        for (auto it = j_->begin(); it != j_->end(); ++it) {
            if (!seen_.count(it.key())) {
                throw ValidationError("scenario: unknown key '" + qualify(it.key().c_str()) +
                                      "'");
            }
        }
    }

private:
    std::string qualify(const char* key) const {
        return name_.empty() ? std::string(key) : name_ + "." + key;
    }

    template <typename T>
    T fetch(const char* key) {
        seen_.insert(key);
        try {
            return (*j_)[key].get<T>();
        } catch (const json::exception&) {
            throw ValidationError("scenario: key '" + qualify(key) + "' has the wrong type");
        }
    }

    const json* j_;
    std::string name_;
    std::set<std::string> seen_;
};

void append_number(std::string& out, double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    out.append(buf, end);
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

constexpr const char* kCsvHeader =
    "t_s,theta1_deg,theta4_deg,tau_shoulder_Nm,tau_elbow_Nm,mvc_shoulder_Nm,mvc_elbow_Nm,"
    "R_shoulder_push,R_shoulder_pull,R_elbow_push,R_elbow_pull,capacity_shoulder_Nm,"
    "capacity_elbow_Nm,phase";

} // namespace

Scenario parse_scenario(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text, nullptr, /*allow_exceptions=*/true,
                           /*ignore_comments=*/true);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("scenario JSON: ") + e.what());
    }

    Scenario sc;
    Section top(root, "");

    const int version = top.req<int>("schema_version");
    if (version != kScenarioSchemaVersion) {
        throw ValidationError("scenario: unsupported schema_version " +
                              std::to_string(version) + " (this tool reads version " +
                              std::to_string(kScenarioSchemaVersion) + ")");
    }

    {
        Section s(top.raw("subject"), "subject");
        sc.subject.height_m = s.req<double>("height_m");
        sc.subject.body_mass_kg = s.req<double>("body_mass_kg");
        sc.subject.gender =
            parse_enum<Gender>(s.req<std::string>("gender"),
                               {{"male", Gender::male}, {"female", Gender::female}},
                               "subject.gender");
        s.done();
    }

    if (top.has("proportions")) {
        Section p(top.raw("proportions"), "proportions");
        ProportionTable& t = sc.proportions;
        t.upper_arm_length_ratio = p.opt("upper_arm_length_ratio", t.upper_arm_length_ratio);
        t.forearm_hand_length_ratio =
            p.opt("forearm_hand_length_ratio", t.forearm_hand_length_ratio);
        t.upper_arm_mass_ratio = p.opt("upper_arm_mass_ratio", t.upper_arm_mass_ratio);
        t.forearm_hand_mass_ratio =
            p.opt("forearm_hand_mass_ratio", t.forearm_hand_mass_ratio);
        t.com_ratio_upper = p.opt("com_ratio_upper", t.com_ratio_upper);
        t.com_ratio_forearm = p.opt("com_ratio_forearm", t.com_ratio_forearm);
        t.gyration_ratio_upper = p.opt("gyration_ratio_upper", t.gyration_ratio_upper);
        t.gyration_ratio_forearm = p.opt("gyration_ratio_forearm", t.gyration_ratio_forearm);
        p.done();
    }

    {
        Section p(top.raw("hand_path"), "hand_path");
        sc.path.x_start_m = p.req<double>("x_start_m");
        sc.path.x_end_m = p.req<double>("x_end_m");
        sc.path.y_hand_m = p.opt("y_hand_m", 0.0);
        sc.path.stroke_period_s = p.req<double>("stroke_period_s");
        sc.path.profile = parse_enum<PathProfile>(
            p.opt<std::string>("profile", "cosine_smooth"),
            {{"cosine_smooth", PathProfile::cosine_smooth},
             {"constant_velocity", PathProfile::constant_velocity}},
            "hand_path.profile");
        sc.branch = parse_enum<Branch>(
            p.opt<std::string>("branch", "elbow_down"),
            {{"elbow_down", Branch::elbow_down}, {"elbow_up", Branch::elbow_up}},
            "hand_path.branch");
        p.done();
    }

    {
        Section s(top.raw("schedule"), "schedule");
        sc.schedule.t_push_s = s.req<double>("t_push_s");
        sc.schedule.t_pull_s = s.req<double>("t_pull_s");
        s.done();
    }

    {
        Section l(top.raw("load"), "load");
        sc.push_force_n = l.req<double>("push_force_n");
        sc.pull_force_n = l.req<double>("pull_force_n");
        sc.object_mass_kg = l.opt("object_mass_kg", 0.0);
        sc.gravity_mps2 = l.opt("gravity_mps2", 9.81);
        l.done();
    }

    {
        const GenderFactors gf = default_gender_factors(sc.subject.gender);
        sc.strength.g_elbow = gf.elbow;
        sc.strength.g_shoulder = gf.shoulder;
    }
    if (top.has("strength")) {
        Section st(top.raw("strength"), "strength");
        if (st.has("elbow_coefficients")) {
            auto v = st.req<std::vector<double>>("elbow_coefficients");
            if (v.size() != 3) {
                throw ValidationError(
                    "scenario: strength.elbow_coefficients must have 3 entries [c0, c1, c2]");
            }
            sc.strength.elbow_c0 = v[0];
            sc.strength.elbow_c1 = v[1];
            sc.strength.elbow_c2 = v[2];
        }
        if (st.has("shoulder_coefficients")) {
            auto v = st.req<std::vector<double>>("shoulder_coefficients");
            if (v.size() != 3) {
                throw ValidationError(
                    "scenario: strength.shoulder_coefficients must have 3 entries [d0, d1, d2]");
            }
            sc.strength.shoulder_d0 = v[0];
            sc.strength.shoulder_d1 = v[1];
            sc.strength.shoulder_d2 = v[2];
        }
        sc.strength.g_elbow = st.opt("gender_factor_elbow", sc.strength.g_elbow);
        sc.strength.g_shoulder = st.opt("gender_factor_shoulder", sc.strength.g_shoulder);
        sc.strength.g_multiplier = st.opt("g_multiplier", 1.0);
        sc.strength.mapping = parse_enum<AngleMapping>(
            st.opt<std::string>("angle_mapping", "standard"),
            {{"standard", AngleMapping::standard}, {"anatomical", AngleMapping::anatomical}},
            "strength.angle_mapping");
        st.done();
    }

    if (top.has("fatigue")) {
        Section f(top.raw("fatigue"), "fatigue");
        const double k = f.opt("k_per_min", 1.0);
        sc.fatigue.k_push_per_min = f.opt("k_push_per_min", k);
        sc.fatigue.k_pull_per_min = f.opt("k_pull_per_min", k);
        sc.fatigue.recovery_per_min = f.opt("recovery_per_min", 0.0);
        f.done();
    }

    {
        Section s(top.raw("simulation"), "simulation");
        sc.dt_s = s.opt("dt_s", 1e-3);
        sc.horizon_s = s.req<double>("horizon_s");
        s.done();
    }

    if (top.has("output")) {
        Section o(top.raw("output"), "output");
        const auto stride = o.opt<std::int64_t>("csv_stride", 1);
        if (stride < 1) throw ValidationError("scenario: output.csv_stride must be >= 1");
        sc.output.csv_stride = static_cast<std::size_t>(stride);
        o.done();
    }

    top.done();
    return sc;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read scenario file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("I/O error while reading scenario file '" + path + "'");
    return parse_scenario(buf.str());
}

std::string scenario_to_json(const Scenario& sc) {
    json j;
    j["schema_version"] = kScenarioSchemaVersion;
    j["subject"] = {{"height_m", sc.subject.height_m},
                    {"body_mass_kg", sc.subject.body_mass_kg},
                    {"gender", gender_name(sc.subject.gender)}};
    j["proportions"] = {
        {"upper_arm_length_ratio", sc.proportions.upper_arm_length_ratio},
        {"forearm_hand_length_ratio", sc.proportions.forearm_hand_length_ratio},
        {"upper_arm_mass_ratio", sc.proportions.upper_arm_mass_ratio},
        {"forearm_hand_mass_ratio", sc.proportions.forearm_hand_mass_ratio},
        {"com_ratio_upper", sc.proportions.com_ratio_upper},
        {"com_ratio_forearm", sc.proportions.com_ratio_forearm},
        {"gyration_ratio_upper", sc.proportions.gyration_ratio_upper},
        {"gyration_ratio_forearm", sc.proportions.gyration_ratio_forearm}};
    j["hand_path"] = {{"x_start_m", sc.path.x_start_m},
                      {"x_end_m", sc.path.x_end_m},
                      {"y_hand_m", sc.path.y_hand_m},
                      {"stroke_period_s", sc.path.stroke_period_s},
                      {"profile", profile_name(sc.path.profile)},
                      {"branch", branch_name(sc.branch)}};
    j["schedule"] = {{"t_push_s", sc.schedule.t_push_s}, {"t_pull_s", sc.schedule.t_pull_s}};
    j["load"] = {{"push_force_n", sc.push_force_n},
                 {"pull_force_n", sc.pull_force_n},
                 {"object_mass_kg", sc.object_mass_kg},
                 {"gravity_mps2", sc.gravity_mps2}};
    j["strength"] = {
        {"elbow_coefficients",
         {sc.strength.elbow_c0, sc.strength.elbow_c1, sc.strength.elbow_c2}},
        {"shoulder_coefficients",
         {sc.strength.shoulder_d0, sc.strength.shoulder_d1, sc.strength.shoulder_d2}},
        {"gender_factor_elbow", sc.strength.g_elbow},
        {"gender_factor_shoulder", sc.strength.g_shoulder},
        {"g_multiplier", sc.strength.g_multiplier},
        {"angle_mapping", mapping_name(sc.strength.mapping)}};
    j["fatigue"] = {{"k_push_per_min", sc.fatigue.k_push_per_min},
                    {"k_pull_per_min", sc.fatigue.k_pull_per_min},
                    {"recovery_per_min", sc.fatigue.recovery_per_min}};
    j["simulation"] = {{"dt_s", sc.dt_s}, {"horizon_s", sc.horizon_s}};
    j["output"] = {{"csv_stride", sc.output.csv_stride}};
    return j.dump(2) + "\n";
}

std::string scenario_hash(const Scenario& scenario) {
    const std::string canon = scenario_to_json(scenario);
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ValidationReport validate(const Scenario& sc) {
    ValidationReport rep;
    auto bad = [&rep](std::string msg) { rep.problems.push_back(std::move(msg)); };
    auto finite = [](double v) { return std::isfinite(v); };

    bool subject_ok = true;
    if (!(finite(sc.subject.height_m) && sc.subject.height_m > 0.0)) {
        bad("subject.height_m: must be finite and > 0, got " + fmt(sc.subject.height_m));
        subject_ok = false;
    }
    if (!(finite(sc.subject.body_mass_kg) && sc.subject.body_mass_kg > 0.0)) {
        bad("subject.body_mass_kg: must be finite and > 0, got " +
            fmt(sc.subject.body_mass_kg));
        subject_ok = false;
    }

    bool proportions_ok = true;
    const std::pair<const char*, double> ratios[] = {
        {"upper_arm_length_ratio", sc.proportions.upper_arm_length_ratio},
        {"forearm_hand_length_ratio", sc.proportions.forearm_hand_length_ratio},
        {"upper_arm_mass_ratio", sc.proportions.upper_arm_mass_ratio},
        {"forearm_hand_mass_ratio", sc.proportions.forearm_hand_mass_ratio},
        {"com_ratio_upper", sc.proportions.com_ratio_upper},
        {"com_ratio_forearm", sc.proportions.com_ratio_forearm},
        {"gyration_ratio_upper", sc.proportions.gyration_ratio_upper},
        {"gyration_ratio_forearm", sc.proportions.gyration_ratio_forearm}};
    for (const auto& [name, value] : ratios) {
        if (!(finite(value) && value > 0.0 && value < 1.0)) {
            bad(std::string("proportions.") + name + ": must lie in (0, 1), got " + fmt(value));
            proportions_ok = false;
        }
    }

    if (!(finite(sc.path.x_start_m) && finite(sc.path.x_end_m)) ||
        sc.path.x_start_m == sc.path.x_end_m) {
        bad("hand_path: x_start_m and x_end_m must be finite and distinct");
    }
    if (!finite(sc.path.y_hand_m)) bad("hand_path.y_hand_m: must be finite");
    if (!(finite(sc.path.stroke_period_s) && sc.path.stroke_period_s > 0.0)) {
        bad("hand_path.stroke_period_s: must be > 0, got " + fmt(sc.path.stroke_period_s));
    }

    if (!(finite(sc.schedule.t_push_s) && sc.schedule.t_push_s > 0.0)) {
        bad("schedule.t_push_s: must be > 0, got " + fmt(sc.schedule.t_push_s));
    }
    if (!(finite(sc.schedule.t_pull_s) && sc.schedule.t_pull_s > 0.0)) {
        bad("schedule.t_pull_s: must be > 0, got " + fmt(sc.schedule.t_pull_s));
    }

    if (!finite(sc.push_force_n)) bad("load.push_force_n: must be finite");
    if (!finite(sc.pull_force_n)) bad("load.pull_force_n: must be finite");
    if (!(finite(sc.object_mass_kg) && sc.object_mass_kg >= 0.0)) {
        bad("load.object_mass_kg: must be >= 0, got " + fmt(sc.object_mass_kg));
    }
    if (!(finite(sc.gravity_mps2) && sc.gravity_mps2 >= 0.0)) {
        bad("load.gravity_mps2: must be >= 0, got " + fmt(sc.gravity_mps2));
    }

    if (!(finite(sc.strength.g_elbow) && sc.strength.g_elbow > 0.0)) {
        bad("strength.gender_factor_elbow: must be > 0, got " + fmt(sc.strength.g_elbow));
    }
    if (!(finite(sc.strength.g_shoulder) && sc.strength.g_shoulder > 0.0)) {
        bad("strength.gender_factor_shoulder: must be > 0, got " +
            fmt(sc.strength.g_shoulder));
    }
    if (!(finite(sc.strength.g_multiplier) && sc.strength.g_multiplier > 0.0)) {
        bad("strength.g_multiplier: must be > 0, got " + fmt(sc.strength.g_multiplier));
    }
    for (double c : {sc.strength.elbow_c0, sc.strength.elbow_c1, sc.strength.elbow_c2,
                     sc.strength.shoulder_d0, sc.strength.shoulder_d1,
                     sc.strength.shoulder_d2}) {
        if (!finite(c)) {
            bad("strength: regression coefficients must be finite");
            break;
        }
    }

    if (!(finite(sc.fatigue.k_push_per_min) && sc.fatigue.k_push_per_min >= 0.0)) {
        bad("fatigue.k_push_per_min: must be >= 0, got " + fmt(sc.fatigue.k_push_per_min));
    }
    if (!(finite(sc.fatigue.k_pull_per_min) && sc.fatigue.k_pull_per_min >= 0.0)) {
        bad("fatigue.k_pull_per_min: must be >= 0, got " + fmt(sc.fatigue.k_pull_per_min));
    }
    if (!(finite(sc.fatigue.recovery_per_min) && sc.fatigue.recovery_per_min >= 0.0)) {
        bad("fatigue.recovery_per_min: must be >= 0, got " + fmt(sc.fatigue.recovery_per_min));
    }

    if (!(finite(sc.dt_s) && sc.dt_s > 0.0)) {
        bad("simulation.dt_s: must be > 0, got " + fmt(sc.dt_s));
    } else {
        if (sc.dt_s > sc.path.stroke_period_s / 100.0) {
            bad("simulation.dt_s: must be <= stroke_period / 100 = " +
                fmt(sc.path.stroke_period_s / 100.0) + " s, got " + fmt(sc.dt_s));
        }
        const double cycle = sc.schedule.t_push_s + sc.schedule.t_pull_s;
        if (!(finite(sc.horizon_s) && sc.horizon_s >= cycle)) {
            bad("simulation.horizon_s: must cover one full phase cycle (>= " + fmt(cycle) +
                " s), got " + fmt(sc.horizon_s));
        }
    }

    if (sc.output.csv_stride < 1) bad("output.csv_stride: must be >= 1");

    // Reachability of the whole path needs valid segments first.
    if (subject_ok && proportions_ok) {
        const BodySegmentSet seg = derive_segments(sc.subject, sc.proportions);
        const double r_inner = std::abs(seg.L1_m - seg.L2_m);
        const double r_outer = seg.L1_m + seg.L2_m;
        const double x_lo = std::min(sc.path.x_start_m, sc.path.x_end_m);
        const double x_hi = std::max(sc.path.x_start_m, sc.path.x_end_m);
        const double y = sc.path.y_hand_m;
        const double r_lo = std::hypot(x_lo, y);
        const double r_hi = std::hypot(x_hi, y);
        const double r_max = std::max(r_lo, r_hi);
        const double r_min =
            (x_lo <= 0.0 && 0.0 <= x_hi) ? std::abs(y) : std::min(r_lo, r_hi);
        if (!(r_max < r_outer)) {
            const double x_far = r_hi >= r_lo ? x_hi : x_lo;
            bad("hand_path: endpoint (" + fmt(x_far) + ", " + fmt(y) +
                ") is not strictly inside the reachable annulus: r = " + fmt(r_max) +
                " >= L1 + L2 = " + fmt(r_outer));
        }
        if (!(r_min > r_inner)) {
            bad("hand_path: closest approach r = " + fmt(r_min) +
                " does not stay strictly outside the inner annulus radius |L1 - L2| = " +
                fmt(r_inner));
        }
    }

    return rep;
}

SimulationResult run(const Scenario& sc) {
    const ValidationReport rep = validate(sc);
    if (!rep.ok()) {
        std::string msg = "scenario invalid:";
        for (const auto& p : rep.problems) msg += "\n  - " + p;
        throw ValidationError(msg);
    }

    const BodySegmentSet seg = derive_segments(sc.subject, sc.proportions);
    const ExternalLoad push_load{sc.push_force_n, sc.object_mass_kg, sc.gravity_mps2};
    const ExternalLoad pull_load{-sc.pull_force_n, sc.object_mass_kg, sc.gravity_mps2};

    const auto n = static_cast<std::size_t>(std::llround(sc.horizon_s / sc.dt_s));

    SimulationResult res;
    res.scenario_hash = scenario_hash(sc);
    res.tool_version = kToolVersion;
    res.dt_s = sc.dt_s;
    res.horizon_s = sc.horizon_s;
    for (auto* col : {&res.theta1_rad, &res.theta4_rad, &res.tau_shoulder_nm,
                      &res.tau_elbow_nm, &res.mvc_shoulder_nm, &res.mvc_elbow_nm,
                      &res.r_shoulder_push, &res.r_shoulder_pull, &res.r_elbow_push,
                      &res.r_elbow_pull, &res.capacity_shoulder_nm, &res.capacity_elbow_nm}) {
        col->reserve(n + 1);
    }
    res.phase.reserve(n + 1);

    GroupFatigueState shoulder_push, shoulder_pull, elbow_push, elbow_pull;
    double min_margin_s = std::numeric_limits<double>::infinity();
    double min_margin_e = std::numeric_limits<double>::infinity();

    for (std::size_t i = 0; i <= n; ++i) {
        const double t = static_cast<double>(i) * sc.dt_s;
        const Phase ph = phase_at(t, sc.schedule);
        const bool pushing = ph == Phase::push;

        const JointState state = path_state_at(sc.path, seg, sc.branch, t);
        const JointTorques tau =
            inverse_dynamics(state, seg, pushing ? push_load : pull_load);
        const MvcPair mvc = mvc_at(state, sc.strength);

        if (!(mvc.shoulder.nm > 0.0 && mvc.elbow.nm > 0.0)) {
            throw GuardViolation(
                "MVC guard: shoulder = " + fmt(mvc.shoulder.nm) + " N*m, elbow = " +
                    fmt(mvc.elbow.nm) + " N*m at theta1 = " + fmt(state.theta1 * kRadToDeg) +
                    " deg, theta4 = " + fmt(state.theta4 * kRadToDeg) + " deg, t = " + fmt(t) +
                    " s",
                t);
        }
        if (!mvc.shoulder.in_window || !mvc.elbow.in_window) {
            ++res.strength_out_of_window_samples;
        }

        const double demand_s = std::abs(tau.shoulder_nm);
        const double demand_e = std::abs(tau.elbow_nm);
        const double cap_s = mvc.shoulder.nm * (pushing ? shoulder_push.R : shoulder_pull.R);
        const double cap_e = mvc.elbow.nm * (pushing ? elbow_push.R : elbow_pull.R);

        res.theta1_rad.push_back(state.theta1);
        res.theta4_rad.push_back(state.theta4);
        res.tau_shoulder_nm.push_back(tau.shoulder_nm);
        res.tau_elbow_nm.push_back(tau.elbow_nm);
        res.mvc_shoulder_nm.push_back(mvc.shoulder.nm);
        res.mvc_elbow_nm.push_back(mvc.elbow.nm);
        res.r_shoulder_push.push_back(shoulder_push.R);
        res.r_shoulder_pull.push_back(shoulder_pull.R);
        res.r_elbow_push.push_back(elbow_push.R);
        res.r_elbow_pull.push_back(elbow_pull.R);
        res.capacity_shoulder_nm.push_back(cap_s);
        res.capacity_elbow_nm.push_back(cap_e);
        res.phase.push_back(ph);

        min_margin_s = std::min(min_margin_s, cap_s - demand_s);
        min_margin_e = std::min(min_margin_e, cap_e - demand_e);

        if (i < n) {
            shoulder_push = fatigue_step(shoulder_push, demand_s, mvc.shoulder.nm, sc.fatigue,
                                         Phase::push, sc.dt_s, pushing);
            shoulder_pull = fatigue_step(shoulder_pull, demand_s, mvc.shoulder.nm, sc.fatigue,
                                         Phase::pull, sc.dt_s, !pushing);
            elbow_push = fatigue_step(elbow_push, demand_e, mvc.elbow.nm, sc.fatigue,
                                      Phase::push, sc.dt_s, pushing);
            elbow_pull = fatigue_step(elbow_pull, demand_e, mvc.elbow.nm, sc.fatigue,
                                      Phase::pull, sc.dt_s, !pushing);
        }
    }

    std::vector<double> demand_s(res.tau_shoulder_nm.size());
    std::vector<double> demand_e(res.tau_elbow_nm.size());
    std::transform(res.tau_shoulder_nm.begin(), res.tau_shoulder_nm.end(), demand_s.begin(),
                   [](double v) { return std::abs(v); });
    std::transform(res.tau_elbow_nm.begin(), res.tau_elbow_nm.end(), demand_e.begin(),
                   [](double v) { return std::abs(v); });
    res.shoulder_crossing = detect_crossing(res.capacity_shoulder_nm, demand_s, sc.dt_s);
    res.elbow_crossing = detect_crossing(res.capacity_elbow_nm, demand_e, sc.dt_s);
    res.shoulder_min_margin_nm = min_margin_s;
    res.elbow_min_margin_nm = min_margin_e;
    return res;
}

void export_timeseries_csv(const SimulationResult& result, std::size_t stride,
                           const std::string& path) {
    if (stride == 0) stride = 1;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");

    std::string row;
    row.reserve(512);
    out << kCsvHeader << '\n';
    for (std::size_t i = 0; i < result.size(); i += stride) {
        row.clear();
        append_number(row, static_cast<double>(i) * result.dt_s);
        row += ',';
        append_number(row, result.theta1_rad[i] * kRadToDeg);
        row += ',';
        append_number(row, result.theta4_rad[i] * kRadToDeg);
        row += ',';
        append_number(row, result.tau_shoulder_nm[i]);
        row += ',';
        append_number(row, result.tau_elbow_nm[i]);
        row += ',';
        append_number(row, result.mvc_shoulder_nm[i]);
        row += ',';
        append_number(row, result.mvc_elbow_nm[i]);
        row += ',';
        append_number(row, result.r_shoulder_push[i]);
        row += ',';
        append_number(row, result.r_shoulder_pull[i]);
        row += ',';
        append_number(row, result.r_elbow_push[i]);
        row += ',';
        append_number(row, result.r_elbow_pull[i]);
        row += ',';
        append_number(row, result.capacity_shoulder_nm[i]);
        row += ',';
        append_number(row, result.capacity_elbow_nm[i]);
        row += ',';
        row += phase_name(result.phase[i]);
        row += '\n';
        out.write(row.data(), static_cast<std::streamsize>(row.size()));
    }
    if (!out) throw IoError("I/O failure while writing '" + path + "'");
}

void export_summary_json(const SimulationResult& result, const std::string& path) {
    auto crossing_json = [](const std::optional<Crossing>& c) {
        json o;
        o["crossed"] = c.has_value();
        if (c) {
            o["time_s"] = c->time_s;
            o["time_min"] = c->time_s / 60.0;
            o["demand_nm"] = c->demand_nm;
            o["capacity_nm"] = c->capacity_nm;
        }
        return o;
    };

    json j;
    j["tool"] = kToolName;
    j["tool_version"] = result.tool_version;
    j["scenario_hash"] = result.scenario_hash;
    j["dt_s"] = result.dt_s;
    j["horizon_s"] = result.horizon_s;
    j["samples"] = result.size();
    j["crossings"]["shoulder"] = crossing_json(result.shoulder_crossing);
    j["crossings"]["elbow"] = crossing_json(result.elbow_crossing);
    j["margins"]["shoulder_min_nm"] = result.shoulder_min_margin_nm;
    j["margins"]["elbow_min_nm"] = result.elbow_min_margin_nm;
    j["strength_out_of_window_samples"] = result.strength_out_of_window_samples;

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    const std::string text = j.dump(2) + "\n";
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw IoError("I/O failure while writing '" + path + "'");
}

ParsedTimeSeries parse_timeseries_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path + "'");

    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw ValidationError("time-series CSV '" + path + "': unexpected header");
    }

    ParsedTimeSeries ts;
    auto parse_field = [&path](const std::string& text, std::size_t lineno) {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc() || ptr != text.data() + text.size()) {
            throw ValidationError("time-series CSV '" + path + "': bad number '" + text +
                                  "' on line " + std::to_string(lineno));
        }
        return v;
    };

    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            fields.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (fields.size() != 14) {
            throw ValidationError("time-series CSV '" + path + "': expected 14 fields on line " +
                                  std::to_string(lineno) + ", got " +
                                  std::to_string(fields.size()));
        }
        ts.t_s.push_back(parse_field(fields[0], lineno));
        ts.theta1_deg.push_back(parse_field(fields[1], lineno));
        ts.theta4_deg.push_back(parse_field(fields[2], lineno));
        ts.tau_shoulder_nm.push_back(parse_field(fields[3], lineno));
        ts.tau_elbow_nm.push_back(parse_field(fields[4], lineno));
        ts.mvc_shoulder_nm.push_back(parse_field(fields[5], lineno));
        ts.mvc_elbow_nm.push_back(parse_field(fields[6], lineno));
        ts.r_shoulder_push.push_back(parse_field(fields[7], lineno));
        ts.r_shoulder_pull.push_back(parse_field(fields[8], lineno));
        ts.r_elbow_push.push_back(parse_field(fields[9], lineno));
        ts.r_elbow_pull.push_back(parse_field(fields[10], lineno));
        ts.capacity_shoulder_nm.push_back(parse_field(fields[11], lineno));
        ts.capacity_elbow_nm.push_back(parse_field(fields[12], lineno));
        if (fields[13] == "push") {
            ts.phase.push_back(Phase::push);
        } else if (fields[13] == "pull") {
            ts.phase.push_back(Phase::pull);
        } else {
            throw ValidationError("time-series CSV '" + path + "': bad phase '" + fields[13] +
                                  "' on line " + std::to_string(lineno));
        }
    }
    return ts;
}

} // namespace armfatigue
