#include "e2sieve/cli.hpp"

#include "e2sieve/builtins.hpp"
#include "e2sieve/error.hpp"
#include "e2sieve/functionals.hpp"
#include "e2sieve/numth.hpp"
#include "e2sieve/sieveweights.hpp"
#include "e2sieve/simplex.hpp"
#include "e2sieve/theorem11.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

namespace e2sieve {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    std::string theorem;
    std::string F;
    unsigned k = 0;
    std::string rho = "1";
    std::string theta = "1";
    std::string delta = "0";
    std::string eta = "1/10";
    std::string epsilon = "1/10";
    std::string variant = "S";
    int digits = 20;
    std::string format = "json";
    std::uint64_t seed = 1;
    std::uint64_t samples = 1'000'000;
    unsigned m = 0;
    std::uint64_t limit = 10'000;
    std::string universe = "E2";
    std::string mode = "gaps";
    std::string H;
    unsigned threshold = 1;
    std::uint64_t N = 10'000;
    std::uint64_t R = 0, W = 0, D0 = 0;
    unsigned bits = 96;
    bool quad = false;
    bool scan = false;
    unsigned scan_min = 1, scan_max = 200;
};

struct Flags {
    CLI::App* app;
    bool given(const std::string& name) const { return app->count(name) > 0; }
};

json rat(const BigRational& q, int digits) {
    return json{{"exact", q.to_string()}, {"decimal", q.to_decimal(digits)}, {"value", q.to_double()}};
}

json loglin(const LogLinear& v, int digits) {
    return json{{"closed_form", v.to_string()}, {"decimal", v.to_decimal(digits)}, {"value", v.to_double()}};
}

json ball(const Ball& b, int digits) {
    return json{{"mid", b.mid().to_decimal(digits)},
                {"radius", b.rad().is_zero() ? std::string("0") : b.rad().to_decimal(3)},
                {"value", b.to_double()}};
}

json bigfloat(const BigFloat& x, int digits) {
    return json{{"decimal", x.to_decimal(digits)}, {"value", x.to_double()}};
}

Variant parse_variant(const std::string& s) {
    if (s == "S" || s == "s") return Variant::S;
    if (s == "Sprime" || s == "sprime" || s == "S'" || s == "Sp") return Variant::Sprime;
    throw ParseError("unknown variant '" + s + "' (expected S or Sprime)");
}

long parse_long(const std::string& s, const char* what) {
    const BigRational q = BigRational::parse(s);
    if (!q.is_integer() || !q.num().fits_slong_p()) throw ParseError(std::string(what) + " must be an integer");
    return q.num().get_si();
}

std::vector<u64> parse_list(const std::string& text) {
    std::vector<u64> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        for (char c : cur)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad integer '" + cur + "' in list");
        out.push_back(std::stoull(cur));
        cur.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '{' || c == '}') flush();
        else cur.push_back(c);
    }
    flush();
    if (out.empty()) throw ParseError("empty integer list");
    return out;
}

// Flattened key/value rendering for text and csv output.
void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), rows);
    } else if (j.is_string()) {
        rows.emplace_back(prefix, j.get<std::string>());
    } else {
        rows.emplace_back(prefix, j.dump());
    }
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

void emit(const json& j, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << j.dump(2) << "\n";
        return;
    }
    // Sequences render as a plain table.
    if (format == "csv" && j.contains("values") && j["values"].is_array()) {
        out << "index,value\n";
        for (std::size_t i = 0; i < j["values"].size(); ++i) out << i + 1 << "," << j["values"][i].dump() << "\n";
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(j, "", rows);
    if (format == "csv") {
        out << "key,value\n";
        for (const auto& [k, v] : rows) out << csv_cell(k) << "," << csv_cell(v) << "\n";
    } else {
        for (const auto& [k, v] : rows) out << k << ": " << v << "\n";
    }
}

json params_json(const SieveParams& p, Variant v) {
    return json{{"k", p.k},
                {"rho", p.rho},
                {"theta", p.theta.to_string()},
                {"delta", p.delta.to_string()},
                {"eta", p.eta.to_string()},
                {"variant", to_string(v)}};
}

// Test function from --F: a builtin name or an expression in P<i>/u<i>.
TestFunction load_function(const Options& o, const Flags& f, unsigned fallback_k) {
    if (!o.F.empty() && is_builtin_name(o.F)) return builtin_theorem(o.F).test_function();
    const unsigned k = f.given("--k") ? o.k : fallback_k;
    if (k == 0) throw DomainError("--k is required with a custom --F expression");
    if (o.F.empty()) throw DomainError("--F is required");
    return power_sum_build(k, o.F);
}

SieveParams load_params(const Options& o, const Flags& f, const BuiltinTheorem* base, unsigned k) {
    SieveParams p = base ? base->params() : SieveParams{};
    p.k = k;
    if (!base || f.given("--rho")) p.rho = parse_long(o.rho, "--rho");
    if (!base || f.given("--theta")) p.theta = BigRational::parse(o.theta);
    if (!base || f.given("--delta")) p.delta = BigRational::parse(o.delta);
    if (!base || f.given("--eta")) p.eta = BigRational::parse(o.eta);
    p.validate();
    return p;
}

// Exact check |value - ref| <= tol.
bool within(const LogLinear& value, const BigRational& ref, const BigRational& tol) {
    const LogLinear d = value - LogLinear(ref);
    return (LogLinear(tol) - d).sign() >= 0 && (LogLinear(tol) + d).sign() >= 0;
}

json agreement(const LogLinear& value, const std::string& printed, int digits) {
    const BigRational ref = parse_reference(printed);
    const BigRational tol = reference_tolerance(printed);
    const LogLinear d = value - LogLinear(ref);
    return json{{"reference", printed},
                {"difference", d.to_decimal(std::max(digits, 15))},
                {"tolerance", tol.is_zero() ? std::string("0 (exact)") : tol.to_decimal(1)},
                {"ok", within(value, ref, tol)}};
}

bool all_equal(const std::vector<LogLinear>& v) {
    for (const auto& x : v)
        if (!x.canonically_equal(v.front())) return false;
    return true;
}

bool all_equal(const std::vector<BigRational>& v) {
    for (const auto& x : v)
        if (x != v.front()) return false;
    return true;
}

int cmd_verify(const Options& o, const Flags& f, std::ostream& out) {
    if (o.theorem.empty()) throw DomainError("verify: --theorem is required (1.2, 1.3 or 1.4)");
    const BuiltinTheorem& b = builtin_theorem(o.theorem);
    const TestFunction F = b.test_function();
    const SieveParams p = load_params(o, f, &b, b.k);
    const Variant v = f.given("--variant") ? parse_variant(o.variant) : b.variant;
    const LeadingCoefficient lc = leading_coefficient(F, p, v);
    LogLinear c_eta = lemma41_constant(p.eta);
    if (v == Variant::Sprime) c_eta += LogLinear(BigRational(1));
    const bool positive = lc.value.sign() > 0;

    json j;
    j["command"] = "verify";
    j["theorem"] = b.id;
    j["test_function"] = b.expression;
    j["params"] = params_json(p, v);
    j["values"] = json{{"I", rat(lc.I, o.digits)},
                       {"J", rat(lc.J[0], o.digits)},
                       {"L", loglin(lc.L[0], o.digits)},
                       {"M", loglin(lc.M[0], o.digits)},
                       {"c_eta", loglin(c_eta, o.digits)},
                       {"coefficient", loglin(lc.value, o.digits)}};
    j["symmetric_in_m"] = all_equal(lc.J) && all_equal(lc.L) && all_equal(lc.M);
    j["breakdown"] = json{{"L_term", loglin(lc.breakdown.L_term, o.digits)},
                          {"J_term", loglin(lc.breakdown.J_term, o.digits)},
                          {"M_term", loglin(lc.breakdown.M_term, o.digits)},
                          {"rho_term", loglin(lc.breakdown.rho_term, o.digits)}};
    j["agreement"] = json{{"I", agreement(LogLinear(lc.I), b.reference_I, o.digits)},
                          {"J", agreement(LogLinear(lc.J[0]), b.reference_J, o.digits)},
                          {"L", agreement(lc.L[0], b.reference_L, o.digits)},
                          {"M", agreement(lc.M[0], b.reference_M, o.digits)},
                          {"coefficient", agreement(lc.value, b.reference_coefficient, o.digits)}};
    j["verdict"] = positive ? "positive" : "non-positive";
    emit(j, o.format, out);
    return positive ? 0 : 1;
}

int cmd_functional(const Options& o, const Flags& f, std::ostream& out) {
    const BuiltinTheorem* base = o.theorem.empty() ? nullptr : &builtin_theorem(o.theorem);
    const TestFunction F = (base && o.F.empty()) ? base->test_function() : load_function(o, f, base ? base->k : 0);
    const SieveParams p = load_params(o, f, base, F.k());
    const Variant v = f.given("--variant") || !base ? parse_variant(o.variant) : base->variant;
    const LeadingCoefficient lc = leading_coefficient(F, p, v);

    json j;
    j["command"] = "functional";
    j["test_function"] = F.to_string();
    j["params"] = params_json(p, v);
    j["I"] = rat(lc.I, o.digits);
    json per_m = json::array();
    for (unsigned m = 1; m <= F.k(); ++m) {
        const InnerFunctional iL = inner_L(F, m, p), iM = inner_M(F, m, p);
        json row{{"m", m},
                 {"J", rat(lc.J[m - 1], o.digits)},
                 {"L", loglin(lc.L[m - 1], o.digits)},
                 {"M", loglin(lc.M[m - 1], o.digits)},
                 {"inner_L_G", iL.G.to_string()},
                 {"inner_M_G", iM.G.to_string()}};
        if (o.quad) {
            const double qL = quad_outer(iL, p, 1e-13), qM = quad_outer(iM, p, 1e-13);
            row["quad_L"] = qL;
            row["quad_M"] = qM;
            row["quad_L_abs_diff"] = std::fabs(qL - lc.L[m - 1].to_double());
            row["quad_M_abs_diff"] = std::fabs(qM - lc.M[m - 1].to_double());
        }
        per_m.push_back(std::move(row));
    }
    j["per_m"] = std::move(per_m);
    j["breakdown"] = json{{"L_term", loglin(lc.breakdown.L_term, o.digits)},
                          {"J_term", loglin(lc.breakdown.J_term, o.digits)},
                          {"M_term", loglin(lc.breakdown.M_term, o.digits)},
                          {"rho_term", loglin(lc.breakdown.rho_term, o.digits)}};
    j["coefficient"] = loglin(lc.value, o.digits);
    const bool positive = lc.value.sign() > 0;
    j["verdict"] = positive ? "positive" : "non-positive";
    emit(j, o.format, out);
    return positive ? 0 : 1;
}

int cmd_scan(const Options& o, const Flags& /*f*/, std::ostream& out) {
    json j;
    j["command"] = "scan";
    j["mode"] = o.mode;
    if (o.mode == "gaps") {
        const Universe u = parse_universe(o.universe);
        const long rho = parse_long(o.rho, "--rho");
        if (rho < 1) throw DomainError("--rho must be >= 1");
        const GapReport r = gap_scan(o.limit, static_cast<unsigned>(rho), u);
        j["universe"] = to_string(u);
        j["limit"] = r.limit;
        j["rho"] = r.rho;
        j["min_gap"] = r.min_gap ? json(*r.min_gap) : json(nullptr);
        j["witness"] = r.witness;
        json hist = json::object();
        for (const auto& [gap, count] : r.histogram) hist[std::to_string(gap)] = count;
        j["histogram"] = std::move(hist);
        j["scanned"] = r.scanned;
        j["note"] = "empirical illustration; finite scans say nothing about liminf";
    } else if (o.mode == "tuples") {
        const Universe u = parse_universe(o.universe);
        const AdmissibleSet H(parse_list(o.H.empty() ? "0,2,6" : o.H));
        const TupleHits t = tuple_hit_count(H, o.limit, u, o.threshold);
        j["universe"] = to_string(u);
        j["H"] = H.elements();
        j["limit"] = o.limit;
        j["threshold"] = o.threshold;
        j["count"] = t.count;
        j["witnesses"] = t.witnesses;
    } else if (o.mode == "bv") {
        const Universe u = parse_universe(o.universe);
        const BvTable t = bv_table(o.N, BigRational::parse(o.eta), BigRational::parse(o.theta), u);
        j["universe"] = u == Universe::Primes ? "primes" : "beta";
        j["N"] = t.N;
        j["q_max"] = t.q_max;
        json rows = json::array();
        for (const auto& r : t.rows)
            rows.push_back(json{{"q", r.q}, {"max_abs_delta", r.max_abs_delta.to_string()}, {"argmax_a", r.argmax_a}});
        j["rows"] = std::move(rows);
        j["weighted_sum"] = rat(t.weighted_sum, o.digits);
    } else {
        throw ParseError("unknown scan mode '" + o.mode + "' (expected gaps, tuples or bv)");
    }
    emit(j, o.format, out);
    return 0;
}

int cmd_theorem11(const Options& o, const Flags& f, std::ostream& out) {
    const BigRational theta = BigRational::parse(o.theta), eps = BigRational::parse(o.epsilon);
    const int d = o.digits;
    json j;
    j["command"] = "theorem11";
    // A scan alone needs no rho; a plan is added whenever rho is given.
    if (!o.scan || f.given("--rho")) {
        const BigRational rho_q = BigRational::parse(o.rho);
        if (!rho_q.is_integer()) throw ParseError("--rho must be an integer");
        const Theorem11Plan p = theorem11_plan(rho_q.num(), theta, eps);
        j["rho"] = p.rho.get_str();
        j["theta"] = theta.to_string();
        j["epsilon"] = eps.to_string();
        j["X"] = bigfloat(p.X, d);
        j["k_materialized"] = p.k_materialized;
        j["k"] = p.k ? json(p.k->get_str()) : json(nullptr);
        j["log_k"] = bigfloat(p.log_k, d);
        j["log2_k"] = p.log2_k;
        j["A"] = bigfloat(p.A, d);
        j["log_T"] = bigfloat(p.log_T, d);
        j["T"] = p.T ? json(p.T->to_decimal(d)) : json(nullptr);
        j["log_eta"] = bigfloat(p.log_eta, d);
        j["eta"] = p.eta ? json(p.eta->to_decimal(d)) : json(nullptr);
        j["identity_exact"] = p.identity_exact;
        j["identity_check"] = p.k_materialized ? "exact rationals" : "symbolic (eta defined as theta T / k)";
        j["vanishing_ok"] = p.vanishing_ok;
        j["rhs83"] = bigfloat(p.rhs83, d);
        j["rhs83_exceeds_rho"] = p.rhs83_exceeds_rho;
    } else {
        j["theta"] = theta.to_string();
        j["epsilon"] = eps.to_string();
    }
    if (o.scan) {
        const ThresholdScan s = theorem11_threshold_scan(theta, eps, o.scan_min, o.scan_max);
        json rows = json::array();
        for (const auto& r : s.rows)
            rows.push_back(json{{"rho", "1e" + std::to_string(r.exponent)},
                                {"exceeds", r.exceeds},
                                {"ratio", r.ratio.to_decimal(12)}});
        j["scan"] = json{{"rows", std::move(rows)},
                         {"threshold_exponent", s.threshold_exponent ? json(*s.threshold_exponent) : json(nullptr)},
                         {"threshold_rho", s.threshold_rho ? json(s.threshold_rho->get_str()) : json(nullptr)}};
    }
    emit(j, o.format, out);
    return 0;
}

int cmd_sieve(const Options& o, const Flags& f, std::ostream& out) {
    SieveSetup s;
    s.N = o.N;
    s.H = parse_list(o.H.empty() ? "0,2" : o.H);
    // theta = 1 would put R at N^(1/2); the finite sieve needs R below it.
    s.theta = BigRational::parse(f.given("--theta") ? o.theta : "1/2");
    s.delta = BigRational::parse(o.delta);
    s.eta = BigRational::parse(o.eta);
    s.bits = o.bits;
    if (f.given("--R")) s.R = o.R;
    if (f.given("--W")) s.W = o.W;
    if (f.given("--D0")) s.D0 = o.D0;
    const auto k = static_cast<unsigned>(s.H.size());
    const TestFunction F = o.F.empty() ? power_sum_build(k, "1 - P1") : load_function(o, f, k);
    const SieveContext ctx(s, F);
    const long rho = parse_long(o.rho, "--rho");
    const int d = o.digits;

    json j;
    j["command"] = "sieve";
    j["N"] = ctx.N();
    j["H"] = ctx.H().elements();
    j["R"] = ctx.R();
    j["Y"] = ctx.Y();
    j["W"] = ctx.W();
    j["D0"] = ctx.D0();
    j["nu0"] = ctx.nu0();
    j["test_function"] = F.to_string();
    j["support_size"] = ctx.support().size();

    json lam = json::array();
    BigRational worst_gap, literal_dev;
    bool all_ok = true;
    for (std::size_t i = 0; i < ctx.support().size(); ++i) {
        const auto& t = ctx.support()[i];
        const Ball y = y_from_lambda(ctx, t);
        const Ball& fv = ctx.f_at(t);
        const BigRational gap = (y.mid() - fv.mid()).abs();
        if (gap > y.rad() + fv.rad()) all_ok = false;
        if (gap > worst_gap) worst_gap = gap;
        const BigRational ldev = (y_from_lambda(ctx, t, YForm::Literal).mid() - fv.mid()).abs();
        if (ldev > literal_dev) literal_dev = ldev;
        if (i < 20) lam.push_back(json{{"d", t}, {"lambda", ball(ctx.lambda_at(i), d)}});
    }
    j["lambda_sample"] = std::move(lam);
    j["roundtrip"] = json{{"max_abs_deviation", worst_gap.is_zero() ? "0" : worst_gap.to_decimal(3)},
                          {"within_tracked_radius", all_ok},
                          {"literal_g_form_max_deviation", literal_dev.is_zero() ? "0" : literal_dev.to_decimal(6)}};

    const SSums ss = s_sums(ctx, rho);
    json per_m = json::array();
    bool partition_ok = true, mixed_symmetric = true;
    Ball sum2;
    for (unsigned m = 0; m < k; ++m) {
        const Ball parts = ss.S2_I[m] + ss.S2_II[m] + ss.S2_III[m] + ss.S2_IV[m];
        const bool ok = parts.mid() == ss.S2[m].mid();
        partition_ok = partition_ok && ok;
        mixed_symmetric = mixed_symmetric && ss.S2_I[m].mid() == ss.S2_II[m].mid();
        sum2 += ss.S2[m];
        per_m.push_back(json{{"m", m + 1},
                             {"S1", ball(ss.S1[m], d)},
                             {"S2", ball(ss.S2[m], d)},
                             {"S2_I", ball(ss.S2_I[m], d)},
                             {"S2_II", ball(ss.S2_II[m], d)},
                             {"S2_III", ball(ss.S2_III[m], d)},
                             {"S2_IV", ball(ss.S2_IV[m], d)},
                             {"partition_exact", ok}});
    }
    j["rho"] = rho;
    j["terms"] = ss.terms;
    j["S0"] = ball(ss.S0, d);
    j["per_m"] = std::move(per_m);
    j["S"] = ball(ss.S, d);
    j["Sprime"] = ball(ss.Sprime, d);
    j["identities"] = json{{"S2_partition_exact", partition_ok},
                           {"S_equals_sum_S2_minus_rho_S0",
                            ss.S.mid() == sum2.mid() - BigRational(rho) * ss.S0.mid()},
                           {"S2_I_equals_S2_II", mixed_symmetric}};
    j["note"] = "finite-N values; no comparison with asymptotic main terms is implied";
    emit(j, o.format, out);
    return 0;
}

int cmd_mc(const Options& o, const Flags& f, std::ostream& out) {
    const BuiltinTheorem* base = o.theorem.empty() ? nullptr : &builtin_theorem(o.theorem);
    const TestFunction F = (base && o.F.empty()) ? base->test_function() : load_function(o, f, base ? base->k : 0);
    std::optional<unsigned> m;
    if (f.given("--m")) m = o.m;
    const MonteCarloEstimate e = mc_simplex_integral(F, m, o.samples, o.seed);
    const BigRational exact = m ? J_k_m(F, *m).value : I_k(F).value;
    const double z = e.stderr_ > 0 ? (e.estimate - exact.to_double()) / e.stderr_ : 0.0;
    json j;
    j["command"] = "mc";
    j["test_function"] = F.to_string();
    j["functional"] = m ? "J" : "I";
    if (m) j["m"] = *m;
    j["samples"] = e.samples;
    j["seed"] = o.seed;
    j["estimate"] = e.estimate;
    j["stderr"] = e.stderr_;
    j["exact"] = rat(exact, o.digits);
    j["z_score"] = z;
    j["within_4_sigma"] = std::fabs(z) <= 4.0;
    emit(j, o.format, out);
    return 0;
}

int cmd_admissible(const Options& o, const Flags& f, std::ostream& out) {
    json j;
    j["command"] = "admissible";
    std::vector<u64> H;
    if (f.given("--H")) {
        H = parse_list(o.H);
    } else if (f.given("--k")) {
        const AdmissibleSet g = gen_admissible(o.k);
        H = g.elements();
        j["generated_for_k"] = o.k;
    } else {
        throw DomainError("admissible: give --H or --k");
    }
    const AdmissibleSet set(H);
    const AdmissibilityCertificate c = is_admissible(H);
    j["H"] = set.elements();
    j["size"] = set.size();
    j["diameter"] = set.diameter();
    j["admissible"] = c.admissible;
    json cert = json::array();
    for (const auto& [p, a] : c.missed_residue) cert.push_back(json{{"p", p}, {"missed_residue", a}});
    j["certificate"] = std::move(cert);
    j["covering_prime"] = c.covering_prime ? json(*c.covering_prime) : json(nullptr);
    emit(j, o.format, out);
    return 0;
}

int cmd_sequence(const Options& o, const Flags& /*f*/, std::ostream& out) {
    const Universe u = parse_universe(o.universe);
    std::vector<u64> v;
    switch (u) {
        case Universe::E2: v = e2_sequence(o.limit); break;
        case Universe::P2: v = p2_sequence(o.limit); break;
        case Universe::Primes:
            if (o.limit > kListBudget) throw BudgetExceeded("sequence: limit exceeds list budget");
            v = primes_up_to(o.limit);
            break;
    }
    json j;
    j["command"] = "sequence";
    j["universe"] = to_string(u);
    j["limit"] = o.limit;
    j["count"] = v.size();
    j["values"] = v;
    emit(j, o.format, out);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact sieve functionals and E2 number theory toolkit", "e2sieve"};
    app.require_subcommand(1);
    app.fallthrough();
    app.config_formatter(std::make_shared<CLI::ConfigINI>());
    app.set_config("--config", "", "flat key=value file; command-line flags override it");

    app.add_option("--theorem", o.theorem, "built-in configuration: 1.2, 1.3 or 1.4");
    app.add_option("--F", o.F, "test function: thm1.2 | thm1.3 | thm1.4 | expression in P<i>, u<i>");
    app.add_option("--k", o.k, "dimension for --F expressions; for admissible, generate a k-set");
    app.add_option("--rho", o.rho, "integer rho (arbitrary size for theorem11)");
    app.add_option("--theta", o.theta, "level of distribution theta");
    app.add_option("--delta", o.delta, "delta >= 0");
    app.add_option("--eta", o.eta, "beta cutoff eta in (0, 1/4)");
    app.add_option("--epsilon", o.epsilon, "epsilon > 0 (theorem11)");
    app.add_option("--variant", o.variant, "S or Sprime");
    app.add_option("--digits", o.digits, "significant digits for decimals")->check(CLI::Range(15, 400));
    app.add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--seed", o.seed, "Monte-Carlo seed");
    app.add_option("--samples", o.samples, "Monte-Carlo samples (>= 10000)");
    app.add_option("--m", o.m, "coordinate m for J (mc)");
    app.add_option("--limit", o.limit, "scan/sequence limit");
    app.add_option("--universe", o.universe, "primes, E2 (beta for bv) or P2");
    app.add_option("--mode", o.mode, "scan mode: gaps, tuples or bv");
    app.add_option("--H", o.H, "comma separated shifts, e.g. 0,2,6");
    app.add_option("--threshold", o.threshold, "minimum hits per tuple");
    app.add_option("--N", o.N, "N for sieve and bv computations");
    app.add_option("--R", o.R, "override R");
    app.add_option("--W", o.W, "override W");
    app.add_option("--D0", o.D0, "override D0");
    app.add_option("--bits", o.bits, "significant bits kept on lambda values");
    app.add_flag("--quad", o.quad, "cross-check outer integrals by quadrature");
    app.add_flag("--scan", o.scan, "theorem11: scan rho = 10^j for the threshold");
    app.add_option("--scan-min", o.scan_min, "first exponent j of the scan");
    app.add_option("--scan-max", o.scan_max, "last exponent j of the scan");

    using Handler = int (*)(const Options&, const Flags&, std::ostream&);
    const std::vector<std::tuple<std::string, std::string, Handler>> commands{
        {"verify", "reproduce a built-in leading-coefficient verdict", cmd_verify},
        {"functional", "I, J, L, M and the leading coefficient of a test function", cmd_functional},
        {"scan", "gap, tuple-hit or discrepancy scans", cmd_scan},
        {"theorem11", "parameter plan for the large-rho argument", cmd_theorem11},
        {"sieve", "finite-N lambda weights and S-sums", cmd_sieve},
        {"mc", "Monte-Carlo estimate of I or J", cmd_mc},
        {"admissible", "check or generate admissible sets", cmd_admissible},
        {"sequence", "list E2, P2 or prime numbers", cmd_sequence},
    };
    for (const auto& [name, desc, fn] : commands) app.add_subcommand(name, desc);

    std::vector<const char*> argv{"e2sieve"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const Flags flags{&app};
    try {
        for (const auto& [name, desc, fn] : commands)
            if (app.got_subcommand(name)) return fn(o, flags, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace e2sieve
