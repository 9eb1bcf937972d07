// catalan-forms: construct, verify, and diagnose rational linear forms
// u*G - v in Catalan's constant G.
//
// Subcommands:
//   forms        construct a family of forms and run denominator certificates
//   group        Whipple-group diagnostics (order, orbit, stability, probe24)
//   cf           continued fraction for 6G: convergents and cross-checks
//   conjecture   the order-2 recursion counterexample and its diagnostics
//   reference-g  print G to a requested number of digits with an error bound
//
// Exit codes: 0 success, 2 certificate failure, 3 precision failure, 64 usage.

#include <algorithm>
#include <array>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "catalan/beta_ref.hpp"
#include "catalan/conjecture.hpp"
#include "catalan/contfrac.hpp"
#include "catalan/cvector.hpp"
#include "catalan/errors.hpp"
#include "catalan/exact.hpp"
#include "catalan/forms.hpp"
#include "catalan/group.hpp"
#include "catalan/hp_real.hpp"
#include "catalan/hyper.hpp"
#include "catalan/recurrence.hpp"
#include "catalan/relation.hpp"
#include "catalan/series.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace catalan;

constexpr int kExitOk = 0;
constexpr int kExitCertificate = 2;
constexpr int kExitPrecision = 3;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

struct RunConfig {
    long precision_bits = 256;
    std::string n_range;       // "A..B", empty = subcommand default
    std::string format = "text";
    long slack_budget = 8;
    std::string denominator_cap = "1000000";

    BigInt cap() const { return BigInt(denominator_cap); }
};

std::pair<long, long> parse_range(const std::string& s, long def_lo, long def_hi,
                                  long min_lo) {
    if (s.empty()) return {def_lo, def_hi};
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        throw DomainError("--n-range must look like A..B, got '" + s + "'");
    }
    long lo = 0, hi = 0;
    try {
        size_t used = 0;
        lo = std::stol(s.substr(0, dots), &used);
        if (used != dots) throw std::invalid_argument(s);
        std::string rest = s.substr(dots + 2);
        hi = std::stol(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
        throw DomainError("--n-range must look like A..B with integer bounds, got '" + s + "'");
    }
    if (lo > hi) throw DomainError("--n-range is empty: " + s);
    if (lo < min_lo) {
        throw DomainError("--n-range lower bound must be >= " + std::to_string(min_lo) +
                          " for this subcommand, got " + std::to_string(lo));
    }
    return {lo, hi};
}

// ---- serialization helpers -------------------------------------------------

std::string rs(const BigRat& x) { return x.str(); }
std::string zs(const BigInt& x) { return x.get_str(); }
std::string es(const HPReal& x, size_t digits = 8) { return x.str(digits); }

// Fixed-point rendering with exactly `frac_digits` digits after the point.
std::string to_fixed(const HPReal& x, long frac_digits) {
    BigInt p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(frac_digits));
    HPReal scaled = x * HPReal(BigRat(p10), x.precision_bits());
    BigInt units = scaled.round_to_int();
    bool neg = units < 0;
    if (neg) units = -units;
    std::string d = units.get_str();
    if (static_cast<long>(d.size()) <= frac_digits) {
        d.insert(0, static_cast<size_t>(frac_digits) - d.size() + 1, '0');
    }
    std::string out = (neg ? "-" : "");
    out += d.substr(0, d.size() - static_cast<size_t>(frac_digits));
    out += ".";
    out += d.substr(d.size() - static_cast<size_t>(frac_digits));
    return out;
}

// ---- output rendering (json / csv / text) ----------------------------------

std::string csv_cell(const json& v) {
    std::string s;
    if (v.is_string()) {
        s = v.get<std::string>();
    } else if (v.is_boolean()) {
        s = v.get<bool>() ? "true" : "false";
    } else {
        s = v.dump();
    }
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string q = "\"";
        for (char ch : s) {
            if (ch == '"') q += "\"\"";
            else q += ch;
        }
        q += "\"";
        return q;
    }
    return s;
}

bool is_table(const json& v) {
    return v.is_array() && !v.empty() && v.front().is_object();
}

void emit_csv(const json& out, std::ostream& os) {
    for (const auto& [key, value] : out.items()) {
        if (is_table(value)) {
            os << "# " << key << "\n";
            std::vector<std::string> cols;
            for (const auto& [ck, cv] : value.front().items()) {
                (void)cv;
                cols.push_back(ck);
            }
            for (size_t i = 0; i < cols.size(); ++i) {
                os << (i ? "," : "") << cols[i];
            }
            os << "\n";
            for (const auto& row : value) {
                for (size_t i = 0; i < cols.size(); ++i) {
                    os << (i ? "," : "")
                       << (row.contains(cols[i]) ? csv_cell(row[cols[i]]) : "");
                }
                os << "\n";
            }
        } else if (value.is_object()) {
            os << "# " << key << "\n";
            for (const auto& [sk, sv] : value.items()) {
                os << sk << "," << csv_cell(sv) << "\n";
            }
        } else {
            os << key << "," << csv_cell(value) << "\n";
        }
    }
}

std::string text_cell(const json& v) {
    std::string s = csv_cell(v);
    if (s.size() > 64) s = s.substr(0, 61) + "...";
    return s;
}

void emit_text_table(const json& rows, std::ostream& os) {
    std::vector<std::string> cols;
    for (const auto& [ck, cv] : rows.front().items()) {
        (void)cv;
        cols.push_back(ck);
    }
    std::vector<size_t> w(cols.size());
    for (size_t i = 0; i < cols.size(); ++i) w[i] = cols[i].size();
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : rows) {
        std::vector<std::string> line;
        for (size_t i = 0; i < cols.size(); ++i) {
            std::string s = row.contains(cols[i]) ? text_cell(row[cols[i]]) : "";
            w[i] = std::max(w[i], s.size());
            line.push_back(std::move(s));
        }
        cells.push_back(std::move(line));
    }
    auto pad = [](const std::string& s, size_t width) {
        return s + std::string(width - s.size(), ' ');
    };
    os << "  ";
    for (size_t i = 0; i < cols.size(); ++i) {
        os << pad(cols[i], w[i]) << (i + 1 < cols.size() ? "  " : "");
    }
    os << "\n";
    for (const auto& line : cells) {
        os << "  ";
        for (size_t i = 0; i < cols.size(); ++i) {
            os << pad(line[i], w[i]) << (i + 1 < cols.size() ? "  " : "");
        }
        os << "\n";
    }
}

void emit_text(const json& out, std::ostream& os) {
    for (const auto& [key, value] : out.items()) {
        if (is_table(value)) {
            os << key << ":\n";
            emit_text_table(value, os);
        } else if (value.is_object()) {
            os << key << ":\n";
            for (const auto& [sk, sv] : value.items()) {
                os << "  " << sk << ": " << text_cell(sv) << "\n";
            }
        } else {
            os << key << ": " << text_cell(value) << "\n";
        }
    }
}

void emit(const RunConfig& cfg, const json& out) {
    if (cfg.format == "json") {
        std::cout << out.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        emit_csv(out, std::cout);
    } else {
        emit_text(out, std::cout);
    }
}

// ---- subcommand: forms -----------------------------------------------------

int cmd_forms(const RunConfig& cfg, const std::string& which) {
    auto [lo, hi] = parse_range(cfg.n_range, 0, 10, 0);

    std::vector<LinearFormQG> seq;
    if (which == "tilde") {
        seq = tilde_sequence(hi);
    } else {
        seq.reserve(static_cast<size_t>(hi) + 1);
        for (long n = 0; n <= hi; ++n) seq.push_back(linear_form_original(n));
    }
    auto ucert = u_certificates(seq, cfg.slack_budget);
    auto vcert = v_certificates(seq, cfg.slack_budget);

    json rows = json::array();
    bool all_pass = true;
    for (long n = lo; n <= hi; ++n) {
        auto i = static_cast<size_t>(n);
        const auto& u = ucert[i];
        const auto& v = vcert[i];
        bool pass = u.pass() && v.pass();
        all_pass = all_pass && pass;
        json row;
        row["n"] = n;
        row["u"] = rs(seq[i].u);
        row["v"] = rs(seq[i].v);
        row["u_pow2_den"] = u.pow2_denominator;
        row["u_exponent"] = u.exponent;
        row["u_bound"] = u.bound;
        row["u_within_bound"] = u.within_bound;
        row["u_within_4n"] = u.within_4n;
        if (!u.pow2_denominator) row["u_odd_part"] = zs(u.odd_part);
        row["v_pow2_den"] = v.pow2_denominator;
        row["v_exponent"] = v.exponent;
        row["v_bound"] = v.bound;
        row["v_within_bound"] = v.within_bound;
        row["v_within_4n"] = v.within_4n;
        if (!v.pow2_denominator) row["v_odd_part"] = zs(v.odd_part);
        row["certificate"] = pass ? "pass" : "FAIL";
        rows.push_back(std::move(row));
    }

    json out;
    out["subcommand"] = "forms";
    out["which"] = which;
    out["n_range"] = std::to_string(lo) + ".." + std::to_string(hi);
    out["slack_budget"] = cfg.slack_budget;
    out["rows"] = std::move(rows);
    out["all_pass"] = all_pass;
    emit(cfg, out);
    return all_pass ? kExitOk : kExitCertificate;
}

// ---- subcommand: group -----------------------------------------------------

std::array<BigRat, 5> parse_principal(const std::string& s) {
    std::array<BigRat, 5> cp;
    std::stringstream ss(s);
    std::string item;
    size_t i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= 5) throw DomainError("--c takes exactly 5 comma-separated rationals");
        cp[i++] = BigRat::from_string(item);
    }
    if (i != 5) throw DomainError("--c takes exactly 5 comma-separated rationals");
    return cp;
}

CVector require_admissible(const std::string& cstr) {
    CVector c = CVector::from_principal(parse_principal(cstr));
    if (!c.admissible()) {
        const auto& e = c.entries();
        for (int i = 0; i < kCVectorSize; ++i) {
            if (e[static_cast<size_t>(i)] <= BigRat(-1)) {
                throw DomainError(std::string("inadmissible c: entry ") + kCLabelNames[static_cast<size_t>(i)] +
                                  " = " + e[static_cast<size_t>(i)].str() + " is <= -1");
            }
        }
    }
    return c;
}

int cmd_group_order(const RunConfig& cfg) {
    const GroupClosure& g = generate_group();
    json gens = json::array();
    for (const auto& np : group_generators()) {
        gens.push_back({{"name", np.name}, {"cycles", np.perm.cycles()}});
    }
    json rows = json::array();
    for (const auto& el : g.elements) {
        rows.push_back({{"word", el.word},
                        {"length", el.length},
                        {"cycles", el.perm.cycles()}});
    }
    json out;
    out["subcommand"] = "group order";
    out["order"] = g.elements.size();
    out["max_word_length"] = g.max_word_length;
    out["generators"] = std::move(gens);
    out["elements"] = std::move(rows);
    emit(cfg, out);
    return kExitOk;
}

int cmd_group_orbit(const RunConfig& cfg, const std::string& cstr) {
    CVector c = require_admissible(cstr);
    auto orb = orbit(c);
    json rows = json::array();
    long n_adm = 0, n_demi = 0;
    for (const auto& oe : orb) {
        auto cp = oe.c.principal();
        json row;
        row["word"] = oe.word;
        row["c00"] = rs(cp[0]);
        row["c21"] = rs(cp[1]);
        row["c22"] = rs(cp[2]);
        row["c33"] = rs(cp[3]);
        row["c31"] = rs(cp[4]);
        row["admissible"] = oe.admissible;
        row["demi_integral"] = oe.demi_integral;
        rows.push_back(std::move(row));
        n_adm += oe.admissible ? 1 : 0;
        n_demi += oe.demi_integral ? 1 : 0;
    }
    json out;
    out["subcommand"] = "group orbit";
    out["base"] = c.str();
    out["orbit_size"] = orb.size();
    out["admissible_count"] = n_adm;
    out["demi_integral_count"] = n_demi;
    out["rows"] = std::move(rows);
    emit(cfg, out);
    return kExitOk;
}

int cmd_group_stability(const RunConfig& cfg, const std::string& cstr) {
    CVector c = require_admissible(cstr);
    if (!c.strictly_positive()) {
        throw DomainError("stability check needs every entry of c strictly positive; got " + c.str());
    }
    HPReal tol = HPReal::pow2(-cfg.precision_bits / 4, cfg.precision_bits);
    json rows = json::array();
    bool all_pass = true;

    {
        StabilityResult idr = stability_check(c, Permutation10::identity(), cfg.precision_bits);
        rows.push_back({{"sigma", "e"},
                        {"residual", es(idr.residual)},
                        {"sqrt_pi_power_diff", idr.sqrt_pi_power_diff},
                        {"below_tolerance", idr.residual < tol},
                        {"exact_zero", idr.residual.is_zero()}});
        all_pass = all_pass && idr.residual.is_zero();
    }
    for (const auto& np : group_generators()) {
        json row;
        row["sigma"] = np.name;
        CVector sc = np.perm.apply(c);
        if (!sc.strictly_positive()) {
            row["residual"] = "skipped: sigma(c) not strictly positive";
            row["sqrt_pi_power_diff"] = nullptr;
            row["below_tolerance"] = false;
            row["exact_zero"] = false;
            rows.push_back(std::move(row));
            all_pass = false;
            continue;
        }
        StabilityResult r = stability_check(c, np.perm, cfg.precision_bits);
        bool ok = r.residual < tol;
        all_pass = all_pass && ok;
        row["residual"] = es(r.residual);
        row["sqrt_pi_power_diff"] = r.sqrt_pi_power_diff;
        row["below_tolerance"] = ok;
        row["exact_zero"] = r.residual.is_zero();
        rows.push_back(std::move(row));
    }

    json out;
    out["subcommand"] = "group stability";
    out["c"] = c.str();
    out["precision_bits"] = cfg.precision_bits;
    out["tolerance"] = es(tol);
    out["rows"] = std::move(rows);
    out["all_below_tolerance"] = all_pass;
    emit(cfg, out);
    return all_pass ? kExitOk : kExitCertificate;
}

int cmd_group_probe24(const RunConfig& cfg) {
    struct Probe {
        std::string label;
        CVector c;
    };
    std::vector<Probe> probes;
    for (long n = 1; n <= 3; ++n) {
        probes.push_back({"euler-c" + std::to_string(n), euler_cvector(n)});
    }
    for (long n = 1; n <= 2; ++n) {
        probes.push_back({"wellpoised-c" + std::to_string(n), c_from_h(wellpoised_family_h(n))});
    }

    json rows = json::array();
    bool all_divide = true, any_unresolved = false;
    for (const auto& pr : probes) {
        ProbeResult r = probe_denominator_inclusion(pr.c, pr.label, cfg.precision_bits,
                                                    cfg.slack_budget, cfg.cap());
        json row;
        row["label"] = r.label;
        row["c"] = pr.c.str();
        row["M"] = rs(r.big_m);
        row["m1"] = rs(r.m1);
        row["m2"] = rs(r.m2);
        row["modulus"] = zs(r.modulus);
        row["resolved"] = r.resolved;
        row["inconclusive"] = r.inconclusive;
        if (r.resolved) {
            row["p"] = rs(r.p);
            row["q"] = rs(r.q);
            row["p_divides"] = r.p_divides;
            row["q_divides"] = r.q_divides;
            all_divide = all_divide && r.p_divides && r.q_divides;
        } else {
            any_unresolved = true;
        }
        rows.push_back(std::move(row));
    }

    json out;
    out["subcommand"] = "group probe24";
    out["precision_bits"] = cfg.precision_bits;
    out["slack_budget"] = cfg.slack_budget;
    out["denominator_cap"] = cfg.denominator_cap;
    out["rows"] = std::move(rows);
    out["all_resolved"] = !any_unresolved;
    out["all_divide"] = all_divide;
    out["note"] = "denominator inclusion is experimental evidence, not a theorem";
    emit(cfg, out);
    // Evidence only: divisibility misses are reported, not enforced.  A failure
    // to even resolve p, q at the requested precision is a precision failure.
    return any_unresolved ? kExitPrecision : kExitOk;
}

// ---- subcommand: cf --------------------------------------------------------

int cmd_cf(const RunConfig& cfg) {
    auto [lo, hi] = parse_range(cfg.n_range, 1, 20, 1);
    long g_bits = std::max(cfg.precision_bits, 7 * hi + 64);
    HPReal g_ref = reference_catalan(g_bits);

    auto vs = cf_vs_recursion(hi);
    json rows = json::array();
    bool all_match = true, all_fb = true;
    for (long N = lo; N <= hi; ++N) {
        BigRat conv = convergent(N);
        BigRat fwd = convergent_forward(N);
        bool fb = (conv == fwd);
        all_fb = all_fb && fb;
        DigitsReport dr = digits_report(N, g_ref);
        bool match = false;
        for (const auto& r : vs) {
            if (r.N == N) { match = r.equal; break; }
        }
        all_match = all_match && match;
        json row;
        row["N"] = N;
        row["convergent"] = rs(conv);
        row["digits"] = dr.digits;
        row["difference"] = dr.difference;
        row["matches_recursion"] = match;
        row["forward_equals_backward"] = fb;
        rows.push_back(std::move(row));
    }

    json out;
    out["subcommand"] = "cf";
    out["n_range"] = std::to_string(lo) + ".." + std::to_string(hi);
    out["rows"] = std::move(rows);
    out["all_match_recursion"] = all_match;
    out["all_forward_equals_backward"] = all_fb;
    emit(cfg, out);
    return (all_match && all_fb) ? kExitOk : kExitCertificate;
}

// ---- subcommand: conjecture --------------------------------------------------

json den_rows(const std::vector<DenLcmRow>& rows) {
    json t = json::array();
    for (const auto& r : rows) {
        t.push_back({{"n", r.n},
                     {"lcm_den", zs(r.lcm_den)},
                     {"log_lcm_over_n", r.log_lcm_over_n}});
    }
    return t;
}

int cmd_conjecture(const RunConfig& cfg) {
    auto [lo, hi] = parse_range(cfg.n_range, 2, 120, 2);
    (void)lo;
    long N = hi;

    CounterexampleReport rep = verify_counterexample(N, cfg.precision_bits);

    long nx = std::min<long>(N, 40);
    long nu = std::min<long>(N, 100);
    auto xs = counterexample_x(nx);
    auto seq = tilde_sequence(nu);
    std::vector<BigRat> us;
    us.reserve(seq.size());
    for (const auto& f : seq) us.push_back(f.u);
    std::vector<BigRat> ones(21, BigRat(1));

    long g_bits = std::max(cfg.precision_bits, 7 * nu + 64);
    PerronReport perron = perron_basis_check(nu, reference_catalan(g_bits));

    json out;
    out["subcommand"] = "conjecture";
    out["N"] = N;
    json verify;
    verify["checks"] = rep.checks;
    verify["all_exact"] = rep.all_exact;
    verify["first_failure"] = rep.first_failure;
    verify["x_ratio"] = rs(rep.x_ratio);
    verify["y_ratio"] = rs(rep.y_ratio);
    verify["x_ratio_residual"] = es(rep.x_ratio_residual);
    verify["y_ratio_residual"] = es(rep.y_ratio_residual);
    verify["discriminant"] = zs(rep.discriminant);
    verify["discriminant_is_square"] = rep.discriminant_is_square;
    out["verify_counterexample"] = std::move(verify);
    out["den_lcm_x"] = den_rows(den_lcm_growth(xs));
    out["den_lcm_u_tilde"] = den_rows(den_lcm_growth(us));
    out["den_lcm_constant"] = den_rows(den_lcm_growth(ones));
    json pj;
    pj["n"] = perron.n;
    pj["u_ratio"] = es(perron.u_ratio, 20);
    pj["r_ratio"] = es(perron.r_ratio, 20);
    pj["lambda_plus"] = es(perron.lambda_plus, 20);
    pj["lambda_minus"] = es(perron.lambda_minus, 20);
    pj["u_residual"] = es(perron.u_residual);
    pj["r_residual"] = es(perron.r_residual);
    pj["root_sum"] = rs(perron.root_sum);
    pj["root_product"] = rs(perron.root_product);
    out["perron_basis_check"] = std::move(pj);
    bool ok = rep.all_exact && !rep.discriminant_is_square;
    out["all_exact"] = ok;
    emit(cfg, out);
    return ok ? kExitOk : kExitCertificate;
}

// ---- subcommand: reference-g -------------------------------------------------

int cmd_reference_g(const RunConfig& cfg, long digits) {
    if (digits < 1) throw DomainError("--digits must be >= 1");
    if (digits > 5000) {
        throw PrecisionError("requested " + std::to_string(digits) +
                             " digits; this build supports at most 5000");
    }
    long bits = static_cast<long>(digits * 3.33) + 64;

    BigInt p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    BigRat target = BigRat(BigInt(1), 2 * p10); // want error <= 10^-digits / 2

    // Consecutive convergents of the continued fraction for 6G bracket the
    // limit, so |v_{n+1}/u_{n+1} - G| <= |v_{n+1}/u_{n+1} - v_n/u_n| exactly.
    long n = static_cast<long>(static_cast<double>(digits) / 2.09) + 4;
    BigRat value, err;
    for (int attempt = 0;; ++attempt) {
        if (attempt > 8) {
            throw PrecisionError("continued fraction did not reach " +
                                 std::to_string(digits) + " digits");
        }
        auto seq = tilde_sequence(n + 1);
        BigRat gn = seq[static_cast<size_t>(n)].v / seq[static_cast<size_t>(n)].u;
        BigRat gn1 = seq[static_cast<size_t>(n + 1)].v / seq[static_cast<size_t>(n + 1)].u;
        err = (gn1 - gn).abs();
        value = gn1;
        if (err <= target) break;
        n += std::max<long>(2, n / 4);
    }

    HPReal v(value, bits);
    HPReal oracle = reference_catalan(bits);
    HPReal diff = (v - oracle).abs();
    HPReal allowance = HPReal(err, bits) + HPReal::pow2(-(bits - 8), bits);
    bool agree = diff <= allowance;

    json out;
    out["subcommand"] = "reference-g";
    out["digits"] = digits;
    out["n_used"] = n + 1;
    out["value"] = to_fixed(v, digits);
    out["error_bound"] = es(HPReal(err, 64));
    out["oracle_agreement"] = agree;
    emit(cfg, out);
    if (!agree) return kExitCertificate;
    return kExitOk;
}

// ---- main --------------------------------------------------------------------

void attach_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--n-range", cfg.n_range, "index range A..B (inclusive)");
    sub->add_option("--precision-bits", cfg.precision_bits,
                    "working precision in bits (>= 64)")
        ->envname("CATALAN_FORMS_PRECISION_BITS");
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--slack-budget", cfg.slack_budget,
                    "extra powers of 2 allowed in denominator bounds");
    sub->add_option("--denominator-cap", cfg.denominator_cap,
                    "largest |A| accepted when detecting a relation A*H + B*G + C = 0");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact linear forms u*G - v in Catalan's constant: "
                 "construction, certificates, and diagnostics"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string which = "tilde";
    std::string cstr = "1/2,1/2,1,1/2,1";
    std::string group_mode;
    long digits = 30;

    CLI::App* s_forms = app.add_subcommand("forms", "construct u_n, v_n and certify denominators");
    s_forms->add_option("--which", which, "family: original or tilde")
        ->check(CLI::IsMember({"original", "tilde"}));
    attach_common(s_forms, cfg);

    CLI::App* s_group = app.add_subcommand("group", "Whipple-group diagnostics");
    s_group->add_option("mode", group_mode, "order | orbit | stability | probe24")
        ->required()
        ->check(CLI::IsMember({"order", "orbit", "stability", "probe24"}));
    s_group->add_option("--c", cstr, "principal 5-tuple c00,c21,c22,c33,c31 (rationals)");
    attach_common(s_group, cfg);

    CLI::App* s_cf = app.add_subcommand("cf", "continued fraction for 6G");
    attach_common(s_cf, cfg);

    CLI::App* s_conj = app.add_subcommand("conjecture", "order-2 rational recursion counterexample");
    attach_common(s_conj, cfg);

    CLI::App* s_ref = app.add_subcommand("reference-g", "print G to a requested number of digits");
    s_ref->add_option("--digits", digits, "decimal digits after the point");
    attach_common(s_ref, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cfg.precision_bits < 64) {
            throw DomainError("--precision-bits must be >= 64, got " +
                              std::to_string(cfg.precision_bits));
        }
        if (app.got_subcommand(s_forms)) return cmd_forms(cfg, which);
        if (app.got_subcommand(s_group)) {
            if (group_mode == "order") return cmd_group_order(cfg);
            if (group_mode == "orbit") return cmd_group_orbit(cfg, cstr);
            if (group_mode == "stability") return cmd_group_stability(cfg, cstr);
            return cmd_group_probe24(cfg);
        }
        if (app.got_subcommand(s_cf)) return cmd_cf(cfg);
        if (app.got_subcommand(s_conj)) return cmd_conjecture(cfg);
        if (app.got_subcommand(s_ref)) return cmd_reference_g(cfg, digits);
        throw DomainError("no subcommand given");
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PrecisionError& e) {
        std::cerr << "precision failure: " << e.what() << "\n";
        return kExitPrecision;
    } catch (const CertificateError& e) {
        std::cerr << "certificate failure: " << e.what() << "\n";
        return kExitCertificate;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
