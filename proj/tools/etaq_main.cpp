// etaq: batch CLI over the eta-quotient library.
//
// Subcommands: coeffs, estimate, compare, check, verify. Exit codes:
//   0 success, 2 usage/parse error, 3 theorem hypothesis violated,
//   4 error-bound violation in `compare`, 5 verification failure.

#include <algorithm>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <future>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "etaq/asymptotic.hpp"
#include "etaq/errors.hpp"
#include "etaq/exact.hpp"
#include "etaq/parse.hpp"
#include "etaq/verify.hpp"

using json = nlohmann::ordered_json;

namespace {

struct BoundViolation {
    long n;
};

struct VerifyFailure {
    std::string what;
};

// Deterministic shortest-exact double formatting for CSV (JSON output goes
// through nlohmann, which already round-trips).
std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    double back = std::strtod(buf, nullptr);
    for (int prec = 1; prec <= 16; ++prec) {
        char candidate[64];
        std::snprintf(candidate, sizeof(candidate), "%.*g", prec, v);
        if (std::strtod(candidate, nullptr) == back) return candidate;
    }
    return buf;
}

unsigned thread_budget() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("ETAQ_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(std::min<long>(v, 256));
    }
    return hw;
}

struct QuotientArgs {
    std::string descriptor;
    std::vector<long> m;
    std::vector<long> delta;

    etaq::EtaQuotient resolve() const {
        if (!descriptor.empty()) {
            if (!m.empty() || !delta.empty())
                throw etaq::parse_error("give either a descriptor or --m/--delta, not both", 0);
            return etaq::parse_quotient(descriptor);
        }
        if (m.empty()) throw etaq::parse_error("no quotient given (descriptor or --m/--delta)", 0);
        return etaq::EtaQuotient(m, delta);
    }
};

void add_quotient_options(CLI::App* cmd, QuotientArgs& args) {
    cmd->add_option("quotient", args.descriptor,
                    "quotient descriptor \"m1:d1,m2:d2,...\" (e.g. \"1:-2,2:3,10:-1\")");
    cmd->add_option("--m", args.m, "comma-separated m_r list (with --delta)")->delimiter(',');
    cmd->add_option("--delta", args.delta, "comma-separated exponent list (with --m)")
        ->delimiter(',');
}

json invariants_json(const etaq::EtaQuotient& eq) {
    auto inv = etaq::invariants(eq);
    auto adm = etaq::check_admissible(eq);
    json d3 = json::object();
    json d4 = json::object();
    for (long l = 1; l <= inv.big_l; ++l) {
        d3[std::to_string(l)] = etaq::to_string(inv.delta3[static_cast<std::size_t>(l - 1)]);
        d4[std::to_string(l)] = etaq::to_string(inv.delta4_sq[static_cast<std::size_t>(l - 1)]);
    }
    json violations = json::array();
    for (const auto& [l, r] : adm.violations) violations.push_back({l, r});
    return json{{"quotient", etaq::format_quotient(eq)},
                {"delta1", etaq::to_string(inv.delta1)},
                {"delta2", inv.delta2},
                {"L", inv.big_l},
                {"delta3", std::move(d3)},
                {"delta4_sq", std::move(d4)},
                {"l_pos", inv.l_pos},
                {"l_nonpos", inv.l_nonpos},
                {"admissible", adm.ok},
                {"violations", std::move(violations)}};
}

int run_coeffs(const QuotientArgs& args, long upto, const std::string& format) {
    auto eq = args.resolve();
    auto series = etaq::expand(eq, upto);
    if (format == "json") {
        json out{{"quotient", etaq::format_quotient(eq)}, {"upto", upto}};
        json g = json::array();
        for (const auto& c : series.coeffs) g.push_back(etaq::to_string(c));
        out["g"] = std::move(g);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "n,g\n";
        for (long n = 0; n <= upto; ++n)
            std::cout << n << "," << etaq::to_string(series.at(n)) << "\n";
    }
    return 0;
}

json estimate_json(const etaq::EtaQuotient& eq, etaq::Evaluator& ev,
                   const etaq::AsymptoticEstimate& est) {
    json contributions = json::array();
    for (const auto& c : est.contributions)
        contributions.push_back(json{{"l", c.residue}, {"k", c.k}, {"value", c.value}});
    json out{{"quotient", etaq::format_quotient(eq)},
             {"n", est.n},
             {"branch", est.branch == etaq::Branch::MainTheorem ? "main" : "sussman"},
             {"delta1", etaq::to_string(ev.invariants().delta1)},
             {"trunc", est.trunc},
             {"main_total", est.main_total},
             {"imag_residual", est.imag_residual}};
    if (est.branch == etaq::Branch::MainTheorem) {
        out["error_bound"] = est.error_bound;
    } else {
        out["remainder_indicator"] = est.remainder_indicator;
        out["rounded"] = etaq::to_string(ev.sussman_rounded(est.n, est.trunc));
    }
    out["contributions"] = std::move(contributions);
    return out;
}

int run_estimate(const QuotientArgs& args, long n, std::optional<long> kmax) {
    auto eq = args.resolve();
    etaq::Evaluator ev(eq);
    etaq::AsymptoticEstimate est;
    if (ev.invariants().delta1.twice <= 0) {
        est = ev.main_term(n);
    } else {
        long cap = kmax.value_or(etaq::default_sussman_kmax(eq, n));
        est = ev.sussman_term(n, cap);
    }
    std::cout << estimate_json(eq, ev, est).dump(2) << "\n";
    return 0;
}

struct CompareRow {
    long n;
    std::string exact;
    double main_total;
    double error_bound;
    double abs_diff;
    std::optional<double> ratio;
    bool violation;
};

CompareRow compare_row_main(etaq::Evaluator& ev, const etaq::ExactSeries& series, long n) {
    const etaq::BigInt& g = series.at(n);
    auto est = ev.main_term(n);
    est.exact = g;
    double resid = std::fabs(ev.residual_vs_exact(n, g));
    CompareRow row{n,        etaq::to_string(*est.exact), est.main_total, est.error_bound,
                   resid,    std::nullopt,                false};
    double leading = 0.0;
    for (const auto& c : est.contributions)
        if (std::fabs(c.value) > std::fabs(leading)) leading = c.value;
    if (leading != 0.0) row.ratio = g.get_d() / leading;
    row.violation = resid > est.error_bound;
    return row;
}

CompareRow compare_row_sussman(etaq::Evaluator& ev, const etaq::ExactSeries& series, long n,
                               std::optional<long> kmax_opt) {
    const etaq::BigInt& g = series.at(n);
    long cap = kmax_opt.value_or(etaq::default_sussman_kmax(ev.quotient(), n));
    auto est = ev.sussman_term(n, cap);
    est.exact = g;
    etaq::BigInt rounded = ev.sussman_rounded(n, cap);
    etaq::BigInt diff = g - rounded;
    CompareRow row{n,
                   etaq::to_string(*est.exact),
                   est.main_total,
                   0.0,
                   std::fabs(diff.get_d()),
                   std::nullopt,
                   false};
    double leading = 0.0;
    for (const auto& c : est.contributions)
        if (std::fabs(c.value) > std::fabs(leading)) leading = c.value;
    if (leading != 0.0) row.ratio = g.get_d() / leading;
    return row;
}

int run_compare(const QuotientArgs& args, long from, long to, std::optional<long> kmax) {
    auto eq = args.resolve();
    if (from > to) throw etaq::parse_error("empty range: --from exceeds --to", 0);
    const bool main_branch = etaq::invariants(eq).delta1.twice <= 0;
    auto series = etaq::expand(eq, to);

    const long rows_n = to - from + 1;
    const unsigned threads =
        std::min<unsigned>(thread_budget(), static_cast<unsigned>(std::max<long>(rows_n / 16, 1)));
    std::vector<CompareRow> rows(static_cast<std::size_t>(rows_n));
    auto worker = [&](long lo, long hi) {
        etaq::Evaluator ev(eq);  // one evaluator (and phase-table cache) per thread
        for (long n = lo; n < hi; ++n)
            rows[static_cast<std::size_t>(n - from)] =
                main_branch ? compare_row_main(ev, series, n)
                            : compare_row_sussman(ev, series, n, kmax);
    };
    if (threads <= 1) {
        worker(from, to + 1);
    } else {
        std::vector<std::future<void>> jobs;
        long chunk = (rows_n + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            long lo = from + t * chunk;
            long hi = std::min<long>(lo + chunk, to + 1);
            if (lo >= hi) break;
            jobs.push_back(std::async(std::launch::async, worker, lo, hi));
        }
        for (auto& j : jobs) j.get();
    }

    std::cout << "n,exact,main_total,error_bound,abs_diff,ratio_leading\n";
    bool violated = false;
    for (const auto& row : rows) {
        std::cout << row.n << "," << row.exact << "," << fmt_double(row.main_total) << ",";
        if (main_branch) std::cout << fmt_double(row.error_bound);
        std::cout << "," << fmt_double(row.abs_diff) << ",";
        if (row.ratio) std::cout << fmt_double(*row.ratio);
        std::cout << "\n";
        violated = violated || row.violation;
    }
    if (violated) throw BoundViolation{0};
    return 0;
}

int run_check(const QuotientArgs& args, const std::string& format) {
    auto eq = args.resolve();
    json report = invariants_json(eq);
    if (format == "json") {
        std::cout << report.dump(2) << "\n";
        return 0;
    }
    std::cout << "quotient    " << report["quotient"].get<std::string>() << "\n"
              << "delta1      " << report["delta1"].get<std::string>() << "\n"
              << "delta2      " << report["delta2"].get<long>() << "\n"
              << "L           " << report["L"].get<long>() << "\n";
    std::cout << "l           delta3  delta4^2\n";
    auto inv = etaq::invariants(eq);
    for (long l = 1; l <= inv.big_l; ++l)
        std::cout << l << "  " << etaq::to_string(inv.delta3[static_cast<std::size_t>(l - 1)])
                  << "  " << etaq::to_string(inv.delta4_sq[static_cast<std::size_t>(l - 1)])
                  << "\n";
    std::cout << "L_{>0}      [";
    for (std::size_t i = 0; i < inv.l_pos.size(); ++i)
        std::cout << (i ? "," : "") << inv.l_pos[i];
    std::cout << "]\n";
    std::cout << "admissible  " << (report["admissible"].get<bool>() ? "yes" : "no") << "\n";
    for (const auto& v : report["violations"])
        std::cout << "  violated at l=" << v[0].get<long>() << " by r=" << v[1].get<long>()
                  << "\n";
    return 0;
}

int run_verify(const QuotientArgs& args, long samples, unsigned seed,
               const std::string& format) {
    auto eq = args.resolve();
    std::mt19937 rng(seed);
    json report{{"quotient", etaq::format_quotient(eq)}, {"samples", samples}, {"seed", seed}};
    bool ok = true;

    // Farey geometry of order 50: exact mediant bounds and exact tiling.
    {
        bool farey_ok = true;
        etaq::Rational total(0);
        for (long order = 1; order <= 50; ++order) {
            etaq::Rational sum(0);
            for (const auto& arc : etaq::farey_arcs(order)) {
                etaq::Rational lo = etaq::make_rational(1, 2 * arc.k * order);
                etaq::Rational hi = etaq::make_rational(1, arc.k * order);
                farey_ok = farey_ok && arc.theta_left >= lo && arc.theta_left <= hi &&
                           arc.theta_right >= lo && arc.theta_right <= hi;
                sum += arc.theta_left + arc.theta_right;
            }
            farey_ok = farey_ok && sum == 1;
            total = sum;
        }
        report["farey_ok"] = farey_ok;
        ok = ok && farey_ok;
        (void)total;
    }

    // Transformation identity at seeded sample points.
    {
        double max_residual = 0.0;
        std::uniform_int_distribution<long> pick_k(1, 12);
        std::uniform_real_distribution<double> pick_re(0.05, 1.0);
        std::uniform_real_distribution<double> pick_im(-0.5, 0.5);
        for (long i = 0; i < samples; ++i) {
            long k = pick_k(rng);
            std::vector<long> hs;
            for (long h = 0; h < k; ++h)
                if (std::gcd(h, k) == 1) hs.push_back(h);
            long h = hs[std::uniform_int_distribution<std::size_t>(0, hs.size() - 1)(rng)];
            etaq::SamplePoint pt(h, k, {pick_re(rng), pick_im(rng)});
            max_residual = std::max(max_residual, etaq::check_transform(eq, pt));
        }
        report["transform_max_residual"] = max_residual;
        ok = ok && max_residual < 1e-8;
    }

    // Bound lemmas on the arc geometry.
    {
        double min_margin = 1e300;
        for (long order : {5L, 10L, 25L}) {
            auto arcs = etaq::farey_arcs(order);
            std::uniform_int_distribution<std::size_t> pick_arc(0, arcs.size() - 1);
            for (long i = 0; i < samples; ++i) {
                const auto& arc = arcs[pick_arc(rng)];
                double span = 1.0 / (static_cast<double>(arc.k) * order);
                double phi = std::uniform_real_distribution<double>(-span, span)(rng);
                double rho = 1.0 / (static_cast<double>(order) * order);
                etaq::SamplePoint pt(arc.h, arc.k,
                                     {arc.k * rho, -static_cast<double>(arc.k) * phi});
                auto bounds = etaq::check_bounds(eq, order, pt);
                min_margin = std::min({min_margin, bounds.re_inv_z_margin, bounds.z_abs_margin,
                                       bounds.rough_bound_margin});
                for (double m : bounds.f_bound_margins) min_margin = std::min(min_margin, m);
                ok = ok && bounds.ok;
            }
        }
        report["bounds_min_margin"] = min_margin;
    }

    // Dedekind reciprocity, exact.
    {
        bool dedekind_ok = true;
        std::uniform_int_distribution<long> pick(1, 2000);
        for (int i = 0; i < 100; ++i) {
            long h = pick(rng), k = pick(rng);
            long g = std::gcd(h, k);
            h /= g;
            k /= g;
            etaq::Rational lhs = etaq::dedekind_sum(h, k).value + etaq::dedekind_sum(k, h).value;
            etaq::Rational rhs = etaq::make_rational(-1, 4) +
                                 (etaq::make_rational(h, k) + etaq::make_rational(k, h) +
                                  etaq::make_rational(1, h * k)) /
                                     12;
            dedekind_ok = dedekind_ok && lhs == rhs;
        }
        report["dedekind_ok"] = dedekind_ok;
        ok = ok && dedekind_ok;
    }

    report["ok"] = ok;
    if (format == "json") {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "farey bounds+tiling (order <= 50): "
                  << (report["farey_ok"].get<bool>() ? "ok" : "FAIL") << "\n"
                  << "transform max residual:            "
                  << fmt_double(report["transform_max_residual"].get<double>()) << "\n"
                  << "bound-lemma min margin:            "
                  << fmt_double(report["bounds_min_margin"].get<double>()) << "\n"
                  << "dedekind reciprocity:              "
                  << (report["dedekind_ok"].get<bool>() ? "ok" : "FAIL") << "\n"
                  << "overall:                           " << (ok ? "ok" : "FAIL") << "\n";
    }
    if (!ok) throw VerifyFailure{"verification residual exceeded tolerance"};
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and asymptotic Fourier coefficients of eta-quotients"};
    app.require_subcommand(1);

    QuotientArgs coeffs_args;
    long coeffs_upto = 0;
    std::string coeffs_format = "csv";
    auto* coeffs = app.add_subcommand("coeffs", "exact coefficients g(0..N)");
    add_quotient_options(coeffs, coeffs_args);
    coeffs->add_option("--upto", coeffs_upto, "last index N")->required();
    coeffs->add_option("--format", coeffs_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));

    QuotientArgs est_args;
    long est_n = 0;
    std::optional<long> est_kmax;
    auto* estimate = app.add_subcommand("estimate", "asymptotic main term at one n");
    add_quotient_options(estimate, est_args);
    estimate->add_option("--n", est_n, "target index")->required();
    estimate->add_option("--kmax", est_kmax, "k truncation (Sussman branch)");

    QuotientArgs cmp_args;
    long cmp_from = 0, cmp_to = 0;
    std::optional<long> cmp_kmax;
    auto* compare = app.add_subcommand("compare", "exact vs asymptotic over a range (CSV)");
    add_quotient_options(compare, cmp_args);
    compare->add_option("--from", cmp_from, "first n")->required();
    compare->add_option("--to", cmp_to, "last n")->required();
    compare->add_option("--kmax", cmp_kmax, "k truncation (Sussman branch)");

    QuotientArgs check_args;
    std::string check_format = "human";
    auto* check = app.add_subcommand("check", "invariants and admissibility report");
    add_quotient_options(check, check_args);
    check->add_option("--format", check_format, "human|json")
        ->check(CLI::IsMember({"human", "json"}));

    QuotientArgs verify_args;
    long verify_samples = 50;
    unsigned verify_seed = 1;
    std::string verify_format = "human";
    auto* verify = app.add_subcommand("verify", "transformation/bound identity suite");
    add_quotient_options(verify, verify_args);
    verify->add_option("--samples", verify_samples, "sample points per family");
    verify->add_option("--seed", verify_seed, "RNG seed");
    verify->add_option("--format", verify_format, "human|json")
        ->check(CLI::IsMember({"human", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (coeffs->parsed()) return run_coeffs(coeffs_args, coeffs_upto, coeffs_format);
        if (estimate->parsed()) return run_estimate(est_args, est_n, est_kmax);
        if (compare->parsed()) return run_compare(cmp_args, cmp_from, cmp_to, cmp_kmax);
        if (check->parsed()) return run_check(check_args, check_format);
        if (verify->parsed())
            return run_verify(verify_args, verify_samples, verify_seed, verify_format);
    } catch (const etaq::parse_error& e) {
        std::cerr << "error: " << e.what() << " (position " << e.position() << ")\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const etaq::hypothesis_error& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return 3;
    } catch (const BoundViolation&) {
        std::cerr << "error bound violated: |g(n) - main_total(n)| > error_bound(n)\n";
        return 4;
    } catch (const VerifyFailure& e) {
        std::cerr << "verification failure: " << e.what << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
