#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "etaq/arith.hpp"
#include "etaq/bigfloat.hpp"
#include "etaq/numeric.hpp"
#include "etaq/quotient.hpp"

namespace etaq {

enum class Branch { MainTheorem, Sussman };

// One (l, k) shell of the double sum: the full contribution
// 2 pi Delta4(l) ((24n+Delta2)/Delta3(l))^{-(Delta1+1)/2}
//   * I_nu(pi sqrt(Delta3(l)(24n+Delta2)) / (6k)) / k * exp_sum(n, k).
struct ShellContribution {
    long residue = 0;
    long k = 0;
    double value = 0.0;
};

struct AsymptoticEstimate {
    long n = 0;
    Branch branch = Branch::MainTheorem;
    long trunc = 0;  // N on the main branch, k_max on the Sussman branch
    std::vector<ShellContribution> contributions;  // ascending k
    double main_total = 0.0;
    // Explicit bound on |E(n)| (main branch only; 0 on the Sussman branch).
    double error_bound = 0.0;
    // |last included k-shell|, a heuristic remainder indicator (Sussman
    // branch only; the series is convergent but no truncation bound exists).
    double remainder_indicator = 0.0;
    // |Im| of the assembled sum, relative to max(|Re|, h-sum noise floor),
    // recorded before the imaginary part is discarded. Every k-shell is a
    // real number (h <-> k-h pairing), so only rounding survives here.
    double imag_residual = 0.0;
    std::optional<BigInt> exact;
};

// N = floor(sqrt(2 pi (n + Delta2/24))), with the floor verified in extended
// precision: N^2 <= 2 pi (n + Delta2/24) < (N+1)^2.
long truncation_order(const EtaQuotient& eq, long n);

// ceil(sqrt(n)) + L, the documented heuristic.
long default_sussman_kmax(const EtaQuotient& eq, long n);

struct TailDiagnostic {
    double tail = 0.0;   // sum_{k0 < k <= N, k = l0 (mod L)} |shell(k)|
    double scale = 0.0;  // exp(pi sqrt(Delta3(l0)(24n+Delta2)) / (6 k0))
};

// Evaluates one quotient at many n, reusing the exact omega phase tables
// across calls. Methods are deterministic (shells summed by ascending k);
// one instance is not safe for concurrent use, use one per thread.
class Evaluator {
public:
    explicit Evaluator(EtaQuotient eq);

    const EtaQuotient& quotient() const { return eq_; }
    const QuotientInvariants& invariants() const { return inv_; }

    AsymptoticEstimate main_term(long n);
    double error_bound(long n) const;
    AsymptoticEstimate sussman_term(long n, long k_max);
    TailDiagnostic tail_diagnostic(long n, long k0);

    // g(n) - main_total(n), the main term evaluated in arbitrary precision so
    // the difference is meaningful even when |g| >> eps^-1 |g - main_total|.
    double residual_vs_exact(long n, const BigInt& exact_coeff);

    // The Sussman partial sum rounded to the nearest integer, again in
    // arbitrary precision (p(500) already exceeds 2^64).
    BigInt sussman_rounded(long n, long k_max);

private:
    struct Assembly;
    void require_main_branch(long n) const;
    void require_sussman_branch(long n, long k_max) const;
    const PhaseTable& phases(long k);
    Assembly assemble(long n, long k_hi, int twice_nu);
    BigFloat assemble_hp(long n, long k_hi, int twice_nu, double abs_target);

    EtaQuotient eq_;
    QuotientInvariants inv_;
    AdmissibilityReport adm_;
    std::vector<std::unique_ptr<PhaseTable>> phase_tables_;  // slot k
};

AsymptoticEstimate main_term(const EtaQuotient& eq, long n);
double error_bound(const EtaQuotient& eq, long n);
AsymptoticEstimate sussman_term(const EtaQuotient& eq, long n, long k_max);
TailDiagnostic tail_diagnostic(const EtaQuotient& eq, long n, long k0);
double main_term_residual(const EtaQuotient& eq, long n, const BigInt& exact_coeff);
BigInt sussman_rounded(const EtaQuotient& eq, long n, long k_max);

}  // namespace etaq
