#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "evenwalks/numeric.hpp"
#include "evenwalks/walk.hpp"

namespace evenwalks {

enum class EntryLaw { rademacher, uniform_symmetric, gaussian };

std::string law_name(EntryLaw law);
EntryLaw parse_law(const std::string& name);

/// Symmetric-matrix ensemble description: size, exact even entry moments
/// V2, V4, ..., an optional a.s. bound, and the sampling law behind them.
struct MomentSpec {
    int n = 1;
    std::vector<Rational> even_moments;       // even_moments[m-1] = E a^(2m)
    std::optional<Rational> bound;            // U with |a| <= U a.s.
    EntryLaw law = EntryLaw::rademacher;
    Rational uniform_half_width_sq = 1;       // a^2 for the uniform law on [-a, a]
    bool zero_diagonal = false;

    /// E a^(2m); throws when the stored sequence is too short.
    const Rational& moment(int two_m) const;
    int max_order() const { return static_cast<int>(even_moments.size()) * 2; }

    static MomentSpec rademacher_spec(int n, int orders = 16);
    static MomentSpec gaussian_spec(int n, int orders = 16);
    /// Uniform on [-a, a] with a^2 = half_width_sq; variance-one when
    /// half_width_sq == 3.
    static MomentSpec uniform_spec(int n, const Rational& half_width_sq = 3, int orders = 16);
};

/// Product over non-oriented edges of V_{multiplicity}; zero-diagonal specs
/// annihilate walks with loop steps.
Rational weight(const Walk& walk, const MomentSpec& spec);

/// Number of label assignments realizing the walk on n vertices: the falling
/// factorial (n)_{|V|}.
BigInt class_cardinality(const Walk& walk, int n);

/// Walk-sum trace moment: n^-s * sum over minimal even walks of
/// (n)_{|V|} * weight. Exact rational.
Rational exact_moment(int s, const MomentSpec& spec, std::uint64_t max_walks = 20'000'000);

/// Direct index-sum over all n^(2s) closed index sequences; the independent
/// oracle for exact_moment. Walk machinery is deliberately not used here.
Rational brute_force_moment(int s, const MomentSpec& spec,
                            std::uint64_t max_sequences = 10'000'000);

/// Coefficients of sum_w (n)_{|V|} weight(w) as a polynomial in n; dividing
/// the evaluation by n^s gives exact_moment.
struct MomentPolynomial {
    int s = 0;
    std::vector<Rational> coeff;  // coeff[d] multiplies n^d, degree <= s+1
    Rational evaluate_sum(const BigInt& n) const;
    Rational evaluate_moment(const BigInt& n) const;  // divided by n^s
};

MomentPolynomial moment_polynomial(int s, const MomentSpec& spec,
                                   std::uint64_t max_walks = 20'000'000);

/// Four-way split of the walk sum by intersection mass sigma vs c0*s^2/n,
/// presence of an edge of multiplicity > 2, and max exit degree vs
/// s^(1/2-eps). The parts sum to exact_moment exactly.
struct ZDecomposition {
    Rational z1, z2, z3, z4;
    Rational total() const { return z1 + z2 + z3 + z4; }
};

ZDecomposition z_decomposition(int s, const MomentSpec& spec, const Rational& c0,
                               const Rational& eps, std::uint64_t max_walks = 20'000'000);

struct McResult {
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
};

/// Sample mean of Tr A^(2s) over independent symmetric matrices with iid
/// upper-triangle entries scaled by n^(-1/2). trunc_bound zeroes entries
/// whose magnitude exceeds it (0 disables truncation).
McResult mc_moment(int s, int n, EntryLaw law, std::uint64_t trials, std::uint64_t seed,
                   double trunc_bound = 0.0, bool zero_diagonal = false);

/// Entry moments after zeroing the law outside [-U, U]. Exact for atom and
/// uniform laws; throws for laws without exact truncated moments.
MomentSpec truncate_spec(const MomentSpec& spec, const Rational& U);

/// Truncation level n^(alpha_num/alpha_den). Exact when no clipping occurs;
/// clipping is detected exactly via n^p vs a^q.
MomentSpec truncate_spec_power(const MomentSpec& spec, int n, unsigned alpha_num,
                               unsigned alpha_den);

/// weight(w) <= prod over k>=2 of (V12 * U^(2(k-2)))^(nu_k).
bool check_weight_bound(const Walk& walk, const MomentSpec& spec, const Rational& U);

}  // namespace evenwalks
