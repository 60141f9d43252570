#include "evenwalks/moments.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "evenwalks/classify.hpp"

namespace evenwalks {

std::string law_name(EntryLaw law) {
    switch (law) {
        case EntryLaw::rademacher: return "rademacher";
        case EntryLaw::uniform_symmetric: return "uniform";
        case EntryLaw::gaussian: return "gaussian";
    }
    return "?";
}

EntryLaw parse_law(const std::string& name) {
    if (name == "rademacher") return EntryLaw::rademacher;
    if (name == "uniform") return EntryLaw::uniform_symmetric;
    if (name == "gaussian") return EntryLaw::gaussian;
    throw std::invalid_argument("unknown entry law: " + name);
}

const Rational& MomentSpec::moment(int two_m) const {
    if (two_m <= 0 || two_m % 2 != 0) throw std::invalid_argument("moment order must be even and positive");
    const std::size_t idx = static_cast<std::size_t>(two_m / 2) - 1;
    if (idx >= even_moments.size()) {
        throw std::out_of_range("moment sequence too short for order " + std::to_string(two_m));
    }
    return even_moments[idx];
}

MomentSpec MomentSpec::rademacher_spec(int n, int orders) {
    MomentSpec spec;
    spec.n = n;
    spec.law = EntryLaw::rademacher;
    spec.bound = 1;
    spec.even_moments.assign(static_cast<std::size_t>(orders), Rational(1));
    return spec;
}

MomentSpec MomentSpec::gaussian_spec(int n, int orders) {
    MomentSpec spec;
    spec.n = n;
    spec.law = EntryLaw::gaussian;
    spec.even_moments.reserve(static_cast<std::size_t>(orders));
    BigInt v = 1;  // (2m-1)!!
    for (int m = 1; m <= orders; ++m) {
        v *= 2 * m - 1;
        spec.even_moments.emplace_back(v);
    }
    return spec;
}

MomentSpec MomentSpec::uniform_spec(int n, const Rational& half_width_sq, int orders) {
    MomentSpec spec;
    spec.n = n;
    spec.law = EntryLaw::uniform_symmetric;
    spec.uniform_half_width_sq = half_width_sq;
    spec.even_moments.reserve(static_cast<std::size_t>(orders));
    Rational p = 1;
    for (int m = 1; m <= orders; ++m) {
        p *= half_width_sq;
        spec.even_moments.push_back(p / Rational(2 * m + 1));  // a^(2m)/(2m+1)
    }
    return spec;
}

Rational weight(const Walk& walk, const MomentSpec& spec) {
    std::map<std::pair<int, int>, int> mult;
    for (int t = 1; t <= walk.step_count(); ++t) {
        const int a = walk.label(t - 1);
        const int b = walk.label(t);
        mult[{std::min(a, b), std::max(a, b)}] += 1;
    }
    Rational q = 1;
    for (const auto& [edge, count] : mult) {
        if (count % 2 != 0) return 0;
        if (spec.zero_diagonal && edge.first == edge.second) return 0;
        q *= spec.moment(count);
    }
    return q;
}

BigInt class_cardinality(const Walk& walk, int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    return falling_factorial(BigInt(n), static_cast<unsigned>(walk.vertex_count()));
}

Rational exact_moment(int s, const MomentSpec& spec, std::uint64_t max_walks) {
    Rational sum = 0;
    std::uint64_t seen = 0;
    for_each_even_walk(s, [&](const Walk& w) {
        if (++seen > max_walks) {
            throw BudgetExceeded("walk-sum moment over budget", seen, max_walks);
        }
        const Rational q = weight(w, spec);
        if (q != 0) sum += Rational(class_cardinality(w, spec.n)) * q;
    });
    return sum / pow_rational(Rational(spec.n), static_cast<unsigned>(s));
}

Rational brute_force_moment(int s, const MomentSpec& spec, std::uint64_t max_sequences) {
    const int n = spec.n;
    if (n < 1) throw std::invalid_argument("n must be positive");
    double total_d = std::pow(static_cast<double>(n), 2.0 * s);
    if (total_d > static_cast<double>(max_sequences)) {
        throw BudgetExceeded("index-sum moment over budget",
                             total_d > 1e18 ? UINT64_MAX : static_cast<std::uint64_t>(total_d),
                             max_sequences);
    }

    const int len = 2 * s;
    std::vector<int> idx(static_cast<std::size_t>(len), 0);  // 0-based vertex ids
    std::vector<int> counts(static_cast<std::size_t>(n * n), 0);
    std::vector<int> touched;

    Rational sum = 0;
    while (true) {
        // weight of the closed sequence idx[0], ..., idx[len-1], idx[0]
        touched.clear();
        bool zero = false;
        for (int t = 0; t < len; ++t) {
            int a = idx[static_cast<std::size_t>(t)];
            int b = idx[static_cast<std::size_t>((t + 1) % len)];
            if (a > b) std::swap(a, b);
            const int slot = a * n + b;
            if (counts[static_cast<std::size_t>(slot)] == 0) touched.push_back(slot);
            counts[static_cast<std::size_t>(slot)] += 1;
        }
        Rational q = 1;
        for (int slot : touched) {
            const int c = counts[static_cast<std::size_t>(slot)];
            if (c % 2 != 0) { zero = true; break; }
            if (spec.zero_diagonal && slot / n == slot % n) { zero = true; break; }
            q *= spec.moment(c);
        }
        if (!zero) sum += q;
        for (int slot : touched) counts[static_cast<std::size_t>(slot)] = 0;

        int pos = len - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - 1) {
            idx[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        idx[static_cast<std::size_t>(pos)] += 1;
    }
    return sum / pow_rational(Rational(n), static_cast<unsigned>(s));
}

Rational MomentPolynomial::evaluate_sum(const BigInt& n) const {
    Rational acc = 0;
    Rational power = 1;
    for (const auto& c : coeff) {
        acc += c * power;
        power *= Rational(n);
    }
    return acc;
}

Rational MomentPolynomial::evaluate_moment(const BigInt& n) const {
    return evaluate_sum(n) / pow_rational(Rational(n), static_cast<unsigned>(s));
}

MomentPolynomial moment_polynomial(int s, const MomentSpec& spec, std::uint64_t max_walks) {
    MomentPolynomial poly;
    poly.s = s;
    poly.coeff.assign(static_cast<std::size_t>(s) + 2, Rational(0));

    // (n)_v expanded in the monomial basis, for v = 0 .. s+1
    std::vector<std::vector<BigInt>> falling(static_cast<std::size_t>(s) + 2);
    falling[0] = {1};
    for (int v = 1; v <= s + 1; ++v) {
        const auto& prev = falling[static_cast<std::size_t>(v - 1)];
        std::vector<BigInt> cur(prev.size() + 1, 0);
        for (std::size_t d = 0; d < prev.size(); ++d) {
            cur[d + 1] += prev[d];
            cur[d] -= prev[d] * (v - 1);
        }
        falling[static_cast<std::size_t>(v)] = std::move(cur);
    }

    std::uint64_t seen = 0;
    for_each_even_walk(s, [&](const Walk& w) {
        if (++seen > max_walks) {
            throw BudgetExceeded("moment polynomial over budget", seen, max_walks);
        }
        const Rational q = weight(w, spec);
        if (q == 0) return;
        const auto& ff = falling[static_cast<std::size_t>(w.vertex_count())];
        for (std::size_t d = 0; d < ff.size(); ++d) {
            poly.coeff[d] += q * Rational(ff[d]);
        }
    });
    return poly;
}

ZDecomposition z_decomposition(int s, const MomentSpec& spec, const Rational& c0,
                               const Rational& eps, std::uint64_t max_walks) {
    ZDecomposition z{0, 0, 0, 0};
    const Rational sigma_threshold = c0 * Rational(s) * Rational(s) / Rational(spec.n);
    const double delta_threshold =
        std::pow(static_cast<double>(s), 0.5 - to_double(eps));
    const Rational n_pow = pow_rational(Rational(spec.n), static_cast<unsigned>(s));

    std::uint64_t seen = 0;
    for_each_even_walk(s, [&](const Walk& w) {
        if (++seen > max_walks) {
            throw BudgetExceeded("z decomposition over budget", seen, max_walks);
        }
        const Rational q = weight(w, spec);
        if (q == 0) return;
        const Rational term = Rational(class_cardinality(w, spec.n)) * q / n_pow;
        const WalkGraph graph(w);
        const long sigma = static_cast<long>(s) + 1 - graph.vertex_count();
        if (Rational(sigma) > sigma_threshold) {
            z.z4 += term;
        } else if (static_cast<double>(graph.max_exit_degree()) > delta_threshold) {
            z.z3 += term;
        } else if (graph.max_edge_multiplicity() > 2) {
            z.z2 += term;
        } else {
            z.z1 += term;
        }
    });
    return z;
}

namespace {

/// Uniform double in [0, 1) with 53 random bits; avoids the
/// implementation-defined std::uniform_real_distribution.
double canonical_unit(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

double draw_entry(std::mt19937_64& gen, EntryLaw law) {
    switch (law) {
        case EntryLaw::rademacher:
            return (gen() & 1u) ? 1.0 : -1.0;
        case EntryLaw::uniform_symmetric:
            return (2.0 * canonical_unit(gen) - 1.0) * std::sqrt(3.0);
        case EntryLaw::gaussian: {
            // Box-Muller, one variate per call pair
            double u1 = canonical_unit(gen);
            while (u1 <= 0.0) u1 = canonical_unit(gen);
            const double u2 = canonical_unit(gen);
            return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
        }
    }
    return 0.0;
}

}  // namespace

McResult mc_moment(int s, int n, EntryLaw law, std::uint64_t trials, std::uint64_t seed,
                   double trunc_bound, bool zero_diagonal) {
    if (s < 1 || n < 1) throw std::invalid_argument("s and n must be positive");
    std::mt19937_64 gen(seed);
    Eigen::MatrixXd a(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));

    McResult result;
    result.trials = trials;
    double mean = 0.0, m2 = 0.0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                double x = draw_entry(gen, law);
                if (trunc_bound > 0.0 && std::abs(x) > trunc_bound) x = 0.0;
                if (zero_diagonal && i == j) x = 0.0;
                a(i, j) = x * scale;
                a(j, i) = a(i, j);
            }
        }
        Eigen::MatrixXd power = a;
        for (int k = 2; k <= s; ++k) power = (power * a).eval();
        const double trace = power.squaredNorm();  // Tr A^(2s) for symmetric A
        const double delta = trace - mean;
        mean += delta / static_cast<double>(trial + 1);
        m2 += delta * (trace - mean);
    }
    result.estimate = mean;
    result.std_error = trials > 1 ? std::sqrt(m2 / static_cast<double>(trials - 1) /
                                              static_cast<double>(trials))
                                  : 0.0;
    return result;
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    const BigInt num = numerator(q);
    const BigInt den = denominator(q);
    const BigInt rn = sqrt(num);
    const BigInt rd = sqrt(den);
    if (rn * rn == num && rd * rd == den) return Rational(rn, rd);
    return std::nullopt;
}

}  // namespace

MomentSpec truncate_spec(const MomentSpec& spec, const Rational& U) {
    if (U <= 0) throw std::invalid_argument("truncation level must be positive");
    MomentSpec out = spec;
    out.bound = U;
    switch (spec.law) {
        case EntryLaw::rademacher: {
            if (U >= 1) return out;  // atoms at +-1 survive
            std::fill(out.even_moments.begin(), out.even_moments.end(), Rational(0));
            return out;
        }
        case EntryLaw::uniform_symmetric: {
            const Rational a2 = spec.uniform_half_width_sq;
            if (U * U >= a2) return out;  // no clipping
            const auto a = rational_sqrt(a2);
            if (!a) {
                throw std::invalid_argument(
                    "clipped uniform law needs a rational half width for exact moments");
            }
            // density 1/(2a) on [-U, U]: E a^(2m) = U^(2m+1) / (a (2m+1))
            Rational upow = U;
            for (std::size_t m = 1; m <= out.even_moments.size(); ++m) {
                upow *= U * U;
                out.even_moments[m - 1] = upow / (*a * Rational(2 * m + 1));
            }
            return out;
        }
        case EntryLaw::gaussian:
            throw std::invalid_argument(
                "truncated gaussian moments are not rational; supply explicit moments");
    }
    return out;
}

MomentSpec truncate_spec_power(const MomentSpec& spec, int n, unsigned alpha_num,
                               unsigned alpha_den) {
    if (n < 1 || alpha_den == 0 || alpha_num == 0) {
        throw std::invalid_argument("need n >= 1 and positive alpha");
    }
    // U = n^(p/q) >= a  <=>  n^p >= a^q; decide exactly, clip only when needed
    const BigInt npow = boost::multiprecision::pow(BigInt(n), alpha_num);
    auto exceeds = [&](const Rational& a_pow_q) { return Rational(npow) >= a_pow_q; };
    switch (spec.law) {
        case EntryLaw::rademacher:
            if (exceeds(1)) return spec;
            return truncate_spec(spec, Rational(1, 2));  // any U < 1 zeroes the law
        case EntryLaw::uniform_symmetric: {
            // a^q: q even uses (a^2)^(q/2); odd q needs rational a
            const Rational a2 = spec.uniform_half_width_sq;
            Rational a_pow_q;
            if (alpha_den % 2 == 0) {
                a_pow_q = pow_rational(a2, alpha_den / 2);
            } else {
                const auto a = rational_sqrt(a2);
                if (!a) throw std::invalid_argument("irrational half width with odd alpha denominator");
                a_pow_q = pow_rational(*a, alpha_den);
            }
            if (exceeds(a_pow_q)) return spec;
            throw std::invalid_argument(
                "clipping truncation level n^alpha is irrational; use truncate_spec with a rational level");
        }
        case EntryLaw::gaussian:
            throw std::invalid_argument(
                "truncated gaussian moments are not rational; supply explicit moments");
    }
    return spec;
}

bool check_weight_bound(const Walk& walk, const MomentSpec& spec, const Rational& U) {
    for (const auto& v : spec.even_moments) {
        if (v < 0) throw std::invalid_argument("negative even moment");
    }
    const Rational q = weight(walk, spec);
    const auto profile = classify_walk(walk);
    const Rational v12 = spec.moment(12);
    Rational rhs = 1;
    for (std::size_t k = 2; k < profile.nu.size(); ++k) {
        if (profile.nu[k] == 0) continue;
        const Rational factor = v12 * pow_rational(U * U, static_cast<unsigned>(k - 2));
        rhs *= pow_rational(factor, static_cast<unsigned>(profile.nu[k]));
    }
    return q <= rhs;
}

}  // namespace evenwalks
