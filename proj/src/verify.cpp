#include "bdalg/verify.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "bdalg/derivations.hpp"
#include "bdalg/homalg.hpp"
#include "bdalg/intmath.hpp"
#include "bdalg/k_invariants.hpp"
#include "bdalg/random.hpp"

namespace bdalg {

namespace {

using CaseFn = std::function<std::optional<json>(Sampler&, std::size_t)>;

struct Suite {
    std::string name;
    std::string statement;
    std::function<std::size_t(Scale)> cases;
    CaseFn run_case;
};

std::size_t scaled(std::size_t full, Scale s)
{
    return s == Scale::full ? full : full / 10;
}

const std::vector<DivisorChain>& phi_chains()
{
    static const std::vector<DivisorChain> chains{
        DivisorChain({2, 4, 8, 16}, SupernaturalNumber({{2, kInfinite}})),
        DivisorChain({2, 6, 12}, default_ambient()),
        DivisorChain({3, 9, 27}, SupernaturalNumber({{3, kInfinite}})),
    };
    return chains;
}

const std::vector<DivisorChain>& rho_chains()
{
    static const std::vector<DivisorChain> chains{
        DivisorChain({2, 4, 8}, SupernaturalNumber({{2, kInfinite}})),
        DivisorChain({2, 6, 12}, default_ambient()),
        DivisorChain({3, 9, 27}, SupernaturalNumber({{3, kInfinite}})),
    };
    return chains;
}

std::vector<std::int64_t> levels_with_one(const DivisorChain& c)
{
    std::vector<std::int64_t> out{1};
    out.insert(out.end(), c.levels().begin(), c.levels().end());
    return out;
}

std::optional<json> covariance_case(Sampler& rng, std::size_t)
{
    auto s = default_ambient();
    LocConstFn f = rng.loc_const(rng.pick(smooth_periods()));
    BDElement u = BDElement::unitary(s);
    BDElement lhs = bd_mul(BDElement::multiplication(s, f), u);
    BDElement rhs = bd_mul(u, BDElement::multiplication(s, pullback(f, 1)));
    if (lhs == rhs)
        return std::nullopt;
    return json{{"f", to_json(f)}};
}

std::optional<json> mnorm_case(Sampler& rng, std::size_t)
{
    constexpr int grid = 256;
    static const std::vector<std::int64_t> periods{1, 2, 3, 4};
    BDElement a = rng.element(default_ambient(), rng.pick(periods), 3);
    for (int m = 0; m <= 6; ++m) {
        NormReport r = op_norm(a, m, grid);
        double rec = m_norm_recursive(a, m, grid);
        if (std::bit_cast<std::uint64_t>(r.value) != std::bit_cast<std::uint64_t>(rec) || r.value < r.lower ||
            r.value > r.upper)
            return json{{"a", to_json(a)}, {"M", m}, {"binomial", r.value}, {"recursive", rec}};
    }
    return std::nullopt;
}

std::optional<json> cocycle_case(Sampler& rng, std::size_t)
{
    auto s = default_ambient();
    std::int64_t period = rng.pick(smooth_periods());
    LocConstFn ft = rng.mean_zero(period);
    LocConstFn g = solve_cocycle(ft);
    if (!(pullback(g, 1) - g == ft) || !haar_integral(g).is_zero())
        return json{{"Ft", to_json(ft)}, {"G", to_json(g)}};

    LocConstFn f = rng.loc_const(period);
    auto parts = invariant_decompose(f);
    DerivationData d{parts.C, parts.G, {}};
    BDElement u = BDElement::unitary(s);
    if (!(der_apply(d, u) == bd_mul(u, BDElement::multiplication(s, f))))
        return json{{"F", to_json(f)}, {"decomposition", to_json(d)}};
    return std::nullopt;
}

std::optional<json> covariant_roundtrip_case(Sampler& rng, std::size_t)
{
    auto s = default_ambient();
    std::int64_t n = 0;
    while (n == 0)
        n = rng.uniform(-6, 6);
    CharacterChoice ch = pick_character(n, s);
    LocConstFn f = rng.loc_const(rng.pick(smooth_periods()));
    BDElement delta = commutator(BDElement::monomial(s, n, f), BDElement::multiplication(s, character(ch.l, ch.j)));
    LocConstFn back = recover_covariant_F(n, ch.l, ch.j, delta);
    if (back == f)
        return std::nullopt;
    return json{{"n", n}, {"F", to_json(f)}, {"recovered", to_json(back)}};
}

std::optional<json> charpick_case(Sampler& rng, std::size_t)
{
    SupernaturalNumber s = rng.infinite_supernatural();
    std::int64_t n = rng.uniform(1, 5000) * (rng.coin() ? 1 : -1);
    CharacterChoice c = pick_character(n, s);
    auto fail = [&](const char* why) {
        return json{{"n", n}, {"S", to_json(s)}, {"l", c.l}, {"j", c.j}, {"h", c.h}, {"reason", why}};
    };
    if (c.l != c.g * c.h || !sn_divides(c.l, s))
        return fail("l = g·h must divide S");
    if (!(c.value == root_of_unity(mulmod(n, c.j, c.l), c.l)))
        return fail("χ(q(n)) mismatch");
    double direct = std::abs(1.0 - std::polar(1.0, 2 * std::numbers::pi * mulmod(n, c.j, c.l) / c.l));
    if (direct < 1.5 - 1e-12 || std::abs(direct - c.bound) > 1e-12)
        return fail("|1 − χ(q(n))| below 3/2");
    if (c.h % 2 == 0 && !(c.value == Cyclo(-1)))
        return fail("even h must give χ(q(n)) = −1");
    return std::nullopt;
}

std::optional<json> consistency_case(Sampler& rng, std::size_t)
{
    const DivisorChain& chain = rng.pick(phi_chains());
    PhiFn phi = rng.phi(chain, 5);
    auto levels = levels_with_one(chain);
    for (auto l : levels) {
        if ((R(phi, 1, l, RMode::lin) + R(phi, 1, l)) % l != 0)
            return json{{"phi", to_json(phi)}, {"l", l}, {"reason", "R_lin ≢ −R_def"}};
        for (auto lp : levels) {
            if (lp % l != 0)
                continue;
            if (R(phi, 1, lp) - R(phi, 1, l) != l * R(phi, l, lp))
                return json{{"phi", to_json(phi)}, {"l", l}, {"lp", lp}, {"reason", "consistency"}};
            if (mod(R(phi, 1, lp) - R(phi, 1, l), l) != 0)
                return json{{"phi", to_json(phi)}, {"l", l}, {"lp", lp}, {"reason", "congruence"}};
        }
    }
    return std::nullopt;
}

std::optional<json> kernel_image_case(Sampler& rng, std::size_t)
{
    const DivisorChain& chain = rng.pick(phi_chains());
    PhiFn raw = rng.phi(chain, 5);
    auto top = raw.top();
    top[0] -= phi_value(raw, 1, 0);
    PhiFn phi(chain, top);
    PhiFn psi = psi_construct(phi);
    if (!(coboundary(psi) == phi))
        return json{{"phi", to_json(phi)}, {"psi", to_json(psi)}, {"reason", "coboundary(psi) ≠ phi"}};

    PhiFn psi0 = rng.phi(chain, 5);
    PhiFn image = coboundary(psi0);
    if (tau_rho(image).first != 0)
        return json{{"psi", to_json(psi0)}, {"reason", "τ ∘ coboundary ≠ 0"}};
    for (auto l : levels_with_one(chain))
        if (R(image, 1, l) != l * phi_value(psi0, l, 0) - phi_value(psi0, 1, 0))
            return json{{"psi", to_json(psi0)}, {"l", l}, {"reason", "R(1,l) ≠ lψ(l,0) − ψ(1,0)"}};
    if (!(coboundary(psi_construct(image)) == image))
        return json{{"psi", to_json(psi0)}, {"reason", "roundtrip"}};
    return std::nullopt;
}

std::optional<json> rho_onto_case(Sampler&, std::size_t i)
{
    for (const auto& chain : rho_chains()) {
        auto top = static_cast<std::size_t>(chain.top());
        if (i >= top) {
            i -= top;
            continue;
        }
        ProfiniteInt x = from_residue(static_cast<std::int64_t>(i), chain.top(), chain);
        PhiFn phi = digit_phi(x);
        for (auto l : chain.levels())
            if (mod(R(phi, 1, l, RMode::lin) - static_cast<std::int64_t>(i), l) != 0)
                return json{{"x", to_json(x)}, {"level", l}, {"phi", to_json(phi)}};
        return std::nullopt;
    }
    throw std::out_of_range("rho-onto case index");
}

std::size_t rho_onto_count(Scale)
{
    std::size_t n = 0;
    for (const auto& chain : rho_chains())
        n += static_cast<std::size_t>(chain.top());
    return n;
}

std::optional<json> k0_case(Sampler&, std::size_t i)
{
    static const SupernaturalNumber s({{2, kInfinite}, {3, kInfinite}, {5, kInfinite}, {7, kInfinite}, {11, kInfinite}});
    std::int64_t l = 1;
    while (i >= static_cast<std::size_t>(l)) {
        i -= l;
        ++l;
    }
    std::int64_t j = static_cast<std::int64_t>(i);
    auto fail = [&](const char* why) { return json{{"l", l}, {"j", j}, {"reason", why}}; };

    BDElement p = kappa(s, l, j);
    if (!(k0_class(p) == GSRational(1, l)))
        return fail("class of κ_{l,j} ≠ 1/l");
    for (std::int64_t r : {2, 3}) {
        BDElement sum(s);
        for (std::int64_t b = 0; b < r; ++b)
            sum += kappa(s, r * l, j + b * l);
        if (!(sum == p))
            return fail("κ_{l,j} ≠ Σ_b κ_{rl, j+bl}");
        if (!(k0_class(kappa(s, l, 0)) == k0_class(kappa(s, r * l, 0)) * r))
            return fail("pushforward 1/l ≠ (l'/l)(1/l')");
    }
    if (l >= 2) {
        BDElement q = kappa(s, l, j + 1);
        if (!bd_mul(p, q).is_zero() || !(k0_class(p + q) == k0_class(p) + k0_class(q)))
            return fail("additivity on orthogonal projections");
    }
    return std::nullopt;
}

std::optional<json> ext_case(Sampler& rng, std::size_t i)
{
    if (i < 99) {
        long n = static_cast<long>(i) + 2;
        HomExt he = ext1_hom(IntMatrix(1, 1, {mpz_class(n)}));
        if (he.hom.rank != 0 || he.ext.torsion != std::vector<mpz_class>{mpz_class(n)})
            return json{{"n", n}, {"hom", to_json(he.hom)}, {"ext", to_json(he.ext)}};
        return std::nullopt;
    }
    auto rows = static_cast<std::size_t>(rng.uniform(1, 6));
    auto cols = static_cast<std::size_t>(rng.uniform(1, 6));
    IntMatrix a = rng.matrix(rows, cols, -20, 20);
    SmithForm f = smith_normal_form(a);
    auto fail = [&](const char* why) { return json{{"A", to_json(a)}, {"reason", why}}; };
    if (!(f.U * a * f.V == f.D))
        return fail("U·A·V ≠ D");
    if (abs(determinant(f.U)) != 1 || abs(determinant(f.V)) != 1)
        return fail("transform not unimodular");
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (r != c && f.D(r, c) != 0)
                return fail("D not diagonal");
    std::size_t steps = std::min(rows, cols);
    for (std::size_t t = 0; t < steps; ++t) {
        if (f.D(t, t) < 0)
            return fail("negative elementary divisor");
        if (t + 1 < steps) {
            const mpz_class& d = f.D(t, t);
            const mpz_class& e = f.D(t + 1, t + 1);
            if (d == 0 ? e != 0 : e % d != 0)
                return fail("divisibility chain broken");
        }
    }
    return std::nullopt;
}

const std::vector<Suite>& suites()
{
    static const std::vector<Suite> all{
        {"mnorm", "‖a‖_{M+1} = ‖a‖_M + ‖δ_L(a)‖_M agrees bit-for-bit with Σ_j C(M,j)‖δ_L^j(a)‖, M ≤ 6, grid 256",
         [](Scale s) { return scaled(100, s); }, mnorm_case},
        {"covariance", "M_f·U = U·M_{f∘β} exactly, periods ≤ 24", [](Scale s) { return scaled(500, s); },
         covariance_case},
        {"cocycle", "G∘β − G = F̃ for mean-zero F̃ with G built from χ/(χ(q(1)) − 1); δ(U) = U·M_F recovered as Cδ_L + [M_G,·]",
         [](Scale s) { return scaled(500, s); }, cocycle_case},
        {"covariant-roundtrip", "F = (1 − χ(q(n)))^{-1} U^{-n} δ(M_χ) M_χ^{-1} for δ = [U^n M_F, ·], |n| ≤ 6",
         [](Scale s) { return scaled(200, s); }, covariant_roundtrip_case},
        {"charpick", "|1 − χ(q(n))| ≥ 3/2 for the chosen character, = 2 exactly when h is even",
         [](Scale s) { return scaled(200, s); }, charpick_case},
        {"consistency", "R(1,l') − R(1,l) = l·R(l,l') and R(1,l) ≡ R(1,l') mod l; R_lin ≡ −R_def mod l",
         [](Scale s) { return scaled(1000, s); }, consistency_case},
        {"kernel-image", "Ker(τ ⊕ ρ̃) = Im(1 − β*) at truncation: coboundary ∘ psi_construct = id on τ = 0",
         [](Scale s) { return scaled(1000, s); }, kernel_image_case},
        {"rho-onto", "digit_phi(x) satisfies R(1, l_n) ≡ x mod l_n for every residue x (exhaustive)", rho_onto_count,
         rho_onto_case},
        {"k0", "[κ_{l,j}] = 1/l for j < l ≤ 12; κ decomposition, pushforward and additivity exact",
         [](Scale) { return std::size_t{78}; }, k0_case},
        {"ext", "Ext¹(Z/nZ, Z) = Z/nZ for 2 ≤ n ≤ 100; Smith form U·A·V = D with unimodular U, V",
         [](Scale s) { return 99 + scaled(500, s); }, ext_case},
    };
    return all;
}

std::uint64_t suite_seed(std::uint64_t seed, const std::string& name)
{
    // FNV-1a of the suite name, mixed with the user seed
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : name)
        h = (h ^ c) * 1099511628211ull;
    return h ^ (seed * 0x9E3779B97F4A7C15ull);
}

VerifyReport run_suite(const Suite& suite, std::uint64_t seed, Scale scale)
{
    auto start = std::chrono::steady_clock::now();
    VerifyReport r;
    r.suite = suite.name;
    r.statement = suite.statement;
    r.seed = seed;
    r.scale = scale;
    Sampler rng(suite_seed(seed, suite.name));
    std::size_t n = suite.cases(scale);
    for (std::size_t i = 0; i < n; ++i) {
        std::optional<json> bad;
        try {
            bad = suite.run_case(rng, i);
        } catch (const std::exception& e) {
            bad = json{{"case", i}, {"exception", e.what()}};
        }
        ++r.run;
        if (!bad)
            ++r.passed;
        else if (!r.counterexample)
            r.counterexample = std::move(bad);
    }
    r.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& s : suites())
            v.push_back(s.name);
        return v;
    }();
    return names;
}

VerifyReport verify_suite(const std::string& name, std::uint64_t seed, Scale scale)
{
    if (name == "all") {
        auto start = std::chrono::steady_clock::now();
        VerifyReport r;
        r.suite = "all";
        r.statement = "every battery";
        r.seed = seed;
        r.scale = scale;
        for (const auto& s : suites()) {
            VerifyReport part = run_suite(s, seed, scale);
            r.run += part.run;
            r.passed += part.passed;
            if (!r.counterexample && part.counterexample)
                r.counterexample = json{{"suite", part.suite}, {"case", *part.counterexample}};
            r.parts.push_back(std::move(part));
        }
        r.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return r;
    }
    for (const auto& s : suites())
        if (s.name == name)
            return run_suite(s, seed, scale);
    throw std::invalid_argument("unknown verification suite \"" + name + "\"");
}

json to_json(const VerifyReport& r, bool with_timing)
{
    json out{{"suite", r.suite},
             {"checks", r.statement},
             {"seed", r.seed},
             {"scale", r.scale == Scale::full ? "full" : "small"},
             {"run", r.run},
             {"passed", r.passed},
             {"counterexample", r.counterexample ? *r.counterexample : json(nullptr)}};
    if (with_timing)
        out["duration_ms"] = r.duration_ms;
    if (!r.parts.empty()) {
        json parts = json::array();
        for (const auto& p : r.parts)
            parts.push_back(to_json(p, with_timing));
        out["suites"] = parts;
    }
    return out;
}

} // namespace bdalg
