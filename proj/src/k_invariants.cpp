#include "bdalg/k_invariants.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "bdalg/intmath.hpp"

namespace bdalg {

GSRational::GSRational(std::int64_t num, std::int64_t den, const std::optional<SupernaturalNumber>& s)
{
    if (den == 0)
        throw std::invalid_argument("G_S element with zero denominator");
    if (den < 0)
        num = -num, den = -den;
    std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
    if (s && !sn_divides(den_, *s))
        throw std::invalid_argument("denominator " + std::to_string(den_) + " does not divide S");
}

std::string GSRational::str() const
{
    return std::to_string(num_) + "/" + std::to_string(den_);
}

GSRational GSRational::operator+(const GSRational& o) const
{
    std::int64_t d = lcm64(den_, o.den_);
    return GSRational(checked_add(checked_mul(num_, d / den_), checked_mul(o.num_, d / o.den_)), d);
}

GSRational GSRational::operator*(std::int64_t k) const
{
    return GSRational(checked_mul(num_, k), den_);
}

BDElement kappa(const SupernaturalNumber& s, std::int64_t l, std::int64_t j)
{
    if (l < 1 || !sn_divides(l, s))
        throw std::invalid_argument("kappa: l must divide S");
    return BDElement::multiplication(s, LocConstFn::indicator(l, j));
}

GSRational k0_class(const BDElement& p)
{
    if (!(bd_mul(p, p) == p))
        throw std::domain_error("not a projection: p·p ≠ p");
    if (!(bd_adjoint(p) == p))
        throw std::domain_error("not a projection: p* ≠ p");
    Cyclo t = trace(p);
    auto r = t.as_rational();
    if (!r)
        throw std::domain_error("not a projection: trace is not rational");
    if (!r->get_num().fits_slong_p() || !r->get_den().fits_slong_p())
        throw std::overflow_error("k0_class: trace out of range");
    GSRational out(r->get_num().get_si(), r->get_den().get_si(), p.ambient());
    if (p.period() % out.den() != 0)
        throw std::logic_error("k0_class: trace denominator does not divide the period");
    return out;
}

std::int64_t hom_obstruction(std::int64_t l, std::int64_t a, const DivisorChain& chain)
{
    if (a == 0)
        throw std::invalid_argument("hom_obstruction: a must be nonzero");
    if (l < 1)
        throw std::invalid_argument("hom_obstruction: l must be positive");
    bool reached = false;
    for (auto li : chain.levels()) {
        if (li % l != 0) {
            if (reached)
                throw std::invalid_argument("hom_obstruction: l stops dividing the chain levels");
            continue;
        }
        reached = true;
        if (a % (li / l) != 0)
            return li;
    }
    if (!reached)
        throw std::invalid_argument("hom_obstruction: l divides no chain level");
    throw std::domain_error("hom_obstruction: chain too shallow to exhibit a witness for 1/" + std::to_string(l) +
                            " ↦ " + std::to_string(a));
}

PhiFn::PhiFn(DivisorChain chain, std::vector<std::int64_t> top) : chain_(std::move(chain)), top_(std::move(top))
{
    if (static_cast<std::int64_t>(top_.size()) != chain_.top())
        throw std::invalid_argument("PhiFn: top vector must have l_N = " + std::to_string(chain_.top()) + " entries");
}

std::int64_t phi_value(const PhiFn& phi, std::int64_t l, std::int64_t k)
{
    std::int64_t top = phi.chain().top();
    if (l < 1 || top % l != 0)
        throw std::invalid_argument("phi_value: " + std::to_string(l) + " does not divide l_N = " +
                                    std::to_string(top));
    std::int64_t base = mod(k, l), sum = 0;
    for (std::int64_t i = base; i < top; i += l)
        sum = checked_add(sum, phi.top()[i]);
    return sum;
}

std::int64_t R(const PhiFn& phi, std::int64_t l, std::int64_t lp, RMode mode)
{
    std::int64_t top = phi.chain().top();
    if (l < 1 || lp < 1 || lp % l != 0 || top % lp != 0)
        throw std::invalid_argument("R: requires l | l' | l_N (l = " + std::to_string(l) + ", l' = " +
                                    std::to_string(lp) + ", l_N = " + std::to_string(top) + ")");
    std::vector<std::int64_t> level(lp);
    for (std::int64_t j = 0; j < lp; ++j)
        level[j] = phi_value(phi, lp, j);

    if (mode == RMode::lin) {
        if (l != 1)
            throw std::invalid_argument("R: linear form is defined for l = 1 only");
        std::int64_t sum = 0;
        for (std::int64_t j = 0; j + 1 < lp; ++j)
            sum = checked_add(sum, checked_mul(j + 1, level[j]));
        return sum;
    }

    // prefix sums: Σ_{a=1}^{l'/l − 1} prefix(a·l)
    std::int64_t sum = 0, prefix = 0, next = 0;
    for (std::int64_t a = 1; a < lp / l; ++a) {
        for (; next < a * l; ++next)
            prefix = checked_add(prefix, level[next]);
        sum = checked_add(sum, prefix);
    }
    return sum;
}

std::pair<std::int64_t, ProfiniteInt> tau_rho(const PhiFn& phi)
{
    const auto& chain = phi.chain();
    std::int64_t tau = phi_value(phi, 1, 0);
    std::int64_t top = chain.top();
    ProfiniteInt rho = from_residue(mod(R(phi, 1, top), top), top, chain);
    for (auto l : chain.levels())
        if (residue(rho, l) != mod(R(phi, 1, l), l))
            throw std::logic_error("tau_rho: R(1, l) residues are not compatible along the chain");
    return {tau, rho};
}

PhiFn coboundary(const PhiFn& psi)
{
    const auto& t = psi.top();
    std::size_t n = t.size();
    std::vector<std::int64_t> out(n);
    for (std::size_t k = 0; k < n; ++k)
        out[k] = checked_add(t[k], -t[(k + 1) % n]);
    return PhiFn(psi.chain(), std::move(out));
}

PhiFn psi_construct(const PhiFn& phi)
{
    if (phi_value(phi, 1, 0) != 0)
        throw std::domain_error("nonzero tau");
    const auto& chain = phi.chain();
    std::int64_t top = chain.top();
    std::int64_t psi10 = -R(phi, 1, top);

    auto level_zero = [&](std::int64_t l) {
        std::int64_t num = checked_add(R(phi, 1, l), psi10);
        if (num % l != 0)
            throw std::logic_error("psi_construct: R(1, l) + ψ(1,0) not divisible by l = " + std::to_string(l));
        return num / l;
    };

    std::vector<std::int64_t> t(top);
    std::int64_t running = level_zero(top);
    for (std::int64_t k = 0; k < top; ++k) {
        t[k] = running;
        running = checked_add(running, -phi.top()[k]);
    }
    PhiFn psi(chain, std::move(t));

    // coarser levels produced by summation must agree with the level-wise formula
    if (phi_value(psi, 1, 0) != psi10)
        throw std::logic_error("psi_construct: ψ(1,0) mismatch");
    for (auto l : chain.levels()) {
        std::int64_t expect = level_zero(l);
        for (std::int64_t k = 0; k < l; ++k) {
            if (phi_value(psi, l, k) != expect)
                throw std::logic_error("psi_construct: ψ(" + std::to_string(l) + "," + std::to_string(k) +
                                       ") violates Φ membership");
            expect = checked_add(expect, -phi_value(phi, l, k));
        }
    }
    return psi;
}

PhiFn digit_phi(const ProfiniteInt& x)
{
    const auto& chain = x.chain();
    const auto& a = x.digits();
    std::size_t depth = chain.depth();
    std::vector<std::int64_t> t(chain.top(), 0);
    t[0] = a[0];
    for (std::size_t n = 1; n < depth; ++n)
        t[0] -= a[n];
    for (std::size_t k = 1; k < depth; ++k)
        t[chain.level(k)] = a[k];
    return PhiFn(chain, std::move(t));
}

} // namespace bdalg
