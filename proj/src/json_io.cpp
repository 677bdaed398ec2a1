#include "bdalg/json_io.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace bdalg {

void require_object(const json& j, const std::string& what, std::initializer_list<const char*> required,
                    std::initializer_list<const char*> optional)
{
    if (!j.is_object())
        throw std::invalid_argument(what + ": expected a JSON object");
    for (const char* key : required)
        if (!j.contains(key))
            throw std::invalid_argument(what + ": missing field \"" + key + "\"");
    for (const auto& [key, value] : j.items()) {
        auto match = [&](const char* k) { return key == k; };
        if (std::none_of(required.begin(), required.end(), match) &&
            std::none_of(optional.begin(), optional.end(), match))
            throw std::invalid_argument(what + ": unknown field \"" + key + "\"");
    }
}

std::int64_t parse_int(const json& j, const std::string& what)
{
    if (j.is_number_integer())
        return j.get<std::int64_t>();
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        std::size_t pos = 0;
        try {
            std::int64_t v = std::stoll(s, &pos);
            if (pos == s.size())
                return v;
        } catch (const std::exception&) {
        }
    }
    throw std::invalid_argument(what + ": expected an integer");
}

static std::vector<std::int64_t> parse_int_list(const json& j, const std::string& what)
{
    if (!j.is_array())
        throw std::invalid_argument(what + ": expected an array of integers");
    std::vector<std::int64_t> out;
    for (const auto& v : j)
        out.push_back(parse_int(v, what));
    return out;
}

json to_json(const SupernaturalNumber& s)
{
    json out = json::array();
    for (auto [p, e] : s.factors())
        out.push_back(json::array({p, e == kInfinite ? json("inf") : json(e)}));
    return out;
}

SupernaturalNumber parse_supernatural(const json& j)
{
    if (j.is_string()) // allow the document to arrive quoted from a command line
        return parse_supernatural(json::parse(j.get<std::string>()));
    if (!j.is_array())
        throw std::invalid_argument("supernatural number: expected [[prime, exponent], …]");
    std::map<std::int64_t, Exponent> f;
    std::int64_t last = 0;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("supernatural number: each factor must be [prime, exponent]");
        std::int64_t p = parse_int(pair[0], "supernatural prime");
        if (p <= last)
            throw std::invalid_argument("supernatural number: primes must be strictly ascending");
        last = p;
        Exponent e;
        if (pair[1].is_string() && pair[1].get<std::string>() == "inf") {
            e = kInfinite;
        } else {
            std::int64_t v = parse_int(pair[1], "supernatural exponent");
            if (v < 1 || v >= static_cast<std::int64_t>(kInfinite))
                throw std::invalid_argument("supernatural number: exponents must be ≥ 1 or \"inf\"");
            e = static_cast<Exponent>(v);
        }
        f.emplace(p, e);
    }
    return SupernaturalNumber(std::move(f));
}

json to_json(const DivisorChain& c)
{
    return c.levels();
}

DivisorChain parse_chain(const json& j, const std::optional<SupernaturalNumber>& s)
{
    return DivisorChain(parse_int_list(j, "chain"), s);
}

json to_json(const ProfiniteInt& x)
{
    return {{"chain", to_json(x.chain())}, {"digits", x.digits()}};
}

ProfiniteInt parse_profinite(const json& j)
{
    require_object(j, "profinite integer", {"chain", "digits"});
    return ProfiniteInt(parse_chain(j["chain"]), parse_int_list(j["digits"], "digits"));
}

json to_json(const Rational& r)
{
    return r.get_str();
}

Rational parse_rational_json(const json& j)
{
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw std::invalid_argument("rational: expected \"p/q\" or an integer");
}

json to_json(const Cyclo& c)
{
    json terms = json::array();
    for (const auto& [e, q] : c.terms())
        terms.push_back(json::array({e, to_json(q)}));
    return {{"order", c.order()}, {"terms", terms}};
}

Cyclo parse_cyclo(const json& j)
{
    if (j.is_number_integer() || j.is_string())
        return Cyclo(parse_rational_json(j));
    require_object(j, "cyclotomic value", {"order", "terms"});
    std::int64_t n = parse_int(j["order"], "order");
    if (!j["terms"].is_array())
        throw std::invalid_argument("cyclotomic value: terms must be an array");
    std::map<std::int64_t, Rational> terms;
    for (const auto& t : j["terms"]) {
        if (!t.is_array() || t.size() != 2)
            throw std::invalid_argument("cyclotomic value: each term must be [exponent, \"p/q\"]");
        std::int64_t e = parse_int(t[0], "exponent");
        if (e < 0 || e >= n)
            throw std::invalid_argument("cyclotomic value: exponent outside [0, order)");
        terms[e] += parse_rational_json(t[1]);
    }
    return Cyclo::from_terms(n, terms);
}

json to_json(std::complex<double> z)
{
    return json::array({z.real(), z.imag()});
}

json to_json(const LocConstFn& f)
{
    json values = json::array();
    for (const auto& v : f.values())
        values.push_back(to_json(v));
    return {{"period", f.period()}, {"values", values}};
}

LocConstFn parse_loc_const(const json& j)
{
    require_object(j, "locally constant function", {"period", "values"});
    std::int64_t l = parse_int(j["period"], "period");
    if (!j["values"].is_array() || static_cast<std::int64_t>(j["values"].size()) != l)
        throw std::invalid_argument("locally constant function: values must list exactly `period` entries");
    std::vector<Cyclo> v;
    for (const auto& x : j["values"])
        v.push_back(parse_cyclo(x));
    return LocConstFn(std::move(v));
}

json to_json(const Laurent& p)
{
    json out = json::array();
    for (const auto& [d, c] : p.terms())
        out.push_back(json::array({d, to_json(c)}));
    return out;
}

Laurent parse_laurent(const json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("Laurent polynomial: expected [[degree, coefficient], …]");
    Laurent out;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2)
            throw std::invalid_argument("Laurent polynomial: each term must be [degree, coefficient]");
        out += Laurent(parse_cyclo(t[1]), parse_int(t[0], "degree"));
    }
    return out;
}

static json coeff_map_to_json(const std::map<std::int64_t, LocConstFn>& m)
{
    json out = json::object();
    for (const auto& [n, f] : m)
        out[std::to_string(n)] = to_json(f);
    return out;
}

static std::map<std::int64_t, LocConstFn> parse_coeff_map(const json& j, const std::string& what)
{
    if (!j.is_object())
        throw std::invalid_argument(what + ": expected an object keyed by integer strings");
    std::map<std::int64_t, LocConstFn> out;
    for (const auto& [key, value] : j.items())
        out.emplace(parse_int(json(key), what + " key"), parse_loc_const(value));
    return out;
}

json to_json(const BDElement& a)
{
    return {{"S", to_json(a.ambient())}, {"period", a.period()}, {"coeffs", coeff_map_to_json(a.coeffs())}};
}

BDElement parse_bd(const json& j)
{
    require_object(j, "Bunce-Deddens element", {"S", "period", "coeffs"});
    return BDElement(parse_supernatural(j["S"]), parse_int(j["period"], "period"),
                     parse_coeff_map(j["coeffs"], "coeffs"));
}

json to_json(const MatrixSymbol& m)
{
    json rows = json::array();
    for (std::int64_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::int64_t j = 0; j < m.size(); ++j)
            row.push_back(to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return {{"size", m.size()}, {"entries", rows}};
}

json to_json(const NormReport& r)
{
    return {{"value", r.value},
            {"kind", r.kind == NormKind::exact ? "exact" : "grid-estimate"},
            {"grid", r.grid},
            {"window", json::array({r.lower, r.upper})}};
}

json to_json(const DerivationData& d)
{
    json c = d.C.as_rational() ? to_json(*d.C.as_rational()) : to_json(d.C);
    return {{"C", c}, {"G", to_json(d.G)}, {"covariant", coeff_map_to_json(d.covariant)}};
}

DerivationData parse_derivation(const json& j)
{
    require_object(j, "derivation data", {"C", "G", "covariant"});
    DerivationData d;
    d.C = parse_cyclo(j["C"]);
    d.G = parse_loc_const(j["G"]);
    d.covariant = parse_coeff_map(j["covariant"], "covariant");
    d.validate();
    return d;
}

json to_json(const GSRational& g)
{
    return g.str();
}

GSRational parse_gs_rational(const json& j)
{
    Rational r = parse_rational_json(j);
    if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p())
        throw std::invalid_argument("G_S element out of range");
    return GSRational(r.get_num().get_si(), r.get_den().get_si());
}

json to_json(const PhiFn& phi)
{
    return {{"chain", to_json(phi.chain())}, {"top", phi.top()}};
}

PhiFn parse_phi(const json& j)
{
    require_object(j, "phi function", {"chain", "top"});
    return PhiFn(parse_chain(j["chain"]), parse_int_list(j["top"], "top"));
}

json to_json(const mpz_class& z)
{
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str();
}

mpz_class parse_mpz(const json& j)
{
    if (j.is_number_integer())
        return mpz_class(j.get<long>());
    if (j.is_string()) {
        mpz_class z;
        if (z.set_str(j.get<std::string>(), 10) == 0)
            return z;
    }
    throw std::invalid_argument("expected an integer");
}

json to_json(const IntMatrix& m)
{
    json entries = json::array();
    for (const auto& e : m.entries())
        entries.push_back(to_json(e));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

IntMatrix parse_matrix(const json& j)
{
    require_object(j, "integer matrix", {"rows", "cols", "entries"});
    std::int64_t r = parse_int(j["rows"], "rows"), c = parse_int(j["cols"], "cols");
    if (r < 0 || c < 0)
        throw std::invalid_argument("integer matrix: negative dimension");
    if (!j["entries"].is_array())
        throw std::invalid_argument("integer matrix: entries must be an array");
    std::vector<mpz_class> e;
    for (const auto& v : j["entries"])
        e.push_back(parse_mpz(v));
    return IntMatrix(r, c, std::move(e));
}

json to_json(const FGAbelianGroup& g)
{
    json t = json::array();
    for (const auto& d : g.torsion)
        t.push_back(to_json(d));
    return {{"rank", g.rank}, {"torsion", t}};
}

FGAbelianGroup parse_group(const json& j)
{
    require_object(j, "abelian group", {"rank", "torsion"});
    FGAbelianGroup g;
    g.rank = parse_int(j["rank"], "rank");
    for (const auto& v : j["torsion"])
        g.torsion.push_back(parse_mpz(v));
    return g;
}

} // namespace bdalg
