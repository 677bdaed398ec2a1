#pragma once

// JSON wire formats for every value type. Parsers are strict: missing or unknown
// fields raise std::invalid_argument naming the offending field.

#include <complex>
#include <initializer_list>
#include <string>

#include <json.hpp>

#include "bdalg/bd_algebra.hpp"
#include "bdalg/cyclotomic.hpp"
#include "bdalg/derivations.hpp"
#include "bdalg/homalg.hpp"
#include "bdalg/k_invariants.hpp"
#include "bdalg/laurent.hpp"
#include "bdalg/odometer_fn.hpp"
#include "bdalg/profinite.hpp"
#include "bdalg/supernatural.hpp"

namespace bdalg {

using json = nlohmann::json;

void require_object(const json& j, const std::string& what, std::initializer_list<const char*> required,
                    std::initializer_list<const char*> optional = {});

std::int64_t parse_int(const json& j, const std::string& what);

// [[2,"inf"],[3,1]]
json to_json(const SupernaturalNumber& s);
SupernaturalNumber parse_supernatural(const json& j);

// [l_1, …, l_N]
json to_json(const DivisorChain& c);
DivisorChain parse_chain(const json& j, const std::optional<SupernaturalNumber>& s = std::nullopt);

// {chain, digits}
json to_json(const ProfiniteInt& x);
ProfiniteInt parse_profinite(const json& j);

json to_json(const Rational& r);
Rational parse_rational_json(const json& j);

// {order, terms: [[e, "p/q"], …]}; a bare number or "p/q" string is read as a rational
json to_json(const Cyclo& c);
Cyclo parse_cyclo(const json& j);

json to_json(std::complex<double> z);

// {period, values}
json to_json(const LocConstFn& f);
LocConstFn parse_loc_const(const json& j);

// [[degree, Cyclo], …]
json to_json(const Laurent& p);
Laurent parse_laurent(const json& j);

// {S, period, coeffs: {"n": LocConstFn}}
json to_json(const BDElement& a);
BDElement parse_bd(const json& j);

json to_json(const MatrixSymbol& m);
json to_json(const NormReport& r);

// {C, G, covariant: {"n": LocConstFn}}
json to_json(const DerivationData& d);
DerivationData parse_derivation(const json& j);

json to_json(const GSRational& g); // "num/den"
GSRational parse_gs_rational(const json& j);

// {chain, top}
json to_json(const PhiFn& phi);
PhiFn parse_phi(const json& j);

json to_json(const mpz_class& z);
mpz_class parse_mpz(const json& j);

// {rows, cols, entries}
json to_json(const IntMatrix& m);
IntMatrix parse_matrix(const json& j);

// {rank, torsion}
json to_json(const FGAbelianGroup& g);
FGAbelianGroup parse_group(const json& j);

} // namespace bdalg
