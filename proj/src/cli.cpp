#include "bdalg/cli.hpp"

#include <stdexcept>

#include "bdalg/random.hpp"

namespace bdalg {

namespace {

CommandResult ok(json doc)
{
    return {std::move(doc), 0};
}

std::int64_t int_arg(const json& a, const char* name)
{
    return parse_int(a.at(name), name);
}

SupernaturalNumber sn_arg(const json& a, const char* name, const SupernaturalNumber& fallback)
{
    return a.contains(name) ? parse_supernatural(a.at(name)) : fallback;
}

DivisorChain chain_arg(const json& a, const char* name = "chain")
{
    std::optional<SupernaturalNumber> s;
    if (a.contains("S"))
        s = parse_supernatural(a.at("S"));
    return parse_chain(a.at(name), s);
}

std::string string_arg(const json& a, const char* name)
{
    if (!a.at(name).is_string())
        throw std::invalid_argument(std::string(name) + ": expected a string");
    return a.at(name).get<std::string>();
}

template <typename E>
E enum_arg(const json& a, const char* name, std::initializer_list<std::pair<const char*, E>> values)
{
    std::string s = string_arg(a, name);
    std::string allowed;
    for (const auto& [key, v] : values) {
        if (s == key)
            return v;
        allowed += allowed.empty() ? key : std::string(", ") + key;
    }
    throw std::invalid_argument(std::string(name) + ": expected one of " + allowed);
}

json bool_doc(bool b)
{
    return json{{"value", b}};
}

json cyclo_map(const std::map<std::int64_t, Cyclo>& m)
{
    json out = json::object();
    for (const auto& [k, c] : m)
        out[std::to_string(k)] = to_json(c);
    return out;
}

SupernaturalNumber two_inf()
{
    return SupernaturalNumber({{2, kInfinite}});
}

CommandResult verify_verb(const std::string& suite, const CommandOptions& opt)
{
    VerifyReport r = verify_suite(suite, opt.seed, opt.scale);
    return {to_json(r), r.ok() ? 0 : 2};
}

std::vector<VerbSpec> build_table()
{
    using A = const json&;
    using O = const CommandOptions&;
    const FieldSpec S_req{"S", true, "supernatural number [[p, e|\"inf\"], …]"};
    const FieldSpec S_opt{"S", false, "ambient supernatural number (default 2^∞·3^∞)"};
    const FieldSpec chain{"chain", true, "divisor chain [l_1, …, l_N]"};
    const FieldSpec chain_S{"S", false, "ambient of the chain (default: primes of l_N)"};
    const FieldSpec x_zs{"x", true, "profinite integer {chain, digits}"};
    const FieldSpec f_fn{"f", true, "locally constant function {period, values}"};
    const FieldSpec a_bd{"a", true, "Bunce-Deddens element {S, period, coeffs}"};
    const FieldSpec d_der{"d", true, "derivation data {C, G, covariant}"};
    const FieldSpec phi{"phi", true, "Φ element {chain, top}"};
    const FieldSpec A_mat{"A", true, "integer matrix {rows, cols, entries}"};

    std::vector<VerbSpec> t{
        // supernatural
        {"sn", "product", "a·b", {{"a", true, "supernatural number"}, {"b", true, "supernatural number"}},
         [](A a, O) { return ok(to_json(sn_product(parse_supernatural(a["a"]), parse_supernatural(a["b"])))); }},
        {"sn", "divides", "does l divide S", {{"l", true, "positive integer"}, S_req},
         [](A a, O) { return ok(bool_doc(sn_divides(int_arg(a, "l"), parse_supernatural(a["S"])))); }},
        {"sn", "gcd", "largest divisor of n dividing S", {{"n", true, "positive integer"}, S_req},
         [](A a, O) { return ok(json{{"value", sn_gcd_finite(int_arg(a, "n"), parse_supernatural(a["S"]))}}); }},
        {"sn", "chain", "canonical divisor chain (length --depth)", {S_req},
         [](A a, O o) { return ok(json(divisor_chain(parse_supernatural(a["S"]), o.depth))); }},

        // profinite
        {"zs", "embed", "q(x) on a chain", {{"x", true, "integer"}, chain, chain_S},
         [](A a, O) { return ok(to_json(q_embed(int_arg(a, "x"), chain_arg(a)))); }},
        {"zs", "from-residue", "element with residue r mod l",
         {{"r", true, "integer"}, {"l", true, "chain level"}, chain, chain_S},
         [](A a, O) { return ok(to_json(from_residue(int_arg(a, "r"), int_arg(a, "l"), chain_arg(a)))); }},
        {"zs", "residue", "x mod l", {x_zs, {"l", true, "chain level"}},
         [](A a, O) { return ok(json{{"value", residue(parse_profinite(a["x"]), int_arg(a, "l"))}}); }},
        {"zs", "arith", "add, neg or mul", {{"op", true, "add|neg|mul"}, x_zs, {"y", false, "profinite integer"}},
         [](A a, O) {
             auto op = enum_arg<ZsOp>(a, "op", {{"add", ZsOp::add}, {"neg", ZsOp::neg}, {"mul", ZsOp::mul}});
             std::optional<ProfiniteInt> y;
             if (a.contains("y"))
                 y = parse_profinite(a["y"]);
             return ok(to_json(zs_arith(op, parse_profinite(a["x"]), y)));
         }},
        {"zs", "shift", "x + q(m)", {x_zs, {"m", true, "integer"}},
         [](A a, O) { return ok(to_json(beta_shift(parse_profinite(a["x"]), int_arg(a, "m")))); }},

        // cyclotomic
        {"cyclo", "root", "ζ_N^k", {{"k", true, "integer"}, {"N", true, "positive integer"}},
         [](A a, O) { return ok(to_json(root_of_unity(int_arg(a, "k"), int_arg(a, "N")))); }},
        {"cyclo", "arith", "add, mul, conj or scale",
         {{"op", true, "add|mul|conj|scale"}, {"a", true, "cyclotomic value"}, {"b", false, "cyclotomic value or rational"}},
         [](A a, O) {
             auto op = enum_arg<CycloOp>(
                 a, "op",
                 {{"add", CycloOp::add}, {"mul", CycloOp::mul}, {"conj", CycloOp::conj}, {"scale", CycloOp::scale}});
             if (op != CycloOp::conj && !a.contains("b"))
                 throw std::invalid_argument("b: required for " + a["op"].get<std::string>());
             if (op == CycloOp::scale)
                 return ok(to_json(scale(parse_cyclo(a["a"]), parse_rational_json(a["b"]))));
             return ok(to_json(cyclo_arith(op, parse_cyclo(a["a"]), a.contains("b") ? parse_cyclo(a["b"]) : Cyclo())));
         }},
        {"cyclo", "is-zero", "exact zero test", {{"a", true, "cyclotomic value"}},
         [](A a, O) { return ok(bool_doc(is_zero(parse_cyclo(a["a"])))); }},
        {"cyclo", "eval", "complex value", {{"a", true, "cyclotomic value"}, {"precision", false, "bits (≤ 53)"}},
         [](A a, O) {
             int prec = a.contains("precision") ? static_cast<int>(int_arg(a, "precision")) : 53;
             return ok(to_json(eval_complex(parse_cyclo(a["a"]), prec)));
         }},

        // locally constant functions
        {"fn", "character", "χ_l^k", {{"l", true, "period"}, {"k", true, "integer"}},
         [](A a, O) { return ok(to_json(character(int_arg(a, "l"), int_arg(a, "k")))); }},
        {"fn", "evaluate", "f(x)", {f_fn, x_zs},
         [](A a, O) { return ok(to_json(evaluate(parse_loc_const(a["f"]), parse_profinite(a["x"])))); }},
        {"fn", "pullback", "f ∘ β^m", {f_fn, {"m", true, "integer"}},
         [](A a, O) { return ok(to_json(pullback(parse_loc_const(a["f"]), int_arg(a, "m")))); }},
        {"fn", "haar", "Haar mean", {f_fn}, [](A a, O) { return ok(to_json(haar_integral(parse_loc_const(a["f"])))); }},
        {"fn", "decompose", "coefficients on the characters χ_l^k", {f_fn},
         [](A a, O) { return ok(cyclo_map(char_decompose(parse_loc_const(a["f"])))); }},

        // Bunce-Deddens elements
        {"bd", "mul", "a·b", {a_bd, {"b", true, "Bunce-Deddens element"}},
         [](A a, O) { return ok(to_json(bd_mul(parse_bd(a["a"]), parse_bd(a["b"])))); }},
        {"bd", "commutator", "[a, b]", {a_bd, {"b", true, "Bunce-Deddens element"}},
         [](A a, O) { return ok(to_json(commutator(parse_bd(a["a"]), parse_bd(a["b"])))); }},
        {"bd", "adjoint", "a*", {a_bd}, [](A a, O) { return ok(to_json(bd_adjoint(parse_bd(a["a"])))); }},
        {"bd", "delta", "label derivation [𝕃, a]", {a_bd}, [](A a, O) { return ok(to_json(delta_L(parse_bd(a["a"])))); }},
        {"bd", "rho", "circle action at θ", {a_bd, {"theta", true, "rational p/q"}},
         [](A a, O) { return ok(to_json(rho_theta(parse_bd(a["a"]), parse_rational_json(a["theta"])))); }},
        {"bd", "fourier", "n-th Fourier coefficient", {a_bd, {"n", true, "integer"}},
         [](A a, O) { return ok(to_json(fourier_coeff(parse_bd(a["a"]), int_arg(a, "n")))); }},
        {"bd", "symbol", "matrix symbol", {a_bd}, [](A a, O) { return ok(to_json(matrix_symbol(parse_bd(a["a"])))); }},
        {"bd", "norm", "‖a‖_M (grid from --grid)", {a_bd, {"M", false, "order (default 0)"}},
         [](A a, O o) {
             int m = a.contains("M") ? static_cast<int>(int_arg(a, "M")) : 0;
             if (m < 0)
                 throw std::invalid_argument("M: must be nonnegative");
             return ok(to_json(op_norm(parse_bd(a["a"]), m, o.grid)));
         }},
        {"bd", "trace", "Haar trace of the diagonal part", {a_bd},
         [](A a, O) { return ok(to_json(trace(parse_bd(a["a"])))); }},
        {"bd", "spectrum", "symbol eigenvalues on the grid", {a_bd},
         [](A a, O o) {
             json out = json::array();
             for (auto z : spectrum_sample(parse_bd(a["a"]), o.grid))
                 out.push_back(to_json(z));
             return ok(out);
         }},

        // derivations
        {"der", "apply", "δ(b)", {d_der, {"b", true, "Bunce-Deddens element"}},
         [](A a, O) { return ok(to_json(der_apply(parse_derivation(a["d"]), parse_bd(a["b"])))); }},
        {"der", "component", "n-th Fourier component", {d_der, {"n", true, "integer"}},
         [](A a, O) { return ok(to_json(fourier_component(parse_derivation(a["d"]), int_arg(a, "n")))); }},
        {"der", "solve", "G with G∘β − G = Ft, mean zero", {{"Ft", true, "mean-zero function"}},
         [](A a, O) { return ok(to_json(solve_cocycle(parse_loc_const(a["Ft"])))); }},
        {"der", "decompose", "δ(U) = U·M_F as C·δ_L + [M_G, ·]", {{"F", true, "locally constant function"}},
         [](A a, O) {
             auto p = invariant_decompose(parse_loc_const(a["F"]));
             return ok(json{{"C", to_json(p.C)}, {"G", to_json(p.G)}});
         }},
        {"der", "recover", "F_n from δ(M_χ), χ = χ_l^k",
         {{"n", true, "nonzero integer"}, {"l", true, "period"}, {"k", true, "integer"},
          {"deltaOfChi", true, "Bunce-Deddens element"}},
         [](A a, O) {
             return ok(to_json(recover_covariant_F(int_arg(a, "n"), int_arg(a, "l"), int_arg(a, "k"),
                                                   parse_bd(a["deltaOfChi"]))));
         }},
        {"der", "pickchar", "character with |1 − χ(q(n))| ≥ 3/2", {{"n", true, "nonzero integer"}, S_req},
         [](A a, O) {
             auto c = pick_character(int_arg(a, "n"), parse_supernatural(a["S"]));
             return ok(json{{"l", c.l}, {"j", c.j}, {"g", c.g}, {"h", c.h}, {"value", to_json(c.value)},
                            {"bound", c.bound}});
         }},
        {"der", "nonsmooth", "truncated F(z) − F(ζ_l^k z)",
         {S_req, {"chainDepth", true, "chain depth"}, {"N", true, "number of terms"}, {"l", true, "period"},
          {"k", true, "integer"}},
         [](A a, O) {
             return ok(to_json(nonsmooth_commutator(parse_supernatural(a["S"]),
                                                    static_cast<std::size_t>(int_arg(a, "chainDepth")),
                                                    static_cast<std::size_t>(int_arg(a, "N")), int_arg(a, "l"),
                                                    int_arg(a, "k"))));
         }},

        // K-theory
        {"k", "kappa", "projection κ_{l,j}", {{"l", true, "period"}, {"j", true, "integer"}, S_opt},
         [](A a, O) {
             return ok(to_json(kappa(sn_arg(a, "S", default_ambient()), int_arg(a, "l"), int_arg(a, "j"))));
         }},
        {"k", "class", "K₀ class of a projection", {{"p", true, "diagonal projection"}},
         [](A a, O) { return ok(to_json(k0_class(parse_bd(a["p"])))); }},
        {"k", "obstruction", "witness level for 1/l ↦ a",
         {{"l", true, "positive integer"}, {"a", true, "nonzero integer"},
          {"chain", false, "divisor chain (default: canonical chain of S, length --depth)"},
          {"S", false, "ambient (default 2^∞)"}},
         [](A a, O o) {
             SupernaturalNumber s = sn_arg(a, "S", two_inf());
             DivisorChain c = a.contains("chain") ? parse_chain(a["chain"], s) : DivisorChain::canonical(s, o.depth);
             return ok(json{{"value", hom_obstruction(int_arg(a, "l"), int_arg(a, "a"), c)}});
         }},
        {"k", "phi", "φ(l, k)", {phi, {"l", true, "chain level"}, {"k", true, "integer"}},
         [](A a, O) { return ok(json{{"value", phi_value(parse_phi(a["phi"]), int_arg(a, "l"), int_arg(a, "k"))}}); }},
        {"k", "R", "R_φ(l, l')", {phi, {"l", true, "level"}, {"lp", true, "level"}, {"mode", false, "def|lin"}},
         [](A a, O) {
             RMode mode = a.contains("mode") ? enum_arg<RMode>(a, "mode", {{"def", RMode::def}, {"lin", RMode::lin}})
                                             : RMode::def;
             return ok(json{{"value", R(parse_phi(a["phi"]), int_arg(a, "l"), int_arg(a, "lp"), mode)}});
         }},
        {"k", "taurho", "(τ(φ), ρ(φ))", {phi},
         [](A a, O) {
             auto [tau, rho] = tau_rho(parse_phi(a["phi"]));
             return ok(json{{"tau", tau}, {"rho", to_json(rho)}});
         }},
        {"k", "coboundary", "(1 − β*)ψ", {{"psi", true, "Φ element"}},
         [](A a, O) { return ok(to_json(coboundary(parse_phi(a["psi"])))); }},
        {"k", "psi", "preimage under 1 − β* of a kernel element", {phi},
         [](A a, O) { return ok(to_json(psi_construct(parse_phi(a["phi"])))); }},
        {"k", "digitphi", "Φ element realizing x", {x_zs},
         [](A a, O) { return ok(to_json(digit_phi(parse_profinite(a["x"])))); }},

        // homological algebra
        {"hom", "snf", "Smith normal form U·A·V = D", {A_mat},
         [](A a, O) {
             auto f = smith_normal_form(parse_matrix(a["A"]));
             return ok(json{{"U", to_json(f.U)}, {"D", to_json(f.D)}, {"V", to_json(f.V)}});
         }},
        {"hom", "ext", "Hom and Ext¹ into Z of coker A", {A_mat},
         [](A a, O) {
             auto he = ext1_hom(parse_matrix(a["A"]));
             return ok(json{{"hom", to_json(he.hom)}, {"ext", to_json(he.ext)}});
         }},
    };

    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    for (const auto& s : suites)
        t.push_back({"verify", s, "run the " + s + " battery (--seed, --scale)", {},
                     [s](A, O o) { return verify_verb(s, o); }});
    return t;
}

json error_doc(const std::string& type, const std::string& message)
{
    return json{{"error", {{"type", type}, {"message", message}}}};
}

} // namespace

const std::vector<VerbSpec>& verb_table()
{
    static const std::vector<VerbSpec> table = build_table();
    return table;
}

CommandResult run_command(const CommandRequest& req)
{
    const VerbSpec* spec = nullptr;
    for (const auto& v : verb_table())
        if (v.group == req.group && v.verb == req.verb)
            spec = &v;
    if (!spec)
        return {error_doc("unknown_command", "no command \"" + req.group + " " + req.verb + "\""), 1};
    if (req.options.grid < 16)
        return {error_doc("invalid_argument", "grid: must be at least 16"), 1};

    try {
        if (!req.args.is_object())
            throw std::invalid_argument("arguments: expected a JSON object");
        for (const auto& [key, value] : req.args.items()) {
            bool known = false;
            for (const auto& f : spec->fields)
                known = known || f.name == key;
            if (!known)
                throw std::invalid_argument("unknown field \"" + key + "\"");
        }
        for (const auto& f : spec->fields)
            if (f.required && !req.args.contains(f.name))
                throw std::invalid_argument("missing field \"" + f.name + "\"");
        return spec->run(req.args, req.options);
    } catch (const std::invalid_argument& e) {
        return {error_doc("invalid_argument", e.what()), 1};
    } catch (const std::domain_error& e) {
        return {error_doc("domain_error", e.what()), 1};
    } catch (const std::out_of_range& e) {
        return {error_doc("out_of_range", e.what()), 1};
    } catch (const json::exception& e) {
        return {error_doc("invalid_argument", e.what()), 1};
    } catch (const std::exception& e) {
        return {error_doc("error", e.what()), 1};
    }
}

std::string render(const json& doc, bool pretty)
{
    return pretty ? doc.dump(2) : doc.dump();
}

} // namespace bdalg
