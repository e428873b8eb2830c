#include "ospbasis/json_io.hpp"

#include <stdexcept>

#include "ospbasis/errors.hpp"

namespace ospbasis {

Json document(const std::string& kind, Json payload)
{
    Json out;
    out["schema_version"] = schema_version;
    out["kind"] = kind;
    for (auto& [key, value] : payload.items())
        out[key] = std::move(value);
    return out;
}

Json to_json(const SsytTableau& a)
{
    return Json(a.rows());
}

SsytTableau tableau_from_json(const Json& j, int n)
{
    return SsytTableau(n, j.get<std::vector<std::vector<int>>>());
}

Json to_json(const Partition& lambda)
{
    return Json(lambda.parts());
}

Json to_json(const WeightVector& mu)
{
    return Json(mu.entries());
}

Json to_json(const CliffordMonomial& m)
{
    return Json{{"sign", m.sign()}, {"parity", m.parity_vector()}};
}

Json to_json(const ExponentMatrix& gamma)
{
    return Json(gamma.rows());
}

ExponentMatrix exponent_matrix_from_json(const Json& j)
{
    return ExponentMatrix::from_rows(j.get<std::vector<std::vector<int>>>());
}

Json integer_to_json(const Integer& z)
{
    return z.get_str();
}

Integer integer_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Integer(j.get<long>());
    return Integer(j.get<std::string>());
}

Json to_json(const CliffordPoly& f)
{
    Json terms = Json::array();
    for (const auto& [key, c] : f.terms())
        terms.push_back({{"gamma", to_json(key.gamma)},
                         {"eta", CliffordMonomial(f.p(), key.eta).parity_vector()},
                         {"coeff", integer_to_json(c)}});
    return terms;
}

CliffordPoly poly_from_json(const Json& j, int n, int p)
{
    CliffordPoly f(n, p);
    for (const auto& t : j) {
        const auto gamma = exponent_matrix_from_json(t.at("gamma"));
        if (gamma.n() != n || gamma.p() != p)
            throw std::invalid_argument("poly_from_json: exponent matrix has the wrong size");
        const auto eta = t.at("eta").get<std::vector<int>>();
        if (static_cast<int>(eta.size()) != p)
            throw std::invalid_argument("poly_from_json: parity vector has the wrong length");
        ParityMask mask = 0;
        for (int a = 1; a <= p; ++a)
            if (eta[static_cast<std::size_t>(a - 1)])
                mask |= generator_bit(a);
        f.add_term(gamma, mask, integer_from_json(t.at("coeff")));
    }
    return f;
}

Json to_json(const TableauVector& v)
{
    return Json{{"tableau", to_json(v.label())}, {"p", v.p()}, {"terms", to_json(v.value())}};
}

Json to_json(const ActionTable& t)
{
    Json terms = Json::array();
    for (const auto& [b, c] : t.terms)
        terms.push_back({{"target", to_json(b)}, {"coeff", integer_to_json(c)}});
    return Json{{"source", to_json(t.source)}, {"generator", t.generator_label()}, {"p", t.p}, {"terms", terms}};
}

ActionTable action_table_from_json(const Json& j, int n)
{
    ActionTable t;
    t.source = tableau_from_json(j.at("source"), n);
    const auto label = j.at("generator").get<std::string>();
    std::size_t cut = label.find_first_of("0123456789");
    if (cut == std::string::npos || cut == 0)
        throw std::invalid_argument("action_table_from_json: bad generator label '" + label + "'");
    t.generator = parse_generator(label.substr(0, cut));
    t.index = std::stoi(label.substr(cut));
    t.p = j.at("p").get<int>();
    for (const auto& term : j.at("terms"))
        t.terms.emplace(tableau_from_json(term.at("target"), n), integer_from_json(term.at("coeff")));
    return t;
}

Json to_json(const IntMatrix& u)
{
    Json rows = Json::array();
    for (std::size_t k = 0; k < u.size(); ++k) {
        Json row = Json::array();
        for (std::size_t l = 0; l < u.size(); ++l)
            row.push_back(integer_to_json(u.at(k, l)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const IntVector& v)
{
    Json out = Json::array();
    for (const auto& z : v)
        out.push_back(integer_to_json(z));
    return out;
}

Json context_bundle(const BasisContext& ctx)
{
    Json tableaux = Json::array();
    Json vectors = Json::array();
    for (const auto& v : ctx.vectors()) {
        tableaux.push_back(to_json(v.label()));
        vectors.push_back(to_json(v));
    }
    return document("context", Json{{"n", ctx.n()},
                                    {"p", ctx.p()},
                                    {"weight", to_json(ctx.weight())},
                                    {"dimension", ctx.dimension()},
                                    {"tableaux", tableaux},
                                    {"U", to_json(ctx.u())},
                                    {"vectors", vectors}});
}

std::shared_ptr<const BasisContext> context_from_bundle(const Json& bundle)
{
    if (bundle.value("schema_version", 0) != schema_version)
        throw std::invalid_argument("context bundle: unsupported schema_version");
    const int n = bundle.at("n").get<int>();
    const int p = bundle.at("p").get<int>();
    WeightVector mu(bundle.at("weight").get<std::vector<int>>());
    auto ctx = get_context(n, p, mu);
    const auto fresh = context_bundle(*ctx);
    for (const char* key : {"tableaux", "U", "vectors"})
        if (fresh.at(key) != bundle.at(key))
            throw consistency_error(std::string("context bundle: stored ") + key + " differs from the recomputed one");
    return ctx;
}

} // namespace ospbasis
