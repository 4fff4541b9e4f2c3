#include "jacring/json_io.hpp"

#include <set>

#include "jacring/errors.hpp"
#include "jacring/rational.hpp"

namespace jacring {

using nlohmann::json;

namespace {

// Strict field access: every reader below names its fields explicitly and
// rejects anything extra, so canonical output is the only accepted shape
// modulo ordering and whitespace.
void require_keys(const json& j, const char* what, const std::set<std::string>& keys) {
    if (!j.is_object())
        throw ParseError(std::string(what) + ": expected a JSON object");
    for (const auto& [k, v] : j.items())
        if (!keys.count(k))
            throw ParseError(std::string(what) + ": unexpected field '" + k + "'");
    for (const auto& k : keys)
        if (!j.contains(k))
            throw ParseError(std::string(what) + ": missing field '" + k + "'");
}

long get_long(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw ParseError(std::string(what) + ": expected an integer");
    return j.get<long>();
}

mpq_class get_rat(const json& j, const char* what) {
    if (!j.is_string())
        throw ParseError(std::string(what) + ": expected a rational as a string");
    return parse_rat(j.get<std::string>());
}

mpz_class get_int(const json& j, const char* what) {
    mpq_class r = get_rat(j, what);
    if (!is_integer(r))
        throw ParseError(std::string(what) + ": expected an integer, got " + rat_str(r));
    return r.get_num();
}

json witness_rat(const mpq_class& v) {
    return json(rat_str(v));
}

} // namespace

json to_json(const ScaledSeries& s) {
    json terms = json::array();
    for (const auto& [n24, row] : s.rows())
        for (const auto& [l2, c] : row)
            terms.push_back(json::array({n24, l2, rat_str(c)}));
    return json{{"prec24", s.prec24()}, {"terms", std::move(terms)}};
}

ScaledSeries series_from_json(const json& j) {
    require_keys(j, "series", {"prec24", "terms"});
    long prec24 = get_long(j["prec24"], "series.prec24");
    if (prec24 < 1)
        throw ParseError("series.prec24 must be positive");
    ScaledSeries s(prec24);
    if (!j["terms"].is_array())
        throw ParseError("series.terms: expected an array");
    for (const auto& t : j["terms"]) {
        if (!t.is_array() || t.size() != 3)
            throw ParseError("series term: expected [n24, l2, coeff]");
        long n24 = get_long(t[0], "series term n24");
        long l2 = get_long(t[1], "series term l2");
        if (n24 >= prec24)
            throw ParseError("series term at n24=" + std::to_string(n24) +
                             " lies beyond the horizon " + std::to_string(prec24));
        s.set(n24, l2, get_rat(t[2], "series term coeff"));
    }
    return s;
}

json to_json(const JacobiForm& f) {
    json j = to_json(f.series);
    j["weight"] = rat_str(f.weight);
    j["index"] = rat_str(f.index);
    j["char_D"] = f.char_D;
    j["char_H"] = f.char_H;
    return j;
}

JacobiForm jacobi_from_json(const json& j) {
    require_keys(j, "jacobi form",
                 {"prec24", "terms", "weight", "index", "char_D", "char_H"});
    json inner{{"prec24", j["prec24"]}, {"terms", j["terms"]}};
    ScaledSeries s = series_from_json(inner);
    mpq_class weight = get_rat(j["weight"], "jacobi form weight");
    mpq_class index = get_rat(j["index"], "jacobi form index");
    long d = get_long(j["char_D"], "jacobi form char_D");
    long h = get_long(j["char_H"], "jacobi form char_H");
    if (d < 0 || d > 23)
        throw ParseError("jacobi form char_D must lie in 0..23");
    if (h != 0 && h != 1)
        throw ParseError("jacobi form char_H must be 0 or 1");
    try {
        return make_jacobi(std::move(s), weight, index, static_cast<int>(d),
                           static_cast<int>(h));
    } catch (const std::exception& e) {
        throw ParseError(std::string("jacobi form payload rejected: ") + e.what());
    }
}

json to_json(const GeneratorPolynomial& p) {
    const auto& gens = ring_generators(p.tag());
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json exps = json::object();
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0)
                exps[gens[i].name] = e[i];
        terms.push_back(json{{"exps", std::move(exps)}, {"coeff", rat_str(c)}});
    }
    return json{{"ring", ring_tag_name(p.tag())}, {"terms", std::move(terms)}};
}

GeneratorPolynomial poly_from_json(const json& j) {
    require_keys(j, "polynomial", {"ring", "terms"});
    if (!j["ring"].is_string())
        throw ParseError("polynomial.ring: expected a string tag");
    RingTag tag;
    try {
        tag = ring_tag_from_name(j["ring"].get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError(std::string("polynomial.ring: ") + e.what());
    }
    const auto& gens = ring_generators(tag);
    GeneratorPolynomial p(tag);
    if (!j["terms"].is_array())
        throw ParseError("polynomial.terms: expected an array");
    for (const auto& t : j["terms"]) {
        require_keys(t, "polynomial term", {"exps", "coeff"});
        if (!t["exps"].is_object())
            throw ParseError("polynomial term exps: expected an object");
        std::vector<int> e(gens.size(), 0);
        for (const auto& [name, ev] : t["exps"].items()) {
            size_t pos = gens.size();
            for (size_t i = 0; i < gens.size(); ++i)
                if (gens[i].name == name) {
                    pos = i;
                    break;
                }
            if (pos == gens.size())
                throw ParseError("polynomial term: '" + name + "' is not a generator of " +
                                 ring_tag_name(tag));
            long x = get_long(ev, "polynomial term exponent");
            if (x < 0)
                throw ParseError("polynomial term: negative exponent for '" + name + "'");
            e[pos] = static_cast<int>(x);
        }
        p.add_term(e, get_rat(t["coeff"], "polynomial term coeff"));
    }
    return p;
}

json to_json(const FourierJacobiExpansion& F) {
    json fj = json::array();
    for (const auto& f : F.fj)
        fj.push_back(to_json(f));
    return json{{"weight", F.weight}, {"fj", std::move(fj)}};
}

FourierJacobiExpansion fourier_jacobi_from_json(const json& j) {
    require_keys(j, "fourier-jacobi expansion", {"weight", "fj"});
    FourierJacobiExpansion F;
    F.weight = get_long(j["weight"], "fourier-jacobi weight");
    if (!j["fj"].is_array())
        throw ParseError("fourier-jacobi fj: expected an array");
    for (const auto& f : j["fj"])
        F.fj.push_back(jacobi_from_json(f));
    return F;
}

json to_json(const SingularData& s) {
    json entries = json::array();
    for (const auto& [key, c] : s.entries)
        entries.push_back(json::array({key.first, key.second, c.get_str()}));
    return json{{"index", s.index}, {"entries", std::move(entries)}};
}

SingularData singular_from_json(const json& j) {
    require_keys(j, "singular data", {"index", "entries"});
    SingularData s;
    s.index = get_long(j["index"], "singular data index");
    if (!j["entries"].is_array())
        throw ParseError("singular data entries: expected an array");
    for (const auto& t : j["entries"]) {
        if (!t.is_array() || t.size() != 3)
            throw ParseError("singular data entry: expected [n, l, coeff]");
        long n = get_long(t[0], "singular entry n");
        long l = get_long(t[1], "singular entry l");
        mpz_class c = get_int(t[2], "singular entry coeff");
        if (c != 0)
            s.entries[{n, l}] = std::move(c);
    }
    return s;
}

json to_json(const IntegralityCertificate& c) {
    json checked = json::array();
    for (const auto& [n24, l2] : c.checked)
        checked.push_back(json::array({n24 / 24, l2 / 2}));
    json witness;
    if (c.witness) {
        const auto& [n24, l2, v] = *c.witness;
        witness = json::array({n24 / 24, l2 / 2, witness_rat(v)});
    }
    return json{{"verdict", c.integral ? "INTEGRAL" : "NOT-INTEGRAL"},
                {"weight", rat_str(c.weight)},
                {"index", rat_str(c.index)},
                {"order_bound", c.order_bound},
                {"checked", std::move(checked)},
                {"witness", std::move(witness)},
                {"assumption", c.assumption}};
}

json to_json(const SiegelCertificate& c) {
    json checked = json::array();
    for (const auto& [n, l, m] : c.checked)
        checked.push_back(json::array({n, l, m}));
    json witness;
    if (c.witness) {
        const auto& [n, l, m, v] = *c.witness;
        witness = json::array({n, l, m, witness_rat(v)});
    }
    return json{{"verdict", c.integral ? "INTEGRAL" : "NOT-INTEGRAL"},
                {"weight", c.weight},
                {"m_bound", c.m_bound},
                {"checked", std::move(checked)},
                {"witness", std::move(witness)},
                {"assumption", c.assumption}};
}

json to_json(const std::vector<RelationResult>& rs) {
    json out = json::array();
    for (const auto& r : rs) {
        json item{{"name", r.name}, {"holds", r.holds}};
        if (!r.detail.empty())
            item["detail"] = r.detail;
        out.push_back(std::move(item));
    }
    return out;
}

json to_json(const PsiBasis& b) {
    json q0 = json::array();
    for (const auto& row : b.q0) {
        json r = json::array();
        for (const auto& c : row)
            r.push_back(c.get_str());
        q0.push_back(std::move(r));
    }
    json polys = json::array();
    for (const auto& p : b.polys)
        polys.push_back(to_json(p));
    return json{{"index", b.index},
                {"pivots", b.pivots},
                {"q0", std::move(q0)},
                {"polys", std::move(polys)}};
}

std::string dump_json(const json& j) {
    return j.dump(2) + "\n";
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw ParseError("malformed JSON input");
    return j;
}

} // namespace jacring
