#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "jacring/borcherds.hpp"
#include "jacring/generators.hpp"
#include "jacring/json_io.hpp"
#include "jacring/rational.hpp"
#include "jacring/ring_structure.hpp"
#include "jacring/siegel.hpp"

using namespace jacring;
using nlohmann::json;

namespace {

struct Common {
    long prec = 16; // q-orders
    std::string format = "pretty";
    std::string out;

    long prec24() const { return 24 * prec; }
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--prec", c.prec, "q-expansion orders")
        ->envname("JACRING_PREC")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"json", "pretty"}))
        ->capture_default_str();
    sub->add_option("--out", c.out, "write the result to FILE instead of stdout");
}

// The names `expand` accepts.  Everything else is a parse error, even when
// the library could resolve it.
const std::set<std::string> kNames = {
    "E4",        "E6",          "Delta",       "E4_1",     "E4_2",    "E4_3",
    "E6_1",      "E6_2",        "F6_3",        "phi_0_1",  "phi_0_2", "phi_0_3",
    "phi_0_4",   "phi_m2_1",    "phi_0_3half", "phi_m1_half", "phi_m1_2", "j",
    "G4_1",      "G4_2",        "G4_3",        "psi_0_1",  "psi_0_2", "psi_0_3"};

JacobiForm expand_named(const std::string& name, long prec24) {
    if (!kNames.count(name))
        throw ParseError("unknown form name '" + name + "'");
    if (name.rfind("psi_", 0) == 0)
        return psi_named(name, prec24);
    return generator_expansion(name, prec24);
}

std::string exp_str(long num, long den) {
    mpq_class e(num, den);
    e.canonicalize();
    if (is_integer(e))
        return e.get_str();
    return "(" + e.get_str() + ")";
}

// One row per q-power: "q^n: c ζ^-L + ... + c ζ^L"
std::string pretty_series(const ScaledSeries& s) {
    std::ostringstream os;
    if (s.is_zero()) {
        os << "0 + O(q^" << exp_str(s.prec24(), 24) << ")\n";
        return os.str();
    }
    for (const auto& [n24, row] : s.rows()) {
        os << "q^" << exp_str(n24, 24) << ":";
        bool first = true;
        for (const auto& [l2, c] : row) {
            mpq_class a = abs(c);
            os << (sgn(c) < 0 ? (first ? " -" : " - ") : (first ? " " : " + "));
            if (a != 1 || l2 == 0)
                os << a.get_str();
            if (l2 == 2)
                os << "ζ";
            else if (l2 != 0)
                os << "ζ^" << exp_str(l2, 2);
            first = false;
        }
        os << "\n";
    }
    os << "O(q^" << exp_str(s.prec24(), 24) << ")\n";
    return os.str();
}

std::string pretty_poly(const GeneratorPolynomial& p) {
    if (p.is_zero())
        return "0\n";
    const auto& gens = ring_generators(p.tag());
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        mpq_class a = abs(c);
        os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += gens[i].name;
            if (e[i] > 1)
                mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            os << a.get_str();
        else if (a == 1)
            os << mono;
        else
            os << a.get_str() << "*" << mono;
        first = false;
    }
    os << "\n";
    return os.str();
}

std::string pretty_certificate(const IntegralityCertificate& c) {
    std::ostringstream os;
    os << "verdict: " << (c.integral ? "INTEGRAL" : "NOT-INTEGRAL") << "\n";
    os << "weight: " << rat_str(c.weight) << ", index: " << rat_str(c.index) << "\n";
    os << "order_bound: " << c.order_bound << ", checked: " << c.checked.size()
       << " coefficients\n";
    if (c.witness) {
        const auto& [n24, l2, v] = *c.witness;
        os << "witness: c(" << n24 / 24 << ", " << l2 / 2 << ") = " << rat_str(v) << "\n";
    }
    os << "assumption: " << c.assumption << "\n";
    return os.str();
}

std::string pretty_certificate(const SiegelCertificate& c) {
    std::ostringstream os;
    os << "verdict: " << (c.integral ? "INTEGRAL" : "NOT-INTEGRAL") << "\n";
    os << "weight: " << c.weight << ", m_bound: " << c.m_bound << ", checked: "
       << c.checked.size() << " coefficients\n";
    if (c.witness) {
        const auto& [n, l, m, v] = *c.witness;
        os << "witness: c(" << n << ", " << l << "; " << m << ") = " << rat_str(v) << "\n";
    }
    os << "assumption: " << c.assumption << "\n";
    return os.str();
}

std::string pretty_relations(const std::vector<RelationResult>& rs) {
    std::ostringstream os;
    size_t bad = 0;
    for (const auto& r : rs) {
        os << (r.holds ? "ok   " : "FAIL ") << r.name;
        if (!r.holds && !r.detail.empty())
            os << "  [" << r.detail << "]";
        os << "\n";
        bad += r.holds ? 0 : 1;
    }
    os << rs.size() << " relations, " << (bad == 0 ? "all hold" : std::to_string(bad) + " fail")
       << "\n";
    return os.str();
}

std::string pretty_psi_basis(const PsiBasis& b) {
    std::ostringstream os;
    for (int n = 1; n <= b.index; ++n) {
        os << "psi(" << n << ") pivot " << b.pivots[static_cast<size_t>(n - 1)] << ", q^0 row [";
        const auto& row = b.q0[static_cast<size_t>(n - 1)];
        for (size_t i = 0; i < row.size(); ++i)
            os << (i ? " " : "") << row[i].get_str();
        os << "]\n  = " << pretty_poly(b.psi_poly(n));
    }
    return os.str();
}

std::string pretty_singular(const SingularData& s) {
    std::ostringstream os;
    os << "index " << s.index << "\n";
    for (const auto& [key, c] : s.entries)
        os << "f(" << key.first << ", " << key.second << ") = " << c.get_str() << "\n";
    return os.str();
}

std::string pretty_fj(const FourierJacobiExpansion& F) {
    std::ostringstream os;
    os << "weight " << F.weight << ", indexes 0.." << F.truncation() << "\n";
    for (size_t m = 0; m < F.fj.size(); ++m) {
        os << "f_" << m << ":\n";
        std::istringstream rows(pretty_series(F.fj[m].series));
        for (std::string line; std::getline(rows, line);)
            os << "  " << line << "\n";
    }
    return os.str();
}

json read_payload() {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return parse_json(ss.str());
}

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f)
        throw std::invalid_argument("cannot open '" + c.out + "' for writing");
    f << text;
}

void emit_error(const std::string& kind, const std::string& message,
                const std::vector<mpq_class>& obstruction = {}) {
    json err{{"error", kind}, {"message", message}};
    if (!obstruction.empty()) {
        json obs = json::array();
        for (const auto& c : obstruction)
            obs.push_back(rat_str(c));
        err["obstruction"] = std::move(obs);
    }
    std::cerr << err.dump() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Jacobi form expansions, decompositions and certificates"};
    app.require_subcommand(1);
    Common c;

    auto* cmd_expand = app.add_subcommand("expand", "q-expansion of a named form");
    std::string name;
    long mod = 0;
    cmd_expand->add_option("name", name, "form name")->required();
    cmd_expand->add_option("--mod", mod, "reduce coefficients into [0, N)")
        ->check(CLI::Range(2l, std::numeric_limits<long>::max()));
    add_common(cmd_expand, c);

    auto* cmd_decompose =
        app.add_subcommand("decompose", "write a form as a generator polynomial");
    std::string ring;
    cmd_decompose->add_option("--ring", ring, "generating system")
        ->required()
        ->check(CLI::IsMember({"weak0", "weak-even", "wh0"}));
    add_common(cmd_decompose, c);

    auto* cmd_certify =
        app.add_subcommand("certify", "integrality certificate for a polynomial");
    add_common(cmd_certify, c);

    auto* cmd_siegel =
        app.add_subcommand("certify-siegel", "integrality certificate for a lift");
    add_common(cmd_siegel, c);

    auto* cmd_relations = app.add_subcommand("verify-relations", "check the relation table");
    add_common(cmd_relations, c);

    auto* cmd_psi = app.add_subcommand("psi-basis", "echelon basis of q^0 rows");
    long psi_m = 0;
    cmd_psi->add_option("m", psi_m, "index")->required()->check(CLI::PositiveNumber);
    add_common(cmd_psi, c);

    auto* cmd_singular = app.add_subcommand("singular", "singular coefficients of a form");
    add_common(cmd_singular, c);

    auto* cmd_lift = app.add_subcommand("lift", "Fourier-Jacobi expansion of a lift");
    long lift_m = 0;
    cmd_lift->add_option("M", lift_m, "last Fourier-Jacobi index")
        ->required()
        ->check(CLI::PositiveNumber);
    add_common(cmd_lift, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error("parse", e.what());
        return 1;
    }

    const bool as_json = c.format == "json";
    try {
        if (*cmd_expand) {
            JacobiForm f = expand_named(name, c.prec24());
            if (mod != 0)
                f.series = reduce_mod(f.series, mod);
            emit(c, as_json ? dump_json(to_json(f)) : pretty_series(f.series));
        } else if (*cmd_decompose) {
            JacobiForm f = jacobi_from_json(read_payload());
            GeneratorPolynomial p = ring == "weak0"      ? decompose_weak0(f)
                                    : ring == "weak-even" ? decompose_weak_even(f)
                                                          : decompose_wh0(f);
            emit(c, as_json ? dump_json(to_json(p)) : pretty_poly(p));
        } else if (*cmd_certify) {
            GeneratorPolynomial p = poly_from_json(read_payload());
            IntegralityCertificate cert = certify_integral(p, c.prec24());
            emit(c, as_json ? dump_json(to_json(cert)) : pretty_certificate(cert));
            return cert.integral ? 0 : 2;
        } else if (*cmd_siegel) {
            FourierJacobiExpansion F = fourier_jacobi_from_json(read_payload());
            SiegelCertificate cert = siegel_certify_integral(F);
            emit(c, as_json ? dump_json(to_json(cert)) : pretty_certificate(cert));
            return cert.integral ? 0 : 2;
        } else if (*cmd_relations) {
            std::vector<RelationResult> rs = verify_relations(c.prec24());
            emit(c, as_json ? dump_json(to_json(rs)) : pretty_relations(rs));
            for (const auto& r : rs)
                if (!r.holds)
                    return 2;
        } else if (*cmd_psi) {
            PsiBasis b = psi_basis(static_cast<int>(psi_m), c.prec24());
            emit(c, as_json ? dump_json(to_json(b)) : pretty_psi_basis(b));
        } else if (*cmd_singular) {
            SingularData s = singular_part(jacobi_from_json(read_payload()));
            emit(c, as_json ? dump_json(to_json(s)) : pretty_singular(s));
        } else if (*cmd_lift) {
            JacobiForm f = jacobi_from_json(read_payload());
            FourierJacobiExpansion F = gritsenko_lift(f, static_cast<int>(lift_m), c.prec24());
            emit(c, as_json ? dump_json(to_json(F)) : pretty_fj(F));
        }
        return 0;
    } catch (const ParseError& e) {
        emit_error("parse", e.what());
        return 1;
    } catch (const NotInRing& e) {
        emit_error("not-in-ring", e.what(), e.obstruction);
        return 2;
    } catch (const NotRealizable& e) {
        emit_error("not-realizable", e.what(), e.obstruction);
        return 2;
    } catch (const NotDivisible& e) {
        emit_error("not-divisible", e.what());
        return 2;
    } catch (const Error& e) {
        emit_error("domain", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        emit_error("parse", e.what());
        return 1;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return 1;
    }
}
