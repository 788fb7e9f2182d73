#include "qsteen/adem.hpp"
#include "qsteen/manifolds.hpp"
#include "qsteen/render.hpp"
#include "qsteen/specfile.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using namespace qsteen;

constexpr int EXIT_VERIFY_FAIL = 1;
constexpr int EXIT_INPUT_ERROR = 2;

Manifold load_manifold(const std::string& name) {
    if (auto m = find_manifold(name)) {
        if (m->quantum) {
            if (const char* env = std::getenv("QSTEEN_JMAX")) m->quantum->jmax = std::atoi(env);
        }
        return *m;
    }
    std::ifstream in(name);
    if (!in) throw std::invalid_argument("unknown manifold or unreadable spec file: " + name);
    std::stringstream ss;
    ss << in.rdbuf();
    Manifold m = to_manifold(parse_spec(ss.str()));
    if (m.quantum) {
        if (const char* env = std::getenv("QSTEEN_JMAX")) m.quantum->jmax = std::atoi(env);
    }
    return m;
}

const QuantumStructure& need_quantum(const Manifold& m) {
    if (!m.quantum) throw std::invalid_argument(m.name + " carries no quantum structure");
    return *m.quantum;
}

void emit(const RingPresentation& ring, const Series& s, const std::string& format) {
    if (format == "csv")
        std::cout << series_csv(ring, s);
    else if (format == "json")
        std::cout << series_json(ring, s) << "\n";
    else
        std::cout << render_series(ring, s) << "\n";
}

int poly_degree(const RingPresentation& ring, const Gf2Poly& p) {
    int d = -1;
    if (!p.homogeneous(ring.degrees(), &d)) throw std::invalid_argument("class is not homogeneous");
    return d;
}

int run(int argc, char** argv) {
    CLI::App app{"GF(2) Steenrod / quantum Steenrod computations on presented cohomology rings"};
    app.require_subcommand(1);
    std::string manifold, cls, format = "text";
    int p = 0, q = 0, pmax = 6;

    auto add_common = [&](CLI::App* sub, bool with_class) {
        sub->add_option("manifold", manifold, "builtin name (cpn:3, p1xp1, p1cubed, m05bar) or spec file")
            ->required();
        if (with_class) sub->add_option("class", cls, "class expression, e.g. 'x^2' or 'x T'");
    };

    auto* c_sq = app.add_subcommand("sq", "classical total Steenrod square");
    add_common(c_sq, true);
    auto* c_qs = app.add_subcommand("qs", "quantum total Steenrod square");
    add_common(c_qs, true);
    c_qs->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));
    auto* c_wu = app.add_subcommand("wu", "Wu class");
    add_common(c_wu, false);
    auto* c_sw = app.add_subcommand("sw", "Stiefel-Whitney class");
    add_common(c_sw, false);
    auto* c_qsw = app.add_subcommand("qsw", "quantum Stiefel-Whitney class");
    add_common(c_qsw, false);
    auto* c_qq = app.add_subcommand("qq", "classical qq packaging in H*(BD8)");
    add_common(c_qq, true);
    auto* c_verify = app.add_subcommand("verify", "verification suites");
    auto* v_cartan = c_verify->add_subcommand("cartan", "quantum Cartan relation");
    v_cartan->add_option("manifold", manifold)->required();
    auto* v_adem = c_verify->add_subcommand("adem", "classical Adem relations");
    v_adem->add_option("manifold", manifold)->required();
    v_adem->add_option("--pmax", pmax, "largest p+q to check");
    c_verify->require_subcommand(1);
    auto* c_defect = app.add_subcommand("defect", "naive quantum Adem defect");
    add_common(c_defect, true);
    c_defect->add_option("p", p)->required();
    c_defect->add_option("q", q)->required();
    auto* c_table = app.add_subcommand("table", "full (quantum) Steenrod table");
    add_common(c_table, false);
    c_table->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

    CLI11_PARSE(app, argc, argv);

    Manifold m = load_manifold(manifold);
    const RingPresentation& ring = m.ring;

    if (c_sq->parsed()) {
        SqTable t = build_sq_table(ring);
        Series a = parse_class(ring, cls.empty() ? "1" : cls);
        for (const auto& [k, part] : a.parts())
            if (k.second != 0) throw std::invalid_argument("sq takes a T-free class");
        std::cout << render_series(ring, sq(ring, t, a.part(0, 0))) << "\n";
    } else if (c_qs->parsed()) {
        const auto& qst = need_quantum(m);
        QsTable t = build_qs_table(ring, qst);
        Series a = parse_class(ring, cls.empty() ? "1" : cls);
        emit(ring, qs(ring, qst, t, a), format);
    } else if (c_wu->parsed()) {
        SqTable t = build_sq_table(ring);
        std::cout << render_series(ring, wu_class(ring, t)) << "\n";
    } else if (c_sw->parsed()) {
        SqTable t = build_sq_table(ring);
        std::cout << render_series(ring, stiefel_whitney(ring, t)) << "\n";
    } else if (c_qsw->parsed()) {
        const auto& qst = need_quantum(m);
        SqTable st = build_sq_table(ring);
        QsTable t = build_qs_table(ring, qst);
        std::cout << render_series(ring, quantum_stiefel_whitney(ring, qst, st, t)) << "\n";
    } else if (c_qq->parsed()) {
        SqTable t = build_sq_table(ring);
        Series a = parse_class(ring, cls.empty() ? "1" : cls);
        Gf2Poly alpha = a.part(0, 0);
        QqElement e = qq_classical(ring, t, alpha, poly_degree(ring, alpha));
        static const GradedAlgebra bd8 = bd8_ring();
        for (const auto& [mcls, mons] : e.parts) {
            std::cout << render_monomial(ring, mcls) << ":";
            bool first = true;
            for (const auto& [i, j] : mons) {
                std::cout << (first ? " " : " + ");
                first = false;
                Monomial bm(3);
                bm.set_exp(0, unsigned(i));
                bm.set_exp(2, unsigned(j));
                std::string s;
                for (std::size_t g = 0; g < 3; ++g) {
                    if (!bm.exp(g)) continue;
                    if (!s.empty()) s += ' ';
                    s += bd8.gens[g].name;
                    if (bm.exp(g) > 1) s += "^" + std::to_string(bm.exp(g));
                }
                std::cout << (s.empty() ? "1" : s);
            }
            std::cout << "\n";
        }
    } else if (v_cartan->parsed()) {
        const auto& qst = need_quantum(m);
        QsTable t = build_qs_table(ring, qst);
        bool ok = true;
        for (const auto& [d, ms] : ring.basis) {
            for (const auto& bm : ms) {
                for (std::size_t g = 0; g < ring.nvars(); ++g) {
                    Gf2Poly x(Monomial::var(ring.nvars(), g));
                    auto rep = verify_quantum_cartan(ring, qst, t, Gf2Poly(bm), x);
                    if (!rep.correction.is_zero())
                        std::cout << "correction (" << render_monomial(ring, bm) << ","
                                  << ring.generators[g].name
                                  << "): " << render_series(ring, rep.correction) << "\n";
                    if (!rep.ok) {
                        ok = false;
                        std::cout << "FAIL (" << render_monomial(ring, bm) << ","
                                  << ring.generators[g].name << ")\n";
                    }
                }
            }
        }
        std::cout << (ok ? "PASS" : "FAIL") << "\n";
        return ok ? 0 : EXIT_VERIFY_FAIL;
    } else if (v_adem->parsed()) {
        SqTable t = build_sq_table(ring);
        bool ok = true;
        for (int pp = 1; pp <= pmax; ++pp) {
            for (int qq2 = 1; qq2 < 2 * pp && pp + qq2 <= pmax; ++qq2) {
                std::string diag;
                if (!verify_adem(ring, t, pp, qq2, &diag)) {
                    ok = false;
                    std::cout << "FAIL: " << diag << "\n";
                }
            }
        }
        std::cout << (ok ? "PASS" : "FAIL") << "\n";
        return ok ? 0 : EXIT_VERIFY_FAIL;
    } else if (c_defect->parsed()) {
        const auto& qst = need_quantum(m);
        QuantumStructure wide = qst;
        wide.jmax *= 2;  // compositions can exceed the single-square bound
        QsTable t = build_qs_table(ring, wide);
        Series a = parse_class(ring, cls);
        Gf2Poly alpha = a.part(0, 0);
        Series d = quantum_adem_defect(ring, wide, t, alpha, p, q);
        std::cout << render_series(ring, d) << "\n";
    } else if (c_table->parsed()) {
        std::map<Monomial, Series> entries;
        if (m.quantum)
            entries = build_qs_table(ring, *m.quantum).entries;
        else
            entries = build_sq_table(ring).entries;
        for (const auto& [bm, s] : entries) {
            if (format == "text") {
                std::cout << render_monomial(ring, bm) << " -> " << render_series(ring, s) << "\n";
            } else {
                std::cout << render_monomial(ring, bm) << "\n";
                emit(ring, s, format);
            }
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_INPUT_ERROR;
    }
}
