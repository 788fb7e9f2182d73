#include "qsteen/specfile.hpp"

#include "qsteen/render.hpp"

#include <cctype>
#include <sstream>

namespace qsteen {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

int parse_int_field(const std::string& s, int line, const std::string& what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw SpecError(line, 1, "invalid integer for " + what + ": '" + s + "'");
    }
}

}  // namespace

ManifoldSpec parse_spec(const std::string& text) {
    ManifoldSpec spec;
    std::string section;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw SpecError(lineno, int(line.size()), "unterminated section header");
            section = line.substr(1, line.size() - 2);
            if (section != "manifold" && section != "generators" && section != "relations" &&
                section != "h2" && section != "quantum")
                throw SpecError(lineno, 2, "unknown section '" + section + "'");
            continue;
        }
        if (section == "manifold") {
            auto eq = line.find('=');
            if (eq == std::string::npos) throw SpecError(lineno, 1, "expected key = value");
            std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
            if (key == "name")
                spec.name = val;
            else if (key == "top_degree")
                spec.top_degree = parse_int_field(val, lineno, "top_degree");
            else if (key == "min_chern")
                spec.min_chern = parse_int_field(val, lineno, "min_chern");
            else
                throw SpecError(lineno, 1, "unknown manifold key '" + key + "'");
        } else if (section == "generators") {
            auto eq = line.find('=');
            if (eq == std::string::npos) throw SpecError(lineno, 1, "expected <name> = <degree>");
            spec.generators.emplace_back(trim(line.substr(0, eq)),
                                         parse_int_field(trim(line.substr(eq + 1)), lineno, "degree"));
        } else if (section == "relations") {
            spec.relations.push_back(line);
        } else if (section == "h2") {
            auto colon = line.find(':');
            if (colon == std::string::npos) throw SpecError(lineno, 1, "expected <label>: c1 = ..., ...");
            ManifoldSpec::Curve c;
            c.label = trim(line.substr(0, colon));
            bool saw_c1 = false;
            for (const auto& field : split(line.substr(colon + 1), ',')) {
                auto eq = field.find('=');
                if (eq == std::string::npos) throw SpecError(lineno, 1, "expected key = value in h2 entry");
                std::string key = trim(field.substr(0, eq));
                int val = parse_int_field(trim(field.substr(eq + 1)), lineno, key);
                if (key == "c1") {
                    c.c1 = val;
                    saw_c1 = true;
                } else {
                    if (val != 0 && val != 1)
                        throw SpecError(lineno, 1, "intersection numbers are mod 2 (0 or 1)");
                    c.intersections.emplace_back(key, val);
                }
            }
            if (!saw_c1) throw SpecError(lineno, 1, "h2 entry missing c1");
            spec.curve_classes.push_back(c);
        } else if (section == "quantum") {
            auto arrow = line.find("->");
            auto at = line.find('@');
            if (arrow == std::string::npos || at == std::string::npos || at < arrow)
                throw SpecError(lineno, 1, "expected <a> * <b> -> <out> @ <label> <k>");
            std::string lhs = line.substr(0, arrow);
            auto star = lhs.find('*');
            if (star == std::string::npos) throw SpecError(lineno, 1, "expected <a> * <b> on the left");
            ManifoldSpec::Constant cst;
            cst.a = trim(lhs.substr(0, star));
            cst.b = trim(lhs.substr(star + 1));
            cst.out = trim(line.substr(arrow + 2, at - arrow - 2));
            std::string tail = trim(line.substr(at + 1));
            auto space = tail.find_last_of(" \t");
            if (space == std::string::npos) throw SpecError(lineno, 1, "expected <label> <k> after @");
            cst.curve = trim(tail.substr(0, space));
            cst.k = parse_int_field(trim(tail.substr(space + 1)), lineno, "k");
            spec.constants.push_back(cst);
        } else {
            throw SpecError(lineno, 1, "content before any section header");
        }
    }
    if (spec.name.empty()) throw SpecError(lineno, 1, "missing manifold name");
    if (spec.generators.empty()) throw SpecError(lineno, 1, "no generators declared");
    return spec;
}

std::string render_spec(const ManifoldSpec& spec) {
    std::ostringstream out;
    out << "[manifold]\nname = " << spec.name << "\ntop_degree = " << spec.top_degree << "\n";
    if (spec.min_chern) out << "min_chern = " << spec.min_chern << "\n";
    out << "\n[generators]\n";
    for (const auto& [n, d] : spec.generators) out << n << " = " << d << "\n";
    out << "\n[relations]\n";
    for (const auto& r : spec.relations) out << r << "\n";
    if (!spec.curve_classes.empty()) {
        out << "\n[h2]\n";
        for (const auto& c : spec.curve_classes) {
            out << c.label << ": c1 = " << c.c1;
            for (const auto& [g, v] : c.intersections) out << ", " << g << " = " << v;
            out << "\n";
        }
    }
    if (!spec.constants.empty()) {
        out << "\n[quantum]\n";
        for (const auto& c : spec.constants)
            out << c.a << " * " << c.b << " -> " << c.out << " @ " << c.curve << " " << c.k << "\n";
    }
    return out.str();
}

namespace {

Monomial parse_monomial(const RingPresentation& ring, const std::string& text) {
    Series s = parse_class(ring, text);
    if (s.parts().size() != 1)
        throw std::invalid_argument("expected a single monomial: '" + text + "'");
    const auto& [k, p] = *s.parts().begin();
    if (k.second != 0 || p.size() != 1)
        throw std::invalid_argument("expected a single T-free monomial: '" + text + "'");
    return *p.terms().begin();
}

}  // namespace

Manifold to_manifold(const ManifoldSpec& spec) {
    std::vector<Generator> gens;
    for (const auto& [n, d] : spec.generators) gens.push_back({n, d});

    // a temporary relation-free ring is used to parse polynomial strings
    RingPresentation free_ring;
    free_ring.name = spec.name;
    free_ring.generators = gens;
    std::vector<int> degs;
    for (const auto& g : gens) degs.push_back(g.degree);
    free_ring.gb = GroebnerBasis::make(degs, {});

    std::vector<Gf2Poly> rels;
    for (const auto& rs : spec.relations) {
        Series s = parse_class(free_ring, rs);
        Gf2Poly p = s.part(0, 0);
        if (s.parts().size() > 1 || (!s.is_zero() && p.is_zero()))
            throw std::invalid_argument("relation '" + rs + "' may not involve T");
        if (!p.homogeneous(free_ring.degrees()))
            throw std::invalid_argument("relation '" + rs + "' is not homogeneous");
        rels.push_back(p);
    }

    Manifold m;
    m.name = spec.name;
    m.ring = build_ring(spec.name, gens, rels, spec.top_degree);

    if (!spec.curve_classes.empty() || spec.min_chern || !spec.constants.empty()) {
        QuantumStructure q;
        q.N = spec.min_chern;
        for (const auto& c : spec.curve_classes) {
            CurveClass cc;
            cc.label = c.label;
            cc.chern = c.c1;
            cc.intersections.assign(m.ring.nvars(), 0);
            for (const auto& [g, v] : c.intersections) {
                auto gi = m.ring.generator_index(g);
                if (!gi) throw std::invalid_argument("h2 entry references unknown generator '" + g + "'");
                cc.intersections[*gi] = char(v);
            }
            q.curve_classes.push_back(cc);
        }
        auto curve_index = [&](const std::string& label) -> std::size_t {
            for (std::size_t i = 0; i < q.curve_classes.size(); ++i)
                if (q.curve_classes[i].label == label) return i;
            throw std::invalid_argument("unknown curve class '" + label + "'");
        };
        for (const auto& c : spec.constants) {
            Gf2Poly out;
            if (trim(c.out) != "0") out = Gf2Poly(parse_monomial(m.ring, c.out));
            q.add_constant(parse_monomial(m.ring, c.a), parse_monomial(m.ring, c.b),
                           curve_index(c.curve), c.k, out);
        }
        q.jmax = default_jmax(m.ring, q.N);
        auto errs = validate_quantum(m.ring, q);
        if (!errs.empty()) throw std::invalid_argument("quantum validation failed: " + errs.front());
        m.quantum = q;
    }
    return m;
}

}  // namespace qsteen
