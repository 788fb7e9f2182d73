#include "qsteen/render.hpp"

#include <algorithm>
#include <cctype>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace qsteen {

std::string render_monomial(const RingPresentation& ring, const Monomial& m) {
    std::string out;
    for (std::size_t g = 0; g < m.nvars(); ++g) {
        if (!m.exp(g)) continue;
        if (!out.empty()) out += ' ';
        out += ring.generators[g].name;
        if (m.exp(g) > 1) out += "^" + std::to_string(m.exp(g));
    }
    return out.empty() ? "1" : out;
}

namespace {

std::string render_term(const RingPresentation& ring, const Monomial& m, int h, int t) {
    std::vector<std::string> parts;
    if (!m.is_one() || (h == 0 && t == 0)) parts.push_back(render_monomial(ring, m));
    if (t == 1) parts.push_back("T");
    if (t > 1) parts.push_back("T^" + std::to_string(t));
    if (h == 1) parts.push_back("h");
    if (h > 1) parts.push_back("h^" + std::to_string(h));
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += ' ';
        out += p;
    }
    return out;
}

struct TermRef {
    int h, t;
    Monomial m;
};

std::vector<TermRef> ordered_terms(const Series& s) {
    std::vector<TermRef> terms;
    for (const auto& [k, p] : s.parts())
        for (const auto& m : p.terms()) terms.push_back({k.first, k.second, m});
    std::stable_sort(terms.begin(), terms.end(), [](const TermRef& a, const TermRef& b) {
        if (a.h != b.h) return a.h > b.h;
        if (a.t != b.t) return a.t < b.t;
        return a.m < b.m;
    });
    return terms;
}

}  // namespace

std::string render_series(const RingPresentation& ring, const Series& s) {
    auto terms = ordered_terms(s);
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& t : terms) {
        if (!out.empty()) out += " + ";
        out += render_term(ring, t.m, t.h, t.t);
    }
    return out;
}

std::string render_poly(const RingPresentation& ring, const Gf2Poly& p) {
    return render_series(ring, Series::classical(p));
}

std::string series_csv(const RingPresentation& ring, const Series& s) {
    std::string out = "class,h,t,coeff\n";
    for (const auto& t : ordered_terms(s))
        out += render_monomial(ring, t.m) + "," + std::to_string(t.h) + "," + std::to_string(t.t) +
               ",1\n";
    return out;
}

std::string series_json(const RingPresentation& ring, const Series& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : ordered_terms(s))
        arr.push_back({{"class", render_monomial(ring, t.m)}, {"h", t.h}, {"t", t.t}, {"coeff", 1}});
    return arr.dump(2);
}

Series parse_class(const RingPresentation& ring, const std::string& text) {
    Series out;
    std::size_t pos = 0;
    auto skip = [&] { while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos; };
    auto parse_int = [&]() -> int {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
        if (start == pos) throw std::invalid_argument("class '" + text + "': expected integer at " +
                                                      std::to_string(start));
        return std::stoi(text.substr(start, pos - start));
    };

    bool done = false;
    while (!done) {
        // one monomial term
        Monomial m(ring.nvars());
        int t = 0;
        bool empty = true, zero = false;
        for (;;) {
            skip();
            if (pos >= text.size() || text[pos] == '+') break;
            if (text[pos] == '*') {
                ++pos;
                continue;
            }
            if (std::isdigit((unsigned char)text[pos])) {
                int v = parse_int();
                if (v == 0) zero = true;
                else if (v != 1)
                    throw std::invalid_argument("class '" + text + "': only coefficients 0/1 allowed");
                empty = false;
                continue;
            }
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum((unsigned char)text[pos]) || text[pos] == '_') && text[pos] != '^')
                ++pos;
            std::string name = text.substr(start, pos - start);
            if (name.empty())
                throw std::invalid_argument("class '" + text + "': unexpected character at " +
                                            std::to_string(pos));
            int e = 1;
            skip();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip();
                e = parse_int();
            }
            if (name == "T") {
                t += e;
            } else {
                auto gi = ring.generator_index(name);
                if (!gi) throw std::invalid_argument("unknown generator '" + name + "'");
                m.set_exp(*gi, m.exp(*gi) + unsigned(e));
            }
            empty = false;
        }
        if (empty) throw std::invalid_argument("class '" + text + "': empty term");
        if (!zero) out.add(0, t, ring.nf(Gf2Poly(m)));
        skip();
        if (pos >= text.size())
            done = true;
        else if (text[pos] == '+')
            ++pos;
    }
    return out;
}

}  // namespace qsteen
