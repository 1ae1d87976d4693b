#pragma once

/**
 * @file serialize.hpp
 * @brief JSON and plain-text serialization for every grtab value type.
 *
 * JSON is handled through nlohmann::json.  The text grammars are documented
 * in docs/formats.md.  Every emitter is deterministic: container iteration
 * order or an explicit sort fixes each sequence, so identical values always
 * produce identical bytes.  Every emitted JSON document parses back to an
 * equal value.
 */

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "grtab/cluster.hpp"
#include "grtab/errors.hpp"
#include "grtab/monomials.hpp"
#include "grtab/plucker.hpp"
#include "grtab/tableaux.hpp"
#include "grtab/characters.hpp"

namespace grtab {

using Json = nlohmann::json;

namespace detail {

[[noreturn]] inline void bad_payload(const std::string& what) {
    fail(ErrorCode::InvalidInput, "malformed payload: " + what);
}

inline long long as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) bad_payload(std::string(what) + " must be an integer");
    return j.get<long long>();
}

/// Big integers ride as JSON numbers when they fit in 64 bits, else strings.
inline Json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return Json(v.convert_to<long long>());
    return Json(v.str());
}

inline Int int_from_json(const Json& j, const char* what) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            bad_payload(std::string(what) + " is not an integer literal");
        }
    }
    bad_payload(std::string(what) + " must be an integer or integer string");
}

} // namespace detail

// ---------------------------------------------------------------------------
// Rationals: "p/q" strings
// ---------------------------------------------------------------------------

inline std::string rat_to_text(const Rat& v) {
    const Int num = boost::multiprecision::numerator(v);
    const Int den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Rat rat_from_text(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        const Int num(s.substr(0, slash));
        const Int den(s.substr(slash + 1));
        if (den == 0) detail::bad_payload("rational with zero denominator");
        return Rat(num, den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        detail::bad_payload("'" + s + "' is not a rational p/q");
    }
}

// ---------------------------------------------------------------------------
// Tableaux
// ---------------------------------------------------------------------------

inline Json tableau_to_json(const Tableau& t) {
    Json rows = Json::array();
    for (const auto& row : t.rows) rows.push_back(row);
    return Json{{"n", t.n}, {"m", t.m}, {"rows", std::move(rows)}};
}

inline Tableau tableau_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("m") || !j.contains("rows"))
        detail::bad_payload("tableau object needs keys n, m, rows");
    const int n = static_cast<int>(detail::as_int(j["n"], "n"));
    const int m = static_cast<int>(detail::as_int(j["m"], "m"));
    if (!j["rows"].is_array()) detail::bad_payload("tableau rows must be an array");
    std::vector<std::vector<int>> rows;
    for (const auto& jr : j["rows"]) {
        if (!jr.is_array()) detail::bad_payload("tableau row must be an array");
        std::vector<int> row;
        for (const auto& e : jr) row.push_back(static_cast<int>(detail::as_int(e, "entry")));
        rows.push_back(std::move(row));
    }
    return make_tableau(n, m, rows);
}

/// Columns joined by "|", entries by ","; the unit tableau is the empty string.
inline std::string tableau_to_text(const Tableau& t) {
    std::ostringstream out;
    const auto cols = t.columns();
    for (size_t j = 0; j < cols.size(); ++j) {
        if (j) out << '|';
        for (size_t r = 0; r < cols[j].size(); ++r) {
            if (r) out << ',';
            out << cols[j][r];
        }
    }
    return out.str();
}

inline Tableau tableau_from_text(const std::string& s, int n, int m) {
    if (s.empty()) return unit_tableau(n, m);
    std::vector<Column> cols;
    std::istringstream in(s);
    std::string piece;
    while (std::getline(in, piece, '|')) {
        Column col;
        std::istringstream centry(piece);
        std::string tok;
        while (std::getline(centry, tok, ',')) {
            try {
                size_t used = 0;
                const int v = std::stoi(tok, &used);
                while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used])))
                    ++used;
                if (used != tok.size()) detail::bad_payload("stray text in tableau entry '" + tok + "'");
                col.push_back(v);
            } catch (const Error&) {
                throw;
            } catch (const std::exception&) {
                detail::bad_payload("'" + tok + "' is not a tableau entry");
            }
        }
        if (col.empty()) detail::bad_payload("empty column in tableau text");
        cols.push_back(std::move(col));
    }
    return from_columns(n, m, cols);
}

inline Json fraction_to_json(const TableauFraction& f) {
    return Json{{"num", tableau_to_json(f.num)}, {"den", tableau_to_json(f.den)}};
}

inline TableauFraction fraction_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        detail::bad_payload("fraction object needs keys num, den");
    return TableauFraction{tableau_from_json(j["num"]), tableau_from_json(j["den"])};
}

// ---------------------------------------------------------------------------
// Monomials
// ---------------------------------------------------------------------------

inline Json monomial_to_json(const Monomial& mono) {
    Json out = Json::array();
    for (const auto& [v, e] : mono.factors) out.push_back(Json::array({v.first, v.second, e}));
    return out;
}

inline Monomial monomial_from_json(const Json& j) {
    if (!j.is_array()) detail::bad_payload("monomial must be an array of [i,s,mult] triples");
    Monomial out;
    for (const auto& jt : j) {
        if (!jt.is_array() || jt.size() != 3)
            detail::bad_payload("monomial factor must be a [i,s,mult] triple");
        const int i = static_cast<int>(detail::as_int(jt[0], "i"));
        const int s = static_cast<int>(detail::as_int(jt[1], "s"));
        out.multiply_by({i, s}, detail::as_int(jt[2], "mult"));
    }
    return out;
}

/// "Y[1,-1]^2 Y[2,-4]" in ascending (i,s) order; the unit monomial is "1".
inline std::string monomial_to_text(const Monomial& mono) {
    if (mono.is_unit()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [v, e] : mono.factors) {
        if (!first) out << ' ';
        first = false;
        out << "Y[" << v.first << ',' << v.second << ']';
        if (e != 1) out << '^' << e;
    }
    return out.str();
}

inline Monomial monomial_from_text(const std::string& s) {
    Monomial out;
    size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    skip_ws();
    if (pos >= s.size()) return out;
    if (s[pos] == '1') {
        size_t rest = pos + 1;
        while (rest < s.size() && std::isspace(static_cast<unsigned char>(s[rest]))) ++rest;
        if (rest >= s.size()) return out;
    }
    const auto read_int = [&]() -> long long {
        size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(s.substr(pos), &used);
        } catch (const std::exception&) {
            detail::bad_payload("expected an integer at '" + s.substr(pos) + "'");
        }
        pos += used;
        return v;
    };
    while (pos < s.size()) {
        if (s[pos] != 'Y' || pos + 1 >= s.size() || s[pos + 1] != '[')
            detail::bad_payload("expected Y[i,s] at '" + s.substr(pos) + "'");
        pos += 2;
        const long long i = read_int();
        if (pos >= s.size() || s[pos] != ',') detail::bad_payload("expected ',' inside Y[i,s]");
        ++pos;
        const long long sv = read_int();
        if (pos >= s.size() || s[pos] != ']') detail::bad_payload("expected ']' after Y[i,s]");
        ++pos;
        long long e = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            e = read_int();
        }
        out.multiply_by({static_cast<int>(i), static_cast<int>(sv)}, e);
        skip_ws();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Multisegments
// ---------------------------------------------------------------------------

inline Json multisegment_to_json(const Multisegment& ms) {
    Json out = Json::array();
    for (const auto& seg : canonical_multisegment(ms))
        out.push_back(Json::array({seg.b, seg.e}));
    return out;
}

inline Multisegment multisegment_from_json(const Json& j) {
    if (!j.is_array()) detail::bad_payload("multisegment must be an array of [b,e] pairs");
    Multisegment out;
    for (const auto& js : j) {
        if (!js.is_array() || js.size() != 2) detail::bad_payload("segment must be a [b,e] pair");
        Segment seg;
        seg.b = static_cast<int>(detail::as_int(js[0], "b"));
        seg.e = static_cast<int>(detail::as_int(js[1], "e"));
        if (seg.b > seg.e) detail::bad_payload("segment with b > e");
        out.push_back(seg);
    }
    return canonical_multisegment(out);
}

/**
 * "[b,e]+[b,e]+…" in display order: right endpoints descending, ties by
 * left endpoint descending.  The empty multisegment is the empty string.
 */
inline std::string multisegment_to_text(const Multisegment& ms) {
    Multisegment disp = ms;
    std::stable_sort(disp.begin(), disp.end(), [](const Segment& a, const Segment& b) {
        if (a.e != b.e) return a.e > b.e;
        return a.b > b.b;
    });
    std::ostringstream out;
    for (size_t i = 0; i < disp.size(); ++i) {
        if (i) out << '+';
        out << '[' << disp[i].b << ',' << disp[i].e << ']';
    }
    return out.str();
}

inline Multisegment multisegment_from_text(const std::string& s) {
    Multisegment out;
    size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    const auto read_int = [&]() -> int {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s.substr(pos), &used);
        } catch (const std::exception&) {
            detail::bad_payload("expected an integer at '" + s.substr(pos) + "'");
        }
        pos += used;
        return v;
    };
    skip_ws();
    while (pos < s.size()) {
        if (s[pos] != '[') detail::bad_payload("expected '[' at '" + s.substr(pos) + "'");
        ++pos;
        Segment seg;
        seg.b = read_int();
        if (pos >= s.size() || s[pos] != ',') detail::bad_payload("expected ',' inside segment");
        ++pos;
        seg.e = read_int();
        if (pos >= s.size() || s[pos] != ']') detail::bad_payload("expected ']' after segment");
        ++pos;
        if (seg.b > seg.e) detail::bad_payload("segment with b > e");
        out.push_back(seg);
        skip_ws();
        if (pos < s.size()) {
            if (s[pos] != '+') detail::bad_payload("expected '+' between segments");
            ++pos;
            skip_ws();
        }
    }
    return canonical_multisegment(out);
}

// ---------------------------------------------------------------------------
// Plucker polynomials
// ---------------------------------------------------------------------------

/// Print order of terms: dominance-descending by tableau key, ties lex.
inline std::vector<std::pair<Tableau, Int>> print_order(const PluckerPolynomial& p) {
    std::vector<std::pair<Tableau, Int>> out(p.terms.begin(), p.terms.end());
    std::vector<std::vector<long long>> keys(out.size());
    for (size_t i = 0; i < out.size(); ++i) keys[i] = dominance_key(out[i].first);
    std::vector<size_t> idx(out.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        if (keys[a] != keys[b]) return keys[a] > keys[b];
        return out[a].first < out[b].first;
    });
    std::vector<std::pair<Tableau, Int>> sorted;
    sorted.reserve(out.size());
    for (size_t i : idx) sorted.push_back(std::move(out[i]));
    return sorted;
}

inline Json polynomial_to_json(const PluckerPolynomial& p) {
    Json terms = Json::array();
    for (const auto& [t, c] : print_order(p)) {
        Json cols = Json::array();
        for (const auto& col : t.columns()) cols.push_back(col);
        terms.push_back(Json{{"coeff", detail::int_to_json(c)}, {"columns", std::move(cols)}});
    }
    return Json{{"n", p.n}, {"m", p.m}, {"frozen", p.frozen}, {"terms", std::move(terms)}};
}

inline PluckerPolynomial polynomial_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("frozen") || !j.contains("terms"))
        detail::bad_payload("polynomial object needs keys frozen, terms");
    PluckerPolynomial p;
    if (!j["frozen"].is_array()) detail::bad_payload("polynomial frozen must be an array");
    for (const auto& e : j["frozen"]) p.frozen.push_back(detail::as_int(e, "frozen exponent"));
    if (j.contains("n")) p.n = static_cast<int>(detail::as_int(j["n"], "n"));
    if (j.contains("m")) p.m = static_cast<int>(detail::as_int(j["m"], "m"));
    if (!j["terms"].is_array()) detail::bad_payload("polynomial terms must be an array");
    for (const auto& jt : j["terms"]) {
        if (!jt.is_object() || !jt.contains("coeff") || !jt.contains("columns"))
            detail::bad_payload("polynomial term needs keys coeff, columns");
        const Int c = detail::int_from_json(jt["coeff"], "coeff");
        std::vector<Column> cols;
        for (const auto& jc : jt["columns"]) {
            if (!jc.is_array()) detail::bad_payload("term column must be an array");
            Column col;
            for (const auto& e : jc) col.push_back(static_cast<int>(detail::as_int(e, "entry")));
            cols.push_back(std::move(col));
        }
        if (p.n == 0) {
            if (cols.empty()) detail::bad_payload("cannot infer n from a unit term");
            p.n = static_cast<int>(cols.front().size());
            p.m = p.n + static_cast<int>(p.frozen.size()) - 1;
        }
        const Tableau t = from_columns(p.n, p.m, cols);
        if (c != 0) p.terms[t] += c;
    }
    if (p.n == 0) detail::bad_payload("cannot infer dimensions of a zero polynomial; add n and m");
    if (static_cast<int>(p.frozen.size()) != p.m - p.n + 1)
        detail::bad_payload("frozen exponent list has the wrong length");
    for (auto it = p.terms.begin(); it != p.terms.end();)
        it = it->second == 0 ? p.terms.erase(it) : std::next(it);
    return p;
}

namespace detail {

inline std::string term_text(const Tableau& t) {
    if (t.is_unit()) return "1";
    std::ostringstream out;
    for (const auto& col : t.columns()) {
        out << "P[";
        for (size_t r = 0; r < col.size(); ++r) {
            if (r) out << ',';
            out << col[r];
        }
        out << ']';
    }
    return out.str();
}

} // namespace detail

/**
 * Human-readable polynomial: optional frozen prefactor "P[..]^e … * ( … )",
 * then signed terms in print order.  The zero polynomial is "0".
 */
inline std::string polynomial_to_text(const PluckerPolynomial& p) {
    std::ostringstream body;
    const auto ordered = print_order(p);
    if (ordered.empty()) {
        body << '0';
    } else {
        bool first = true;
        for (const auto& [t, c] : ordered) {
            const Int mag = boost::multiprecision::abs(c);
            if (first) {
                if (c < 0) body << '-';
            } else {
                body << (c < 0 ? " - " : " + ");
            }
            first = false;
            const std::string word = detail::term_text(t);
            if (mag != 1) {
                body << mag.str();
                if (word != "1") body << ' ' << word;
            } else {
                body << word;
            }
        }
    }
    if (p.frozen_trivial()) return body.str();
    std::ostringstream out;
    bool firstf = true;
    for (size_t i = 0; i < p.frozen.size(); ++i) {
        if (p.frozen[i] == 0) continue;
        if (!firstf) out << ' ';
        firstf = false;
        out << "P[";
        for (int r = 0; r < p.n; ++r) {
            if (r) out << ',';
            out << static_cast<int>(i) + 1 + r;
        }
        out << ']';
        if (p.frozen[i] != 1) out << '^' << p.frozen[i];
    }
    out << " * ( " << body.str() << " )";
    return out.str();
}

// ---------------------------------------------------------------------------
// q-character formulas
// ---------------------------------------------------------------------------

inline Json qchar_to_json(const QCharFormula& f) {
    Json terms = Json::array();
    for (const auto& [key, c] : f.terms) {
        Json factors = Json::array();
        for (const auto& v : key) factors.push_back(Json::array({v.first, v.second}));
        terms.push_back(Json{{"coeff", c}, {"factors", std::move(factors)}});
    }
    return Json{{"terms", std::move(terms)}};
}

inline QCharFormula qchar_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("terms"))
        detail::bad_payload("q-character object needs key terms");
    QCharFormula f;
    for (const auto& jt : j["terms"]) {
        if (!jt.is_object() || !jt.contains("coeff") || !jt.contains("factors"))
            detail::bad_payload("q-character term needs keys coeff, factors");
        std::vector<YVar> key;
        for (const auto& jf : jt["factors"]) {
            if (!jf.is_array() || jf.size() != 2)
                detail::bad_payload("q-character factor must be an [i,s] pair");
            key.emplace_back(static_cast<int>(detail::as_int(jf[0], "i")),
                             static_cast<int>(detail::as_int(jf[1], "s")));
        }
        std::sort(key.begin(), key.end());
        const long long c = detail::as_int(jt["coeff"], "coeff");
        if (c != 0) f.terms[key] += c;
    }
    for (auto it = f.terms.begin(); it != f.terms.end();)
        it = it->second == 0 ? f.terms.erase(it) : std::next(it);
    return f;
}

/// Signed terms "[Y[i,s]][Y[j,t]]" in key order; the unit class prints as "1".
inline std::string qchar_to_text(const QCharFormula& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : f.terms) {
        const long long mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::ostringstream word;
        for (const auto& v : key) word << "[Y[" << v.first << ',' << v.second << "]]";
        const std::string w = word.str().empty() ? std::string("1") : word.str();
        if (mag != 1) {
            out << mag;
            if (w != "1") out << ' ' << w;
        } else {
            out << w;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Rational matrices
// ---------------------------------------------------------------------------

inline Json matrix_to_json(const RationalMatrix& x) {
    Json out = Json::array();
    for (const auto& row : x.a) {
        Json jr = Json::array();
        for (const auto& v : row) jr.push_back(rat_to_text(v));
        out.push_back(std::move(jr));
    }
    return out;
}

inline RationalMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) detail::bad_payload("matrix must be a nonempty array of rows");
    std::vector<std::vector<Rat>> rows;
    for (const auto& jr : j) {
        if (!jr.is_array()) detail::bad_payload("matrix row must be an array");
        std::vector<Rat> row;
        for (const auto& e : jr) {
            if (e.is_string())
                row.push_back(rat_from_text(e.get<std::string>()));
            else if (e.is_number_integer())
                row.push_back(Rat(e.get<long long>()));
            else
                detail::bad_payload("matrix entry must be a \"p/q\" string or integer");
        }
        rows.push_back(std::move(row));
    }
    const int n = static_cast<int>(rows.size());
    const int m = static_cast<int>(rows.front().size());
    return make_rational_matrix(n, m, std::move(rows));
}

// ---------------------------------------------------------------------------
// Seeds and g-vectors
// ---------------------------------------------------------------------------

inline Json seed_to_json(const Seed& s) {
    Json vertices = Json::array();
    for (const auto& v : s.quiver.vertices)
        vertices.push_back(Json{{"id", detail::vertex_name(v)},
                                {"frozen", s.quiver.is_frozen(v)},
                                {"tableau", tableau_to_json(s.label(v))}});
    Json arrows = Json::array();
    for (const auto& [a, b] : s.quiver.arrows)
        arrows.push_back(Json::array({detail::vertex_name(a), detail::vertex_name(b)}));
    return Json{{"vertices", std::move(vertices)}, {"arrows", std::move(arrows)}};
}

/// Parse "(i,t)" back into a vertex id.
inline VertexId vertex_from_text(const std::string& s) {
    size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    const auto read_int = [&]() -> int {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s.substr(pos), &used);
        } catch (const std::exception&) {
            detail::bad_payload("'" + s + "' is not a vertex id (i,t)");
        }
        pos += used;
        return v;
    };
    skip_ws();
    if (pos >= s.size() || s[pos] != '(') detail::bad_payload("'" + s + "' is not a vertex id (i,t)");
    ++pos;
    const int i = read_int();
    skip_ws();
    if (pos >= s.size() || s[pos] != ',') detail::bad_payload("'" + s + "' is not a vertex id (i,t)");
    ++pos;
    const int t = read_int();
    skip_ws();
    if (pos >= s.size() || s[pos] != ')') detail::bad_payload("'" + s + "' is not a vertex id (i,t)");
    ++pos;
    skip_ws();
    if (pos != s.size()) detail::bad_payload("stray text after vertex id '" + s + "'");
    return {i, t};
}

inline Seed seed_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
        detail::bad_payload("seed object needs keys vertices, arrows");
    std::vector<VertexId> vertices;
    std::set<VertexId> frozen;
    std::map<VertexId, Tableau> labels;
    for (const auto& jv : j["vertices"]) {
        if (!jv.is_object() || !jv.contains("id") || !jv.contains("frozen") ||
            !jv.contains("tableau"))
            detail::bad_payload("seed vertex needs keys id, frozen, tableau");
        if (!jv["id"].is_string()) detail::bad_payload("vertex id must be a string");
        const VertexId v = vertex_from_text(jv["id"].get<std::string>());
        if (!jv["frozen"].is_boolean()) detail::bad_payload("vertex frozen must be a boolean");
        vertices.push_back(v);
        if (jv["frozen"].get<bool>()) frozen.insert(v);
        labels.emplace(v, tableau_from_json(jv["tableau"]));
    }
    std::vector<std::pair<VertexId, VertexId>> arrows;
    for (const auto& ja : j["arrows"]) {
        if (!ja.is_array() || ja.size() != 2 || !ja[0].is_string() || !ja[1].is_string())
            detail::bad_payload("arrow must be a pair of vertex id strings");
        arrows.emplace_back(vertex_from_text(ja[0].get<std::string>()),
                            vertex_from_text(ja[1].get<std::string>()));
    }
    if (labels.empty()) detail::bad_payload("seed has no vertices");
    const int n = labels.begin()->second.n;
    const int m = labels.begin()->second.m;
    return make_seed(n, m, make_quiver(vertices, frozen, arrows), labels);
}

inline Json gvector_to_json(const GVector& g) {
    return Json{{"n", g.n}, {"ell", g.ell}, {"grid", g.grid}};
}

/// One line per row i = 1..n−1 of the grid, entries space-separated.
inline std::string gvector_to_text(const GVector& g) {
    std::ostringstream out;
    for (int i = 1; i <= g.n - 1; ++i) {
        if (i > 1) out << '\n';
        for (int t = 0; t <= g.ell; ++t) {
            if (t) out << ' ';
            out << g.at(i, t);
        }
    }
    return out.str();
}

} // namespace grtab
