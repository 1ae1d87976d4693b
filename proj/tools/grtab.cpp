/**
 * @file grtab.cpp
 * @brief Command-line front end for the grtab library.
 *
 * Subcommands: convert, factor, ch, qchar, reality, prime, zelevinsky, lm,
 * gvector, seed, mutate, closure, immanant-check, eval.  Payloads are passed
 * as a positional argument ("-" reads stdin) in either the JSON or the text
 * grammar of docs/formats.md; outputs are text by default and JSON with
 * --json.  Exit codes: 0 success, 1 input error, 2 refused (k-cap),
 * 3 localization (non-clearing denominator, Laurent result still printed).
 */

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "grtab/serialize.hpp"

namespace {

using namespace grtab;

struct Options {
    bool json = false;
    int threads = 1;
    int max_k = kDefaultCharacterCap;
    int n = 0;
    int m = 0;
    int ell = -1;
};

std::string read_stdin() {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
}

std::string trim(const std::string& s) {
    size_t a = 0;
    size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

/// Resolve a payload argument: "-" reads stdin, anything else is literal.
std::string payload_of(const std::string& raw) {
    if (raw == "-") return trim(read_stdin());
    return trim(raw);
}

Json parse_json(const std::string& s) {
    try {
        return Json::parse(s);
    } catch (const std::exception& e) {
        fail(ErrorCode::InvalidInput, std::string("malformed JSON payload: ") + e.what());
    }
}

/// Text payloads need explicit dimensions from --n/--m.
void need_dims(const Options& opt) {
    if (opt.n <= 0 || opt.m <= 0)
        fail(ErrorCode::InvalidInput, "this payload needs --n and --m");
}

void check_dims(const Options& opt, int n, int m) {
    if ((opt.n > 0 && opt.n != n) || (opt.m > 0 && opt.m != m))
        fail(ErrorCode::InvalidInput, "payload dimensions disagree with --n/--m");
}

Tableau parse_tableau_payload(const std::string& s, const Options& opt) {
    if (!s.empty() && s[0] == '{') {
        Tableau t = tableau_from_json(parse_json(s));
        check_dims(opt, t.n, t.m);
        return t;
    }
    need_dims(opt);
    return tableau_from_text(s, opt.n, opt.m);
}

Monomial parse_monomial_payload(const std::string& s) {
    if (!s.empty() && s[0] == '[') return monomial_from_json(parse_json(s));
    return monomial_from_text(s);
}

Multisegment parse_multisegment_payload(const std::string& s) {
    // JSON is an array of arrays; the text grammar puts a digit or sign
    // right after the opening bracket.
    if (!s.empty() && s[0] == '[') {
        size_t k = 1;
        while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
        if (k < s.size() && (s[k] == '[' || s[k] == ']'))
            return multisegment_from_json(parse_json(s));
    }
    return multisegment_from_text(s);
}

RationalMatrix parse_matrix_payload(const std::string& s) {
    return matrix_from_json(parse_json(s));
}

Seed parse_seed_payload(const std::string& s, const Options& opt) {
    if (s.empty()) {
        need_dims(opt);
        return initial_seed(opt.n, opt.m);
    }
    Seed seed = seed_from_json(parse_json(s));
    check_dims(opt, seed.n, seed.m);
    return seed;
}

void emit(const std::string& line) { std::cout << line << '\n'; }

void emit_json(const Json& j) { std::cout << j.dump() << '\n'; }

std::string fraction_to_text(const TableauFraction& f) {
    std::string out = f.num.is_unit() ? "1" : tableau_to_text(f.num);
    if (!f.den.is_unit()) out += " / " + tableau_to_text(f.den);
    return out;
}

// ---------------------------------------------------------------------------
// Subcommand bodies
// ---------------------------------------------------------------------------

int run_convert(const Options& opt, const std::string& from, const std::string& to,
                const std::string& raw) {
    const std::string s = payload_of(raw);
    Monomial mono;
    if (from == "tableau") {
        mono = psi(parse_tableau_payload(s, opt));
    } else if (from == "monomial") {
        mono = parse_monomial_payload(s);
    } else if (from == "multisegment") {
        mono = multisegment_to_monomial(parse_multisegment_payload(s));
    } else {
        fail(ErrorCode::InvalidInput, "--from must be tableau, monomial or multisegment");
    }
    if (to == "tableau") {
        need_dims(opt);
        const Tableau t = phi_tilde(mono, opt.n, opt.m);
        if (opt.json)
            emit_json(tableau_to_json(t));
        else
            emit(tableau_to_text(t));
    } else if (to == "monomial") {
        if (opt.json)
            emit_json(monomial_to_json(mono));
        else
            emit(monomial_to_text(mono));
    } else if (to == "multisegment") {
        const Multisegment ms = monomial_to_multisegment(mono);
        if (opt.json)
            emit_json(multisegment_to_json(ms));
        else
            emit(multisegment_to_text(ms));
    } else {
        fail(ErrorCode::InvalidInput, "--to must be tableau, monomial or multisegment");
    }
    return 0;
}

int run_factor(const Options& opt, const std::string& raw) {
    const Tableau t = parse_tableau_payload(payload_of(raw), opt);
    const SmallGapsForm sg = small_gaps_form(t);
    if (opt.json) {
        emit_json(Json{{"prime", tableau_to_json(sg.prime)},
                       {"correction", fraction_to_json(sg.correction)}});
    } else {
        emit("small-gaps: " + (sg.prime.is_unit() ? "1" : tableau_to_text(sg.prime)));
        emit("trivial: " + fraction_to_text(sg.correction));
    }
    return 0;
}

int run_ch(const Options& opt, const std::string& raw) {
    const Tableau t = parse_tableau_payload(payload_of(raw), opt);
    const ChResult res = ch(t, opt.max_k, opt.threads);
    if (opt.json)
        emit_json(polynomial_to_json(res.value));
    else
        emit(polynomial_to_text(res.value));
    if (!res.in_ring) {
        std::cerr << "warning: character lives in the localization; printed the Laurent form\n";
        return 3;
    }
    return 0;
}

int run_qchar(const Options& opt, const std::string& raw) {
    if (opt.n <= 0) fail(ErrorCode::InvalidInput, "qchar needs the rank --n");
    const Monomial mono = parse_monomial_payload(payload_of(raw));
    const QCharFormula f = qchar_formula(mono, opt.n, opt.max_k, opt.threads);
    if (opt.json)
        emit_json(qchar_to_json(f));
    else
        emit(qchar_to_text(f));
    return 0;
}

int run_reality(const Options& opt, const std::string& raw) {
    const Tableau t = parse_tableau_payload(payload_of(raw), opt);
    const RealityResult res = reality_test(t, opt.max_k, opt.threads);
    if (opt.json) {
        emit_json(Json{{"real", res.real}, {"defect", polynomial_to_json(res.defect)}});
    } else {
        emit(std::string("real: ") + (res.real ? "true" : "false"));
        if (!res.real) emit("defect: " + polynomial_to_text(res.defect));
    }
    return 0;
}

int run_prime(const Options& opt, const std::string& raw) {
    const Tableau t = parse_tableau_payload(payload_of(raw), opt);
    const PrimenessResult res = primeness_test(t, opt.max_k, opt.threads);
    if (opt.json) {
        Json witness;
        if (res.witness)
            witness = Json::array({tableau_to_json(res.witness->first),
                                   tableau_to_json(res.witness->second)});
        emit_json(Json{{"prime", res.prime}, {"witness", std::move(witness)}});
    } else {
        emit(std::string("prime: ") + (res.prime ? "true" : "false"));
        if (res.witness)
            emit("witness: " + tableau_to_text(res.witness->first) + " * " +
                 tableau_to_text(res.witness->second));
    }
    return 0;
}

int run_zelevinsky(const Options& opt, const std::string& raw) {
    const Multisegment dual = zelevinsky_dual(parse_multisegment_payload(payload_of(raw)));
    if (opt.json)
        emit_json(multisegment_to_json(dual));
    else
        emit(multisegment_to_text(dual));
    return 0;
}

int run_lm(const Options& opt, const std::string& raw) {
    const LMResult res = lm_reality(parse_multisegment_payload(payload_of(raw)));
    const char* status = "Real";
    switch (res.status) {
        case LMStatus::Real: status = "Real"; break;
        case LMStatus::NonReal4231: status = "NonReal4231"; break;
        case LMStatus::NonReal3412: status = "NonReal3412"; break;
        case LMStatus::NotApplicable: status = "NotApplicable"; break;
    }
    const bool nonreal =
        res.status == LMStatus::NonReal4231 || res.status == LMStatus::NonReal3412;
    if (opt.json) {
        emit_json(Json{{"status", status},
                       {"witness", nonreal ? multisegment_to_json(res.witness) : Json()}});
    } else {
        emit(std::string("status: ") + status);
        if (nonreal) emit("witness: " + multisegment_to_text(res.witness));
    }
    return 0;
}

int run_gvector(const Options& opt, const std::string& kind, const std::string& raw) {
    const std::string s = payload_of(raw);
    std::string k = kind;
    if (k.empty()) {
        if (!s.empty() && (s[0] == 'Y' || s[0] == '[')) k = "monomial";
        else k = "tableau";
    }
    GVector g;
    if (k == "monomial") {
        if (opt.n <= 0 || opt.ell < 0)
            fail(ErrorCode::InvalidInput, "gvector on a monomial needs --n and --ell");
        g = g_vector(parse_monomial_payload(s), opt.n, opt.ell);
    } else if (k == "tableau") {
        const Tableau t = parse_tableau_payload(s, opt);
        const int ell = opt.ell >= 0 ? opt.ell : t.m - t.n - 1;
        g = g_vector(t, ell);
    } else {
        fail(ErrorCode::InvalidInput, "--kind must be tableau or monomial");
    }
    if (opt.json)
        emit_json(gvector_to_json(g));
    else
        emit(gvector_to_text(g));
    return 0;
}

int run_seed(const Options& opt) {
    need_dims(opt);
    emit_json(seed_to_json(initial_seed(opt.n, opt.m)));
    return 0;
}

std::vector<VertexId> read_steps(const std::string& arg) {
    std::string text = trim(arg);
    if (text.empty() || text[0] != '[') {
        std::ifstream in(arg);
        if (!in) fail(ErrorCode::InvalidInput, "cannot open steps file '" + arg + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = trim(buf.str());
    }
    const Json j = parse_json(text);
    if (!j.is_array()) fail(ErrorCode::InvalidInput, "steps must be a JSON array of vertex ids");
    std::vector<VertexId> out;
    for (const auto& e : j) {
        if (!e.is_string()) fail(ErrorCode::InvalidInput, "steps entries must be id strings");
        out.push_back(vertex_from_text(e.get<std::string>()));
    }
    return out;
}

int run_mutate(const Options& opt, const std::string& raw, const std::vector<std::string>& ats,
               const std::string& steps_arg) {
    Seed seed = parse_seed_payload(raw.empty() ? "" : payload_of(raw), opt);
    std::vector<VertexId> steps;
    for (const auto& a : ats) steps.push_back(vertex_from_text(a));
    if (!steps_arg.empty()) {
        const auto more = read_steps(steps_arg);
        steps.insert(steps.end(), more.begin(), more.end());
    }
    if (steps.empty()) fail(ErrorCode::InvalidInput, "mutate needs --at or --steps");
    for (const auto& v : steps) seed = mutate_seed(seed, v);
    emit_json(seed_to_json(seed));
    return 0;
}

int run_closure(const Options& opt, const std::string& raw, int depth, long long max_seeds) {
    const Seed start = parse_seed_payload(raw.empty() ? "" : payload_of(raw), opt);
    const ClosureResult res = cluster_closure(start, depth, max_seeds);
    if (opt.json) {
        Json vars = Json::array();
        for (const auto& t : res.mutable_variables) vars.push_back(tableau_to_json(t));
        emit_json(Json{{"seed_count", res.seeds.size()},
                       {"complete", res.complete},
                       {"mutable_variables", std::move(vars)}});
    } else {
        emit("seeds: " + std::to_string(res.seeds.size()));
        emit("variables: " + std::to_string(res.mutable_variables.size()));
        emit(std::string("complete: ") + (res.complete ? "true" : "false"));
        for (const auto& t : res.mutable_variables) emit("  " + tableau_to_text(t));
    }
    return 0;
}

int run_immanant_check(const Options& opt, const std::string& raw, const std::string& mat) {
    if (mat.empty()) fail(ErrorCode::InvalidInput, "immanant-check needs --matrix");
    const Tableau t = parse_tableau_payload(payload_of(raw), opt);
    const RationalMatrix x = parse_matrix_payload(payload_of(mat));
    const ImmanantCheck res = immanant_check(t, x, opt.max_k, opt.threads);
    if (opt.json) {
        emit_json(Json{{"character", rat_to_text(res.character_value)},
                       {"immanant", rat_to_text(res.immanant_value)},
                       {"match", res.match}});
    } else {
        emit("character: " + rat_to_text(res.character_value));
        emit("immanant: " + rat_to_text(res.immanant_value));
        emit(std::string("match: ") + (res.match ? "true" : "false"));
    }
    return 0;
}

int run_eval(const Options& opt, const std::string& raw, const std::string& mat) {
    if (mat.empty()) fail(ErrorCode::InvalidInput, "eval needs --matrix");
    const PluckerPolynomial p = polynomial_from_json(parse_json(payload_of(raw)));
    const RationalMatrix x = parse_matrix_payload(payload_of(mat));
    check_dims(opt, p.n, p.m);
    const Rat v = evaluate(p, x);
    if (opt.json)
        emit_json(Json{{"value", rat_to_text(v)}});
    else
        emit(rat_to_text(v));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tableaux, characters and cluster seeds for Grassmannian modules"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env = std::getenv("GRTAB_MAX_K")) {
        try {
            opt.max_k = std::stoi(env);
        } catch (const std::exception&) {
            std::cerr << "error: GRTAB_MAX_K is not an integer\n";
            return 1;
        }
    }
    app.add_flag("--json", opt.json, "emit JSON instead of text");
    app.add_option("--threads", opt.threads, "worker threads for character sweeps")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-k", opt.max_k, "column-count cap for character expansions");

    const auto sub = [&](const char* name, const char* desc) {
        CLI::App* cmd = app.add_subcommand(name, desc);
        cmd->fallthrough(); // global flags may follow the subcommand
        return cmd;
    };
    const auto add_dims = [&](CLI::App* cmd) {
        cmd->add_option("--n", opt.n, "column height n");
        cmd->add_option("--m", opt.m, "alphabet size m");
    };

    std::string payload = "-";
    std::string from_kind;
    std::string to_kind;
    std::string gv_kind;
    std::string matrix_arg;
    std::string steps_arg;
    std::vector<std::string> at_args;
    int depth = -1;
    long long max_seeds = 100000;

    CLI::App* convert = sub("convert", "convert between tableau, monomial and multisegment");
    add_dims(convert);
    convert->add_option("--from", from_kind, "input kind")->required();
    convert->add_option("--to", to_kind, "output kind")->required();
    convert->add_option("payload", payload, "input value ('-' reads stdin)");

    CLI::App* factor = sub("factor", "small-gaps factorization of a tableau");
    add_dims(factor);
    factor->add_option("payload", payload, "tableau ('-' reads stdin)");

    CLI::App* chc = sub("ch", "character of a tableau");
    add_dims(chc);
    chc->add_option("payload", payload, "tableau ('-' reads stdin)");

    CLI::App* qchar = sub("qchar", "truncated q-character of a dominant monomial");
    add_dims(qchar);
    qchar->add_option("payload", payload, "monomial ('-' reads stdin)");

    CLI::App* reality = sub("reality", "reality test for a tableau module");
    add_dims(reality);
    reality->add_option("payload", payload, "tableau ('-' reads stdin)");

    CLI::App* prime = sub("prime", "primeness test for a tableau module");
    add_dims(prime);
    prime->add_option("payload", payload, "tableau ('-' reads stdin)");

    CLI::App* zel = sub("zelevinsky", "Zelevinsky dual of a multisegment");
    zel->add_option("payload", payload, "multisegment ('-' reads stdin)");

    CLI::App* lm = sub("lm", "Lapid-Minguez pattern test for a multisegment");
    lm->add_option("payload", payload, "multisegment ('-' reads stdin)");

    CLI::App* gvector = sub("gvector", "g-vector of a tableau or dominant monomial");
    add_dims(gvector);
    gvector->add_option("--ell", opt.ell, "largest spectral column index of the grid");
    gvector->add_option("--kind", gv_kind, "payload kind: tableau or monomial");
    gvector->add_option("payload", payload, "tableau or monomial ('-' reads stdin)");

    CLI::App* seed = sub("seed", "initial cluster seed of Gr(n, m)");
    add_dims(seed);

    CLI::App* mutate = sub("mutate", "mutate a cluster seed");
    add_dims(mutate);
    mutate->add_option("--at", at_args, "vertex id \"(i,t)\" to mutate at (repeatable)")
        ->expected(1)
        ->allow_extra_args(false)
        ->take_all();
    mutate->add_option("--steps", steps_arg, "JSON array of vertex ids, inline or a file path");
    mutate->add_option("payload", payload, "seed JSON ('-' reads stdin; omit for the initial seed)");

    CLI::App* closure = sub("closure", "exhaustive mutation closure of a seed");
    add_dims(closure);
    closure->add_option("--depth", depth, "maximum mutation depth (-1 = unbounded)");
    closure->add_option("--max-seeds", max_seeds, "seed budget before truncation");
    closure->add_option("payload", payload, "seed JSON ('-' reads stdin; omit for the initial seed)");

    CLI::App* imm = sub("immanant-check", "character vs immanant at a matrix point");
    add_dims(imm);
    imm->add_option("--matrix", matrix_arg, "rational matrix as JSON rows of \"p/q\" strings");
    imm->add_option("payload", payload, "small-gaps tableau ('-' reads stdin)");

    CLI::App* eval = sub("eval", "evaluate a polynomial at a matrix point");
    add_dims(eval);
    eval->add_option("--matrix", matrix_arg, "rational matrix as JSON rows of \"p/q\" strings");
    eval->add_option("payload", payload, "polynomial JSON ('-' reads stdin)");

    // The seed and closure subcommands default to the initial seed when no
    // payload is given; track whether the user supplied one.
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (convert->parsed()) return run_convert(opt, from_kind, to_kind, payload);
        if (factor->parsed()) return run_factor(opt, payload);
        if (chc->parsed()) return run_ch(opt, payload);
        if (qchar->parsed()) return run_qchar(opt, payload);
        if (reality->parsed()) return run_reality(opt, payload);
        if (prime->parsed()) return run_prime(opt, payload);
        if (zel->parsed()) return run_zelevinsky(opt, payload);
        if (lm->parsed()) return run_lm(opt, payload);
        if (gvector->parsed()) return run_gvector(opt, gv_kind, payload);
        if (seed->parsed()) return run_seed(opt);
        if (mutate->parsed())
            return run_mutate(opt, mutate->count("payload") ? payload : "", at_args, steps_arg);
        if (closure->parsed())
            return run_closure(opt, closure->count("payload") ? payload : "", depth, max_seeds);
        if (imm->parsed()) return run_immanant_check(opt, payload, matrix_arg);
        if (eval->parsed()) return run_eval(opt, payload, matrix_arg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::KTooLarge ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
