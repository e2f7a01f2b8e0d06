#include "gonil/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>

#include "gonil/search.hpp"

#ifndef GONIL_VERSION
#define GONIL_VERSION "0.0.0"
#endif

namespace gonil {

namespace {

std::string trim(std::string s) {
    const auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!s.empty() && ws(s.back())) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && ws(s[i])) ++i;
    return s.substr(i);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(trim(cur));
    return out;
}

bool looks_numeric(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isdigit(c) || c == '-' || c == '+' || c == '/' || c == '.' || c == 'e' || c == 'E';
    });
}

}  // namespace

Vector parse_vector_arg(const std::string& raw, const LieAlgebra& g) {
    std::string text = trim(raw);
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']') throw InputError("vector '" + raw + "': missing closing bracket");
        text = text.substr(1, text.size() - 2);
    }
    if (text.find(',') != std::string::npos || looks_numeric(text)) {
        Vector v;
        for (auto& part : split(text, ',')) {
            if (part.size() >= 2 && part.front() == '"' && part.back() == '"') part = part.substr(1, part.size() - 2);
            v.push_back(Rational::parse(part));
        }
        if (v.size() != g.dim())
            throw InputError("vector '" + raw + "' has " + std::to_string(v.size()) + " entries, expected " +
                             std::to_string(g.dim()));
        return v;
    }
    // Linear combination of basis names.
    Vector v(g.dim());
    std::size_t pos = 0;
    bool first = true;
    while (pos < text.size()) {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        if (pos >= text.size()) break;
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw InputError("vector '" + raw + "': expected + or - at position " + std::to_string(pos));
        }
        first = false;
        std::size_t end = pos;
        while (end < text.size() && text[end] != '+' && text[end] != '-') ++end;
        if (end < text.size() && end > pos && text[end] == '-' && text[end - 1] == '/')
            throw InputError("vector '" + raw + "': negative denominators are not allowed");
        std::string term = trim(text.substr(pos, end - pos));
        pos = end;
        Rational coeff(1);
        std::string name = term;
        if (const auto star = term.find('*'); star != std::string::npos) {
            coeff = Rational::parse(trim(term.substr(0, star)));
            name = trim(term.substr(star + 1));
        }
        std::size_t idx = g.dim();
        for (std::size_t i = 0; i < g.dim(); ++i)
            if (g.name(i) == name) idx = i;
        if (idx == g.dim()) throw InputError("vector '" + raw + "': unknown basis element '" + name + "'");
        v[idx] += sign > 0 ? coeff : -coeff;
    }
    return v;
}

std::string vector_expression(std::span<const Rational> v, const LieAlgebra& g) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        const Rational a = v[i].abs();
        if (out.empty())
            out += v[i].sign() < 0 ? "-" : "";
        else
            out += v[i].sign() < 0 ? " - " : " + ";
        if (a != Rational(1)) out += a.str() + "*";
        out += g.name(i);
    }
    return out.empty() ? "0" : out;
}

namespace {

struct Context {
    std::ostream& out;
    std::ostream& err;
    std::string convention_flag;
    std::string out_path;
};

void emit(Context& ctx, const std::string& command, const std::string& digest, std::optional<std::uint64_t> seed,
          Json body) {
    Json env{{"tool_version", GONIL_VERSION}, {"input_digest", "sha256:" + digest}, {"command", command}};
    if (seed) env["seed"] = *seed;
    env["body"] = std::move(body);
    const std::string text = env.dump(2) + "\n";
    if (ctx.out_path.empty()) {
        ctx.out << text;
    } else {
        std::ofstream f(ctx.out_path, std::ios::binary | std::ios::trunc);
        if (!f) throw InputError("cannot write '" + ctx.out_path + "'");
        f << text;
    }
}

struct Loaded {
    SpaceFile file;
    std::string digest;
};

Loaded load(Context& ctx, const std::string& path) {
    std::string bytes;
    SpaceFile f = load_space_file(path, &bytes);
    if (!ctx.convention_flag.empty()) f.convention = *parse_convention(ctx.convention_flag);
    return {std::move(f), sha256_hex(bytes)};
}

/// Theorem checks are written for the mostly-plus normalization.
ReductiveSpace normalized(const SpaceFile& f) {
    const ReductiveSpace& r = f.space;
    if (f.convention == SignatureConvention::MostlyPlus) return r;
    return ReductiveSpace::build(r.algebra(), r.h_span(), r.m_span(), BilinearForm(Rational(-1) * r.metric().gram()));
}

Json vector_json(std::span<const Rational> v, const LieAlgebra& g) {
    return {{"coords", to_json(v)}, {"expr", vector_expression(v, g)}};
}

int cmd_check_algebra(Context& ctx, const std::string& path) {
    const std::string bytes = read_file(path);
    const std::string digest = sha256_hex(bytes);
    Json body;
    try {
        SpaceFile f = parse_space_text(bytes);
        const ReductiveSpace& r = f.space;
        const LieAlgebra& g = r.algebra();
        body["dim"] = g.dim();
        body["jacobi"] = "ok";
        body["reductive"] = "ok";
        body["h_dim"] = r.h_dim();
        body["m_dim"] = r.m_dim();
        body["lower_central_series"] = to_json(lower_central_series(g));
        body["derived"] = to_json(derived_subalgebra(g));
        bool closed = true;
        try {
            const LieAlgebra n = subalgebra(g, r.m_span());
            body["m_subalgebra"] = true;
            body["m_series"] = to_json(lower_central_series(n));
        } catch (const InputError&) {
            closed = false;
        }
        if (!closed) body["m_subalgebra"] = false;
        if (!f.description.empty()) body["description"] = f.description;
        emit(ctx, "check-algebra", digest, std::nullopt, body);
        return 0;
    } catch (const AlgebraError& e) {
        body = {{"jacobi", "fail"}, {"error", e.what()}};
    } catch (const ValidationError& e) {
        body = {{"jacobi", "ok"},
                {"reductive", "fail"},
                {"kind", to_string(e.kind())},
                {"witness", e.witness()},
                {"error", e.what()}};
    }
    emit(ctx, "check-algebra", digest, std::nullopt, body);
    return 1;
}

int cmd_signature(Context& ctx, const std::string& path) {
    const Loaded l = load(ctx, path);
    const BilinearForm& f = l.file.space.metric();
    Json body{{"signature", to_json(signature(f))},
              {"convention", to_string(l.file.convention)},
              {"lorentz", is_lorentz(f, l.file.convention)},
              {"definite", is_definite(f)},
              {"nondegenerate", is_nondegenerate(f)},
              {"radical", to_json(radical(f))}};
    emit(ctx, "signature", l.digest, std::nullopt, body);
    return 0;
}

int cmd_natred(Context& ctx, const std::string& path) {
    const Loaded l = load(ctx, path);
    const NaturalReductivity nr = is_naturally_reductive(l.file.space);
    Json body{{"naturally_reductive", nr.holds}};
    if (nr.witness) {
        const auto& w = *nr.witness;
        body["witness"] = {{"xi", w[0]}, {"zeta", w[1]}, {"eta", w[2]}};
        body["value"] = nr.value.str();
    }
    emit(ctx, "natred", l.digest, std::nullopt, body);
    return nr.holds ? 0 : 1;
}

int cmd_geodesic_vector(Context& ctx, const std::string& path, const std::string& xi_text) {
    const Loaded l = load(ctx, path);
    const LieAlgebra& g = l.file.space.algebra();
    const Vector xi = parse_vector_arg(xi_text, g);
    const auto k = geodesic_vector_k(l.file.space, xi);
    Json body{{"xi", vector_json(xi, g)}, {"geodesic", k.has_value()}};
    if (k) {
        body["k"] = k->str();
        body["affine_parameter"] = affine_parameter(*k, std::nullopt).expression;
    }
    emit(ctx, "geodesic-vector", l.digest, std::nullopt, body);
    return k ? 0 : 1;
}

int cmd_solve_alpha(Context& ctx, const std::string& path, const std::string& xi_text) {
    const Loaded l = load(ctx, path);
    const LieAlgebra& g = l.file.space.algebra();
    const Vector xi = parse_vector_arg(xi_text, g);
    const AlphaResult res = solve_alpha(l.file.space, xi);
    Json body{{"xi", vector_json(xi, g)}};
    int code = 0;
    if (const auto* s = std::get_if<GeodesicSolution>(&res)) {
        body["status"] = "SOLVED";
        body["solution"] = to_json(*s);
        body["affine_parameter"] = affine_parameter(s->k, std::nullopt).expression;
    } else {
        body["status"] = "INFEASIBLE";
        code = 1;
    }
    emit(ctx, "solve-alpha", l.digest, std::nullopt, body);
    return code;
}

GoParams go_params(std::size_t samples, std::uint64_t seed, std::optional<int> grid) {
    GoParams p;
    p.n_samples = samples;
    p.seed = seed;
    p.grid_depth = grid;
    return p;
}

int cmd_go_check(Context& ctx, const std::string& path, const GoParams& p) {
    const Loaded l = load(ctx, path);
    const GoVerdict v = go_certify(l.file.space, p);
    Json body = to_json(v);
    if (v.counterexample) body["counterexample_expr"] = vector_expression(*v.counterexample, l.file.space.algebra());
    emit(ctx, "go-check", l.digest, p.seed, body);
    return v.status == GoStatus::Counterexample ? 1 : 0;
}

Basis subspace_arg(const std::string& text, const ReductiveSpace& r) {
    const LieAlgebra& g = r.algebra();
    if (text.empty() || text == "m") return r.m_span();
    if (text == "derived") {
        const LieAlgebra n = subalgebra(g, r.m_span());
        const Basis d = derived_subalgebra(n);
        Basis out;
        for (const auto& v : d) out.push_back(r.from_m_coordinates(v));
        return out;
    }
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("--subspace: expected m, derived or a JSON list of vectors (") + e.what() + ")");
    }
    if (!j.is_array()) throw InputError("--subspace: expected a JSON list of vectors");
    Basis out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        Vector v = vector_from_json(j[i], "--subspace/" + std::to_string(i));
        if (v.size() != g.dim()) throw InputError("--subspace/" + std::to_string(i) + ": wrong length");
        out.push_back(std::move(v));
    }
    return out;
}

Json canonical_body(const Matrix& b, const BilinearForm& gram) {
    const Classification c = classify(b, gram);
    Json body{{"classification", to_json(c)}, {"matrix", to_json(b)}, {"gram", to_json(gram.gram())}};
    if (c.kind == CanonicalKind::NonSemisimple) {
        try {
            const CanonicalForm cf = nilpotent_witness_basis(b, gram);
            body["witness"] = to_json(cf.witness);
            body["canonical_matrix"] = to_json(cf.canonical_matrix);
            body["canonical_gram"] = to_json(cf.canonical_gram);
            body["flags"] = cf.flags;
        } catch (const StructuralError& e) {
            body["witness_error"] = e.what();
        }
    }
    return body;
}

int cmd_canonical(Context& ctx, const std::string& path, const std::string& x_text, const std::string& sub_text,
                  const std::string& matrix_path, const std::string& gram_path) {
    if (!matrix_path.empty() || !gram_path.empty()) {
        if (matrix_path.empty() || gram_path.empty())
            throw InputError("canonical: --matrix and --gram must be given together");
        const std::string mb = read_file(matrix_path), gb = read_file(gram_path);
        const auto parse = [](const std::string& text, const std::string& name) {
            try {
                Json j = Json::parse(text);
                if (j.is_object() && j.contains("matrix")) j = j.at("matrix");
                return matrix_from_json(j, name);
            } catch (const Json::parse_error& e) {
                throw InputError(name + ": malformed JSON: " + e.what());
            }
        };
        const Matrix b = parse(mb, matrix_path);
        const BilinearForm g(parse(gb, gram_path));
        emit(ctx, "canonical", sha256_hex(mb + gb), std::nullopt, canonical_body(b, g));
        return 0;
    }
    if (path.empty() || x_text.empty()) throw InputError("canonical: give a space file with --x, or --matrix and --gram");
    const Loaded l = load(ctx, path);
    const ReductiveSpace& r = l.file.space;
    const Vector x = parse_vector_arg(x_text, r.algebra());
    const Basis s = subspace_arg(sub_text, r);
    for (const auto& v : s)
        if (!r.in_m(v)) throw InputError("canonical: --subspace must lie in m");
    Basis s_m;
    for (const auto& v : s) s_m.push_back(r.m_coordinates(v));
    const Matrix b = ad_restricted(r.algebra(), x, s);
    Json body = canonical_body(b, restrict(r.metric(), s_m));
    body["x"] = vector_json(x, r.algebra());
    body["subspace"] = to_json(s);
    emit(ctx, "canonical", l.digest, std::nullopt, body);
    return 0;
}

std::string evidence_string(const GoVerdict& v) {
    if (v.status == GoStatus::ProvenNatred) return "PROVEN_NATRED";
    std::string s = std::string(to_string(v.status)) + " (" + std::to_string(v.directions_checked) +
                    " directions, seed " + std::to_string(v.seed) + ")";
    return s;
}

template <class Verify>
int cmd_verify(Context& ctx, const std::string& command, const std::string& path, const GoParams& p, bool skip_go,
               Verify verify) {
    const Loaded l = load(ctx, path);
    const ReductiveSpace r = normalized(l.file);
    auto rep = verify(r);
    std::optional<std::uint64_t> seed;
    if (!skip_go) {
        const GoVerdict v = go_certify(l.file.space, p);
        rep.go_evidence = evidence_string(v);
        seed = p.seed;
    } else {
        rep.go_evidence = "NOT_CHECKED";
    }
    Json body = to_json(rep);
    if (l.file.convention == SignatureConvention::MostlyMinus)
        body["normalization"] = "metric negated to mostly-plus before checking";
    emit(ctx, command, l.digest, seed, body);
    return rep.verdict() == TheoremVerdict::Pass ? 0 : 1;
}

std::pair<std::size_t, std::size_t> parse_dims(const std::string& text) {
    std::string t = text;
    for (const char* sep : {"..", ":", "-"}) {
        const auto at = t.find(sep);
        if (at != std::string::npos && at > 0) {
            const auto lo = std::stoul(t.substr(0, at));
            const auto hi = std::stoul(t.substr(at + std::string(sep).size()));
            if (lo > hi) throw InputError("--dims: empty range '" + text + "'");
            return {lo, hi};
        }
    }
    const auto v = std::stoul(t);
    return {v, v};
}

std::vector<Rational> parse_grid(const std::string& text) {
    std::vector<Rational> out;
    std::string t = trim(text);
    if (!t.empty() && t.front() == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
    for (auto& part : split(t, ',')) {
        if (part.size() >= 2 && part.front() == '"' && part.back() == '"') part = part.substr(1, part.size() - 2);
        out.push_back(Rational::parse(part));
    }
    if (out.empty()) throw InputError("--grid: empty grid");
    return out;
}

int cmd_search(Context& ctx, ScanJob job, const std::string& family, const std::string& dims,
               const std::string& grid, const std::string& h) {
    const auto f = parse_family(family);
    if (!f) throw InputError("--family: expected filiform, structure1 or free");
    job.family = *f;
    try {
        std::tie(job.dim_lo, job.dim_hi) = parse_dims(dims);
    } catch (const std::logic_error&) {
        throw InputError("--dims: expected N or LO..HI, got '" + dims + "'");
    }
    if (!grid.empty()) job.grid = parse_grid(grid);
    const auto hs = parse_h_strategy(h);
    if (!hs) throw InputError("--h-strategy: expected none or skew-derivations");
    job.h_strategy = *hs;
    if (job.params.jobs == 0) job.params.jobs = 1;
    const ScanSummary s = run_scan(job);
    Json grid_json = Json::array();
    for (const auto& g : job.grid) grid_json.push_back(g.str());
    const Json config{{"family", to_string(job.family)}, {"dims", {job.dim_lo, job.dim_hi}}, {"grid", grid_json},
                      {"h_strategy", to_string(job.h_strategy)}, {"samples", job.params.n_samples},
                      {"all_classes", job.params.all_classes}};
    Json body = s.to_json();
    body["results"] = job.out_path;
    emit(ctx, "search", sha256_hex(config.dump()), job.params.seed, body);
    const Json sj = s.to_json();
    return s.contradictions() == 0 && sj.at("scan_errors").empty() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact rational checks on reductive homogeneous spaces and their nilpotent families", "gonil"};
    app.require_subcommand(1);
    app.set_version_flag("--version", GONIL_VERSION);
    Context ctx{out, err, "", ""};
    app.add_option("--signature-convention", ctx.convention_flag,
                   "Override the file's signature convention (mostly-plus or mostly-minus)")
        ->check(CLI::IsMember({"mostly-plus", "mostly-minus"}));
    app.fallthrough();

    std::string file, xi, x, subspace = "m", matrix_path, gram_path, family = "filiform", dims = "4..5", grid,
                                 h = "skew-derivations";
    std::size_t samples = 100;
    std::uint64_t seed = 0;
    std::optional<int> grid_depth;
    bool skip_go = false;
    ScanJob job;

    const auto with_out = [&](CLI::App* sub) {
        sub->add_option("--out", ctx.out_path, "Write the report here instead of stdout");
    };
    const auto with_file = [&](CLI::App* sub) {
        sub->add_option("file", file, "Space file (JSON)")->required();
        with_out(sub);
    };
    const auto with_go = [&](CLI::App* sub) {
        sub->add_option("--samples", samples, "Number of seeded sample directions");
        sub->add_option("--seed", seed, "Sampling seed");
    };

    auto* check = app.add_subcommand("check-algebra", "Validate brackets, decomposition and metric; report series");
    with_file(check);
    auto* sig = app.add_subcommand("signature", "Signature, radical and Lorentz test of the metric on m");
    with_file(sig);
    auto* nat = app.add_subcommand("natred", "Test natural reductivity");
    with_file(nat);
    auto* gv = app.add_subcommand("geodesic-vector", "Is xi a geodesic vector, and with which k");
    with_file(gv);
    gv->add_option("--xi", xi, "Vector: comma list or basis-name combination")->required();
    auto* sa = app.add_subcommand("solve-alpha", "Solve for (alpha, k) at a direction in m");
    with_file(sa);
    sa->add_option("--xi", xi, "Vector: comma list or basis-name combination")->required();
    auto* go = app.add_subcommand("go-check", "Layered geodesic-orbit evidence");
    with_file(go);
    with_go(go);
    go->add_option("--grid", grid_depth, "Also check every integer vector with entries in [-d, d]");
    auto* can = app.add_subcommand("canonical", "Classify ad(x)|S or an explicit skew matrix");
    can->add_option("file", file, "Space file (JSON)");
    with_out(can);
    can->add_option("--x", x, "Element x of g");
    can->add_option("--subspace", subspace, "m, derived, or a JSON list of vectors in g");
    can->add_option("--matrix", matrix_path, "JSON file with the operator matrix");
    can->add_option("--gram", gram_path, "JSON file with the Gram matrix");
    auto* t41 = app.add_subcommand("verify-thm41", "Check the structure theorem for nondegenerate [n,n]");
    with_file(t41);
    with_go(t41);
    t41->add_flag("--no-go", skip_go, "Skip the go_certify evidence step");
    auto* t42 = app.add_subcommand("verify-thm42", "Check the structure theorem for degenerate [n,n]");
    with_file(t42);
    with_go(t42);
    t42->add_flag("--no-go", skip_go, "Skip the go_certify evidence step");
    auto* se = app.add_subcommand("search", "Scan a parametrized family for geodesic-orbit candidates");
    se->add_option("--family", family, "filiform, structure1 or free");
    se->add_option("--dims", dims, "Dimension range of the nilpotent algebra, e.g. 4..5");
    se->add_option("--grid", grid, "Comma list of rational parameter values (default -2..2)");
    se->add_option("--h-strategy", h, "none or skew-derivations");
    se->add_option("--jobs", job.params.jobs, "Worker threads");
    se->add_option("--out", job.out_path, "JSONL results file")->required();
    se->add_option("--samples", job.params.n_samples, "Sample directions per candidate");
    se->add_option("--seed", job.params.seed, "Sampling seed");
    se->add_option("--chunk", job.chunk, "Specs per checkpoint");
    se->add_flag("--resume", job.resume, "Continue from the checkpoint");
    se->add_flag("--all-classes", job.params.all_classes, "Run go_certify on every class");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion& e) {
        out << GONIL_VERSION << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (*check) return cmd_check_algebra(ctx, file);
        if (*sig) return cmd_signature(ctx, file);
        if (*nat) return cmd_natred(ctx, file);
        if (*gv) return cmd_geodesic_vector(ctx, file, xi);
        if (*sa) return cmd_solve_alpha(ctx, file, xi);
        if (*go) return cmd_go_check(ctx, file, go_params(samples, seed, grid_depth));
        if (*can) return cmd_canonical(ctx, file, x, subspace, matrix_path, gram_path);
        if (*t41) return cmd_verify(ctx, "verify-thm41", file, go_params(samples, seed, std::nullopt), skip_go,
                                    [](const ReductiveSpace& r) { return verify_thm41(r); });
        if (*t42) return cmd_verify(ctx, "verify-thm42", file, go_params(samples, seed, std::nullopt), skip_go,
                                    [](const ReductiveSpace& r) { return verify_thm42(r); });
        if (*se) return cmd_search(ctx, job, family, dims, grid, h);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

}  // namespace gonil
