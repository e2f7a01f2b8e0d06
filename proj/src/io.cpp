#include "gonil/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace gonil {

Rational rational_from_json(const Json& j, const std::string& where) {
    try {
        if (j.is_string()) return Rational::parse(j.get<std::string>());
        if (j.is_number_integer()) return Rational(j.get<long long>());
        if (j.is_number_float()) return Rational::parse(j.dump());
    } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
    }
    throw InputError(where + ": expected a rational string such as \"1/2\"");
}

Vector vector_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) throw InputError(where + ": expected an array of rationals");
    Vector v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], where + "/" + std::to_string(i)));
    return v;
}

Matrix matrix_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) throw InputError(where + ": expected an array of rows");
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(vector_from_json(j[i], where + "/" + std::to_string(i)));
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].size() != cols)
            throw InputError(where + "/" + std::to_string(i) + ": row has " + std::to_string(rows[i].size()) +
                             " entries, expected " + std::to_string(cols));
    return Matrix::from_rows(rows, cols);
}

const char* to_string(SignatureConvention c) {
    return c == SignatureConvention::MostlyPlus ? "mostly-plus" : "mostly-minus";
}

std::optional<SignatureConvention> parse_convention(std::string_view s) {
    if (s == "mostly-plus") return SignatureConvention::MostlyPlus;
    if (s == "mostly-minus") return SignatureConvention::MostlyMinus;
    return std::nullopt;
}

namespace {

std::size_t index_from_json(const Json& j, const std::string& where, std::size_t dim) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw InputError(where + ": expected a nonnegative integer index");
    const auto v = static_cast<std::size_t>(j.get<long long>());
    if (v >= dim)
        throw InputError(where + ": index " + std::to_string(v) + " out of range for dimension " + std::to_string(dim));
    return v;
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) throw InputError(where + ": missing field \"" + key + "\"");
    return obj.at(key);
}

Basis basis_from_json(const Json& j, const std::string& where, std::size_t dim) {
    if (!j.is_array()) throw InputError(where + ": expected an array of vectors");
    Basis b;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string w = where + "/" + std::to_string(i);
        Vector v = vector_from_json(j[i], w);
        if (v.size() != dim)
            throw InputError(w + ": vector has " + std::to_string(v.size()) + " entries, expected " +
                             std::to_string(dim));
        b.push_back(std::move(v));
    }
    return b;
}

}  // namespace

SpaceFile parse_space(const Json& doc) {
    const Json& alg = field(doc, "algebra", "");
    const Json& dj = field(alg, "dim", "/algebra");
    if (!dj.is_number_integer() || dj.get<long long>() < 0)
        throw InputError("/algebra/dim: expected a nonnegative integer");
    const auto dim = static_cast<std::size_t>(dj.get<long long>());
    std::vector<std::string> names;
    if (alg.contains("basis_names")) {
        const Json& nj = alg.at("basis_names");
        if (!nj.is_array()) throw InputError("/algebra/basis_names: expected an array of strings");
        for (std::size_t i = 0; i < nj.size(); ++i) {
            if (!nj[i].is_string()) throw InputError("/algebra/basis_names/" + std::to_string(i) + ": expected a string");
            names.push_back(nj[i].get<std::string>());
        }
        if (names.size() != dim)
            throw InputError("/algebra/basis_names: " + std::to_string(names.size()) + " names for dimension " +
                             std::to_string(dim));
    }
    LieAlgebra g(dim, names);
    if (alg.contains("brackets")) {
        const Json& bj = alg.at("brackets");
        if (!bj.is_array()) throw InputError("/algebra/brackets: expected an array");
        for (std::size_t b = 0; b < bj.size(); ++b) {
            const std::string w = "/algebra/brackets/" + std::to_string(b);
            const std::size_t i = index_from_json(field(bj[b], "i", w), w + "/i", dim);
            const std::size_t j = index_from_json(field(bj[b], "j", w), w + "/j", dim);
            const Json& cj = field(bj[b], "coeffs", w);
            if (!cj.is_object()) throw InputError(w + "/coeffs: expected an object {index: \"p/q\"}");
            SparseVector sv;
            for (const auto& [key, val] : cj.items()) {
                const std::string kw = w + "/coeffs/" + key;
                std::size_t k = 0;
                try {
                    std::size_t used = 0;
                    const long long kk = std::stoll(key, &used);
                    if (used != key.size() || kk < 0) throw std::invalid_argument(key);
                    k = static_cast<std::size_t>(kk);
                } catch (const std::exception&) {
                    throw InputError(kw + ": coefficient key must be a basis index");
                }
                if (k >= dim)
                    throw InputError(kw + ": index " + std::to_string(k) + " out of range for dimension " +
                                     std::to_string(dim));
                sv[k] = rational_from_json(val, kw);
            }
            if (i == j) throw InputError(w + ": i and j must differ");
            if (g.brackets().count({std::min(i, j), std::max(i, j)}))
                throw InputError(w + ": bracket (" + std::to_string(i) + ", " + std::to_string(j) + ") given twice");
            g.set_bracket(i, j, sv);
        }
    }
    if (const JacobiResult jr = validate(g); const auto* f = std::get_if<JacobiFailure>(&jr))
        throw AlgebraError("/algebra: Jacobi identity fails on (" + std::to_string(f->i) + ", " + std::to_string(f->j) +
                         ", " + std::to_string(f->k) + ")");

    Basis h = doc.contains("h_span") ? basis_from_json(doc.at("h_span"), "/h_span", dim) : Basis{};
    Basis m = basis_from_json(field(doc, "m_span", ""), "/m_span", dim);
    Matrix gram = matrix_from_json(field(doc, "gram_m", ""), "/gram_m");
    if (!gram.is_square()) throw InputError("/gram_m: matrix is not square");
    if (!gram.is_symmetric()) throw InputError("/gram_m: matrix is not symmetric");

    SpaceFile out{ReductiveSpace::build(std::move(g), std::move(h), std::move(m), BilinearForm(std::move(gram))),
                  SignatureConvention::MostlyPlus, ""};
    if (doc.contains("meta")) {
        const Json& meta = doc.at("meta");
        if (meta.contains("description") && meta.at("description").is_string())
            out.description = meta.at("description").get<std::string>();
        if (meta.contains("signature_convention")) {
            const auto c = meta.at("signature_convention").is_string()
                               ? parse_convention(meta.at("signature_convention").get<std::string>())
                               : std::nullopt;
            if (!c) throw InputError("/meta/signature_convention: expected \"mostly-plus\" or \"mostly-minus\"");
            out.convention = *c;
        }
    }
    return out;
}

SpaceFile parse_space_text(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return parse_space(doc);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SpaceFile load_space_file(const std::string& path, std::string* bytes) {
    std::string text = read_file(path);
    try {
        SpaceFile f = parse_space_text(text);
        if (bytes) *bytes = std::move(text);
        return f;
    } catch (const ValidationError&) {
        throw;
    } catch (const AlgebraError& e) {
        throw AlgebraError(path + ": " + e.what());
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

Json space_to_json(const SpaceFile& f) {
    const ReductiveSpace& r = f.space;
    const LieAlgebra& g = r.algebra();
    Json alg;
    alg["dim"] = g.dim();
    if (!g.basis_names().empty()) alg["basis_names"] = g.basis_names();
    Json brackets = Json::array();
    for (const auto& [key, coeffs] : g.brackets()) {
        Json c = Json::object();
        for (const auto& [k, v] : coeffs) c[std::to_string(k)] = v.str();
        brackets.push_back({{"i", key.first}, {"j", key.second}, {"coeffs", c}});
    }
    alg["brackets"] = brackets;
    Json doc;
    doc["algebra"] = alg;
    doc["h_span"] = to_json(r.h_span());
    doc["m_span"] = to_json(r.m_span());
    doc["gram_m"] = to_json(r.metric().gram());
    Json meta;
    if (!f.description.empty()) meta["description"] = f.description;
    meta["signature_convention"] = to_string(f.convention);
    doc["meta"] = meta;
    return doc;
}

std::string sha256_hex(std::string_view data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 15]);
    }
    return out;
}

Json to_json(const Rational& r) { return r.str(); }

Json to_json(std::span<const Rational> v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

Json to_json(const Basis& b) {
    Json a = Json::array();
    for (const auto& v : b) a.push_back(to_json(std::span<const Rational>(v)));
    return a;
}

Json to_json(const Matrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const Vector row = m.row(i);
        a.push_back(to_json(std::span<const Rational>(row)));
    }
    return a;
}

Json to_json(const Polynomial& p) {
    return {{"ascending", to_json(std::span<const Rational>(p.coefficients()))}, {"text", p.str()}};
}

Json to_json(const SignatureReport& s) {
    return {{"positive", s.positive}, {"negative", s.negative}, {"null", s.null}};
}

Json to_json(const SeriesReport& s) {
    Json j{{"dims", s.dims}, {"nilpotent", s.nilpotent}};
    j["class"] = s.step ? Json(*s.step) : Json(nullptr);
    return j;
}

Json to_json(const GeodesicSolution& s) {
    return {{"alpha", to_json(std::span<const Rational>(s.alpha))},
            {"alpha_coords", to_json(std::span<const Rational>(s.alpha_coords))},
            {"k", s.k.str()},
            {"residuals", to_json(std::span<const Rational>(s.residuals))},
            {"freedom", to_json(s.freedom)}};
}

Json to_json(const GoVerdict& v) {
    Json j{{"status", to_string(v.status)}};
    if (v.status != GoStatus::ProvenNatred) {
        j["n_samples"] = v.n_samples;
        j["seed"] = v.seed;
        j["directions_checked"] = v.directions_checked;
    }
    if (v.counterexample) j["counterexample"] = to_json(std::span<const Rational>(*v.counterexample));
    if (!v.notes.empty()) j["notes"] = v.notes;
    return j;
}

Json to_json(const Classification& c) {
    Json j{{"kind", to_string(c.kind)}};
    if (c.mu) j["mu"] = c.mu->str();
    if (c.mu_estimate) {
        j["mu_estimate"] = *c.mu_estimate;
        j["exact"] = false;
    }
    if (c.kind != CanonicalKind::Zero) j["c_block_dim"] = c.c_block_dim;
    j["minimal_polynomial"] = to_json(c.minimal_polynomial);
    return j;
}

Json to_json(const CanonicalForm& c) {
    Json j = to_json(c.kind);
    j["witness"] = to_json(c.witness);
    j["canonical_matrix"] = to_json(c.canonical_matrix);
    j["canonical_gram"] = to_json(c.canonical_gram);
    j["flags"] = c.flags;
    return j;
}

namespace {

Json violations_json(const std::vector<Violation>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back({{"check", v.check}, {"detail", v.detail}});
    return a;
}

}  // namespace

Json to_json(const Thm41Report& r) {
    Json j{{"verdict", to_string(r.verdict())}, {"hypothesis_ok", r.hypothesis_ok}};
    if (!r.hypothesis_notes.empty()) j["hypothesis_notes"] = r.hypothesis_notes;
    j["branch"] = to_string(r.branch);
    j["class"] = r.nilpotency_class ? Json(*r.nilpotency_class) : Json(nullptr);
    j["derived"] = to_json(r.derived);
    j["complement"] = to_json(r.complement);
    if (r.x) {
        j["x"] = to_json(std::span<const Rational>(*r.x));
        j["x_tilde"] = to_json(r.x_tilde);
    }
    if (r.derived_witness) j["derived_witness"] = to_json(*r.derived_witness);
    if (!r.ad_forms.empty()) {
        Json forms = Json::array();
        for (const auto& m : r.ad_forms) forms.push_back(to_json(m));
        j["ad_forms"] = forms;
    }
    if (!r.a_vector.empty()) j["a_vector"] = to_json(std::span<const Rational>(r.a_vector));
    if (!r.chain_dims.empty()) j["chain_dims"] = r.chain_dims;
    if (!r.flags.empty()) j["flags"] = r.flags;
    j["violations"] = violations_json(r.violations);
    if (r.go_evidence) j["go_evidence"] = *r.go_evidence;
    return j;
}

Json to_json(const Thm42Report& r) {
    Json j{{"verdict", to_string(r.verdict())}, {"hypothesis_ok", r.hypothesis_ok}};
    if (!r.hypothesis_notes.empty()) j["hypothesis_notes"] = r.hypothesis_notes;
    j["class"] = r.nilpotency_class ? Json(*r.nilpotency_class) : Json(nullptr);
    j["derived"] = to_json(r.derived);
    if (!r.radical.empty()) {
        j["decomposition"] = {{"v1", to_json(r.v1)},
                              {"w", to_json(Basis{r.radical, r.v0})},
                              {"v2", to_json(r.v2)}};
        j["signature_w"] = to_json(r.signature_w);
    }
    j["ad_vanishing"] = r.ad_vanishing;
    j["notes"] = r.notes;
    j["violations"] = violations_json(r.violations);
    if (r.go_evidence) j["go_evidence"] = *r.go_evidence;
    return j;
}

Json to_json(const CandidateSpec& s) {
    Json lay{{"dim", s.layout.dim}};
    if (s.family == Family::Structure1) {
        lay["p"] = s.layout.p;
        lay["s"] = s.layout.s;
    }
    if (s.family == Family::FreeNilpotentQuotient) {
        lay["rank"] = s.layout.rank;
        lay["step"] = s.layout.step;
    }
    return {{"index", s.index},
            {"family", to_string(s.family)},
            {"layout", lay},
            {"params", to_json(std::span<const Rational>(s.params))},
            {"h_strategy", to_string(s.h_strategy)}};
}

Json to_json(const Rejection& r) {
    Json j{{"reason", r.reason}, {"detail", r.detail}};
    if (r.triple) j["triple"] = *r.triple;
    return j;
}

CandidateSpec spec_from_json(const Json& j) {
    CandidateSpec s;
    const auto fam = parse_family(field(j, "family", "").get<std::string>());
    if (!fam) throw InputError("/family: unknown family");
    s.family = *fam;
    const Json& lay = field(j, "layout", "");
    s.layout.dim = lay.value("dim", std::size_t{0});
    s.layout.p = lay.value("p", std::size_t{0});
    s.layout.s = lay.value("s", std::size_t{0});
    s.layout.rank = lay.value("rank", std::size_t{0});
    s.layout.step = lay.value("step", std::size_t{0});
    s.params = vector_from_json(field(j, "params", ""), "/params");
    const auto h = parse_h_strategy(j.value("h_strategy", std::string("none")));
    if (!h) throw InputError("/h_strategy: unknown strategy");
    s.h_strategy = *h;
    s.index = j.value("index", std::uint64_t{0});
    return s;
}

}  // namespace gonil
