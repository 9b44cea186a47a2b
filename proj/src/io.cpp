#include "reltilt/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "reltilt/two_term.hpp"

namespace reltilt::io {

namespace {

constexpr std::uint32_t kDefaultPrime = 32003;

class TomlParser {
public:
    explicit TomlParser(const std::string& text) : s_(text) {}

    json run() {
        json root = json::object();
        json* table = &root;
        for (;;) {
            skip_blank(true);
            if (eof()) break;
            if (peek() == '[') {
                table = header(root);
            } else {
                auto path = key_path();
                skip_blank(false);
                expect('=');
                skip_blank(false);
                json* parent = descend(*table, path, path.size() - 1);
                if (parent->contains(path.back())) fail("duplicate key '" + path.back() + "'");
                (*parent)[path.back()] = value();
            }
            end_of_line();
        }
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("TOML line " + std::to_string(line_) + ": " + what);
    }
    bool eof() const { return pos_ >= s_.size(); }
    char peek(std::size_t ahead = 0) const { return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0'; }
    char get() {
        char c = s_[pos_++];
        if (c == '\n') ++line_;
        return c;
    }
    void expect(char c) {
        if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
        get();
    }

    // Spaces and comments; newlines too when `lines` is set.
    void skip_blank(bool lines) {
        while (!eof()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r') get();
            else if (c == '#') {
                while (!eof() && peek() != '\n') get();
            } else if (lines && c == '\n') get();
            else break;
        }
    }
    void end_of_line() {
        skip_blank(false);
        if (eof()) return;
        if (peek() != '\n') fail("unexpected text after value");
        get();
    }

    std::string bare_key() {
        std::string k;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-')) k += get();
        if (k.empty()) fail("expected a key");
        return k;
    }
    std::vector<std::string> key_path() {
        std::vector<std::string> path;
        for (;;) {
            skip_blank(false);
            path.push_back(peek() == '"' ? basic_string() : peek() == '\'' ? literal_string() : bare_key());
            skip_blank(false);
            if (peek() != '.') return path;
            get();
        }
    }

    // Walks `depth` keys below t, creating tables; arrays of tables resolve to their last element.
    json* descend(json& t, const std::vector<std::string>& path, std::size_t depth) {
        json* cur = &t;
        for (std::size_t k = 0; k < depth; ++k) {
            json& next = (*cur)[path[k]];
            if (next.is_null()) next = json::object();
            if (next.is_array()) {
                if (next.empty() || !next.back().is_object()) fail("'" + path[k] + "' is not a table");
                cur = &next.back();
            } else if (next.is_object()) {
                cur = &next;
            } else {
                fail("'" + path[k] + "' is not a table");
            }
        }
        return cur;
    }

    json* header(json& root) {
        get();
        bool array = peek() == '[';
        if (array) get();
        auto path = key_path();
        expect(']');
        if (array) expect(']');
        json* parent = descend(root, path, path.size() - 1);
        json& slot = (*parent)[path.back()];
        if (array) {
            if (slot.is_null()) slot = json::array();
            if (!slot.is_array()) fail("'" + path.back() + "' is not an array of tables");
            slot.push_back(json::object());
            return &slot.back();
        }
        if (slot.is_null()) slot = json::object();
        if (!slot.is_object()) fail("'" + path.back() + "' is not a table");
        return &slot;
    }

    json value() {
        if (eof()) fail("missing value");
        char c = peek();
        if (c == '"') return basic_string();
        if (c == '\'') return literal_string();
        if (c == '[') return array();
        if (c == '{') return inline_table();
        if (s_.compare(pos_, 4, "true") == 0) {
            pos_ += 4;
            return true;
        }
        if (s_.compare(pos_, 5, "false") == 0) {
            pos_ += 5;
            return false;
        }
        if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) return integer();
        fail(std::string("unsupported value starting with '") + c + "'");
    }

    json integer() {
        std::string digits;
        if (peek() == '+' || peek() == '-') digits += get();
        while (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_')) {
            char c = get();
            if (c != '_') digits += c;
        }
        if (peek() == '.' || peek() == 'e' || peek() == 'E') fail("floating point values are not supported");
        if (digits.empty() || digits == "+" || digits == "-") fail("malformed integer");
        try {
            return std::stoll(digits);
        } catch (const std::out_of_range&) {
            fail("integer out of range");
        }
    }

    std::string basic_string() {
        expect('"');
        if (peek() == '"' && peek(1) == '"') fail("multiline strings are not supported");
        std::string out;
        for (;;) {
            if (eof() || peek() == '\n') fail("unterminated string");
            char c = get();
            if (c == '"') return out;
            if (c != '\\') {
                out += c;
                continue;
            }
            if (eof()) fail("unterminated string");
            char e = get();
            switch (e) {
                case '"': out += '"'; break;
                case '\\': out += '\\'; break;
                case 'n': out += '\n'; break;
                case 't': out += '\t'; break;
                case 'r': out += '\r'; break;
                case 'b': out += '\b'; break;
                case 'f': out += '\f'; break;
                case 'u': {
                    if (pos_ + 4 > s_.size()) fail("short \\u escape");
                    unsigned cp = unsigned(std::stoul(s_.substr(pos_, 4), nullptr, 16));
                    pos_ += 4;
                    // UTF-8 encode a BMP code point.
                    if (cp < 0x80) out += char(cp);
                    else if (cp < 0x800) {
                        out += char(0xC0 | (cp >> 6));
                        out += char(0x80 | (cp & 0x3F));
                    } else {
                        out += char(0xE0 | (cp >> 12));
                        out += char(0x80 | ((cp >> 6) & 0x3F));
                        out += char(0x80 | (cp & 0x3F));
                    }
                    break;
                }
                default: fail(std::string("unknown escape \\") + e);
            }
        }
    }

    std::string literal_string() {
        expect('\'');
        std::string out;
        for (;;) {
            if (eof() || peek() == '\n') fail("unterminated string");
            char c = get();
            if (c == '\'') return out;
            out += c;
        }
    }

    json array() {
        expect('[');
        json out = json::array();
        for (;;) {
            skip_blank(true);
            if (peek() == ']') {
                get();
                return out;
            }
            out.push_back(value());
            skip_blank(true);
            if (peek() == ',') get();
            else if (peek() != ']') fail("expected ',' or ']' in array");
        }
    }

    json inline_table() {
        expect('{');
        json out = json::object();
        skip_blank(false);
        if (peek() == '}') {
            get();
            return out;
        }
        for (;;) {
            auto path = key_path();
            expect('=');
            skip_blank(false);
            json* parent = descend(out, path, path.size() - 1);
            if (parent->contains(path.back())) fail("duplicate key '" + path.back() + "'");
            (*parent)[path.back()] = value();
            skip_blank(false);
            if (peek() == '}') {
                get();
                return out;
            }
            expect(',');
        }
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int line_ = 1;
};

int vertex_of(const Quiver& q, const json& v, const std::string& where) {
    std::string name;
    if (v.is_string()) name = v.get<std::string>();
    else if (v.is_number_integer()) name = std::to_string(v.get<long long>());
    else throw InputError(where + ": vertex must be a string or an integer");
    int i = q.vertex_index(name);
    if (i < 0) throw InputError(where + ": unknown vertex '" + name + "'");
    return i;
}

json vertex_json(const Quiver& q, int v) {
    const auto& name = q.vertices[std::size_t(v)];
    if (q.numeric_vertex_ids) return std::stoll(name);
    return name;
}

std::string toml_value(const json& j) {
    if (j.is_object()) {
        std::string s = "{";
        bool first = true;
        for (const auto& [k, v] : j.items()) {
            s += (first ? "" : ", ") + k + " = " + toml_value(v);
            first = false;
        }
        return s + "}";
    }
    if (j.is_array()) {
        std::string s = "[";
        for (std::size_t k = 0; k < j.size(); ++k) s += (k ? ", " : "") + toml_value(j[k]);
        return s + "]";
    }
    return j.dump();  // JSON strings, integers and booleans are valid TOML
}

ProjSum proj_sum_from_json(const Quiver& q, const json& j, const std::string& where) {
    ProjSum out;
    if (j.is_array()) {
        for (const auto& v : j) out.push_back(vertex_of(q, v, where));
    } else if (j.is_object()) {
        std::vector<long long> mult(q.vertices.size(), 0);
        for (const auto& [k, m] : j.items()) {
            if (!m.is_number_integer() || m.get<long long>() < 0) throw InputError(where + ": bad multiplicity");
            mult[std::size_t(vertex_of(q, json(k), where))] += m.get<long long>();
        }
        for (std::size_t v = 0; v < mult.size(); ++v)
            for (long long k = 0; k < mult[v]; ++k) out.push_back(int(v));
    } else {
        throw InputError(where + ": expected a vertex list or a multiplicity map");
    }
    return out;
}

}  // namespace

json parse_toml(const std::string& text) { return TomlParser(text).run(); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_document(const std::string& text, bool as_json) {
    if (!as_json) return parse_toml(text);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("JSON: ") + e.what());
    }
}

json read_document(const std::string& path) {
    std::string text = read_file(path);
    bool as_json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) as_json = true;
    return parse_document(text, as_json);
}

AlgebraSpec algebra_spec_from_json(const json& doc) {
    if (!doc.is_object()) throw InputError("algebra file must be a table");
    for (const auto& [k, v] : doc.items())
        if (k != "vertices" && k != "arrows" && k != "relations" && k != "prime")
            throw InputError("unknown key '" + k + "' in algebra file");
    AlgebraSpec spec;
    try {
        const json& vs = doc.at("vertices");
        if (!vs.is_array() || vs.empty()) throw InputError("'vertices' must be a nonempty list");
        bool ints = vs.front().is_number_integer();
        spec.quiver.numeric_vertex_ids = ints;
        for (const auto& v : vs) {
            if (ints != v.is_number_integer() || (!ints && !v.is_string()))
                throw InputError("vertices must be all strings or all integers");
            std::string name = ints ? std::to_string(v.get<long long>()) : v.get<std::string>();
            if (spec.quiver.vertex_index(name) >= 0) throw InputError("vertex '" + name + "' repeated");
            spec.quiver.vertices.push_back(name);
        }
        if (doc.contains("arrows")) {
            for (const auto& a : doc.at("arrows")) {
                std::string id = a.at("id").is_string() ? a.at("id").get<std::string>()
                                                        : std::to_string(a.at("id").get<long long>());
                if (spec.quiver.arrow_index(id) >= 0) throw InputError("arrow '" + id + "' repeated");
                spec.quiver.arrows.push_back({id, vertex_of(spec.quiver, a.at("from"), "arrow " + id),
                                              vertex_of(spec.quiver, a.at("to"), "arrow " + id)});
            }
        }
        if (doc.contains("relations")) {
            for (const auto& rel : doc.at("relations")) {
                Relation r;
                for (const auto& t : rel) {
                    RelationTerm term;
                    term.coeff = t.contains("coeff") ? t.at("coeff").get<std::int64_t>() : 1;
                    for (const auto& a : t.at("path")) {
                        int k = spec.quiver.arrow_index(a.get<std::string>());
                        if (k < 0) throw InputError("relation uses unknown arrow '" + a.get<std::string>() + "'");
                        term.arrows.push_back(k);
                    }
                    r.push_back(term);
                }
                spec.relations.push_back(r);
            }
        }
        if (doc.contains("prime")) {
            auto p = doc.at("prime").get<long long>();
            if (p < 2 || p >= (1LL << 31)) throw InputError("prime " + std::to_string(p) + " out of range");
            spec.prime = std::uint32_t(p);
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed algebra file: ") + e.what());
    }
    return spec;
}

AlgebraPtr build_algebra(const AlgebraSpec& spec) {
    try {
        if (fp::configure_from_env()) {
            if (spec.prime && *spec.prime != fp::prime())
                throw InputError("file prime " + std::to_string(*spec.prime) + " disagrees with RELTILT_PRIME=" +
                                 std::to_string(fp::prime()));
        } else {
            fp::set_prime(spec.prime.value_or(kDefaultPrime));
        }
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    return Algebra::build(spec.quiver, spec.relations);
}

AlgebraPtr load_algebra(const std::string& path) { return build_algebra(algebra_spec_from_json(read_document(path))); }

json algebra_to_json(const Algebra& alg) {
    const Quiver& q = alg.quiver();
    json j;
    j["prime"] = fp::prime();
    j["vertices"] = json::array();
    for (int v = 0; v < int(q.vertices.size()); ++v) j["vertices"].push_back(vertex_json(q, v));
    j["arrows"] = json::array();
    for (const auto& a : q.arrows)
        j["arrows"].push_back({{"id", a.id}, {"from", vertex_json(q, a.source)}, {"to", vertex_json(q, a.target)}});
    j["relations"] = json::array();
    for (const auto& r : alg.relations()) {
        json terms = json::array();
        for (const auto& t : r) {
            json path = json::array();
            for (int a : t.arrows) path.push_back(q.arrows[std::size_t(a)].id);
            terms.push_back({{"coeff", t.coeff}, {"path", path}});
        }
        j["relations"].push_back(terms);
    }
    return j;
}

std::string algebra_to_toml(const Algebra& alg) {
    json j = algebra_to_json(alg);
    std::string s = "prime = " + j["prime"].dump() + "\n";
    s += "vertices = " + toml_value(j["vertices"]) + "\n";
    for (const char* key : {"arrows", "relations"}) {
        s += std::string(key) + " = [";
        if (j[key].empty()) {
            s += "]\n";
            continue;
        }
        s += "\n";
        for (const auto& item : j[key]) s += "  " + toml_value(item) + ",\n";
        s += "]\n";
    }
    return s;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

json module_to_json(const Representation& m) {
    const Quiver& q = m.alg->quiver();
    json j;
    j["dims"] = m.dims;
    j["maps"] = json::object();
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        json rows = json::array();
        const Matrix& x = m.maps[a];
        for (std::size_t r = 0; r < x.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < x.cols(); ++c) row.push_back(fp::to_signed(x(r, c)));
            rows.push_back(row);
        }
        j["maps"][q.arrows[a].id] = rows;
    }
    return j;
}

Representation module_from_json(AlgebraPtr alg, const json& j) {
    const Quiver& q = alg->quiver();
    Representation m{alg, {}, {}};
    try {
        m.dims = j.at("dims").get<std::vector<std::size_t>>();
        if (m.dims.size() != q.vertices.size()) throw InputError("module: 'dims' has the wrong length");
        const json& maps = j.contains("maps") ? j.at("maps") : json::object();
        if (maps.is_array() && maps.size() != q.arrows.size()) throw InputError("module: one matrix per arrow expected");
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
            const auto& arrow = q.arrows[a];
            const std::size_t rows = m.dims[std::size_t(arrow.source)], cols = m.dims[std::size_t(arrow.target)];
            json data = maps.is_array() ? maps[a] : maps.value(arrow.id, json::array());
            auto ints = data.get<std::vector<std::vector<std::int64_t>>>();
            if (ints.empty() && rows > 0) ints.assign(rows, std::vector<std::int64_t>(cols, 0));
            if (ints.size() != rows) throw InputError("module: matrix of arrow " + arrow.id + " has the wrong shape");
            for (const auto& r : ints)
                if (r.size() != cols) throw InputError("module: matrix of arrow " + arrow.id + " has the wrong shape");
            m.maps.push_back(Matrix::from_rows(ints, cols));
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed module literal: ") + e.what());
    }
    validate_module(m);
    return m;
}

json complex_to_json(const TwoTermComplex& c) {
    const Algebra& alg = *c.alg;
    const Quiver& q = alg.quiver();
    json j;
    j["p1"] = json::array();
    j["p0"] = json::array();
    for (int v : c.p1) j["p1"].push_back(vertex_json(q, v));
    for (int v : c.p0) j["p0"].push_back(vertex_json(q, v));
    j["d"] = json::array();
    for (const auto& row : c.d) {
        json r = json::array();
        for (const auto& e : row) {
            json entry = json::object();
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i]) entry[alg.path_name(i)] = fp::to_signed(e[i]);
            r.push_back(entry);
        }
        j["d"].push_back(r);
    }
    return j;
}

TwoTermComplex complex_from_json(AlgebraPtr alg, const json& j) {
    const Quiver& q = alg->quiver();
    TwoTermComplex c{alg, {}, {}, {}};
    try {
        c.p1 = proj_sum_from_json(q, j.value("p1", json::array()), "complex p1");
        c.p0 = proj_sum_from_json(q, j.value("p0", json::array()), "complex p0");
        std::map<std::string, std::size_t> by_name;
        for (std::size_t i = 0; i < alg->dim(); ++i) by_name[alg->path_name(i)] = i;
        json d = j.value("d", json::array());
        if (d.size() != c.p1.size()) throw InputError("complex: 'd' needs one row per summand of p1");
        for (std::size_t r = 0; r < c.p1.size(); ++r) {
            if (d[r].size() != c.p0.size()) throw InputError("complex: each row of 'd' needs one entry per summand of p0");
            std::vector<Element> row;
            for (std::size_t col = 0; col < c.p0.size(); ++col) {
                const json& e = d[r][col];
                Element x = alg->zero();
                if (e.is_array()) {
                    if (e.size() != alg->dim()) throw InputError("complex: coefficient list must have length dim A");
                    for (std::size_t i = 0; i < e.size(); ++i) x[i] = fp::from_int(e[i].get<std::int64_t>());
                } else if (e.is_object()) {
                    for (const auto& [name, coeff] : e.items()) {
                        auto it = by_name.find(name);
                        if (it == by_name.end()) throw InputError("complex: unknown basis path '" + name + "'");
                        x[it->second] = fp::add(x[it->second], fp::from_int(coeff.get<std::int64_t>()));
                    }
                } else if (!e.is_null() && !(e.is_number_integer() && e.get<long long>() == 0)) {
                    throw InputError("complex: entries are coefficient lists or path maps");
                }
                for (std::size_t i = 0; i < x.size(); ++i) {
                    const Path& p = alg->basis(i);
                    if (x[i] && (p.source != c.p0[col] || p.target != c.p1[r]))
                        throw InputError("complex: path " + alg->path_name(i) + " does not map P_" +
                                         q.vertices[std::size_t(c.p1[r])] + " to P_" + q.vertices[std::size_t(c.p0[col])]);
                }
                row.push_back(x);
            }
            c.d.push_back(row);
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed complex literal: ") + e.what());
    }
    validate_complex(c);
    return c;
}

ObjSet subcategory_from_json(const Workbench& wb, const json& j) {
    const json& list = j.is_object() && j.contains("objects") ? j.at("objects") : j;
    if (!list.is_array()) throw InputError("subcategory must be a list of objects");
    const Quiver& q = wb.algebra().quiver();
    std::vector<std::size_t> ids;
    for (const auto& item : list) {
        if (!item.is_object()) throw InputError("subcategory entries must be objects");
        if (item.contains("stalk")) {
            ids.push_back(wb.stalk_id(vertex_of(q, item.at("stalk"), "stalk")));
        } else if (item.contains("shift")) {
            ids.push_back(wb.shift_id(vertex_of(q, item.at("shift"), "shift")));
        } else if (item.contains("module")) {
            const json& m = item.at("module");
            const auto& labels = wb.atlas().labels;
            std::optional<std::size_t> hit;
            if (m.is_string()) {
                auto it = std::find(labels.begin(), labels.end(), m.get<std::string>());
                if (it != labels.end()) hit = std::size_t(it - labels.begin());
            } else {
                Representation rep = module_from_json(wb.alg(), m);
                hit = wb.atlas().find(rep);
            }
            if (!hit) throw InputError("module " + m.dump() + " is not an indecomposable of the atlas");
            ids.push_back(wb.module_id(*hit));
        } else if (item.contains("p0") || item.contains("p1")) {
            try {
                for (auto id : wb.identify(complex_from_json(wb.alg(), item))) ids.push_back(id);
            } catch (const ModuleError& e) {
                throw InputError(std::string("complex literal: ") + e.what());
            }
        } else {
            throw InputError("subcategory entry " + item.dump() + " is not a stalk, shift, module or complex");
        }
    }
    return make_set(ids);
}

json subcategory_to_json(const Workbench& wb, const ObjSet& x) {
    const Quiver& q = wb.algebra().quiver();
    json out = json::array();
    for (auto id : x) {
        const auto& e = wb.entry(id);
        if (e.shift_vertex >= 0) out.push_back({{"shift", vertex_json(q, e.shift_vertex)}});
        else out.push_back({{"module", e.label}});
    }
    return out;
}

}  // namespace reltilt::io
