#include "coringlab/document.hpp"

#include <algorithm>
#include <sstream>

namespace coringlab::doc {

// ---------------------------------------------------------------------------
// positioned JSON reader
// ---------------------------------------------------------------------------

namespace {

struct JsonValue {
    enum class Kind { object, array, string, number, boolean, null_value };
    Kind kind = Kind::null_value;
    int line = 1, col = 1;
    std::string text;  // string contents or number literal
    bool flag = false;
    std::vector<std::pair<std::string, JsonValue>> members;
    std::vector<JsonValue> items;
};

struct JsonReader {
    const std::string& s;
    size_t i = 0;
    int line = 1, col = 1;
    std::vector<Diagnostic>& diags;
    bool failed = false;

    JsonReader(const std::string& text, std::vector<Diagnostic>& d) : s(text), diags(d) {}

    void error(const std::string& msg) {
        if (!failed) diags.push_back({line, col, msg});
        failed = true;
    }

    bool eof() const { return i >= s.size(); }

    void advance() {
        if (s[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    }

    void skip_ws() {
        while (!eof() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r')) advance();
    }

    bool expect(char c) {
        skip_ws();
        if (eof() || s[i] != c) {
            error(std::string("expected '") + c + "'");
            return false;
        }
        advance();
        return true;
    }

    std::string parse_string_raw() {
        std::string out;
        if (!expect('"')) return out;
        while (!eof() && s[i] != '"') {
            char c = s[i];
            if (c == '\\') {
                advance();
                if (eof()) break;
                char e = s[i];
                switch (e) {
                    case '"': out += '"'; break;
                    case '\\': out += '\\'; break;
                    case '/': out += '/'; break;
                    case 'n': out += '\n'; break;
                    case 't': out += '\t'; break;
                    case 'r': out += '\r'; break;
                    case 'b': out += '\b'; break;
                    case 'f': out += '\f'; break;
                    default: error("unsupported escape sequence"); break;
                }
                advance();
            } else {
                out += c;
                advance();
            }
        }
        if (eof())
            error("unterminated string");
        else
            advance();
        return out;
    }

    JsonValue parse_value() {
        skip_ws();
        JsonValue v;
        v.line = line;
        v.col = col;
        if (eof()) {
            error("unexpected end of input");
            return v;
        }
        char c = s[i];
        if (c == '{') {
            v.kind = JsonValue::Kind::object;
            advance();
            skip_ws();
            if (!eof() && s[i] == '}') {
                advance();
                return v;
            }
            while (!eof() && !failed) {
                skip_ws();
                std::string key = parse_string_raw();
                if (failed) break;
                if (!expect(':')) break;
                JsonValue memberv = parse_value();
                v.members.emplace_back(key, std::move(memberv));
                skip_ws();
                if (!eof() && s[i] == ',') {
                    advance();
                    continue;
                }
                expect('}');
                break;
            }
        } else if (c == '[') {
            v.kind = JsonValue::Kind::array;
            advance();
            skip_ws();
            if (!eof() && s[i] == ']') {
                advance();
                return v;
            }
            while (!eof() && !failed) {
                v.items.push_back(parse_value());
                skip_ws();
                if (!eof() && s[i] == ',') {
                    advance();
                    continue;
                }
                expect(']');
                break;
            }
        } else if (c == '"') {
            v.kind = JsonValue::Kind::string;
            v.text = parse_string_raw();
        } else if (c == 't' || c == 'f') {
            v.kind = JsonValue::Kind::boolean;
            const char* word = (c == 't') ? "true" : "false";
            for (const char* p = word; *p; ++p) {
                if (eof() || s[i] != *p) {
                    error("bad literal");
                    return v;
                }
                advance();
            }
            v.flag = (c == 't');
        } else if (c == 'n') {
            v.kind = JsonValue::Kind::null_value;
            for (const char* p = "null"; *p; ++p) {
                if (eof() || s[i] != *p) {
                    error("bad literal");
                    return v;
                }
                advance();
            }
        } else if (c == '-' || (c >= '0' && c <= '9')) {
            v.kind = JsonValue::Kind::number;
            while (!eof() && (s[i] == '-' || s[i] == '+' || s[i] == '.' || s[i] == 'e' ||
                              s[i] == 'E' || (s[i] >= '0' && s[i] <= '9'))) {
                v.text += s[i];
                advance();
            }
        } else {
            error("unexpected character");
        }
        return v;
    }
};

const JsonValue* member(const JsonValue& v, const std::string& key) {
    for (const auto& [k, val] : v.members)
        if (k == key) return &val;
    return nullptr;
}

}  // namespace

// ---------------------------------------------------------------------------
// model helpers
// ---------------------------------------------------------------------------

Attr Attr::ref(std::string v) {
    Attr a;
    a.kind = Kind::ref;
    a.text = std::move(v);
    return a;
}
Attr Attr::enum_text(std::string v) {
    Attr a;
    a.kind = Kind::text;
    a.text = std::move(v);
    return a;
}
Attr Attr::vec(std::vector<Rat> v) {
    Attr a;
    a.kind = Kind::scalar_vec;
    a.scalars = std::move(v);
    return a;
}
Attr Attr::boolean(bool v) {
    Attr a;
    a.kind = Kind::flag;
    a.flag = v;
    return a;
}
Attr Attr::number(long v) {
    Attr a;
    a.kind = Kind::integer;
    a.integer = v;
    return a;
}
Attr Attr::list(std::vector<std::string> v) {
    Attr a;
    a.kind = Kind::name_list;
    a.names = std::move(v);
    return a;
}
Attr Attr::table(std::vector<std::pair<std::string, std::string>> v) {
    Attr a;
    a.kind = Kind::name_map;
    a.pairs = std::move(v);
    return a;
}

const Attr* ObjectDecl::find(const std::string& key) const {
    for (const auto& [k, a] : attrs)
        if (k == key) return &a;
    return nullptr;
}

const std::string& ObjectDecl::ref(const std::string& key) const {
    const Attr* a = find(key);
    require(a != nullptr, "document.missing_field", "object lacks field '" + key + "'");
    return a->text;
}

const VectorSpace* SpecDocument::find_space(const std::string& name) const {
    for (const auto& [n, v] : spaces)
        if (n == name) return &v;
    return nullptr;
}
const MapDecl* SpecDocument::find_map(const std::string& name) const {
    for (const auto& [n, v] : maps)
        if (n == name) return &v;
    return nullptr;
}
const ObjectDecl* SpecDocument::find_object(const std::string& name) const {
    for (const auto& [n, v] : objects)
        if (n == name) return &v;
    return nullptr;
}

// ---------------------------------------------------------------------------
// schema
// ---------------------------------------------------------------------------

namespace {

Attr::Kind key_type(const std::string& key) {
    if (key == "vector") return Attr::Kind::scalar_vec;
    if (key == "omega" || key == "diffs") return Attr::Kind::name_list;
    if (key == "products") return Attr::Kind::name_map;
    if (key == "cap" || key == "degree") return Attr::Kind::integer;
    if (key == "counital") return Attr::Kind::flag;
    if (key == "side" || key == "flavor") return Attr::Kind::text;
    return Attr::Kind::ref;
}

bool is_map_key(const std::string& key) {
    static const char* keys[] = {"mul",           "unit",         "comul",       "counit",
                                 "antipode",      "antipode_inv", "psi",         "action",
                                 "coaction",      "left_action",  "right_action",
                                 "left_coaction", "right_coaction", "lambda",    "extension",
                                 "map",           "nabla",        "retraction"};
    for (const char* k : keys)
        if (key == k) return true;
    return false;
}

bool is_space_key(const std::string& key) { return key == "space"; }

std::vector<std::string> allowed_keys(const std::string& kind, const ObjectDecl& o) {
    if (kind == "algebra") return {"space", "mul", "unit"};
    if (kind == "coalgebra") return {"space", "comul", "counit"};
    if (kind == "bialgebra") return {"space", "mul", "unit", "comul", "counit"};
    if (kind == "hopf")
        return {"space", "mul", "unit", "comul", "counit", "antipode", "antipode_inv"};
    if (kind == "module") {
        if (o.find("cring")) return {"cring", "space", "coaction", "action"};
        return {"algebra", "side", "space", "action"};
    }
    if (kind == "bimodule") return {"algebra", "space", "left_action", "right_action"};
    if (kind == "comodule") {
        if (o.find("coring")) return {"coring", "space", "action", "coaction", "counital"};
        return {"coalgebra", "side", "space", "coaction"};
    }
    if (kind == "bicomodule") return {"coalgebra", "space", "left_coaction", "right_coaction"};
    if (kind == "coring")
        return {"algebra", "space", "left_action", "right_action", "comul", "counit"};
    if (kind == "grouplike") return {"coring", "vector", "flavor"};
    if (kind == "entwining") return {"algebra", "coalgebra", "psi"};
    if (kind == "cring")
        return {"coalgebra", "space", "left_coaction", "right_coaction", "mul", "unit"};
    if (kind == "character") {
        if (o.find("cring")) return {"cring", "map"};
        return {"algebra", "map"};
    }
    if (kind == "cointegral") return {"coalgebra", "map"};
    if (kind == "coderivation") return {"coalgebra", "bicomodule", "lambda", "extension"};
    if (kind == "connection") {
        const Attr* f = o.find("flavor");
        std::string flavor = f ? f->text : "";
        if (flavor == "module")
            return {"flavor", "coring", "grouplike", "module", "nabla", "degree"};
        if (flavor == "cring")
            return {"flavor", "cring", "character", "space", "coaction", "nabla", "degree"};
        return {"flavor", "coderivation", "side", "space", "coaction", "nabla"};
    }
    if (kind == "dga") return {"algebra", "cap", "omega", "products", "diffs"};
    if (kind == "entwined_module") return {"entwining", "space", "action", "coaction"};
    return {};
}

std::vector<std::string> required_keys(const std::string& kind, const ObjectDecl& o) {
    auto all = allowed_keys(kind, o);
    std::vector<std::string> req;
    for (const auto& k : all)
        if (k != "extension" && k != "counital") req.push_back(k);
    return req;
}

bool known_kind(const std::string& kind) {
    static const char* kinds[] = {"algebra",    "coalgebra",    "bialgebra",  "hopf",
                                  "module",     "bimodule",     "comodule",   "bicomodule",
                                  "coring",     "grouplike",    "entwining",  "cring",
                                  "character",  "cointegral",   "coderivation", "connection",
                                  "dga",        "entwined_module"};
    for (const char* k : kinds)
        if (kind == k) return true;
    return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// parse
// ---------------------------------------------------------------------------

ParseResult parse_document(const std::string& text) {
    ParseResult out;
    auto& diags = out.diagnostics;
    JsonReader reader(text, diags);
    JsonValue root = reader.parse_value();
    reader.skip_ws();
    if (!reader.failed && !reader.eof())
        diags.push_back({reader.line, reader.col, "trailing content"});
    if (!diags.empty()) return out;
    if (root.kind != JsonValue::Kind::object) {
        diags.push_back({root.line, root.col, "document must be a JSON object"});
        return out;
    }

    SpecDocument d;
    auto diag = [&](const JsonValue& v, const std::string& msg) {
        diags.push_back({v.line, v.col, msg});
    };

    for (const auto& [k, v] : root.members)
        if (k != "version" && k != "field" && k != "spaces" && k != "maps" && k != "objects")
            diag(v, "unknown key '" + k + "'");

    const JsonValue* version = member(root, "version");
    if (!version || version->kind != JsonValue::Kind::number || version->text != "1") {
        diags.push_back({root.line, root.col, "missing or unsupported \"version\" (must be 1)"});
        return out;
    }

    const JsonValue* field = member(root, "field");
    if (!field || field->kind != JsonValue::Kind::object) {
        diags.push_back({root.line, root.col, "missing \"field\" object"});
        return out;
    }
    {
        const JsonValue* kind = member(*field, "kind");
        if (!kind || kind->kind != JsonValue::Kind::string) {
            diag(*field, "field.kind must be \"rational\" or \"prime\"");
            return out;
        }
        for (const auto& [k, v] : field->members)
            if (k != "kind" && k != "p") diag(v, "unknown key '" + k + "' in field");
        if (kind->text == "rational") {
            d.field = Field::rationals();
        } else if (kind->text == "prime") {
            const JsonValue* p = member(*field, "p");
            if (!p || p->kind != JsonValue::Kind::string) {
                diag(*field, "prime field needs \"p\" as a string");
                return out;
            }
            try {
                d.field = Field::prime(mpz_class(p->text));
            } catch (const std::exception& e) {
                diag(*p, std::string("bad modulus: ") + e.what());
                return out;
            }
        } else {
            diag(*kind, "field.kind must be \"rational\" or \"prime\"");
            return out;
        }
    }

    if (const JsonValue* spaces = member(root, "spaces")) {
        if (spaces->kind != JsonValue::Kind::object) {
            diag(*spaces, "\"spaces\" must be an object");
            return out;
        }
        for (const auto& [name, sv] : spaces->members) {
            if (sv.kind != JsonValue::Kind::object) {
                diag(sv, "space '" + name + "' must be an object");
                continue;
            }
            for (const auto& [k, v] : sv.members)
                if (k != "dim" && k != "labels") diag(v, "unknown key '" + k + "' in space");
            const JsonValue* dim = member(sv, "dim");
            const JsonValue* labels = member(sv, "labels");
            if (!dim || dim->kind != JsonValue::Kind::number) {
                diag(sv, "space '" + name + "' needs a numeric dim");
                continue;
            }
            int n = std::atoi(dim->text.c_str());
            std::vector<std::string> ls;
            if (labels) {
                if (labels->kind != JsonValue::Kind::array) {
                    diag(*labels, "labels must be an array of strings");
                    continue;
                }
                bool lok = true;
                for (const auto& item : labels->items) {
                    if (item.kind != JsonValue::Kind::string) {
                        diag(item, "labels must be strings");
                        lok = false;
                        break;
                    }
                    ls.push_back(item.text);
                }
                if (!lok) continue;
            } else {
                for (int j = 0; j < n; ++j) ls.push_back("e" + std::to_string(j));
            }
            if (static_cast<int>(ls.size()) != n) {
                diag(sv, "space '" + name + "' has " + std::to_string(ls.size()) +
                             " labels for dim " + std::to_string(n));
                continue;
            }
            std::vector<std::string> sorted = ls;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                diag(sv, "space '" + name + "' has duplicate labels");
            if (d.find_space(name)) diag(sv, "duplicate space '" + name + "'");
            d.spaces.emplace_back(name, VectorSpace::named(std::move(ls)));
        }
    }

    if (const JsonValue* maps = member(root, "maps")) {
        if (maps->kind != JsonValue::Kind::object) {
            diag(*maps, "\"maps\" must be an object");
            return out;
        }
        for (const auto& [name, mv] : maps->members) {
            if (mv.kind != JsonValue::Kind::object) {
                diag(mv, "map '" + name + "' must be an object");
                continue;
            }
            for (const auto& [k, v] : mv.members)
                if (k != "src" && k != "dst" && k != "matrix")
                    diag(v, "unknown key '" + k + "' in map");
            MapDecl md;
            md.line = mv.line;
            md.col = mv.col;
            bool ok = true;
            for (const char* endkey : {"src", "dst"}) {
                const JsonValue* lst = member(mv, endkey);
                if (!lst || lst->kind != JsonValue::Kind::array) {
                    diag(mv, "map '" + name + "' needs \"" + endkey + "\" as an array");
                    ok = false;
                    continue;
                }
                for (const auto& item : lst->items) {
                    if (item.kind != JsonValue::Kind::string) {
                        diag(item, "space names must be strings");
                        ok = false;
                        break;
                    }
                    if (!d.find_space(item.text)) {
                        diag(item,
                             "map '" + name + "' references unknown space '" + item.text + "'");
                        ok = false;
                        break;
                    }
                    (std::string(endkey) == "src" ? md.src : md.dst).push_back(item.text);
                }
            }
            if (!ok) continue;
            int cols = 1, rows = 1;
            for (const auto& n : md.src) cols *= d.find_space(n)->dim;
            for (const auto& n : md.dst) rows *= d.find_space(n)->dim;
            const JsonValue* matrix = member(mv, "matrix");
            if (!matrix || matrix->kind != JsonValue::Kind::array) {
                diag(mv, "map '" + name + "' needs a \"matrix\" array");
                continue;
            }
            if (static_cast<int>(matrix->items.size()) != rows) {
                diag(*matrix, "map '" + name + "' expects a " + std::to_string(rows) + "x" +
                                  std::to_string(cols) + " matrix, got " +
                                  std::to_string(matrix->items.size()) + " rows");
                continue;
            }
            md.mat = Mat(rows, cols);
            bool mat_ok = true;
            for (int r = 0; r < rows && mat_ok; ++r) {
                const JsonValue& rowv = matrix->items[r];
                if (rowv.kind != JsonValue::Kind::array ||
                    static_cast<int>(rowv.items.size()) != cols) {
                    diag(rowv, "map '" + name + "' expects a " + std::to_string(rows) + "x" +
                                   std::to_string(cols) + " matrix, row " + std::to_string(r) +
                                   " has wrong length");
                    mat_ok = false;
                    break;
                }
                for (int c = 0; c < cols; ++c) {
                    const JsonValue& cell = rowv.items[c];
                    if (cell.kind != JsonValue::Kind::string) {
                        diag(cell, "scalars must be strings like \"3\" or \"-1/2\"");
                        mat_ok = false;
                        break;
                    }
                    try {
                        md.mat.at(r, c) = d.field.parse_scalar(cell.text);
                    } catch (const Error& e) {
                        diag(cell, std::string("malformed scalar: ") + e.what());
                        mat_ok = false;
                        break;
                    }
                }
            }
            if (!mat_ok) continue;
            if (d.find_map(name)) diag(mv, "duplicate map '" + name + "'");
            d.maps.emplace_back(name, std::move(md));
        }
    }

    if (const JsonValue* objects = member(root, "objects")) {
        if (objects->kind != JsonValue::Kind::object) {
            diag(*objects, "\"objects\" must be an object");
            return out;
        }
        for (const auto& [name, ov] : objects->members) {
            if (ov.kind != JsonValue::Kind::object) {
                diag(ov, "object '" + name + "' must be an object");
                continue;
            }
            const JsonValue* kind = member(ov, "kind");
            if (!kind || kind->kind != JsonValue::Kind::string) {
                diag(ov, "object '" + name + "' needs a string \"kind\"");
                continue;
            }
            if (!known_kind(kind->text)) {
                diag(*kind, "unknown object kind '" + kind->text + "'");
                continue;
            }
            ObjectDecl od;
            od.kind = kind->text;
            od.line = ov.line;
            od.col = ov.col;
            bool ok = true;
            for (const auto& [k, v] : ov.members) {
                if (k == "kind") continue;
                Attr a;
                switch (key_type(k)) {
                    case Attr::Kind::scalar_vec: {
                        if (v.kind != JsonValue::Kind::array) {
                            diag(v, "'" + k + "' must be an array of scalars");
                            ok = false;
                            break;
                        }
                        std::vector<Rat> vals;
                        for (const auto& item : v.items) {
                            if (item.kind != JsonValue::Kind::string) {
                                diag(item, "scalars must be strings");
                                ok = false;
                                break;
                            }
                            try {
                                vals.push_back(d.field.parse_scalar(item.text));
                            } catch (const Error& e) {
                                diag(item, std::string("malformed scalar: ") + e.what());
                                ok = false;
                                break;
                            }
                        }
                        a = Attr::vec(std::move(vals));
                        break;
                    }
                    case Attr::Kind::name_list: {
                        if (v.kind != JsonValue::Kind::array) {
                            diag(v, "'" + k + "' must be an array of names");
                            ok = false;
                            break;
                        }
                        std::vector<std::string> names;
                        for (const auto& item : v.items) {
                            if (item.kind != JsonValue::Kind::string) {
                                diag(item, "names must be strings");
                                ok = false;
                                break;
                            }
                            names.push_back(item.text);
                        }
                        a = Attr::list(std::move(names));
                        break;
                    }
                    case Attr::Kind::name_map: {
                        if (v.kind != JsonValue::Kind::object) {
                            diag(v, "'" + k + "' must be an object of names");
                            ok = false;
                            break;
                        }
                        std::vector<std::pair<std::string, std::string>> pairs;
                        for (const auto& [pk, pv] : v.members) {
                            if (pv.kind != JsonValue::Kind::string) {
                                diag(pv, "names must be strings");
                                ok = false;
                                break;
                            }
                            pairs.emplace_back(pk, pv.text);
                        }
                        a = Attr::table(std::move(pairs));
                        break;
                    }
                    case Attr::Kind::integer: {
                        if (v.kind != JsonValue::Kind::number) {
                            diag(v, "'" + k + "' must be a number");
                            ok = false;
                            break;
                        }
                        a = Attr::number(std::atol(v.text.c_str()));
                        break;
                    }
                    case Attr::Kind::flag: {
                        if (v.kind != JsonValue::Kind::boolean) {
                            diag(v, "'" + k + "' must be a boolean");
                            ok = false;
                            break;
                        }
                        a = Attr::boolean(v.flag);
                        break;
                    }
                    case Attr::Kind::text:
                    case Attr::Kind::ref: {
                        if (v.kind != JsonValue::Kind::string) {
                            diag(v, "'" + k + "' must be a string");
                            ok = false;
                            break;
                        }
                        a = (key_type(k) == Attr::Kind::text) ? Attr::enum_text(v.text)
                                                              : Attr::ref(v.text);
                        break;
                    }
                }
                if (!ok) break;
                od.attrs.emplace_back(k, std::move(a));
            }
            if (!ok) continue;
            auto allowed = allowed_keys(od.kind, od);
            for (const auto& [k, a] : od.attrs)
                if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
                    diag(ov, "unknown key '" + k + "' in " + od.kind + " '" + name + "'");
            for (const auto& k : required_keys(od.kind, od))
                if (!od.find(k))
                    diag(ov, od.kind + " '" + name + "' lacks required field '" + k + "'");
            if (d.find_object(name)) diag(ov, "duplicate object '" + name + "'");
            d.objects.emplace_back(name, std::move(od));
        }
    }
    if (!diags.empty()) return out;

    for (const auto& [name, od] : d.objects) {
        for (const auto& [k, a] : od.attrs) {
            if (a.kind != Attr::Kind::ref) continue;
            if (is_space_key(k)) {
                if (!d.find_space(a.text))
                    diags.push_back({od.line, od.col,
                                     od.kind + " '" + name + "' references unknown space '" +
                                         a.text + "'"});
            } else if (is_map_key(k)) {
                if (!d.find_map(a.text))
                    diags.push_back({od.line, od.col,
                                     od.kind + " '" + name + "' references unknown map '" +
                                         a.text + "'"});
            } else {
                if (!d.find_object(a.text))
                    diags.push_back({od.line, od.col,
                                     od.kind + " '" + name + "' references unknown object '" +
                                         a.text + "'"});
            }
        }
        if (const Attr* omega = od.find("omega"))
            for (const auto& n : omega->names)
                if (!d.find_space(n))
                    diags.push_back({od.line, od.col,
                                     "dga '" + name + "' references unknown space '" + n + "'"});
        if (const Attr* diffs = od.find("diffs"))
            for (const auto& n : diffs->names)
                if (!d.find_map(n))
                    diags.push_back({od.line, od.col,
                                     "dga '" + name + "' references unknown map '" + n + "'"});
        if (const Attr* prods = od.find("products"))
            for (const auto& [pk, pv] : prods->pairs)
                if (!d.find_map(pv))
                    diags.push_back({od.line, od.col,
                                     "dga '" + name + "' references unknown map '" + pv + "'"});
    }
    if (!diags.empty()) return out;
    out.document = std::move(d);
    return out;
}

// ---------------------------------------------------------------------------
// emit
// ---------------------------------------------------------------------------

namespace {

std::string quote(const std::string& s) { return "\"" + json_escape(s) + "\""; }

}  // namespace

std::string emit_document(const SpecDocument& d) {
    std::ostringstream os;
    os << "{\n  \"version\": 1,\n  \"field\": {\"kind\": "
       << (d.field.kind() == FieldKind::rational ? "\"rational\"" : "\"prime\"");
    if (d.field.kind() == FieldKind::prime)
        os << ", \"p\": " << quote(d.field.modulus().get_str());
    os << "},\n  \"spaces\": {";
    for (size_t i = 0; i < d.spaces.size(); ++i) {
        const auto& [name, v] = d.spaces[i];
        os << (i ? ",\n    " : "\n    ") << quote(name) << ": {\"dim\": " << v.dim
           << ", \"labels\": [";
        for (int j = 0; j < v.dim; ++j) os << (j ? ", " : "") << quote(v.labels[j]);
        os << "]}";
    }
    os << (d.spaces.empty() ? "}" : "\n  }") << ",\n  \"maps\": {";
    for (size_t i = 0; i < d.maps.size(); ++i) {
        const auto& [name, m] = d.maps[i];
        os << (i ? ",\n    " : "\n    ") << quote(name) << ": {\"src\": [";
        for (size_t j = 0; j < m.src.size(); ++j) os << (j ? ", " : "") << quote(m.src[j]);
        os << "], \"dst\": [";
        for (size_t j = 0; j < m.dst.size(); ++j) os << (j ? ", " : "") << quote(m.dst[j]);
        os << "], \"matrix\": [";
        for (int r = 0; r < m.mat.rows; ++r) {
            os << (r ? ",\n      " : "\n      ") << "[";
            for (int c = 0; c < m.mat.cols; ++c)
                os << (c ? ", " : "") << quote(Field::to_string(m.mat.at(r, c)));
            os << "]";
        }
        os << (m.mat.rows ? "\n    ]}" : "]}");
    }
    os << (d.maps.empty() ? "}" : "\n  }") << ",\n  \"objects\": {";
    for (size_t i = 0; i < d.objects.size(); ++i) {
        const auto& [name, o] = d.objects[i];
        os << (i ? ",\n    " : "\n    ") << quote(name) << ": {\"kind\": " << quote(o.kind);
        for (const auto& [k, a] : o.attrs) {
            os << ", " << quote(k) << ": ";
            switch (a.kind) {
                case Attr::Kind::ref:
                case Attr::Kind::text: os << quote(a.text); break;
                case Attr::Kind::flag: os << (a.flag ? "true" : "false"); break;
                case Attr::Kind::integer: os << a.integer; break;
                case Attr::Kind::scalar_vec: {
                    os << "[";
                    for (size_t j = 0; j < a.scalars.size(); ++j)
                        os << (j ? ", " : "") << quote(Field::to_string(a.scalars[j]));
                    os << "]";
                    break;
                }
                case Attr::Kind::name_list: {
                    os << "[";
                    for (size_t j = 0; j < a.names.size(); ++j)
                        os << (j ? ", " : "") << quote(a.names[j]);
                    os << "]";
                    break;
                }
                case Attr::Kind::name_map: {
                    os << "{";
                    for (size_t j = 0; j < a.pairs.size(); ++j)
                        os << (j ? ", " : "") << quote(a.pairs[j].first) << ": "
                           << quote(a.pairs[j].second);
                    os << "}";
                    break;
                }
            }
        }
        os << "}";
    }
    os << (d.objects.empty() ? "}" : "\n  }") << "\n}\n";
    return os.str();
}

bool same_document(const SpecDocument& a, const SpecDocument& b) {
    if (!(a.field == b.field)) return false;
    if (a.spaces.size() != b.spaces.size() || a.maps.size() != b.maps.size() ||
        a.objects.size() != b.objects.size())
        return false;
    for (size_t i = 0; i < a.spaces.size(); ++i)
        if (a.spaces[i].first != b.spaces[i].first ||
            a.spaces[i].second.labels != b.spaces[i].second.labels)
            return false;
    for (size_t i = 0; i < a.maps.size(); ++i) {
        if (a.maps[i].first != b.maps[i].first || a.maps[i].second.src != b.maps[i].second.src ||
            a.maps[i].second.dst != b.maps[i].second.dst ||
            !mat_equal(a.maps[i].second.mat, b.maps[i].second.mat))
            return false;
    }
    for (size_t i = 0; i < a.objects.size(); ++i) {
        const auto& [an, ao] = a.objects[i];
        const auto& [bn, bo] = b.objects[i];
        if (an != bn || ao.kind != bo.kind || ao.attrs.size() != bo.attrs.size()) return false;
        for (size_t j = 0; j < ao.attrs.size(); ++j) {
            const auto& [ak, aa] = ao.attrs[j];
            const auto& [bk, ba] = bo.attrs[j];
            if (ak != bk || aa.kind != ba.kind || aa.text != ba.text || aa.flag != ba.flag ||
                aa.integer != ba.integer || aa.names != ba.names || aa.pairs != ba.pairs)
                return false;
            if (aa.scalars.size() != ba.scalars.size()) return false;
            for (size_t sc = 0; sc < aa.scalars.size(); ++sc)
                if (aa.scalars[sc] != ba.scalars[sc]) return false;
        }
    }
    return true;
}

void ensure_space(SpecDocument& d, const std::string& name, const VectorSpace& v) {
    if (const VectorSpace* e = d.find_space(name)) {
        require(e->dim == v.dim, "document.space_clash", "space '" + name + "' redefined");
        return;
    }
    d.spaces.emplace_back(name, v);
}

void ensure_map(SpecDocument& d, const std::string& name, std::vector<std::string> src,
                std::vector<std::string> dst, const Mat& m) {
    if (const MapDecl* e = d.find_map(name)) {
        require(mat_equal(e->mat, m), "document.map_clash", "map '" + name + "' redefined");
        return;
    }
    MapDecl md;
    md.src = std::move(src);
    md.dst = std::move(dst);
    md.mat = m;
    d.maps.emplace_back(name, std::move(md));
}

void add_object(SpecDocument& d, const std::string& name, ObjectDecl obj) {
    require(d.find_object(name) == nullptr, "document.object_clash",
            "object '" + name + "' redefined");
    d.objects.emplace_back(name, std::move(obj));
}

// ---------------------------------------------------------------------------
// typed view
// ---------------------------------------------------------------------------

const ObjectDecl& Workbench::obj(const std::string& name, const char* expected_kind) const {
    const ObjectDecl* o = d_.find_object(name);
    require(o != nullptr, "document.unknown_object", "no object named '" + name + "'");
    if (expected_kind)
        require(o->kind == expected_kind, "document.kind",
                "object '" + name + "' has kind '" + o->kind + "', expected '" + expected_kind +
                    "'");
    return *o;
}

VectorSpace Workbench::space(const std::string& name) const {
    const VectorSpace* v = d_.find_space(name);
    require(v != nullptr, "document.unknown_space", "no space named '" + name + "'");
    return *v;
}

LinearMap Workbench::map(const std::string& name) const {
    const MapDecl* m = d_.find_map(name);
    require(m != nullptr, "document.unknown_map", "no map named '" + name + "'");
    std::vector<VectorSpace> src, dst;
    for (const auto& n : m->src) src.push_back(space(n));
    for (const auto& n : m->dst) dst.push_back(space(n));
    VectorSpace s = src.empty() ? unit_space() : tensor_space(src);
    VectorSpace t = dst.empty() ? unit_space() : tensor_space(dst);
    return LinearMap(d_.field, s, t, m->mat);
}

namespace {

bool kind_in(const std::string& k, std::initializer_list<const char*> list) {
    for (const char* c : list)
        if (k == c) return true;
    return false;
}

}  // namespace

Algebra Workbench::algebra(const std::string& name) const {
    const ObjectDecl& o = obj(name);
    require(kind_in(o.kind, {"algebra", "bialgebra", "hopf"}), "document.kind",
            "object '" + name + "' is not an algebra");
    Algebra a{space(o.ref("space")), map(o.ref("mul")), map(o.ref("unit"))};
    require(a.mul.src.dim == a.space.dim * a.space.dim && a.mul.dst.dim == a.space.dim,
            "document.shape", "multiplication of '" + name + "' has wrong shape");
    require(a.unit.src.dim == 1 && a.unit.dst.dim == a.space.dim, "document.shape",
            "unit of '" + name + "' has wrong shape");
    return a;
}

Coalgebra Workbench::coalgebra(const std::string& name) const {
    const ObjectDecl& o = obj(name);
    require(kind_in(o.kind, {"coalgebra", "bialgebra", "hopf"}), "document.kind",
            "object '" + name + "' is not a coalgebra");
    Coalgebra c{space(o.ref("space")), map(o.ref("comul")), map(o.ref("counit"))};
    require(c.comul.src.dim == c.space.dim && c.comul.dst.dim == c.space.dim * c.space.dim,
            "document.shape", "comultiplication of '" + name + "' has wrong shape");
    require(c.counit.src.dim == c.space.dim && c.counit.dst.dim == 1, "document.shape",
            "counit of '" + name + "' has wrong shape");
    return c;
}

Bialgebra Workbench::bialgebra(const std::string& name) const {
    const ObjectDecl& o = obj(name);
    require(kind_in(o.kind, {"bialgebra", "hopf"}), "document.kind",
            "object '" + name + "' is not a bialgebra");
    return Bialgebra{algebra(name), coalgebra(name)};
}

HopfAlgebra Workbench::hopf(const std::string& name) const {
    const ObjectDecl& o = obj(name, "hopf");
    return HopfAlgebra{bialgebra(name), map(o.ref("antipode")), map(o.ref("antipode_inv"))};
}

Bimodule Workbench::bimodule(const std::string& name) const {
    const ObjectDecl& o = obj(name, "bimodule");
    return Bimodule{space(o.ref("space")), map(o.ref("left_action")), map(o.ref("right_action"))};
}

Bicomodule Workbench::bicomodule(const std::string& name) const {
    const ObjectDecl& o = obj(name, "bicomodule");
    return Bicomodule{space(o.ref("space")), map(o.ref("left_coaction")),
                      map(o.ref("right_coaction"))};
}

Coring Workbench::coring(const std::string& name) const {
    const ObjectDecl& o = obj(name, "coring");
    Algebra a = algebra(o.ref("algebra"));
    Bimodule carrier{space(o.ref("space")), map(o.ref("left_action")), map(o.ref("right_action"))};
    return make_coring(a, carrier, map(o.ref("comul")), map(o.ref("counit")));
}

Entwining Workbench::entwining(const std::string& name) const {
    const ObjectDecl& o = obj(name, "entwining");
    return Entwining{algebra(o.ref("algebra")), coalgebra(o.ref("coalgebra")), map(o.ref("psi"))};
}

CRing Workbench::cring(const std::string& name) const {
    const ObjectDecl& o = obj(name, "cring");
    Coalgebra c = coalgebra(o.ref("coalgebra"));
    Bicomodule carrier{space(o.ref("space")), map(o.ref("left_coaction")),
                       map(o.ref("right_coaction"))};
    return make_cring_ambient(c, carrier, map(o.ref("mul")), map(o.ref("unit")));
}

Character Workbench::character(const std::string& name) const {
    const ObjectDecl& o = obj(name, "character");
    return Character{map(o.ref("map"))};
}

Cointegral Workbench::cointegral(const std::string& name) const {
    const ObjectDecl& o = obj(name, "cointegral");
    return Cointegral{map(o.ref("map"))};
}

Coderivation Workbench::coderivation(const std::string& name) const {
    const ObjectDecl& o = obj(name, "coderivation");
    Coalgebra c = coalgebra(o.ref("coalgebra"));
    Bicomodule L = bicomodule(o.ref("bicomodule"));
    LinearMap lambda = map(o.ref("lambda"));
    if (const Attr* ext = o.find("extension")) {
        Coderivation base = make_coderivation(c, L, lambda);
        LinearMap amb = map(ext->text);
        require(amb.src.dim == L.space.dim * L.space.dim && amb.dst.dim == L.space.dim,
                "document.shape", "extension of '" + name + "' has wrong shape");
        return make_extended_coderivation(c, L, lambda, compose(amb, base.LL.sub.incl));
    }
    return make_coderivation(c, L, lambda);
}

TruncatedDGA Workbench::dga(const std::string& name) const {
    const ObjectDecl& o = obj(name, "dga");
    TruncatedDGA out;
    out.A = algebra(o.ref("algebra"));
    out.cap = static_cast<int>(o.find("cap")->integer);
    require(out.cap >= 1, "document.shape", "dga cap must be at least 1");
    const Attr* omega = o.find("omega");
    require(static_cast<int>(omega->names.size()) == out.cap, "document.shape",
            "dga '" + name + "' must list one omega space per degree 1..cap");
    out.omega.assign(out.cap + 1, VectorSpace{});
    out.omega[0] = out.A.space;
    for (int n = 1; n <= out.cap; ++n) out.omega[n] = space(omega->names[n - 1]);
    for (const auto& [key, mapname] : o.find("products")->pairs) {
        int p = -1, q = -1;
        if (std::sscanf(key.c_str(), "%d,%d", &p, &q) != 2 || p < 0 || q < 0 ||
            p + q > out.cap)
            throw Error("document.shape", "bad product key '" + key + "' in dga '" + name + "'");
        LinearMap pm = map(mapname);
        require(pm.src.dim == out.omega[p].dim * out.omega[q].dim &&
                    pm.dst.dim == out.omega[p + q].dim,
                "document.shape", "product '" + key + "' of dga '" + name + "' has wrong shape");
        out.product[{p, q}] = pm;
    }
    for (int p = 0; p <= out.cap; ++p)
        for (int q = 0; p + q <= out.cap; ++q)
            require(out.product.count({p, q}) == 1, "document.shape",
                    "dga '" + name + "' lacks the product for degrees " + std::to_string(p) + "," +
                        std::to_string(q));
    const Attr* diffs = o.find("diffs");
    require(static_cast<int>(diffs->names.size()) == out.cap, "document.shape",
            "dga '" + name + "' must list cap differentials");
    for (int n = 0; n < out.cap; ++n) {
        LinearMap dm = map(diffs->names[n]);
        require(dm.src.dim == out.omega[n].dim && dm.dst.dim == out.omega[n + 1].dim,
                "document.shape", "differential " + std::to_string(n) + " of dga '" + name +
                                      "' has wrong shape");
        out.diff.push_back(dm);
    }
    return out;
}

EntwinedModule Workbench::entwined_module(const std::string& name) const {
    const ObjectDecl& o = obj(name, "entwined_module");
    VectorSpace m = space(o.ref("space"));
    return EntwinedModule{RightModule{m, map(o.ref("action"))},
                          RightComodule{m, map(o.ref("coaction"))}};
}

std::vector<Rat> Workbench::grouplike_vector(const std::string& name) const {
    const ObjectDecl& o = obj(name, "grouplike");
    return o.find("vector")->scalars;
}

GrouplikeFlavor Workbench::grouplike_flavor(const std::string& name) const {
    const ObjectDecl& o = obj(name, "grouplike");
    const std::string& f = o.find("flavor")->text;
    require(f == "grouplike" || f == "semi_grouplike", "document.shape",
            "grouplike '" + name + "' has unknown flavor '" + f + "'");
    return f == "grouplike" ? GrouplikeFlavor::grouplike : GrouplikeFlavor::semi_grouplike;
}

std::vector<std::string> Workbench::object_names() const {
    std::vector<std::string> out;
    for (const auto& [n, o] : d_.objects) out.push_back(n);
    return out;
}

Report Workbench::check_object(const std::string& name) const {
    const ObjectDecl& o = obj(name);
    const Field& F = d_.field;
    if (o.kind == "algebra") return check_algebra(algebra(name), name);
    if (o.kind == "coalgebra") return check_coalgebra(coalgebra(name), name);
    if (o.kind == "bialgebra") return check_bialgebra(bialgebra(name), name);
    if (o.kind == "hopf") return check_hopf(hopf(name), name);
    if (o.kind == "bimodule") return check_bimodule(algebra(o.ref("algebra")), bimodule(name), name);
    if (o.kind == "bicomodule")
        return check_bicomodule(coalgebra(o.ref("coalgebra")), bicomodule(name), name);
    if (o.kind == "module") {
        if (o.find("cring")) {
            CRing r = cring(o.ref("cring"));
            RightComodule m{space(o.ref("space")), map(o.ref("coaction"))};
            CRingModule cm = make_cring_module_ambient(r, m, map(o.ref("action")));
            Report rep = check_right_comodule(r.C, m, name);
            rep.merge(check_cring_module(r, cm, name));
            return rep;
        }
        Algebra a = algebra(o.ref("algebra"));
        const std::string& side = o.find("side")->text;
        if (side == "right")
            return check_right_module(a, RightModule{space(o.ref("space")), map(o.ref("action"))},
                                      name);
        if (side == "left")
            return check_left_module(a, LeftModule{space(o.ref("space")), map(o.ref("action"))},
                                     name);
        throw Error("document.shape", "module '" + name + "' has unknown side '" + side + "'");
    }
    if (o.kind == "comodule") {
        if (o.find("coring")) {
            Coring c = coring(o.ref("coring"));
            RightModule m{space(o.ref("space")), map(o.ref("action"))};
            const Attr* cu = o.find("counital");
            CoringComodule cm =
                make_coring_comodule(c, m, map(o.ref("coaction")), cu ? cu->flag : true);
            Report rep = check_right_module(c.A, m, name);
            rep.merge(check_coring_comodule(c, cm, name));
            return rep;
        }
        Coalgebra c = coalgebra(o.ref("coalgebra"));
        const std::string& side = o.find("side")->text;
        if (side == "right")
            return check_right_comodule(
                c, RightComodule{space(o.ref("space")), map(o.ref("coaction"))}, name);
        if (side == "left")
            return check_left_comodule(
                c, LeftComodule{space(o.ref("space")), map(o.ref("coaction"))}, name);
        throw Error("document.shape", "comodule '" + name + "' has unknown side '" + side + "'");
    }
    if (o.kind == "coring") return check_coring(coring(name), name);
    if (o.kind == "grouplike") {
        Coring c = coring(o.ref("coring"));
        Report rep = verify_grouplike(c, grouplike_vector(name), grouplike_flavor(name));
        rep.object = name;
        return rep;
    }
    if (o.kind == "entwining") return check_bowtie(entwining(name), name);
    if (o.kind == "cring") return check_cring(cring(name), name);
    if (o.kind == "character") {
        if (o.find("cring")) return check_character(cring(o.ref("cring")), character(name), name);
        Algebra a = algebra(o.ref("algebra"));
        LinearMap chi = map(o.ref("map"));
        Report rep;
        rep.object = name;
        check_equal_maps(rep, "character.mult", "chi.mul = chi (x) chi", compose(chi, a.mul),
                         kron(chi, chi));
        check_equal_maps(rep, "character.unit", "chi.unit = 1", compose(chi, a.unit),
                         identity_map(F, unit_space()));
        return rep;
    }
    if (o.kind == "cointegral")
        return check_cointegral(coalgebra(o.ref("coalgebra")), cointegral(name), name);
    if (o.kind == "coderivation") return check_coderivation(coderivation(name), name);
    if (o.kind == "dga") return check_dga(dga(name), name);
    if (o.kind == "entwined_module")
        return check_entwined_module(entwining(o.ref("entwining")), entwined_module(name), name);
    if (o.kind == "connection") {
        const std::string& flavor = o.find("flavor")->text;
        if (flavor == "module") {
            Coring c = coring(o.ref("coring"));
            std::vector<Rat> g = grouplike_vector(o.ref("grouplike"));
            GrouplikeFlavor fl = grouplike_flavor(o.ref("grouplike"));
            int degree = static_cast<int>(o.find("degree")->integer);
            RoiterData R = roiter_dga(c, g, degree, fl);
            const ObjectDecl& mo = obj(o.ref("module"), "module");
            RightModule m{space(mo.ref("space")), map(mo.ref("action"))};
            LinearMap amb = map(o.ref("nabla"));
            LinearMap idm = identity_map(F, m.space);
            LinearMap round = kron(idm, compose(R.omega1_sub.incl, R.omega1_sub.retr));
            require(equal(compose(round, amb), amb), "document.shape",
                    "connection '" + name + "' does not land in M (x) one-forms");
            QuotientSpace MO1 = tensor_relations_quotient(
                F, m.space, R.dga.omega[1], m.act, dga_product(R.dga, 0, 1));
            LinearMap nabla =
                compose(MO1.proj, compose(kron(idm, R.omega1_sub.retr), amb));
            ModuleConnection conn = make_module_connection(R.dga, m, nabla);
            Report rep = check_module_connection(R.dga, conn, name);
            return rep;
        }
        if (flavor == "cring") {
            CRing r = cring(o.ref("cring"));
            Character k = character(o.ref("character"));
            int degree = static_cast<int>(o.find("degree")->integer);
            CoderivationComplex X = coderivation_complex(r, k, degree);
            RightComodule m{space(o.ref("space")), map(o.ref("coaction"))};
            LinearMap amb = map(o.ref("nabla"));
            require(amb.src.dim == m.space.dim * X.Abar.repr.dim && amb.dst.dim == m.space.dim,
                    "document.shape", "connection '" + name + "' has wrong nabla shape");
            ComoduleConnection conn;
            conn.side = ComoduleConnection::Side::right;
            conn.mspace = m.space;
            conn.coact = m.coact;
            conn.ML = cotensor(r.C, m, X.Abar_bi);
            conn.nabla = compose(amb, conn.ML.sub.incl);
            return check_connection(X.D, conn, name);
        }
        Coderivation D = coderivation(o.ref("coderivation"));
        const std::string& side = o.find("side")->text;
        LinearMap amb = map(o.ref("nabla"));
        if (side == "right") {
            RightComodule m{space(o.ref("space")), map(o.ref("coaction"))};
            CotensorSpace ML = cotensor(D.C, m, D.L);
            ComoduleConnection conn = make_right_connection(D, m, compose(amb, ML.sub.incl));
            return check_connection(D, conn, name);
        }
        LeftComodule m{space(o.ref("space")), map(o.ref("coaction"))};
        CotensorSpace ML = cotensor(D.C, D.L, m);
        ComoduleConnection conn = make_left_connection(D, m, compose(amb, ML.sub.incl));
        return check_connection(D, conn, name);
    }
    throw Error("document.kind", "no checker for kind '" + o.kind + "'");
}

// ---------------------------------------------------------------------------
// emitters
// ---------------------------------------------------------------------------

namespace {

std::string space_of(const SpecDocument& d, const std::string& obj_name) {
    const ObjectDecl* o = d.find_object(obj_name);
    require(o != nullptr, "document.unknown_object", "no object named '" + obj_name + "'");
    return o->ref("space");
}

}  // namespace

void emit_algebra(SpecDocument& d, const std::string& name, const std::string& space_name,
                  const Algebra& a) {
    ensure_space(d, space_name, a.space);
    ensure_map(d, name + ".mul", {space_name, space_name}, {space_name}, a.mul.m);
    ensure_map(d, name + ".unit", {}, {space_name}, a.unit.m);
    ObjectDecl o;
    o.kind = "algebra";
    o.attrs = {{"space", Attr::ref(space_name)},
               {"mul", Attr::ref(name + ".mul")},
               {"unit", Attr::ref(name + ".unit")}};
    add_object(d, name, std::move(o));
}

void emit_coalgebra(SpecDocument& d, const std::string& name, const std::string& space_name,
                    const Coalgebra& c) {
    ensure_space(d, space_name, c.space);
    ensure_map(d, name + ".comul", {space_name}, {space_name, space_name}, c.comul.m);
    ensure_map(d, name + ".counit", {space_name}, {}, c.counit.m);
    ObjectDecl o;
    o.kind = "coalgebra";
    o.attrs = {{"space", Attr::ref(space_name)},
               {"comul", Attr::ref(name + ".comul")},
               {"counit", Attr::ref(name + ".counit")}};
    add_object(d, name, std::move(o));
}

void emit_hopf(SpecDocument& d, const std::string& name, const std::string& space_name,
               const HopfAlgebra& h) {
    ensure_space(d, space_name, h.b.alg.space);
    ensure_map(d, name + ".mul", {space_name, space_name}, {space_name}, h.b.alg.mul.m);
    ensure_map(d, name + ".unit", {}, {space_name}, h.b.alg.unit.m);
    ensure_map(d, name + ".comul", {space_name}, {space_name, space_name}, h.b.coalg.comul.m);
    ensure_map(d, name + ".counit", {space_name}, {}, h.b.coalg.counit.m);
    ensure_map(d, name + ".antipode", {space_name}, {space_name}, h.antipode.m);
    ensure_map(d, name + ".antipode_inv", {space_name}, {space_name}, h.antipode_inv.m);
    ObjectDecl o;
    o.kind = "hopf";
    o.attrs = {{"space", Attr::ref(space_name)},
               {"mul", Attr::ref(name + ".mul")},
               {"unit", Attr::ref(name + ".unit")},
               {"comul", Attr::ref(name + ".comul")},
               {"counit", Attr::ref(name + ".counit")},
               {"antipode", Attr::ref(name + ".antipode")},
               {"antipode_inv", Attr::ref(name + ".antipode_inv")}};
    add_object(d, name, std::move(o));
}

void emit_coring(SpecDocument& d, const std::string& name, const std::string& algebra_obj,
                 const std::string& space_name, const Coring& c) {
    std::string aspace = space_of(d, algebra_obj);
    ensure_space(d, space_name, c.carrier.space);
    ensure_map(d, name + ".lact", {aspace, space_name}, {space_name}, c.carrier.lact.m);
    ensure_map(d, name + ".ract", {space_name, aspace}, {space_name}, c.carrier.ract.m);
    ensure_map(d, name + ".cop", {space_name}, {space_name, space_name},
               compose(c.W2.sect, c.cop).m);
    ensure_map(d, name + ".cou", {space_name}, {aspace}, c.cou.m);
    ObjectDecl o;
    o.kind = "coring";
    o.attrs = {{"algebra", Attr::ref(algebra_obj)},
               {"space", Attr::ref(space_name)},
               {"left_action", Attr::ref(name + ".lact")},
               {"right_action", Attr::ref(name + ".ract")},
               {"comul", Attr::ref(name + ".cop")},
               {"counit", Attr::ref(name + ".cou")}};
    add_object(d, name, std::move(o));
}

void emit_grouplike(SpecDocument& d, const std::string& name, const std::string& coring_obj,
                    const std::vector<Rat>& g, GrouplikeFlavor flavor) {
    ObjectDecl o;
    o.kind = "grouplike";
    o.attrs = {{"coring", Attr::ref(coring_obj)},
               {"vector", Attr::vec(g)},
               {"flavor", Attr::enum_text(flavor == GrouplikeFlavor::grouplike
                                              ? "grouplike"
                                              : "semi_grouplike")}};
    add_object(d, name, std::move(o));
}

void emit_entwining(SpecDocument& d, const std::string& name, const std::string& algebra_obj,
                    const std::string& coalgebra_obj, const Entwining& e) {
    std::string aspace = space_of(d, algebra_obj);
    std::string cspace = space_of(d, coalgebra_obj);
    ensure_map(d, name + ".psi", {cspace, aspace}, {aspace, cspace}, e.psi.m);
    ObjectDecl o;
    o.kind = "entwining";
    o.attrs = {{"algebra", Attr::ref(algebra_obj)},
               {"coalgebra", Attr::ref(coalgebra_obj)},
               {"psi", Attr::ref(name + ".psi")}};
    add_object(d, name, std::move(o));
}

void emit_cring(SpecDocument& d, const std::string& name, const std::string& coalgebra_obj,
                const std::string& space_name, const CRing& r) {
    std::string cspace = space_of(d, coalgebra_obj);
    ensure_space(d, space_name, r.carrier.space);
    ensure_map(d, name + ".lcoact", {space_name}, {cspace, space_name}, r.carrier.lcoact.m);
    ensure_map(d, name + ".rcoact", {space_name}, {space_name, cspace}, r.carrier.rcoact.m);
    ensure_map(d, name + ".mul", {space_name, space_name}, {space_name},
               compose(r.mul, r.AA.sub.retr).m);
    ensure_map(d, name + ".unit", {cspace}, {space_name}, r.unit.m);
    ObjectDecl o;
    o.kind = "cring";
    o.attrs = {{"coalgebra", Attr::ref(coalgebra_obj)},
               {"space", Attr::ref(space_name)},
               {"left_coaction", Attr::ref(name + ".lcoact")},
               {"right_coaction", Attr::ref(name + ".rcoact")},
               {"mul", Attr::ref(name + ".mul")},
               {"unit", Attr::ref(name + ".unit")}};
    add_object(d, name, std::move(o));
}

void emit_character(SpecDocument& d, const std::string& name, const std::string& owner_obj,
                    bool over_cring, const LinearMap& kappa) {
    std::string sp = space_of(d, owner_obj);
    ensure_map(d, name + ".map", {sp}, {}, kappa.m);
    ObjectDecl o;
    o.kind = "character";
    o.attrs = {{over_cring ? "cring" : "algebra", Attr::ref(owner_obj)},
               {"map", Attr::ref(name + ".map")}};
    add_object(d, name, std::move(o));
}

void emit_cointegral(SpecDocument& d, const std::string& name, const std::string& coalgebra_obj,
                     const Cointegral& del) {
    std::string sp = space_of(d, coalgebra_obj);
    ensure_map(d, name + ".map", {sp, sp}, {}, del.delta.m);
    ObjectDecl o;
    o.kind = "cointegral";
    o.attrs = {{"coalgebra", Attr::ref(coalgebra_obj)}, {"map", Attr::ref(name + ".map")}};
    add_object(d, name, std::move(o));
}

void emit_dga(SpecDocument& d, const std::string& name, const std::string& algebra_obj,
              const TruncatedDGA& dga) {
    std::string aspace = space_of(d, algebra_obj);
    std::vector<std::string> omega_names, diff_names;
    std::vector<std::string> degree_space(dga.cap + 1);
    degree_space[0] = aspace;
    for (int n = 1; n <= dga.cap; ++n) {
        std::string sn = name + ".omega" + std::to_string(n);
        ensure_space(d, sn, dga.omega[n]);
        omega_names.push_back(sn);
        degree_space[n] = sn;
    }
    std::vector<std::pair<std::string, std::string>> prods;
    for (int p = 0; p <= dga.cap; ++p)
        for (int q = 0; p + q <= dga.cap; ++q) {
            std::string mn = name + ".prod" + std::to_string(p) + "_" + std::to_string(q);
            ensure_map(d, mn, {degree_space[p], degree_space[q]}, {degree_space[p + q]},
                       dga_product(dga, p, q).m);
            prods.emplace_back(std::to_string(p) + "," + std::to_string(q), mn);
        }
    for (int n = 0; n < dga.cap; ++n) {
        std::string mn = name + ".d" + std::to_string(n);
        ensure_map(d, mn, {degree_space[n]}, {degree_space[n + 1]}, dga.diff[n].m);
        diff_names.push_back(mn);
    }
    ObjectDecl o;
    o.kind = "dga";
    o.attrs = {{"algebra", Attr::ref(algebra_obj)},
               {"cap", Attr::number(dga.cap)},
               {"omega", Attr::list(std::move(omega_names))},
               {"products", Attr::table(std::move(prods))},
               {"diffs", Attr::list(std::move(diff_names))}};
    add_object(d, name, std::move(o));
}

void emit_cring_module(SpecDocument& d, const std::string& name, const std::string& cring_obj,
                       const std::string& space_name, const CRing& r, const CRingModule& m) {
    const ObjectDecl* co = d.find_object(cring_obj);
    require(co != nullptr, "document.unknown_object", "no object named '" + cring_obj + "'");
    std::string cspace = space_of(d, co->ref("coalgebra"));
    std::string aspace = co->ref("space");
    ensure_space(d, space_name, m.comodule.space);
    ensure_map(d, name + ".coact", {space_name}, {space_name, cspace}, m.comodule.coact.m);
    ensure_map(d, name + ".action", {space_name, aspace}, {space_name},
               compose(m.action, m.MA.sub.retr).m);
    ObjectDecl o;
    o.kind = "module";
    o.attrs = {{"cring", Attr::ref(cring_obj)},
               {"space", Attr::ref(space_name)},
               {"coaction", Attr::ref(name + ".coact")},
               {"action", Attr::ref(name + ".action")}};
    add_object(d, name, std::move(o));
    (void)r;
}

void emit_coring_comodule(SpecDocument& d, const std::string& name, const std::string& coring_obj,
                          const std::string& space_name, const Coring& c,
                          const CoringComodule& m) {
    const ObjectDecl* co = d.find_object(coring_obj);
    require(co != nullptr, "document.unknown_object", "no object named '" + coring_obj + "'");
    std::string carrier = co->ref("space");
    std::string aspace = space_of(d, co->ref("algebra"));
    ensure_space(d, space_name, m.module.space);
    ensure_map(d, name + ".act", {space_name, aspace}, {space_name}, m.module.act.m);
    ensure_map(d, name + ".coact", {space_name}, {space_name, carrier},
               compose(m.MC.sect, m.coact).m);
    ObjectDecl o;
    o.kind = "comodule";
    o.attrs = {{"coring", Attr::ref(coring_obj)},
               {"space", Attr::ref(space_name)},
               {"action", Attr::ref(name + ".act")},
               {"coaction", Attr::ref(name + ".coact")},
               {"counital", Attr::boolean(m.counital)}};
    add_object(d, name, std::move(o));
    (void)c;
}

void emit_module_connection(SpecDocument& d, const std::string& name,
                            const std::string& coring_obj, const std::string& grouplike_obj,
                            const std::string& module_obj, const RoiterData& R,
                            const ModuleConnection& conn) {
    const ObjectDecl* co = d.find_object(coring_obj);
    require(co != nullptr, "document.unknown_object", "no object named '" + coring_obj + "'");
    std::string carrier = co->ref("space");
    std::string mspace = space_of(d, module_obj);
    const Field& F = conn.nabla.F;
    LinearMap amb = compose(kron(identity_map(F, conn.module.space), R.omega1_sub.incl),
                            compose(conn.MO1.sect, conn.nabla));
    ensure_map(d, name + ".nabla", {mspace}, {mspace, carrier}, amb.m);
    ObjectDecl o;
    o.kind = "connection";
    o.attrs = {{"flavor", Attr::enum_text("module")},
               {"coring", Attr::ref(coring_obj)},
               {"grouplike", Attr::ref(grouplike_obj)},
               {"module", Attr::ref(module_obj)},
               {"nabla", Attr::ref(name + ".nabla")},
               {"degree", Attr::number(R.dga.cap)}};
    add_object(d, name, std::move(o));
}

void emit_cring_connection(SpecDocument& d, const std::string& name, const std::string& cring_obj,
                           const std::string& character_obj, const std::string& space_name,
                           int degree, const CRing& r, const ComoduleConnection& conn) {
    (void)r;
    const ObjectDecl* co = d.find_object(cring_obj);
    require(co != nullptr, "document.unknown_object", "no object named '" + cring_obj + "'");
    std::string cspace = space_of(d, co->ref("coalgebra"));
    ensure_space(d, space_name, conn.mspace);
    std::string abar_name = name + ".Abar";
    ensure_space(d, abar_name, conn.ML.nspace);
    ensure_map(d, name + ".coact", {space_name}, {space_name, cspace}, conn.coact.m);
    ensure_map(d, name + ".nabla", {space_name, abar_name}, {space_name},
               compose(conn.nabla, conn.ML.sub.retr).m);
    ObjectDecl o;
    o.kind = "connection";
    o.attrs = {{"flavor", Attr::enum_text("cring")},
               {"cring", Attr::ref(cring_obj)},
               {"character", Attr::ref(character_obj)},
               {"space", Attr::ref(space_name)},
               {"coaction", Attr::ref(name + ".coact")},
               {"nabla", Attr::ref(name + ".nabla")},
               {"degree", Attr::number(degree)}};
    add_object(d, name, std::move(o));
}

// ---------------------------------------------------------------------------
// built-in example documents
// ---------------------------------------------------------------------------

std::vector<std::string> example_names() {
    return {"dual_numbers",  "kc2",            "kc3",           "h4",
            "grouplike1",    "grouplike2",     "grouplike3",    "path_arrow",
            "sweedler_dual", "sweedler_kc2",   "ayd_kc2",       "ayd_kc3",
            "ayd_h4",        "ayd_kc2_coring", "ayd_h4_coring", "ayd_kc2_cring",
            "ayd_h4_cring",  "cc_kc2_cring",   "ayd_kc2_module", "entwined_kc2"};
}

namespace {

HopfAlgebra named_hopf(const Field& F, const std::string& which) {
    if (which == "kc2") return catalog::hopf_cyclic(F, 2);
    if (which == "kc3") return catalog::hopf_cyclic(F, 3);
    return catalog::hopf_sweedler_h4(F);
}

std::string hopf_obj_name(const std::string& which) {
    if (which == "kc2") return "KC2";
    if (which == "kc3") return "KC3";
    return "H4";
}

}  // namespace

SpecDocument example_document(const std::string& name, const Field& F) {
    SpecDocument d;
    d.field = F;
    if (name == "dual_numbers") {
        emit_algebra(d, "A", "A", catalog::dual_numbers(F));
        return d;
    }
    if (name == "kc2" || name == "kc3" || name == "h4") {
        emit_hopf(d, hopf_obj_name(name), "H", named_hopf(F, name));
        return d;
    }
    if (name.rfind("grouplike", 0) == 0) {
        int n = std::atoi(name.substr(9).c_str());
        require(n >= 1 && n <= 3, "document.example", "unknown example '" + name + "'");
        Coalgebra c = catalog::grouplike_coalgebra(F, n);
        emit_coalgebra(d, "C", "C", c);
        emit_cointegral(d, "delta", "C", grouplike_cointegral(F, c.space));
        return d;
    }
    if (name == "path_arrow") {
        emit_coalgebra(d, "C", "C", catalog::path_coalgebra_one_arrow(F));
        return d;
    }
    if (name == "sweedler_dual" || name == "sweedler_kc2") {
        Algebra a = (name == "sweedler_dual") ? catalog::dual_numbers(F)
                                              : catalog::cyclic_group_algebra(F, 2);
        emit_algebra(d, "A", "A", a);
        Coring c = sweedler_coring(a);
        emit_coring(d, "C", "A", "C", c);
        emit_grouplike(d, "g", "C", catalog::one_tensor_one(a), GrouplikeFlavor::grouplike);
        return d;
    }
    if (name == "ayd_kc2" || name == "ayd_kc3" || name == "ayd_h4") {
        std::string which = name.substr(4);
        HopfAlgebra h = named_hopf(F, which);
        emit_hopf(d, hopf_obj_name(which), "H", h);
        emit_entwining(d, "E", hopf_obj_name(which), hopf_obj_name(which), ayd_entwining(h));
        return d;
    }
    if (name == "ayd_kc2_coring" || name == "ayd_h4_coring") {
        std::string which = (name == "ayd_kc2_coring") ? "kc2" : "h4";
        HopfAlgebra h = named_hopf(F, which);
        emit_hopf(d, hopf_obj_name(which), "H", h);
        Entwining e = ayd_entwining(h);
        Coring c = coring_from_entwining(e);
        std::string cname = (which == "kc2") ? "ayd_kc2" : "ayd_h4";
        emit_coring(d, cname, hopf_obj_name(which), "AC", c);
        std::vector<Rat> one = catalog::algebra_one(h.b.alg);
        emit_grouplike(d, "g", cname, entwined_coring_grouplike(e, one),
                       GrouplikeFlavor::grouplike);
        return d;
    }
    if (name == "ayd_kc2_cring" || name == "ayd_h4_cring" || name == "ayd_kc2_module") {
        std::string which = (name == "ayd_h4_cring") ? "h4" : "kc2";
        HopfAlgebra h = named_hopf(F, which);
        emit_hopf(d, hopf_obj_name(which), "H", h);
        Entwining e = ayd_entwining(h);
        CRingWithCharacter r = cring_from_entwining(e, h.b.coalg.counit);
        std::string rname = (which == "kc2") ? "ayd_kc2_cring" : "ayd_h4_cring";
        emit_cring(d, rname, hopf_obj_name(which), "CA", r.ring);
        emit_character(d, "kappa", rname, true, r.kappa->kappa);
        if (name == "ayd_kc2_module") {
            const VectorSpace& V = h.b.alg.space;
            LinearMap triv = kron(identity_map(F, V), h.b.alg.unit);
            EntwinedModule em{RightModule{V, h.b.alg.mul},
                              RightComodule{V, LinearMap(F, V, tensor_space(V, V), triv.m)}};
            CRingModule m = entwined_to_cring_module(e, r.ring, em);
            emit_cring_module(d, "M", rname, "H", r.ring, m);
        }
        return d;
    }
    if (name == "cc_kc2_cring") {
        Coalgebra c = catalog::grouplike_coalgebra(F, 2);
        emit_coalgebra(d, "C", "C", c);
        CRingWithCharacter r = cring_cc(c);
        emit_cring(d, "CC", "C", "CCspace", r.ring);
        emit_character(d, "kappa", "CC", true, r.kappa->kappa);
        return d;
    }
    if (name == "entwined_kc2") {
        HopfAlgebra h = named_hopf(F, "kc2");
        emit_hopf(d, "KC2", "H", h);
        Entwining e = ayd_entwining(h);
        emit_entwining(d, "E", "KC2", "KC2", e);
        const VectorSpace& V = h.b.alg.space;
        LinearMap triv = kron(identity_map(F, V), h.b.alg.unit);
        ensure_map(d, "M.action", {"H", "H"}, {"H"}, h.b.alg.mul.m);
        ensure_map(d, "M.coaction", {"H"}, {"H", "H"}, triv.m);
        ObjectDecl o;
        o.kind = "entwined_module";
        o.attrs = {{"entwining", Attr::ref("E")},
                   {"space", Attr::ref("H")},
                   {"action", Attr::ref("M.action")},
                   {"coaction", Attr::ref("M.coaction")}};
        add_object(d, "M", std::move(o));
        return d;
    }
    throw Error("document.example", "unknown example '" + name + "'");
}

}  // namespace coringlab::doc
