#include "epslab/toml_lite.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace epslab {

namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;
    std::size_t line = 1;

    explicit Parser(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::runtime_error("toml: line " + std::to_string(line) + ": " + msg);
    }

    bool at_end() const { return i >= s.size(); }
    char peek() const { return i < s.size() ? s[i] : '\0'; }

    void advance() {
        if (s[i] == '\n') ++line;
        ++i;
    }

    /// Spaces and tabs only.
    void skip_inline_ws() {
        while (!at_end() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }

    /// Whitespace, newlines, and comments — the separator context inside
    /// arrays and between top-level statements.
    void skip_ws_comments() {
        while (!at_end()) {
            char c = s[i];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '#') {
                while (!at_end() && s[i] != '\n') ++i;
            } else {
                break;
            }
        }
    }

    /// Consume the rest of a statement line: optional comment, then newline.
    void expect_line_end() {
        skip_inline_ws();
        if (!at_end() && s[i] == '\r') ++i;
        if (at_end()) return;
        if (s[i] == '#') {
            while (!at_end() && s[i] != '\n') ++i;
            if (at_end()) return;
        }
        if (s[i] != '\n') fail("expected end of line");
        advance();
    }

    static bool is_bare_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
    }

    std::string parse_bare_key() {
        std::size_t start = i;
        while (!at_end() && is_bare_char(s[i])) ++i;
        if (i == start) fail("expected a key");
        return s.substr(start, i - start);
    }

    std::string parse_basic_string() {
        if (peek() != '"') fail("expected a string");
        ++i;
        std::string out;
        while (true) {
            if (at_end()) fail("unterminated string");
            char c = s[i];
            if (c == '\n') fail("newline inside a basic string");
            if (c == '"') {
                ++i;
                return out;
            }
            if (c == '\\') {
                ++i;
                if (at_end()) fail("unterminated escape");
                char e = s[i];
                switch (e) {
                    case '"': out += '"'; break;
                    case '\\': out += '\\'; break;
                    case 'n': out += '\n'; break;
                    case 't': out += '\t'; break;
                    case 'r': out += '\r'; break;
                    default: fail("unsupported escape sequence");
                }
                ++i;
            } else {
                out += c;
                ++i;
            }
        }
    }

    Json parse_number_or_literal() {
        std::size_t start = i;
        while (!at_end() && (is_bare_char(s[i]) || s[i] == '+' || s[i] == '.')) ++i;
        std::string tok = s.substr(start, i - start);
        if (tok.empty()) fail("expected a value");
        if (tok == "true") return Json(true);
        if (tok == "false") return Json(false);
        bool is_float = tok.find('.') != std::string::npos ||
                        tok.find('e') != std::string::npos || tok.find('E') != std::string::npos;
        try {
            std::size_t used = 0;
            if (is_float) {
                double v = std::stod(tok, &used);
                if (used != tok.size()) fail("malformed number '" + tok + "'");
                return Json(v);
            }
            long long v = std::stoll(tok, &used);
            if (used != tok.size()) fail("malformed number '" + tok + "'");
            return Json(v);
        } catch (const std::exception&) {
            fail("malformed value '" + tok + "'");
        }
    }

    Json parse_value() {
        skip_inline_ws();
        if (at_end()) fail("expected a value");
        char c = s[i];
        if (c == '"') return Json(parse_basic_string());
        if (c == '[') return parse_inline_array();
        if (c == '{') return parse_inline_table();
        if (c == '-' || c == '+' || std::isalnum(static_cast<unsigned char>(c)) || c == '.')
            return parse_number_or_literal();
        fail("unsupported value syntax");
    }

    Json parse_inline_array() {
        ++i;  // consume '['
        Json arr = Json::array();
        skip_ws_comments();
        if (peek() == ']') {
            ++i;
            return arr;
        }
        while (true) {
            arr.push_back(parse_value());
            skip_ws_comments();
            if (peek() == ',') {
                ++i;
                skip_ws_comments();
                if (peek() == ']') {  // trailing comma
                    ++i;
                    return arr;
                }
                continue;
            }
            if (peek() == ']') {
                ++i;
                return arr;
            }
            fail("expected ',' or ']' in array");
        }
    }

    Json parse_inline_table() {
        ++i;  // consume '{'
        Json obj = Json::object();
        skip_ws_comments();
        if (peek() == '}') {
            ++i;
            return obj;
        }
        while (true) {
            skip_ws_comments();
            std::string key = parse_bare_key();
            skip_inline_ws();
            if (peek() != '=') fail("expected '=' in inline table");
            ++i;
            if (obj.contains(key)) fail("duplicate key '" + key + "'");
            obj[key] = parse_value();
            skip_ws_comments();
            if (peek() == ',') {
                ++i;
                continue;
            }
            if (peek() == '}') {
                ++i;
                return obj;
            }
            fail("expected ',' or '}' in inline table");
        }
    }

    std::vector<std::string> parse_dotted_path() {
        std::vector<std::string> path;
        while (true) {
            skip_inline_ws();
            path.push_back(parse_bare_key());
            skip_inline_ws();
            if (peek() == '.') {
                ++i;
                continue;
            }
            return path;
        }
    }
};

/// Walk (creating) object tables along path[0..n-1); error on a non-object.
Json* navigate(Json* node, const std::vector<std::string>& path, std::size_t upto,
               const Parser& p) {
    for (std::size_t k = 0; k < upto; ++k) {
        Json& cur = *node;
        if (!cur.contains(path[k])) cur[path[k]] = Json::object();
        Json& next = cur[path[k]];
        if (next.is_array()) {
            // Dotted paths descend into the latest element of an
            // array-of-tables, as TOML headers do.
            if (next.empty() || !next.back().is_object()) p.fail("path crosses a value");
            node = &next.back();
        } else if (next.is_object()) {
            node = &next;
        } else {
            p.fail("path segment '" + path[k] + "' is not a table");
        }
    }
    return node;
}

}  // namespace

Json parse_toml(const std::string& text) {
    Parser p(text);
    Json root = Json::object();
    Json* table = &root;

    while (true) {
        p.skip_ws_comments();
        if (p.at_end()) break;

        if (p.peek() == '[') {
            ++p.i;
            bool array_header = p.peek() == '[';
            if (array_header) ++p.i;
            std::vector<std::string> path = p.parse_dotted_path();
            if (p.peek() != ']') p.fail("expected ']' in table header");
            ++p.i;
            if (array_header) {
                if (p.peek() != ']') p.fail("expected ']]' in array-of-tables header");
                ++p.i;
            }
            p.expect_line_end();

            Json* parent = navigate(&root, path, path.size() - 1, p);
            const std::string& leaf = path.back();
            if (array_header) {
                if (!parent->contains(leaf)) (*parent)[leaf] = Json::array();
                Json& arr = (*parent)[leaf];
                if (!arr.is_array()) p.fail("'" + leaf + "' is not an array of tables");
                arr.push_back(Json::object());
                table = &arr.back();
            } else {
                if (!parent->contains(leaf)) (*parent)[leaf] = Json::object();
                Json& t = (*parent)[leaf];
                if (!t.is_object()) p.fail("'" + leaf + "' is not a table");
                table = &t;
            }
            continue;
        }

        // key = value, where the key may be dotted
        std::vector<std::string> path = p.parse_dotted_path();
        const std::string& key = path.back();
        if (p.peek() != '=') p.fail("expected '=' after key '" + key + "'");
        ++p.i;
        Json* target = navigate(table, path, path.size() - 1, p);
        if (target->contains(key)) p.fail("duplicate key '" + key + "'");
        (*target)[key] = p.parse_value();
        p.expect_line_end();
    }
    return root;
}

Json load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("config: cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();

    bool json_ext = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    if (json_ext) {
        try {
            return Json::parse(text);
        } catch (const std::exception& e) {
            throw std::runtime_error(std::string("config: invalid JSON: ") + e.what());
        }
    }
    return parse_toml(text);
}

}  // namespace epslab
