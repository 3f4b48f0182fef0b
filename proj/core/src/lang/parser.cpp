#include "cat/lang/parser.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cat/errors.hpp"

namespace cat::lang {

namespace {

enum class TokKind { Ident, Number, String, Punct, End };

struct Token {
    TokKind kind = TokKind::End;
    std::string text;
    double number = 0.0;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_ws();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= src_.size()) return t;
        const char c = src_[pos_];
        if (c == '"') {
            advance();
            std::string out;
            while (pos_ < src_.size() && src_[pos_] != '"') {
                if (src_[pos_] == '\n') throw SyntaxError("unterminated string", t.line, t.col);
                out.push_back(src_[pos_]);
                advance();
            }
            if (pos_ >= src_.size()) throw SyntaxError("unterminated string", t.line, t.col);
            advance();
            t.kind = TokKind::String;
            t.text = std::move(out);
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string out;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                out.push_back(src_[pos_]);
                advance();
            }
            t.kind = TokKind::Ident;
            t.text = std::move(out);
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.') {
            const std::size_t start = pos_;
            if (c == '-' || c == '+') advance();
            while (pos_ < src_.size() &&
                   (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.' ||
                    src_[pos_] == 'e' || src_[pos_] == 'E' ||
                    ((src_[pos_] == '-' || src_[pos_] == '+') &&
                     (src_[pos_ - 1] == 'e' || src_[pos_ - 1] == 'E')))) {
                advance();
            }
            const std::string_view text = src_.substr(start, pos_ - start);
            double value = 0.0;
            const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || ptr != text.data() + text.size()) {
                throw SyntaxError("malformed number '" + std::string(text) + "'", t.line, t.col);
            }
            t.kind = TokKind::Number;
            t.text = std::string(text);
            t.number = value;
            return t;
        }
        if (std::string_view("{}()[],:").find(c) != std::string_view::npos) {
            t.kind = TokKind::Punct;
            t.text = std::string(1, c);
            advance();
            return t;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", t.line, t.col);
    }

private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    Parser(std::string_view src, const VocabRegistry& vocab) : lexer_(src), vocab_(vocab) {
        tok_ = lexer_.next();
    }

    bool at_end() const { return tok_.kind == TokKind::End; }

    ParsedScenario parse_scenario() {
        expect_keyword("scenario");
        ParsedScenario out;
        out.logical.functional.id = expect(TokKind::String, "scenario name string").text;
        expect_punct("{");

        bool saw_ego = false;
        bool saw_layout = false;
        bool saw_stimulus = false;
        bool saw_conflict = false;
        int actor_index = 0;

        while (!check_punct("}")) {
            const Token head = expect(TokKind::Ident, "block keyword");
            if (head.text == "ego") {
                if (saw_ego) throw SyntaxError("duplicate ego block", head.line, head.col);
                saw_ego = true;
                parse_body("ego", out, &out.logical.functional.ego_maneuver);
            } else if (head.text == "actor") {
                const Token kind_tok = expect(TokKind::Ident, "actor kind");
                scenario::ActorKind kind;
                try {
                    kind = scenario::actor_kind_from_token(kind_tok.text);
                } catch (const UnknownToken&) {
                    throw UnknownToken(kind_tok.text, "actor kind", kind_tok.line, kind_tok.col);
                }
                scenario::ManeuverSpec spec;
                out.logical.functional.actors.emplace_back(kind, spec);
                parse_body("actor" + std::to_string(actor_index), out,
                           &out.logical.functional.actors.back().second);
                ++actor_index;
            } else if (head.text == "layout") {
                saw_layout = true;
                expect_punct(":");
                const Token layout = expect(TokKind::Ident, "layout class");
                if (!vocab_.has_layout_class(layout.text)) {
                    throw UnknownToken(layout.text, "layout class", layout.line, layout.col);
                }
                out.logical.functional.layout_class = layout.text;
                out.positions["layout"] = {layout.line, layout.col};
            } else if (head.text == "salient") {
                expect_punct(":");
                expect_punct("[");
                while (!check_punct("]")) {
                    const Token factor = expect(TokKind::Ident, "salient factor");
                    if (!vocab_.has_salient_factor(factor.text)) {
                        throw UnknownToken(factor.text, "salient factor", factor.line, factor.col);
                    }
                    out.logical.functional.salient_factors.insert(factor.text);
                    if (!check_punct(",")) {
                        expect_punct("]");
                        break;
                    }
                }
            } else if (head.text == "stimulus") {
                saw_stimulus = true;
                expect_punct("{");
                while (!check_punct("}")) {
                    const Token name = expect(TokKind::Ident, "stimulus parameter");
                    if (name.text != "ramp_up") {
                        throw SyntaxError("unknown stimulus parameter '" + name.text + "'",
                                          name.line, name.col);
                    }
                    expect_punct(":");
                    add_param(out, "stimulus.ramp_up", parse_value(), {name.line, name.col});
                }
                if (out.logical.parameter_ranges.count("stimulus.ramp_up") == 0) {
                    throw SyntaxError("stimulus block requires a ramp_up value", head.line,
                                      head.col);
                }
            } else if (head.text == "conflict") {
                saw_conflict = true;
                expect_punct(":");
                const Token conflict = expect(TokKind::Ident, "conflict type");
                if (!vocab_.has_conflict_type(conflict.text)) {
                    throw UnknownToken(conflict.text, "conflict type", conflict.line, conflict.col);
                }
                out.logical.functional.conflict_type = conflict.text;
                out.positions["conflict"] = {conflict.line, conflict.col};
            } else {
                throw SyntaxError("unexpected block '" + head.text + "'", head.line, head.col);
            }
        }

        if (!saw_ego) throw SyntaxError("scenario is missing an ego block", tok_.line, tok_.col);
        if (out.logical.functional.actors.empty()) {
            throw SyntaxError("scenario needs at least one actor block", tok_.line, tok_.col);
        }
        if (!saw_layout) throw SyntaxError("scenario is missing a layout", tok_.line, tok_.col);
        if (!saw_stimulus) {
            throw SyntaxError("scenario is missing a stimulus block", tok_.line, tok_.col);
        }
        if (!saw_conflict) {
            throw SyntaxError("scenario is missing a conflict statement", tok_.line, tok_.col);
        }
        return out;
    }

private:
    void parse_body(const std::string& prefix, ParsedScenario& out,
                    scenario::ManeuverSpec* spec) {
        expect_punct("{");
        bool saw_maneuver = false;
        while (!check_punct("}")) {
            const Token name = expect(TokKind::Ident, "statement");
            if (name.text == "maneuver") {
                saw_maneuver = true;
                expect_punct(":");
                const Token mnv = expect(TokKind::Ident, "maneuver");
                try {
                    spec->maneuver = scenario::maneuver_from_token(mnv.text);
                } catch (const UnknownToken&) {
                    throw UnknownToken(mnv.text, "maneuver", mnv.line, mnv.col);
                }
                expect_keyword("from");
                spec->start_location = parse_location();
                expect_keyword("to");
                spec->end_location = parse_location();
                out.positions[prefix + ".maneuver"] = {name.line, name.col};
            } else {
                expect_punct(":");
                add_param(out, prefix + "." + name.text, parse_value(), {name.line, name.col});
            }
        }
        if (!saw_maneuver) {
            throw SyntaxError("block '" + prefix + "' is missing a maneuver statement", tok_.line,
                              tok_.col);
        }
    }

    scenario::Location parse_location() {
        const Token loc = expect(TokKind::Ident, "location");
        try {
            return scenario::location_from_token(loc.text);
        } catch (const UnknownToken&) {
            throw UnknownToken(loc.text, "location", loc.line, loc.col);
        }
    }

    scenario::ParameterRange parse_value() {
        if (tok_.kind == TokKind::Number) {
            const double v = tok_.number;
            consume();
            return {v, v, 1.0, ""};
        }
        const Token kw = expect(TokKind::Ident, "number or range(...)");
        if (kw.text != "range") {
            throw SyntaxError("expected number or range(...), got '" + kw.text + "'", kw.line,
                              kw.col);
        }
        expect_punct("(");
        const double lo = expect(TokKind::Number, "range minimum").number;
        expect_punct(",");
        const double hi = expect(TokKind::Number, "range maximum").number;
        expect_punct(",");
        expect_keyword("step");
        const double step = expect(TokKind::Number, "range step").number;
        expect_punct(")");
        return {lo, hi, step, ""};
    }

    void add_param(ParsedScenario& out, const std::string& name, scenario::ParameterRange range,
                   SourcePos pos) {
        if (out.logical.parameter_ranges.count(name) > 0) {
            throw SyntaxError("duplicate parameter '" + name + "'", pos.line, pos.col);
        }
        range.unit = unit_of(name);
        out.logical.parameter_ranges[name] = range;
        out.positions[name] = pos;
    }

    static std::string unit_of(const std::string& name) {
        const auto ends_with = [&](std::string_view suffix) {
            return name.size() >= suffix.size() &&
                   name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0;
        };
        if (ends_with(".speed")) return "m/s";
        if (ends_with(".accel") || ends_with(".decel")) return "m/s^2";
        if (ends_with(".trigger_ttc") || ends_with(".ramp_up") || ends_with(".gap_time")) return "s";
        if (ends_with(".lateral_offset")) return "m";
        return "";
    }

    Token expect(TokKind kind, const char* what) {
        if (tok_.kind != kind) {
            throw SyntaxError(std::string("expected ") + what + ", got '" + describe(tok_) + "'",
                              tok_.line, tok_.col);
        }
        Token t = tok_;
        consume();
        return t;
    }

    void expect_keyword(const char* kw) {
        if (tok_.kind != TokKind::Ident || tok_.text != kw) {
            throw SyntaxError(std::string("expected '") + kw + "', got '" + describe(tok_) + "'",
                              tok_.line, tok_.col);
        }
        consume();
    }

    void expect_punct(const char* p) {
        if (tok_.kind != TokKind::Punct || tok_.text != p) {
            throw SyntaxError(std::string("expected '") + p + "', got '" + describe(tok_) + "'",
                              tok_.line, tok_.col);
        }
        consume();
    }

    bool check_punct(const char* p) {
        if (tok_.kind == TokKind::Punct && tok_.text == p) {
            consume();
            return true;
        }
        return false;
    }

    static std::string describe(const Token& t) {
        return t.kind == TokKind::End ? "end of input" : t.text;
    }

    void consume() { tok_ = lexer_.next(); }

    Lexer lexer_;
    const VocabRegistry& vocab_;
    Token tok_;
};

std::string format_number(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

ParsedScenario parse_functional(std::string_view source, const VocabRegistry& vocab) {
    Parser parser(source, vocab);
    ParsedScenario out = parser.parse_scenario();
    return out;
}

std::vector<ParsedScenario> parse_scn(std::string_view source, const VocabRegistry& vocab) {
    Parser parser(source, vocab);
    std::vector<ParsedScenario> out;
    while (!parser.at_end()) out.push_back(parser.parse_scenario());
    return out;
}

std::vector<ParsedScenario> parse_scn_file(const std::filesystem::path& path,
                                           const VocabRegistry& vocab) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open scenario source: " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
        return parse_scn(text, vocab);
    } catch (const SyntaxError& e) {
        throw SyntaxError(path.string() + ": " + e.what(), e.line, e.col);
    } catch (const UnknownToken& e) {
        throw UnknownToken(e.token, path.string(), e.line, e.col);
    }
}

std::string serialize_functional(const scenario::LogicalScenario& logical) {
    const scenario::FunctionalScenario& fn = logical.functional;
    std::ostringstream os;

    const auto emit_value = [&](const std::string& name) {
        const auto it = logical.parameter_ranges.find(name);
        if (it == logical.parameter_ranges.end()) return false;
        const scenario::ParameterRange& r = it->second;
        const std::string short_name = name.substr(name.find('.') + 1);
        os << "    " << short_name << ": ";
        if (r.min == r.max) {
            os << format_number(r.min);
        } else {
            os << "range(" << format_number(r.min) << ", " << format_number(r.max) << ", step "
               << format_number(r.step) << ")";
        }
        os << "\n";
        return true;
    };

    const auto emit_params = [&](const std::string& prefix) {
        for (const auto& [name, range] : logical.parameter_ranges) {
            if (name.rfind(prefix + ".", 0) == 0) emit_value(name);
        }
    };

    os << "scenario \"" << fn.id << "\" {\n";
    os << "  ego {\n";
    os << "    maneuver: " << scenario::to_token(fn.ego_maneuver.maneuver) << " from "
       << scenario::to_token(fn.ego_maneuver.start_location) << " to "
       << scenario::to_token(fn.ego_maneuver.end_location) << "\n";
    emit_params("ego");
    os << "  }\n";
    for (std::size_t i = 0; i < fn.actors.size(); ++i) {
        const auto& [kind, spec] = fn.actors[i];
        os << "  actor " << scenario::to_token(kind) << " {\n";
        os << "    maneuver: " << scenario::to_token(spec.maneuver) << " from "
           << scenario::to_token(spec.start_location) << " to "
           << scenario::to_token(spec.end_location) << "\n";
        emit_params("actor" + std::to_string(i));
        os << "  }\n";
    }
    os << "  layout: " << fn.layout_class << "\n";
    if (!fn.salient_factors.empty()) {
        os << "  salient: [";
        bool first = true;
        for (const scenario::SalientFactor& f : fn.salient_factors) {
            if (!first) os << ", ";
            os << f;
            first = false;
        }
        os << "]\n";
    }
    os << "  stimulus {\n";
    emit_value("stimulus.ramp_up");
    os << "  }\n";
    os << "  conflict: " << fn.conflict_type << "\n";
    os << "}\n";
    return os.str();
}

}  // namespace cat::lang
