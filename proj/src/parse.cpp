#include "dpk/parse.hpp"

#include <cctype>
#include <sstream>

namespace dpk {

namespace {

class Parser {
public:
    Parser(std::string_view text, const RingPtr& ring) : s_(text), ring_(ring) {}

    MultiPoly run() {
        MultiPoly r = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
        return r;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly expr() {
        skip_ws();
        MultiPoly acc = term();
        for (;;) {
            if (eat('+')) {
                acc = acc + term();
            } else if (eat('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    MultiPoly term() {
        MultiPoly acc = unary();
        while (eat('*')) acc = acc * unary();
        return acc;
    }

    MultiPoly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        MultiPoly base = primary();
        if (eat('^')) {
            skip_ws();
            const std::size_t at = pos_;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw ParseError("expected exponent", at);
            unsigned long e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                e = e * 10 + static_cast<unsigned long>(s_[pos_++] - '0');
                if (e > 255) throw ParseError("exponent too large", at);
            }
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    MultiPoly primary() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly inner = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        const Field& f = ring_->field();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            // Reduce digit by digit so long literals never overflow.
            std::uint64_t v = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                v = (v * 10 + static_cast<unsigned>(s_[pos_++] - '0')) % f.characteristic();
            return MultiPoly::constant(ring_, static_cast<Elem>(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            const std::string name(s_.substr(start, pos_ - start));
            const int idx = ring_->var_index(name);
            if (idx >= 0) return MultiPoly::variable(ring_, static_cast<std::size_t>(idx));
            if (name == "t" && !f.is_prime_field()) return MultiPoly::constant(ring_, f.generator());
            throw ParseError("unknown variable '" + name + "'", start);
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    std::string_view s_;
    const RingPtr& ring_;
    std::size_t pos_ = 0;
};

std::string trim(std::string_view v) {
    std::size_t a = 0, b = v.size();
    while (a < b && std::isspace(static_cast<unsigned char>(v[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(v[b - 1]))) --b;
    return std::string(v.substr(a, b - a));
}

}  // namespace

MultiPoly parse_poly(std::string_view text, const RingPtr& ring) { return Parser(text, ring).run(); }

const MultiPoly& PolyData::get(const std::string& name) const {
    for (const auto& [n, p] : entries)
        if (n == name) return p;
    throw ArgumentError("no polynomial named '" + name + "'");
}

bool PolyData::has(const std::string& name) const noexcept {
    for (const auto& e : entries)
        if (e.first == name) return true;
    return false;
}

PolyData parse_poly_data(std::istream& in) {
    PolyData data;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!data.ring) {
            // header: p=<prime> vars=a,b,c
            std::istringstream hs(t);
            std::string tok;
            long long p = -1;
            std::vector<std::string> vars;
            while (hs >> tok) {
                if (tok.rfind("p=", 0) == 0) {
                    try {
                        p = std::stoll(tok.substr(2));
                    } catch (const std::exception&) {
                        throw ParseError("line " + std::to_string(lineno) + ": bad prime", 0);
                    }
                } else if (tok.rfind("vars=", 0) == 0) {
                    std::string list = tok.substr(5);
                    std::size_t start = 0;
                    while (start <= list.size()) {
                        const std::size_t comma = list.find(',', start);
                        const std::string v = trim(std::string_view(list).substr(
                            start, comma == std::string::npos ? std::string::npos : comma - start));
                        if (v.empty()) throw ParseError("line " + std::to_string(lineno) + ": empty variable name", 0);
                        vars.push_back(v);
                        if (comma == std::string::npos) break;
                        start = comma + 1;
                    }
                } else {
                    throw ParseError("line " + std::to_string(lineno) + ": unknown header field '" + tok + "'", 0);
                }
            }
            if (p < 2 || vars.empty()) throw ParseError("line " + std::to_string(lineno) + ": header needs p= and vars=", 0);
            if (!is_prime(static_cast<std::uint64_t>(p)))
                throw ArgumentError("header prime " + std::to_string(p) + " is not prime");
            data.ring = Ring::make(Field::prime(static_cast<std::uint32_t>(p)), vars);
            continue;
        }
        const std::size_t eq = t.find('=');
        if (eq == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": expected 'name = expression'", 0);
        const std::string name = trim(std::string_view(t).substr(0, eq));
        if (name.empty()) throw ParseError("line " + std::to_string(lineno) + ": empty name", 0);
        try {
            data.entries.emplace_back(name, parse_poly(std::string_view(t).substr(eq + 1), data.ring));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.position());
        }
    }
    if (!data.ring) throw ParseError("missing header line", 0);
    return data;
}

PolyData parse_poly_data(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_poly_data(in);
}

std::string format_poly_data(const PolyData& data) {
    std::ostringstream os;
    os << "p=" << data.ring->field().characteristic() << " vars=";
    for (std::size_t i = 0; i < data.ring->nvars(); ++i) os << (i ? "," : "") << data.ring->vars()[i];
    os << "\n";
    for (const auto& [name, p] : data.entries) os << name << " = " << p.to_string() << "\n";
    return os.str();
}

}  // namespace dpk
