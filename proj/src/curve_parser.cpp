#include "rsurf/curve_parser.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <map>

#include "rsurf/errors.hpp"

namespace rsurf {

namespace {

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    ExprPtr parse() {
        if (peek() == '\0') fail("empty expression");
        ExprPtr e = expr();
        if (peek() != '\0') fail(std::string("unexpected '") + peek() + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

    char peek() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    static ExprPtr make(auto node, std::size_t at) {
        auto e = std::make_unique<ExprNode>();
        e->node = std::move(node);
        e->position = at;
        return e;
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            const std::size_t at = pos_++;
            lhs = make(Binary{c, std::move(lhs), term()}, at);
        }
        return lhs;
    }

    ExprPtr term() {
        ExprPtr lhs = unary();
        while (peek() == '*') {
            const std::size_t at = pos_++;
            lhs = make(Binary{'*', std::move(lhs), unary()}, at);
        }
        return lhs;
    }

    ExprPtr unary() {
        const char c = peek();
        if (c == '-') {
            const std::size_t at = pos_++;
            return make(Negate{unary()}, at);
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = primary();
        if (peek() != '^') return base;
        const std::size_t at = pos_++;
        const char c = peek();
        const std::size_t exp_at = pos_;
        if (c == '-') fail("exponent must be a non-negative integer");
        if (!std::isdigit(static_cast<unsigned char>(c))) fail("exponent must be a non-negative integer literal");
        std::size_t end = pos_;
        while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
        if (end < src_.size() && (src_[end] == '.' || src_[end] == 'e' || src_[end] == 'E')) {
            pos_ = exp_at;
            fail("exponent must be a non-negative integer");
        }
        int exponent = 0;
        auto [ptr, ec] = std::from_chars(src_.data() + pos_, src_.data() + end, exponent);
        if (ec != std::errc{} || exponent > kMaxExpandedDegree) {
            fail("exponent exceeds the total degree cap of " + std::to_string(kMaxExpandedDegree));
        }
        pos_ = end;
        if (peek() == '^') fail("chained '^' is ambiguous; use parentheses");
        return make(Power{std::move(base), exponent}, at);
    }

    ExprPtr primary() {
        const char c = peek();
        const std::size_t at = pos_;
        if (c == '(') {
            ++pos_;
            ExprPtr inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = pos_;
            while (end < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_'))
                ++end;
            const std::string_view ident = src_.substr(pos_, end - pos_);
            if (ident == "x" || ident == "y" || ident == "i") {
                pos_ = end;
                if (ident == "i") return make(Literal{Complex(0.0, 1.0)}, at);
                return make(ident == "x" ? Variable::x : Variable::y, at);
            }
            if (ident == "I" || ident == "j") fail("imaginary unit is written 'i'");
            fail("unknown identifier '" + std::string(ident) + "'");
        }
        if (c == '\0') fail("unexpected end of expression");
        fail(std::string("unexpected '") + c + "'");
    }

    ExprPtr number() {
        const std::size_t at = pos_;
        std::size_t end = pos_;
        auto digits = [&] {
            const std::size_t start = end;
            while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
            return end > start;
        };
        bool any = digits();
        if (end < src_.size() && src_[end] == '.') {
            ++end;
            any = digits() || any;
        }
        if (!any) fail("malformed number");
        if (end < src_.size() && (src_[end] == 'e' || src_[end] == 'E')) {
            ++end;
            if (end < src_.size() && (src_[end] == '+' || src_[end] == '-')) ++end;
            if (!digits()) {
                pos_ = end;
                fail("malformed exponent in number");
            }
        }
        const std::string text(src_.substr(pos_, end - pos_));
        const double v = std::strtod(text.c_str(), nullptr);
        if (!std::isfinite(v)) fail("number out of range");
        pos_ = end;
        return make(Literal{Complex(v, 0.0)}, at);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

// Sparse polynomial keyed by (x-degree, y-degree).
using Sparse = std::map<std::pair<int, int>, Complex>;

int total_degree(const Sparse& p) {
    int d = 0;
    for (const auto& [key, c] : p) d = std::max(d, key.first + key.second);
    return d;
}

void drop_zeros(Sparse& p) {
    std::erase_if(p, [](const auto& kv) { return kv.second == Complex{}; });
}

Sparse multiply(const Sparse& a, const Sparse& b, std::size_t at) {
    if (total_degree(a) + total_degree(b) > kMaxExpandedDegree)
        throw ParseError(at, "expansion exceeds total degree " + std::to_string(kMaxExpandedDegree));
    Sparse out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) out[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
    drop_zeros(out);
    return out;
}

Sparse expand(const ExprNode& e) {
    return std::visit(
        [&](const auto& n) -> Sparse {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Literal>) {
                Sparse p;
                if (n.value != Complex{}) p[{0, 0}] = n.value;
                return p;
            } else if constexpr (std::is_same_v<T, Variable>) {
                return Sparse{{n == Variable::x ? std::pair{1, 0} : std::pair{0, 1}, Complex(1.0)}};
            } else if constexpr (std::is_same_v<T, Negate>) {
                Sparse p = expand(*n.operand);
                for (auto& [k, c] : p) c = -c;
                return p;
            } else if constexpr (std::is_same_v<T, Binary>) {
                Sparse lhs = expand(*n.lhs);
                Sparse rhs = expand(*n.rhs);
                if (n.op == '*') return multiply(lhs, rhs, e.position);
                for (const auto& [k, c] : rhs) lhs[k] += n.op == '+' ? c : -c;
                drop_zeros(lhs);
                return lhs;
            } else {
                const Sparse base = expand(*n.base);
                if (total_degree(base) * n.exponent > kMaxExpandedDegree)
                    throw ParseError(e.position, "expansion exceeds total degree " +
                                                     std::to_string(kMaxExpandedDegree));
                Sparse acc{{{0, 0}, Complex(1.0)}};
                for (int k = 0; k < n.exponent; ++k) acc = multiply(acc, base, e.position);
                return acc;
            }
        },
        e.node);
}

}  // namespace

CurveExpr parse_expression(std::string_view source) {
    return CurveExpr{std::string(source), Parser(source).parse()};
}

BivariatePoly expand_curve(const CurveExpr& expr) {
    const Sparse p = expand(*expr.ast);
    int n = 0;
    for (const auto& [key, c] : p) n = std::max(n, key.second);
    if (n == 0) throw ParseError(0, "y does not appear in the curve expression");

    std::vector<std::vector<Complex>> ascending(static_cast<std::size_t>(n) + 1);
    for (const auto& [key, c] : p) {
        auto& row = ascending[static_cast<std::size_t>(n - key.second)];
        if (row.size() <= static_cast<std::size_t>(key.first)) row.resize(static_cast<std::size_t>(key.first) + 1);
        row[static_cast<std::size_t>(key.first)] = c;
    }
    std::vector<UnivariatePoly> a;
    a.reserve(ascending.size());
    for (auto& row : ascending) a.emplace_back(std::vector<Complex>(row.rbegin(), row.rend()));
    return BivariatePoly(std::move(a));
}

BivariatePoly parse_curve(std::string_view source) { return expand_curve(parse_expression(source)); }

}  // namespace rsurf
