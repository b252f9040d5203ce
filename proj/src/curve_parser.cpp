#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

#include "polar/contour.hpp"

namespace polar {

namespace {

class CurveParser {
public:
    explicit CurveParser(std::string_view src) : src_(src) {}

    Curve parse() {
        Curve c = parse_sum();
        skip_ws();
        if (pos_ != src_.size()) fail({"+", "end of input"});
        return c;
    }

private:
    [[noreturn]] void fail(std::vector<std::string> expected) const {
        std::string list;
        for (std::size_t k = 0; k < expected.size(); ++k) list += (k ? ", " : "") + expected[k];
        const std::string found =
            pos_ < src_.size() ? "'" + std::string(1, src_[pos_]) + "'" : "end of input";
        throw ParseError(ErrorCode::Parse, pos_, std::move(expected),
                         "curve syntax error at offset " + std::to_string(pos_) + ": found " +
                             found + ", expected one of: " + list);
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail({std::string(1, c)});
    }

    Curve parse_sum() {
        Curve c = parse_item();
        while (true) {
            skip_ws();
            const std::size_t at = pos_;
            if (!accept('+')) break;
            Curve next = parse_item();
            try {
                c = c.then(next);
            } catch (const Error& err) {
                throw ParseError(ErrorCode::InvalidCurve, at, {},
                                 std::string(err.what()) + " (at offset " + std::to_string(at) + ")");
            }
        }
        return c;
    }

    Curve parse_item() {
        if (accept('~')) return parse_item().reversed();
        if (accept('(')) {
            Curve c = parse_sum();
            expect(')');
            return c;
        }
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        const std::string_view name = src_.substr(start, pos_ - start);
        const std::vector<std::string> shapes{"segment(", "rect(",  "diskboundary(", "spiral(",
                                              "arc(",     "param(", "~",             "("};
        if (name.empty()) fail(shapes);
        try {
            if (name == "segment" || name == "spiral") {
                const auto v = numbers(4);
                const PolarPoint a(v[0], v[1]);
                const PolarPoint b(v[2], v[3]);
                return Curve({name == "segment" ? CurvePiece::segment(a, b)
                                                : CurvePiece::log_spiral(a, b)});
            }
            if (name == "rect") {
                const auto v = numbers(4);
                return Curve::rectangle({v[0], v[1], v[2], v[3]});
            }
            if (name == "diskboundary") {
                const auto v = numbers(3);
                return Curve::disk_boundary(PolarPoint(v[0], v[1]), v[2]);
            }
            if (name == "arc") {
                const auto v = numbers(5);
                return Curve({CurvePiece::disk_arc(PolarPoint(v[0], v[1]), v[2], v[3], v[4])});
            }
        } catch (const ParseError&) {
            throw;
        } catch (const Error& err) {
            throw ParseError(ErrorCode::InvalidCurve, start, {},
                             std::string(err.what()) + " (in '" + std::string(name) +
                                 "' at offset " + std::to_string(start) + ")");
        }
        if (name == "param") return parse_param(start);
        pos_ = start;
        fail(shapes);
    }

    std::vector<double> numbers(int count) {
        expect('(');
        std::vector<double> v;
        for (int k = 0; k < count; ++k) {
            if (k) expect(',');
            v.push_back(number());
        }
        expect(')');
        return v;
    }

    double number() {
        skip_ws();
        const std::size_t start = pos_;
        std::size_t i = pos_;
        if (i < src_.size() && (src_[i] == '+' || src_[i] == '-')) ++i;
        const bool negative = i > pos_ && src_[pos_] == '-';
        // "pi" and "-pi" for convenience.
        if (src_.substr(i, 2) == "pi" &&
            (i + 2 >= src_.size() || !std::isalnum(static_cast<unsigned char>(src_[i + 2])))) {
            pos_ = i + 2;
            return negative ? -std::numbers::pi : std::numbers::pi;
        }
        const char* first = src_.data() + i;
        double v = 0.0;
        const auto res = std::from_chars(first, src_.data() + src_.size(), v);
        if (res.ec != std::errc() || !std::isfinite(v)) {
            pos_ = start;
            fail({"NUMBER"});
        }
        pos_ = static_cast<std::size_t>(res.ptr - src_.data());
        return negative ? -v : v;
    }

    // Text up to the next ';' outside parentheses.
    Expression sub_expression() {
        skip_ws();
        const std::size_t start = pos_;
        int depth = 0;
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '(') ++depth;
            if (c == ')') {
                if (depth == 0) break;
                --depth;
            }
            if (c == ';' && depth == 0) break;
            ++pos_;
        }
        if (pos_ >= src_.size() || src_[pos_] != ';') fail({";"});
        const auto text = src_.substr(start, pos_ - start);
        ++pos_;
        try {
            return parse_univariate(text, "t");
        } catch (const ParseError& err) {
            throw ParseError(err.code(), start + err.offset(), err.expected(),
                             std::string(err.what()) + " (inside param at offset " +
                                 std::to_string(start) + ")");
        }
    }

    Curve parse_param(std::size_t start) {
        expect('(');
        Expression r = sub_expression();
        Expression th = sub_expression();
        const double t0 = number();
        expect(',');
        const double t1 = number();
        expect(')');
        try {
            return Curve({CurvePiece::parametric(r, th, t0, t1, "t")});
        } catch (const Error& err) {
            throw ParseError(ErrorCode::InvalidCurve, start, {},
                             std::string(err.what()) + " (in 'param' at offset " +
                                 std::to_string(start) + ")");
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

} // namespace

Curve parse_curve(std::string_view source) { return CurveParser(source).parse(); }

} // namespace polar
