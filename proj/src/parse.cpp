#include "malg/parse.hpp"

#include <cctype>

namespace malg {

namespace {

class Cursor {
  public:
    Cursor(std::string_view text, Signature sig, GenStyle style)
        : text_(text), sig_(sig), style_(style) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        return text_[pos_];
    }
    char take() {
        char c = peek();
        ++pos_;
        return c;
    }
    void expect(char c) {
        std::size_t at = pos_;
        if (take() != c) throw ParseError(std::string("expected '") + c + "'", at);
    }
    std::size_t pos() const { return pos_; }

    Term term() {
        char c = peek();
        if (c == '(') return compound('(', Op::Star, '*', ')');
        if (c == '[') return compound('[', Op::Bracket, ',', ']');
        if (c == '{') return compound('{', Op::Brace, ',', '}');
        return generator();
    }

    Term generator() {
        std::size_t at = pos_;
        char c = peek();
        if (style_ == GenStyle::SlotLetters) {
            if (c < 'a' || c > 'h') throw ParseError("expected slot letter a..h", at);
            ++pos_;
            return Term::leaf(c - 'a' + 1);
        }
        if (c != 'x') throw ParseError("expected generator", at);
        ++pos_;
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected generator index", pos_);
        if (text_[start] == '0') throw ParseError("generator index must start at 1", start);
        if (pos_ - start > 9) throw ParseError("generator index too large", start);
        int idx = 0;
        for (std::size_t i = start; i < pos_; ++i) idx = idx * 10 + (text_[i] - '0');
        return Term::leaf(idx);
    }

    Rational coefficient() {  // positive rational; caller applies sign
        std::size_t start = pos_;
        std::string num = digits();
        if (num.empty()) throw ParseError("expected coefficient", start);
        std::string den = "1";
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            den = digits();
            if (den.empty()) throw ParseError("expected denominator", pos_);
        }
        Rational r(num + "/" + den);
        r.canonicalize();
        return r;
    }

  private:
    std::string digits() {
        skip_ws();
        std::string out;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            out += text_[pos_];
            ++pos_;
        }
        return out;
    }

    Term compound(char open, Op op, char sep, char close) {
        std::size_t at = pos_;
        if (!op_in_signature(op, sig_))
            throw ParseError("operation not in the term's signature", at);
        expect(open);
        Term l = term();
        expect(sep);
        Term r = term();
        expect(close);
        return Term::node(op, std::move(l), std::move(r));
    }

    std::string_view text_;
    Signature sig_;
    GenStyle style_;
    std::size_t pos_ = 0;
};

}  // namespace

Term parse_term(std::string_view text, Signature sig, GenStyle style) {
    Cursor c(text, sig, style);
    Term t = c.term();
    if (!c.eof()) throw ParseError("trailing input after term", c.pos());
    return t;
}

Polynomial parse_poly(std::string_view text, Signature sig, GenStyle style) {
    Cursor c(text, sig, style);
    Polynomial p;
    bool first = true;
    while (!c.eof()) {
        Rational sign(1);
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            c.take();
            if (ch == '-') sign = -1;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", c.pos());
        }
        Rational coef(1);
        ch = c.peek();
        if (std::isdigit(static_cast<unsigned char>(ch))) coef = c.coefficient();
        p.add(c.term(), sign * coef);
        first = false;
    }
    if (first) throw ParseError("empty polynomial", 0);
    return p;
}

}  // namespace malg
