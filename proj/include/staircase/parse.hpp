#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "staircase/equigen.hpp"
#include "staircase/ideal.hpp"

namespace staircase {

namespace detail {

// Recursive-descent reader for the shared ideal grammar:
//   x^7 + x^6*y^2 + y^10     monomial syntax ('*' optional, exponent 1
//                            implicit, '+' or ',' between generators,
//                            optionally wrapped in parentheses)
//   [(7,0),(6,2),(0,10)]     exponent-pair syntax
class literal_reader {
 public:
    explicit literal_reader(std::string_view s) : s_(s) {}

    monomial_ideal read_ideal() {
        skip_ws();
        std::vector<monomial> ms;
        if (eat('[')) {
            do {
                ms.push_back(read_pair());
            } while (eat(','));
            expect(']');
        } else {
            const bool wrapped = eat('(');
            do {
                ms.push_back(read_monomial());
            } while (eat('+') || eat(','));
            if (wrapped) expect(')');
        }
        end();
        return monomial_ideal(std::move(ms));
    }

    exponent_set read_exponent_set() {
        const exp_t g = read_uint();
        expect(':');
        index_set members;
        do {
            members.insert(read_uint());
        } while (eat(','));
        end();
        return exponent_set(g, std::move(members));
    }

 private:
    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c))
            throw parse_error(std::string("expected '") + c + "' in literal: " +
                              std::string(s_));
    }

    void end() {
        skip_ws();
        if (pos_ != s_.size())
            throw parse_error("trailing characters in literal: " + std::string(s_));
    }

    exp_t read_uint() {
        skip_ws();
        exp_t value = 0;
        auto [ptr, ec] =
            std::from_chars(s_.data() + pos_, s_.data() + s_.size(), value);
        if (ec != std::errc() || ptr == s_.data() + pos_)
            throw parse_error("expected a number in literal: " + std::string(s_));
        pos_ = ptr - s_.data();
        return value;
    }

    monomial read_pair() {
        expect('(');
        const exp_t x = read_uint();
        expect(',');
        const exp_t y = read_uint();
        expect(')');
        return {x, y};
    }

    monomial read_monomial() {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '1') {
            ++pos_;
            return {0, 0};
        }
        monomial m{0, 0};
        bool any = false;
        for (;;) {
            skip_ws();
            if (any) eat('*');
            skip_ws();
            if (pos_ >= s_.size() || (s_[pos_] != 'x' && s_[pos_] != 'y')) break;
            const char var = s_[pos_++];
            exp_t e = 1;
            if (eat('^')) e = read_uint();
            if (var == 'x')
                m.x = checked_add(m.x, e);
            else
                m.y = checked_add(m.y, e);
            any = true;
        }
        if (!any)
            throw parse_error("expected a monomial in literal: " + std::string(s_));
        return m;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

// Parses an ideal literal and normalizes it to its minimal generating set.
inline monomial_ideal parse_ideal(std::string_view s) {
    return detail::literal_reader(s).read_ideal();
}

// Parses "g:i1,i2,..." into an exponent set.
inline exponent_set parse_exponent_set(std::string_view s) {
    return detail::literal_reader(s).read_exponent_set();
}

}  // namespace staircase
