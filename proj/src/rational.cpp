#include "multilin/rational.hpp"

#include "multilin/error.hpp"

#include <cctype>

namespace multilin {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    Rational result;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw ParseError("malformed rational '" + std::string(text) + "'");
        }
        Integer d{std::string(den), 10};
        if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        result = Rational(Integer(std::string(num), 10), d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto whole = body.substr(0, dot);
        auto frac = body.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
            throw ParseError("malformed decimal '" + std::string(text) + "'");
        }
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        Integer num(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
        result = Rational(num, scale);
    } else {
        if (!all_digits(body)) throw ParseError("malformed rational '" + std::string(text) + "'");
        result = Rational(Integer(std::string(body), 10));
    }
    result.canonicalize();
    return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& value) {
    Rational copy = value;
    copy.canonicalize();
    return copy.get_str();
}

std::string to_decimal(const Rational& value, int digits) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rational scaled = abs(value) * scale + Rational(1, 2);
    Integer rounded = scaled.get_num() / scaled.get_den();
    std::string s = rounded.get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits)) {
            s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        }
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    if (value < 0 && s != "0") s.insert(0, "-");
    return s;
}

void make_primitive(std::vector<Integer>& values) {
    Integer g = 0;
    for (const auto& v : values) {
        if (v != 0) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            if (g == 1) return;
        }
    }
    if (g > 1) {
        for (auto& v : values) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
}

std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& values) {
    Integer l = 1;
    for (const auto& v : values) {
        if (v != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    }
    std::vector<Integer> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(v.get_num() * (l / v.get_den()));
    make_primitive(out);
    return out;
}

}  // namespace multilin
