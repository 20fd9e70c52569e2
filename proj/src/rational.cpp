#include "fairdiv/rational.hpp"

#include <cctype>
#include <cstddef>

#include "fairdiv/errors.hpp"

namespace fairdiv {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Splits an optional leading sign off `s`. Returns -1 or +1.
int take_sign(std::string& s) {
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        int sign = s[0] == '-' ? -1 : 1;
        s.erase(0, 1);
        return sign;
    }
    return 1;
}

[[noreturn]] void bad(const std::string& text) {
    throw ParseError("not a rational literal: \"" + text + "\"");
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(0, 1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) bad(text);

    int sign = take_sign(s);

    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad(text);
        mpz_class n(num, 10), d(den, 10);
        if (d == 0) throw ParseError("zero denominator in \"" + text + "\"");
        Rational q(sign * n, d);
        q.canonicalize();
        return q;
    }

    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty()) bad(text);
        if (!whole.empty() && !all_digits(whole)) bad(text);
        if (!frac.empty() && !all_digits(frac)) bad(text);
        mpz_class n = whole.empty() ? mpz_class(0) : mpz_class(whole, 10);
        mpz_class den(1);
        for (std::size_t k = 0; k < frac.size(); ++k) {
            n *= 10;
            den *= 10;
        }
        if (!frac.empty()) n += mpz_class(frac, 10);
        Rational q(sign * n, den);
        q.canonicalize();
        return q;
    }

    if (!all_digits(s)) bad(text);
    Rational q(mpz_class(s, 10));
    return sign < 0 ? Rational(-q) : q;
}

std::string to_fraction_string(const Rational& value) {
    // Two-argument construction does not reduce, so don't trust the input to
    // be canonical.
    Rational reduced = value;
    reduced.canonicalize();
    return reduced.get_str();
}

std::string to_decimal_string(const Rational& value, int max_digits) {
    if (max_digits < 0) max_digits = 0;
    mpz_class scale(1);
    for (int k = 0; k < max_digits; ++k) scale *= 10;

    // round(value * scale) with ties away from zero, then print with an
    // implied decimal point max_digits from the right.
    mpz_class num = value.get_num() * scale;
    mpz_class den = value.get_den();
    bool negative = num < 0;
    if (negative) num = -num;
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (2 * r >= den) q += 1;

    std::string digits = q.get_str();
    if (static_cast<int>(digits.size()) <= max_digits)
        digits.insert(0, max_digits + 1 - digits.size(), '0');
    std::string out = digits.substr(0, digits.size() - max_digits);
    std::string frac = digits.substr(digits.size() - max_digits);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
    if (negative && (q != 0)) out.insert(0, 1, '-');
    return out;
}

}  // namespace fairdiv
